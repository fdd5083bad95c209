//! Walk the dominance order with explicit weak-order witnesses: starting
//! from the column shape, repeatedly produce a permutation x in the current
//! cell and a generator s with xs < x landing one raising step higher.
//!
//! Run: `cargo run --example dominance_chain`

use hecke_cells::tableaux::{chain_witness, rs, rs_shape, Partition};

fn main() {
    let n = 5;
    let lambda = Partition::new(vec![n as u32]);
    let mut current = Partition::new(vec![1; n]);
    println!("climbing from {current} to {lambda}:");
    while current != lambda {
        let witness = chain_witness(&lambda, &current, n).unwrap();
        let mut xs = witness.x.clone();
        xs.swap(witness.s - 1, witness.s);
        println!(
            "  x = {:?} in cell {current}, s = s{}, xs = {xs:?} in cell {}",
            witness.x, witness.s, witness.nu
        );
        assert_eq!(rs_shape(&witness.x), current);
        assert_eq!(rs_shape(&xs), witness.nu);
        current = witness.nu;
    }
    println!("reached {current}");

    // The last witness pair in detail.
    let witness = chain_witness(&lambda, &Partition::new(vec![4, 1]), n).unwrap();
    let (p, q) = rs(&witness.x);
    println!("\nfinal step witness x = {:?}:", witness.x);
    println!("P(x) rows: {:?}", p.rows());
    println!("Q(x) rows: {:?}", q.rows());
}
