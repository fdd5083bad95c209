//! Build a symmetric group from its Cartan matrix and print Kazhdan-Lusztig
//! basis expansions.
//!
//! Run: `cargo run --example kl_basis`

use hecke_cells::coxeter::CoxeterSystem;
use hecke_cells::hecke::KlTable;
use std::sync::Arc;

fn main() {
    let sys = Arc::new(CoxeterSystem::build_preset("A3").unwrap());
    println!(
        "S4: {} elements, longest element {} of length {}",
        sys.size(),
        sys.name(sys.longest_element()),
        sys.length(sys.longest_element())
    );

    let kl = KlTable::new(sys.clone());
    for name in ["1", "121", "2132", "121321"] {
        let w = sys.element_by_name(name).unwrap();
        let row = kl.row(w);
        let terms: Vec<String> = row
            .h
            .iter()
            .map(|(y, p)| format!("({p}) H_{}", sys.name(*y)))
            .collect();
        println!("b_{name} = {}", terms.join(" + "));
    }

    // Mu-coefficients feeding the cell preorders.
    let w0 = sys.longest_element();
    for y in sys.elements() {
        let mu = kl.mu(y, w0);
        if mu != 0.into() {
            println!("mu({}, {}) = {mu}", sys.name(y), sys.name(w0));
        }
    }
}
