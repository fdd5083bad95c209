//! The full spectral analysis of the five-element two-sided cell of the
//! dihedral group of order 8 at p = 2: the integer action matrix N, its
//! Perron-Frobenius eigenvalue 6 + 4*sqrt(2), the projector limit N_J, and
//! the idempotent coefficients.
//!
//! Run: `cargo run --example perron_worked_example`

use hecke_cells::canonical::CanonicalTable;
use hecke_cells::cells::{CellDecomposition, CellModule, Side};
use hecke_cells::coxeter::CoxeterSystem;
use hecke_cells::hecke::KlTable;
use hecke_cells::perron::{
    ej_idempotent, specialize_action, Restriction, Tolerances, WeightVector,
};
use std::sync::Arc;

fn main() {
    let sys = Arc::new(CoxeterSystem::build_preset("B2").unwrap());
    let table = CanonicalTable::b2_p2(Arc::new(KlTable::new(sys.clone())));
    let two = CellDecomposition::compute(&table, Side::TwoSided);
    let left = CellDecomposition::compute(&table, Side::Left);
    let j = two.cell_of(sys.element_by_name("2").unwrap());
    let module = CellModule::two_sided(&table, &two, &left, j);
    let weights = WeightVector::uniform(&sys);

    let names: Vec<&str> = module.basis.iter().map(|x| sys.name(*x)).collect();
    println!("two-sided cell basis (grouped by left cell): {names:?}");

    let n = specialize_action(&table, &module, &weights, Restriction::Cell(&module.basis));
    println!("\naction matrix N of the uniform positive sum over the cell:");
    for row in &n {
        let entries: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        println!("  [{}]", entries.join(", "));
    }

    let report = ej_idempotent(&table, &two, &left, j, &weights, &Tolerances::default()).unwrap();
    println!("\nPerron-Frobenius eigenvalue: {:.12}", report.lambda);
    println!("expected 6 + 4 sqrt(2)     : {:.12}", 6.0 + 4.0 * std::f64::consts::SQRT_2);

    println!("\nprojector limit N_J = lim N^m / lambda^m:");
    for i in 0..module.basis.len() {
        let entries: Vec<String> = (0..module.basis.len())
            .map(|k| format!("{:+.6}", report.n_limit[(i, k)]))
            .collect();
        println!("  [{}]", entries.join(", "));
    }

    println!("\nidempotent coefficients d_x (positive, e_J = sum d_x pkl_x):");
    for (x, d) in &report.d {
        println!("  d_{:<4} = {d:.12}", sys.name(*x));
    }
    println!("\nidempotency residual:  {:.3e}", report.idempotency_residual);
    println!("off-diagonal residual: {:.3e}", report.block_residual);
}
