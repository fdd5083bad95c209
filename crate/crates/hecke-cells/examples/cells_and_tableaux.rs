//! Compute the cells of a symmetric group and line them up with the
//! Robinson-Schensted correspondence: left cells are recording-tableau
//! fibers, right cells insertion-tableau fibers, two-sided cells shape
//! fibers.
//!
//! Run: `cargo run --example cells_and_tableaux`

use hecke_cells::canonical::CanonicalTable;
use hecke_cells::cells::{CellDecomposition, Side};
use hecke_cells::cellular::verify_rs_fibers;
use hecke_cells::coxeter::CoxeterSystem;
use hecke_cells::hecke::KlTable;
use hecke_cells::report::tableau_art;
use hecke_cells::tableaux::rs;
use std::sync::Arc;

fn main() {
    let sys = Arc::new(CoxeterSystem::build_preset("A3").unwrap());
    let table = CanonicalTable::p0(Arc::new(KlTable::new(sys.clone())));

    for side in [Side::Left, Side::Right, Side::TwoSided] {
        let decomp = CellDecomposition::compute(&table, side);
        println!("{} cells: {}", side.label(), decomp.len());
        for cell in decomp.cells() {
            let names: Vec<&str> = cell.iter().map(|x| sys.name(*x)).collect();
            println!("  {{{}}}", names.join(", "));
        }
    }

    let report = verify_rs_fibers(&table).unwrap();
    println!("cells equal RS fibers: {}", report.passed);

    // One left cell and the recording tableau its members share.
    let left = CellDecomposition::compute(&table, Side::Left);
    let cell = left
        .cells()
        .iter()
        .find(|c| c.len() == 3)
        .expect("S4 has a left cell with three members");
    println!("\na left cell with three members:");
    for &w in cell {
        let (p, q) = rs(sys.permutation(w).unwrap());
        println!("w = {}\nP(w):\n{}Q(w):\n{}", sys.name(w), tableau_art(&p), tableau_art(&q));
    }
}
