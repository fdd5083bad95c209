//! Assemble the cell datum of a symmetric group (partitions under
//! dominance, standard tableaux, canonical basis through RS) and verify the
//! three cellularity axioms, printing the structure-coefficient tables.
//!
//! Run: `cargo run --example cell_datum`

use hecke_cells::canonical::CanonicalTable;
use hecke_cells::cellular::{build_cell_datum, struct_coeff_independence, verify_axioms};
use hecke_cells::coxeter::CoxeterSystem;
use hecke_cells::hecke::KlTable;
use std::sync::Arc;

fn main() {
    let sys = Arc::new(CoxeterSystem::build_preset("A3").unwrap());
    let table = CanonicalTable::p0(Arc::new(KlTable::new(sys)));
    let datum = build_cell_datum(&table).unwrap();

    println!("shapes and tableau counts for S4:");
    for (shape, tabs) in datum.lambdas.iter().zip(&datum.tableaux) {
        println!("  {shape}: {} standard tableaux", tabs.len());
    }

    let report = verify_axioms(&datum, &table);
    println!("\naxiom (i) basis:            {}", report.basis.passed);
    println!("axiom (ii) star:            {}", report.star.passed);
    println!("axiom (iii) multiplication: {}", report.modular_multiplication.passed);
    println!("note: {}", report.generator_reduction_note);

    // r_s(P', P) for the square shape, whose two tableaux index a 2x2 block.
    let square = datum
        .lambdas
        .iter()
        .position(|l| l.parts() == [2, 2])
        .unwrap();
    println!("\nstructure coefficients r_s(P', P) for shape [2,2]:");
    for (s, table_s) in report.r_tables[square].iter().enumerate() {
        for (pair, coeff) in table_s {
            println!("  s{}: r({pair}) = {coeff}", s + 1);
        }
    }

    let indep = struct_coeff_independence(&table).unwrap();
    println!(
        "\ncoefficients independent of recording tableaux: {} ({} quadruples checked)",
        indep.passed, indep.quadruples_checked
    );
}
