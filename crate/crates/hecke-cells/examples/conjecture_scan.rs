//! Scan the Perron-Frobenius eigenvalue of the full positive sum across the
//! two-sided cells of a rank-3 Weyl group and check that it is constant on
//! cells and antitone along the cell order.
//!
//! Run: `cargo run --release --example conjecture_scan`

use hecke_cells::canonical::CanonicalTable;
use hecke_cells::cells::{CellDecomposition, Side};
use hecke_cells::coxeter::CoxeterSystem;
use hecke_cells::hecke::KlTable;
use hecke_cells::perron::{conjecture_check, Tolerances, WeightVector};
use std::sync::Arc;

fn main() {
    for preset in ["A3", "B3"] {
        let sys = Arc::new(CoxeterSystem::build_preset(preset).unwrap());
        let table = CanonicalTable::p0(Arc::new(KlTable::new(sys.clone())));
        let weights = WeightVector::uniform(&sys);
        let report =
            conjecture_check(&table, &weights, &Tolerances::default(), None, 1).unwrap();
        let two = CellDecomposition::compute(&table, Side::TwoSided);
        println!("== {preset}: {} two-sided cells ==", two.len());
        for (j, lambda) in report.lambda_per_two_sided.iter().enumerate() {
            let members = two.members(j);
            println!(
                "  cell of {} ({} elements): lambda = {lambda:.9}",
                sys.name(members[0]),
                members.len()
            );
        }
        println!(
            "constant on cells: {} (spread {:.2e}); monotone along the order: {}",
            report.constant_on_two_sided, report.constancy_spread, report.monotone
        );
        println!();
    }
}
