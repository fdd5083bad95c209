//! Special modules and families for the order-8 dihedral group at both
//! characteristics: at p = 2 the middle family splits in two.
//!
//! Run: `cargo run --example families_and_special_modules`

use hecke_cells::canonical::CanonicalTable;
use hecke_cells::cells::{CellDecomposition, Side};
use hecke_cells::chars::character_table;
use hecke_cells::coxeter::CoxeterSystem;
use hecke_cells::hecke::KlTable;
use hecke_cells::perron::{families, special_module, Tolerances, WeightVector};
use std::sync::Arc;

fn main() {
    let sys = Arc::new(CoxeterSystem::build_preset("B2").unwrap());
    let kl = Arc::new(KlTable::new(sys.clone()));
    let chars = character_table(&sys).unwrap();
    let weights = WeightVector::uniform(&sys);
    let tol = Tolerances::default();

    for (label, table) in [
        ("p = 0", CanonicalTable::p0(kl.clone())),
        ("p = 2", CanonicalTable::b2_p2(kl.clone())),
    ] {
        println!("== {label} ==");
        let two = CellDecomposition::compute(&table, Side::TwoSided);
        let left = CellDecomposition::compute(&table, Side::Left);
        for cell in 0..left.len() {
            let sm = special_module(&table, &chars, &left, cell, &weights, &tol).unwrap();
            let members: Vec<&str> = left.members(cell).iter().map(|x| sys.name(*x)).collect();
            println!(
                "left cell {{{}}}: special module {} (dim {}), lambda {:.6}",
                members.join(", "),
                sm.name,
                sm.dim,
                sm.lambda
            );
        }
        let fam = families(&table, &chars, &two, &left).unwrap();
        println!("families (partition of the irreducibles): {}", fam.is_partition);
        for (j, family) in fam.families.iter().enumerate() {
            let members: Vec<&str> = two.members(j).iter().map(|x| sys.name(*x)).collect();
            println!("  cell {{{}}} -> {{{}}}", members.join(", "), family.join(", "));
        }
        println!();
    }
}
