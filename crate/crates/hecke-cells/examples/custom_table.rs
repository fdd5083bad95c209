//! Load an external canonical basis table from JSON, run the mandatory
//! validation gate, and inspect how the cells change against the identity
//! table.
//!
//! Run: `cargo run --example custom_table`

use hecke_cells::canonical::{CanonicalDraft, CanonicalTable, TableDoc};
use hecke_cells::cells::{CellDecomposition, Side};
use hecke_cells::coxeter::CoxeterSystem;
use hecke_cells::hecke::KlTable;
use std::sync::Arc;

const TABLE_JSON: &str = r#"{
  "system": "B2",
  "p": 2,
  "basis": { "121": { "121": "1", "1": "1" } },
  "provenance": "example document"
}"#;

fn main() {
    let sys = Arc::new(CoxeterSystem::build_preset("B2").unwrap());
    let kl = Arc::new(KlTable::new(sys.clone()));

    let doc: TableDoc = serde_json::from_str(TABLE_JSON).unwrap();
    let draft = CanonicalDraft::load(kl.clone(), &doc).unwrap();
    let (report, table) = draft.validate();
    println!("validation of `{}`:", doc.provenance);
    for check in &report.checks {
        println!("  {:<36} {}", check.name, if check.passed { "pass" } else { "FAIL" });
    }
    let table = table.expect("table validates");

    let p0 = CanonicalTable::p0(kl);
    for (label, t) in [("p = 0", &p0), ("p = 2", &table)] {
        let cells = CellDecomposition::compute(t, Side::TwoSided);
        let sets: Vec<String> = cells
            .cells()
            .iter()
            .map(|c| {
                let names: Vec<&str> = c.iter().map(|x| sys.name(*x)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        println!("{label}: two-sided cells {}", sets.join(" "));
    }

    // A malformed document is rejected before validation even starts.
    let bad: TableDoc = serde_json::from_str(
        r#"{"system":"B2","p":2,"basis":{"1":{"121":"1"}},"provenance":"above diagonal"}"#,
    )
    .unwrap();
    match CanonicalDraft::load(table.kl().clone(), &bad) {
        Err(e) => println!("\nrejected bad document: {e}"),
        Ok(_) => unreachable!(),
    }
}
