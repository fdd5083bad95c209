//! JSON, CSV and GraphViz emitters for the pipeline's reports.
//!
//! Reports are files and test fixtures: identical inputs must produce
//! byte-identical output, so every map is ordered and floats go through the
//! standard shortest-representation formatter.

use crate::canonical::CanonicalTable;
use crate::cells::CellDecomposition;
use crate::coxeter::CoxeterSystem;
use crate::hecke::KlTable;
use crate::perron::{IdempotentReport, PerronData};
use num_rational::BigRational;
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone, Serialize)]
pub struct KlElementEntry {
    pub w: String,
    pub expansion: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct KlReport {
    pub system: String,
    pub size: usize,
    pub elements: Vec<KlElementEntry>,
}

/// Full KL expansion of every basis element, in system order.
pub fn kl_report(system_name: &str, kl: &KlTable) -> KlReport {
    let sys = kl.system();
    let elements = sys
        .elements()
        .map(|w| {
            let row = kl.row(w);
            KlElementEntry {
                w: sys.name(w).to_string(),
                expansion: row
                    .h
                    .iter()
                    .map(|(y, p)| (sys.name(*y).to_string(), p.to_string()))
                    .collect(),
            }
        })
        .collect();
    KlReport {
        system: system_name.to_string(),
        size: sys.size(),
        elements,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CellEntry {
    pub id: usize,
    pub min: String,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellsReport {
    pub system: String,
    pub p: u32,
    pub side: String,
    pub cell_count: usize,
    pub cells: Vec<CellEntry>,
    /// Transitively reduced condensation edges `[upper, lower]`.
    pub condensation: Vec<[usize; 2]>,
}

pub fn cells_report(
    system_name: &str,
    table: &CanonicalTable,
    decomp: &CellDecomposition,
) -> CellsReport {
    let sys = table.system();
    let cells = decomp
        .cells()
        .iter()
        .enumerate()
        .map(|(id, members)| CellEntry {
            id,
            min: sys.name(members[0]).to_string(),
            members: members.iter().map(|x| sys.name(*x).to_string()).collect(),
        })
        .collect();
    CellsReport {
        system: system_name.to_string(),
        p: table.p(),
        side: decomp.side.label().to_string(),
        cell_count: decomp.len(),
        cells,
        condensation: decomp
            .reduced_edges()
            .iter()
            .map(|&(a, b)| [a as usize, b as usize])
            .collect(),
    }
}

/// GraphViz rendering of a condensation DAG; an edge points from the upper
/// cell to the lower one.
pub fn dot_condensation(sys: &CoxeterSystem, decomp: &CellDecomposition) -> String {
    let mut out = String::from("digraph condensation {\n  rankdir=TB;\n");
    for (id, members) in decomp.cells().iter().enumerate() {
        let label = if members.len() <= 6 {
            members
                .iter()
                .map(|x| sys.name(*x))
                .collect::<Vec<_>>()
                .join(", ")
        } else {
            format!("{}... ({} elements)", sys.name(members[0]), members.len())
        };
        out.push_str(&format!("  c{id} [label=\"{label}\"];\n"));
    }
    for (a, b) in decomp.reduced_edges() {
        out.push_str(&format!("  c{a} -> c{b};\n"));
    }
    out.push_str("}\n");
    out
}

fn rational_string(x: &BigRational) -> String {
    x.to_string()
}

#[derive(Debug, Clone, Serialize)]
pub struct PerronCellEntry {
    pub cell: usize,
    pub members: Vec<String>,
    pub lambda: f64,
    pub eigenvector: Vec<f64>,
    pub projector: Vec<Vec<f64>>,
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub special_module: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdempotentEntry {
    pub cell: usize,
    pub members: Vec<String>,
    pub lambda: f64,
    pub action: Vec<Vec<String>>,
    pub d: BTreeMap<String, f64>,
    pub idempotency_residual: f64,
    pub block_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PerronReport {
    pub system: String,
    pub p: u32,
    pub tolerance_rel: f64,
    pub left_cells: Vec<PerronCellEntry>,
    pub two_sided: Vec<IdempotentEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub families: Option<Vec<Vec<String>>>,
}

pub fn perron_cell_entry(
    sys: &CoxeterSystem,
    cell: usize,
    members: &[crate::coxeter::Elt],
    pf: &PerronData,
    special: Option<String>,
) -> PerronCellEntry {
    PerronCellEntry {
        cell,
        members: members.iter().map(|x| sys.name(*x).to_string()).collect(),
        lambda: pf.lambda,
        eigenvector: pf.right.clone(),
        projector: (0..pf.projector.nrows())
            .map(|i| (0..pf.projector.ncols()).map(|j| pf.projector[(i, j)]).collect())
            .collect(),
        residual: pf.residual,
        special_module: special,
    }
}

pub fn idempotent_entry(
    sys: &CoxeterSystem,
    cell: usize,
    report: &IdempotentReport,
) -> IdempotentEntry {
    IdempotentEntry {
        cell,
        members: report
            .cell_members
            .iter()
            .map(|x| sys.name(*x).to_string())
            .collect(),
        lambda: report.lambda,
        action: report
            .n_matrix
            .iter()
            .map(|row| row.iter().map(rational_string).collect())
            .collect(),
        d: report
            .d
            .iter()
            .map(|(x, v)| (sys.name(*x).to_string(), *v))
            .collect(),
        idempotency_residual: report.idempotency_residual,
        block_residual: report.block_residual,
    }
}

/// CSV summary: one line per left cell.
pub fn perron_csv(entries: &[(usize, String, f64, String, String)]) -> String {
    let mut out = String::from("cell,min_member,lambda,special_module,family\n");
    for (cell, min, lambda, special, family) in entries {
        out.push_str(&format!("{cell},{min},{lambda},{special},{family}\n"));
    }
    out
}

/// Write any serializable report as pretty JSON with a trailing newline.
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    let mut file = std::fs::File::create(path)?;
    serde_json::to_writer_pretty(&mut file, value)?;
    writeln!(file)?;
    Ok(())
}

pub fn write_text(path: &Path, text: &str) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    std::fs::write(path, text)
}

/// Render a rational matrix row-by-row for reports and logs.
pub fn matrix_strings(m: &[Vec<BigRational>]) -> Vec<Vec<String>> {
    m.iter()
        .map(|row| row.iter().map(rational_string).collect())
        .collect()
}

/// Young-diagram text art for a standard tableau.
pub fn tableau_art(t: &crate::tableaux::StandardTableau) -> String {
    let mut out = String::new();
    let width = t.n().to_string().len();
    for row in t.rows() {
        for &x in row {
            out.push_str(&format!("[{x:>width$}]"));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::Side;
    use crate::coxeter::CoxeterSystem;
    use std::sync::Arc;

    #[test]
    fn kl_report_shape() {
        let sys = Arc::new(CoxeterSystem::build_preset("A2").unwrap());
        let kl = KlTable::new(sys.clone());
        let report = kl_report("A2", &kl);
        assert_eq!(report.elements.len(), 6);
        let w0 = report.elements.last().unwrap();
        assert_eq!(w0.w, "121");
        assert_eq!(w0.expansion["e"], "v^3");
        assert_eq!(w0.expansion["121"], "1");
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"121\""));
    }

    #[test]
    fn dot_output_is_a_digraph() {
        let sys = Arc::new(CoxeterSystem::build_preset("A2").unwrap());
        let table = CanonicalTable::p0(Arc::new(KlTable::new(sys.clone())));
        let decomp = CellDecomposition::compute(&table, Side::TwoSided);
        let dot = dot_condensation(&sys, &decomp);
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("->"));
    }

    #[test]
    fn tableau_art_renders() {
        let t = crate::tableaux::StandardTableau::new(vec![vec![1, 3], vec![2]]);
        assert_eq!(tableau_art(&t), "[1][3]\n[2]\n");
    }
}
