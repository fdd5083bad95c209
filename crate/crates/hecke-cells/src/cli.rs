//! Command-line orchestration: build system -> KL basis -> load and
//! validate the canonical table -> cells -> analyses -> reports.
//!
//! All reports are files under the output directory; stdout carries a human
//! summary only. Identical configurations (including the random seed)
//! produce byte-identical reports.

use crate::canonical::{CanonicalDraft, CanonicalTable, TableDoc, ValidationReport};
use crate::cells::{CellDecomposition, CellModule, Side};
use crate::cellular;
use crate::chars::{character_table, CharacterTable};
use crate::coxeter::{CartanSpec, CoxeterSystem};
use crate::hecke::KlTable;
use crate::perron::{
    self, apex, conjecture_check, ej_idempotent, families, pf_analyze, special_module,
    Restriction, Tolerances, WeightVector,
};
use crate::report;
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::sync::Arc;

#[derive(Debug, Parser)]
#[command(
    name = "hecke-cells",
    about = "Canonical bases, cells and Perron-Frobenius cell analysis for finite Coxeter groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the full Kazhdan-Lusztig basis expansion.
    Kl(CommonArgs),
    /// Compute left/right/two-sided cells, condensations and dot files.
    Cells(CommonArgs),
    /// Run verification suites against the active table.
    Verify {
        /// One of: axioms, property-a, orders, independence, conjecture,
        /// perron, all.
        which: String,
        #[command(flatten)]
        args: CommonArgs,
    },
}

#[derive(Debug, Clone, Args, Default)]
pub struct CommonArgs {
    /// Named system preset (A1..A7, B2, B3).
    #[arg(long)]
    pub system: Option<String>,
    /// Path to a Cartan matrix JSON file (overrides --system).
    #[arg(long)]
    pub cartan: Option<PathBuf>,
    /// Path to a canonical basis table document.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Characteristic selector when no table file is given: "kl" (or "0")
    /// for the identity table; "2" with system B2 uses the built-in table.
    #[arg(long)]
    pub p: Option<String>,
    /// Weight specification: "uniform", "random", "random:SEED", or a path
    /// to a JSON file of named rational weights.
    #[arg(long)]
    pub weights: Option<String>,
    /// Seed for "random" weights without an explicit seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory for reports.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Comma-separated report formats: json,csv,dot.
    #[arg(long, value_delimiter = ',')]
    pub format: Option<Vec<String>>,
    /// Relative tolerance for numeric verdicts.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Parallelism degree across cells (>= 1).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Optional config file; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Config-file counterpart of the flags.
#[derive(Debug, Clone, Default, Deserialize)]
pub struct FileConfig {
    pub system: Option<String>,
    pub cartan: Option<PathBuf>,
    pub table: Option<PathBuf>,
    pub p: Option<String>,
    pub weights: Option<String>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub format: Option<Vec<String>>,
    pub tol: Option<f64>,
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone)]
pub enum WeightsSpec {
    Uniform,
    Random(u64),
    File(PathBuf),
}

/// Fully resolved run configuration (flags > config file > defaults).
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub system: Option<String>,
    pub cartan: Option<PathBuf>,
    pub table: Option<PathBuf>,
    pub p: String,
    pub weights: WeightsSpec,
    pub out: PathBuf,
    pub formats: BTreeSet<String>,
    pub tol: Tolerances,
    pub jobs: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("build error: {0}")]
    Build(String),
    #[error("table validation error: {0}")]
    Validation(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Build(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Verification(_) => 4,
            CliError::Unsupported(_) => 5,
        }
    }
}

fn io_err(context: &str) -> impl Fn(std::io::Error) -> CliError + '_ {
    move |e| CliError::Build(format!("{context}: {e}"))
}

impl RunConfig {
    pub fn resolve(args: &CommonArgs) -> Result<RunConfig, CliError> {
        let file: FileConfig = match &args.config {
            None => FileConfig::default(),
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(io_err("config"))?;
                serde_json::from_str(&text)
                    .map_err(|e| CliError::Build(format!("config {}: {e}", path.display())))?
            }
        };
        let tol_value = args.tol.or(file.tol).unwrap_or(1e-9);
        if tol_value <= 0.0 {
            return Err(CliError::Build(format!("tolerance must be positive, got {tol_value}")));
        }
        let jobs = args.jobs.or(file.jobs).unwrap_or(1);
        if jobs < 1 {
            return Err(CliError::Build("jobs must be >= 1".into()));
        }
        let seed = args.seed.or(file.seed).unwrap_or(0);
        let weights_text = args
            .weights
            .clone()
            .or(file.weights)
            .unwrap_or_else(|| "uniform".to_string());
        let weights = if weights_text == "uniform" {
            WeightsSpec::Uniform
        } else if weights_text == "random" {
            WeightsSpec::Random(seed)
        } else if let Some(rest) = weights_text.strip_prefix("random:") {
            let s = rest
                .parse()
                .map_err(|_| CliError::Build(format!("bad random seed `{rest}`")))?;
            WeightsSpec::Random(s)
        } else {
            let path = weights_text
                .strip_prefix("file:")
                .unwrap_or(&weights_text);
            WeightsSpec::File(PathBuf::from(path))
        };
        let formats: BTreeSet<String> = args
            .format
            .clone()
            .or(file.format)
            .unwrap_or_else(|| vec!["json".into(), "csv".into(), "dot".into()])
            .into_iter()
            .collect();
        Ok(RunConfig {
            system: args.system.clone().or(file.system),
            cartan: args.cartan.clone().or(file.cartan),
            table: args.table.clone().or(file.table),
            p: args.p.clone().or(file.p).unwrap_or_else(|| "kl".to_string()),
            weights,
            out: args.out.clone().or(file.out).unwrap_or_else(|| PathBuf::from("out")),
            formats,
            tol: Tolerances {
                rel: tol_value,
                ..Tolerances::default()
            },
            jobs,
        })
    }
}

/// A built system with its KL table, validated canonical table and weights.
pub struct Session {
    pub label: String,
    pub sys: Arc<CoxeterSystem>,
    pub kl: Arc<KlTable>,
    pub table: Arc<CanonicalTable>,
    pub validation: ValidationReport,
    pub weights: WeightVector,
}

fn build_system(config: &RunConfig) -> Result<(String, Arc<CoxeterSystem>), CliError> {
    let (label, spec) = match (&config.cartan, &config.system) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(io_err("cartan file"))?;
            let spec: CartanSpec = serde_json::from_str(&text)
                .map_err(|e| CliError::Build(format!("cartan {}: {e}", path.display())))?;
            let label = path
                .file_stem()
                .map(|s| s.to_string_lossy().to_string())
                .unwrap_or_else(|| "custom".to_string());
            (label, spec)
        }
        (None, Some(name)) => (
            name.clone(),
            CartanSpec::preset(name).map_err(|e| CliError::Build(e.to_string()))?,
        ),
        (None, None) => {
            return Err(CliError::Build(
                "either --system or --cartan is required".into(),
            ))
        }
    };
    let sys = CoxeterSystem::build(spec).map_err(|e| CliError::Build(e.to_string()))?;
    Ok((label, Arc::new(sys)))
}

pub fn build_session(config: &RunConfig) -> Result<Session, CliError> {
    let (label, sys) = build_system(config)?;
    let kl = Arc::new(KlTable::new(sys.clone()));
    if sys.size() >= 500 {
        let mut last = 0usize;
        kl.force_all(|done, total| {
            if done * 10 / total > last {
                last = done * 10 / total;
                eprintln!("kl basis: {done}/{total}");
            }
        });
    }
    let draft = match &config.table {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Validation(format!("table {}: {e}", path.display())))?;
            let doc: TableDoc = serde_json::from_str(&text)
                .map_err(|e| CliError::Validation(format!("table {}: {e}", path.display())))?;
            CanonicalDraft::load(kl.clone(), &doc)
                .map_err(|e| CliError::Validation(e.to_string()))?
        }
        None => match config.p.as_str() {
            "kl" | "0" => CanonicalDraft::identity(kl.clone(), 0),
            "2" if label == "B2" => CanonicalDraft::b2_preset_p2(kl.clone())
                .map_err(|e| CliError::Validation(e.to_string()))?,
            other => {
                return Err(CliError::Validation(format!(
                    "no built-in table for p = {other} on {label}; pass --table"
                )))
            }
        },
    };
    let (validation, table) = draft.validate();
    let table = table.ok_or_else(|| {
        let failed: Vec<&str> = validation
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        CliError::Validation(format!("table checks failed: {}", failed.join(", ")))
    })?;
    let weights = match &config.weights {
        WeightsSpec::Uniform => WeightVector::uniform(&sys),
        WeightsSpec::Random(seed) => WeightVector::random(&sys, *seed),
        WeightsSpec::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Build(format!("weights {}: {e}", path.display())))?;
            let map: BTreeMap<String, String> = serde_json::from_str(&text)
                .map_err(|e| CliError::Build(format!("weights {}: {e}", path.display())))?;
            WeightVector::from_named(&sys, &map).map_err(|e| CliError::Build(e.to_string()))?
        }
    };
    Ok(Session {
        label,
        sys,
        kl,
        table: Arc::new(table),
        validation,
        weights,
    })
}

pub fn cmd_kl(config: &RunConfig) -> Result<(), CliError> {
    let (label, sys) = build_system(config)?;
    let kl = KlTable::new(sys.clone());
    kl.force_all(|_, _| {});
    let report = report::kl_report(&label, &kl);
    let path = config.out.join(format!("kl_{label}.json"));
    report::write_json(&path, &report).map_err(io_err("write kl report"))?;
    println!(
        "kl: {label} with {} elements -> {}",
        sys.size(),
        path.display()
    );
    Ok(())
}

pub fn cmd_cells(config: &RunConfig) -> Result<(), CliError> {
    let session = build_session(config)?;
    let sys = &session.sys;
    let label = &session.label;
    let p = session.table.p();
    let mut summaries = Vec::new();
    for side in [Side::Left, Side::Right, Side::TwoSided] {
        let decomp = CellDecomposition::compute(&session.table, side);
        let rep = report::cells_report(label, &session.table, &decomp);
        let tag = side.label().replace('-', "_");
        if config.formats.contains("json") {
            let path = config.out.join(format!("cells_{label}_p{p}_{tag}.json"));
            report::write_json(&path, &rep).map_err(io_err("write cells report"))?;
        }
        if config.formats.contains("dot") {
            let path = config.out.join(format!("condensation_{label}_p{p}_{tag}.dot"));
            report::write_text(&path, &report::dot_condensation(sys, &decomp))
                .map_err(io_err("write dot"))?;
        }
        summaries.push(format!("{}: {} cells", side.label(), decomp.len()));
    }
    if sys.is_type_a() {
        let rs = cellular::verify_rs_fibers(&session.table)
            .map_err(|e| CliError::Verification(e.to_string()))?;
        let path = config.out.join(format!("rs_crosscheck_{label}_p{p}.json"));
        report::write_json(&path, &rs).map_err(io_err("write rs crosscheck"))?;
        summaries.push(format!(
            "rs-crosscheck: {}",
            if rs.passed { "pass" } else { "FAIL" }
        ));
        if !rs.passed {
            return Err(CliError::Verification(format!(
                "cells disagree with RS fibers; see {}",
                path.display()
            )));
        }
    }
    println!("cells: {label} p={p}: {}", summaries.join("; "));
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
struct VerifySummary {
    system: String,
    p: u32,
    tolerance_rel: f64,
    parts: BTreeMap<String, bool>,
    all_pass: bool,
}

fn applicable_checks(which: &str, type_a: bool, chars: bool) -> Result<Vec<&'static str>, CliError> {
    let all = ["axioms", "orders", "independence", "property-a", "conjecture", "perron"];
    match which {
        "all" => Ok(all
            .iter()
            .copied()
            .filter(|c| {
                type_a
                    || !matches!(*c, "axioms" | "orders" | "independence")
            })
            .collect()),
        "axioms" | "orders" | "independence" => {
            if type_a {
                Ok(vec![match which {
                    "axioms" => "axioms",
                    "orders" => "orders",
                    _ => "independence",
                }])
            } else {
                Err(CliError::Unsupported(format!(
                    "`{which}` requires a type-A system (cell datum over partitions)"
                )))
            }
        }
        "property-a" => Ok(vec!["property-a"]),
        "conjecture" => Ok(vec!["conjecture"]),
        "perron" => Ok(vec!["perron"]),
        other => Err(CliError::Build(format!(
            "unknown verification `{other}`; use axioms|property-a|orders|independence|conjecture|perron|all"
        ))),
        // chars is only advisory for the summary; conjecture runs without it.
    }
    .map(|v| {
        let _ = chars;
        v
    })
}

/// Run one named check, write its report, and return whether it passed.
fn run_check(
    name: &str,
    session: &Session,
    chars: Option<&CharacterTable>,
    config: &RunConfig,
) -> Result<(bool, PathBuf), CliError> {
    let label = &session.label;
    let p = session.table.p();
    let out = |stem: &str| config.out.join(format!("verify_{stem}_{label}_p{p}.json"));
    match name {
        "axioms" => {
            let datum = cellular::build_cell_datum(&session.table)
                .map_err(|e| CliError::Unsupported(e.to_string()))?;
            let report = cellular::verify_axioms(&datum, &session.table);
            let path = out("axioms");
            report::write_json(&path, &report).map_err(io_err("write axioms"))?;
            Ok((report.passed, path))
        }
        "orders" => {
            let report = cellular::verify_orders(&session.table)
                .map_err(|e| CliError::Verification(e.to_string()))?;
            let path = out("orders");
            report::write_json(&path, &report).map_err(io_err("write orders"))?;
            Ok((report.passed, path))
        }
        "independence" => {
            let report = cellular::struct_coeff_independence(&session.table)
                .map_err(|e| CliError::Unsupported(e.to_string()))?;
            let path = out("independence");
            report::write_json(&path, &report).map_err(io_err("write independence"))?;
            Ok((report.passed, path))
        }
        "property-a" => {
            let report = cellular::verify_property_a(&session.table);
            let path = out("property_a");
            report::write_json(&path, &report).map_err(io_err("write property-a"))?;
            Ok((report.passed, path))
        }
        "conjecture" => {
            let report = conjecture_check(&session.table, &session.weights, &config.tol, chars, 3)
                .map_err(|e| CliError::Verification(e.to_string()))?;
            #[derive(Serialize)]
            struct ConjectureOut {
                lambda_per_two_sided: Vec<f64>,
                constancy_spread: f64,
                constant_on_two_sided: bool,
                monotone: bool,
                monotonicity_violations: Vec<(usize, usize)>,
                invariant_under_weights: Option<bool>,
                passed: bool,
            }
            let payload = ConjectureOut {
                lambda_per_two_sided: report.lambda_per_two_sided.clone(),
                constancy_spread: report.constancy_spread,
                constant_on_two_sided: report.constant_on_two_sided,
                monotone: report.monotone,
                monotonicity_violations: report.monotonicity_violations.clone(),
                invariant_under_weights: report.invariant_under_weights,
                passed: report.passed,
            };
            let path = out("conjecture");
            report::write_json(&path, &payload).map_err(io_err("write conjecture"))?;
            Ok((report.passed, path))
        }
        "perron" => {
            let (report, passed) = perron_verify(session, chars, config)?;
            let path = out("perron");
            report::write_json(&path, &report).map_err(io_err("write perron"))?;
            if config.formats.contains("csv") {
                let csv_path = config.out.join(format!("perron_summary_{label}_p{p}.csv"));
                let rows: Vec<(usize, String, f64, String, String)> = report
                    .left_cells
                    .iter()
                    .enumerate()
                    .map(|(i, entry)| {
                        let family = report
                            .families
                            .as_ref()
                            .and_then(|f| {
                                let two = CellDecomposition::compute(&session.table, Side::TwoSided);
                                let elt = session.sys.element_by_name(&entry.members[0])?;
                                f.get(two.cell_of(elt)).map(|fam| fam.join("+"))
                            })
                            .unwrap_or_else(|| "-".to_string());
                        (
                            i,
                            entry.members[0].clone(),
                            entry.lambda,
                            entry.special_module.clone().unwrap_or_else(|| "-".into()),
                            family,
                        )
                    })
                    .collect();
                report::write_text(&csv_path, &report::perron_csv(&rows))
                    .map_err(io_err("write perron csv"))?;
            }
            Ok((passed, path))
        }
        other => Err(CliError::Build(format!("unknown check `{other}`"))),
    }
}

/// The spectral section of `verify`: per left cell the restricted action
/// analysis, per two-sided cell the idempotent, plus families when a
/// character table exists.
fn perron_verify(
    session: &Session,
    chars: Option<&CharacterTable>,
    config: &RunConfig,
) -> Result<(report::PerronReport, bool), CliError> {
    let table = &session.table;
    let sys = &session.sys;
    let tol = &config.tol;
    let left = CellDecomposition::compute(table, Side::Left);
    let two = CellDecomposition::compute(table, Side::TwoSided);
    let mut passed = true;

    let run_cell = |cell: usize| -> Result<report::PerronCellEntry, CliError> {
        let module = CellModule::new(table, &left, cell);
        apex(table, &two, &left, cell).map_err(|e| CliError::Verification(e.to_string()))?;
        let j = two.cell_of(left.members(cell)[0]);
        let restricted = perron::specialize_action(
            table,
            &module,
            &session.weights,
            Restriction::Cell(two.members(j)),
        );
        let pf = pf_analyze(&perron::rational_matrix_to_f64(&restricted), tol)
            .map_err(|e| CliError::Verification(e.to_string()))?;
        let special = match chars {
            Some(chars) => Some(
                special_module(table, chars, &left, cell, &session.weights, tol)
                    .map_err(|e| CliError::Verification(e.to_string()))?
                    .name,
            ),
            None => None,
        };
        Ok(report::perron_cell_entry(
            sys,
            cell,
            left.members(cell),
            &pf,
            special,
        ))
    };
    let left_entries: Vec<report::PerronCellEntry> = if config.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| CliError::Build(e.to_string()))?;
        use rayon::prelude::*;
        pool.install(|| {
            (0..left.len())
                .into_par_iter()
                .map(run_cell)
                .collect::<Result<Vec<_>, _>>()
        })?
    } else {
        (0..left.len()).map(run_cell).collect::<Result<Vec<_>, _>>()?
    };

    let mut two_entries = Vec::with_capacity(two.len());
    for cell in 0..two.len() {
        let idem = ej_idempotent(table, &two, &left, cell, &session.weights, tol)
            .map_err(|e| CliError::Verification(e.to_string()))?;
        if idem.idempotency_residual > tol.rel || idem.block_residual > tol.rel {
            passed = false;
        }
        two_entries.push(report::idempotent_entry(sys, cell, &idem));
    }

    let families_out = match chars {
        Some(chars) => {
            let fam = families(table, chars, &two, &left)
                .map_err(|e| CliError::Verification(e.to_string()))?;
            if !fam.is_partition {
                passed = false;
            }
            Some(fam.families)
        }
        None => None,
    };

    Ok((
        report::PerronReport {
            system: session.label.clone(),
            p: table.p(),
            tolerance_rel: tol.rel,
            left_cells: left_entries,
            two_sided: two_entries,
            families: families_out,
        },
        passed,
    ))
}

pub fn cmd_verify(which: &str, config: &RunConfig) -> Result<(), CliError> {
    let session = build_session(config)?;
    let chars = character_table(&session.sys).ok();
    let checks = applicable_checks(which, session.sys.is_type_a(), chars.is_some())?;
    let mut parts = BTreeMap::new();
    let mut first_failure: Option<PathBuf> = None;
    for check in &checks {
        let (ok, path) = run_check(check, &session, chars.as_ref(), config)?;
        println!(
            "{} {check} -> {}",
            if ok { "PASS" } else { "FAIL" },
            path.display()
        );
        if !ok && first_failure.is_none() {
            first_failure = Some(path);
        }
        parts.insert(check.to_string(), ok);
    }
    let summary = VerifySummary {
        system: session.label.clone(),
        p: session.table.p(),
        tolerance_rel: config.tol.rel,
        parts,
        all_pass: first_failure.is_none(),
    };
    let path = config.out.join(format!(
        "verify_summary_{}_p{}.json",
        session.label,
        session.table.p()
    ));
    report::write_json(&path, &summary).map_err(io_err("write summary"))?;
    match first_failure {
        None => {
            println!("verify {which}: all checks passed");
            Ok(())
        }
        Some(witness) => Err(CliError::Verification(format!(
            "first falsification witness: {}",
            witness.display()
        ))),
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Kl(args) => cmd_kl(&RunConfig::resolve(args)?),
        Command::Cells(args) => cmd_cells(&RunConfig::resolve(args)?),
        Command::Verify { which, args } => cmd_verify(which, &RunConfig::resolve(args)?),
    }
}
