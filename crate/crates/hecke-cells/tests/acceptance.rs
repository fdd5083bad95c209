//! Acceptance suite: one test per criterion, each printing a pass line with
//! the measured quantities. Run with `cargo test --test acceptance --
//! --nocapture` to see the lines; a failed criterion fails its test.

mod common;

use common::{kl_oracle_row, reduced_words};
use hecke_cells::canonical::CanonicalTable;
use hecke_cells::cells::{CellDecomposition, CellModule, Side};
use hecke_cells::cellular;
use hecke_cells::chars::character_table;
use hecke_cells::coxeter::{CoxeterSystem, Elt};
use hecke_cells::hecke::{HeckeElt, KlTable};
use hecke_cells::perron::{
    conjecture_check, ej_idempotent, families, pf_analyze, rational_matrix_to_f64,
    special_module, specialize_action, Restriction, Tolerances, WeightVector,
};
use hecke_cells::tableaux::{
    all_perms, chain_witness, dominance_covers, inversions, longest_perm, perm_inverse, perm_mul,
    rs, rs_shape,
};
use num_rational::BigRational;
use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

const SQRT2: f64 = std::f64::consts::SQRT_2;
const REL_TOL: f64 = 1e-9;

fn p0(preset: &str) -> CanonicalTable {
    let sys = Arc::new(CoxeterSystem::build_preset(preset).unwrap());
    CanonicalTable::p0(Arc::new(KlTable::new(sys)))
}

fn b2(p: u32) -> CanonicalTable {
    let sys = Arc::new(CoxeterSystem::build_preset("B2").unwrap());
    let kl = Arc::new(KlTable::new(sys));
    match p {
        0 => CanonicalTable::p0(kl),
        2 => CanonicalTable::b2_p2(kl),
        _ => unreachable!(),
    }
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(1.0)
}

#[test]
fn acceptance_01_b2_worked_example() {
    let start = Instant::now();
    let table = b2(2);
    let sys = table.system().clone();
    let two = CellDecomposition::compute(&table, Side::TwoSided);
    let left = CellDecomposition::compute(&table, Side::Left);
    let j = two.cell_of(sys.element_by_name("2").unwrap());
    let module = CellModule::two_sided(&table, &two, &left, j);
    let weights = WeightVector::uniform(&sys);
    let n = specialize_action(&table, &module, &weights, Restriction::Cell(&module.basis));

    // Exact integer equality of the action matrix.
    let expect: [[i64; 5]; 5] = [
        [3, 4, 3, 0, 0],
        [4, 6, 4, 0, 0],
        [3, 4, 3, 0, 0],
        [0, 0, 0, 6, 4],
        [0, 0, 0, 8, 6],
    ];
    for (i, row) in n.iter().enumerate() {
        for (k, entry) in row.iter().enumerate() {
            assert_eq!(
                entry,
                &BigRational::from_integer(expect[i][k].into()),
                "N[{i}][{k}]"
            );
        }
    }

    let tol = Tolerances::default();
    let report = ej_idempotent(&table, &two, &left, j, &weights, &tol).unwrap();
    let lambda_expect = 6.0 + 4.0 * SQRT2;
    assert!(close(report.lambda, lambda_expect, REL_TOL), "lambda = {}", report.lambda);

    let nj_expect = [
        [0.25, SQRT2 / 4.0, 0.25, 0.0, 0.0],
        [SQRT2 / 4.0, 0.5, SQRT2 / 4.0, 0.0, 0.0],
        [0.25, SQRT2 / 4.0, 0.25, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.5, SQRT2 / 4.0],
        [0.0, 0.0, 0.0, SQRT2 / 2.0, 0.5],
    ];
    for i in 0..5 {
        for k in 0..5 {
            assert!(
                (report.n_limit[(i, k)] - nj_expect[i][k]).abs() <= REL_TOL,
                "N_J[{i}][{k}] = {}",
                report.n_limit[(i, k)]
            );
        }
    }

    let q = (2.0 - SQRT2) / 8.0;
    let r = (SQRT2 - 1.0) / 4.0;
    for (elt, value) in &report.d {
        let expect = match sys.name(*elt) {
            "2" | "212" | "121" => q,
            "12" | "21" => r,
            other => panic!("unexpected member {other}"),
        };
        assert!((value - expect).abs() <= REL_TOL, "d_{}", sys.name(*elt));
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "acceptance 01 PASS: B2 p=2 worked example (N exact, lambda {:.9}, N_J and e_J to 1e-9) in {elapsed:?}",
        report.lambda
    );
}

#[test]
fn acceptance_02_b2_families() {
    let sets = |table: &CanonicalTable| -> BTreeSet<Vec<String>> {
        let sys = table.system();
        let chars = character_table(sys).unwrap();
        let two = CellDecomposition::compute(table, Side::TwoSided);
        let left = CellDecomposition::compute(table, Side::Left);
        let fam = families(table, &chars, &two, &left).unwrap();
        assert!(fam.is_partition);
        fam.families.into_iter().collect()
    };
    let got = sets(&b2(2));
    let expect: BTreeSet<Vec<String>> = BTreeSet::from([
        vec!["sgn".to_string()],
        vec!["sgn_s".to_string()],
        vec!["sgn_t".to_string(), "geom".to_string()],
        vec!["triv".to_string()],
    ]);
    assert_eq!(got, expect, "p = 2 families");
    let got = sets(&b2(0));
    let expect: BTreeSet<Vec<String>> = BTreeSet::from([
        vec!["sgn".to_string()],
        vec!["sgn_s".to_string(), "sgn_t".to_string(), "geom".to_string()],
        vec!["triv".to_string()],
    ]);
    assert_eq!(got, expect, "p = 0 families");
    println!("acceptance 02 PASS: B2 2-families split {{sgn}}|{{sgn_s}}|{{sgn_t,geom}}|{{triv}}; p=0 family unsplit");
}

#[test]
fn acceptance_03_sn_cells_equal_rs_fibers() {
    for (n, preset) in [(3, "A2"), (4, "A3"), (5, "A4"), (6, "A5")] {
        let start = Instant::now();
        let table = p0(preset);
        let report = cellular::verify_rs_fibers(&table).unwrap();
        assert!(report.passed, "S{n}: {report:?}");
        let elapsed = start.elapsed();
        if n == 6 {
            assert!(elapsed.as_secs_f64() < 300.0, "S6 took {elapsed:?}");
        }
        println!("acceptance 03 PASS: S{n} left/right/two-sided cells equal RS fibers ({elapsed:?})");
    }
}

#[test]
fn acceptance_04_two_sided_order_equals_dominance() {
    for (n, preset) in [(3, "A2"), (4, "A3"), (5, "A4")] {
        let table = p0(preset);
        let report = cellular::verify_orders(&table).unwrap();
        assert!(report.passed, "S{n}: {report:?}");
        println!("acceptance 04 PASS: S{n} two-sided condensation equals dominance order both ways");
    }
}

#[test]
fn acceptance_05_property_a() {
    for preset in ["A1", "A2", "A3", "A4"] {
        let report = cellular::verify_property_a(&p0(preset));
        assert!(report.passed, "{preset}: {report:?}");
    }
    for p in [0, 2] {
        let report = cellular::verify_property_a(&b2(p));
        assert!(report.passed, "B2 p={p}: {report:?}");
    }
    println!("acceptance 05 PASS: property A for S2..S5 (p=0) and B2 (p=0,2): no intra-cell preorder edges");
}

#[test]
fn acceptance_06_cell_datum_axioms_and_independence() {
    for (n, preset) in [(2, "A1"), (3, "A2"), (4, "A3"), (5, "A4")] {
        let table = p0(preset);
        let datum = cellular::build_cell_datum(&table).unwrap();
        let axioms = cellular::verify_axioms(&datum, &table);
        assert!(axioms.passed, "S{n} axioms: {axioms:?}");
        let indep = cellular::struct_coeff_independence(&table).unwrap();
        assert!(indep.passed, "S{n} independence: {indep:?}");
        println!(
            "acceptance 06 PASS: S{n} cell-datum axioms (i)-(iii) and structure-coefficient independence ({} quadruples)",
            indep.quadruples_checked
        );
    }
}

#[test]
fn acceptance_07_special_module_dimension_counts_left_cells() {
    let cases: Vec<CanonicalTable> = vec![p0("A3"), p0("A4"), b2(0), b2(2)];
    for table in cases {
        let sys = table.system().clone();
        let chars = character_table(&sys).unwrap();
        let left = CellDecomposition::compute(&table, Side::Left);
        let two = CellDecomposition::compute(&table, Side::TwoSided);
        let weights = WeightVector::uniform(&sys);
        let tol = Tolerances::default();
        for cell in 0..left.len() {
            let sm = special_module(&table, &chars, &left, cell, &weights, &tol).unwrap();
            let j = two.cell_of(left.members(cell)[0]);
            let count = (0..left.len())
                .filter(|&c| two.cell_of(left.members(c)[0]) == j)
                .count();
            assert_eq!(sm.dim, count, "cell {cell} (p = {})", table.p());
        }
        println!(
            "acceptance 07 PASS: dim L_C = #left cells in its two-sided cell ({} left cells, p = {})",
            left.len(),
            table.p()
        );
    }
}

#[test]
fn acceptance_08_special_module_weight_invariance() {
    let table = p0("A3");
    let sys = table.system().clone();
    let chars = character_table(&sys).unwrap();
    let left = CellDecomposition::compute(&table, Side::Left);
    let tol = Tolerances::default();
    let mut baseline: Option<Vec<String>> = None;
    for seed in 0..20u64 {
        let weights = WeightVector::random(&sys, seed);
        let labels: Vec<String> = (0..left.len())
            .map(|cell| {
                special_module(&table, &chars, &left, cell, &weights, &tol)
                    .unwrap()
                    .name
            })
            .collect();
        match &baseline {
            None => baseline = Some(labels),
            Some(expect) => assert_eq!(&labels, expect, "seed {seed}"),
        }
    }
    println!("acceptance 08 PASS: 20 seeded weight vectors give identical special-module labels on S4");
}

#[test]
fn acceptance_09_conjecture_rank_at_most_4() {
    let cases: Vec<(String, CanonicalTable)> = vec![
        ("A1 p=0".into(), p0("A1")),
        ("A2 p=0".into(), p0("A2")),
        ("A3 p=0".into(), p0("A3")),
        ("A4 p=0".into(), p0("A4")),
        ("B2 p=0".into(), b2(0)),
        ("B2 p=2".into(), b2(2)),
        ("B3 p=0".into(), p0("B3")),
    ];
    let tol = Tolerances::default();
    for (name, table) in cases {
        let sys = table.system().clone();
        let weights = WeightVector::uniform(&sys);
        let chars = character_table(&sys).ok();
        let report = conjecture_check(&table, &weights, &tol, chars.as_ref(), 1).unwrap();
        assert!(report.constant_on_two_sided, "{name}: spread {}", report.constancy_spread);
        assert!(report.monotone, "{name}: {:?}", report.monotonicity_violations);
        println!(
            "acceptance 09 PASS: {name}: a_c constant on two-sided cells (spread {:.2e}) and monotone along the order",
            report.constancy_spread
        );
    }
}

#[test]
fn acceptance_10a_kl_oracle_equivalence() {
    for preset in ["A2", "A3"] {
        let sys = Arc::new(CoxeterSystem::build_preset(preset).unwrap());
        let kl = KlTable::new(sys.clone());
        for w in sys.elements() {
            assert_eq!(kl.row(w).h, kl_oracle_row(&sys, w), "{preset} at {}", sys.name(w));
        }
    }
    println!("acceptance 10a PASS: KL recursion equals the bar-invariance solver on S3 and S4, coefficient-exact");
}

#[test]
fn acceptance_10b_bar_iota_identities_random_s5() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let sys = Arc::new(CoxeterSystem::build_preset("A4").unwrap());
    let kl = KlTable::new(sys.clone());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20);
    let all: Vec<Elt> = sys.elements().collect();
    for _ in 0..100 {
        let &x = all.choose(&mut rng).unwrap();
        let &y = all.choose(&mut rng).unwrap();
        let h = HeckeElt::std(x);
        assert_eq!(kl.bar(&kl.bar(&h)), h);
        assert_eq!(kl.bar(&h.iota(&sys)), kl.bar(&h).iota(&sys));
        let product = HeckeElt::std(x).std_multiply(&sys, &HeckeElt::std(y));
        assert_eq!(kl.bar(&product), kl.bar_std(x).std_multiply(&sys, &kl.bar_std(y)));
        assert_eq!(
            product.iota(&sys),
            HeckeElt::std(y)
                .iota(&sys)
                .std_multiply(&sys, &HeckeElt::std(x).iota(&sys))
        );
    }
    println!("acceptance 10b PASS: bar/iota algebra identities on 100 random S5 samples, exact");
}

#[test]
fn acceptance_10c_rs_symmetry_and_longest_element_exhaustive_s5() {
    let w0 = longest_perm(5);
    for w in all_perms(5) {
        let (p, q) = rs(&w);
        let (pi, qi) = rs(&perm_inverse(&w));
        assert_eq!((pi, qi), (q.clone(), p.clone()));
        let (a, b) = rs(&perm_mul(&w, &w0));
        assert_eq!(a, p.transpose());
        assert_eq!(b, q.evacuation().transpose());
        let (c, d) = rs(&perm_mul(&w0, &w));
        assert_eq!(c, p.evacuation().transpose());
        assert_eq!(d, q.transpose());
        let (g, h) = rs(&perm_mul(&w0, &perm_mul(&w, &w0)));
        assert_eq!(g, p.evacuation());
        assert_eq!(h, q.evacuation());
    }
    println!("acceptance 10c PASS: RS symmetry and all three longest-element formulas, exhaustive on S5");
}

#[test]
fn acceptance_10d_chain_witness_all_adjacent_pairs() {
    let mut pairs = 0usize;
    for n in 2..=7 {
        for (mu, lambda) in dominance_covers(n) {
            let w = chain_witness(&lambda, &mu, n).unwrap();
            assert_eq!(rs_shape(&w.x), mu);
            let mut xs = w.x.clone();
            xs.swap(w.s - 1, w.s);
            assert_eq!(inversions(&xs) + 1, inversions(&w.x));
            assert_eq!(rs_shape(&xs), w.nu);
            assert!(w.nu.dominance_leq(&lambda).unwrap());
            assert!(mu.dominance_leq(&w.nu).unwrap() && w.nu != mu);
            pairs += 1;
        }
    }
    println!("acceptance 10d PASS: chain-witness postconditions for all {pairs} adjacent dominance pairs, n <= 7");
}

#[test]
fn acceptance_10e_idempotency_across_test_matrix() {
    let cases: Vec<(String, CanonicalTable)> = vec![
        ("A1 p=0".into(), p0("A1")),
        ("A2 p=0".into(), p0("A2")),
        ("A3 p=0".into(), p0("A3")),
        ("A4 p=0".into(), p0("A4")),
        ("B2 p=0".into(), b2(0)),
        ("B2 p=2".into(), b2(2)),
        ("B3 p=0".into(), p0("B3")),
    ];
    let tol = Tolerances::default();
    let mut cells = 0usize;
    for (name, table) in cases {
        let sys = table.system().clone();
        let two = CellDecomposition::compute(&table, Side::TwoSided);
        let left = CellDecomposition::compute(&table, Side::Left);
        let weights = WeightVector::uniform(&sys);
        for cell in 0..two.len() {
            let report = ej_idempotent(&table, &two, &left, cell, &weights, &tol).unwrap();
            assert!(
                report.idempotency_residual < REL_TOL,
                "{name} cell {cell}: residual {}",
                report.idempotency_residual
            );
            assert!(
                report.block_residual < REL_TOL,
                "{name} cell {cell}: off-diagonal {}",
                report.block_residual
            );
            cells += 1;
        }
    }
    println!("acceptance 10e PASS: e_J idempotency and block-diagonality below 1e-9 for all {cells} two-sided cells in the matrix");
}

/// Supporting check referenced by the acceptance notes: restricted
/// eigenvalues agree with a dense solver and projector identities hold.
#[test]
fn acceptance_supplement_pf_identities() {
    for table in [p0("A2"), p0("A3"), b2(2)] {
        let sys = table.system().clone();
        let left = CellDecomposition::compute(&table, Side::Left);
        let two = CellDecomposition::compute(&table, Side::TwoSided);
        let weights = WeightVector::uniform(&sys);
        let tol = Tolerances::default();
        for cell in 0..left.len() {
            let module = CellModule::new(&table, &left, cell);
            let j = two.cell_of(left.members(cell)[0]);
            let action =
                specialize_action(&table, &module, &weights, Restriction::Cell(two.members(j)));
            let m = rational_matrix_to_f64(&action);
            let pf = pf_analyze(&m, &tol).unwrap();
            if let Some(dense) = pf.dense_lambda {
                assert!(close(pf.lambda, dense, REL_TOL));
            }
            // M_C^2 = M_C and M_C * M = lambda * M_C entrywise to 1e-9.
            let p2 = &pf.projector * &pf.projector - &pf.projector;
            assert!(p2.amax() < REL_TOL);
            let pm = &pf.projector * &m - pf.lambda * &pf.projector;
            assert!(pm.amax() < REL_TOL * pf.lambda.max(1.0));
            // The normalization left . right = 1 is tight.
            let dot: f64 = pf.left.iter().zip(&pf.right).map(|(a, b)| a * b).sum();
            assert!((dot - 1.0).abs() < 1e-12);
        }
    }
    println!("acceptance supplement PASS: eigensolver cross-checks and projector identities");
}

/// Reduced-word product invariant at acceptance scale (S3, S4, B2): the
/// product of b_s along any reduced word is unitriangular with nonnegative
/// self-dual lower coefficients.
#[test]
fn acceptance_supplement_reduced_word_products() {
    for preset in ["A2", "A3", "B2"] {
        let sys = Arc::new(CoxeterSystem::build_preset(preset).unwrap());
        let kl = Arc::new(KlTable::new(sys.clone()));
        for w in sys.elements() {
            for word in reduced_words(&sys, w) {
                let product = common::kl_word_product(&kl, &word);
                assert!(product.iter().any(|(z, c)| *z == w && c.is_one()));
                for (z, c) in &product {
                    assert!(c.is_nonneg() && c.is_self_dual());
                    assert!(sys.bruhat_leq(*z, w));
                }
            }
        }
    }
    println!("acceptance supplement PASS: reduced-word products unitriangular with nonnegative self-dual coefficients");
}
