//! Perron-Frobenius analysis of cell modules at `v = 1`: eigenvalues and
//! projectors per cell, idempotents of two-sided cells, apexes, special
//! modules and families, and the monotonicity check of the cell-order
//! conjecture.
//!
//! Everything up to matrix assembly is exact: weights are rationals and the
//! canonical-basis actions at `v = 1` are integers. Floating point enters
//! only in the eigen-analysis, with a dense-solver cross-check for small
//! matrices.

use crate::canonical::CanonicalTable;
use crate::cells::{CellDecomposition, CellModule, Side};
use crate::chars::CharacterTable;
use crate::coxeter::{CoxeterSystem, Elt};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

#[derive(Debug, Clone, thiserror::Error)]
pub enum PerronError {
    #[error("matrix is not entrywise positive: {0}")]
    NotPositive(String),
    #[error("iteration did not converge: {0}")]
    NoConvergence(String),
    #[error("isotypic projection is ambiguous: {0}")]
    AmbiguousProjection(String),
    #[error("no minimum in the apex candidate set: {0}")]
    NoMinimum(String),
    #[error("structural claim falsified: {0}")]
    Falsified(String),
    #[error("bad weight specification: {0}")]
    BadWeights(String),
}

/// Numeric tolerances; the defaults match the verification contract.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Relative tolerance for eigenvalue and coefficient comparisons.
    pub rel: f64,
    /// Power-iteration stopping residual (relative).
    pub pf_residual: f64,
    /// Iteration cap for power and limit iterations.
    pub max_iter: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            rel: 1e-9,
            pf_residual: 1e-13,
            max_iter: 1_000_000,
        }
    }
}

/// Strictly positive weights `c_w`, one exact rational per element.
#[derive(Debug, Clone)]
pub struct WeightVector {
    values: Vec<BigRational>,
}

impl WeightVector {
    pub fn uniform(sys: &CoxeterSystem) -> WeightVector {
        WeightVector {
            values: vec![BigRational::one(); sys.size()],
        }
    }

    /// Seeded random weights in `[1, 2)` with denominator 16.
    pub fn random(sys: &CoxeterSystem, seed: u64) -> WeightVector {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values = (0..sys.size())
            .map(|_| {
                let k: i64 = rng.gen_range(0..16);
                BigRational::new(BigInt::from(16 + k), BigInt::from(16))
            })
            .collect();
        WeightVector { values }
    }

    /// Parse named weights like `{"121": "3/2"}`; missing elements get 1.
    pub fn from_named(
        sys: &CoxeterSystem,
        map: &BTreeMap<String, String>,
    ) -> Result<WeightVector, PerronError> {
        let mut values = vec![BigRational::one(); sys.size()];
        for (name, value) in map {
            let w = sys
                .element_by_name(name)
                .ok_or_else(|| PerronError::BadWeights(format!("unknown element `{name}`")))?;
            let parsed: BigRational = value
                .parse()
                .map_err(|e| PerronError::BadWeights(format!("weight `{value}`: {e}")))?;
            if !parsed.is_positive() {
                return Err(PerronError::BadWeights(format!(
                    "weight for {name} must be positive, got {value}"
                )));
            }
            values[w.idx()] = parsed;
        }
        Ok(WeightVector { values })
    }

    pub fn get(&self, w: Elt) -> &BigRational {
        &self.values[w.idx()]
    }
}

/// Which canonical basis elements are summed into the acting element.
#[derive(Debug, Clone, Copy)]
pub enum Restriction<'a> {
    /// The full sum over the group.
    Full,
    /// The sum restricted to one two-sided cell.
    Cell(&'a [Elt]),
}

/// Integer matrices of every `H_w` at `v = 1` acting on a quotient span by
/// left multiplication (column convention: `mat * coeffs`).
pub struct LeftRepAtOne {
    basis: Vec<Elt>,
    mats: Vec<DMatrix<i64>>,
}

impl LeftRepAtOne {
    /// Build over a basis that spans a quotient of a based ideal: any
    /// product term outside the basis must lie strictly below it in the
    /// relevant preorder (the caller's membership rule), and is dropped.
    pub fn new(table: &CanonicalTable, basis: Vec<Elt>) -> LeftRepAtOne {
        let sys = table.system();
        let dim = basis.len();
        let pos: BTreeMap<Elt, usize> = basis.iter().enumerate().map(|(i, x)| (*x, i)).collect();
        let rank = sys.rank();
        // Column convention: column y holds the image of pkl_y.
        let mut gen = vec![DMatrix::<i64>::zeros(dim, dim); rank];
        for (col, &y) in basis.iter().enumerate() {
            for (s, mat) in gen.iter_mut().enumerate() {
                for (z, c) in table.left_gen_product(s, y) {
                    if let Some(&row) = pos.get(z) {
                        mat[(row, col)] = c.eval_at_one().to_i64().expect("small integer");
                    }
                }
            }
        }
        // H_s = b_s - 1 at v = 1; H_w by splitting off the first letter.
        let mut mats = vec![DMatrix::<i64>::zeros(dim, dim); sys.size()];
        mats[0] = DMatrix::identity(dim, dim);
        for w in sys.elements() {
            if sys.length(w) == 0 {
                continue;
            }
            let s = sys.word(w)[0] as usize;
            let rest = sys.left_mul(s, w);
            let mut hs = gen[s].clone();
            for i in 0..dim {
                hs[(i, i)] -= 1;
            }
            mats[w.idx()] = &hs * &mats[rest.idx()];
        }
        LeftRepAtOne { basis, mats }
    }

    pub fn basis(&self) -> &[Elt] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Column-convention matrix of `H_w` at `v = 1`.
    pub fn h_mat(&self, w: Elt) -> &DMatrix<i64> {
        &self.mats[w.idx()]
    }

    /// Column-convention integer matrix of `pkl_x` at `v = 1`.
    pub fn pkl_mat(&self, table: &CanonicalTable, x: Elt) -> DMatrix<i64> {
        let dim = self.dim();
        let mut out = DMatrix::<i64>::zeros(dim, dim);
        for (y, c) in table.std_row_at_one(x) {
            out += self.mats[y.idx()].map(|e| e * c);
        }
        out
    }

    /// Trace of `H_w` — the module character at `w`.
    pub fn character(&self) -> Vec<i64> {
        self.mats.iter().map(|m| m.diagonal().sum()).collect()
    }
}

/// Exact action matrix of `sum c_w pkl_w` at `v = 1` on a cell module, in
/// the display convention: row `y` is the expansion of the image of
/// `pkl_y`.
pub fn specialize_action(
    table: &CanonicalTable,
    module: &CellModule,
    weights: &WeightVector,
    restrict: Restriction<'_>,
) -> Vec<Vec<BigRational>> {
    assert!(
        matches!(module.side, Side::Left | Side::TwoSided),
        "the acting element multiplies from the left"
    );
    let sys = table.system();
    let rep = LeftRepAtOne::new(table, module.basis.clone());
    // t_y = sum of c_w * ph_{y,w}(1) over the restricted set.
    let mut t = vec![BigRational::zero(); sys.size()];
    let mut add_for = |w: Elt| {
        let c = weights.get(w);
        for (y, h1) in table.std_row_at_one(w) {
            t[y.idx()] += c * BigRational::from(BigInt::from(*h1));
        }
    };
    match restrict {
        Restriction::Full => {
            for w in sys.elements() {
                add_for(w);
            }
        }
        Restriction::Cell(members) => {
            for &w in members {
                add_for(w);
            }
        }
    }
    let dim = rep.dim();
    let mut acc = vec![vec![BigRational::zero(); dim]; dim];
    for y in sys.elements() {
        if t[y.idx()].is_zero() {
            continue;
        }
        let m = rep.h_mat(y);
        for i in 0..dim {
            for j in 0..dim {
                let e = m[(i, j)];
                if e != 0 {
                    acc[i][j] += &t[y.idx()] * BigRational::from(BigInt::from(e));
                }
            }
        }
    }
    // Transpose from column convention into the display convention.
    let mut out = vec![vec![BigRational::zero(); dim]; dim];
    for i in 0..dim {
        for (j, row) in acc.iter().enumerate() {
            out[i][j] = row[i].clone();
        }
    }
    out
}

pub fn rational_matrix_to_f64(m: &[Vec<BigRational>]) -> DMatrix<f64> {
    let dim = m.len();
    DMatrix::from_fn(dim, dim, |i, j| m[i][j].to_f64().expect("finite"))
}

/// Result of Perron-Frobenius analysis of one positive matrix.
#[derive(Debug, Clone)]
pub struct PerronData {
    pub lambda: f64,
    /// Right eigenvector (positive, unit 2-norm).
    pub right: Vec<f64>,
    /// Left eigenvector, normalized so that `left . right = 1`.
    pub left: Vec<f64>,
    /// The spectral projector `right * left^T`.
    pub projector: DMatrix<f64>,
    pub iterations: usize,
    pub residual: f64,
    /// Spectral radius from the dense eigensolver, when the matrix is small
    /// enough to cross-check.
    pub dense_lambda: Option<f64>,
}

/// Power iteration with a dense cross-check; requires a strictly positive
/// matrix so that the dominant eigenvalue is simple and positive.
pub fn pf_analyze(matrix: &DMatrix<f64>, tol: &Tolerances) -> Result<PerronData, PerronError> {
    let n = matrix.nrows();
    assert_eq!(n, matrix.ncols());
    if n == 0 {
        return Err(PerronError::NotPositive("empty matrix".into()));
    }
    for i in 0..n {
        for j in 0..n {
            if matrix[(i, j)] <= 0.0 {
                return Err(PerronError::NotPositive(format!(
                    "entry ({i}, {j}) = {}",
                    matrix[(i, j)]
                )));
            }
        }
    }
    let transpose = matrix.transpose();
    let mut v = DMatrix::<f64>::from_element(n, 1, 1.0 / (n as f64).sqrt());
    let mut u = v.clone();
    let mut lambda = 0.0;
    let mut residual = f64::INFINITY;
    let mut iterations = 0;
    // Stop on the target residual, or when the residual stops improving
    // (the noise floor of double precision for this matrix).
    let mut best = f64::INFINITY;
    let mut since_improvement = 0usize;
    while iterations < tol.max_iter {
        iterations += 1;
        let mv = matrix * &v;
        v = &mv / mv.norm();
        let mu = &transpose * &u;
        u = &mu / mu.norm();
        lambda = (u.transpose() * matrix * &v)[(0, 0)] / (u.transpose() * &v)[(0, 0)];
        let r_res = (matrix * &v - lambda * &v).norm();
        let l_res = (&transpose * &u - lambda * &u).norm();
        residual = r_res.max(l_res) / lambda.abs().max(f64::MIN_POSITIVE);
        if residual < tol.pf_residual {
            break;
        }
        if residual < best * 0.999 {
            best = residual;
            since_improvement = 0;
        } else {
            since_improvement += 1;
            if since_improvement > 500 {
                break;
            }
        }
    }
    if residual >= tol.pf_residual.max(1e-10) {
        return Err(PerronError::NoConvergence(format!(
            "relative residual {residual} after {iterations} iterations"
        )));
    }
    if lambda <= 0.0 || v.iter().any(|&x| x <= 0.0) || u.iter().any(|&x| x <= 0.0) {
        return Err(PerronError::Falsified(
            "Perron eigenpair is not positive".into(),
        ));
    }
    // Normalize left . right = 1 and form the projector.
    let dot = (u.transpose() * &v)[(0, 0)];
    let u = &u / dot;
    let projector = &v * u.transpose();
    // Dense QR-based cross-check with a bounded iteration budget; the
    // unbounded variant can cycle on structured integer matrices.
    let dense_lambda = (n <= 200)
        .then(|| {
            nalgebra::linalg::Schur::try_new(matrix.clone(), 1e-12, 100_000).map(|schur| {
                schur
                    .complex_eigenvalues()
                    .iter()
                    .map(|z| z.norm())
                    .fold(0.0f64, f64::max)
            })
        })
        .flatten();
    if let Some(dense) = dense_lambda {
        let diff = (dense - lambda).abs() / lambda;
        if diff > tol.rel {
            return Err(PerronError::Falsified(format!(
                "power iteration lambda {lambda} disagrees with dense solver {dense}"
            )));
        }
    }
    Ok(PerronData {
        lambda,
        right: v.iter().copied().collect(),
        left: u.iter().copied().collect(),
        projector,
        iterations,
        residual,
        dense_lambda,
    })
}

/// Idempotent data of one two-sided cell.
#[derive(Debug, Clone)]
pub struct IdempotentReport {
    pub cell_members: Vec<Elt>,
    pub lambda: f64,
    /// Exact action of the cell-restricted positive sum on the two-sided
    /// module, display convention, blocks grouped by left cell.
    pub n_matrix: Vec<Vec<BigRational>>,
    /// The limit `N^m / lambda^m`.
    pub n_limit: DMatrix<f64>,
    /// Left-cell block spans in the basis.
    pub blocks: Vec<(usize, usize)>,
    /// Idempotent coefficients `d_x > 0`, in basis order.
    pub d: Vec<(Elt, f64)>,
    /// `max |entry|` of `N_limit` outside the diagonal blocks.
    pub block_residual: f64,
    /// `||E^2 - E||_inf` for the matrix of the idempotent acting on the
    /// quotient by the below-cell ideal.
    pub idempotency_residual: f64,
    pub iterations: usize,
}

/// Build the idempotent of a two-sided cell from the limit of the
/// normalized action powers, then verify it in the quotient algebra.
pub fn ej_idempotent(
    table: &CanonicalTable,
    two_sided: &CellDecomposition,
    left: &CellDecomposition,
    cell: usize,
    weights: &WeightVector,
    tol: &Tolerances,
) -> Result<IdempotentReport, PerronError> {
    let module = CellModule::two_sided(table, two_sided, left, cell);
    let members = module.basis.clone();
    let n_matrix = specialize_action(table, &module, weights, Restriction::Cell(&members));
    let n_f64 = rational_matrix_to_f64(&n_matrix);

    // The Perron eigenvalue of each diagonal block must agree.
    let mut lambda = None;
    for &(lo, hi) in &module.blocks {
        let block = n_f64.view((lo, lo), (hi - lo, hi - lo)).into_owned();
        let pf = pf_analyze(&block, tol)?;
        match lambda {
            None => lambda = Some(pf.lambda),
            Some(prev) => {
                let diff = (pf.lambda - prev).abs() / prev;
                if diff > tol.rel {
                    return Err(PerronError::Falsified(format!(
                        "left-cell blocks disagree on lambda: {prev} vs {}",
                        pf.lambda
                    )));
                }
            }
        }
    }
    let lambda = lambda.expect("at least one block");

    // N_limit = lim (N / lambda)^m, corrected to an exact projector scale.
    let dim = members.len();
    let step = n_f64.map(|x| x / lambda);
    let mut limit = DMatrix::<f64>::identity(dim, dim);
    let mut iterations = 0;
    loop {
        iterations += 1;
        let next = &limit * &step;
        let delta = (&next - &limit).amax();
        limit = next;
        if delta < 1e-14 {
            break;
        }
        if iterations >= tol.max_iter {
            return Err(PerronError::NoConvergence(format!(
                "matrix limit did not settle after {iterations} steps (delta {delta})"
            )));
        }
    }
    let trace: f64 = limit.diagonal().sum();
    let trace_sq: f64 = (&limit * &limit).diagonal().sum();
    if trace.abs() > 1e-12 {
        let scale = trace_sq / trace;
        limit /= scale;
    }

    // d_x = sum_y (c_y / lambda) * N_limit[y][x].
    let d: Vec<(Elt, f64)> = members
        .iter()
        .enumerate()
        .map(|(x, &elt)| {
            let total: f64 = members
                .iter()
                .enumerate()
                .map(|(y, &yelt)| weights.get(yelt).to_f64().expect("finite") * limit[(y, x)])
                .sum();
            (elt, total / lambda)
        })
        .collect();
    if let Some((elt, bad)) = d.iter().find(|(_, v)| *v <= 0.0) {
        return Err(PerronError::Falsified(format!(
            "idempotent coefficient d_{} = {bad} is not positive",
            table.system().name(*elt)
        )));
    }

    let mut block_residual = 0.0f64;
    for (bi, &(lo, hi)) in module.blocks.iter().enumerate() {
        for (bj, &(lo2, hi2)) in module.blocks.iter().enumerate() {
            if bi == bj {
                continue;
            }
            for i in lo..hi {
                for j in lo2..hi2 {
                    block_residual = block_residual.max(limit[(i, j)].abs());
                }
            }
        }
    }

    // Verify e^2 = e on the quotient by the below-cell ideal: the span of
    // pkl_z for z weakly above the cell in the two-sided order.
    let sys = table.system();
    let upset: Vec<Elt> = sys
        .elements()
        .filter(|&z| two_sided.cell_leq(cell, two_sided.cell_of(z)))
        .collect();
    let rep = LeftRepAtOne::new(table, upset);
    let qdim = rep.dim();
    let mut e_mat = DMatrix::<f64>::zeros(qdim, qdim);
    for (x, dx) in &d {
        e_mat += rep.pkl_mat(table, *x).map(|v| v as f64) * *dx;
    }
    let idempotency_residual = (&e_mat * &e_mat - &e_mat).amax();

    Ok(IdempotentReport {
        cell_members: members,
        lambda,
        n_matrix,
        n_limit: limit,
        blocks: module.blocks,
        d,
        block_residual,
        idempotency_residual,
        iterations,
    })
}

/// The apex of a left cell: the minimum two-sided cell whose basis elements
/// act nonzero on the cell module. Verified against the containing cell.
pub fn apex(
    table: &CanonicalTable,
    two_sided: &CellDecomposition,
    left: &CellDecomposition,
    left_cell: usize,
) -> Result<usize, PerronError> {
    let sys = table.system();
    let rep = LeftRepAtOne::new(table, left.members(left_cell).to_vec());
    let mut acting: Vec<usize> = Vec::new();
    for x in sys.elements() {
        if rep.pkl_mat(table, x).iter().any(|&v| v != 0) {
            let c = two_sided.cell_of(x);
            if !acting.contains(&c) {
                acting.push(c);
            }
        }
    }
    let minimum = acting
        .iter()
        .copied()
        .find(|&c| acting.iter().all(|&o| two_sided.cell_leq(c, o)));
    let minimum = minimum.ok_or_else(|| {
        PerronError::NoMinimum(format!(
            "candidate set {:?} for left cell {left_cell} has no minimum",
            acting
        ))
    })?;
    let own = two_sided.cell_of(left.members(left_cell)[0]);
    if minimum != own {
        return Err(PerronError::Falsified(format!(
            "apex of left cell {left_cell} is {minimum}, not its own two-sided cell {own}"
        )));
    }
    Ok(minimum)
}

/// Identification of the special module of one left cell.
#[derive(Debug, Clone)]
pub struct SpecialModule {
    pub irrep: usize,
    pub name: String,
    pub dim: usize,
    pub lambda: f64,
    /// Multiplicities of every irreducible in the cell module, exact.
    pub multiplicities: Vec<usize>,
    /// Norms of the isotypic projections of the Perron eigenvector.
    pub projection_norms: Vec<f64>,
}

/// Identify the unique composition factor of the cell module that affords
/// the Perron-Frobenius eigenvalue of the full positive sum.
pub fn special_module(
    table: &CanonicalTable,
    chars: &CharacterTable,
    left: &CellDecomposition,
    left_cell: usize,
    weights: &WeightVector,
    tol: &Tolerances,
) -> Result<SpecialModule, PerronError> {
    let sys = table.system();
    let module = CellModule::new(table, left, left_cell);
    let rep = LeftRepAtOne::new(table, module.basis.clone());
    let multiplicities = chars
        .decompose(&rep.character())
        .map_err(|e| PerronError::Falsified(e.to_string()))?;

    let action = specialize_action(table, &module, weights, Restriction::Full);
    // pf_analyze works on the display matrix; its LEFT eigenvector is the
    // right eigenvector of the column-convention action, which is the
    // positive eigenvector inside the module.
    let display = rational_matrix_to_f64(&action);
    let pf = pf_analyze(&display, tol)?;
    let dim = rep.dim();
    let v = DMatrix::<f64>::from_iterator(dim, 1, pf.left.iter().copied());

    // Isotypic projectors of the column-convention group action.
    let order = sys.size() as f64;
    let mut norms = Vec::with_capacity(chars.irreducible_count());
    for i in 0..chars.irreducible_count() {
        let mut p = DMatrix::<f64>::zeros(dim, dim);
        for w in sys.elements() {
            let chi = chars.value(i, sys.inverse(w)) as f64;
            if chi != 0.0 {
                p += rep.h_mat(w).map(|x| x as f64) * chi;
            }
        }
        p *= chars.dims[i] as f64 / order;
        norms.push((&p * &v).norm());
    }
    let vnorm = v.norm();
    let best = (0..norms.len())
        .max_by(|&a, &b| norms[a].total_cmp(&norms[b]))
        .expect("nonempty table");
    let second = norms
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != best)
        .map(|(_, &x)| x)
        .fold(0.0f64, f64::max);
    if norms[best] < 0.5 * vnorm || second > 1e-3 * vnorm {
        return Err(PerronError::AmbiguousProjection(format!(
            "projection norms {norms:?} do not isolate one irreducible"
        )));
    }
    if multiplicities[best] != 1 {
        return Err(PerronError::Falsified(format!(
            "[module : {}] = {}, expected 1",
            chars.names[best], multiplicities[best]
        )));
    }
    Ok(SpecialModule {
        irrep: best,
        name: chars.names[best].clone(),
        dim: chars.dims[best],
        lambda: pf.lambda,
        multiplicities,
        projection_norms: norms,
    })
}

/// The families induced by the two-sided cells: for each cell, the set of
/// irreducibles appearing in its cell module.
#[derive(Debug, Clone)]
pub struct Families {
    /// Per two-sided cell: multiplicity vector over the character table.
    pub multiplicities: Vec<Vec<usize>>,
    /// Per two-sided cell: names of the irreducibles in its family.
    pub families: Vec<Vec<String>>,
    pub is_partition: bool,
}

pub fn families(
    table: &CanonicalTable,
    chars: &CharacterTable,
    two_sided: &CellDecomposition,
    left: &CellDecomposition,
) -> Result<Families, PerronError> {
    let mut multiplicities = Vec::with_capacity(two_sided.len());
    for cell in 0..two_sided.len() {
        let module = CellModule::two_sided(table, two_sided, left, cell);
        let rep = LeftRepAtOne::new(table, module.basis);
        let mults = chars
            .decompose(&rep.character())
            .map_err(|e| PerronError::Falsified(e.to_string()))?;
        multiplicities.push(mults);
    }
    let families_named: Vec<Vec<String>> = multiplicities
        .iter()
        .map(|m| {
            m.iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, _)| chars.names[i].clone())
                .collect()
        })
        .collect();
    let mut seen = vec![0usize; chars.irreducible_count()];
    for m in &multiplicities {
        for (i, &c) in m.iter().enumerate() {
            if c > 0 {
                seen[i] += 1;
            }
        }
    }
    let is_partition = seen.iter().all(|&c| c == 1);
    Ok(Families {
        multiplicities,
        families: families_named,
        is_partition,
    })
}

/// Outcome of the cell-order monotonicity check.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    /// Perron eigenvalue of the full positive sum, per left cell.
    pub lambda_per_left_cell: Vec<f64>,
    /// Representative eigenvalue per two-sided cell.
    pub lambda_per_two_sided: Vec<f64>,
    /// Worst relative spread of lambda within a two-sided cell.
    pub constancy_spread: f64,
    pub constant_on_two_sided: bool,
    /// Comparable pairs `(lower, upper)` that violate monotonicity.
    pub monotonicity_violations: Vec<(usize, usize)>,
    pub monotone: bool,
    /// Special-module labels per left cell for each weight draw, when a
    /// character table exists.
    pub invariance_labels: Option<Vec<Vec<String>>>,
    pub invariant_under_weights: Option<bool>,
    pub passed: bool,
}

/// Evaluate the Perron eigenvalue of the full positive sum on every left
/// cell; check it is constant on two-sided cells and antitone along the
/// two-sided order. Optionally re-identify special modules under several
/// random weight draws.
pub fn conjecture_check(
    table: &CanonicalTable,
    weights: &WeightVector,
    tol: &Tolerances,
    chars: Option<&CharacterTable>,
    invariance_draws: usize,
) -> Result<ConjectureReport, PerronError> {
    let left = CellDecomposition::compute(table, Side::Left);
    let two_sided = CellDecomposition::compute(table, Side::TwoSided);

    let mut lambda_left = Vec::with_capacity(left.len());
    for cell in 0..left.len() {
        let module = CellModule::new(table, &left, cell);
        let action = specialize_action(table, &module, weights, Restriction::Full);
        let pf = pf_analyze(&rational_matrix_to_f64(&action), tol)?;
        lambda_left.push(pf.lambda);
    }

    let mut lambda_two = vec![f64::NAN; two_sided.len()];
    let mut spread = 0.0f64;
    for cell in 0..left.len() {
        let j = two_sided.cell_of(left.members(cell)[0]);
        if lambda_two[j].is_nan() {
            lambda_two[j] = lambda_left[cell];
        } else {
            let rel = (lambda_two[j] - lambda_left[cell]).abs() / lambda_two[j];
            spread = spread.max(rel);
        }
    }
    let constant = spread <= tol.rel;

    let mut violations = Vec::new();
    for a in 0..two_sided.len() {
        for b in 0..two_sided.len() {
            if a == b || !two_sided.cell_leq(a, b) {
                continue;
            }
            // a <= b in the two-sided order must give lambda(a) >= lambda(b).
            if lambda_two[a] < lambda_two[b] * (1.0 - tol.rel) {
                violations.push((a, b));
            }
        }
    }
    let monotone = violations.is_empty();

    let (labels, invariant) = match chars {
        None => (None, None),
        Some(chars) => {
            let mut all_labels = Vec::new();
            for draw in 0..invariance_draws.max(1) {
                let w = if draw == 0 {
                    weights.clone()
                } else {
                    WeightVector::random(table.system(), draw as u64)
                };
                let labels: Vec<String> = (0..left.len())
                    .map(|cell| {
                        special_module(table, chars, &left, cell, &w, tol).map(|s| s.name)
                    })
                    .collect::<Result<_, _>>()?;
                all_labels.push(labels);
            }
            let first = all_labels[0].clone();
            let invariant = all_labels.iter().all(|l| *l == first);
            (Some(all_labels), Some(invariant))
        }
    };

    let passed = constant && monotone && invariant.unwrap_or(true);
    Ok(ConjectureReport {
        lambda_per_left_cell: lambda_left,
        lambda_per_two_sided: lambda_two,
        constancy_spread: spread,
        constant_on_two_sided: constant,
        monotonicity_violations: violations,
        monotone,
        invariance_labels: labels,
        invariant_under_weights: invariant,
        passed,
    })
}
