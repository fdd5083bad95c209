//! Partitions with the dominance order, standard Young tableaux, the
//! Robinson-Schensted correspondence, Knuth equivalence, evacuation, and
//! the constructive chain witness connecting adjacent shapes through the
//! weak order.
//!
//! Permutations are one-line vectors with values `1..=n`. Products follow
//! the convention used by the Coxeter layer: `w * s_i` swaps the entries at
//! positions `i, i+1`.

use std::collections::BTreeSet;
use std::fmt;

pub type Perm = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauxError {
    #[error("partitions have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("tableaux have different shapes")]
    ShapeMismatch,
    #[error("{0} does not strictly dominate {1}")]
    NotComparable(String, String),
}

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts; trailing zeros are stripped. Panics if the parts
    /// increase anywhere.
    pub fn new(parts: Vec<u32>) -> Partition {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {parts:?}"
        );
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum::<u32>() as usize
    }

    /// The conjugate (transpose) partition.
    pub fn transpose(&self) -> Partition {
        let rows = self.part(0) as usize;
        let parts = (0..rows)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition::new(parts)
    }

    /// Dominance order: every prefix sum of `self` is at most that of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, TableauxError> {
        if self.n() != other.n() {
            return Err(TableauxError::SizeMismatch(self.n(), other.n()));
        }
        let k = self.len().max(other.len());
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 0..k {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(remaining: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition::new(acc.clone()));
                return;
            }
            for next in (1..=max.min(remaining)).rev() {
                acc.push(next);
                go(remaining - next, next, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n as u32, n as u32, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A standard Young tableau: rows and columns strictly increase and the
/// entries are exactly `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<u8>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u8>>) -> StandardTableau {
        let t = StandardTableau { rows };
        assert!(t.is_standard(), "not a standard tableau: {t:?}");
        t
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    fn is_standard(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        for (i, row) in self.rows.iter().enumerate() {
            if i + 1 < self.rows.len() && self.rows[i + 1].len() > row.len() {
                return false;
            }
            for (j, &x) in row.iter().enumerate() {
                if x == 0 || x as usize > n || seen[x as usize] {
                    return false;
                }
                seen[x as usize] = true;
                if j + 1 < row.len() && row[j + 1] <= x {
                    return false;
                }
                if i + 1 < self.rows.len() {
                    if let Some(&below) = self.rows[i + 1].get(j) {
                        if below <= x {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Position `(row, col)` of a value.
    pub fn position_of(&self, value: u8) -> Option<(usize, usize)> {
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|&x| x == value) {
                return Some((i, j));
            }
        }
        None
    }

    /// The tableau descent set: `i` such that `i+1` lies strictly below
    /// (and then automatically weakly left of) `i`.
    pub fn descents(&self) -> BTreeSet<usize> {
        let n = self.n();
        let mut out = BTreeSet::new();
        for i in 1..n {
            let (r1, _) = self.position_of(i as u8).expect("entry present");
            let (r2, _) = self.position_of(i as u8 + 1).expect("entry present");
            if r2 > r1 {
                out.insert(i);
            }
        }
        out
    }

    /// Transpose along the main diagonal.
    pub fn transpose(&self) -> StandardTableau {
        let cols = self.rows.first().map_or(0, |r| r.len());
        let rows = (0..cols)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect();
        StandardTableau::new(rows)
    }

    /// Schutzenberger evacuation: repeatedly delete the smallest entry,
    /// slide the hole out, and record the vacated cells in reverse.
    pub fn evacuation(&self) -> StandardTableau {
        let n = self.n();
        let shape = self.shape();
        let mut grid: Vec<Vec<Option<u8>>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| Some(x)).collect())
            .collect();
        let mut result: Vec<Vec<u8>> = shape
            .parts()
            .iter()
            .map(|&len| vec![0; len as usize])
            .collect();
        let filled = |grid: &Vec<Vec<Option<u8>>>, r: usize, c: usize| -> Option<u8> {
            grid.get(r).and_then(|row| row.get(c)).copied().flatten()
        };
        for step in 0..n {
            // The minimum entry of a standard tableau sits at the corner.
            let (mut r, mut c) = (0, 0);
            grid[0][0] = None;
            loop {
                match (filled(&grid, r, c + 1), filled(&grid, r + 1, c)) {
                    (None, None) => break,
                    (Some(_), None) => {
                        grid[r][c] = grid[r][c + 1].take();
                        c += 1;
                    }
                    (None, Some(_)) => {
                        grid[r][c] = grid[r + 1][c].take();
                        r += 1;
                    }
                    (Some(x), Some(y)) => {
                        if x < y {
                            grid[r][c] = grid[r][c + 1].take();
                            c += 1;
                        } else {
                            grid[r][c] = grid[r + 1][c].take();
                            r += 1;
                        }
                    }
                }
            }
            result[r][c] = (n - step) as u8;
        }
        StandardTableau::new(result)
    }
}

/// All standard tableaux of the given shape, sorted.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    // Peel the largest entry off each outer corner and recurse.
    fn go(
        shape: &mut Vec<u32>,
        n: u8,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if n == 0 {
            let mut cells = acc.clone();
            cells.reverse();
            out.push(cells);
            return;
        }
        for i in 0..shape.len() {
            let len = shape[i];
            if len == 0 || (i + 1 < shape.len() && shape[i + 1] == len) {
                continue;
            }
            shape[i] -= 1;
            acc.push((i, len as usize - 1));
            go(shape, n - 1, acc, out);
            acc.pop();
            shape[i] += 1;
        }
    }
    let mut placements = Vec::new();
    go(
        &mut shape.parts().to_vec(),
        shape.n() as u8,
        &mut Vec::new(),
        &mut placements,
    );
    let mut out: Vec<StandardTableau> = placements
        .into_iter()
        .map(|cells| {
            let mut rows: Vec<Vec<u8>> = shape
                .parts()
                .iter()
                .map(|&len| vec![0; len as usize])
                .collect();
            for (k, (r, c)) in cells.into_iter().enumerate() {
                rows[r][c] = k as u8 + 1;
            }
            StandardTableau::new(rows)
        })
        .collect();
    out.sort();
    out
}

/// Row-bump `value` into the tableau; returns the cell where the shape grew.
fn insert(rows: &mut Vec<Vec<u8>>, value: u8) -> (usize, usize) {
    let mut value = value;
    for (i, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&x| x > value) {
            None => {
                row.push(value);
                return (i, row.len() - 1);
            }
            Some(j) => {
                std::mem::swap(&mut row[j], &mut value);
            }
        }
    }
    rows.push(vec![value]);
    (rows.len() - 1, 0)
}

/// The Robinson-Schensted correspondence `w -> (P(w), Q(w))` via row bumping.
pub fn rs(w: &[u8]) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<u8>> = Vec::new();
    let mut q: Vec<Vec<u8>> = Vec::new();
    for (k, &value) in w.iter().enumerate() {
        let (r, c) = insert(&mut p, value);
        if r == q.len() {
            q.push(Vec::new());
        }
        debug_assert_eq!(q[r].len(), c);
        q[r].push(k as u8 + 1);
    }
    (StandardTableau::new(p), StandardTableau::new(q))
}

/// Inverse of [`rs`] by reverse bumping.
pub fn rs_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Perm, TableauxError> {
    if p.shape() != q.shape() {
        return Err(TableauxError::ShapeMismatch);
    }
    let n = p.n();
    let mut rows: Vec<Vec<u8>> = p.rows().to_vec();
    let mut out = vec![0u8; n];
    for k in (1..=n).rev() {
        let (mut r, _) = q.position_of(k as u8).expect("standard tableau");
        let mut value = rows[r].pop().expect("cell present");
        while r > 0 {
            r -= 1;
            let j = rows[r]
                .iter()
                .rposition(|&x| x < value)
                .expect("reverse bump always finds a smaller entry");
            std::mem::swap(&mut rows[r][j], &mut value);
        }
        out[k - 1] = value;
    }
    Ok(out)
}

/// The shape common to `P(w)` and `Q(w)`.
pub fn rs_shape(w: &[u8]) -> Partition {
    rs(w).0.shape()
}

/// Closure of `w` under the elementary Knuth moves
/// `yxz <-> yzx` (x < y <= z) and `xzy <-> zxy` (x <= y < z).
pub fn knuth_class(w: &[u8]) -> BTreeSet<Perm> {
    let mut seen: BTreeSet<Perm> = BTreeSet::new();
    let mut stack = vec![w.to_vec()];
    seen.insert(w.to_vec());
    while let Some(u) = stack.pop() {
        for i in 0..u.len().saturating_sub(2) {
            let (a, b, c) = (u[i], u[i + 1], u[i + 2]);
            let emit = |v: Perm, seen: &mut BTreeSet<Perm>, stack: &mut Vec<Perm>| {
                if seen.insert(v.clone()) {
                    stack.push(v);
                }
            };
            // yxz <-> yzx for x < y <= z (strict for permutations)
            if (b < a && a < c) || (c < a && a < b) {
                let mut v = u.clone();
                v.swap(i + 1, i + 2);
                emit(v, &mut seen, &mut stack);
            }
            // xzy <-> zxy for x <= y < z
            if (a < c && c < b) || (b < c && c < a) {
                let mut v = u.clone();
                v.swap(i, i + 1);
                emit(v, &mut seen, &mut stack);
            }
        }
    }
    seen
}

pub fn inversions(w: &[u8]) -> usize {
    let n = w.len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i] > w[j])
        .count()
}

pub fn perm_inverse(w: &[u8]) -> Perm {
    let mut out = vec![0u8; w.len()];
    for (i, &v) in w.iter().enumerate() {
        out[v as usize - 1] = i as u8 + 1;
    }
    out
}

/// Composition `(u*v)(i) = u(v(i))`.
pub fn perm_mul(u: &[u8], v: &[u8]) -> Perm {
    v.iter().map(|&i| u[i as usize - 1]).collect()
}

pub fn longest_perm(n: usize) -> Perm {
    (1..=n as u8).rev().collect()
}

/// Witness produced by [`chain_witness`]: `x` sits in the cell of `mu`,
/// `x * s` drops in length and lands in the cell of `nu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainWitness {
    pub x: Perm,
    /// Generator index: `s_i` swaps positions `i, i+1` (1-based).
    pub s: usize,
    pub nu: Partition,
}

/// Reading word of a tableau: rows bottom to top, each left to right.
pub fn reading_word(t: &StandardTableau) -> Perm {
    t.rows().iter().rev().flatten().copied().collect()
}

/// The tableau of shape `rho` that is column superstandard on each of the
/// three pieces: rows `0..r`, rows `r, r+1`, and the rest. Within a piece,
/// columns are filled top to bottom, left to right, continuing the count.
fn three_piece_superstandard(rho: &Partition, r: usize) -> StandardTableau {
    let mut rows: Vec<Vec<u8>> = rho.parts().iter().map(|&len| vec![0; len as usize]).collect();
    let mut next = 1u8;
    let fill_piece = |rows: &mut Vec<Vec<u8>>, lo: usize, hi: usize, next: &mut u8| {
        let hi = hi.min(rows.len());
        let width = (lo..hi).map(|i| rows[i].len()).max().unwrap_or(0);
        for c in 0..width {
            for row in rows.iter_mut().take(hi).skip(lo) {
                if c < row.len() {
                    row[c] = *next;
                    *next += 1;
                }
            }
        }
    };
    fill_piece(&mut rows, 0, r, &mut next);
    fill_piece(&mut rows, r, r + 2, &mut next);
    fill_piece(&mut rows, r + 2, rho.len(), &mut next);
    StandardTableau::new(rows)
}

/// Core step: given `rho` obtained from a smaller shape by raising one box
/// from row `r+1` to row `r` (0-based), produce the reading word `y` of the
/// piecewise superstandard tableau of shape `rho` and a position `s` such
/// that `y` lies in the cell of `rho` while `y*s > y` lies in the cell of
/// the lowered shape.
fn raise_step(rho: &Partition, r: usize) -> (Perm, usize) {
    let t = three_piece_superstandard(rho, r);
    let word = reading_word(&t);
    let k: u32 = (0..r).map(|i| rho.part(i)).sum();
    let target = (k + rho.part(r) + rho.part(r + 1)) as u8;
    let pos = word
        .iter()
        .position(|&v| v == target - 1)
        .expect("reading word contains every value");
    debug_assert_eq!(word[pos + 1], target);
    (word, pos + 1)
}

/// Constructive witness that the dominance order is generated by the weak
/// order: for `lambda > mu` returns `(x, s, nu)` with `x` in the two-sided
/// cell of `mu`, `xs < x`, `xs` in the cell of `nu`, and
/// `lambda >= nu > mu`. Iterating from `mu` climbs to `lambda`.
pub fn chain_witness(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<ChainWitness, TableauxError> {
    if lambda.n() != n || mu.n() != n {
        return Err(TableauxError::SizeMismatch(lambda.n(), mu.n()));
    }
    let not_comparable = || TableauxError::NotComparable(lambda.to_string(), mu.to_string());
    if lambda == mu || !mu.dominance_leq(lambda).map_err(|_| not_comparable())? {
        return Err(not_comparable());
    }

    let i = (0..)
        .find(|&i| lambda.part(i) != mu.part(i))
        .expect("distinct partitions differ somewhere");
    debug_assert!(lambda.part(i) > mu.part(i));

    if mu.part(i + 1) > mu.part(i + 2) {
        // Case 1: raise a box from row i+1 to row i of mu.
        let mut parts = mu.parts().to_vec();
        parts[i] += 1;
        parts[i + 1] -= 1;
        let nu = Partition::new(parts);
        let (y, s) = raise_step(&nu, i);
        let mut x = y.clone();
        x.swap(s - 1, s);
        Ok(ChainWitness { x, s, nu })
    } else {
        // Case 2: mu has a flat tail at rows i+1..=m; add a box at the top
        // of the tail, remove one at its bottom, and transfer the case-1
        // construction through the transpose via w0.
        let m = (i + 1..)
            .take_while(|&j| mu.part(j) == mu.part(i + 1))
            .last()
            .expect("tail is nonempty");
        let mut parts: Vec<u32> = (0..mu.len().max(i + 2)).map(|j| mu.part(j)).collect();
        if mu.part(i) == mu.part(i + 1) {
            parts[i] += 1;
        } else {
            parts[i + 1] += 1;
        }
        parts[m] -= 1;
        let nu = Partition::new(parts);

        // mu^T is nu^T with one box raised from row l+1 to row l.
        let mu_t = mu.transpose();
        let nu_t = nu.transpose();
        let l = (0..)
            .find(|&l| mu_t.part(l) != nu_t.part(l))
            .expect("transposes differ");
        debug_assert_eq!(mu_t.part(l), nu_t.part(l) + 1);
        debug_assert_eq!(mu_t.part(l + 1), nu_t.part(l + 1) - 1);

        let (y, s) = raise_step(&mu_t, l);
        let w0 = longest_perm(n);
        // x = y*w0; the descent generator is t = w0*s*w0, at position n-s.
        let x = perm_mul(&y, &w0);
        Ok(ChainWitness { x, s: n - s, nu })
    }
}

/// Pairs `(mu, lambda)` with `mu < lambda` adjacent in the dominance order.
pub fn dominance_covers(n: usize) -> Vec<(Partition, Partition)> {
    let all = Partition::all(n);
    let mut out = Vec::new();
    for lo in &all {
        for hi in &all {
            if lo == hi || !lo.dominance_leq(hi).unwrap() {
                continue;
            }
            let between = all.iter().any(|mid| {
                mid != lo
                    && mid != hi
                    && lo.dominance_leq(mid).unwrap()
                    && mid.dominance_leq(hi).unwrap()
            });
            if !between {
                out.push((lo.clone(), hi.clone()));
            }
        }
    }
    out
}

/// All permutations of `1..=n`, lexicographic.
pub fn all_perms(n: usize) -> Vec<Perm> {
    fn go(rest: &mut Vec<u8>, acc: &mut Perm, out: &mut Vec<Perm>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            acc.push(v);
            go(rest, acc, out);
            acc.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n as u8).collect(), &mut Vec::new(), &mut out);
    out
}

/// Number of standard tableaux of a shape by the hook length formula.
pub fn hook_length_count(shape: &Partition) -> u64 {
    let n = shape.n() as u64;
    let transpose = shape.transpose();
    let mut numerator = 1u64;
    for k in 1..=n {
        numerator *= k;
    }
    let mut denom = 1u64;
    for i in 0..shape.len() {
        for j in 0..shape.part(i) as usize {
            let hook = (shape.part(i) as usize - j) + (transpose.part(j) as usize - i) - 1;
            denom *= hook as u64;
        }
    }
    numerator / denom
}
