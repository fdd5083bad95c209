//! Ordinary character tables for the supported Weyl groups: symmetric
//! groups via the Murnaghan-Nakayama rule and the rank-2 system with
//! `m_st = 4` from its four linear characters plus the reflection
//! representation.

use crate::coxeter::{CoxeterSystem, Elt};
use crate::tableaux::Partition;
use std::collections::HashMap;

#[derive(Debug, Clone, thiserror::Error)]
pub enum CharsError {
    #[error("no character table for this system type: {0}")]
    UnsupportedType(String),
    #[error("character tables are inconsistent: {0}")]
    Inconsistent(String),
}

/// Exact character table with per-element class assignment.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub names: Vec<String>,
    pub dims: Vec<usize>,
    /// `values[irrep][class]`.
    pub values: Vec<Vec<i64>>,
    pub class_sizes: Vec<usize>,
    class_of: Vec<usize>,
    group_order: usize,
}

impl CharacterTable {
    pub fn irreducible_count(&self) -> usize {
        self.names.len()
    }

    pub fn value(&self, irrep: usize, w: Elt) -> i64 {
        self.values[irrep][self.class_of[w.idx()]]
    }

    pub fn class_of(&self, w: Elt) -> usize {
        self.class_of[w.idx()]
    }

    /// Decompose a module character (one exact value per element) into
    /// irreducible multiplicities.
    pub fn decompose(&self, char_values: &[i64]) -> Result<Vec<usize>, CharsError> {
        assert_eq!(char_values.len(), self.class_of.len());
        // A character is a class function; anything else signals a bug.
        let mut per_class: Vec<Option<i64>> = vec![None; self.class_sizes.len()];
        for (w, &v) in char_values.iter().enumerate() {
            let c = self.class_of[w];
            match per_class[c] {
                None => per_class[c] = Some(v),
                Some(prev) if prev == v => {}
                Some(prev) => {
                    return Err(CharsError::Inconsistent(format!(
                        "character is not a class function: class {c} has values {prev} and {v}"
                    )))
                }
            }
        }
        let mut out = Vec::with_capacity(self.names.len());
        for i in 0..self.names.len() {
            let total: i64 = per_class
                .iter()
                .enumerate()
                .map(|(c, v)| self.class_sizes[c] as i64 * v.unwrap_or(0) * self.values[i][c])
                .sum();
            if total % self.group_order as i64 != 0 || total < 0 {
                return Err(CharsError::Inconsistent(format!(
                    "inner product with {} is {total}/{}",
                    self.names[i], self.group_order
                )));
            }
            out.push((total / self.group_order as i64) as usize);
        }
        Ok(out)
    }

    /// Orthonormality of the irreducible characters.
    pub fn verify_orthonormal(&self) -> Result<(), CharsError> {
        for i in 0..self.names.len() {
            for j in 0..self.names.len() {
                let total: i64 = (0..self.class_sizes.len())
                    .map(|c| self.class_sizes[c] as i64 * self.values[i][c] * self.values[j][c])
                    .sum();
                let expect = if i == j { self.group_order as i64 } else { 0 };
                if total != expect {
                    return Err(CharsError::Inconsistent(format!(
                        "<{}, {}> = {total}/{}",
                        self.names[i], self.names[j], self.group_order
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Build the character table for a supported system.
pub fn character_table(sys: &CoxeterSystem) -> Result<CharacterTable, CharsError> {
    if sys.is_type_a() {
        return Ok(type_a_table(sys));
    }
    if sys.rank() == 2 && sys.coxeter_exponent(0, 1) == 4 {
        return b2_table(sys);
    }
    Err(CharsError::UnsupportedType(format!(
        "rank {} system with exponents {:?}",
        sys.rank(),
        (0..sys.rank())
            .flat_map(|s| (s + 1..sys.rank()).map(move |t| sys.coxeter_exponent(s, t)))
            .collect::<Vec<_>>()
    )))
}

fn cycle_type(line: &[u8]) -> Partition {
    let n = line.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            len += 1;
            at = line[at] as usize - 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts)
}

/// Murnaghan-Nakayama: strip border strips of size `mu[0]` via beta-numbers.
fn mn_char(
    lambda: &[u32],
    mu: &[u32],
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>,
) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    if let Some(&hit) = memo.get(&(lambda.to_vec(), mu.to_vec())) {
        return hit;
    }
    let r = mu[0];
    let rest = &mu[1..];
    let k = lambda.len();
    let beta: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (k - 1 - i) as i64)
        .collect();
    let mut total = 0i64;
    for i in 0..k {
        let target = beta[i] - r as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let crossings = beta.iter().filter(|&&b| target < b && b < beta[i]).count();
        let sign = if crossings % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let new_lambda: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - (k - 1 - j) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        total += sign * mn_char(&new_lambda, rest, memo);
    }
    memo.insert((lambda.to_vec(), mu.to_vec()), total);
    total
}

fn type_a_table(sys: &CoxeterSystem) -> CharacterTable {
    let n = sys.rank() + 1;
    let class_count = sys.conjugacy_class_count();
    let mut class_sizes = vec![0usize; class_count];
    for w in sys.elements() {
        class_sizes[sys.conjugacy_class_of(w)] += 1;
    }
    let class_types: Vec<Partition> = (0..class_count)
        .map(|c| {
            let rep = sys.conjugacy_class_rep(c);
            cycle_type(sys.permutation(rep).expect("type A"))
        })
        .collect();
    let shapes = Partition::all(n);
    let mut memo = HashMap::new();
    let mut values = Vec::with_capacity(shapes.len());
    let mut dims = Vec::with_capacity(shapes.len());
    let mut names = Vec::with_capacity(shapes.len());
    for shape in &shapes {
        let row: Vec<i64> = class_types
            .iter()
            .map(|ct| mn_char(shape.parts(), ct.parts(), &mut memo))
            .collect();
        let identity_class = sys.conjugacy_class_of(sys.identity());
        dims.push(row[identity_class] as usize);
        names.push(shape.to_string());
        values.push(row);
    }
    CharacterTable {
        names,
        dims,
        values,
        class_sizes,
        class_of: sys.elements().map(|w| sys.conjugacy_class_of(w)).collect(),
        group_order: sys.size(),
    }
}

fn b2_table(sys: &CoxeterSystem) -> Result<CharacterTable, CharsError> {
    let class_count = sys.conjugacy_class_count();
    let mut class_sizes = vec![0usize; class_count];
    for w in sys.elements() {
        class_sizes[sys.conjugacy_class_of(w)] += 1;
    }
    // Linear characters from sign assignments per generator; the
    // two-dimensional one is the trace of the reflection representation.
    let linear = |signs: [i64; 2]| -> Vec<i64> {
        (0..class_count)
            .map(|c| {
                let rep = sys.conjugacy_class_rep(c);
                sys.word(rep)
                    .iter()
                    .map(|&s| signs[s as usize])
                    .product::<i64>()
            })
            .collect()
    };
    let refl: Vec<Vec<Vec<i64>>> = (0..2).map(|s| sys.reflection_rep_gen(s)).collect();
    let geom: Vec<i64> = (0..class_count)
        .map(|c| {
            let rep = sys.conjugacy_class_rep(c);
            let mut m = vec![vec![1, 0], vec![0, 1]];
            for &s in sys.word(rep) {
                m = mat_mul_2x2(&refl[s as usize], &m);
            }
            m[0][0] + m[1][1]
        })
        .collect();
    let names = vec![
        "triv".to_string(),
        "sgn".to_string(),
        "sgn_s".to_string(),
        "sgn_t".to_string(),
        "geom".to_string(),
    ];
    let values = vec![
        linear([1, 1]),
        linear([-1, -1]),
        linear([1, -1]),
        linear([-1, 1]),
        geom,
    ];
    let identity_class = sys.conjugacy_class_of(sys.identity());
    let dims = values.iter().map(|row| row[identity_class] as usize).collect();
    let table = CharacterTable {
        names,
        dims,
        values,
        class_sizes,
        class_of: sys.elements().map(|w| sys.conjugacy_class_of(w)).collect(),
        group_order: sys.size(),
    };
    table.verify_orthonormal()?;
    Ok(table)
}

fn mat_mul_2x2(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = (0..2).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}
