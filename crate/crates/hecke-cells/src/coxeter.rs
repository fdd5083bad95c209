//! Finite crystallographic Coxeter groups enumerated from a generalized
//! Cartan matrix.
//!
//! Elements are represented by their permutation action on the root system
//! spanned by the simple roots, which makes the construction uniform across
//! types: no symmetric-group special casing in the core. The enumerated
//! system carries length, descent sets, multiplication tables, inverses,
//! Bruhat order and the longest element; everything is immutable after
//! construction and safe to share across threads.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::Mutex;

/// Default cap on the number of enumerated elements (covers S8 with margin).
pub const DEFAULT_ELEMENT_BOUND: usize = 50_000;

/// Bruhat rows are materialized eagerly up to this many elements.
const EAGER_BRUHAT_BOUND: usize = 1_000;

/// Handle to an element of a [`CoxeterSystem`]; indices follow the system's
/// deterministic order (by length, then ShortLex on canonical words).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elt(pub u32);

impl Elt {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum CoxeterError {
    #[error("malformed Cartan matrix: {0}")]
    MalformedCartan(String),
    #[error("group closure exceeded the element bound {bound}; the group is infinite or the bound too low")]
    InfiniteGroup { bound: usize },
    #[error("unknown system preset `{0}`")]
    UnknownPreset(String),
}

/// A generalized Cartan matrix together with generator labels.
///
/// Off-diagonal products `a_ij * a_ji` must lie in `{0,1,2,3}`, giving Coxeter
/// exponents `m_st` in `{2,3,4,6}`; a product of 4 or more would make the
/// dihedral subgroup infinite and is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanSpec {
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
}

impl CartanSpec {
    /// Named presets: `A1`..`A7`, `B2`, `B3`.
    pub fn preset(name: &str) -> Result<CartanSpec, CoxeterError> {
        let type_a = |n: usize| {
            let matrix = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                2
                            } else if i.abs_diff(j) == 1 {
                                -1
                            } else {
                                0
                            }
                        })
                        .collect()
                })
                .collect();
            CartanSpec {
                labels: (1..=n).map(|i| i.to_string()).collect(),
                matrix,
            }
        };
        match name {
            "A1" => Ok(type_a(1)),
            "A2" => Ok(type_a(2)),
            "A3" => Ok(type_a(3)),
            "A4" => Ok(type_a(4)),
            "A5" => Ok(type_a(5)),
            "A6" => Ok(type_a(6)),
            "A7" => Ok(type_a(7)),
            "B2" => Ok(CartanSpec {
                labels: vec!["1".into(), "2".into()],
                matrix: vec![vec![2, -2], vec![-1, 2]],
            }),
            "B3" => Ok(CartanSpec {
                labels: vec!["1".into(), "2".into(), "3".into()],
                matrix: vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]],
            }),
            other => Err(CoxeterError::UnknownPreset(other.to_string())),
        }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// Check the structural invariants and return the Coxeter matrix `m_st`.
    pub fn coxeter_exponents(&self) -> Result<Vec<Vec<u32>>, CoxeterError> {
        let n = self.rank();
        let bad = |msg: String| Err(CoxeterError::MalformedCartan(msg));
        if n == 0 {
            return bad("empty generator list".into());
        }
        if self.matrix.len() != n || self.matrix.iter().any(|row| row.len() != n) {
            return bad(format!("matrix must be {n}x{n} to match the labels"));
        }
        let mut uniq = self.labels.clone();
        uniq.sort();
        uniq.dedup();
        if uniq.len() != n {
            return bad("generator labels must be distinct".into());
        }
        let mut m = vec![vec![0u32; n]; n];
        for i in 0..n {
            if self.matrix[i][i] != 2 {
                return bad(format!("diagonal entry a[{i}][{i}] must be 2"));
            }
            m[i][i] = 1;
            for j in 0..n {
                if i == j {
                    continue;
                }
                if self.matrix[i][j] > 0 {
                    return bad(format!("off-diagonal entry a[{i}][{j}] must be <= 0"));
                }
                m[i][j] = match self.matrix[i][j] * self.matrix[j][i] {
                    0 => 2,
                    1 => 3,
                    2 => 4,
                    3 => 6,
                    _ => {
                        return bad(format!(
                            "a[{i}][{j}]*a[{j}][{i}] >= 4: the generated group is infinite"
                        ))
                    }
                };
            }
        }
        Ok(m)
    }
}

/// Lazily materialized Bruhat down-sets, one bitset row per element.
enum BruhatStore {
    Eager(Vec<Vec<u64>>),
    Lazy(Mutex<HashMap<u32, std::sync::Arc<Vec<u64>>>>),
}

/// A fully enumerated finite crystallographic Coxeter group.
pub struct CoxeterSystem {
    pub spec: CartanSpec,
    coxeter_matrix: Vec<Vec<u32>>,
    size: usize,
    rank: usize,
    /// Canonical (ShortLex-minimal) reduced words, generator indices.
    words: Vec<Vec<u8>>,
    names: Vec<String>,
    name_index: HashMap<String, Elt>,
    lengths: Vec<u32>,
    left_desc: Vec<u32>,
    right_desc: Vec<u32>,
    /// Flattened `rank * size` multiplication tables.
    left_mul: Vec<u32>,
    right_mul: Vec<u32>,
    inverse: Vec<u32>,
    longest: Elt,
    positive_roots: usize,
    /// One-line permutations when the Cartan matrix is the type-A chain.
    perms: Option<Vec<Vec<u8>>>,
    class_of: Vec<u32>,
    class_reps: Vec<Elt>,
    bruhat: BruhatStore,
}

impl CoxeterSystem {
    pub fn build(spec: CartanSpec) -> Result<CoxeterSystem, CoxeterError> {
        CoxeterSystem::build_bounded(spec, DEFAULT_ELEMENT_BOUND)
    }

    pub fn build_preset(name: &str) -> Result<CoxeterSystem, CoxeterError> {
        CoxeterSystem::build(CartanSpec::preset(name)?)
    }

    pub fn build_bounded(spec: CartanSpec, bound: usize) -> Result<CoxeterSystem, CoxeterError> {
        let coxeter_matrix = spec.coxeter_exponents()?;
        let rank = spec.rank();
        let cartan = &spec.matrix;

        // Close the simple roots under all reflections. Coordinates are in
        // the simple-root basis; s_i(x)_i = x_i - sum_j a_ij x_j.
        let reflect = |i: usize, root: &[i64]| -> Vec<i64> {
            let mut out = root.to_vec();
            let pairing: i64 = (0..rank).map(|j| cartan[i][j] * root[j]).sum();
            out[i] -= pairing;
            out
        };
        let root_cap = bound.max(1_000);
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut root_index: HashMap<Vec<i64>, u32> = HashMap::new();
        for i in 0..rank {
            let mut alpha = vec![0i64; rank];
            alpha[i] = 1;
            root_index.insert(alpha.clone(), roots.len() as u32);
            roots.push(alpha);
        }
        let mut head = 0;
        while head < roots.len() {
            let current = roots[head].clone();
            head += 1;
            for i in 0..rank {
                let image = reflect(i, &current);
                if !root_index.contains_key(&image) {
                    if roots.len() >= root_cap {
                        return Err(CoxeterError::InfiniteGroup { bound });
                    }
                    root_index.insert(image.clone(), roots.len() as u32);
                    roots.push(image);
                }
            }
        }
        let n_roots = roots.len();
        let is_negative: Vec<bool> = roots.iter().map(|r| r.iter().all(|&c| c <= 0)).collect();
        let simple_root_idx: Vec<u32> = (0..rank)
            .map(|i| {
                let mut alpha = vec![0i64; rank];
                alpha[i] = 1;
                root_index[&alpha]
            })
            .collect();

        // Generator action as permutations of the root list.
        let gen_perm: Vec<Vec<u32>> = (0..rank)
            .map(|i| {
                roots
                    .iter()
                    .map(|r| root_index[&reflect(i, r)])
                    .collect()
            })
            .collect();

        // Breadth-first closure of the group itself;
        // (w * s_i) acts by r -> w(s_i(r)).
        let mut perm_index: HashMap<Vec<u32>, u32> = HashMap::new();
        let identity: Vec<u32> = (0..n_roots as u32).collect();
        perm_index.insert(identity.clone(), 0);
        let mut elements: Vec<Vec<u32>> = vec![identity];
        let mut right_raw: Vec<u32> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            for gp in gen_perm.iter() {
                let product: Vec<u32> = (0..n_roots).map(|r| w[gp[r] as usize]).collect();
                let id = match perm_index.get(&product) {
                    Some(&id) => id,
                    None => {
                        if elements.len() >= bound {
                            return Err(CoxeterError::InfiniteGroup { bound });
                        }
                        let id = elements.len() as u32;
                        perm_index.insert(product.clone(), id);
                        elements.push(product);
                        id
                    }
                };
                right_raw.push(id);
            }
            head += 1;
        }
        let size = elements.len();

        let length_of = |perm: &[u32]| -> u32 {
            (0..n_roots)
                .filter(|&r| !is_negative[r] && is_negative[perm[r] as usize])
                .count() as u32
        };
        let lengths_raw: Vec<u32> = elements.iter().map(|p| length_of(p)).collect();

        let inverse_raw: Vec<u32> = elements
            .iter()
            .map(|p| {
                let mut inv = vec![0u32; n_roots];
                for (r, &img) in p.iter().enumerate() {
                    inv[img as usize] = r as u32;
                }
                perm_index[&inv]
            })
            .collect();

        // Right descents: w(alpha_s) negative. Left descents via the inverse.
        let right_desc_raw: Vec<u32> = elements
            .iter()
            .map(|p| {
                (0..rank)
                    .filter(|&i| is_negative[p[simple_root_idx[i] as usize] as usize])
                    .fold(0u32, |acc, i| acc | (1 << i))
            })
            .collect();
        let left_desc_raw: Vec<u32> = (0..size)
            .map(|w| right_desc_raw[inverse_raw[w] as usize])
            .collect();

        // Canonical words by repeatedly stripping the smallest left descent.
        // left-multiplication in raw ids: s*w = (w^-1 * s)^-1.
        let raw_left = |s: usize, w: usize| -> u32 {
            inverse_raw[right_raw[inverse_raw[w] as usize * rank + s] as usize]
        };
        let mut order: Vec<u32> = (0..size as u32).collect();
        order.sort_by_key(|&w| lengths_raw[w as usize]);
        let mut words_raw: Vec<Vec<u8>> = vec![Vec::new(); size];
        for &w in &order {
            let w = w as usize;
            if lengths_raw[w] == 0 {
                continue;
            }
            let s = (0..rank)
                .find(|&i| left_desc_raw[w] & (1 << i) != 0)
                .expect("non-identity element has a left descent");
            let rest = raw_left(s, w) as usize;
            let mut word = Vec::with_capacity(lengths_raw[w] as usize);
            word.push(s as u8);
            word.extend_from_slice(&words_raw[rest]);
            words_raw[w] = word;
        }

        // Deterministic element order: by length, then ShortLex on words.
        let mut order: Vec<u32> = (0..size as u32).collect();
        order.sort_by(|&a, &b| {
            let (a, b) = (a as usize, b as usize);
            lengths_raw[a]
                .cmp(&lengths_raw[b])
                .then_with(|| words_raw[a].cmp(&words_raw[b]))
        });
        let mut new_id = vec![0u32; size];
        for (new, &old) in order.iter().enumerate() {
            new_id[old as usize] = new as u32;
        }

        let words: Vec<Vec<u8>> = order.iter().map(|&o| words_raw[o as usize].clone()).collect();
        let lengths: Vec<u32> = order.iter().map(|&o| lengths_raw[o as usize]).collect();
        let left_desc: Vec<u32> = order.iter().map(|&o| left_desc_raw[o as usize]).collect();
        let right_desc: Vec<u32> = order.iter().map(|&o| right_desc_raw[o as usize]).collect();
        let inverse: Vec<u32> = order
            .iter()
            .map(|&o| new_id[inverse_raw[o as usize] as usize])
            .collect();
        let mut right_mul = vec![0u32; size * rank];
        for (new, &old) in order.iter().enumerate() {
            for s in 0..rank {
                right_mul[new * rank + s] = new_id[right_raw[old as usize * rank + s] as usize];
            }
        }
        let mut left_mul = vec![0u32; size * rank];
        for w in 0..size {
            for s in 0..rank {
                left_mul[w * rank + s] =
                    inverse[right_mul[inverse[w] as usize * rank + s] as usize];
            }
        }

        let labels = &spec.labels;
        let names: Vec<String> = words
            .iter()
            .map(|word| {
                if word.is_empty() {
                    "e".to_string()
                } else {
                    word.iter().map(|&s| labels[s as usize].as_str()).collect()
                }
            })
            .collect();
        let name_index: HashMap<String, Elt> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), Elt(i as u32)))
            .collect();

        let positive_roots = n_roots / 2;
        let longest = Elt((size - 1) as u32);

        // Structural sanity: exactly one element with empty left descent set
        // (the identity) and one with the full set (the longest element).
        let full_mask = if rank == 32 { u32::MAX } else { (1u32 << rank) - 1 };
        let empties = left_desc.iter().filter(|&&d| d == 0).count();
        let fulls = left_desc.iter().filter(|&&d| d == full_mask).count();
        if empties != 1 || fulls != 1 || left_desc[longest.idx()] != full_mask {
            return Err(CoxeterError::MalformedCartan(
                "enumeration produced inconsistent descent tables".into(),
            ));
        }
        if lengths[longest.idx()] as usize != positive_roots {
            return Err(CoxeterError::MalformedCartan(
                "longest element length does not match the positive root count".into(),
            ));
        }

        // One-line permutations when the Cartan matrix is the type-A chain.
        let is_type_a = (0..rank).all(|i| {
            (0..rank).all(|j| {
                let expect = if i == j {
                    2
                } else if i.abs_diff(j) == 1 {
                    -1
                } else {
                    0
                };
                cartan[i][j] == expect
            })
        });
        let perms = is_type_a.then(|| {
            let n = rank + 1;
            words
                .iter()
                .map(|word| {
                    let mut line: Vec<u8> = (1..=n as u8).collect();
                    for &s in word {
                        line.swap(s as usize, s as usize + 1);
                    }
                    line
                })
                .collect::<Vec<_>>()
        });

        // Conjugacy classes by closure under conjugation with generators.
        let mut class_of = vec![u32::MAX; size];
        let mut class_reps = Vec::new();
        for w in 0..size {
            if class_of[w] != u32::MAX {
                continue;
            }
            let class = class_reps.len() as u32;
            class_reps.push(Elt(w as u32));
            let mut stack = vec![w];
            class_of[w] = class;
            while let Some(x) = stack.pop() {
                for s in 0..rank {
                    let y = right_mul[left_mul[x * rank + s] as usize * rank + s] as usize;
                    if class_of[y] == u32::MAX {
                        class_of[y] = class;
                        stack.push(y);
                    }
                }
            }
        }

        let mut system = CoxeterSystem {
            spec,
            coxeter_matrix,
            size,
            rank,
            words,
            names,
            name_index,
            lengths,
            left_desc,
            right_desc,
            left_mul,
            right_mul,
            inverse,
            longest,
            positive_roots,
            perms,
            class_of,
            class_reps,
            bruhat: BruhatStore::Lazy(Mutex::new(HashMap::new())),
        };
        if size <= EAGER_BRUHAT_BOUND {
            // Elements are length-sorted, so each row's dependency is cached
            // before it is needed.
            let rows = (0..size)
                .map(|w| system.bruhat_row(Elt(w as u32)).as_ref().clone())
                .collect();
            system.bruhat = BruhatStore::Eager(rows);
        }
        Ok(system)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        (0..self.size as u32).map(Elt)
    }

    pub fn identity(&self) -> Elt {
        Elt(0)
    }

    pub fn longest_element(&self) -> Elt {
        self.longest
    }

    pub fn positive_roots(&self) -> usize {
        self.positive_roots
    }

    pub fn coxeter_exponent(&self, s: usize, t: usize) -> u32 {
        self.coxeter_matrix[s][t]
    }

    pub fn length(&self, w: Elt) -> u32 {
        self.lengths[w.idx()]
    }

    pub fn name(&self, w: Elt) -> &str {
        &self.names[w.idx()]
    }

    pub fn element_by_name(&self, name: &str) -> Option<Elt> {
        self.name_index.get(name).copied()
    }

    /// Canonical ShortLex-minimal reduced word, as generator indices.
    pub fn word(&self, w: Elt) -> &[u8] {
        &self.words[w.idx()]
    }

    pub fn inverse(&self, w: Elt) -> Elt {
        Elt(self.inverse[w.idx()])
    }

    pub fn left_mul(&self, s: usize, w: Elt) -> Elt {
        Elt(self.left_mul[w.idx() * self.rank + s])
    }

    pub fn right_mul(&self, w: Elt, s: usize) -> Elt {
        Elt(self.right_mul[w.idx() * self.rank + s])
    }

    /// Group product via the canonical word of `x`.
    pub fn mul(&self, x: Elt, y: Elt) -> Elt {
        let mut acc = y;
        for &s in self.words[x.idx()].iter().rev() {
            acc = self.left_mul(s as usize, acc);
        }
        acc
    }

    pub fn left_descents(&self, w: Elt) -> DescentSet {
        DescentSet { mask: self.left_desc[w.idx()], rank: self.rank }
    }

    pub fn right_descents(&self, w: Elt) -> DescentSet {
        DescentSet { mask: self.right_desc[w.idx()], rank: self.rank }
    }

    pub fn is_left_descent(&self, s: usize, w: Elt) -> bool {
        self.left_desc[w.idx()] & (1 << s) != 0
    }

    pub fn is_right_descent(&self, w: Elt, s: usize) -> bool {
        self.right_desc[w.idx()] & (1 << s) != 0
    }

    /// One-line permutation of `w` when the system is the type-A chain.
    pub fn permutation(&self, w: Elt) -> Option<&[u8]> {
        self.perms.as_ref().map(|p| p[w.idx()].as_slice())
    }

    pub fn is_type_a(&self) -> bool {
        self.perms.is_some()
    }

    /// Look up the element with the given one-line permutation (type A only).
    pub fn element_from_permutation(&self, line: &[u8]) -> Option<Elt> {
        let perms = self.perms.as_ref()?;
        (0..self.size).map(|i| Elt(i as u32)).find(|&w| perms[w.idx()] == line)
    }

    pub fn conjugacy_class_of(&self, w: Elt) -> usize {
        self.class_of[w.idx()] as usize
    }

    pub fn conjugacy_class_count(&self) -> usize {
        self.class_reps.len()
    }

    pub fn conjugacy_class_rep(&self, class: usize) -> Elt {
        self.class_reps[class]
    }

    /// Matrix of the generator `s` in the reflection representation, acting
    /// on the simple-root basis (columns are images of basis vectors).
    pub fn reflection_rep_gen(&self, s: usize) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut m = vec![vec![0i64; n]; n];
        for k in 0..n {
            m[k][k] = 1;
            m[s][k] -= self.spec.matrix[s][k];
        }
        m
    }

    fn compute_bruhat_row(&self, y: Elt) -> Vec<u64> {
        let blocks = self.size.div_ceil(64);
        let mut row = vec![0u64; blocks];
        if self.lengths[y.idx()] == 0 {
            row[0] |= 1;
            return row;
        }
        let s = self
            .left_descents(y)
            .iter()
            .next()
            .expect("non-identity element has a left descent");
        let prev = self.bruhat_row(self.left_mul(s, y));
        for x in 0..self.size {
            let test = if self.is_left_descent(s, Elt(x as u32)) {
                self.left_mul(s, Elt(x as u32)).idx()
            } else {
                x
            };
            if prev[test / 64] & (1 << (test % 64)) != 0 {
                row[x / 64] |= 1 << (x % 64);
            }
        }
        row
    }

    fn bruhat_row(&self, y: Elt) -> std::sync::Arc<Vec<u64>> {
        match &self.bruhat {
            BruhatStore::Eager(rows) => std::sync::Arc::new(rows[y.idx()].clone()),
            BruhatStore::Lazy(cache) => {
                if let Some(row) = cache.lock().unwrap().get(&y.0) {
                    return row.clone();
                }
                let row = std::sync::Arc::new(self.compute_bruhat_row(y));
                cache.lock().unwrap().insert(y.0, row.clone());
                row
            }
        }
    }

    /// Bruhat order `x <= y`.
    pub fn bruhat_leq(&self, x: Elt, y: Elt) -> bool {
        if self.lengths[x.idx()] > self.lengths[y.idx()] {
            return false;
        }
        match &self.bruhat {
            BruhatStore::Eager(rows) => rows[y.idx()][x.idx() / 64] & (1 << (x.idx() % 64)) != 0,
            BruhatStore::Lazy(_) => {
                let row = self.bruhat_row(y);
                row[x.idx() / 64] & (1 << (x.idx() % 64)) != 0
            }
        }
    }

    /// All `x <= y`, in system order.
    pub fn bruhat_downset(&self, y: Elt) -> Vec<Elt> {
        let row = self.bruhat_row(y);
        (0..self.size)
            .filter(|&x| row[x / 64] & (1 << (x % 64)) != 0)
            .map(|x| Elt(x as u32))
            .collect()
    }
}

/// A set of generator indices stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DescentSet {
    mask: u32,
    rank: usize,
}

impl DescentSet {
    pub fn contains(&self, s: usize) -> bool {
        self.mask & (1 << s) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(|&s| self.mask & (1 << s) != 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_builds_s3() {
        let sys = CoxeterSystem::build_preset("A2").unwrap();
        assert_eq!(sys.size(), 6);
        assert_eq!(sys.coxeter_exponent(0, 1), 3);
        assert_eq!(sys.length(sys.longest_element()), 3);
        assert_eq!(sys.name(sys.identity()), "e");
        assert_eq!(sys.name(sys.longest_element()), "121");
    }

    #[test]
    fn b2_builds_dihedral8() {
        let sys = CoxeterSystem::build_preset("B2").unwrap();
        assert_eq!(sys.size(), 8);
        assert_eq!(sys.coxeter_exponent(0, 1), 4);
        assert_eq!(sys.name(sys.longest_element()), "1212");
        // The paper's element names all resolve.
        for name in ["2", "12", "212", "21", "121"] {
            assert!(sys.element_by_name(name).is_some(), "missing {name}");
        }
    }

    #[test]
    fn a3_has_24_elements() {
        let sys = CoxeterSystem::build_preset("A3").unwrap();
        assert_eq!(sys.size(), 24);
        assert_eq!(sys.length(sys.longest_element()), 6);
        assert_eq!(sys.positive_roots(), 6);
    }

    #[test]
    fn known_orders() {
        for (name, order) in [("A1", 2), ("A4", 120), ("B3", 48)] {
            let sys = CoxeterSystem::build_preset(name).unwrap();
            assert_eq!(sys.size(), order, "{name}");
        }
    }

    #[test]
    fn element_attributes_examples() {
        let s3 = CoxeterSystem::build_preset("A2").unwrap();
        let e = s3.identity();
        assert_eq!(s3.length(e), 0);
        assert!(s3.left_descents(e).is_empty());
        assert_eq!(s3.inverse(e), e);
        let w0 = s3.longest_element();
        assert_eq!(s3.length(w0), 3);
        assert_eq!(s3.left_descents(w0).len(), 2);

        let b2 = CoxeterSystem::build_preset("B2").unwrap();
        let w = b2.element_by_name("21").unwrap();
        assert_eq!(b2.left_descents(w).iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(b2.right_descents(w).iter().collect::<Vec<_>>(), vec![0]);
        assert_eq!(b2.name(b2.inverse(w)), "12");
    }

    #[test]
    fn descent_length_step() {
        let sys = CoxeterSystem::build_preset("A3").unwrap();
        for w in sys.elements() {
            for s in 0..sys.rank() {
                let ws = sys.right_mul(w, s);
                let expect = if sys.is_right_descent(w, s) {
                    sys.length(w) - 1
                } else {
                    sys.length(w) + 1
                };
                assert_eq!(sys.length(ws), expect);
            }
        }
    }

    #[test]
    fn defining_relations_hold() {
        for name in ["A3", "B2", "B3"] {
            let sys = CoxeterSystem::build_preset(name).unwrap();
            for w in sys.elements() {
                for s in 0..sys.rank() {
                    assert_eq!(sys.right_mul(sys.right_mul(w, s), s), w);
                    for t in 0..sys.rank() {
                        if s == t {
                            continue;
                        }
                        let m = sys.coxeter_exponent(s, t);
                        let mut x = w;
                        for k in 0..2 * m {
                            x = sys.right_mul(x, if k % 2 == 0 { s } else { t });
                        }
                        assert_eq!(x, w, "braid relation ({s},{t})^{m} in {name}");
                    }
                }
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let sys = CoxeterSystem::build_preset("A2").unwrap();
        let e = sys.identity();
        let w0 = sys.longest_element();
        let s1 = sys.element_by_name("1").unwrap();
        let s1s2 = sys.element_by_name("12").unwrap();
        for w in sys.elements() {
            assert!(sys.bruhat_leq(e, w));
            assert!(sys.bruhat_leq(w, w0));
        }
        assert!(sys.bruhat_leq(s1, s1s2));
        assert!(!sys.bruhat_leq(s1s2, s1));
    }

    #[test]
    fn type_a_permutations_round_trip() {
        let sys = CoxeterSystem::build_preset("A3").unwrap();
        for w in sys.elements() {
            let line = sys.permutation(w).unwrap().to_vec();
            assert_eq!(sys.element_from_permutation(&line), Some(w));
            // Group-theoretic descents match one-line inversions.
            for s in 0..sys.rank() {
                assert_eq!(sys.is_right_descent(w, s), line[s] > line[s + 1]);
            }
            // Word length equals the stated length.
            assert_eq!(sys.word(w).len() as u32, sys.length(w));
        }
    }

    #[test]
    fn left_descents_match_inverse_permutation() {
        let sys = CoxeterSystem::build_preset("A3").unwrap();
        for w in sys.elements() {
            let inv = sys.inverse(w);
            let line = sys.permutation(inv).unwrap();
            for s in 0..sys.rank() {
                assert_eq!(sys.is_left_descent(s, w), line[s] > line[s + 1]);
            }
        }
    }

    #[test]
    fn affine_cartan_is_rejected() {
        // Affine A2: pairwise valid exponents but an infinite group.
        let spec = CartanSpec {
            labels: vec!["1".into(), "2".into(), "3".into()],
            matrix: vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]],
        };
        match CoxeterSystem::build_bounded(spec, 2_000) {
            Err(CoxeterError::InfiniteGroup { .. }) => {}
            other => panic!("expected InfiniteGroup, got {:?}", other.map(|s| s.size())),
        }
    }

    #[test]
    fn malformed_cartan_is_rejected() {
        let spec = CartanSpec {
            labels: vec!["1".into(), "2".into()],
            matrix: vec![vec![2, -2], vec![-2, 2]],
        };
        assert!(matches!(
            CoxeterSystem::build(spec),
            Err(CoxeterError::MalformedCartan(_))
        ));
        let spec = CartanSpec {
            labels: vec!["1".into(), "2".into()],
            matrix: vec![vec![2, 1], vec![1, 2]],
        };
        assert!(matches!(
            CoxeterSystem::build(spec),
            Err(CoxeterError::MalformedCartan(_))
        ));
    }

    #[test]
    fn mul_is_consistent_with_tables() {
        let sys = CoxeterSystem::build_preset("B2").unwrap();
        let a = sys.element_by_name("12").unwrap();
        let b = sys.element_by_name("21").unwrap();
        // 12 * 21 = 1221 = 11 = e? No: 12*21 -> 1(22)1 = 11 = e.
        assert_eq!(sys.mul(a, b), sys.identity());
        let c = sys.element_by_name("121").unwrap();
        assert_eq!(sys.mul(c, sys.inverse(c)), sys.identity());
    }
}
