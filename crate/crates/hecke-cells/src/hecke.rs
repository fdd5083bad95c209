//! Exact Hecke algebra arithmetic in the standard basis, the bar involution,
//! the iota anti-involution, and the Kazhdan-Lusztig basis in Soergel's
//! normalization.
//!
//! The defining relations are `H_s^2 = (v^-1 - v) H_s + 1` and
//! `H_x H_y = H_xy` when lengths add. The KL element `b_w` is the unique
//! bar-invariant element in `H_w + sum_{y<w} vZ[v] H_y`; it is computed by
//! the inductive recursion `b_w = b_s b_{sw} - sum mu(y, sw) b_y` and
//! memoized per element. Completed tables are immutable and safe to read
//! concurrently; construction runs sequentially in length order.

use crate::coxeter::{CoxeterSystem, Elt};
use crate::laurent::LaurentPoly;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

/// An element of the Hecke algebra: a finite map from group elements to
/// nonzero Laurent polynomial coefficients in the standard basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HeckeElt {
    terms: BTreeMap<Elt, LaurentPoly>,
}

impl HeckeElt {
    pub fn zero() -> HeckeElt {
        HeckeElt::default()
    }

    /// The standard basis element `H_x`.
    pub fn std(x: Elt) -> HeckeElt {
        let mut terms = BTreeMap::new();
        terms.insert(x, LaurentPoly::one());
        HeckeElt { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Elt, LaurentPoly)>>(iter: I) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (x, p) in iter {
            out.add_term(x, &p);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: Elt) -> LaurentPoly {
        self.terms.get(&x).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Elt, &LaurentPoly)> {
        self.terms.iter().map(|(x, p)| (*x, p))
    }

    pub fn support(&self) -> impl Iterator<Item = Elt> + '_ {
        self.terms.keys().copied()
    }

    pub fn add_term(&mut self, x: Elt, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(x).or_insert_with(LaurentPoly::zero);
        *entry += p;
        if entry.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn add_assign(&mut self, other: &HeckeElt) {
        for (x, p) in &other.terms {
            self.add_term(*x, p);
        }
    }

    pub fn sub_assign(&mut self, other: &HeckeElt) {
        for (x, p) in &other.terms {
            self.add_term(*x, &-p);
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &LaurentPoly, other: &HeckeElt) {
        if c.is_zero() {
            return;
        }
        for (x, p) in &other.terms {
            self.add_term(*x, &(c * p));
        }
    }

    /// Left multiplication by the standard generator: `H_s * self`.
    pub fn left_mul_std_gen(&self, sys: &CoxeterSystem, s: usize) -> HeckeElt {
        let mut out = HeckeElt::zero();
        let shift = &LaurentPoly::v_pow(-1) - &LaurentPoly::v();
        for (y, p) in &self.terms {
            let sy = sys.left_mul(s, *y);
            out.add_term(sy, p);
            if sys.is_left_descent(s, *y) {
                out.add_term(*y, &(&shift * p));
            }
        }
        out
    }

    /// Right multiplication by the standard generator: `self * H_s`.
    pub fn right_mul_std_gen(&self, sys: &CoxeterSystem, s: usize) -> HeckeElt {
        let mut out = HeckeElt::zero();
        let shift = &LaurentPoly::v_pow(-1) - &LaurentPoly::v();
        for (y, p) in &self.terms {
            let ys = sys.right_mul(*y, s);
            out.add_term(ys, p);
            if sys.is_right_descent(*y, s) {
                out.add_term(*y, &(&shift * p));
            }
        }
        out
    }

    /// The product `self * other` by expanding `self` along canonical words.
    pub fn std_multiply(&self, sys: &CoxeterSystem, other: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (x, p) in &self.terms {
            let mut part = other.clone();
            for &s in sys.word(*x).iter().rev() {
                part = part.left_mul_std_gen(sys, s as usize);
            }
            out.add_scaled(p, &part);
        }
        out
    }

    /// The `Z[v,v^-1]`-linear anti-involution with `iota(H_x) = H_{x^-1}`.
    pub fn iota(&self, sys: &CoxeterSystem) -> HeckeElt {
        HeckeElt::from_terms(self.terms.iter().map(|(x, p)| (sys.inverse(*x), p.clone())))
    }

    /// Specialize `v = 1`, returning integer coefficients per element.
    pub fn eval_at_one(&self) -> BTreeMap<Elt, BigInt> {
        self.terms
            .iter()
            .map(|(x, p)| (*x, p.eval_at_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }
}

/// Expansion of one KL basis element in the standard basis, plus its
/// mu-coefficients (the `v^1` coefficients of the `h_{y,w}`).
#[derive(Debug, Clone)]
pub struct KlRow {
    /// `h_{y,w}` for `y <= w`, sorted by element index.
    pub h: Vec<(Elt, LaurentPoly)>,
    /// Nonzero `mu(y, w)` for `y < w`.
    pub mu: Vec<(Elt, BigInt)>,
}

/// Memoized Kazhdan-Lusztig basis and bar involution for one system.
///
/// Rows are computed lazily on first access and shared thereafter; forcing
/// the whole table is a loop over all elements.
pub struct KlTable {
    sys: Arc<CoxeterSystem>,
    rows: Vec<OnceLock<Arc<KlRow>>>,
    bars: Vec<OnceLock<Arc<HeckeElt>>>,
}

impl KlTable {
    pub fn new(sys: Arc<CoxeterSystem>) -> KlTable {
        let n = sys.size();
        KlTable {
            sys,
            rows: (0..n).map(|_| OnceLock::new()).collect(),
            bars: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    /// The expansion of `b_w` in the standard basis.
    pub fn row(&self, w: Elt) -> Arc<KlRow> {
        self.rows[w.idx()]
            .get_or_init(|| Arc::new(self.compute_row(w)))
            .clone()
    }

    fn compute_row(&self, w: Elt) -> KlRow {
        let sys = &self.sys;
        if sys.length(w) == 0 {
            return KlRow {
                h: vec![(w, LaurentPoly::one())],
                mu: Vec::new(),
            };
        }
        let s = sys.left_descents(w).iter().next().expect("descent exists");
        let u = sys.left_mul(s, w);
        let row_u = self.row(u);

        // b_s * b_u = (H_s + v) * b_u.
        let b_u = HeckeElt::from_terms(row_u.h.iter().cloned());
        let mut prod = b_u.left_mul_std_gen(sys, s);
        prod.add_scaled(&LaurentPoly::v(), &b_u);

        // Subtract mu(y, u) b_y over y < u with sy < y.
        for (y, mu) in &row_u.mu {
            if sys.is_left_descent(s, *y) {
                let row_y = self.row(*y);
                let c = LaurentPoly::monomial(0, -mu.clone());
                for (z, p) in &row_y.h {
                    prod.add_term(*z, &(&c * p));
                }
            }
        }

        let h: Vec<(Elt, LaurentPoly)> = prod.iter().map(|(y, p)| (y, p.clone())).collect();
        let mut mu = Vec::new();
        for (y, p) in &h {
            debug_assert!(sys.bruhat_leq(*y, w), "support not below w");
            if *y == w {
                assert!(p.is_one(), "b_w not unitriangular at {}", sys.name(w));
            } else {
                assert!(
                    p.in_v_z_v(),
                    "h_{{{},{}}} = {p} not in vZ[v]",
                    sys.name(*y),
                    sys.name(w)
                );
            }
            assert!(
                p.is_nonneg(),
                "negative KL coefficient h_{{{},{}}} = {p}",
                sys.name(*y),
                sys.name(w)
            );
            let m = p.coeff(1);
            if *y != w && !m.is_zero() {
                mu.push((*y, m));
            }
        }
        KlRow { h, mu }
    }

    /// `b_w` as a Hecke element.
    pub fn b(&self, w: Elt) -> HeckeElt {
        HeckeElt::from_terms(self.row(w).h.iter().cloned())
    }

    /// Coefficient of `v` in `h_{y,w}`; zero unless `y < w`.
    pub fn mu(&self, y: Elt, w: Elt) -> BigInt {
        self.row(w)
            .mu
            .iter()
            .find(|(z, _)| *z == y)
            .map(|(_, m)| m.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Expansion of `b_s * b_y` in the KL basis.
    pub fn b_s_times_b(&self, s: usize, y: Elt) -> Vec<(Elt, LaurentPoly)> {
        let sys = &self.sys;
        if sys.is_left_descent(s, y) {
            return vec![(y, LaurentPoly::v_plus_v_inv())];
        }
        let mut out = vec![(sys.left_mul(s, y), LaurentPoly::one())];
        for (z, m) in &self.row(y).mu {
            if sys.is_left_descent(s, *z) {
                out.push((*z, LaurentPoly::monomial(0, m.clone())));
            }
        }
        out.sort_by_key(|(z, _)| *z);
        out
    }

    /// Expansion of `b_y * b_s` in the KL basis.
    pub fn b_times_b_s(&self, y: Elt, s: usize) -> Vec<(Elt, LaurentPoly)> {
        let sys = &self.sys;
        if sys.is_right_descent(y, s) {
            return vec![(y, LaurentPoly::v_plus_v_inv())];
        }
        let mut out = vec![(sys.right_mul(y, s), LaurentPoly::one())];
        for (z, m) in &self.row(y).mu {
            if sys.is_right_descent(*z, s) {
                out.push((*z, LaurentPoly::monomial(0, m.clone())));
            }
        }
        out.sort_by_key(|(z, _)| *z);
        out
    }

    /// Force every row, invoking `progress` after each element.
    pub fn force_all(&self, mut progress: impl FnMut(usize, usize)) {
        let n = self.sys.size();
        for w in 0..n {
            self.row(Elt(w as u32));
            progress(w + 1, n);
        }
    }

    /// `bar(H_x)` in the standard basis.
    pub fn bar_std(&self, x: Elt) -> Arc<HeckeElt> {
        self.bars[x.idx()]
            .get_or_init(|| {
                let sys = &self.sys;
                if sys.length(x) == 0 {
                    return Arc::new(HeckeElt::std(x));
                }
                let s = sys.left_descents(x).iter().next().expect("descent exists");
                let u = sys.left_mul(s, x);
                let bar_u = self.bar_std(u);
                // bar(H_s) = H_s + (v - v^-1).
                let mut out = bar_u.left_mul_std_gen(sys, s);
                let shift = &LaurentPoly::v() - &LaurentPoly::v_pow(-1);
                out.add_scaled(&shift, &bar_u);
                Arc::new(out)
            })
            .clone()
    }

    /// The bar involution of an arbitrary element.
    pub fn bar(&self, h: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (x, p) in h.iter() {
            out.add_scaled(&p.bar(), &self.bar_std(x));
        }
        out
    }

    /// Expand an element in the KL basis by unitriangular back-substitution.
    pub fn to_kl_basis(&self, h: &HeckeElt) -> Vec<(Elt, LaurentPoly)> {
        let sys = &self.sys;
        let mut residual = h.clone();
        let mut out: BTreeMap<Elt, LaurentPoly> = BTreeMap::new();
        while !residual.is_zero() {
            let top_len = residual
                .support()
                .map(|x| sys.length(x))
                .max()
                .expect("nonzero element");
            let tops: Vec<Elt> = residual
                .support()
                .filter(|x| sys.length(*x) == top_len)
                .collect();
            for z in tops {
                let c = residual.coeff(z);
                let row = self.row(z);
                for (y, p) in &row.h {
                    residual.add_term(*y, &-&(&c * p));
                }
                out.insert(z, c);
            }
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}
