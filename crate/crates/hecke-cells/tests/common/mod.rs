//! Shared oracles for the integration suites. Each oracle recomputes a
//! quantity by a route independent of the implementation path it checks.

use hecke_cells::coxeter::{CoxeterSystem, Elt};
use hecke_cells::hecke::{HeckeElt, KlTable};
use hecke_cells::laurent::LaurentPoly;
use std::collections::BTreeMap;

/// Independent KL oracle: solve bar-invariance plus unitriangularity as a
/// triangular linear system over Laurent polynomials, using bar(H_y)
/// computed from products of `H_s + (v - v^-1)` along canonical words.
pub fn kl_oracle_row(sys: &CoxeterSystem, w: Elt) -> Vec<(Elt, LaurentPoly)> {
    // bar(H_y) for y <= w, from scratch.
    let bar_h = |y: Elt| -> HeckeElt {
        let mut acc = HeckeElt::std(sys.identity());
        for &s in sys.word(y).iter().rev() {
            let mut next = acc.left_mul_std_gen(sys, s as usize);
            let shift = &LaurentPoly::v() - &LaurentPoly::v_pow(-1);
            next.add_scaled(&shift, &acc);
            acc = next;
        }
        acc
    };
    let mut support = sys.bruhat_downset(w);
    support.sort_by_key(|x| std::cmp::Reverse(sys.length(*x)));

    // r[z][y] = coefficient of H_z in bar(H_y).
    let bars: BTreeMap<Elt, HeckeElt> = support.iter().map(|&y| (y, bar_h(y))).collect();
    let mut c: BTreeMap<Elt, LaurentPoly> = BTreeMap::new();
    c.insert(w, LaurentPoly::one());
    for &z in support.iter().skip(1) {
        // c_z - bar(c_z) = sum over strictly longer y of bar(c_y) r_{z,y}.
        let mut f = LaurentPoly::zero();
        for (&y, cy) in &c {
            if sys.length(y) <= sys.length(z) {
                continue;
            }
            let r = bars[&y].coeff(z);
            f += &(&cy.bar() * &r);
        }
        assert!(f.coeff(0) == num_bigint::BigInt::from(0), "oracle: constant term in defect");
        assert_eq!(f.bar(), -&f, "oracle: defect not antisymmetric");
        let cz = f.positive_part();
        if !cz.is_zero() {
            c.insert(z, cz);
        }
    }
    // Verify the solution really is bar-invariant before returning it.
    let b = HeckeElt::from_terms(c.iter().map(|(x, p)| (*x, p.clone())));
    let mut bar_b = HeckeElt::zero();
    for (x, p) in b.iter() {
        bar_b.add_scaled(&p.bar(), &bars[&x]);
    }
    assert_eq!(bar_b, b, "oracle solution not self-dual");
    c.into_iter().collect()
}

/// Subword-property oracle for the Bruhat order: the down-set of `y` is the
/// set of products of all subsequences of one fixed reduced word of `y`.
pub fn bruhat_downset_oracle(sys: &CoxeterSystem, y: Elt) -> Vec<Elt> {
    let word = sys.word(y);
    let mut seen = vec![false; sys.size()];
    for mask in 0u32..(1 << word.len()) {
        let mut acc = sys.identity();
        for (i, &s) in word.iter().enumerate() {
            if mask & (1 << i) != 0 {
                acc = sys.right_mul(acc, s as usize);
            }
        }
        seen[acc.idx()] = true;
    }
    (0..sys.size())
        .filter(|&i| seen[i])
        .map(|i| Elt(i as u32))
        .collect()
}

/// Every reduced word of `w`, as generator index sequences.
pub fn reduced_words(sys: &CoxeterSystem, w: Elt) -> Vec<Vec<u8>> {
    if sys.length(w) == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for s in sys.left_descents(w).iter() {
        let rest = sys.left_mul(s, w);
        for mut word in reduced_words(sys, rest) {
            word.insert(0, s as u8);
            out.push(word);
        }
    }
    out
}

/// Multiply `b_s` factors along a word, staying in the KL basis.
pub fn kl_word_product(kl: &KlTable, word: &[u8]) -> Vec<(Elt, LaurentPoly)> {
    let sys = kl.system();
    let mut acc: BTreeMap<Elt, LaurentPoly> = BTreeMap::new();
    acc.insert(sys.identity(), LaurentPoly::one());
    for &s in word.iter().rev() {
        let mut next: BTreeMap<Elt, LaurentPoly> = BTreeMap::new();
        for (z, c) in &acc {
            for (u, d) in kl.b_s_times_b(s as usize, *z) {
                let entry = next.entry(u).or_insert_with(LaurentPoly::zero);
                *entry += &(c * &d);
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc.into_iter().collect()
}
