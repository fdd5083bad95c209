//! The canonical basis layer over the Kazhdan-Lusztig basis for a fixed
//! characteristic label `p`.
//!
//! Tables store each `pkl_w` as a finite correction to `b_w` in the KL
//! basis; elements missing from a document default to `pkl_w = b_w`, so the
//! `p = 0` table is the identity. The characteristic is metadata only: all
//! arithmetic stays over `Z[v, v^-1]`. A table must pass
//! [`CanonicalDraft::validate`] before anything downstream can see it;
//! validation also precomputes every generator product `b_s * pkl_y` and
//! `pkl_y * b_s` in the canonical basis, which is exactly what the cell
//! preorders consume.

use crate::coxeter::Elt;
use crate::hecke::{HeckeElt, KlTable};
use crate::laurent::LaurentPoly;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

/// On-disk table document.
///
/// `basis` maps an element name to its expansion in the KL basis; values are
/// Laurent polynomials in the monomial-sum codec. Omitted elements default
/// to `pkl_w = b_w`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableDoc {
    pub system: String,
    pub p: u32,
    #[serde(default)]
    pub basis: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    pub provenance: String,
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum CanonicalError {
    #[error("unknown element `{0}` in table document")]
    UnknownElement(String),
    #[error("table is not unitriangular: {0}")]
    NonUnitriangular(String),
    #[error("malformed table document: {0}")]
    MalformedDocument(String),
    #[error("table failed validation: {0}")]
    ValidationFailed(String),
}

/// One pass/fail entry of a validation report.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Outcome of validating a draft table.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub p: u32,
    pub provenance: String,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

type SparseKl = Vec<(Elt, LaurentPoly)>;

/// A structurally loaded but not yet validated table.
pub struct CanonicalDraft {
    kl: Arc<KlTable>,
    p: u32,
    provenance: String,
    m: Vec<SparseKl>,
}

impl CanonicalDraft {
    /// Structural load: names resolve, the support respects the Bruhat
    /// order, diagonals are 1, and `p` is zero or prime.
    pub fn load(kl: Arc<KlTable>, doc: &TableDoc) -> Result<CanonicalDraft, CanonicalError> {
        let sys = kl.system().clone();
        if doc.p != 0 && !is_prime(doc.p) {
            return Err(CanonicalError::MalformedDocument(format!(
                "p = {} is neither 0 nor prime",
                doc.p
            )));
        }
        let mut m: Vec<SparseKl> = sys
            .elements()
            .map(|w| vec![(w, LaurentPoly::one())])
            .collect();
        for (wname, row) in &doc.basis {
            let w = sys
                .element_by_name(wname)
                .ok_or_else(|| CanonicalError::UnknownElement(wname.clone()))?;
            let mut entries: BTreeMap<Elt, LaurentPoly> = BTreeMap::new();
            for (yname, poly) in row {
                let y = sys
                    .element_by_name(yname)
                    .ok_or_else(|| CanonicalError::UnknownElement(yname.clone()))?;
                let c: LaurentPoly = poly.parse().map_err(|e| {
                    CanonicalError::MalformedDocument(format!("entry ({wname}, {yname}): {e}"))
                })?;
                if c.is_zero() {
                    continue;
                }
                if y == w {
                    if !c.is_one() {
                        return Err(CanonicalError::NonUnitriangular(format!(
                            "diagonal entry of {wname} is {c}, expected 1"
                        )));
                    }
                } else if !sys.bruhat_leq(y, w) {
                    return Err(CanonicalError::NonUnitriangular(format!(
                        "entry ({wname}, {yname}) lies above the diagonal"
                    )));
                }
                entries.insert(y, c);
            }
            entries.insert(w, LaurentPoly::one());
            m[w.idx()] = entries.into_iter().collect();
        }
        Ok(CanonicalDraft {
            kl,
            p: doc.p,
            provenance: doc.provenance.clone(),
            m,
        })
    }

    /// The identity table (`pkl_w = b_w` for all `w`).
    pub fn identity(kl: Arc<KlTable>, p: u32) -> CanonicalDraft {
        let m = kl
            .system()
            .elements()
            .map(|w| vec![(w, LaurentPoly::one())])
            .collect();
        CanonicalDraft {
            kl,
            p,
            provenance: format!("identity table (pkl = kl) at p = {p}"),
            m,
        }
    }

    /// Built-in table for `B2` at `p = 2`: `pkl_121 = b_121 + b_1`.
    pub fn b2_preset_p2(kl: Arc<KlTable>) -> Result<CanonicalDraft, CanonicalError> {
        let doc: TableDoc = serde_json::from_str(B2_P2_JSON).expect("built-in table parses");
        CanonicalDraft::load(kl, &doc)
    }

    /// Run all table invariants; on success the validated table is returned
    /// alongside the report.
    pub fn validate(self) -> (ValidationReport, Option<CanonicalTable>) {
        let kl = &self.kl;
        let sys = kl.system().clone();
        let mut checks: Vec<CheckResult> = Vec::new();
        let record = |checks: &mut Vec<CheckResult>, name: &str, witness: Option<String>| {
            checks.push(CheckResult {
                name: name.to_string(),
                passed: witness.is_none(),
                witness,
            });
        };

        // Unitriangularity is structural after load.
        record(&mut checks, "unitriangular", None);

        let mut bad = None;
        'outer_nonneg: for w in sys.elements() {
            for (y, c) in &self.m[w.idx()] {
                if !c.is_nonneg() {
                    bad = Some(format!(
                        "m[{}][{}] = {c} has a negative coefficient",
                        sys.name(w),
                        sys.name(*y)
                    ));
                    break 'outer_nonneg;
                }
            }
        }
        record(&mut checks, "kl-multiplicities-nonnegative", bad);

        // Self-duality of pkl_w: since every b_y is bar-invariant, this is
        // equivalent to every m-coefficient being a self-dual polynomial.
        // Small systems additionally get the direct bar check.
        let mut bad = None;
        'outer_dual: for w in sys.elements() {
            for (y, c) in &self.m[w.idx()] {
                if !c.is_self_dual() {
                    bad = Some(format!(
                        "m[{}][{}] = {c} is not self-dual",
                        sys.name(w),
                        sys.name(*y)
                    ));
                    break 'outer_dual;
                }
            }
        }
        if bad.is_none() && sys.size() <= 120 {
            for w in sys.elements() {
                let std = self.std_row(w);
                if kl.bar(&std) != std {
                    bad = Some(format!("bar(pkl_{}) != pkl_{}", sys.name(w), sys.name(w)));
                    break;
                }
            }
        }
        record(&mut checks, "self-dual", bad);

        let mut bad = None;
        for x in sys.elements() {
            let xi = sys.inverse(x);
            let mut mirrored: SparseKl = self.m[xi.idx()]
                .iter()
                .map(|(y, c)| (sys.inverse(*y), c.clone()))
                .collect();
            mirrored.sort_by_key(|(y, _)| *y);
            if mirrored != self.m[x.idx()] {
                bad = Some(format!(
                    "m[{}][-] and m[{}][-] are not mirror images",
                    sys.name(x),
                    sys.name(xi)
                ));
                break;
            }
        }
        record(&mut checks, "iota-compatible", bad);

        if self.p == 0 {
            let bad = sys.elements().find(|w| self.m[w.idx()].len() != 1).map(|w| {
                format!(
                    "p = 0 table must be the identity, but pkl_{} != b_{}",
                    sys.name(w),
                    sys.name(w)
                )
            });
            record(&mut checks, "p0-identity", bad);
        }

        // Generator products in the canonical basis; their coefficients are
        // the structure coefficients the cell preorders are built from.
        let rank = sys.rank();
        let mut gen_left: Vec<Vec<SparseKl>> = Vec::with_capacity(rank);
        let mut gen_right: Vec<Vec<SparseKl>> = Vec::with_capacity(rank);
        let mut bad = None;
        for s in 0..rank {
            let mut left_row = Vec::with_capacity(sys.size());
            let mut right_row = Vec::with_capacity(sys.size());
            for y in sys.elements() {
                let mut in_kl: BTreeMap<Elt, LaurentPoly> = BTreeMap::new();
                for (z, c) in &self.m[y.idx()] {
                    for (u, d) in kl.b_s_times_b(s, *z) {
                        let entry = in_kl.entry(u).or_insert_with(LaurentPoly::zero);
                        *entry += &(c * &d);
                    }
                }
                let left = self.kl_to_pkl(in_kl);
                let mut in_kl: BTreeMap<Elt, LaurentPoly> = BTreeMap::new();
                for (z, c) in &self.m[y.idx()] {
                    for (u, d) in kl.b_times_b_s(*z, s) {
                        let entry = in_kl.entry(u).or_insert_with(LaurentPoly::zero);
                        *entry += &(c * &d);
                    }
                }
                let right = self.kl_to_pkl(in_kl);
                if bad.is_none() {
                    for (z, c) in left.iter().chain(right.iter()) {
                        if !c.is_nonneg() || !c.is_self_dual() {
                            bad = Some(format!(
                                "structure coefficient mu^{}_{{s{},{}}} = {c} is not self-dual nonnegative",
                                sys.name(*z),
                                s + 1,
                                sys.name(y)
                            ));
                            break;
                        }
                    }
                }
                left_row.push(left);
                right_row.push(right);
            }
            gen_left.push(left_row);
            gen_right.push(right_row);
        }
        record(&mut checks, "generator-structure-coefficients", bad);

        let passed = checks.iter().all(|c| c.passed);
        let report = ValidationReport {
            p: self.p,
            provenance: self.provenance.clone(),
            checks,
            passed,
        };
        if !passed {
            return (report, None);
        }

        let std_rows: Vec<Arc<HeckeElt>> =
            sys.elements().map(|w| Arc::new(self.std_row(w))).collect();
        let std_at_one: Vec<Vec<(Elt, i64)>> = std_rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(y, p)| {
                        let c = p
                            .eval_at_one()
                            .to_i64()
                            .expect("standard coefficient fits in i64");
                        (y, c)
                    })
                    .filter(|(_, c)| *c != 0)
                    .collect()
            })
            .collect();
        let table = CanonicalTable {
            kl: self.kl,
            p: self.p,
            provenance: self.provenance,
            m: self.m,
            gen_left,
            gen_right,
            std_rows,
            std_at_one,
            product_cache: Mutex::new(BTreeMap::new()),
        };
        (report, Some(table))
    }

    /// Expansion of `pkl_w` in the standard basis.
    fn std_row(&self, w: Elt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (y, c) in &self.m[w.idx()] {
            let row = self.kl.row(*y);
            for (z, h) in &row.h {
                out.add_term(*z, &(c * h));
            }
        }
        out
    }

    /// Back-substitute a KL-basis expansion into the canonical basis.
    fn kl_to_pkl(&self, mut residual: BTreeMap<Elt, LaurentPoly>) -> SparseKl {
        let sys = self.kl.system();
        residual.retain(|_, c| !c.is_zero());
        let mut out: BTreeMap<Elt, LaurentPoly> = BTreeMap::new();
        while let Some(&z) = residual.keys().max_by_key(|z| (sys.length(**z), z.0)) {
            let c = residual.remove(&z).expect("key present");
            if c.is_zero() {
                continue;
            }
            for (y, d) in &self.m[z.idx()] {
                if *y == z {
                    continue;
                }
                let entry = residual.entry(*y).or_insert_with(LaurentPoly::zero);
                *entry -= &(&c * d);
                if entry.is_zero() {
                    residual.remove(y);
                }
            }
            out.insert(z, c);
        }
        out.into_iter().collect()
    }
}

/// A validated canonical basis table. Immutable apart from an internally
/// synchronized product cache; concurrent readers see identical values.
pub struct CanonicalTable {
    kl: Arc<KlTable>,
    p: u32,
    provenance: String,
    /// `pkl_w = sum m[w][y] * b_y`, sorted by element.
    m: Vec<SparseKl>,
    /// `b_s * pkl_y` in the canonical basis, per generator.
    gen_left: Vec<Vec<SparseKl>>,
    /// `pkl_y * b_s` in the canonical basis, per generator.
    gen_right: Vec<Vec<SparseKl>>,
    std_rows: Vec<Arc<HeckeElt>>,
    std_at_one: Vec<Vec<(Elt, i64)>>,
    product_cache: Mutex<BTreeMap<(u32, u32), Arc<SparseKl>>>,
}

impl CanonicalTable {
    /// Load and validate in one step, failing on any validation error.
    pub fn load(kl: Arc<KlTable>, doc: &TableDoc) -> Result<CanonicalTable, CanonicalError> {
        let (report, table) = CanonicalDraft::load(kl, doc)?.validate();
        table.ok_or_else(|| {
            let failed: Vec<&str> = report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name.as_str())
                .collect();
            CanonicalError::ValidationFailed(failed.join(", "))
        })
    }

    /// The validated identity table at `p = 0`.
    pub fn p0(kl: Arc<KlTable>) -> CanonicalTable {
        let (_, table) = CanonicalDraft::identity(kl, 0).validate();
        table.expect("identity table always validates")
    }

    /// The built-in `B2`, `p = 2` table.
    pub fn b2_p2(kl: Arc<KlTable>) -> CanonicalTable {
        let draft = CanonicalDraft::b2_preset_p2(kl).expect("built-in preset loads");
        let (_, table) = draft.validate();
        table.expect("built-in preset validates")
    }

    pub fn kl(&self) -> &Arc<KlTable> {
        &self.kl
    }

    pub fn system(&self) -> &Arc<crate::coxeter::CoxeterSystem> {
        self.kl.system()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Expansion of `pkl_w` in the KL basis.
    pub fn kl_row(&self, w: Elt) -> &[(Elt, LaurentPoly)] {
        &self.m[w.idx()]
    }

    /// Expansion of `pkl_w` in the standard basis.
    pub fn std_row(&self, w: Elt) -> &Arc<HeckeElt> {
        &self.std_rows[w.idx()]
    }

    /// Standard-basis expansion of `pkl_w` specialized at `v = 1`.
    pub fn std_row_at_one(&self, w: Elt) -> &[(Elt, i64)] {
        &self.std_at_one[w.idx()]
    }

    /// `b_s * pkl_y` in the canonical basis.
    pub fn left_gen_product(&self, s: usize, y: Elt) -> &[(Elt, LaurentPoly)] {
        &self.gen_left[s][y.idx()]
    }

    /// `pkl_y * b_s` in the canonical basis.
    pub fn right_gen_product(&self, y: Elt, s: usize) -> &[(Elt, LaurentPoly)] {
        &self.gen_right[s][y.idx()]
    }

    /// Back-substitute an arbitrary Hecke element into the canonical basis.
    pub fn to_pkl_basis(&self, h: &HeckeElt) -> SparseKl {
        let sys = self.kl.system();
        let mut residual = h.clone();
        let mut out: BTreeMap<Elt, LaurentPoly> = BTreeMap::new();
        while !residual.is_zero() {
            let z = residual
                .support()
                .max_by_key(|z| (sys.length(*z), z.0))
                .expect("nonzero element");
            let c = residual.coeff(z);
            for (y, p) in self.std_rows[z.idx()].iter() {
                residual.add_term(y, &-&(&c * p));
            }
            out.insert(z, c);
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Structure coefficients: the expansion of `pkl_x * pkl_y` in the
    /// canonical basis, cached per pair.
    pub fn structure_coefficients(&self, x: Elt, y: Elt) -> Arc<SparseKl> {
        if let Some(hit) = self.product_cache.lock().unwrap().get(&(x.0, y.0)) {
            return hit.clone();
        }
        let sys = self.kl.system();
        let product = self.std_rows[x.idx()].std_multiply(sys, &self.std_rows[y.idx()]);
        let expansion = Arc::new(self.to_pkl_basis(&product));
        self.product_cache
            .lock()
            .unwrap()
            .insert((x.0, y.0), expansion.clone());
        expansion
    }

    /// Serialize back to a table document (only non-identity rows).
    pub fn to_doc(&self, system_name: &str) -> TableDoc {
        let sys = self.kl.system();
        let mut basis = BTreeMap::new();
        for w in sys.elements() {
            let row = &self.m[w.idx()];
            if row.len() == 1 {
                continue;
            }
            let entries: BTreeMap<String, String> = row
                .iter()
                .map(|(y, c)| (sys.name(*y).to_string(), c.to_string()))
                .collect();
            basis.insert(sys.name(w).to_string(), entries);
        }
        TableDoc {
            system: system_name.to_string(),
            p: self.p,
            basis,
            provenance: self.provenance.clone(),
        }
    }
}

const B2_P2_JSON: &str = r#"{
  "system": "B2",
  "p": 2,
  "basis": { "121": { "121": "1", "1": "1" } },
  "provenance": "built-in B2 table at p = 2"
}"#;

/// Evaluate a sparse canonical expansion at `v = 1` as exact integers.
pub fn expansion_at_one(expansion: &[(Elt, LaurentPoly)]) -> Vec<(Elt, BigInt)> {
    expansion
        .iter()
        .map(|(z, c)| (*z, c.eval_at_one()))
        .filter(|(_, c)| !num_traits::Zero::is_zero(c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterSystem;

    fn b2() -> Arc<KlTable> {
        Arc::new(KlTable::new(Arc::new(
            CoxeterSystem::build_preset("B2").unwrap(),
        )))
    }

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn p0_is_identity() {
        let kl = b2();
        let table = CanonicalTable::p0(kl.clone());
        for w in kl.system().elements() {
            assert_eq!(table.kl_row(w), &[(w, LaurentPoly::one())]);
            assert_eq!(**table.std_row(w), kl.b(w));
        }
    }

    #[test]
    fn b2_p2_preset_validates() {
        let kl = b2();
        let sys = kl.system().clone();
        let draft = CanonicalDraft::b2_preset_p2(kl.clone()).unwrap();
        let (report, table) = draft.validate();
        assert!(report.passed, "{report:?}");
        let table = table.unwrap();
        let w121 = sys.element_by_name("121").unwrap();
        let s1 = sys.element_by_name("1").unwrap();
        let mut expect = kl.b(w121);
        expect.add_assign(&kl.b(s1));
        assert_eq!(**table.std_row(w121), expect);
        for w in sys.elements() {
            if w != w121 {
                assert_eq!(**table.std_row(w), kl.b(w), "pkl_{}", sys.name(w));
            }
        }
    }

    #[test]
    fn negative_entry_fails_validation() {
        let kl = b2();
        let doc = TableDoc {
            system: "B2".into(),
            p: 2,
            basis: BTreeMap::from([(
                "121".to_string(),
                BTreeMap::from([("1".to_string(), "-1".to_string())]),
            )]),
            provenance: "fabricated".into(),
        };
        let draft = CanonicalDraft::load(kl, &doc).unwrap();
        let (report, table) = draft.validate();
        assert!(table.is_none());
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "kl-multiplicities-nonnegative" && !c.passed));
    }

    #[test]
    fn non_self_dual_entry_fails_validation() {
        let kl = b2();
        // pkl_121 = b_121 + v * b_1 is unitriangular but not bar-invariant.
        let doc = TableDoc {
            system: "B2".into(),
            p: 2,
            basis: BTreeMap::from([(
                "121".to_string(),
                BTreeMap::from([("1".to_string(), "v".to_string())]),
            )]),
            provenance: "fabricated".into(),
        };
        let draft = CanonicalDraft::load(kl, &doc).unwrap();
        let (report, table) = draft.validate();
        assert!(table.is_none());
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "self-dual" && !c.passed));
    }

    #[test]
    fn iota_incompatible_fails_validation() {
        let kl = b2();
        // A correction on 12 with none on its inverse 21.
        let doc = TableDoc {
            system: "B2".into(),
            p: 2,
            basis: BTreeMap::from([(
                "12".to_string(),
                BTreeMap::from([("2".to_string(), "1".to_string())]),
            )]),
            provenance: "fabricated".into(),
        };
        let draft = CanonicalDraft::load(kl, &doc).unwrap();
        let (report, table) = draft.validate();
        assert!(table.is_none());
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "iota-compatible" && !c.passed));
    }

    #[test]
    fn load_rejections() {
        let kl = b2();
        let doc = TableDoc {
            system: "B2".into(),
            p: 4,
            basis: BTreeMap::new(),
            provenance: String::new(),
        };
        assert!(matches!(
            CanonicalDraft::load(kl.clone(), &doc),
            Err(CanonicalError::MalformedDocument(_))
        ));
        let doc = TableDoc {
            system: "B2".into(),
            p: 2,
            basis: BTreeMap::from([(
                "99".to_string(),
                BTreeMap::from([("99".to_string(), "1".to_string())]),
            )]),
            provenance: String::new(),
        };
        assert!(matches!(
            CanonicalDraft::load(kl.clone(), &doc),
            Err(CanonicalError::UnknownElement(_))
        ));
        // Support above the diagonal.
        let doc = TableDoc {
            system: "B2".into(),
            p: 2,
            basis: BTreeMap::from([(
                "1".to_string(),
                BTreeMap::from([("121".to_string(), "1".to_string())]),
            )]),
            provenance: String::new(),
        };
        assert!(matches!(
            CanonicalDraft::load(kl, &doc),
            Err(CanonicalError::NonUnitriangular(_))
        ));
    }

    #[test]
    fn structure_coefficients_identity() {
        let kl = b2();
        let sys = kl.system().clone();
        let table = CanonicalTable::b2_p2(kl);
        let e = sys.identity();
        for y in sys.elements() {
            let exp = table.structure_coefficients(e, y);
            assert_eq!(*exp, vec![(y, LaurentPoly::one())]);
        }
    }

    #[test]
    fn descent_multiplication_formula() {
        // b_s * pkl_x = (v + v^-1) pkl_x when s is a left descent of x.
        let kl = b2();
        let sys = kl.system().clone();
        let table = CanonicalTable::b2_p2(kl);
        for x in sys.elements() {
            for s in 0..sys.rank() {
                if sys.is_left_descent(s, x) {
                    assert_eq!(
                        table.left_gen_product(s, x),
                        &[(x, LaurentPoly::v_plus_v_inv())]
                    );
                }
            }
        }
    }

    #[test]
    fn b2_p2_products_match_hand_computation() {
        let kl = b2();
        let sys = kl.system().clone();
        let table = CanonicalTable::b2_p2(kl);
        let at = |name: &str| sys.element_by_name(name).unwrap();
        // pkl_121^2 = (v+v^-1)^2 pkl_1212 + 2(v+v^-1) pkl_121.
        let sq = table.structure_coefficients(at("121"), at("121"));
        assert_eq!(
            *sq,
            vec![
                (at("121"), poly("2v^-1 + 2v")),
                (at("1212"), poly("v^-2 + 2 + v^2")),
            ]
        );
        // pkl_12 * pkl_21 = (v+v^-1) pkl_121.
        let prod = table.structure_coefficients(at("12"), at("21"));
        assert_eq!(*prod, vec![(at("121"), poly("v^-1 + v"))]);
        // pkl_21 * pkl_21 = pkl_1212 + 2 pkl_21.
        let prod = table.structure_coefficients(at("21"), at("21"));
        assert_eq!(*prod, vec![(at("21"), poly("2")), (at("1212"), poly("1"))]);
    }

    #[test]
    fn structure_coefficients_round_trip_all_pairs_b2() {
        let kl = b2();
        let sys = kl.system().clone();
        let table = CanonicalTable::b2_p2(kl);
        for x in sys.elements() {
            for y in sys.elements() {
                let expansion = table.structure_coefficients(x, y);
                let mut rebuilt = HeckeElt::zero();
                for (z, c) in expansion.iter() {
                    rebuilt.add_scaled(c, table.std_row(*z));
                }
                let direct = table.std_row(x).std_multiply(&sys, table.std_row(y));
                assert_eq!(rebuilt, direct, "pair ({}, {})", sys.name(x), sys.name(y));
                // iota swaps and inverts the factors.
                let mirrored = table.structure_coefficients(sys.inverse(y), sys.inverse(x));
                let mut expect: Vec<(Elt, LaurentPoly)> = expansion
                    .iter()
                    .map(|(z, c)| (sys.inverse(*z), c.clone()))
                    .collect();
                expect.sort_by_key(|(z, _)| *z);
                assert_eq!(*mirrored, expect);
            }
        }
    }

    #[test]
    fn generator_products_match_structure_coefficients() {
        let kl = b2();
        let sys = kl.system().clone();
        let table = CanonicalTable::b2_p2(kl);
        for s in 0..sys.rank() {
            let gen = sys.left_mul(s, sys.identity());
            for y in sys.elements() {
                assert_eq!(
                    table.left_gen_product(s, y),
                    &table.structure_coefficients(gen, y)[..],
                );
                assert_eq!(
                    table.right_gen_product(y, s),
                    &table.structure_coefficients(y, gen)[..],
                );
            }
        }
    }

    #[test]
    fn doc_round_trip() {
        let kl = b2();
        let table = CanonicalTable::b2_p2(kl.clone());
        let doc = table.to_doc("B2");
        let again = CanonicalTable::load(kl, &doc).unwrap();
        assert_eq!(
            again.kl_row(again.system().element_by_name("121").unwrap()),
            table.kl_row(table.system().element_by_name("121").unwrap())
        );
    }
}
