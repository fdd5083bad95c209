//! Exact Laurent polynomials in a single variable `v` over the integers.
//!
//! `LaurentPoly` is the coefficient ring for every basis expansion in this
//! crate. The representation is canonical: a sorted map from exponent to
//! nonzero `BigInt` coefficient, with the zero polynomial stored as the
//! empty map. Coefficients are arbitrary precision, so overflow cannot
//! occur regardless of input size.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

/// A Laurent polynomial `sum c_k v^k` with integer coefficients.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial (empty coefficient map).
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    /// A constant polynomial.
    pub fn constant(c: i64) -> Self {
        LaurentPoly::monomial(0, BigInt::from(c))
    }

    /// The variable `v`.
    pub fn v() -> Self {
        LaurentPoly::v_pow(1)
    }

    /// The monomial `v^k`.
    pub fn v_pow(k: i32) -> Self {
        LaurentPoly::monomial(k, BigInt::one())
    }

    /// `v + v^-1`, the coefficient of a quadratic-relation descent.
    pub fn v_plus_v_inv() -> Self {
        &LaurentPoly::v() + &LaurentPoly::v_pow(-1)
    }

    /// The monomial `c * v^k`. Returns zero if `c` is zero.
    pub fn monomial(k: i32, c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// The coefficient of `v^k` (zero if absent).
    pub fn coeff(&self, k: i32) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterate over `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Exponent negation `v -> v^-1`; an involutive ring homomorphism.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Whether the polynomial is fixed by [`LaurentPoly::bar`].
    pub fn is_self_dual(&self) -> bool {
        self.coeffs.iter().all(|(k, c)| self.coeff(-k) == *c)
    }

    /// Whether every coefficient is nonnegative.
    pub fn is_nonneg(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Whether all terms have strictly positive exponent (the `vZ[v]` condition).
    pub fn in_v_z_v(&self) -> bool {
        self.min_exp().map_or(true, |k| k > 0)
    }

    /// Sum of all coefficients, i.e. the specialization at `v = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// The part with strictly positive exponents.
    pub fn positive_part(&self) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| **k > 0)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, k: i32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    /// `self += c * p`, avoiding an intermediate allocation.
    pub fn add_scaled(&mut self, c: &LaurentPoly, p: &LaurentPoly) {
        for (kc, cc) in &c.coeffs {
            for (kp, cp) in &p.coeffs {
                self.add_term(kc + kp, &(cc * cp));
            }
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.coeffs {
            self.add_term(*k, c);
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.coeffs {
            self.add_term(*k, &(-c));
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_scaled(self, rhs);
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Human-readable sum of signed monomials in ascending exponent order,
    /// e.g. `v^-1 + 2 + v^3`; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{mag}v")?,
                (_, true) => write!(f, "v^{k}")?,
                (_, false) => write!(f, "{mag}v^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Error from parsing the monomial-sum codec.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid Laurent polynomial `{input}`: {reason}")]
pub struct ParsePolyError {
    pub input: String,
    pub reason: String,
}

impl FromStr for LaurentPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParsePolyError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty string"));
        }
        let mut out = LaurentPoly::zero();
        // Split into signed terms; a leading sign is optional.
        let bytes = compact.as_bytes();
        let mut idx = 0;
        while idx < bytes.len() {
            let negative = match bytes[idx] {
                b'+' => {
                    idx += 1;
                    false
                }
                b'-' => {
                    idx += 1;
                    true
                }
                _ if idx == 0 => false,
                _ => return Err(err("expected `+` or `-` between terms")),
            };
            let start = idx;
            while idx < bytes.len() && bytes[idx] != b'+' && bytes[idx] != b'-' {
                // A `-` directly after `^` is an exponent sign, not a separator.
                if bytes[idx] == b'^' && idx + 1 < bytes.len() && bytes[idx + 1] == b'-' {
                    idx += 1;
                }
                idx += 1;
            }
            let term = &compact[start..idx];
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (coeff_str, exp): (&str, i32) = match term.find('v') {
                None => (term, 0),
                Some(vpos) => {
                    let after = &term[vpos + 1..];
                    let exp = if after.is_empty() {
                        1
                    } else {
                        let stripped = after
                            .strip_prefix('^')
                            .ok_or_else(|| err("expected `^` after `v`"))?;
                        stripped
                            .parse::<i32>()
                            .map_err(|_| err("invalid exponent"))?
                    };
                    (&term[..vpos], exp)
                }
            };
            let mag: BigInt = if coeff_str.is_empty() {
                BigInt::one()
            } else {
                coeff_str
                    .parse::<BigInt>()
                    .map_err(|_| err("invalid coefficient"))?
            };
            let signed = if negative { -mag } else { mag };
            out.add_term(exp, &signed);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_cancellation_and_identity() {
        assert_eq!(&p("v + 1") + &p("v^-1 - 1"), p("v + v^-1"));
        assert_eq!(&LaurentPoly::zero() + &p("v^2 - 3"), p("v^2 - 3"));
        assert_eq!(&p("v^2 + 2") + &p("v^2"), p("2v^2 + 2"));
    }

    #[test]
    fn mul_examples() {
        let d = LaurentPoly::v_plus_v_inv();
        assert_eq!(&d * &d, p("v^2 + 2 + v^-2"));
        assert_eq!(&LaurentPoly::one() * &p("3v - v^-2"), p("3v - v^-2"));
        assert_eq!(&LaurentPoly::v() * &LaurentPoly::v_pow(-1), LaurentPoly::one());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentPoly::v().bar(), LaurentPoly::v_pow(-1));
        assert_eq!(p("v + v^-1").bar(), p("v + v^-1"));
        assert_eq!(p("2v^3 - v").bar(), p("2v^-3 - v^-1"));
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(p("v + v^-1").eval_at_one(), BigInt::from(2));
        assert_eq!(LaurentPoly::zero().eval_at_one(), BigInt::zero());
        assert_eq!(p("v^3 - 2v + 1").eval_at_one(), BigInt::zero());
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "1", "-1", "v", "-v", "v^-1 + 2 + v^3", "-v + 2v^3", "-3v^-2 + v"] {
            let q = p(s);
            assert_eq!(q.to_string(), s);
            assert_eq!(p(&q.to_string()), q);
        }
        // Input order does not matter for parsing.
        assert_eq!(p("2v^3 - v"), p("-v + 2v^3"));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("v^".parse::<LaurentPoly>().is_err());
        assert!("w + 1".parse::<LaurentPoly>().is_err());
        assert!("v**2".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn positive_part_and_predicates() {
        let q = p("v^-2 - 1 + 3v + v^4");
        assert_eq!(q.positive_part(), p("3v + v^4"));
        assert!(!q.is_self_dual());
        assert!(!q.is_nonneg());
        assert!(p("v + v^-1").is_self_dual());
        assert!(p("v^2").in_v_z_v());
        assert!(!p("1 + v").in_v_z_v());
    }
}
