//! Sparse Laurent polynomials in t and s with arbitrary-precision integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::text;

/// Exponent pair `(e_t, e_s)`; either entry may be negative.
pub type Exps = (i64, i64);

/// An element of Z[t^{±1}, s^{±1}], stored as a map from exponent pairs to
/// nonzero coefficients.  Zero is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<Exps, BigInt>,
}

/// Graded order on exponent pairs with t before s; used for the canonical
/// unit form and for display.  Total on Z x Z.
pub(crate) fn grlex_ts(a: Exps, b: Exps) -> std::cmp::Ordering {
    (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_big(BigInt::from(c))
    }

    pub fn from_big(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        Self { terms }
    }

    pub fn var_t() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn var_s() -> Self {
        Self::monomial(0, 1, 1)
    }

    /// `c * t^et * s^es`.
    pub fn monomial(et: i64, es: i64, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((et, es), BigInt::from(c));
        }
        Self { terms }
    }

    /// Accumulates like terms and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exps, BigInt)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map_or(false, |c| c.is_one())
    }

    /// True for `±t^n s^m`, the units of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().abs().is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exps, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, e: Exps) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Componentwise minimum of the exponents over all terms.
    pub fn min_exps(&self) -> Option<Exps> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |(at, as_), &(bt, bs)| (at.min(bt), as_.min(bs))))
    }

    /// Leading term under the graded order with t before s.
    pub fn grlex_lead(&self) -> Option<(Exps, &BigInt)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| grlex_ts(**a, **b))
            .map(|(e, c)| (*e, c))
    }

    /// Multiplies by the unit `sign * t^dt * s^ds`.
    pub fn mul_unit(&self, negate: bool, dt: i64, ds: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(et, es), c)| {
                let c = if negate { -c } else { c.clone() };
                ((et + dt, es + ds), c)
            })
            .collect();
        Self { terms }
    }

    /// The representative of the unit class of `self`: exponents shifted so
    /// both minimums are 0, then scaled by ±1 so the leading coefficient
    /// (graded order, t before s) is positive.  Zero maps to zero.
    pub fn canonical_unit_form(&self) -> Self {
        let Some((mt, ms)) = self.min_exps() else {
            return Self::zero();
        };
        let shifted = self.mul_unit(false, -mt, -ms);
        let negative = shifted
            .grlex_lead()
            .map_or(false, |(_, c)| c.is_negative());
        if negative {
            shifted.mul_unit(true, 0, 0)
        } else {
            shifted
        }
    }

    /// True when `self` and `other` differ by a unit `±t^n s^m`.
    pub fn unit_equivalent(&self, other: &Self) -> bool {
        self.canonical_unit_form() == other.canonical_unit_form()
    }

    /// Exact division in the Laurent ring: returns `q` with `self = q * d`,
    /// or `None` when no such Laurent polynomial exists.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Clear units so the division runs in Z[t, s], where the graded
        // order is well founded.
        let (pt, ps) = self.min_exps().unwrap();
        let (dt, ds) = d.min_exps().unwrap();
        let mut rem = self.mul_unit(false, -pt, -ps);
        let dd = d.mul_unit(false, -dt, -ds);
        let (dlead, dcoef) = dd.grlex_lead().map(|(e, c)| (e, c.clone())).unwrap();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (rlead, rcoef) = rem.grlex_lead().map(|(e, c)| (e, c.clone())).unwrap();
            if rlead.0 < dlead.0 || rlead.1 < dlead.1 || !(&rcoef % &dcoef).is_zero() {
                return None;
            }
            let qe = (rlead.0 - dlead.0, rlead.1 - dlead.1);
            let qc = &rcoef / &dcoef;
            let mut qterm = Self::zero();
            qterm.add_term(qe, qc);
            rem = &rem - &(&qterm * &dd);
            quot = &quot + &qterm;
        }
        Some(quot.mul_unit(false, pt - dt, ps - ds))
    }

    /// Substitutes s = 1, leaving a Laurent polynomial in t alone.
    pub fn eval_s_one(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(et, _), c)| ((et, 0), c.clone())))
    }

    /// Total-degree bound used by test generators.
    pub fn max_abs_exp(&self) -> i64 {
        self.terms
            .keys()
            .map(|&(a, b)| a.abs().max(b.abs()))
            .max()
            .unwrap_or(0)
    }

    /// Renders with the given variable names (used for the (x, y) form of
    /// the index-zero polynomial after the Sawollek change of variables).
    pub fn to_text_named(&self, names: [&str; 2]) -> String {
        text::print_laurent(self, names)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::print_laurent(self, ["t", "s"]))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.mul_unit(true, 0, 0)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(at, as_), ac) in &self.terms {
            for (&(bt, bs), bc) in &rhs.terms {
                out.add_term((at + bt, as_ + bs), ac * bc);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_laurent;

    fn p(src: &str) -> LaurentPoly {
        parse_laurent(src).unwrap()
    }

    #[test]
    fn ring_basics() {
        let a = p("1 - s");
        let b = p("1 - t");
        assert_eq!(&a * &b, p("1 - s - t + s*t"));
        assert!((&a + &(-&a)).is_zero());
        assert_eq!(&a * &LaurentPoly::one(), a);
        assert!((&a * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn like_terms_cancel() {
        let q = &p("t + s") - &p("t - s");
        assert_eq!(q, p("2*s"));
        assert_eq!(q.num_terms(), 1);
    }

    #[test]
    fn canonical_unit_form_examples() {
        // t^-2*s - t^-1*s = t^-2*s*(1 - t): representative is t - 1.
        let q = p("t^-2*s - t^-1*s");
        assert_eq!(q.canonical_unit_form(), p("-1 + t"));
        assert!(LaurentPoly::zero().canonical_unit_form().is_zero());
        // Idempotent.
        let c = q.canonical_unit_form();
        assert_eq!(c.canonical_unit_form(), c);
    }

    #[test]
    fn canonical_separates_non_associates() {
        // -s*(1-t)*(1-s*t)*t^-3 versus (1-s)*(1-t)*(1-s*t): unit-equivalent
        // only if the extra factor were a unit, which (1-s) is not.
        let f = &p("1 - t") * &p("1 - s*t");
        let g = &p("1 - s") * &f;
        let shifted = (&p("-s") * &f).mul_unit(false, -3, 0);
        assert!(!shifted.unit_equivalent(&g));
        assert!(shifted.unit_equivalent(&f));
    }

    #[test]
    fn unit_equivalence_ignores_units() {
        let f = p("1 - s - t + s*t");
        let g = f.mul_unit(true, -2, 5);
        assert!(f.unit_equivalent(&g));
        assert!(!f.unit_equivalent(&p("1 - s")));
    }

    #[test]
    fn exact_division() {
        let f = &p("1 - s") * &p("1 - t");
        assert_eq!(f.exact_div(&p("1 - t")).unwrap(), p("1 - s"));
        assert!(p("1 - s*t").exact_div(&p("1 - t")).is_none());
        // Division by a unit always succeeds.
        let q = f.exact_div(&p("-t^-3")).unwrap();
        assert_eq!(&q * &p("-t^-3"), f);
        // 0 / d = 0; d / 0 fails.
        assert!(LaurentPoly::zero().exact_div(&f).unwrap().is_zero());
        assert!(f.exact_div(&LaurentPoly::zero()).is_none());
        // Coefficient divisibility matters over the integers.
        assert!(p("3*t").exact_div(&p("2*t")).is_none());
        assert_eq!(p("6*t^2").exact_div(&p("2*t")).unwrap(), p("3*t"));
    }

    #[test]
    fn s_one_specialization() {
        let f = p("t^2*s - s^2 + s - 1");
        assert_eq!(f.eval_s_one(), p("t^2 - 1"));
    }

    #[test]
    fn grlex_lead_prefers_t() {
        let f = p("s*t - t^2");
        let (e, c) = f.grlex_lead().unwrap();
        assert_eq!(e, (2, 0));
        assert_eq!(*c, BigInt::from(-1));
    }
}
