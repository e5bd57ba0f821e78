//! Polynomials in the four-variable pullback ring Z[T, S, Ti, Si], where
//! Ti and Si present the inverses of t and s.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::order::{mono_mul, Mono4, TermOrder};
use super::text;
use super::{Exps, LaurentPoly};

/// An element of Z[T, S, Ti, Si].  Zero is the empty map; stored
/// coefficients are never zero.  The map key order is only a storage
/// order; term orders for leading-term extraction are passed explicitly.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Poly4 {
    terms: BTreeMap<Mono4, BigInt>,
}

impl Poly4 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term([0; 4], BigInt::from(c));
        p
    }

    /// `c * T^m[0] * S^m[1] * Ti^m[2] * Si^m[3]`.
    pub fn monomial(m: Mono4, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(m, BigInt::from(c));
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono4, BigInt)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Mono4, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0; 4]).map_or(false, |c| c.is_one())
    }

    /// True for the constants ±1, the only units of this ring.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0; 4]).map_or(false, |c| c.abs().is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mono4, &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Leading term under `ord`; `None` for the zero polynomial.
    pub fn leading_term(&self, ord: &TermOrder) -> Option<(Mono4, &BigInt)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.compare(a, b))
            .map(|(m, c)| (*m, c))
    }

    /// `self * c * X^m`.
    pub fn mul_term(&self, m: Mono4, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(&mm, cc)| (mono_mul(mm, m), cc * c))
            .collect();
        Self { terms }
    }

    /// Scales so the leading coefficient under `ord` is positive.
    pub fn normalize_sign(&self, ord: &TermOrder) -> Self {
        match self.leading_term(ord) {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }
}

impl fmt::Display for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::print_poly4(self))
    }
}

impl fmt::Debug for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly4({})", self)
    }
}

impl Add for &Poly4 {
    type Output = Poly4;
    fn add(self, rhs: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly4 {
    type Output = Poly4;
    fn sub(self, rhs: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &Poly4 {
    type Output = Poly4;
    fn neg(self) -> Poly4 {
        let terms = self.terms.iter().map(|(&m, c)| (m, -c)).collect();
        Poly4 { terms }
    }
}

impl Mul for &Poly4 {
    type Output = Poly4;
    fn mul(self, rhs: &Poly4) -> Poly4 {
        let mut out = Poly4::zero();
        for (&am, ac) in &self.terms {
            for (&bm, bc) in &rhs.terms {
                out.add_term(mono_mul(am, bm), ac * bc);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly4 {
            type Output = Poly4;
            fn $method(self, rhs: Poly4) -> Poly4 {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly4 {
    type Output = Poly4;
    fn neg(self) -> Poly4 {
        -&self
    }
}

/// Lifts a Laurent polynomial along t -> T, t^-1 -> Ti, s -> S, s^-1 -> Si,
/// term by term.
pub fn pullback(p: &LaurentPoly) -> Poly4 {
    Poly4::from_terms(p.terms().map(|((et, es), c)| {
        let mut m = [0u32; 4];
        if et >= 0 {
            m[0] = et as u32;
        } else {
            m[2] = (-et) as u32;
        }
        if es >= 0 {
            m[1] = es as u32;
        } else {
            m[3] = (-es) as u32;
        }
        (m, c.clone())
    }))
}

/// Projects back along T -> t, Ti -> t^-1, S -> s, Si -> s^-1; inverse
/// pairs collapse, so terms may merge or cancel.
pub fn pushforward(p: &Poly4) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().map(|(m, c)| {
        let e: Exps = (m[0] as i64 - m[2] as i64, m[1] as i64 - m[3] as i64);
        (e, c.clone())
    }))
}
