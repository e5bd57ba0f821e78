//! Strong Groebner bases for ideals of Z[T, S, Ti, Si].
//!
//! The coefficient ring is Z, not a field, so division is Euclidean: a
//! term c*m is reducible by g exactly when LM(g) divides m and
//! floor(c / LC(g)) is nonzero, and one reduction step leaves the
//! coefficient at m in the range [0, LC(g)).  Completing a generating
//! set under this notion needs two kinds of critical elements per pair:
//! S-polynomials, which cancel the lifted leading terms over the lcm
//! coefficient, and G-polynomials, Bezout combinations whose leading
//! coefficient is the gcd of the two leading coefficients.  After
//! completion the basis is minimalized and tail-reduced; with leading
//! coefficients normalized positive the result is the unique reduced
//! strong basis of the ideal, so equal ideals yield equal values.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::json;
use thiserror::Error;

use crate::ideals::{ElementaryIdeal, IdealFlag};
use crate::poly::{mono_div, mono_divides, mono_lcm, mono_mul, pullback, Mono4, Poly4, TermOrder};

/// Caps on the completion loop, so a pathological presentation fails
/// fast with an error instead of consuming the machine.  A "pair" is one
/// critical pair popped from the queue; the basis cap counts elements
/// accumulated before minimalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: usize,
    pub max_basis: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 250_000,
            max_basis: 5_000,
        }
    }
}

impl Budget {
    /// Scales the pair cap, keeping the basis cap; used by the CLI's
    /// --budget flag where the pair count is the natural knob.
    pub fn with_max_pairs(max_pairs: usize) -> Self {
        Budget {
            max_pairs,
            ..Budget::default()
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("basis computation budget exceeded: {0}")]
    BudgetExceeded(String),
}

/// Euclidean normal form of `p` modulo `basis` under `ord`.
///
/// Repeatedly takes the largest reducible term c*m, picks the first
/// basis element g (in slice order) with LM(g) | m and
/// q = floor(c / LC(g)) nonzero, and subtracts q * (m / LM(g)) * g.
/// In the result every coefficient lies in [0, LC(g)) for every g whose
/// leading monomial divides that term's monomial.  Modulo a strong
/// Groebner basis the result is independent of the choices made here;
/// `buchberger` relies on that, and the randomized tests shuffle the
/// slice order to exercise it.
pub fn strong_reduce(p: &Poly4, basis: &[Poly4], ord: &TermOrder) -> Poly4 {
    let lts: Vec<(usize, Mono4, BigInt)> = basis
        .iter()
        .enumerate()
        .filter_map(|(i, g)| g.leading_term(ord).map(|(m, c)| (i, m, c.clone())))
        .collect();
    let mut p = p.clone();
    'steps: loop {
        let mut terms: Vec<(Mono4, BigInt)> =
            p.terms().map(|(m, c)| (m, c.clone())).collect();
        terms.sort_by(|a, b| ord.compare(&b.0, &a.0));
        for (m, c) in terms {
            for (gi, gm, gc) in &lts {
                if !mono_divides(*gm, m) {
                    continue;
                }
                let q = c.div_floor(gc);
                if q.is_zero() {
                    continue;
                }
                p = &p - &basis[*gi].mul_term(mono_div(m, *gm), &q);
                continue 'steps;
            }
        }
        return p;
    }
}

/// Cancels the two leading terms over the lcm of their monomials, with
/// both coefficients lifted to lcm(LC(f), LC(g)).
pub fn s_polynomial(f: &Poly4, g: &Poly4, ord: &TermOrder) -> Poly4 {
    let (fm, fc) = f.leading_term(ord).expect("s_polynomial of zero");
    let (gm, gc) = g.leading_term(ord).expect("s_polynomial of zero");
    let m = mono_lcm(fm, gm);
    let c = fc.lcm(gc);
    &f.mul_term(mono_div(m, fm), &(&c / fc)) - &g.mul_term(mono_div(m, gm), &(&c / gc))
}

/// Bezout combination of the pair: its leading term is
/// gcd(LC(f), LC(g)) times the lcm of the leading monomials, a
/// coefficient neither input can reach alone unless one LC divides the
/// other.
pub fn g_polynomial(f: &Poly4, g: &Poly4, ord: &TermOrder) -> Poly4 {
    let (fm, fc) = f.leading_term(ord).expect("g_polynomial of zero");
    let (gm, gc) = g.leading_term(ord).expect("g_polynomial of zero");
    let m = mono_lcm(fm, gm);
    let ext = fc.extended_gcd(gc);
    &f.mul_term(mono_div(m, fm), &ext.x) + &g.mul_term(mono_div(m, gm), &ext.y)
}

/// Total order on polynomials used for canonical element ordering:
/// compare term sequences from the `ord`-largest term down, monomial
/// first and coefficient second; a strict prefix is smaller.
pub fn compare_polys(a: &Poly4, b: &Poly4, ord: &TermOrder) -> Ordering {
    let key = |p: &Poly4| {
        let mut ts: Vec<(Mono4, BigInt)> = p.terms().map(|(m, c)| (m, c.clone())).collect();
        ts.sort_by(|x, y| ord.compare(&y.0, &x.0));
        ts
    };
    let (ta, tb) = (key(a), key(b));
    for ((ma, ca), (mb, cb)) in ta.iter().zip(tb.iter()) {
        match ord.compare(ma, mb).then_with(|| ca.cmp(cb)) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    ta.len().cmp(&tb.len())
}

/// The reduced strong Groebner basis of an ideal: minimal, tail-reduced,
/// leading coefficients positive, elements sorted ascending.  Equal
/// ideals under the same order produce equal values, so `==` compares
/// ideals and the summaries (cardinality, element sum, largest element)
/// are invariants of the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: TermOrder,
    elements: Vec<Poly4>,
}

impl GroebnerBasis {
    /// The basis `{1}` of the whole ring.
    pub fn unit(ord: &TermOrder) -> Self {
        GroebnerBasis {
            order: *ord,
            elements: vec![Poly4::one()],
        }
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Poly4] {
        &self.elements
    }

    pub fn cardinality(&self) -> usize {
        self.elements.len()
    }

    /// True when the basis presents the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    /// Sum of all basis elements; a crude but order-stable fingerprint.
    pub fn sum(&self) -> Poly4 {
        self.elements
            .iter()
            .fold(Poly4::zero(), |acc, p| &acc + p)
    }

    /// The largest element under the basis order.
    pub fn max_element(&self) -> Option<&Poly4> {
        self.elements.last()
    }

    pub fn reduce(&self, p: &Poly4) -> Poly4 {
        strong_reduce(p, &self.elements, &self.order)
    }

    /// Ideal membership test.
    pub fn contains(&self, p: &Poly4) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "order": self.order,
            "cardinality": self.cardinality(),
            "elements": self.elements.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Completes `gens` to the reduced strong Groebner basis of the ideal
/// they generate.
///
/// Critical pairs are processed in ascending order of their lcm
/// monomial.  The S-polynomial of a pair is skipped only when both the
/// leading monomials and the leading coefficients are coprime (over Z
/// the monomial condition alone is not sound); the G-polynomial is
/// skipped when one leading coefficient divides the other, since the
/// Bezout combination is then a multiple of one of the inputs.
pub fn buchberger(
    gens: &[Poly4],
    ord: &TermOrder,
    budget: &Budget,
) -> Result<GroebnerBasis, GroebnerError> {
    let mut basis: Vec<Poly4> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let g = g.normalize_sign(ord);
        if g.is_unit_constant() {
            return Ok(GroebnerBasis::unit(ord));
        }
        basis.push(g);
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis {
            order: *ord,
            elements: Vec::new(),
        });
    }

    let lt = |p: &Poly4| {
        let (m, c) = p.leading_term(ord).expect("basis elements are nonzero");
        (m, c.clone())
    };

    // Min-heap of critical pairs keyed by the lcm of leading monomials.
    let mut heap: BinaryHeap<Reverse<([u64; 5], usize, usize)>> = BinaryHeap::new();
    let push_pairs = |heap: &mut BinaryHeap<Reverse<([u64; 5], usize, usize)>>,
                      basis: &[Poly4],
                      j: usize| {
        let (mj, _) = basis[j].leading_term(ord).expect("nonzero");
        for (i, gi) in basis.iter().enumerate().take(j) {
            let (mi, _) = gi.leading_term(ord).expect("nonzero");
            heap.push(Reverse((ord.sort_key(&mono_lcm(mi, mj)), i, j)));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut heap, &basis, j);
    }

    let mut pairs_done = 0usize;
    while let Some(Reverse((_, i, j))) = heap.pop() {
        pairs_done += 1;
        if pairs_done > budget.max_pairs {
            return Err(GroebnerError::BudgetExceeded(format!(
                "more than {} critical pairs (raise the budget to go further)",
                budget.max_pairs
            )));
        }

        let (mi, ci) = lt(&basis[i]);
        let (mj, cj) = lt(&basis[j]);
        let monos_coprime = mono_lcm(mi, mj) == mono_mul(mi, mj);
        let lcs_coprime = ci.gcd(&cj).is_one();

        let mut candidates: Vec<Poly4> = Vec::with_capacity(2);
        if !(monos_coprime && lcs_coprime) {
            candidates.push(s_polynomial(&basis[i], &basis[j], ord));
        }
        if !(ci.is_multiple_of(&cj) || cj.is_multiple_of(&ci)) {
            candidates.push(g_polynomial(&basis[i], &basis[j], ord));
        }

        for cand in candidates {
            let reduced = strong_reduce(&cand, &basis, ord).normalize_sign(ord);
            if reduced.is_zero() {
                continue;
            }
            if reduced.is_unit_constant() {
                return Ok(GroebnerBasis::unit(ord));
            }
            basis.push(reduced);
            if basis.len() > budget.max_basis {
                return Err(GroebnerError::BudgetExceeded(format!(
                    "more than {} intermediate basis elements",
                    budget.max_basis
                )));
            }
            push_pairs(&mut heap, &basis, basis.len() - 1);
        }
    }

    Ok(inter_reduce(basis, ord))
}

/// Minimalizes a completed strong basis and reduces every tail, yielding
/// the unique reduced form.
///
/// An element is redundant when another element's leading monomial and
/// leading coefficient both divide its own; completion guarantees the
/// survivors still generate, and also that no survivor's leading term is
/// strongly reducible by another survivor, so the final pass only
/// rewrites tails (leading terms are fixed points) and one pass
/// suffices.
fn inter_reduce(mut basis: Vec<Poly4>, ord: &TermOrder) -> GroebnerBasis {
    basis.sort_by(|a, b| compare_polys(a, b, ord));

    let lts: Vec<(Mono4, BigInt)> = basis
        .iter()
        .map(|p| {
            let (m, c) = p.leading_term(ord).expect("nonzero");
            (m, c.clone())
        })
        .collect();
    let mut keep: Vec<usize> = Vec::new();
    'cand: for (gi, (gm, gc)) in lts.iter().enumerate() {
        for (hi, (hm, hc)) in lts.iter().enumerate() {
            if hi == gi {
                continue;
            }
            let dominates = mono_divides(*hm, *gm) && gc.is_multiple_of(hc);
            if dominates {
                let mutual = mono_divides(*gm, *hm) && hc.is_multiple_of(gc);
                if mutual && hi > gi {
                    // Identical leading terms: keep the sort-first one.
                    continue;
                }
                continue 'cand;
            }
        }
        keep.push(gi);
    }

    let minimal: Vec<Poly4> = keep.into_iter().map(|i| basis[i].clone()).collect();
    let mut reduced: Vec<Poly4> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly4> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        reduced.push(strong_reduce(&minimal[i], &others, ord));
    }
    reduced.sort_by(|a, b| compare_polys(a, b, ord));
    GroebnerBasis {
        order: *ord,
        elements: reduced,
    }
}

/// True when the two generating sets present the same ideal: each
/// generator of one side reduces to zero modulo a basis of the other.
pub fn ideal_equal(
    a: &[Poly4],
    b: &[Poly4],
    ord: &TermOrder,
    budget: &Budget,
) -> Result<bool, GroebnerError> {
    let ga = buchberger(a, ord, budget)?;
    let gb = buchberger(b, ord, budget)?;
    Ok(a.iter().all(|p| gb.contains(p)) && b.iter().all(|p| ga.contains(p)))
}

/// The relations that make T and S invertible in the four-variable
/// ring: T*Ti - 1 and S*Si - 1.  Every ideal pulled back from the
/// Laurent ring carries both.
pub fn units_relations() -> [Poly4; 2] {
    let t_ti = Poly4::from_terms([
        ([1, 0, 1, 0], BigInt::one()),
        ([0, 0, 0, 0], -BigInt::one()),
    ]);
    let s_si = Poly4::from_terms([
        ([0, 1, 0, 1], BigInt::one()),
        ([0, 0, 0, 0], -BigInt::one()),
    ]);
    [t_ti, s_si]
}

/// The reduced strong Groebner basis attached to an elementary ideal:
/// generators are pulled back to Z[T, S, Ti, Si] and joined with the
/// units relations.  The whole ring collapses to {1}; the zero ideal
/// keeps exactly the units relations.
pub fn groebner_invariant(
    ideal: &ElementaryIdeal,
    ord: &TermOrder,
    budget: &Budget,
) -> Result<GroebnerBasis, GroebnerError> {
    match ideal.flag {
        IdealFlag::WholeRing => Ok(GroebnerBasis::unit(ord)),
        IdealFlag::ZeroIdeal => buchberger(&units_relations(), ord, budget),
        IdealFlag::General => {
            let mut gens: Vec<Poly4> = ideal.generators.iter().map(pullback).collect();
            gens.extend(units_relations());
            buchberger(&gens, ord, budget)
        }
    }
}
