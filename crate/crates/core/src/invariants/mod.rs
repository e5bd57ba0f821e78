//! Orchestration: diagram to presentation matrix to per-level invariants.
//!
//! A report walks the elementary ideals I_0, I_1, ..., I_max of one
//! diagram and records, per level, the ideal flag, the principal
//! polynomial (GCD generator of the smallest principal ideal containing
//! I_k), and the reduced strong Groebner basis of the ideal pulled back
//! to Z[T, S, Ti, Si] with the units relations adjoined, together with
//! the basis summaries (cardinality, element sum, largest element).

mod catalog;

pub use catalog::{catalog, catalog_descriptions, catalog_names, CatalogError};

use std::fmt;

use serde_json::json;

use crate::diagram::Diagram;
use crate::groebner::{groebner_invariant, Budget, GroebnerBasis, GroebnerError};
use crate::ideals::{elementary_ideal, principal_of, IdealFlag};
use crate::poly::{LaurentPoly, TermOrder};
use crate::presentation::build_matrix;

#[derive(Debug, Clone)]
pub struct ReportOptions {
    /// Highest ideal level to compute; levels run 0..=max_k.
    pub max_k: usize,
    pub order: TermOrder,
    pub budget: Budget,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            max_k: 1,
            order: TermOrder::grlex_default(),
            budget: Budget::default(),
        }
    }
}

/// One ideal level of a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelReport {
    pub k: usize,
    pub flag: IdealFlag,
    pub principal: LaurentPoly,
    pub basis: GroebnerBasis,
}

impl LevelReport {
    /// True when the two levels carry the same invariant values: equal
    /// reduced bases (hence equal ideals) and unit-equivalent principal
    /// polynomials.
    pub fn matches(&self, other: &LevelReport) -> bool {
        self.basis == other.basis && self.principal.unit_equivalent(&other.principal)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "k": self.k,
            "flag": self.flag.as_str(),
            "principal": self.principal.to_string(),
            "groebner": self.basis.to_json(),
            "cardinality": self.basis.cardinality(),
            "sum": self.basis.sum().to_string(),
            "max": self.basis.max_element().map(|p| p.to_string()),
        })
    }
}

#[derive(Debug, Clone)]
pub struct InvariantReport {
    /// Human-readable description of the input (catalog name, braid
    /// word, file path, ...).
    pub name: String,
    pub order: TermOrder,
    pub max_k: usize,
    /// Set when the diagram has no crossings: the 0-row presentation
    /// takes its values from the empty-minor boundary conventions, so
    /// they should not be compared against crossed diagrams naively.
    pub degenerate: bool,
    pub levels: Vec<LevelReport>,
}

impl InvariantReport {
    pub fn level(&self, k: usize) -> &LevelReport {
        &self.levels[k]
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "name": self.name,
            "options": {"max_k": self.max_k, "order": self.order},
            "degenerate": self.degenerate,
            "levels": self.levels.iter().map(|l| l.to_json()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name: {}", self.name)?;
        writeln!(f, "order: {}", self.order)?;
        if self.degenerate {
            writeln!(
                f,
                "note: crossing-free presentation; boundary conventions apply"
            )?;
        }
        for level in &self.levels {
            writeln!(f, "level {}  [{}]", level.k, level.flag.as_str())?;
            writeln!(f, "  principal: {}", level.principal)?;
            let n = level.basis.cardinality();
            let plural = if n == 1 { "" } else { "s" };
            writeln!(f, "  groebner ({n} element{plural}): {}", level.basis)?;
            writeln!(f, "  sum: {}", level.basis.sum())?;
            match level.basis.max_element() {
                Some(p) => writeln!(f, "  max: {p}")?,
                None => writeln!(f, "  max: -")?,
            }
        }
        Ok(())
    }
}

/// Computes the full invariant report for a diagram: one presentation
/// matrix, then per level the elementary ideal, its principal
/// polynomial, and its Groebner basis.
pub fn compute_report(
    d: &Diagram,
    name: &str,
    opts: &ReportOptions,
) -> Result<InvariantReport, GroebnerError> {
    let matrix = build_matrix(d);
    let mut levels = Vec::with_capacity(opts.max_k + 1);
    for k in 0..=opts.max_k {
        let ideal = elementary_ideal(&matrix, k);
        let principal = principal_of(&ideal);
        let basis = groebner_invariant(&ideal, &opts.order, &opts.budget)?;
        levels.push(LevelReport {
            k,
            flag: ideal.flag,
            principal,
            basis,
        });
    }
    Ok(InvariantReport {
        name: name.to_string(),
        order: opts.order,
        max_k: opts.max_k,
        degenerate: matrix.rows() == 0,
        levels,
    })
}

/// The classical Alexander polynomial: the level-1 principal polynomial
/// specialized at s = 1, canonically normalized in t.  On classical
/// knots this is the textbook Alexander polynomial.
pub fn classical_alexander(d: &Diagram) -> LaurentPoly {
    let matrix = build_matrix(d);
    let ideal = elementary_ideal(&matrix, 1);
    principal_of(&ideal).eval_s_one().canonical_unit_form()
}

/// Change of variables onto the determinant-style generalized Alexander
/// polynomial: substitutes s = -y and t = -x/y, so x stands for st and
/// y for -s.  Term (a, b) in (t, s) maps to (a, b - a) in (x, y) with
/// the coefficient picking up (-1)^(a+b); the result is unit-normalized.
/// The output reuses the two-variable Laurent type with axes read as
/// (x, y).
pub fn sawollek_form(p: &LaurentPoly) -> LaurentPoly {
    let mapped = LaurentPoly::from_terms(p.terms().map(|((a, b), c)| {
        let flip = (a + b).rem_euclid(2) == 1;
        ((a, b - a), if flip { -c } else { c.clone() })
    }));
    mapped.canonical_unit_form()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_crossing_list;
    use crate::poly::parse_laurent;

    fn lp(src: &str) -> LaurentPoly {
        parse_laurent(src).unwrap()
    }

    fn report(d: &Diagram) -> InvariantReport {
        compute_report(d, "test", &ReportOptions::default()).unwrap()
    }

    #[test]
    fn crossing_free_diagram_is_flagged() {
        let r = report(&Diagram::unknot());
        assert!(r.degenerate);
        assert_eq!(r.levels.len(), 2);
        // 0 rows: every level is the whole ring by the empty-minor
        // convention.
        assert_eq!(r.level(0).flag, IdealFlag::WholeRing);
        assert_eq!(r.level(0).principal, LaurentPoly::one());
        assert!(r.level(0).basis.is_unit_ideal());
    }

    #[test]
    fn kink_levels() {
        let d = parse_crossing_list("P 1 2 1 2").unwrap();
        let r = report(&d);
        assert!(!r.degenerate);
        assert!(r.level(0).principal.is_zero());
        assert_eq!(r.level(0).flag, IdealFlag::ZeroIdeal);
        // Zero ideal pulls back to the units relations alone.
        assert_eq!(r.level(0).basis.cardinality(), 2);
        assert!(r.level(1).principal.is_one());
        assert!(r.level(1).basis.is_unit_ideal());
    }

    #[test]
    fn four_crossing_example_report() {
        let d = parse_crossing_list("P 6 1 2 7\nP 2 5 6 3\nN 3 8 1 4\nV 4 7 8 5").unwrap();
        let r = report(&d);
        let expected = lp("1 - s - t + s^2*t + s*t^2 - s^2*t^2");
        assert!(r.level(0).principal.unit_equivalent(&expected));
        assert_eq!(r.level(0).flag, IdealFlag::General);
        assert!(!r.level(0).basis.is_unit_ideal());
        // Its classical specialization is trivial.
        assert!(classical_alexander(&d).is_one());
    }

    #[test]
    fn levels_are_contiguous_and_nested() {
        let d = parse_crossing_list("P 6 1 2 7\nP 2 5 6 3\nN 3 8 1 4\nV 4 7 8 5").unwrap();
        let opts = ReportOptions {
            max_k: 3,
            ..ReportOptions::default()
        };
        let r = compute_report(&d, "test", &opts).unwrap();
        assert_eq!(
            r.levels.iter().map(|l| l.k).collect::<Vec<_>>(),
            vec![0, 1, 2, 3]
        );
        // I_k is contained in I_{k+1}: every basis element of level k
        // reduces to zero at level k+1.
        for w in r.levels.windows(2) {
            for g in w[0].basis.elements() {
                assert!(w[1].basis.contains(g), "level {} not nested", w[0].k);
            }
        }
    }

    #[test]
    fn report_matching_is_value_based() {
        let a = report(&parse_crossing_list("P 1 2 1 2").unwrap());
        // A doubled kink: same knot, different diagram.
        let b = report(&parse_crossing_list("P 1 2 3 2\nP 3 4 1 4").unwrap());
        assert!(a.level(0).matches(b.level(0)));
        assert!(a.level(1).matches(b.level(1)));
    }

    #[test]
    fn sawollek_change_of_variables() {
        // The three-factor polynomial in (t, s) becomes the three-factor
        // polynomial in (x, y) = (st, -s):
        // (1-st)(1-s)(1-t) -> (1-x)(1+y)(x+y) up to units.
        let p = lp("1 - s - t + s^2*t + s*t^2 - s^2*t^2");
        let expected = lp("t + s + s^2 - t^2 - t^2*s - t*s^2").canonical_unit_form();
        assert_eq!(sawollek_form(&p), expected);
        assert!(sawollek_form(&LaurentPoly::zero()).is_zero());
        assert!(sawollek_form(&LaurentPoly::one()).is_one());
        // Units map to units: the result is normalization-stable.
        let unit_scaled = p.mul_unit(true, 2, 1);
        assert_eq!(sawollek_form(&unit_scaled), sawollek_form(&p));
    }

    #[test]
    fn classical_alexander_of_crossing_free_unknot() {
        assert!(classical_alexander(&Diagram::unknot()).is_one());
    }

    #[test]
    fn closed_braid_inversion_preserves_ideals() {
        use crate::diagram::parse_braid;

        let beta = parse_braid("width=4 v3 s3 s2 s1 v1").unwrap();
        let l1 = report(&beta.closure());
        // Closing the inverse word mirrors the closure vertically, which
        // fixes all the ideals.
        let inverse = report(&beta.invert().closure());
        // This word is anti-palindromic, so on it the reversed inverse
        // closure has the same ideals as well (not true generically).
        let reversed = report(&beta.invert().closure().reverse());
        for k in 0..=1 {
            assert!(l1.level(k).matches(inverse.level(k)), "inverse, level {k}");
            assert!(l1.level(k).matches(reversed.level(k)), "reversed, level {k}");
        }
    }
}
