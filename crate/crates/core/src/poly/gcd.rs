//! GCD in Z[t^{±1}, s^{±1}].  The Laurent ring is the localization of the
//! UFD Z[t, s] at the monomials, so after clearing units the GCD is
//! computed in Z[t, s]: integer/polynomial content splits off, and the
//! primitive parts run through a primitive pseudo-remainder sequence with
//! Z[t, s] viewed as (Z[t])[s].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::LaurentPoly;

/// GCD of a family of Laurent polynomials, in canonical unit form (the GCD
/// is only defined up to units `±t^n s^m`).  Zero entries are skipped; the
/// GCD of an all-zero family is zero.
pub fn gcd_laurent(polys: &[LaurentPoly]) -> LaurentPoly {
    let mut acc: Option<LaurentPoly> = None;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => p.canonical_unit_form(),
            Some(g) if g.is_one() => g,
            Some(g) => gcd2(&g, p),
        });
    }
    acc.unwrap_or_else(LaurentPoly::zero)
}

fn gcd2(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let g = bi_gcd(&to_bi(a), &to_bi(b));
    from_bi(&g).canonical_unit_form()
}

/// Dense univariate polynomial over Z: coefficient of t^i at index i, no
/// trailing zeros.
type Uni = Vec<BigInt>;

fn uni_trim(mut p: Uni) -> Uni {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn uni_sub(a: &Uni, b: &Uni) -> Uni {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    uni_trim(out)
}

fn uni_mul(a: &Uni, b: &Uni) -> Uni {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ac) in a.iter().enumerate() {
        for (j, bc) in b.iter().enumerate() {
            out[i + j] += ac * bc;
        }
    }
    out
}

/// GCD of the integer coefficients; 0 for the zero polynomial.
fn uni_int_content(p: &Uni) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides out the integer content and makes the leading coefficient
/// positive.
fn uni_primitive(p: Uni) -> Uni {
    if p.is_empty() {
        return p;
    }
    let mut content = uni_int_content(&p);
    if p.last().unwrap().is_negative() {
        content = -content;
    }
    p.into_iter().map(|c| c / &content).collect()
}

/// Remainder of `a` after repeatedly eliminating its leading term against
/// `b`, multiplying by `b`'s leading coefficient as needed.  Differs from
/// `a mod b` by a power of that coefficient, which the primitive remainder
/// sequence discards anyway.
fn uni_prem(a: &Uni, b: &Uni) -> Uni {
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        let mut next: Uni = r.iter().map(|c| c * lb).collect();
        for (j, bc) in b.iter().enumerate() {
            let v = &next[dr - db + j] - &lr * bc;
            next[dr - db + j] = v;
        }
        r = uni_trim(next);
    }
    r
}

/// Exact quotient in Z[t], or None when `b` does not divide `a`.
fn uni_exact_div(a: &Uni, b: &Uni) -> Option<Uni> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if b.is_empty() {
        return None;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); a.len().checked_sub(b.len())? + 1];
    let mut r = a.clone();
    while !r.is_empty() {
        if r.len() <= db {
            return None;
        }
        let dr = r.len() - 1;
        let (qc, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            let v = &r[dr - db + j] - &qc * bc;
            r[dr - db + j] = v;
        }
        q[dr - db] = qc;
        r = uni_trim(r);
    }
    Some(q)
}

fn uni_gcd(a: &Uni, b: &Uni) -> Uni {
    if a.is_empty() {
        return uni_primitive(b.clone())
            .into_iter()
            .map(|c| c * uni_int_content(b))
            .collect();
    }
    if b.is_empty() {
        return uni_gcd(b, a);
    }
    let content = uni_int_content(a).gcd(&uni_int_content(b));
    let mut x = uni_primitive(a.clone());
    let mut y = uni_primitive(b.clone());
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = uni_prem(&x, &y);
        x = y;
        y = uni_primitive(r);
    }
    x.into_iter().map(|c| c * &content).collect()
}

/// Z[t, s] as (Z[t])[s]: coefficient of s^j at index j, no trailing zeros.
type Bi = Vec<Uni>;

fn bi_trim(mut p: Bi) -> Bi {
    while p.last().map_or(false, |c| c.is_empty()) {
        p.pop();
    }
    p
}

/// GCD over Z[t] of the coefficients.
fn bi_content(p: &Bi) -> Uni {
    p.iter().fold(Vec::new(), |g, c| uni_gcd(&g, c))
}

fn bi_divide_content(p: &Bi, content: &Uni) -> Bi {
    p.iter()
        .map(|c| {
            if c.is_empty() {
                Vec::new()
            } else {
                uni_exact_div(c, content).expect("content divides every coefficient")
            }
        })
        .collect()
}

fn bi_prem(a: &Bi, b: &Bi) -> Bi {
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        let mut next: Bi = r.iter().map(|c| uni_mul(c, lb)).collect();
        let shifted: Bi = (0..=db).map(|j| uni_mul(&lr, &b[j])).collect();
        for (j, term) in shifted.iter().enumerate() {
            next[dr - db + j] = uni_sub(&next[dr - db + j], term);
        }
        r = bi_trim(next);
    }
    r
}

fn bi_gcd(a: &Bi, b: &Bi) -> Bi {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let content = uni_gcd(&bi_content(a), &bi_content(b));
    let mut x = bi_divide_content(a, &bi_content(a));
    let mut y = bi_divide_content(b, &bi_content(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = bi_prem(&x, &y);
        x = y;
        y = if r.is_empty() {
            r
        } else {
            bi_divide_content(&r, &bi_content(&r))
        };
    }
    x.iter().map(|c| uni_mul(c, &content)).collect()
}

/// Clears units (shifts the minimum exponents to zero) and lays the terms
/// out as (Z[t])[s].
fn to_bi(p: &LaurentPoly) -> Bi {
    let Some((mt, ms)) = p.min_exps() else {
        return Vec::new();
    };
    let mut out: Bi = Vec::new();
    for ((et, es), c) in p.terms() {
        let (i, j) = ((et - mt) as usize, (es - ms) as usize);
        if out.len() <= j {
            out.resize(j + 1, Vec::new());
        }
        if out[j].len() <= i {
            out[j].resize(i + 1, BigInt::zero());
        }
        out[j][i] = c.clone();
    }
    out
}

fn from_bi(p: &Bi) -> LaurentPoly {
    LaurentPoly::from_terms(p.iter().enumerate().flat_map(|(j, c)| {
        c.iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(i, v)| ((i as i64, j as i64), v.clone()))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_laurent;

    fn p(src: &str) -> LaurentPoly {
        parse_laurent(src).unwrap()
    }

    fn g(srcs: &[&str]) -> LaurentPoly {
        let polys: Vec<_> = srcs.iter().map(|s| p(s)).collect();
        gcd_laurent(&polys)
    }

    #[test]
    fn shared_factor_with_integer_content() {
        // 6t^2(s-1) and 4t(s-1): common factor 2t(s-1), canonically 2s - 2.
        assert_eq!(g(&["6*t^2*s - 6*t^2", "4*t*s - 4*t"]), p("-2 + 2*s"));
    }

    #[test]
    fn zero_and_single_inputs() {
        assert!(g(&[]).is_zero());
        assert!(g(&["0", "0"]).is_zero());
        assert_eq!(g(&["0", "t^-2*s - t^-1*s"]), p("-1 + t"));
        assert_eq!(g(&["-3*t^5"]), p("3"));
    }

    #[test]
    fn coprime_inputs() {
        assert!(g(&["1 + t", "1 + s"]).is_one());
        assert!(g(&["2 + t", "3"]).is_one());
        assert_eq!(g(&["2*t", "4*s"]), p("2"));
    }

    #[test]
    fn common_polynomial_factor() {
        let f = p("1 - s*t");
        let a = &f * &p("1 + t");
        let b = &f * &p("1 - s");
        // 1 - s*t has grlex-leading term -s*t, so the canonical form is
        // the negation.
        assert_eq!(gcd_laurent(&[a, b]), p("-1 + s*t"));
    }

    #[test]
    fn negative_exponents_are_units() {
        let f = p("1 - s*t");
        let a = (&f * &p("1 + t")).mul_unit(true, -4, 1);
        let b = (&f * &p("1 - s")).mul_unit(false, 2, -3);
        assert_eq!(gcd_laurent(&[a, b]), p("-1 + s*t"));
    }

    #[test]
    fn folds_over_many_inputs() {
        let f = p("1 - t");
        let inputs: Vec<_> = ["1 + s", "2*s", "1 + s + s^2"]
            .iter()
            .map(|m| &f * &p(m))
            .collect();
        // Canonical form flips the sign so the leading term is +t.
        assert_eq!(gcd_laurent(&inputs), p("-1 + t"));
    }

    #[test]
    fn gcd_divides_both() {
        let a = &p("1 - s - t + s*t") * &p("2 + t^2*s");
        let b = &p("1 - s") * &p("3 - t + s");
        let d = gcd_laurent(&[a.clone(), b.clone()]);
        assert!(a.exact_div(&d).is_some());
        assert!(b.exact_div(&d).is_some());
        assert_eq!(d, p("-1 + s"));
    }
}
