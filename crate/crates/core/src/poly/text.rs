//! The plain-text polynomial format: signed integer-coefficient terms with
//! `*`-separated factors and `^` exponents, e.g. `1 - s - t + s*t` or
//! `T*Ti - 1`.  Printing and parsing round-trip.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use super::laurent::grlex_ts;
use super::order::{total_degree, Mono4, AXIS_NAMES};
use super::{LaurentPoly, Poly4};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("polynomial syntax error at position {pos}: {msg}")]
pub struct PolyParseError {
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, PolyParseError> {
    Err(PolyParseError {
        pos,
        msg: msg.into(),
    })
}

/// One parsed term: coefficient and per-variable exponent sums.
struct RawTerm {
    coef: BigInt,
    exps: Vec<i64>,
}

/// Parses `src` over the given variable table.  Longest variable names
/// must come first when one is a prefix of another; we sort internally.
fn parse_terms(src: &str, vars: &[&str]) -> Result<Vec<RawTerm>, PolyParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut pos = 0usize;
    let n = chars.len();
    let skip_ws = |pos: &mut usize| {
        while *pos < n && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    // Longest match first so "Ti" wins over "T".
    let mut var_order: Vec<usize> = (0..vars.len()).collect();
    var_order.sort_by_key(|&i| std::cmp::Reverse(vars[i].len()));

    let read_int = |pos: &mut usize| -> Option<BigInt> {
        let start = *pos;
        while *pos < n && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            return None;
        }
        let digits: String = chars[start..*pos].iter().collect();
        Some(digits.parse().expect("digit run parses"))
    };

    let mut terms = Vec::new();
    skip_ws(&mut pos);
    if pos == n {
        return err(pos, "empty polynomial");
    }
    let mut first = true;
    while pos < n {
        // Sign.
        let mut negative = false;
        if first {
            if chars[pos] == '+' || chars[pos] == '-' {
                negative = chars[pos] == '-';
                pos += 1;
            }
        } else {
            match chars[pos] {
                '+' => pos += 1,
                '-' => {
                    negative = true;
                    pos += 1;
                }
                _ => return err(pos, "expected '+' or '-' between terms"),
            }
        }
        first = false;
        skip_ws(&mut pos);

        // Factors.
        let mut coef: BigInt = BigInt::one();
        let mut exps = vec![0i64; vars.len()];
        let mut expect_factor = true;
        loop {
            if expect_factor {
                skip_ws(&mut pos);
                if pos >= n {
                    return err(pos, "expected a factor");
                }
                if let Some(i) = read_int(&mut pos) {
                    coef *= i;
                } else {
                    let var = var_order.iter().copied().find(|&v| {
                        let name: Vec<char> = vars[v].chars().collect();
                        chars[pos..].starts_with(&name)
                    });
                    let Some(v) = var else {
                        return err(pos, format!("expected a coefficient or one of {vars:?}"));
                    };
                    pos += vars[v].chars().count();
                    let mut exp: i64 = 1;
                    if pos < n && chars[pos] == '^' {
                        pos += 1;
                        let neg = pos < n && chars[pos] == '-';
                        if neg {
                            pos += 1;
                        }
                        let Some(mag) = read_int(&mut pos) else {
                            return err(pos, "expected an integer exponent after '^'");
                        };
                        let mag: i64 = mag
                            .try_into()
                            .map_err(|_| PolyParseError {
                                pos,
                                msg: "exponent out of range".into(),
                            })?;
                        exp = if neg { -mag } else { mag };
                    }
                    exps[v] += exp;
                }
                expect_factor = false;
            } else {
                skip_ws(&mut pos);
                if pos < n && chars[pos] == '*' {
                    pos += 1;
                    expect_factor = true;
                } else {
                    break;
                }
            }
        }
        if negative {
            coef = -coef;
        }
        terms.push(RawTerm { coef, exps });
        skip_ws(&mut pos);
    }
    Ok(terms)
}

/// Parses a Laurent polynomial in `t` and `s`.
pub fn parse_laurent(src: &str) -> Result<LaurentPoly, PolyParseError> {
    let terms = parse_terms(src, &["t", "s"])?;
    Ok(LaurentPoly::from_terms(terms.into_iter().map(|t| {
        ((t.exps[0], t.exps[1]), t.coef)
    })))
}

/// Parses a polynomial in `T`, `S`, `Ti`, `Si`; exponents must be
/// nonnegative.
pub fn parse_poly4(src: &str) -> Result<Poly4, PolyParseError> {
    let terms = parse_terms(src, &AXIS_NAMES)?;
    let mut out = Poly4::zero();
    for t in terms {
        let mut m: Mono4 = [0; 4];
        for (i, &e) in t.exps.iter().enumerate() {
            if e < 0 {
                return err(0, format!("negative exponent on {}", AXIS_NAMES[i]));
            }
            m[i] = e.try_into().map_err(|_| PolyParseError {
                pos: 0,
                msg: "exponent out of range".into(),
            })?;
        }
        out.add_term(m, t.coef);
    }
    Ok(out)
}

fn push_term(
    out: &mut String,
    first: bool,
    coef: &BigInt,
    factors: &[(&str, i64)],
) {
    let negative = coef.is_negative();
    if first {
        if negative {
            out.push('-');
        }
    } else if negative {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let mag = coef.abs();
    let mut wrote = false;
    if !mag.is_one() || factors.is_empty() {
        out.push_str(&mag.to_string());
        wrote = true;
    }
    for &(name, exp) in factors {
        if wrote {
            out.push('*');
        }
        out.push_str(name);
        if exp != 1 {
            out.push('^');
            out.push_str(&exp.to_string());
        }
        wrote = true;
    }
}

/// Renders a Laurent polynomial, terms ascending in the graded order with
/// the first variable before the second.
pub fn print_laurent(p: &LaurentPoly, names: [&str; 2]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|(a, _), (b, _)| grlex_ts(*a, *b));
    let mut out = String::new();
    for (i, ((et, es), c)) in terms.into_iter().enumerate() {
        let mut factors = Vec::new();
        if et != 0 {
            factors.push((names[0], et));
        }
        if es != 0 {
            factors.push((names[1], es));
        }
        // Within a term, factors read alphabetically: s*t, x*y.
        factors.sort_by_key(|&(name, _)| name);
        push_term(&mut out, i == 0, c, &factors);
    }
    out
}

/// Renders a four-variable polynomial, terms ascending in the default
/// graded order (T, S, Ti, Si).
pub fn print_poly4(p: &Poly4) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|(a, _), (b, _)| {
        (total_degree(*a), *a).cmp(&(total_degree(*b), *b))
    });
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let mut factors = Vec::new();
        for (axis, &name) in AXIS_NAMES.iter().enumerate() {
            if m[axis] != 0 {
                factors.push((name, m[axis] as i64));
            }
        }
        push_term(&mut out, i == 0, c, &factors);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic_laurent() {
        let p = parse_laurent("1 - s - t + s*t").unwrap();
        assert_eq!(p.num_terms(), 4);
        assert_eq!(p.coefficient((1, 1)), BigInt::one());
        assert_eq!(p.coefficient((1, 0)), BigInt::from(-1));
        let q = parse_laurent("-2*t^-3*s + 4").unwrap();
        assert_eq!(q.coefficient((-3, 1)), BigInt::from(-2));
        assert_eq!(q.coefficient((0, 0)), BigInt::from(4));
    }

    #[test]
    fn parse_accumulates_like_terms() {
        assert_eq!(
            parse_laurent("t + t").unwrap(),
            parse_laurent("2*t").unwrap()
        );
        assert!(parse_laurent("t - t").unwrap().is_zero());
        assert!(parse_laurent("0").unwrap().is_zero());
    }

    #[test]
    fn parse_poly4_variables() {
        let p = parse_poly4("1 - T*Ti").unwrap();
        assert_eq!(p.num_terms(), 2);
        let (m, _) = p
            .terms()
            .find(|(m, _)| *m != [0, 0, 0, 0])
            .unwrap();
        assert_eq!(m, [1, 0, 1, 0]);
        assert!(parse_poly4("T^-1").is_err());
        assert!(parse_poly4("t").is_err());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = parse_laurent("1 + + t").unwrap_err();
        assert!(e.pos > 0);
        assert!(parse_laurent("").is_err());
        assert!(parse_laurent("1 + q").is_err());
        assert!(parse_laurent("2 t").is_err());
        assert!(parse_laurent("t^").is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        for src in [
            "0",
            "1",
            "-1",
            "1 - s - t + s*t",
            "-3 + 2*t^-2*s^3 - t^5",
            "s^-1 + t^-1",
        ] {
            let p = parse_laurent(src).unwrap();
            let printed = print_laurent(&p, ["t", "s"]);
            assert_eq!(parse_laurent(&printed).unwrap(), p, "via {printed:?}");
        }
        for src in ["0", "1 - T*Ti", "S*Si - 1", "3*T^2*Si - 2*Ti + 7"] {
            let p = parse_poly4(src).unwrap();
            let printed = print_poly4(&p);
            assert_eq!(parse_poly4(&printed).unwrap(), p, "via {printed:?}");
        }
    }

    #[test]
    fn print_is_ascending_and_stable() {
        let p = parse_laurent("s*t + 1 - t - s").unwrap();
        assert_eq!(print_laurent(&p, ["t", "s"]), "1 - s - t + s*t");
        let q = parse_poly4("T + 1").unwrap();
        assert_eq!(print_poly4(&q), "1 + T");
    }
}
