//! Text formats for diagrams and braid words.
//!
//! Crossing list: one crossing per line, `P a b c d` / `N a b c d` /
//! `V a b c d` with integer semiarc ids in slot order (in_a, in_b, out_c,
//! out_d), an optional `BASE k` line, and `#` comments.  An empty list is
//! the 0-crossing unknot.
//!
//! Signed Gauss code: tokens `O<n><sign>` / `U<n><sign>` in traversal
//! order, e.g. `O1+O2+U1+U2+`.  Virtual crossings are omitted: they only
//! exchange labels and never cut semiarcs.
//!
//! Braid words: `width=<k>` followed by letters `s<i>` (positive),
//! `S<i>` (negative), `v<i>` (virtual).

use thiserror::Error;

use super::{BraidLetter, Crossing, CrossingKind, Diagram, DiagramError, VirtualBraidWord};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        msg: msg.into(),
    })
}

fn diagram_err(line: usize, e: DiagramError) -> ParseError {
    ParseError {
        line,
        msg: e.to_string(),
    }
}

/// Parses the crossing-list format into a validated diagram.
pub fn parse_crossing_list(text: &str) -> Result<Diagram, ParseError> {
    struct RawCrossing {
        line: usize,
        kind: CrossingKind,
        ids: [i64; 4],
    }
    let mut raw = Vec::new();
    let mut base: Option<(usize, i64)> = None;
    for (i, full_line) in text.lines().enumerate() {
        let line = i + 1;
        let content = full_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let head = tokens.next().unwrap();
        let rest: Vec<&str> = tokens.collect();
        let parse_ids = |count: usize| -> Result<Vec<i64>, ParseError> {
            if rest.len() != count {
                return err(
                    line,
                    format!("{head} takes {count} semiarc id(s), found {}", rest.len()),
                );
            }
            rest.iter()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| ParseError {
                            line,
                            msg: format!("invalid semiarc id {t:?}"),
                        })
                })
                .collect()
        };
        match head {
            "P" | "N" | "V" => {
                let kind = match head {
                    "P" => CrossingKind::Positive,
                    "N" => CrossingKind::Negative,
                    _ => CrossingKind::Virtual,
                };
                let ids = parse_ids(4)?;
                raw.push(RawCrossing {
                    line,
                    kind,
                    ids: [ids[0], ids[1], ids[2], ids[3]],
                });
            }
            "BASE" => {
                if base.is_some() {
                    return err(line, "multiple BASE lines");
                }
                base = Some((line, parse_ids(1)?[0]));
            }
            other => {
                return err(line, format!("expected P, N, V, or BASE, found {other:?}"));
            }
        }
    }
    if raw.is_empty() {
        // 0-crossing unknot: a single crossing-free loop.
        let d = Diagram::unknot();
        return match base {
            None => Ok(d),
            Some((line, id)) => {
                if id == 1 {
                    d.with_base_point("1").map_err(|e| diagram_err(line, e))
                } else {
                    err(line, format!("BASE names unknown semiarc {id}"))
                }
            }
        };
    }
    let mut ids: Vec<i64> = raw.iter().flat_map(|c| c.ids).collect();
    ids.sort_unstable();
    ids.dedup();
    let index = |id: i64| ids.binary_search(&id).unwrap();
    let labels = ids.iter().map(|id| id.to_string()).collect();
    let crossings = raw
        .iter()
        .map(|c| Crossing {
            kind: c.kind,
            slots: c.ids.map(&index),
        })
        .collect();
    let base_id = match base {
        None => None,
        Some((line, id)) => match ids.binary_search(&id) {
            Ok(i) => Some(i),
            Err(_) => return err(line, format!("BASE names unknown semiarc {id}")),
        },
    };
    Diagram::new(labels, crossings, base_id).map_err(|e| {
        // Attribute bijection failures to the last line that referenced the
        // offending semiarc, when one is named.
        let line = match &e {
            DiagramError::SlotBijection { label, .. } => raw
                .iter()
                .filter(|c| c.ids.iter().any(|id| id.to_string() == *label))
                .map(|c| c.line)
                .next_back()
                .unwrap_or(0),
            _ => 0,
        };
        diagram_err(line, e)
    })
}

/// Parses a signed Gauss code into a diagram of classical crossings.  The
/// code lists the 2c crossing points met along the knot; semiarc i is the
/// segment leaving the i-th point (1-based labels).
pub fn parse_gauss(text: &str) -> Result<Diagram, ParseError> {
    struct Token {
        over: bool,
        number: u32,
        positive: bool,
    }
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    while pos < chars.len() {
        if chars[pos].is_whitespace() {
            pos += 1;
            continue;
        }
        let over = match chars[pos] {
            'O' => true,
            'U' => false,
            other => {
                return err(1, format!("expected O or U at {:?} (offset {pos})", other));
            }
        };
        pos += 1;
        let start = pos;
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == start {
            return err(1, format!("expected a crossing number at offset {pos}"));
        }
        let number: u32 = chars[start..pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| ParseError {
                line: 1,
                msg: "crossing number out of range".into(),
            })?;
        let positive = match chars.get(pos) {
            Some('+') => true,
            Some('-') => false,
            _ => return err(1, format!("expected + or - after crossing {number}")),
        };
        pos += 1;
        tokens.push(Token {
            over,
            number,
            positive,
        });
    }
    if tokens.is_empty() {
        return Ok(Diagram::unknot());
    }
    let n = tokens.len();
    if n % 2 != 0 {
        return err(1, format!("odd token count {n}"));
    }
    let c = n / 2;
    let labels = (1..=n).map(|i| i.to_string()).collect();
    let mut crossings = Vec::with_capacity(c);
    let mut numbers: Vec<u32> = tokens.iter().map(|t| t.number).collect();
    numbers.sort_unstable();
    numbers.dedup();
    for &number in &numbers {
        let hits: Vec<usize> = (0..n).filter(|&i| tokens[i].number == number).collect();
        let [first, second] = hits[..] else {
            return err(
                1,
                format!("crossing {number} appears {} times, need exactly 2", hits.len()),
            );
        };
        let (o, u) = if tokens[first].over {
            (first, second)
        } else {
            (second, first)
        };
        if tokens[o].over == tokens[u].over {
            return err(1, format!("crossing {number} needs one O and one U token"));
        }
        if tokens[o].positive != tokens[u].positive {
            return err(1, format!("crossing {number} has conflicting signs"));
        }
        // Arc k runs from token k to token k+1; the arc entering token k is
        // k-1 (mod n) and the arc leaving is k.
        let before = |k: usize| (k + n - 1) % n;
        let slots = if tokens[o].positive {
            // (under-in, over-in, over-out, under-out)
            [before(u), before(o), o, u]
        } else {
            // (over-in, under-in, under-out, over-out)
            [before(o), before(u), u, o]
        };
        crossings.push(Crossing {
            kind: if tokens[o].positive {
                CrossingKind::Positive
            } else {
                CrossingKind::Negative
            },
            slots,
        });
    }
    Diagram::new(labels, crossings, None).map_err(|e| diagram_err(1, e))
}

/// Parses `width=<k>` followed by braid letters.
pub fn parse_braid(text: &str) -> Result<VirtualBraidWord, ParseError> {
    let mut tokens = text.split_whitespace();
    let width = match tokens.next() {
        Some(head) if head.starts_with("width=") => head["width=".len()..]
            .parse::<usize>()
            .map_err(|_| ParseError {
                line: 1,
                msg: format!("invalid width in {head:?}"),
            })?,
        other => {
            return err(
                1,
                format!("braid words start with width=<k>, found {other:?}"),
            );
        }
    };
    let mut letters = Vec::new();
    for tok in tokens {
        let (kind, digits) = tok.split_at(1);
        let index: usize = digits.parse().map_err(|_| ParseError {
            line: 1,
            msg: format!("invalid braid letter {tok:?}"),
        })?;
        letters.push(match kind {
            "s" => BraidLetter::Sigma(index),
            "S" => BraidLetter::SigmaInv(index),
            "v" => BraidLetter::Virtual(index),
            _ => return err(1, format!("invalid braid letter {tok:?}")),
        });
    }
    VirtualBraidWord::new(width, letters).map_err(|e| diagram_err(1, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_list_basics() {
        let d = parse_crossing_list("# a kink\nP 1 2 1 2\n").unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.labels(), ["1", "2"]);
        let e = parse_crossing_list("P 1 2 1").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_crossing_list("P 1 2 1 2\nQ 3 4 3 4").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn crossing_list_base_lines() {
        let d = parse_crossing_list("P 1 2 1 2\nBASE 2").unwrap();
        assert_eq!(d.base_point(), Some(1));
        assert!(parse_crossing_list("P 1 2 1 2\nBASE 3").is_err());
        assert!(parse_crossing_list("BASE 1\nP 1 2 1 2\nBASE 2").is_err());
    }

    #[test]
    fn empty_list_is_unknot() {
        let d = parse_crossing_list("# nothing here\n").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.semiarc_count(), 1);
        let based = parse_crossing_list("BASE 1").unwrap();
        assert_eq!(based.base_point(), Some(0));
        assert!(parse_crossing_list("BASE 2").is_err());
    }

    #[test]
    fn ids_may_be_sparse_and_unordered() {
        let d = parse_crossing_list("P 10 -3 10 7\nV 7 40 -3 40").unwrap();
        assert_eq!(d.labels(), ["-3", "7", "10", "40"]);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn bijection_errors_name_a_line() {
        // Arc 2 is consumed on line 1 but never produced.
        let e = parse_crossing_list("P 1 2 3 4\nV 3 4 1 5").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(e.msg.contains("semiarc 2"), "{e}");
    }

    #[test]
    fn gauss_virtual_trefoil() {
        let d = parse_gauss("O1+O2+U1+U2+").unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.semiarc_count(), 4);
        assert_eq!(d.component_count(), 1);
        assert!(d
            .crossings()
            .iter()
            .all(|c| c.kind == CrossingKind::Positive));
    }

    #[test]
    fn gauss_classical_trefoil() {
        let d = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.semiarc_count(), 6);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn gauss_negative_crossings() {
        let d = parse_gauss("O1-U2-O2-U1-").unwrap();
        assert!(d
            .crossings()
            .iter()
            .all(|c| c.kind == CrossingKind::Negative));
    }

    #[test]
    fn gauss_rejects_malformed_codes() {
        assert!(parse_gauss("O1+U1-").is_err());
        assert!(parse_gauss("O1+O1+").is_err());
        assert!(parse_gauss("O1+U2+O2+").is_err());
        assert!(parse_gauss("O1+U1").is_err());
        assert!(parse_gauss("X1+").is_err());
        assert!(parse_gauss("").unwrap().crossing_count() == 0);
    }

    #[test]
    fn braid_words() {
        let w = parse_braid("width=3 s1 S2 s1 S2").unwrap();
        assert_eq!(w.width(), 3);
        assert_eq!(w.letters().len(), 4);
        assert_eq!(w.to_string(), "width=3 s1 S2 s1 S2");
        assert!(parse_braid("s1 s1").is_err());
        assert!(parse_braid("width=2 x1").is_err());
        assert!(parse_braid("width=2 s9").is_err());
        assert!(parse_braid("width=1").is_err());
    }
}
