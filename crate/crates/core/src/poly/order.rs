//! Monomials in (T, S, Ti, Si) and configurable term orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exponent quadruple on the fixed axes T, S, Ti, Si (all nonnegative).
pub type Mono4 = [u32; 4];

/// Axis names, in storage order.
pub const AXIS_NAMES: [&str; 4] = ["T", "S", "Ti", "Si"];

pub fn mono_mul(a: Mono4, b: Mono4) -> Mono4 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

/// True when `a` divides `b` componentwise.
pub fn mono_divides(a: Mono4, b: Mono4) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

/// `b / a`; caller guarantees divisibility.
pub fn mono_div(b: Mono4, a: Mono4) -> Mono4 {
    [b[0] - a[0], b[1] - a[1], b[2] - a[2], b[3] - a[3]]
}

pub fn mono_lcm(a: Mono4, b: Mono4) -> Mono4 {
    [
        a[0].max(b[0]),
        a[1].max(b[1]),
        a[2].max(b[2]),
        a[3].max(b[3]),
    ]
}

pub fn total_degree(m: Mono4) -> u64 {
    m.iter().map(|&e| e as u64).sum()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    /// Compare exponents variable by variable in priority order.
    Lex,
    /// Compare total degree first, then break ties lexicographically.
    Grlex,
}

/// A term order on `Mono4`: an order kind plus the variable comparison
/// sequence (most significant variable first).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TermOrder {
    kind: OrderKind,
    priority: [u8; 4],
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderError {
    #[error("unknown order kind {0:?} (expected \"lex\" or \"grlex\")")]
    UnknownKind(String),
    #[error("priority must list each of T, S, Ti, Si exactly once, got {0:?}")]
    BadPriority(String),
}

impl TermOrder {
    /// The default order: grlex with priority T, S, Ti, Si.
    pub fn grlex_default() -> Self {
        TermOrder {
            kind: OrderKind::Grlex,
            priority: [0, 1, 2, 3],
        }
    }

    pub fn new(kind: OrderKind, priority: [u8; 4]) -> Result<Self, OrderError> {
        let mut seen = [false; 4];
        for &p in &priority {
            if p > 3 || seen[p as usize] {
                return Err(OrderError::BadPriority(format!("{priority:?}")));
            }
            seen[p as usize] = true;
        }
        Ok(TermOrder { kind, priority })
    }

    /// Parses an order from its kind name and a comma-separated variable
    /// list such as `"T,S,Ti,Si"` (most significant first).
    pub fn from_names(kind: &str, priority: &str) -> Result<Self, OrderError> {
        let kind = match kind {
            "lex" => OrderKind::Lex,
            "grlex" => OrderKind::Grlex,
            other => return Err(OrderError::UnknownKind(other.to_string())),
        };
        let mut perm = [0u8; 4];
        let names: Vec<&str> = priority.split(',').map(str::trim).collect();
        if names.len() != 4 {
            return Err(OrderError::BadPriority(priority.to_string()));
        }
        for (i, name) in names.iter().enumerate() {
            let axis = AXIS_NAMES
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| OrderError::BadPriority(priority.to_string()))?;
            perm[i] = axis as u8;
        }
        Self::new(kind, perm).map_err(|_| OrderError::BadPriority(priority.to_string()))
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority_names(&self) -> [&'static str; 4] {
        let mut out = [""; 4];
        for (i, &p) in self.priority.iter().enumerate() {
            out[i] = AXIS_NAMES[p as usize];
        }
        out
    }

    pub fn compare(&self, a: &Mono4, b: &Mono4) -> Ordering {
        if self.kind == OrderKind::Grlex {
            match total_degree(*a).cmp(&total_degree(*b)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        for &p in &self.priority {
            match a[p as usize].cmp(&b[p as usize]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    pub fn max<'m>(&self, a: &'m Mono4, b: &'m Mono4) -> &'m Mono4 {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    /// A key whose natural (array) ordering agrees with `compare`.  Lets
    /// monomials act as `Ord` values in heaps and sort calls even though
    /// the comparison sequence is only known at runtime.
    pub fn sort_key(&self, m: &Mono4) -> [u64; 5] {
        let mut key = [0u64; 5];
        let mut i = 0;
        if self.kind == OrderKind::Grlex {
            key[0] = total_degree(*m);
            i = 1;
        }
        for &p in &self.priority {
            key[i] = u64::from(m[p as usize]);
            i += 1;
        }
        key
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            OrderKind::Lex => "lex",
            OrderKind::Grlex => "grlex",
        };
        write!(f, "{kind} {}", self.priority_names().join(","))
    }
}

impl Serialize for TermOrder {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("TermOrder", 2)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("priority", &self.priority_names())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // The classical three-variable examples, mapped onto the first three
    // axes: x = T, y = S, z = Ti (comparison sequence x, y, z).
    fn m(x: u32, y: u32, z: u32) -> Mono4 {
        [x, y, z, 0]
    }

    #[test]
    fn lex_chain() {
        let ord = TermOrder::new(OrderKind::Lex, [0, 1, 2, 3]).unwrap();
        // x*y^2*z < x*y^2*z^2 < x*y^3 < x^2
        let chain = [m(1, 2, 1), m(1, 2, 2), m(1, 3, 0), m(2, 0, 0)];
        for w in chain.windows(2) {
            assert_eq!(ord.compare(&w[0], &w[1]), Ordering::Less);
            assert_eq!(ord.compare(&w[1], &w[0]), Ordering::Greater);
        }
    }

    #[test]
    fn grlex_chain() {
        let ord = TermOrder::new(OrderKind::Grlex, [0, 1, 2, 3]).unwrap();
        // x^2 < x*y^2 < x*y^3 < x*y^2*z^2
        let chain = [m(2, 0, 0), m(1, 2, 0), m(1, 3, 0), m(1, 2, 2)];
        for w in chain.windows(2) {
            assert_eq!(ord.compare(&w[0], &w[1]), Ordering::Less);
        }
        assert_eq!(ord.compare(&m(1, 2, 0), &m(1, 2, 0)), Ordering::Equal);
    }

    #[test]
    fn default_prefers_t() {
        let ord = TermOrder::grlex_default();
        // T > S at equal degree, S > Ti, Ti > Si.
        assert_eq!(
            ord.compare(&[1, 0, 0, 0], &[0, 1, 0, 0]),
            Ordering::Greater
        );
        assert_eq!(
            ord.compare(&[0, 1, 0, 0], &[0, 0, 1, 0]),
            Ordering::Greater
        );
        assert_eq!(
            ord.compare(&[0, 0, 1, 0], &[0, 0, 0, 1]),
            Ordering::Greater
        );
    }

    #[test]
    fn parse_and_display() {
        let ord = TermOrder::from_names("grlex", "Ti,Si,T,S").unwrap();
        assert_eq!(ord.priority_names(), ["Ti", "Si", "T", "S"]);
        assert_eq!(ord.to_string(), "grlex Ti,Si,T,S");
        assert!(TermOrder::from_names("grevlex", "T,S,Ti,Si").is_err());
        assert!(TermOrder::from_names("lex", "T,S,Ti").is_err());
        assert!(TermOrder::from_names("lex", "T,S,Ti,Ti").is_err());
    }

    #[test]
    fn total_order_properties() {
        let ord = TermOrder::grlex_default();
        let monos = [
            [0, 0, 0, 0],
            [1, 0, 2, 0],
            [0, 3, 0, 1],
            [2, 2, 2, 2],
            [1, 1, 1, 1],
        ];
        for a in &monos {
            for b in &monos {
                let ab = ord.compare(a, b);
                let ba = ord.compare(b, a);
                assert_eq!(ab, ba.reverse());
                if ab == Ordering::Equal {
                    assert_eq!(a, b);
                }
                // Compatible with multiplication.
                let c = [1, 0, 3, 2];
                assert_eq!(ord.compare(&mono_mul(*a, c), &mono_mul(*b, c)), ab);
            }
        }
    }

    #[test]
    fn sort_key_matches_compare() {
        let orders = [
            TermOrder::grlex_default(),
            TermOrder::new(OrderKind::Lex, [2, 0, 3, 1]).unwrap(),
        ];
        let monos = [
            [0, 0, 0, 0],
            [1, 0, 2, 0],
            [0, 3, 0, 1],
            [2, 2, 2, 2],
            [1, 1, 1, 1],
            [0, 0, 0, 5],
        ];
        for ord in &orders {
            for a in &monos {
                for b in &monos {
                    assert_eq!(ord.sort_key(a).cmp(&ord.sort_key(b)), ord.compare(a, b));
                }
            }
        }
    }
}
