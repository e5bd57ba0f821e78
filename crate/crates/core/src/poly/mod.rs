//! Exact sparse polynomial arithmetic: Laurent polynomials in (t, s),
//! ordinary polynomials in (T, S, Ti, Si), term orders, GCDs, and the
//! text format shared by the CLI and the JSON emitters.

mod gcd;
mod laurent;
mod order;
mod quad;
mod text;

pub use gcd::gcd_laurent;
pub use laurent::{Exps, LaurentPoly};
pub use order::{mono_div, mono_divides, mono_lcm, mono_mul, total_degree};
pub use order::{Mono4, OrderKind, TermOrder, AXIS_NAMES};
pub use quad::{pullback, pushforward, Poly4};
pub use text::{parse_laurent, parse_poly4, print_laurent, print_poly4, PolyParseError};
