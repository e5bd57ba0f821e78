//! Alexander-type invariants of virtual knots and links.
//!
//! The pipeline: a diagram (crossing list, signed Gauss code, or closed
//! virtual braid) yields a presentation matrix over Z[t^{±1}, s^{±1}];
//! its elementary ideals give principal polynomials (multivariate GCDs of
//! minors) and, after pulling back to Z[T, S, Ti, Si], reduced strong
//! Gröbner bases that are finer isotopy invariants.

pub mod diagram;
pub mod groebner;
pub mod ideals;
pub mod invariants;
pub mod poly;
pub mod presentation;
