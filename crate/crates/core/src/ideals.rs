//! Minors, determinants, elementary ideals, and principal polynomials of
//! presentation matrices.
//!
//! For an m×n presentation matrix, the k-th elementary ideal is generated
//! by the (m−k)-minors, with the usual boundary conventions: the whole
//! ring when m−k ≤ 0, the zero ideal when m−k > min(m, n) or every minor
//! vanishes.  The principal polynomial at level k generates the smallest
//! principal ideal containing the k-th elementary ideal: the GCD of its
//! generators, up to units.

use std::collections::HashMap;

use serde_json::json;
use thiserror::Error;

use crate::poly::{gcd_laurent, LaurentPoly};
use crate::presentation::PresentationMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("determinant requires a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("minor size {size} out of range for a {rows}x{cols} matrix")]
    MinorSize {
        size: usize,
        rows: usize,
        cols: usize,
    },
}

/// Exact determinant by fraction-free Bareiss elimination.  Rows are
/// unit-cleared first (each multiplied into Z[t, s] by a monomial) and the
/// cleared units multiplied back at the end, so the result is exact, not
/// just exact up to units.
pub fn determinant(m: &PresentationMatrix) -> Result<LaurentPoly, IdealError> {
    if !m.is_square() {
        return Err(IdealError::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut a: Vec<Vec<LaurentPoly>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let (mut unit_t, mut unit_s) = (0i64, 0i64);
    let mut negate = false;
    for row in a.iter_mut() {
        let mins = row.iter().filter_map(|e| e.min_exps()).fold(
            None,
            |acc: Option<(i64, i64)>, (et, es)| match acc {
                None => Some((et, es)),
                Some((at, as_)) => Some((at.min(et), as_.min(es))),
            },
        );
        let Some((et, es)) = mins else {
            return Ok(LaurentPoly::zero()); // a zero row
        };
        if (et, es) != (0, 0) {
            for e in row.iter_mut() {
                *e = e.mul_unit(false, -et, -es);
            }
            unit_t += et;
            unit_s += es;
        }
    }
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        let Some(r) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(LaurentPoly::zero());
        };
        if r != k {
            a.swap(r, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                // Sylvester's identity: prev divides exactly in Z[t, s].
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(a[n - 1][n - 1].mul_unit(negate, unit_t, unit_s))
}

/// Number of size×size minors of an m×n matrix: C(m, size)·C(n, size).
pub fn minor_count(rows: usize, cols: usize, size: usize) -> u128 {
    fn choose(n: usize, k: usize) -> u128 {
        if k > n {
            return 0;
        }
        let k = k.min(n - k);
        let mut out: u128 = 1;
        for i in 0..k {
            out = out * (n - i) as u128 / (i + 1) as u128;
        }
        out
    }
    choose(rows, size) * choose(cols, size)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // Advance to the next combination in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Laplace expansion over (row set, column set) keys, shared across all
/// requested minors.
struct MinorTable<'a> {
    matrix: &'a PresentationMatrix,
    memo: HashMap<(u64, u64), LaurentPoly>,
}

impl<'a> MinorTable<'a> {
    fn new(matrix: &'a PresentationMatrix) -> Self {
        Self {
            matrix,
            memo: HashMap::new(),
        }
    }

    fn det(&mut self, row_mask: u64, col_mask: u64) -> LaurentPoly {
        if row_mask == 0 {
            return LaurentPoly::one();
        }
        if let Some(hit) = self.memo.get(&(row_mask, col_mask)) {
            return hit.clone();
        }
        let row = row_mask.trailing_zeros() as usize;
        let rest_rows = row_mask & (row_mask - 1);
        let mut out = LaurentPoly::zero();
        let mut negate = false;
        let mut cols = col_mask;
        while cols != 0 {
            let col = cols.trailing_zeros() as usize;
            cols &= cols - 1;
            let entry = self.matrix.entry(row, col);
            if !entry.is_zero() {
                let sub = self.det(rest_rows, col_mask & !(1u64 << col));
                let term = entry * &sub;
                out = if negate { &out - &term } else { &out + &term };
            }
            negate = !negate;
        }
        self.memo.insert((row_mask, col_mask), out.clone());
        out
    }
}

/// All size×size minors, ordered lexicographically by (row set, column
/// set).
pub fn minors(m: &PresentationMatrix, size: usize) -> Result<Vec<LaurentPoly>, IdealError> {
    if size == 0 || size > m.rows().min(m.cols()) {
        return Err(IdealError::MinorSize {
            size,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mask = |ix: &[usize]| ix.iter().fold(0u64, |acc, &i| acc | 1 << i);
    let mut table = MinorTable::new(m);
    let mut out = Vec::new();
    for rows in combinations(m.rows(), size) {
        for cols in combinations(m.cols(), size) {
            out.push(table.det(mask(&rows), mask(&cols)));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealFlag {
    /// m − k ≤ 0: the empty-minor convention makes the ideal all of Λ.
    WholeRing,
    /// m − k > min(m, n), or every minor vanishes.
    ZeroIdeal,
    General,
}

impl IdealFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            IdealFlag::WholeRing => "whole_ring",
            IdealFlag::ZeroIdeal => "zero_ideal",
            IdealFlag::General => "general",
        }
    }
}

/// The k-th elementary ideal: nonzero (m−k)-minors, or a boundary flag.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ElementaryIdeal {
    pub k: usize,
    pub flag: IdealFlag,
    pub generators: Vec<LaurentPoly>,
}

impl ElementaryIdeal {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "k": self.k,
            "flag": self.flag.as_str(),
            "generators": self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        })
    }
}

pub fn elementary_ideal(m: &PresentationMatrix, k: usize) -> ElementaryIdeal {
    let rows = m.rows();
    if rows <= k {
        return ElementaryIdeal {
            k,
            flag: IdealFlag::WholeRing,
            generators: Vec::new(),
        };
    }
    let size = rows - k;
    if size > rows.min(m.cols()) {
        return ElementaryIdeal {
            k,
            flag: IdealFlag::ZeroIdeal,
            generators: Vec::new(),
        };
    }
    let generators: Vec<LaurentPoly> = minors(m, size)
        .expect("size is in range")
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    let flag = if generators.is_empty() {
        IdealFlag::ZeroIdeal
    } else {
        IdealFlag::General
    };
    ElementaryIdeal {
        k,
        flag,
        generators,
    }
}

/// Generator of the smallest principal ideal containing the given
/// elementary ideal: the GCD of its generators, canonically normalized.
pub fn principal_of(ideal: &ElementaryIdeal) -> LaurentPoly {
    match ideal.flag {
        IdealFlag::WholeRing => LaurentPoly::one(),
        IdealFlag::ZeroIdeal => LaurentPoly::zero(),
        IdealFlag::General => gcd_laurent(&ideal.generators),
    }
}

/// `principal_of` the k-th elementary ideal of `m`.
pub fn principal_polynomial(m: &PresentationMatrix, k: usize) -> LaurentPoly {
    principal_of(&elementary_ideal(m, k))
}
