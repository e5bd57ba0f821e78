//! Alexander biquandle presentation matrices.
//!
//! Each crossing contributes two homogeneous linear relations on the
//! semiarc generators over Z[t^{±1}, s^{±1}], written (output) − (input
//! expression).  With slots (a, b, c, d):
//!
//! * positive:  c − t·b − (1−st)·a   and   d − s·a
//! * negative:  a − t·d − (1−st)·c   and   b − s·c
//! * virtual:   c − b                and   d − a
//!
//! A negative crossing is a positive one read against orientation, so its
//! relation swaps the input and output roles.  A based diagram's base
//! semiarc is cut in two at the base point: the piece leaving its source
//! crossing and the piece feeding its destination crossing become separate
//! generators, placed in the last two columns.

use std::fmt;

use serde_json::json;

use crate::diagram::{CrossingKind, Diagram};
use crate::poly::LaurentPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PresentationMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
    generator_names: Vec<String>,
}

impl PresentationMatrix {
    /// Builds a matrix from explicit rows (used by tests and oracles).
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>, generator_names: Vec<String>) -> Self {
        let cols = generator_names.len();
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "all rows must have {cols} entries"
        );
        Self {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
            generator_names,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[LaurentPoly] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "generators": self.generator_names,
            "entries": (0..self.rows)
                .map(|i| self.row(i).iter().map(|p| p.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for PresentationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.generator_names.join(" "))?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Builds the presentation matrix of a validated diagram: one column per
/// generator (semiarcs, with a based diagram's base arc split in two) and
/// two rows per crossing.
pub fn build_matrix(d: &Diagram) -> PresentationMatrix {
    let n = d.semiarc_count();
    let base = d.base_point();
    // Column of each semiarc occurrence; the base arc has distinct columns
    // for its output-side and input-side pieces, in the last two columns.
    let col_of = |arc: usize, is_input: bool| -> usize {
        match base {
            Some(b) if arc == b => {
                let split = n - 1;
                if is_input {
                    split + 1
                } else {
                    split
                }
            }
            Some(b) => arc - usize::from(arc > b),
            None => arc,
        }
    };
    let cols = if base.is_some() { n + 1 } else { n };
    let mut generator_names: Vec<String> = Vec::with_capacity(cols);
    for id in 0..n {
        if base != Some(id) {
            generator_names.push(d.label(id).to_string());
        }
    }
    if let Some(b) = base {
        generator_names.push(format!("{}.out", d.label(b)));
        generator_names.push(format!("{}.in", d.label(b)));
    }

    let one = LaurentPoly::one();
    let t = LaurentPoly::var_t();
    let s = LaurentPoly::var_s();
    let twist = &one - &(&s * &t); // 1 - st

    let mut rows: Vec<Vec<LaurentPoly>> = Vec::with_capacity(2 * d.crossing_count());
    for c in d.crossings() {
        let [a, b, cc, dd] = c.slots;
        // Slot positions 0, 1 are inputs; 2, 3 are outputs.
        let (a, b) = (col_of(a, true), col_of(b, true));
        let (cc, dd) = (col_of(cc, false), col_of(dd, false));
        let mut row1 = vec![LaurentPoly::zero(); cols];
        let mut row2 = vec![LaurentPoly::zero(); cols];
        let add = |row: &mut Vec<LaurentPoly>, col: usize, val: &LaurentPoly| {
            row[col] = &row[col] + val;
        };
        match c.kind {
            CrossingKind::Positive => {
                add(&mut row1, cc, &one);
                add(&mut row1, b, &-&t);
                add(&mut row1, a, &-&twist);
                add(&mut row2, dd, &one);
                add(&mut row2, a, &-&s);
            }
            CrossingKind::Negative => {
                add(&mut row1, a, &one);
                add(&mut row1, dd, &-&t);
                add(&mut row1, cc, &-&twist);
                add(&mut row2, b, &one);
                add(&mut row2, cc, &-&s);
            }
            CrossingKind::Virtual => {
                add(&mut row1, cc, &one);
                add(&mut row1, b, &-&one);
                add(&mut row2, dd, &one);
                add(&mut row2, a, &-&one);
            }
        }
        rows.push(row1);
        rows.push(row2);
    }
    PresentationMatrix::from_rows(rows, generator_names)
}
