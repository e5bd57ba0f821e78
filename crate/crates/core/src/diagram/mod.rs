//! Oriented virtual knot/link diagrams: semiarcs, crossings, validation,
//! virtual braid words and their closures, and the diagram transforms
//! (reversal, sign switch, connected sum, base points).

use std::fmt;

use thiserror::Error;

mod parse;

pub use parse::{parse_braid, parse_crossing_list, parse_gauss, ParseError};

/// Index of a semiarc (a diagram segment between consecutive crossing
/// points) into the diagram's label table.
pub type SemiArc = usize;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CrossingKind {
    Positive,
    Negative,
    Virtual,
}

impl CrossingKind {
    pub fn letter(self) -> char {
        match self {
            CrossingKind::Positive => 'P',
            CrossingKind::Negative => 'N',
            CrossingKind::Virtual => 'V',
        }
    }
}

/// A crossing with slot quadruple (in_a, in_b, out_c, out_d).  The strand
/// entering at in_a leaves at out_d, and in_b leaves at out_c, for every
/// kind; a negative crossing carries the same quadruple as a positive one
/// and only its relation algebra differs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Crossing {
    pub kind: CrossingKind,
    pub slots: [SemiArc; 4],
}

impl Crossing {
    pub fn inputs(&self) -> [SemiArc; 2] {
        [self.slots[0], self.slots[1]]
    }

    pub fn outputs(&self) -> [SemiArc; 2] {
        [self.slots[2], self.slots[3]]
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("diagram has no semiarcs")]
    Empty,
    #[error("duplicate semiarc label {0}")]
    DuplicateLabel(String),
    #[error("crossing {index} references semiarc id {id}, but only {count} semiarcs exist")]
    SlotOutOfRange { index: usize, id: usize, count: usize },
    #[error(
        "semiarc {label} feeds {inputs} crossing input slot(s) and leaves {outputs} output \
         slot(s); a closed diagram uses each semiarc exactly once in each role"
    )]
    SlotBijection {
        label: String,
        inputs: usize,
        outputs: usize,
    },
    #[error("unknown semiarc label {0}")]
    UnknownLabel(String),
    #[error("{op} requires a knot (one component), but the diagram has {components}")]
    NotAKnot { op: &'static str, components: usize },
    #[error("based connected sum requires base points on both diagrams")]
    MissingBase,
    #[error("braid width must be at least 2, got {0}")]
    BraidWidth(usize),
    #[error("braid letter index {index} out of range for width {width}")]
    BraidIndex { index: usize, width: usize },
}

/// A closed (or based) oriented virtual knot/link diagram.  Every semiarc
/// referenced by a crossing occupies exactly one input slot and one output
/// slot; semiarcs referenced by no crossing are crossing-free loops.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Diagram {
    labels: Vec<String>,
    crossings: Vec<Crossing>,
    base: Option<SemiArc>,
    components: usize,
}

impl Diagram {
    pub fn new(
        labels: Vec<String>,
        crossings: Vec<Crossing>,
        base: Option<SemiArc>,
    ) -> Result<Self, DiagramError> {
        if labels.is_empty() {
            return Err(DiagramError::Empty);
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(DiagramError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let mut inputs = vec![0usize; n];
        let mut outputs = vec![0usize; n];
        for (index, c) in crossings.iter().enumerate() {
            for (slot, &id) in c.slots.iter().enumerate() {
                if id >= n {
                    return Err(DiagramError::SlotOutOfRange { index, id, count: n });
                }
                if slot < 2 {
                    inputs[id] += 1;
                } else {
                    outputs[id] += 1;
                }
            }
        }
        for id in 0..n {
            let used = (inputs[id], outputs[id]);
            if used != (0, 0) && used != (1, 1) {
                return Err(DiagramError::SlotBijection {
                    label: labels[id].clone(),
                    inputs: inputs[id],
                    outputs: outputs[id],
                });
            }
        }
        if let Some(b) = base {
            if b >= n {
                return Err(DiagramError::UnknownLabel(format!("id {b}")));
            }
        }
        let mut d = Diagram {
            labels,
            crossings,
            base,
            components: 0,
        };
        d.components = d.count_components();
        Ok(d)
    }

    /// The 0-crossing unknot: one crossing-free loop.
    pub fn unknot() -> Self {
        Self::new(vec!["1".into()], Vec::new(), None).expect("unknot is valid")
    }

    pub fn semiarc_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, id: SemiArc) -> &str {
        &self.labels[id]
    }

    pub fn index_of(&self, label: &str) -> Option<SemiArc> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn classical_crossing_count(&self) -> usize {
        self.crossings
            .iter()
            .filter(|c| c.kind != CrossingKind::Virtual)
            .count()
    }

    pub fn base_point(&self) -> Option<SemiArc> {
        self.base
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    /// The semiarc the strand continues onto after passing the crossing
    /// that consumes `arc`, or None for a crossing-free loop.
    pub fn successor(&self, arc: SemiArc) -> Option<SemiArc> {
        self.crossings.iter().find_map(|c| {
            if c.slots[0] == arc {
                Some(c.slots[3])
            } else if c.slots[1] == arc {
                Some(c.slots[2])
            } else {
                None
            }
        })
    }

    fn count_components(&self) -> usize {
        let n = self.labels.len();
        let mut seen = vec![false; n];
        let mut components = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut arc = start;
            loop {
                seen[arc] = true;
                match self.successor(arc) {
                    Some(next) if !seen[next] => arc = next,
                    _ => break,
                }
            }
        }
        components
    }

    /// Marks `label`'s semiarc as carrying the base point.
    pub fn with_base_point(&self, label: &str) -> Result<Self, DiagramError> {
        let id = self
            .index_of(label)
            .ok_or_else(|| DiagramError::UnknownLabel(label.into()))?;
        let mut d = self.clone();
        d.base = Some(id);
        Ok(d)
    }

    /// Reverses the orientation of every strand.  Inputs and outputs swap
    /// with the pairing induced by reversal: (a, b, c, d) becomes
    /// (d, c, b, a); crossing signs are preserved.
    pub fn reverse(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing {
                kind: c.kind,
                slots: [c.slots[3], c.slots[2], c.slots[1], c.slots[0]],
            })
            .collect();
        let mut d = self.clone();
        d.crossings = crossings;
        d
    }

    /// Switches every classical crossing's sign (over strand becomes
    /// under); virtual crossings are fixed.  Slot quadruples are unchanged.
    pub fn sign_switch(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing {
                kind: match c.kind {
                    CrossingKind::Positive => CrossingKind::Negative,
                    CrossingKind::Negative => CrossingKind::Positive,
                    CrossingKind::Virtual => CrossingKind::Virtual,
                },
                slots: c.slots,
            })
            .collect();
        let mut d = self.clone();
        d.crossings = crossings;
        d
    }

    fn require_knot(&self, op: &'static str) -> Result<(), DiagramError> {
        if self.components != 1 {
            return Err(DiagramError::NotAKnot {
                op,
                components: self.components,
            });
        }
        Ok(())
    }

    /// Connected sum: cuts `self`'s semiarc `arc` (running from crossing
    /// slot P to slot Q) and `other`'s semiarc `other_arc` (from R to S)
    /// and splices P to S and R to Q.  Both diagrams must be knots.  The
    /// result is relabeled 1..n1+n2 and carries no base point.  Summing
    /// with a 0-crossing unknot returns the other diagram unchanged.
    pub fn connected_sum(
        &self,
        arc: &str,
        other: &Diagram,
        other_arc: &str,
    ) -> Result<Self, DiagramError> {
        self.require_knot("connected sum")?;
        other.require_knot("connected sum")?;
        let a1 = self
            .index_of(arc)
            .ok_or_else(|| DiagramError::UnknownLabel(arc.into()))?;
        let a2 = other
            .index_of(other_arc)
            .ok_or_else(|| DiagramError::UnknownLabel(other_arc.into()))?;
        // A crossing-free summand contributes nothing but a relabeling.
        if self.crossings.is_empty() {
            let mut d = other.clone();
            d.base = None;
            return Ok(d);
        }
        if other.crossings.is_empty() {
            let mut d = self.clone();
            d.base = None;
            return Ok(d);
        }
        let n1 = self.labels.len();
        let off = |id: SemiArc| id + n1;
        let mut crossings = self.crossings.clone();
        // a1's input occurrence now reads the spliced arc from `other`.
        for c in crossings.iter_mut() {
            for slot in 0..2 {
                if c.slots[slot] == a1 {
                    c.slots[slot] = off(a2);
                }
            }
        }
        for c in &other.crossings {
            let mut slots = c.slots.map(off);
            for slot in slots.iter_mut().take(2) {
                if *slot == off(a2) {
                    *slot = a1;
                }
            }
            crossings.push(Crossing {
                kind: c.kind,
                slots,
            });
        }
        let labels = (1..=n1 + other.labels.len()).map(|i| i.to_string()).collect();
        Self::new(labels, crossings, None)
    }

    /// Connected sum at the base points.  Traversal runs through `self`
    /// first; the result's base point lies on the arc returning from
    /// `other` into `self`.
    pub fn based_connected_sum(&self, other: &Diagram) -> Result<Self, DiagramError> {
        let (Some(b1), Some(b2)) = (self.base, other.base) else {
            return Err(DiagramError::MissingBase);
        };
        if self.crossings.is_empty() {
            return Ok(other.clone());
        }
        if other.crossings.is_empty() {
            return Ok(self.clone());
        }
        let mut d = self.connected_sum(
            &self.labels[b1].clone(),
            other,
            &other.labels[b2].clone(),
        )?;
        d.base = Some(b2 + self.labels.len());
        Ok(d)
    }
}

/// Prints the crossing-list text format; reparses via parse_crossing_list
/// when all labels are integers (always true for diagrams built here).
impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.crossings {
            let [a, b, cc, d] = c.slots;
            writeln!(
                f,
                "{} {} {} {} {}",
                c.kind.letter(),
                self.labels[a],
                self.labels[b],
                self.labels[cc],
                self.labels[d]
            )?;
        }
        if let Some(b) = self.base {
            writeln!(f, "BASE {}", self.labels[b])?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BraidLetter {
    /// sigma_i: positive classical crossing of strands i, i+1.
    Sigma(usize),
    /// sigma_i^{-1}.
    SigmaInv(usize),
    /// v_i: virtual crossing of strands i, i+1.
    Virtual(usize),
}

impl BraidLetter {
    pub fn index(self) -> usize {
        match self {
            BraidLetter::Sigma(i) | BraidLetter::SigmaInv(i) | BraidLetter::Virtual(i) => i,
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            BraidLetter::Sigma(i) => BraidLetter::SigmaInv(i),
            BraidLetter::SigmaInv(i) => BraidLetter::Sigma(i),
            BraidLetter::Virtual(i) => BraidLetter::Virtual(i),
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidLetter::Sigma(i) => write!(f, "s{i}"),
            BraidLetter::SigmaInv(i) => write!(f, "S{i}"),
            BraidLetter::Virtual(i) => write!(f, "v{i}"),
        }
    }
}

/// A word in the virtual braid group on `width` strands.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VirtualBraidWord {
    width: usize,
    letters: Vec<BraidLetter>,
}

impl VirtualBraidWord {
    pub fn new(width: usize, letters: Vec<BraidLetter>) -> Result<Self, DiagramError> {
        if width < 2 {
            return Err(DiagramError::BraidWidth(width));
        }
        for l in &letters {
            if l.index() == 0 || l.index() >= width {
                return Err(DiagramError::BraidIndex {
                    index: l.index(),
                    width,
                });
            }
        }
        Ok(Self { width, letters })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    /// The group inverse: letters reversed, each sigma inverted (virtual
    /// letters are self-inverse).
    pub fn invert(&self) -> Self {
        Self {
            width: self.width,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Closes the braid by joining each strand's end back to its start.
    /// Each letter becomes one crossing with two fresh outgoing semiarcs;
    /// strands no letter touches close into crossing-free loops.
    pub fn closure(&self) -> Diagram {
        let w = self.width;
        let mut cur: Vec<usize> = (0..w).collect();
        let mut next_id = w;
        let mut crossings = Vec::new();
        for letter in &self.letters {
            let kind = match letter {
                BraidLetter::Sigma(_) => CrossingKind::Positive,
                BraidLetter::SigmaInv(_) => CrossingKind::Negative,
                BraidLetter::Virtual(_) => CrossingKind::Virtual,
            };
            let (l, r) = (letter.index() - 1, letter.index());
            let (c, d) = (next_id, next_id + 1);
            next_id += 2;
            crossings.push(Crossing {
                kind,
                slots: [cur[r], cur[l], c, d],
            });
            cur[r] = c;
            cur[l] = d;
        }
        // Close up: strand j's final arc is the same semiarc as its first.
        let mut merged: Vec<usize> = (0..next_id).collect();
        fn find(m: &mut Vec<usize>, x: usize) -> usize {
            if m[x] != x {
                let root = find(m, m[x]);
                m[x] = root;
            }
            m[x]
        }
        for j in 0..w {
            let (a, b) = (find(&mut merged, j), find(&mut merged, cur[j]));
            merged[a] = b;
        }
        let mut compact = vec![usize::MAX; next_id];
        let mut labels = Vec::new();
        let mut assign = |compact: &mut Vec<usize>, merged: &mut Vec<usize>, id: usize| {
            let root = find(merged, id);
            if compact[root] == usize::MAX {
                compact[root] = labels.len();
                labels.push((labels.len() + 1).to_string());
            }
            compact[root]
        };
        let crossings: Vec<Crossing> = crossings
            .iter()
            .map(|c| Crossing {
                kind: c.kind,
                slots: c.slots.map(|id| assign(&mut compact, &mut merged, id)),
            })
            .collect();
        // Untouched strands become crossing-free loops.
        for j in 0..w {
            assign(&mut compact, &mut merged, j);
        }
        Diagram::new(labels, crossings, None).expect("braid closures are closed diagrams")
    }
}

impl fmt::Display for VirtualBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "width={}", self.width)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}
