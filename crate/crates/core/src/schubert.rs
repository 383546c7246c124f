//! The `(a, J)` characterization of Schubert classes:
//! `Δ(w) = {α ∈ Δ(g_1) : α(Z_w) ≤ a}` with `Z_w = Σ_{j∈J} Z_j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::GradingContext;
use crate::rootsys::{Kind, Root};
use crate::space::{RootSet, Space};
use crate::weyl::HasseDiagram;

/// A validated inversion set: a lower order ideal of `Δ(g_1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InversionIdeal(RootSet);

impl InversionIdeal {
    pub fn new(space: &Space, set: RootSet) -> Result<Self> {
        if !set.is_subset(space.full_set()) || !space.is_order_ideal(set) {
            return Err(Error::NotAnIdeal(format!("{:?}", space.roots_of(set))));
        }
        Ok(InversionIdeal(set))
    }

    pub fn from_roots(space: &Space, roots: &[Root]) -> Result<Self> {
        Self::new(space, space.set_of(roots)?)
    }

    pub fn set(self) -> RootSet {
        self.0
    }

    pub fn dim(self) -> usize {
        self.0.len()
    }
}

/// The pair `(a, J)` of a proper class; `J` is kept ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AJ {
    pub a: u32,
    marks: Vec<usize>,
}

impl AJ {
    pub fn new(a: u32, marks: impl IntoIterator<Item = usize>) -> Self {
        let mut marks: Vec<usize> = marks.into_iter().collect();
        marks.sort_unstable();
        marks.dedup();
        AJ { a, marks }
    }

    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    pub fn context<'s>(&self, space: &'s Space) -> Result<GradingContext<'s>> {
        GradingContext::new(space.root_system(), space.node(), &self.marks, self.a as i32)
    }

    /// `a:j1j2…` for the exceptional types, `a:j1,j2,…` otherwise.
    pub fn display(&self, kind: Kind) -> String {
        let sep = if kind.is_exceptional() { "" } else { "," };
        let marks: Vec<String> = self.marks.iter().map(|j| j.to_string()).collect();
        format!("{}:{}", self.a, marks.join(sep))
    }

    /// Parses `a:J` where `J` is a comma list or, for ranks below 10, a digit
    /// string. From rank 10 on a `J` without commas is a single node.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let malformed = || Error::Malformed { what: "a:J", text: text.to_string() };
        let (a, marks) = text.trim().split_once(':').ok_or_else(malformed)?;
        let a: u32 = a.trim().parse().map_err(|_| malformed())?;
        let marks = marks.trim();
        let parsed: Vec<usize> = if marks.is_empty() {
            Vec::new()
        } else if marks.contains(',') || rank >= 10 {
            marks.split(',').map(|t| t.trim().parse().map_err(|_| malformed())).collect::<Result<_>>()?
        } else if marks.chars().all(|c| c.is_ascii_digit()) {
            marks.chars().map(|c| c as usize - '0' as usize).collect()
        } else {
            return Err(malformed());
        };
        let aj = AJ::new(a, parsed.iter().copied());
        if aj.marks.len() != parsed.len() || aj.marks.contains(&0) {
            return Err(malformed());
        }
        Ok(aj)
    }
}

/// Label of a class: the two endpoints carry no `(a, J)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    /// The point class `o`, `w = 1`.
    Bottom,
    /// The whole space `X`, `w = w_0`.
    Top,
    Proper(AJ),
}

impl ClassLabel {
    pub fn aj(&self) -> Option<&AJ> {
        match self {
            ClassLabel::Proper(aj) => Some(aj),
            _ => None,
        }
    }

    /// Table rendering: `o`, `X`, or the `a:J` string.
    pub fn display(&self, kind: Kind) -> String {
        match self {
            ClassLabel::Bottom => "o".to_string(),
            ClassLabel::Top => "X".to_string(),
            ClassLabel::Proper(aj) => aj.display(kind),
        }
    }
}

impl fmt::Display for AJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks: Vec<String> = self.marks.iter().map(|j| j.to_string()).collect();
        write!(f, "{}:{}", self.a, marks.join(","))
    }
}

fn max_level(space: &Space, marks: &[usize]) -> i32 {
    space.g1().iter().map(|r| r.level(marks)).max().unwrap_or(0)
}

/// `{α ∈ Δ(g_1) : α(Z_w) ≤ a}` for arbitrary `(a, J)`.
pub fn level_filter(space: &Space, aj: &AJ) -> RootSet {
    let mut set = RootSet::EMPTY;
    for (k, r) in space.g1().iter().enumerate() {
        if r.level(aj.marks()) <= aj.a as i32 {
            set = set.with(k);
        }
    }
    set
}

/// `J` from the stabilizer condition: the nodes `j ≠ i` for which some
/// `α ∈ Φ` has `α + α_j ∈ Δ(g_1) \ Φ`.
fn stabilizer_marks(space: &Space, set: RootSet) -> Vec<usize> {
    let rs = space.root_system();
    (1..=rs.rank())
        .filter(|&j| j != space.node())
        .filter(|&j| {
            set.iter()
                .any(|k| space.g1_position(&space.root(k).add(&rs.simple_root(j))).is_some_and(|up| !set.contains(up)))
        })
        .collect()
}

/// The `(a, J)` label of an inversion ideal.
///
/// The characterization is checked, not assumed: a mismatch is reported as an
/// internal error.
pub fn aj_of(space: &Space, ideal: InversionIdeal) -> Result<ClassLabel> {
    let set = ideal.set();
    if set.is_empty() {
        return Ok(ClassLabel::Bottom);
    }
    if set == space.full_set() {
        return Ok(ClassLabel::Top);
    }
    let marks = stabilizer_marks(space, set);
    let a = set.iter().map(|k| space.root(k).level(&marks)).max().unwrap_or(0);
    let aj = AJ::new(a as u32, marks);
    if level_filter(space, &aj) != set {
        return Err(Error::Internal(format!(
            "{}: ideal {:?} is not the level filter of {aj}",
            space.label(),
            space.roots_of(set)
        )));
    }
    Ok(ClassLabel::Proper(aj))
}

/// Every `(a, J)` whose level filter is `set`, found by exhaustive search
/// over `J ⊆ nodes \ {i}` and `0 ≤ a ≤` the top level.
pub fn aj_search(space: &Space, set: RootSet) -> Vec<AJ> {
    let others: Vec<usize> = (1..=space.rank()).filter(|&j| j != space.node()).collect();
    let mut found = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let marks: Vec<usize> =
            others.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &j)| j).collect();
        for a in 0..=max_level(space, &marks) {
            let aj = AJ::new(a as u32, marks.iter().copied());
            if level_filter(space, &aj) == set {
                found.push(aj);
            }
        }
    }
    found.sort();
    found
}

/// The ideal of a class given by `(a, J)`.
///
/// The level filter is always an order ideal, but it belongs to the class
/// `(a, J)` only when it round-trips; otherwise the pair is not realized.
pub fn ideal_of_aj(space: &Space, aj: &AJ) -> Result<InversionIdeal> {
    aj.context(space)?;
    let set = level_filter(space, aj);
    let ideal = InversionIdeal::new(space, set)?;
    match aj_of(space, ideal)? {
        ClassLabel::Proper(back) if back == *aj => Ok(ideal),
        _ => Err(Error::Unrealized(aj.display(space.kind()))),
    }
}

/// One row of a class table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub ideal: InversionIdeal,
    pub dim: usize,
    pub word: Vec<usize>,
    pub label: ClassLabel,
}

/// One record per class, in diagram order (by dimension, then word).
pub fn class_table(diagram: &HasseDiagram) -> Result<Vec<ClassRecord>> {
    let space = diagram.space();
    diagram
        .classes()
        .iter()
        .map(|c| {
            let ideal = InversionIdeal::new(space, c.ideal)?;
            Ok(ClassRecord { ideal, dim: c.dim(), word: c.element.word().to_vec(), label: aj_of(space, ideal)? })
        })
        .collect()
}
