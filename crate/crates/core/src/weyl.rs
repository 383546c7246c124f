//! Weyl group elements, minimal coset representatives `W^p`, and the Hasse
//! diagram of Schubert classes ordered by inversion-set containment.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};
use crate::space::{RootSet, Space};

/// Letters of a word multiply left to right: the word `6 5` is the product
/// `s_6 s_5`, whose inversion set is `{α_6, α_5 + α_6}`.
pub const WORDS_MULTIPLY_LEFT_TO_RIGHT: bool = true;

/// An element of `W` acting on the root lattice in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// Column `k` is the image of `α_{k+1}`.
    matrix: Vec<Vec<i32>>,
    word: Vec<usize>,
}

fn reflection_matrix(rs: &RootSystem, j: usize) -> Vec<Vec<i32>> {
    let n = rs.rank();
    let mut m = vec![vec![0; n]; n];
    for k in 1..=n {
        let image = rs.reflect(&rs.simple_root(k), j);
        for (row, c) in image.coeffs().iter().enumerate() {
            m[row][k - 1] = *c;
        }
    }
    m
}

fn matmul(a: &[Vec<i32>], b: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let n = a.len();
    (0..n).map(|r| (0..n).map(|c| (0..n).map(|k| a[r][k] * b[k][c]).sum()).collect()).collect()
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let matrix = (0..rank).map(|r| (0..rank).map(|c| i32::from(r == c)).collect()).collect();
        WeylElement { matrix, word: Vec::new() }
    }

    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut w = WeylElement::identity(rs.rank());
        for &j in word {
            if j == 0 || j > rs.rank() {
                return Err(Error::NodeOutOfRange { node: j, rank: rs.rank() });
            }
            w = w.times_simple(rs, j);
        }
        Ok(w)
    }

    /// Appends the letter `j` to the word.
    pub fn times_simple(&self, rs: &RootSystem, j: usize) -> Self {
        let s = reflection_matrix(rs, j);
        let matrix = if WORDS_MULTIPLY_LEFT_TO_RIGHT { matmul(&self.matrix, &s) } else { matmul(&s, &self.matrix) };
        let mut word = self.word.clone();
        word.push(j);
        WeylElement { matrix, word }
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.matrix
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn apply(&self, root: &Root) -> Root {
        let n = self.matrix.len();
        Root::new((0..n).map(|r| (0..n).map(|k| self.matrix[r][k] * root.coeffs()[k]).sum()).collect())
    }
}

/// `Δ(w) = wΔ⁻ ∩ Δ⁺`, in root-table order.
pub fn inversion_set(rs: &RootSystem, w: &WeylElement) -> Vec<Root> {
    let mut out: Vec<Root> = rs.positive_roots().iter().map(|r| w.apply(&r.neg())).filter(Root::is_positive).collect();
    out.sort_by_key(|r| rs.positive_index(r));
    out
}

/// A Schubert class: its inversion set and a representative `w ∈ W^p`.
#[derive(Clone, Debug)]
pub struct SchubertClass {
    pub ideal: RootSet,
    pub element: WeylElement,
}

impl SchubertClass {
    pub fn dim(&self) -> usize {
        self.ideal.len()
    }
}

/// All of `W^p`, graded by `|Δ(w)|`, with cover relations.
#[derive(Clone, Debug)]
pub struct HasseDiagram {
    space: Space,
    classes: Vec<SchubertClass>,
    covers: Vec<(usize, usize)>,
    index: HashMap<RootSet, usize>,
}

/// Breadth-first generation from the identity by right multiplication with
/// simple reflections; `w s_j` stays in `W^p` exactly when `w(α_j) ∈ Δ(g_1)`.
fn generate_by_reflections(space: &Space) -> Vec<SchubertClass> {
    let rs = space.root_system();
    let start = SchubertClass { ideal: RootSet::EMPTY, element: WeylElement::identity(rs.rank()) };
    let mut seen: HashMap<RootSet, usize> = HashMap::from([(RootSet::EMPTY, 0)]);
    let mut out = vec![start];
    let mut queue = VecDeque::from([0usize]);
    while let Some(at) = queue.pop_front() {
        for j in 1..=rs.rank() {
            let current = &out[at];
            let image = current.element.apply(&rs.simple_root(j));
            let Some(k) = space.g1_position(&image) else { continue };
            if current.ideal.contains(k) {
                continue;
            }
            let ideal = current.ideal.with(k);
            if seen.contains_key(&ideal) {
                continue;
            }
            let element = current.element.times_simple(rs, j);
            seen.insert(ideal, out.len());
            queue.push_back(out.len());
            out.push(SchubertClass { ideal, element });
        }
    }
    out
}

/// Order ideals of `Δ(g_1)`, grown by adjoining minimal elements of the
/// complement.
pub fn enumerate_order_ideals(space: &Space) -> Vec<RootSet> {
    let mut seen = std::collections::HashSet::from([RootSet::EMPTY]);
    let mut layer = vec![RootSet::EMPTY];
    let mut out = vec![RootSet::EMPTY];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for ideal in layer {
            for k in 0..space.dimension() {
                if ideal.contains(k) {
                    continue;
                }
                if space.lower_covers(k).iter().all(|&(l, _)| ideal.contains(l)) {
                    let bigger = ideal.with(k);
                    if seen.insert(bigger) {
                        next.push(bigger);
                    }
                }
            }
        }
        next.sort();
        out.extend(next.iter().copied());
        layer = next;
    }
    out
}

impl HasseDiagram {
    /// Enumerates `W^p` twice (reflections and order ideals) and fails if the
    /// two disagree.
    pub fn new(space: Space) -> Result<Self> {
        let mut classes = generate_by_reflections(&space);
        let mut ideals = enumerate_order_ideals(&space);
        let mut from_reflections: Vec<RootSet> = classes.iter().map(|c| c.ideal).collect();
        from_reflections.sort();
        ideals.sort();
        if from_reflections != ideals {
            return Err(Error::Internal(format!(
                "{}: {} classes from reflections, {} order ideals",
                space.label(),
                from_reflections.len(),
                ideals.len()
            )));
        }
        // Replace BFS words by canonical ones (see `canonical_word`).
        for class in &mut classes {
            let word = canonical_word(&space, class.ideal);
            class.element = WeylElement::from_word(space.root_system(), &word)?;
        }
        classes.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.element.word().cmp(b.element.word())));
        let index: HashMap<RootSet, usize> = classes.iter().enumerate().map(|(k, c)| (c.ideal, k)).collect();
        let mut covers = Vec::new();
        for (upper, class) in classes.iter().enumerate() {
            for k in class.ideal.iter() {
                if let Some(&lower) = index.get(&class.ideal.without(k)) {
                    covers.push((lower, upper));
                }
            }
        }
        covers.sort_unstable();
        Ok(HasseDiagram { space, classes, covers, index })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn classes(&self) -> &[SchubertClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Pairs `(lower, upper)` of class positions.
    pub fn cover_edges(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn position(&self, ideal: RootSet) -> Option<usize> {
        self.index.get(&ideal).copied()
    }

    pub fn class_of(&self, ideal: RootSet) -> Result<&SchubertClass> {
        self.position(ideal).map(|k| &self.classes[k]).ok_or_else(|| Error::NotAnIdeal(format!("{ideal:?}")))
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.classes.len() - 1
    }

    /// Class reached by a word, if the word is reduced and stays in `W^p`.
    pub fn class_of_word(&self, word: &[usize]) -> Result<usize> {
        let rs = self.space.root_system();
        let mut w = WeylElement::identity(rs.rank());
        let mut ideal = RootSet::EMPTY;
        let describe = || word.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(",");
        for &j in word {
            if j == 0 || j > rs.rank() {
                return Err(Error::NodeOutOfRange { node: j, rank: rs.rank() });
            }
            let image = w.apply(&rs.simple_root(j));
            match self.space.g1_position(&image) {
                Some(k) if !ideal.contains(k) => ideal = ideal.with(k),
                _ => return Err(Error::BadWord(describe())),
            }
            w = w.times_simple(rs, j);
        }
        self.position(ideal).ok_or_else(|| Error::BadWord(describe()))
    }
}

/// Bruhat order on `W^p` is containment of inversion sets.
pub fn bruhat_leq(lower: RootSet, upper: RootSet) -> bool {
    lower.is_subset(upper)
}

/// The canonical reduced word for the class with inversion set `ideal`: the
/// word whose reversal is lexicographically smallest. It is built from the
/// right end by repeatedly splitting off the smallest right descent, i.e. the
/// least `j` with `w(α_j) < 0`.
pub fn canonical_word(space: &Space, ideal: RootSet) -> Vec<usize> {
    let rs = space.root_system();
    let mut w = element_of(space, ideal);
    let mut reversed = Vec::with_capacity(ideal.len());
    for _ in 0..ideal.len() {
        let j = (1..=rs.rank())
            .find(|&j| !w.apply(&rs.simple_root(j)).is_positive())
            .expect("a nontrivial element has a right descent");
        reversed.push(j);
        w = w.times_simple(rs, j);
    }
    reversed.reverse();
    reversed
}

/// Some element of `W^p` with inversion set `ideal`, built by adjoining the
/// roots of `ideal` one minimal root at a time.
fn element_of(space: &Space, ideal: RootSet) -> WeylElement {
    let rs = space.root_system();
    let mut w = WeylElement::identity(rs.rank());
    let mut have = RootSet::EMPTY;
    while have != ideal {
        let (j, k) = (1..=rs.rank())
            .find_map(|j| {
                let k = space.g1_position(&w.apply(&rs.simple_root(j)))?;
                (ideal.contains(k) && !have.contains(k)).then_some((j, k))
            })
            .expect("order ideal admits a reduced word");
        have = have.with(k);
        w = w.times_simple(rs, j);
    }
    w
}

/// Reduced word of a class of the diagram.
pub fn reduced_word(diagram: &HasseDiagram, ideal: RootSet) -> Result<Vec<usize>> {
    Ok(diagram.class_of(ideal)?.element.word().to_vec())
}
