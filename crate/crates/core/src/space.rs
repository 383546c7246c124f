//! A cominuscule space `G/P`: a root system, a cominuscule node, and the
//! ordered table of roots in `Δ(g_1)` that every inversion set lives in.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::grading::is_cominuscule;
use crate::rootsys::{Kind, Root, RootSystem};

/// Subset of the `Δ(g_1)` table of a [`Space`], one bit per root.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn from_bits(bits: u128) -> Self {
        RootSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn full(len: usize) -> Self {
        if len == 128 {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << len) - 1)
        }
    }

    pub fn singleton(k: usize) -> Self {
        RootSet(1u128 << k)
    }

    pub fn contains(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    pub fn with(self, k: usize) -> Self {
        RootSet(self.0 | 1u128 << k)
    }

    pub fn without(self, k: usize) -> Self {
        RootSet(self.0 & !(1u128 << k))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: RootSet) -> Self {
        RootSet(self.0 | other.0)
    }

    pub fn intersection(self, other: RootSet) -> Self {
        RootSet(self.0 & other.0)
    }

    pub fn difference(self, other: RootSet) -> Self {
        RootSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..128).filter(move |&k| bits >> k & 1 == 1)
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The cominuscule space `G/P_i`.
#[derive(Clone, Debug)]
pub struct Space {
    rs: RootSystem,
    node: usize,
    g1: Vec<Root>,
    g1_index: HashMap<Root, usize>,
    /// For each root of `Δ(g_1)`: the table positions of `β - α_j` that are
    /// again in `Δ(g_1)`, paired with `j`.
    lower_covers: Vec<Vec<(usize, usize)>>,
}

impl Space {
    pub fn new(kind: Kind, rank: usize, node: usize) -> Result<Self> {
        let rs = RootSystem::new(kind, rank)?;
        Self::from_root_system(rs, node)
    }

    pub fn from_root_system(rs: RootSystem, node: usize) -> Result<Self> {
        if node == 0 || node > rs.rank() {
            return Err(Error::NodeOutOfRange { node, rank: rs.rank() });
        }
        if !is_cominuscule(&rs, node) {
            return Err(Error::NotCominuscule { kind: rs.kind(), rank: rs.rank(), node });
        }
        let g1: Vec<Root> = rs.positive_roots().iter().filter(|r| r.coeffs()[node - 1] == 1).cloned().collect();
        if g1.len() > 128 {
            return Err(Error::TooLarge(g1.len()));
        }
        let g1_index: HashMap<Root, usize> = g1.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        let lower_covers = g1
            .iter()
            .map(|beta| {
                (1..=rs.rank()).filter_map(|j| g1_index.get(&beta.sub(&rs.simple_root(j))).map(|&k| (k, j))).collect()
            })
            .collect();
        Ok(Space { rs, node, g1, g1_index, lower_covers })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn kind(&self) -> Kind {
        self.rs.kind()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn node(&self) -> usize {
        self.node
    }

    /// Ordered table of `Δ(g_1)`.
    pub fn g1(&self) -> &[Root] {
        &self.g1
    }

    pub fn g1_position(&self, root: &Root) -> Option<usize> {
        self.g1_index.get(root).copied()
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.g1[k]
    }

    pub fn full_set(&self) -> RootSet {
        RootSet::full(self.g1.len())
    }

    pub fn set_of<'a>(&self, roots: impl IntoIterator<Item = &'a Root>) -> Result<RootSet> {
        let mut set = RootSet::EMPTY;
        for r in roots {
            let k = self.g1_position(r).ok_or_else(|| Error::NotAnIdeal(format!("{r} is not in Δ(g_1)")))?;
            set = set.with(k);
        }
        Ok(set)
    }

    pub fn roots_of(&self, set: RootSet) -> Vec<Root> {
        set.iter().map(|k| self.g1[k].clone()).collect()
    }

    /// Lower covers of the `k`-th root inside `Δ(g_1)`, as `(position, node)`.
    pub fn lower_covers(&self, k: usize) -> &[(usize, usize)] {
        &self.lower_covers[k]
    }

    /// Downward closure in the root order on `Δ(g_1)`.
    pub fn is_order_ideal(&self, set: RootSet) -> bool {
        set.iter().all(|k| self.lower_covers[k].iter().all(|&(l, _)| set.contains(l)))
    }

    /// Whether `Δ⁺ \ set` is closed under root addition, checked over all
    /// pairs of positive roots.
    pub fn has_closed_complement(&self, set: RootSet) -> bool {
        let outside: Vec<&Root> =
            self.rs.positive_roots().iter().filter(|r| self.g1_position(r).is_none_or(|k| !set.contains(k))).collect();
        for (x, a) in outside.iter().enumerate() {
            for b in &outside[x..] {
                let sum = a.add(b);
                if let Some(k) = self.g1_position(&sum) {
                    if set.contains(k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Short name such as `E7/P7`.
    pub fn label(&self) -> String {
        match self.kind() {
            Kind::E6 | Kind::E7 => format!("{}/P{}", self.kind(), self.node),
            k => format!("{}{}/P{}", k, self.rank(), self.node),
        }
    }

    /// `dim G/P = |Δ(g_1)|`.
    pub fn dimension(&self) -> usize {
        self.g1.len()
    }
}
