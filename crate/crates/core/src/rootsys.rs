//! Finite root systems in simple-root coordinates.
//!
//! Roots are integer coefficient vectors over the simple roots, using Bourbaki
//! node numbering. Only the types carrying a cominuscule node are supported.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cartan type of a simple root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl Kind {
    /// Exceptional types print `a:J` with concatenated digits.
    pub fn is_exceptional(self) -> bool {
        matches!(self, Kind::E6 | Kind::E7)
    }

    fn min_rank(self) -> usize {
        match self {
            Kind::A => 1,
            Kind::B | Kind::C => 2,
            Kind::D => 3,
            Kind::E6 => 6,
            Kind::E7 => 7,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
            Kind::D => "D",
            Kind::E6 => "E6",
            Kind::E7 => "E7",
        };
        f.write_str(s)
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Kind::A),
            "B" => Ok(Kind::B),
            "C" => Ok(Kind::C),
            "D" => Ok(Kind::D),
            "E6" => Ok(Kind::E6),
            "E7" => Ok(Kind::E7),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

/// A root written in the basis of simple roots.
///
/// The `j`-th coefficient (1-based) is the eigenvalue of the grading element
/// `Z_j` on the root space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    /// The simple root `α_j` (1-based) of a rank `rank` system.
    pub fn simple(rank: usize, j: usize) -> Self {
        let mut c = vec![0; rank];
        c[j - 1] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// The `α_j`-coefficient, `j` 1-based.
    pub fn coefficient(&self, j: usize) -> Result<i32> {
        if j == 0 || j > self.0.len() {
            return Err(Error::NodeOutOfRange { node: j, rank: self.0.len() });
        }
        Ok(self.0[j - 1])
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Sum of the coefficients at the given 1-based nodes.
    pub fn level(&self, nodes: &[usize]) -> i32 {
        nodes.iter().map(|&j| self.0[j - 1]).sum()
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Compact form: `(0,1,1,0)`.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A finite root system together with its positive-root table.
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: Kind,
    rank: usize,
    /// `cartan[i][j] = <α_i^∨, α_j> = 2(α_i, α_j) / (α_i, α_i)`.
    cartan: Vec<Vec<i32>>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
    highest: Root,
}

/// Symmetrized form on simple roots; long roots have squared length 4 in the
/// non-simply-laced types and 2 otherwise.
fn gram_matrix(kind: Kind, rank: usize) -> Vec<Vec<i32>> {
    let mut g = vec![vec![0; rank]; rank];
    let link = |g: &mut Vec<Vec<i32>>, i: usize, j: usize, v: i32| {
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    match kind {
        Kind::A => {
            for i in 1..=rank {
                g[i - 1][i - 1] = 2;
            }
            for i in 1..rank {
                link(&mut g, i, i + 1, -1);
            }
        }
        Kind::B => {
            for i in 1..rank {
                g[i - 1][i - 1] = 4;
            }
            g[rank - 1][rank - 1] = 2;
            for i in 1..rank {
                link(&mut g, i, i + 1, -2);
            }
        }
        Kind::C => {
            for i in 1..rank {
                g[i - 1][i - 1] = 2;
            }
            g[rank - 1][rank - 1] = 4;
            for i in 1..rank - 1 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, rank - 1, rank, -2);
        }
        Kind::D => {
            for i in 1..=rank {
                g[i - 1][i - 1] = 2;
            }
            for i in 1..rank - 1 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, rank - 2, rank, -1);
        }
        Kind::E6 | Kind::E7 => {
            for i in 1..=rank {
                g[i - 1][i - 1] = 2;
            }
            link(&mut g, 1, 3, -1);
            link(&mut g, 2, 4, -1);
            for i in 3..rank {
                link(&mut g, i, i + 1, -1);
            }
        }
    }
    g
}

impl RootSystem {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        let valid = match kind {
            Kind::E6 => rank == 6,
            Kind::E7 => rank == 7,
            _ => rank >= kind.min_rank(),
        };
        if !valid {
            return Err(Error::InvalidType { kind, rank });
        }
        let gram = gram_matrix(kind, rank);
        let cartan: Vec<Vec<i32>> =
            (0..rank).map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[i][i]).collect()).collect();

        // Grow the positive roots height by height using root strings: for a
        // positive root β ≠ α_j with α_j-string β - pα_j, …, β + qα_j we have
        // q = p - <β, α_j^∨>, and β + α_j is a root iff q > 0.
        let mut positive: Vec<Root> = (1..=rank).map(|j| Root::simple(rank, j)).collect();
        let mut index: HashMap<Root, usize> = positive.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        let mut frontier: Vec<Root> = positive.clone();
        while !frontier.is_empty() {
            let mut next: Vec<Root> = Vec::new();
            for beta in &frontier {
                for j in 1..=rank {
                    let simple = Root::simple(rank, j);
                    if *beta == simple {
                        continue;
                    }
                    let mut p = 0;
                    let mut lower = beta.sub(&simple);
                    while index.contains_key(&lower) {
                        p += 1;
                        lower = lower.sub(&simple);
                    }
                    let pairing: i32 = (0..rank).map(|i| beta.0[i] * cartan[j - 1][i]).sum();
                    if p - pairing > 0 {
                        let up = beta.add(&simple);
                        if !index.contains_key(&up) {
                            index.insert(up.clone(), usize::MAX);
                            next.push(up);
                        }
                    }
                }
            }
            positive.extend(next.iter().cloned());
            frontier = next;
        }
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let index: HashMap<Root, usize> = positive.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        let highest = positive.last().cloned().expect("nonempty root system");
        Ok(RootSystem { kind, rank, cartan, positive, index, highest })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    pub fn simple_root(&self, j: usize) -> Root {
        Root::simple(self.rank, j)
    }

    /// Position of a positive root in the ordered table.
    pub fn positive_index(&self, root: &Root) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// All roots: the positive table followed by its negatives.
    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive.iter().cloned().chain(self.positive.iter().map(Root::neg))
    }

    pub fn is_root(&self, root: &Root) -> bool {
        root.rank() == self.rank && (self.index.contains_key(root) || self.index.contains_key(&root.neg()))
    }

    fn check_root(&self, root: &Root) -> Result<()> {
        if self.is_root(root) {
            Ok(())
        } else {
            Err(Error::NotARoot(root.to_string()))
        }
    }

    /// `α + β` when it is a root, `None` otherwise.
    pub fn root_sum(&self, alpha: &Root, beta: &Root) -> Result<Option<Root>> {
        self.check_root(alpha)?;
        self.check_root(beta)?;
        let sum = alpha.add(beta);
        Ok(self.is_root(&sum).then_some(sum))
    }

    /// `<β, α_j^∨>` for any lattice vector `β`.
    pub fn pairing(&self, beta: &Root, j: usize) -> i32 {
        (0..self.rank).map(|i| beta.0[i] * self.cartan[j - 1][i]).sum()
    }

    /// The simple reflection `s_j` applied to a lattice vector.
    pub fn reflect(&self, beta: &Root, j: usize) -> Root {
        let mut c = beta.0.clone();
        c[j - 1] -= self.pairing(beta, j);
        Root(c)
    }

    /// Nodes adjacent to `j` in the Dynkin diagram.
    pub fn neighbors(&self, j: usize) -> Vec<usize> {
        (1..=self.rank).filter(|&k| k != j && self.cartan[j - 1][k - 1] != 0).collect()
    }

    /// Order of the Weyl group, from the standard closed forms.
    pub fn weyl_order(&self) -> u128 {
        weyl_group_order(self.kind, self.rank)
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `|W|` for a type `(kind, rank)`; rank 0 gives the trivial group.
pub fn weyl_group_order(kind: Kind, rank: usize) -> u128 {
    if rank == 0 {
        return 1;
    }
    match kind {
        Kind::A => factorial(rank + 1),
        Kind::B | Kind::C => (1u128 << rank) * factorial(rank),
        Kind::D => (1u128 << (rank - 1)) * factorial(rank),
        Kind::E6 => 51_840,
        Kind::E7 => 2_903_040,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Independent route to the root set: the Weyl orbit of the simple roots.
    fn reflection_closure(rs: &RootSystem) -> BTreeSet<Root> {
        let mut seen: BTreeSet<Root> = (1..=rs.rank()).map(|j| rs.simple_root(j)).collect();
        let mut stack: Vec<Root> = seen.iter().cloned().collect();
        while let Some(r) = stack.pop() {
            for j in 1..=rs.rank() {
                let s = rs.reflect(&r, j);
                if seen.insert(s.clone()) {
                    stack.push(s);
                }
            }
        }
        seen.into_iter().filter(|r| r.is_positive()).collect()
    }

    fn expected_count(kind: Kind, n: usize) -> usize {
        match kind {
            Kind::A => n * (n + 1) / 2,
            Kind::B | Kind::C => n * n,
            Kind::D => n * (n - 1),
            Kind::E6 => 36,
            Kind::E7 => 63,
        }
    }

    fn all_small() -> Vec<(Kind, usize)> {
        let mut v = vec![(Kind::E6, 6), (Kind::E7, 7)];
        for n in 1..=8 {
            v.push((Kind::A, n));
        }
        for n in 2..=7 {
            v.push((Kind::B, n));
            v.push((Kind::C, n));
        }
        for n in 3..=8 {
            v.push((Kind::D, n));
        }
        v
    }

    #[test]
    fn positive_root_counts_match_closed_forms() {
        for (kind, n) in all_small() {
            let rs = RootSystem::new(kind, n).unwrap();
            assert_eq!(rs.positive_roots().len(), expected_count(kind, n), "{kind}{n}");
            let orbit = reflection_closure(&rs);
            let table: BTreeSet<Root> = rs.positive_roots().iter().cloned().collect();
            assert_eq!(orbit, table, "{kind}{n}");
        }
    }

    #[test]
    fn highest_root_dominates() {
        for (kind, n) in all_small() {
            let rs = RootSystem::new(kind, n).unwrap();
            let h = rs.highest_root();
            for r in rs.positive_roots() {
                assert!(r.coeffs().iter().zip(h.coeffs()).all(|(a, b)| a <= b));
            }
        }
        let e7 = RootSystem::new(Kind::E7, 7).unwrap();
        assert_eq!(e7.highest_root().coeffs(), &[2, 2, 3, 4, 3, 2, 1]);
        let c4 = RootSystem::new(Kind::C, 4).unwrap();
        assert_eq!(c4.highest_root().coeffs(), &[2, 2, 2, 1]);
        let e6 = RootSystem::new(Kind::E6, 6).unwrap();
        assert_eq!(e6.highest_root().coeffs(), &[1, 2, 2, 3, 2, 1]);
    }

    #[test]
    fn reflections_permute_roots() {
        for (kind, n) in all_small() {
            let rs = RootSystem::new(kind, n).unwrap();
            for r in rs.positive_roots() {
                for j in 1..=n {
                    assert!(rs.is_root(&rs.reflect(r, j)));
                }
            }
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(RootSystem::new(Kind::A, 3).unwrap().positive_roots().len(), 6);
        assert_eq!(RootSystem::new(Kind::E6, 6).unwrap().positive_roots().len(), 36);
        assert_eq!(RootSystem::new(Kind::E7, 7).unwrap().positive_roots().len(), 63);
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(RootSystem::new(Kind::E6, 7).is_err());
        assert!(RootSystem::new(Kind::D, 2).is_err());
        assert!(RootSystem::new(Kind::B, 1).is_err());
        assert!(RootSystem::new(Kind::A, 0).is_err());
    }

    #[test]
    fn root_sums() {
        let a3 = RootSystem::new(Kind::A, 3).unwrap();
        let (a1, a2, a3r) = (a3.simple_root(1), a3.simple_root(2), a3.simple_root(3));
        assert_eq!(a3.root_sum(&a1, &a2).unwrap(), Some(Root::new(vec![1, 1, 0])));
        assert_eq!(a3.root_sum(&a1, &a3r).unwrap(), None);
        assert!(a3.root_sum(&Root::new(vec![1, 0, 1]), &a2).is_err());

        // C2 with α1 short and α2 long: α2 + (α1 + α2) is not a root, α1 + (α1 + α2) is.
        let c2 = RootSystem::new(Kind::C, 2).unwrap();
        let s = Root::new(vec![1, 1]);
        assert_eq!(c2.root_sum(&c2.simple_root(2), &s).unwrap(), None);
        assert_eq!(c2.root_sum(&c2.simple_root(1), &s).unwrap(), Some(Root::new(vec![2, 1])));
    }

    #[test]
    fn coefficients() {
        let r = Root::new(vec![1, 1, 0]);
        assert_eq!(r.coefficient(2).unwrap(), 1);
        assert!(r.coefficient(0).is_err());
        assert!(r.coefficient(4).is_err());
        let e7 = RootSystem::new(Kind::E7, 7).unwrap();
        assert_eq!(e7.highest_root().coefficient(7).unwrap(), 1);
        assert_eq!(e7.simple_root(5).coefficient(3).unwrap(), 0);
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(weyl_group_order(Kind::A, 3), 24);
        assert_eq!(weyl_group_order(Kind::D, 4), 192);
        assert_eq!(weyl_group_order(Kind::E6, 6), 51_840);
    }
}
