//! Grading elements `Z_i`, `Z_w = Σ_{j∈J} Z_j` and `Z̃_w = Z_w - a Z_i`.
//!
//! Every grading element here is a sum of dual basis elements, so its
//! eigenvalue on a root space is a sum of coefficients of the root.

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

/// Nodes whose simple root has coefficient 1 in the highest root.
pub fn cominuscule_nodes(rs: &RootSystem) -> Vec<usize> {
    (1..=rs.rank()).filter(|&j| is_cominuscule(rs, j)).collect()
}

pub fn is_cominuscule(rs: &RootSystem, node: usize) -> bool {
    (1..=rs.rank()).contains(&node) && rs.highest_root().coeffs()[node - 1] == 1
}

/// The `(Z_i, Z_w)` bigrading attached to a node `i`, a marking `J` and an
/// integer `a`.
#[derive(Clone, Debug)]
pub struct GradingContext<'r> {
    rs: &'r RootSystem,
    node: usize,
    marks: Vec<usize>,
    a: i32,
}

impl<'r> GradingContext<'r> {
    /// `marks` may be given in any order; it is stored ascending.
    pub fn new(rs: &'r RootSystem, node: usize, marks: &[usize], a: i32) -> Result<Self> {
        if node == 0 || node > rs.rank() {
            return Err(Error::NodeOutOfRange { node, rank: rs.rank() });
        }
        if !is_cominuscule(rs, node) {
            return Err(Error::NotCominuscule { kind: rs.kind(), rank: rs.rank(), node });
        }
        let mut marks = marks.to_vec();
        marks.sort_unstable();
        marks.dedup();
        for &j in &marks {
            if j == 0 || j > rs.rank() {
                return Err(Error::NodeOutOfRange { node: j, rank: rs.rank() });
            }
            if j == node {
                return Err(Error::Unrealized(format!("J contains the node {node}")));
            }
        }
        if a < 0 {
            return Err(Error::Unrealized(format!("a = {a} is negative")));
        }
        Ok(GradingContext { rs, node, marks, a })
    }

    pub fn root_system(&self) -> &'r RootSystem {
        self.rs
    }

    pub fn node(&self) -> usize {
        self.node
    }

    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    pub fn a(&self) -> i32 {
        self.a
    }

    pub fn zi_level(&self, root: &Root) -> i32 {
        root.coeffs()[self.node - 1]
    }

    pub fn zw_level(&self, root: &Root) -> i32 {
        root.level(&self.marks)
    }

    pub fn tilde_level(&self, root: &Root) -> i32 {
        self.zw_level(root) - self.a * self.zi_level(root)
    }

    /// Roots of `g_{k,ℓ}`, positives first, each half in table order.
    pub fn bigraded_roots(&self, k: i32, l: i32) -> Vec<Root> {
        self.rs.roots().filter(|r| self.zi_level(r) == k && self.zw_level(r) == l).collect()
    }

    /// `Δ⁺(g_{0,0})`.
    pub fn levi_positive(&self) -> Vec<Root> {
        self.rs.positive_roots().iter().filter(|r| self.zi_level(r) == 0 && self.zw_level(r) == 0).cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Kind;

    #[test]
    fn cominuscule_node_sets() {
        let rs = |k, n| RootSystem::new(k, n).unwrap();
        assert_eq!(cominuscule_nodes(&rs(Kind::A, 5)), vec![1, 2, 3, 4, 5]);
        assert_eq!(cominuscule_nodes(&rs(Kind::B, 4)), vec![1]);
        assert_eq!(cominuscule_nodes(&rs(Kind::C, 4)), vec![4]);
        assert_eq!(cominuscule_nodes(&rs(Kind::D, 5)), vec![1, 4, 5]);
        assert_eq!(cominuscule_nodes(&rs(Kind::E6, 6)), vec![1, 6]);
        assert_eq!(cominuscule_nodes(&rs(Kind::E7, 7)), vec![7]);
    }

    #[test]
    fn eigenvalues_of_z_i() {
        let cases = [(Kind::A, 6), (Kind::B, 5), (Kind::C, 5), (Kind::D, 6), (Kind::E6, 6), (Kind::E7, 7)];
        for (kind, n) in cases {
            let rs = RootSystem::new(kind, n).unwrap();
            for j in 1..=n {
                let in_range = rs.roots().all(|r| (-1..=1).contains(&r.coeffs()[j - 1]));
                assert_eq!(in_range, is_cominuscule(&rs, j), "{kind}{n} node {j}");
            }
        }
    }

    #[test]
    fn levels() {
        let rs = RootSystem::new(Kind::A, 10).unwrap();
        let ctx = GradingContext::new(&rs, 5, &[2, 3, 6, 8, 10], 2).unwrap();
        let alpha = |s: usize, t: usize| Root::new((1..=10).map(|k| i32::from(k >= s && k <= t)).collect());
        assert_eq!(ctx.zw_level(&alpha(3, 5)), 1);
        assert_eq!(ctx.zw_level(&alpha(1, 5)), 2);
        assert_eq!(ctx.zw_level(&rs.simple_root(5)), 0);
        assert_eq!(ctx.zw_level(&rs.simple_root(8)), 1);
        assert_eq!(ctx.zi_level(&rs.simple_root(5)), 1);
        assert_eq!(ctx.zi_level(&rs.highest_root().neg()), -1);
        assert_eq!(ctx.zi_level(&alpha(6, 9)), 0);
        assert_eq!(ctx.tilde_level(&alpha(1, 5)), 0);
        assert_eq!(ctx.tilde_level(&alpha(3, 5)), -1);
        assert_eq!(ctx.tilde_level(&rs.simple_root(1)), 0);
    }

    #[test]
    fn bigrading_partitions_roots() {
        let rs = RootSystem::new(Kind::E7, 7).unwrap();
        let ctx = GradingContext::new(&rs, 7, &[1, 3, 5, 6], 5).unwrap();
        let mut total = 0;
        for k in -1..=1 {
            for l in -20..=20 {
                let part = ctx.bigraded_roots(k, l);
                if k * l < 0 {
                    assert!(part.is_empty());
                }
                total += part.len();
            }
        }
        assert_eq!(total, 126);
    }

    #[test]
    fn rejects_bad_context() {
        let rs = RootSystem::new(Kind::A, 4).unwrap();
        assert!(GradingContext::new(&rs, 2, &[2], 0).is_err());
        assert!(GradingContext::new(&rs, 2, &[5], 0).is_err());
        let c = RootSystem::new(Kind::C, 3).unwrap();
        assert!(GradingContext::new(&c, 1, &[2], 0).is_err());
    }
}
