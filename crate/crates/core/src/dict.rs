//! Dictionaries between `(a, J)` labels and the classical descriptions of
//! Schubert varieties: partitions for Grassmannians, Lagrangian Grassmannians
//! and spinor varieties, and linear-section data for quadrics.

use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::Kind;
use crate::schubert::{ClassLabel, AJ};
use crate::space::Space;

/// Which family a partition indexes classes of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// `Gr(i, n+1)`: `i` parts in `1..=n+1`.
    Grassmann,
    /// `LG(n, 2n)`: `n` parts in `1..=2n`, exactly one of each pair `{k, 2n+1-k}`.
    Lagrangian,
    /// `S_n`: as Lagrangian, with an even number of parts above `n`.
    Spinor,
}

/// A strictly increasing sequence `λ_1 < … < λ_k`, written `(1,2,4)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    flavor: Flavor,
}

impl Partition {
    /// Validates `parts` for the family with parameters `n` (the rank) and,
    /// for Grassmannians, `i` (the number of parts).
    pub fn new(parts: Vec<usize>, flavor: Flavor, n: usize, i: usize) -> Result<Self> {
        let p = Partition { parts, flavor };
        p.validate(n, i)?;
        Ok(p)
    }

    fn validate(&self, n: usize, i: usize) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidPartition(format!("{self}: {why}")));
        if self.parts.windows(2).any(|w| w[0] >= w[1]) {
            return bad("parts must strictly increase");
        }
        if self.parts.first() == Some(&0) {
            return bad("parts must be positive");
        }
        match self.flavor {
            Flavor::Grassmann => {
                if self.parts.len() != i {
                    return bad(&format!("expected {i} parts"));
                }
                if self.parts.last().is_some_and(|&l| l > n + 1) {
                    return bad(&format!("parts must be at most {}", n + 1));
                }
            }
            Flavor::Lagrangian | Flavor::Spinor => {
                if self.parts.len() != n {
                    return bad(&format!("expected {n} parts"));
                }
                if self.parts.last().is_some_and(|&l| l > 2 * n) {
                    return bad(&format!("parts must be at most {}", 2 * n));
                }
                if self.parts.iter().any(|&l| self.parts.contains(&(2 * n + 1 - l))) {
                    return bad(&format!("contains a pair k, {}-k", 2 * n + 1));
                }
                if self.flavor == Flavor::Spinor && self.parts.iter().filter(|&&l| l > n).count() % 2 == 1 {
                    return bad(&format!("odd number of parts above {n}"));
                }
            }
        }
        Ok(())
    }

    /// Parses `(1,2,4)`; the parentheses are optional.
    pub fn parse(text: &str, flavor: Flavor, n: usize, i: usize) -> Result<Self> {
        let malformed = || Error::Malformed { what: "partition", text: text.to_string() };
        let inner = text.trim();
        let inner = inner.strip_prefix('(').map_or(Ok(inner), |s| s.strip_suffix(')').ok_or_else(malformed))?;
        let parts =
            inner.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| malformed())).collect::<Result<Vec<_>>>()?;
        Self::new(parts, flavor, n, i)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The marks of `J` indexed as in the dictionaries, with the endpoint
/// conventions built in.
///
/// Below the node: `j_1 > j_2 > … > j_p`, with `j_0 = top` and `j_{p+1} = 0`.
/// Above it (type A only): `k_1 < … < k_q`, with `k_0 = top` and
/// `k_{q+1} = end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkChain {
    below: Vec<usize>,
    above: Vec<usize>,
    top: usize,
    end: usize,
}

impl MarkChain {
    /// `Gr(i, n+1)`: `j_0 = k_0 = i`, `k_{q+1} = n+1`.
    pub fn grassmann(n: usize, i: usize, marks: &[usize]) -> Self {
        let mut below: Vec<usize> = marks.iter().copied().filter(|&j| j < i).collect();
        below.reverse();
        let above = marks.iter().copied().filter(|&j| j > i).collect();
        MarkChain { below, above, top: i, end: n + 1 }
    }

    /// `LG(n, 2n)` and `S_n`: all marks lie below the node, `j_0 = n`.
    pub fn isotropic(n: usize, marks: &[usize]) -> Self {
        let mut below: Vec<usize> = marks.to_vec();
        below.reverse();
        MarkChain { below, above: Vec::new(), top: n, end: n + 1 }
    }

    pub fn p(&self) -> usize {
        self.below.len()
    }

    pub fn q(&self) -> usize {
        self.above.len()
    }

    /// `j_ℓ` for `0 ≤ ℓ ≤ p+1`.
    pub fn j(&self, l: usize) -> Option<usize> {
        match l {
            0 => Some(self.top),
            l if l <= self.p() => Some(self.below[l - 1]),
            l if l == self.p() + 1 => Some(0),
            _ => None,
        }
    }

    /// `k_m` for `0 ≤ m ≤ q+1`.
    pub fn k(&self, m: usize) -> Option<usize> {
        match m {
            0 => Some(self.top),
            m if m <= self.q() => Some(self.above[m - 1]),
            m if m == self.q() + 1 => Some(self.end),
            _ => None,
        }
    }

    /// `j_ℓ - j_{ℓ+1}`, when both are defined.
    pub fn j_gap(&self, l: usize) -> Option<usize> {
        Some(self.j(l)? - self.j(l + 1)?)
    }

    /// `k_{m+1} - k_m`, when both are defined.
    pub fn k_gap(&self, m: usize) -> Option<usize> {
        Some(self.k(m + 1)? - self.k(m)?)
    }
}

fn shape_error(aj: &AJ, what: &str) -> Error {
    Error::Dictionary(format!("{aj}: {what}"))
}

/// Splits a partition into maximal blocks of consecutive parts, using
/// `adjacent` to decide consecutiveness. Returned left to right, i.e.
/// `μ_p, …, μ_0`.
fn blocks(parts: &[usize], adjacent: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &x in parts {
        match out.last_mut() {
            Some(block) if adjacent(*block.last().unwrap(), x) => block.push(x),
            _ => out.push(vec![x]),
        }
    }
    out
}

/// `j_ℓ = |μ_p ⋯ μ_ℓ|` for `ℓ = p, …, 1`, ascending.
fn marks_from_blocks(blocks: &[Vec<usize>]) -> Vec<usize> {
    let mut marks = Vec::new();
    let mut length = 0;
    for block in &blocks[..blocks.len() - 1] {
        length += block.len();
        marks.push(length);
    }
    marks
}

/// `(a, J) → λ` for `Gr(i, n+1) = A_n/P_i`.
pub fn grassmann_aj_to_partition(n: usize, i: usize, aj: &AJ) -> Result<Partition> {
    let chain = MarkChain::grassmann(n, i, aj.marks());
    let a = aj.a as usize;
    if aj.marks().iter().any(|&j| j == i || j > n) {
        return Err(shape_error(aj, "marks must avoid the node and lie in 1..=n"));
    }
    if ![a, a + 1].contains(&chain.p()) || ![a, a + 1].contains(&chain.q()) {
        return Err(shape_error(aj, "need p, q ∈ {a, a+1}"));
    }
    let mut parts = Vec::with_capacity(i);
    for l in (0..=chain.p()).rev() {
        let m = a + 1 - l;
        let km = chain.k(m).ok_or_else(|| shape_error(aj, "block index out of range"))?;
        let lo = chain.j(l + 1).unwrap() + km + 1;
        let hi = chain.j(l).unwrap() + km;
        parts.extend((lo..=hi).map(|x| x - i));
    }
    Partition::new(parts, Flavor::Grassmann, n, i)
}

/// `λ → (a, J)` for `Gr(i, n+1)`; the endpoint partitions give markers.
pub fn grassmann_partition_to_aj(n: usize, i: usize, lambda: &Partition) -> Result<ClassLabel> {
    lambda.validate(n, i)?;
    let parts = lambda.parts();
    let mu = blocks(parts, |x, y| y == x + 1);
    let p = mu.len() - 1;
    let js = marks_from_blocks(&mu);
    if parts[0] == 1 && p == 0 {
        return Ok(ClassLabel::Bottom);
    }
    let mut ks: Vec<usize> = js.iter().map(|&j| i - j + parts[j - 1]).collect();
    ks.push(parts[i - 1]);
    ks.retain(|&k| k != i && k != n + 1);
    let a = if parts[0] > 1 { p } else { p - 1 };
    if js.is_empty() && ks.is_empty() {
        return Ok(ClassLabel::Top);
    }
    Ok(ClassLabel::Proper(AJ::new(a as u32, js.into_iter().chain(ks))))
}

fn isotropic_blocks(n: usize, chain: &MarkChain, aj: &AJ, shift: usize) -> Result<Vec<usize>> {
    let mut parts = Vec::with_capacity(n);
    for l in (0..=chain.p()).rev() {
        let m =
            (aj.a as usize + 1 + shift).checked_sub(l).ok_or_else(|| shape_error(aj, "block index out of range"))?;
        let jm = chain.j(m).ok_or_else(|| shape_error(aj, "block index out of range"))?;
        let lo = n + 1 + chain.j(l + 1).unwrap();
        let hi = n + chain.j(l).unwrap();
        parts.extend((lo..=hi).map(|x| x - jm));
    }
    Ok(parts)
}

fn check_isotropic_marks(n: usize, aj: &AJ) -> Result<()> {
    if aj.marks().iter().any(|&j| j >= n) {
        return Err(shape_error(aj, &format!("marks must lie in 1..={}", n - 1)));
    }
    Ok(())
}

/// `(a, J) → λ` for `LG(n, 2n) = C_n/P_n`.
pub fn lagrangian_aj_to_partition(n: usize, aj: &AJ) -> Result<Partition> {
    check_isotropic_marks(n, aj)?;
    let chain = MarkChain::isotropic(n, aj.marks());
    let a = aj.a as usize;
    if ![a, a + 1].contains(&chain.p()) {
        return Err(shape_error(aj, "need p ∈ {a, a+1}"));
    }
    Partition::new(isotropic_blocks(n, &chain, aj, 0)?, Flavor::Lagrangian, n, n)
}

/// `λ → (a, J)` for `LG(n, 2n)`.
pub fn lagrangian_partition_to_aj(n: usize, lambda: &Partition) -> Result<ClassLabel> {
    lambda.validate(n, n)?;
    let parts = lambda.parts();
    let mu = blocks(parts, |x, y| y == x + 1);
    let p = mu.len() - 1;
    if parts[0] == 1 && p == 0 {
        return Ok(ClassLabel::Bottom);
    }
    if p == 0 {
        return Ok(ClassLabel::Top);
    }
    let a = if parts[0] == 1 { p - 1 } else { p };
    Ok(ClassLabel::Proper(AJ::new(a as u32, marks_from_blocks(&mu))))
}

/// `α_{n-1}(Z_w)`: 1 when `n-1 ∈ J`.
pub fn spinor_delta(n: usize, aj: &AJ) -> usize {
    usize::from(aj.marks().contains(&(n - 1)))
}

/// `r = ⌈(a + α_{n-1}(Z_w)) / 2⌉`.
pub fn spinor_r(n: usize, aj: &AJ) -> usize {
    (aj.a as usize + spinor_delta(n, aj)).div_ceil(2)
}

/// `(a, J) → λ` for `S_n = D_n/P_n`, including the `n ↔ n+1` parity repair.
pub fn spinor_aj_to_partition(n: usize, aj: &AJ) -> Result<Partition> {
    check_isotropic_marks(n, aj)?;
    let chain = MarkChain::isotropic(n, aj.marks());
    let (a, delta) = (aj.a as usize, spinor_delta(n, aj));
    if ![a, a + 1].contains(&(chain.p() - delta)) {
        return Err(shape_error(aj, "need p - α_{n-1}(Z_w) ∈ {a, a+1}"));
    }
    let r = spinor_r(n, aj);
    if r > delta && chain.j_gap(r).is_some_and(|g| g < 2) {
        return Err(shape_error(aj, "need j_r - j_{r+1} ≥ 2"));
    }
    let mut parts = isotropic_blocks(n, &chain, aj, delta)?;
    if parts.iter().filter(|&&x| x > n).count() % 2 == 1 {
        let present = parts.iter().position(|&x| x == n || x == n + 1);
        let Some(at) = present else {
            return Err(shape_error(aj, &format!("neither {n} nor {} present for parity repair", n + 1)));
        };
        parts[at] = if parts[at] == n { n + 1 } else { n };
        parts.sort_unstable();
    }
    Partition::new(parts, Flavor::Spinor, n, n)
}

/// `λ → (a, J)` for `S_n`, using hat-blocks in which `n-1, n+1` and `n, n+2`
/// also count as consecutive.
pub fn spinor_partition_to_aj(n: usize, lambda: &Partition) -> Result<ClassLabel> {
    lambda.validate(n, n)?;
    let parts = lambda.parts();
    let mu = blocks(parts, |x, y| y == x + 1 || (x, y) == (n - 1, n + 1) || (x, y) == (n, n + 2));
    let p = mu.len() as i64 - 1;
    let first_is_one = parts[0] == 1;
    let tail_step = parts[n - 1] - parts[n - 2];
    let a = match (first_is_one, tail_step == 1) {
        (true, false) => p - 2,
        (true, true) | (false, false) => p - 1,
        (false, true) => p,
    };
    let marks = marks_from_blocks(&mu);
    if a < 0 {
        return Ok(ClassLabel::Bottom);
    }
    if marks.is_empty() {
        return Ok(ClassLabel::Top);
    }
    Ok(ClassLabel::Proper(AJ::new(a as u32, marks)))
}

/// `dim Y_λ` from the partition alone.
pub fn partition_dimension(lambda: &Partition, n: usize) -> usize {
    let parts = lambda.parts();
    match lambda.flavor() {
        Flavor::Grassmann => parts.iter().enumerate().map(|(k, &l)| l - (k + 1)).sum(),
        Flavor::Lagrangian => parts.iter().filter(|&&l| l > n).map(|&l| l - n).sum(),
        Flavor::Spinor => parts.iter().filter(|&&l| l > n).map(|&l| l - n - 1).sum(),
    }
}

/// Which partition family a space belongs to, if any.
pub fn flavor_of(space: &Space) -> Option<Flavor> {
    match (space.kind(), space.node()) {
        (Kind::A, _) => Some(Flavor::Grassmann),
        (Kind::C, i) if i == space.rank() => Some(Flavor::Lagrangian),
        (Kind::D, i) if i == space.rank() => Some(Flavor::Spinor),
        _ => None,
    }
}

/// `(a, J) → λ` for whichever family `space` belongs to.
pub fn aj_to_partition(space: &Space, aj: &AJ) -> Result<Partition> {
    let n = space.rank();
    match flavor_of(space) {
        Some(Flavor::Grassmann) => grassmann_aj_to_partition(n, space.node(), aj),
        Some(Flavor::Lagrangian) => lagrangian_aj_to_partition(n, aj),
        Some(Flavor::Spinor) => spinor_aj_to_partition(n, aj),
        None => Err(Error::Dictionary(format!("{} has no partition dictionary", space.label()))),
    }
}

/// `λ → (a, J)` for whichever family `space` belongs to.
pub fn partition_to_aj(space: &Space, lambda: &Partition) -> Result<ClassLabel> {
    let n = space.rank();
    match flavor_of(space) {
        Some(Flavor::Grassmann) => grassmann_partition_to_aj(n, space.node(), lambda),
        Some(Flavor::Lagrangian) => lagrangian_partition_to_aj(n, lambda),
        Some(Flavor::Spinor) => spinor_partition_to_aj(n, lambda),
        None => Err(Error::Dictionary(format!("{} has no partition dictionary", space.label()))),
    }
}

/// The partition of an endpoint class.
pub fn endpoint_partition(space: &Space, label: &ClassLabel) -> Result<Partition> {
    let n = space.rank();
    let flavor =
        flavor_of(space).ok_or_else(|| Error::Dictionary(format!("{} has no partition dictionary", space.label())))?;
    let (count, last) = match flavor {
        Flavor::Grassmann => (space.node(), n + 1),
        _ => (n, 2 * n),
    };
    let parts: Vec<usize> = match label {
        ClassLabel::Bottom => (1..=count).collect(),
        ClassLabel::Top => {
            let mut top: Vec<usize> = (last + 1 - count..=last).collect();
            if flavor == Flavor::Spinor && n % 2 == 1 {
                top[0] = n;
            }
            top
        }
        ClassLabel::Proper(aj) => return aj_to_partition(space, aj),
    };
    Partition::new(parts, flavor, n, count)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    /// `Q^{2n-1} = B_n/P_1`.
    Odd,
    /// `Q^{2n-2} = D_n/P_1`.
    Even,
}

/// Geometric description of a proper Schubert variety in a quadric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadricGeometry {
    /// A linear space `P^d` inside the quadric.
    Projective { dim: usize },
    /// `Q ∩ P⟨e_k : k ∈ span⟩`, with `span` a union of inclusive ranges.
    Section { span: Vec<(usize, usize)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricClassDescriptor {
    pub parity: Parity,
    pub n: usize,
    pub aj: AJ,
    pub geometry: QuadricGeometry,
}

impl QuadricClassDescriptor {
    pub fn dimension(&self) -> usize {
        match &self.geometry {
            QuadricGeometry::Projective { dim } => *dim,
            QuadricGeometry::Section { span } => span.iter().map(|(lo, hi)| hi + 1 - lo).sum::<usize>() - 2,
        }
    }
}

impl fmt::Display for QuadricGeometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadricGeometry::Projective { dim } => write!(f, "P^{dim}"),
            QuadricGeometry::Section { span } => {
                let pieces: Vec<String> = span
                    .iter()
                    .map(|&(lo, hi)| if lo == hi { format!("e{lo}") } else { format!("e{lo}..e{hi}") })
                    .collect();
                write!(f, "Q ∩ P<{}>", pieces.join(", "))
            }
        }
    }
}

/// The admissible `(a, J)` of a quadric and the variety each one labels.
pub fn quadric_dict(parity: Parity, n: usize, aj: &AJ) -> Result<QuadricClassDescriptor> {
    let inadmissible = || Error::Dictionary(format!("{aj} is not admissible for this quadric"));
    let geometry = match (parity, aj.a, aj.marks()) {
        (Parity::Odd, 0, &[j]) if (2..=n).contains(&j) => QuadricGeometry::Projective { dim: j - 1 },
        (Parity::Odd, 1, &[j]) if (2..=n).contains(&j) => {
            QuadricGeometry::Section { span: vec![(1, n + 1), (n + j + 1, 2 * n + 1)] }
        }
        (Parity::Even, 0, &[j]) if (2..=n - 2).contains(&j) => QuadricGeometry::Projective { dim: j - 1 },
        (Parity::Even, 0, &[j]) if j == n - 1 || j == n => QuadricGeometry::Projective { dim: n - 1 },
        (Parity::Even, 0, &[j, k]) if (j, k) == (n - 1, n) => QuadricGeometry::Projective { dim: n - 2 },
        (Parity::Even, 1, &[j]) if (2..=n - 2).contains(&j) => {
            QuadricGeometry::Section { span: vec![(1, n + 1), (n + j + 1, 2 * n)] }
        }
        (Parity::Even, 1, &[j, k]) if (j, k) == (n - 1, n) => {
            QuadricGeometry::Section { span: vec![(1, n + 1), (2 * n, 2 * n)] }
        }
        _ => return Err(inadmissible()),
    };
    Ok(QuadricClassDescriptor { parity, n, aj: aj.clone(), geometry })
}

/// Every admissible `(a, J)` for a quadric, in a fixed order.
pub fn quadric_admissible(parity: Parity, n: usize) -> Vec<AJ> {
    let mut out = Vec::new();
    match parity {
        Parity::Odd => {
            for a in 0..=1 {
                out.extend((2..=n).map(|j| AJ::new(a, [j])));
            }
        }
        Parity::Even => {
            out.extend((2..=n).map(|j| AJ::new(0, [j])));
            out.push(AJ::new(0, [n - 1, n]));
            out.extend((2..=n - 2).map(|j| AJ::new(1, [j])));
            out.push(AJ::new(1, [n - 1, n]));
        }
    }
    out
}

/// Quadric parity of a space, if it is one.
pub fn parity_of(space: &Space) -> Option<Parity> {
    match (space.kind(), space.node()) {
        (Kind::B, 1) => Some(Parity::Odd),
        (Kind::D, 1) => Some(Parity::Even),
        _ => None,
    }
}
