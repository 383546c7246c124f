//! Irreducible components of the singular locus of a Schubert variety.
//!
//! For a proper class with label `(a, J)` the components are indexed by
//! `Π_{1,a-1}`, the highest weights of the `g_{0,0}`-module `g_{1,a-1}`. The
//! component attached to `ε` has inversion set `Δ(w) \ Δ(w, ε)` and
//! codimension `|Δ(w, ε)|`.

use std::collections::BTreeSet;

use crate::dict::{spinor_delta, spinor_r, MarkChain};
use crate::error::{Error, Result};
use crate::grading::GradingContext;
use crate::rootsys::{Kind, Root};
use crate::schubert::{aj_of, ClassLabel, InversionIdeal, AJ};
use crate::space::{RootSet, Space};

/// `Δ⁺(g_{0,0})`.
pub fn g00_positive(ctx: &GradingContext) -> Vec<Root> {
    ctx.levi_positive()
}

/// `Δ(g_{1,ℓ})` in root-table order.
fn g1_level(ctx: &GradingContext, level: i32) -> Vec<Root> {
    ctx.root_system()
        .positive_roots()
        .iter()
        .filter(|r| ctx.zi_level(r) == 1 && ctx.zw_level(r) == level)
        .cloned()
        .collect()
}

/// `Π_{1,a-1}`: roots `ε ∈ Δ(g_{1,a-1})` with `ε + α ∉ Δ` for every
/// `α ∈ Δ⁺(g_{0,0})`.
pub fn pi_set(ctx: &GradingContext) -> Vec<Root> {
    let levi = g00_positive(ctx);
    let rs = ctx.root_system();
    g1_level(ctx, ctx.a() - 1).into_iter().filter(|e| levi.iter().all(|alpha| !rs.is_root(&e.add(alpha)))).collect()
}

/// `Π_{1,a-1}` tested against the simple roots of `g_{0,0}` only.
pub fn pi_set_by_simple_roots(ctx: &GradingContext) -> Vec<Root> {
    let rs = ctx.root_system();
    let simple: Vec<Root> =
        (1..=rs.rank()).filter(|&j| j != ctx.node() && !ctx.marks().contains(&j)).map(|j| rs.simple_root(j)).collect();
    g1_level(ctx, ctx.a() - 1).into_iter().filter(|e| simple.iter().all(|alpha| !rs.is_root(&e.add(alpha)))).collect()
}

/// `Δ(w, ε) = {ε} ⊔ {ν ∈ Δ(g_{1,a}) : ν - ε ∈ Δ(g_{0,1})}`, with `ε` first.
pub fn delta_w_eps(ctx: &GradingContext, eps: &Root) -> Result<Vec<Root>> {
    if !pi_set(ctx).contains(eps) {
        return Err(Error::NotARoot(format!("{eps} is not in Π_(1,a-1)")));
    }
    let rs = ctx.root_system();
    let mut out = vec![eps.clone()];
    for nu in g1_level(ctx, ctx.a()) {
        let diff = nu.sub(eps);
        if rs.is_root(&diff) && ctx.zi_level(&diff) == 0 && ctx.zw_level(&diff) == 1 {
            out.push(nu);
        }
    }
    Ok(out)
}

/// One irreducible component `X_{w_ε}` of the singular locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingComponent {
    pub epsilon: Root,
    /// `Δ(w, ε)`, with `ε` first.
    pub excised: Vec<Root>,
    pub ideal: InversionIdeal,
    pub label: ClassLabel,
    pub codim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingReport {
    pub label: ClassLabel,
    /// Sorted by codimension, then by `ε`.
    pub components: Vec<SingComponent>,
    pub predicted_count: Option<usize>,
    pub min_codim: Option<usize>,
}

/// The singular locus of the class with inversion set `ideal`. The two
/// endpoint classes are smooth.
pub fn sing_components(space: &Space, ideal: InversionIdeal) -> Result<SingReport> {
    let label = aj_of(space, ideal)?;
    let Some(aj) = label.aj().cloned() else {
        return Ok(SingReport { label, components: Vec::new(), predicted_count: None, min_codim: None });
    };
    let ctx = aj.context(space)?;
    let mut components = Vec::new();
    for eps in pi_set(&ctx) {
        let excised = delta_w_eps(&ctx, &eps)?;
        let cut = space.set_of(&excised)?;
        let rest = ideal.set().difference(cut);
        if !cut.is_subset(ideal.set()) || !space.is_order_ideal(rest) {
            return Err(Error::Internal(format!(
                "{} {}: removing Δ(w,ε) for ε = {eps} does not leave an inversion set",
                space.label(),
                aj
            )));
        }
        let sub = InversionIdeal::new(space, rest)?;
        components.push(SingComponent {
            codim: excised.len(),
            label: aj_of(space, sub)?,
            epsilon: eps,
            excised,
            ideal: sub,
        });
    }
    components.sort_by(|x, y| x.codim.cmp(&y.codim).then_with(|| x.epsilon.cmp(&y.epsilon)));
    let min_codim = components.iter().map(|c| c.codim).min();
    Ok(SingReport { predicted_count: predicted_component_count(space, &aj), label, components, min_codim })
}

/// The closed-form component count for Grassmannians, Lagrangian
/// Grassmannians and spinor varieties; `None` elsewhere.
pub fn predicted_component_count(space: &Space, aj: &AJ) -> Option<usize> {
    let (n, a) = (space.rank(), aj.a as usize);
    match space.kind() {
        Kind::A => Some(a),
        Kind::C if space.node() == n => Some(a.div_ceil(2)),
        Kind::D if space.node() == n => {
            if a <= 1 {
                return Some(a);
            }
            let delta = spinor_delta(n, aj);
            let r = spinor_r(n, aj);
            let chain = MarkChain::isotropic(n, aj.marks());
            match chain.j(r - 1).zip(chain.j(r)) {
                Some((hi, lo)) if hi - lo == 1 => Some((a + delta) / 2),
                _ => Some(r),
            }
        }
        _ => None,
    }
}

/// Minimal codimension of the components against the type's lower bound and
/// equality criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimAnalysis {
    pub min_codim: usize,
    pub bound: usize,
    /// The stated criterion for `min_codim == bound`, where one exists.
    pub equality_predicate: Option<bool>,
    /// Whether the criterion comes with a proof. The spinor criterion does
    /// not, and disagreements with it are reported rather than treated as
    /// failures.
    pub predicate_proved: bool,
}

impl CodimAnalysis {
    pub fn bound_holds(&self) -> bool {
        self.min_codim >= self.bound
    }

    /// The criterion, if any, agrees with the computed minimum.
    pub fn predicate_agrees(&self) -> bool {
        self.equality_predicate.is_none_or(|p| p == (self.min_codim == self.bound))
    }

    pub fn consistent(&self) -> bool {
        self.bound_holds() && self.predicate_agrees()
    }
}

fn grassmann_equality(chain: &MarkChain, a: usize) -> bool {
    (1..=chain.p())
        .any(|l| (1..=chain.q()).any(|m| l + m == a + 1 && chain.j_gap(l) == Some(1) && chain.k_gap(m) == Some(1)))
}

fn lagrangian_equality(chain: &MarkChain, a: usize) -> bool {
    a % 2 == 1 && chain.j_gap(a.div_ceil(2)) == Some(1)
}

fn spinor_equality(n: usize, chain: &MarkChain, aj: &AJ) -> bool {
    let a = aj.a as usize;
    let delta = spinor_delta(n, aj);
    let r = spinor_r(n, aj);
    if chain.j(1) == Some(n - 1) && a == 1 {
        return n >= 3 && chain.j(2) == Some(n - 3);
    }
    if chain.j(1) == Some(n - 1) && a == 2 {
        return n >= 4 && chain.j(2) == Some(n - 2) && chain.j(3) == Some(n - 4);
    }
    let total = a + 1 + delta;
    (delta + 1..total).any(|l| {
        let m = total - l;
        l < m && chain.j_gap(l) == Some(1 + usize::from(l == r)) && chain.j_gap(m) == Some(1)
    })
}

/// `None` when there are no components or no bound is known for the space.
pub fn min_codim_analysis(space: &Space, report: &SingReport) -> Option<CodimAnalysis> {
    let min_codim = report.min_codim?;
    let aj = report.label.aj()?;
    let (n, a) = (space.rank(), aj.a as usize);
    let (bound, equality_predicate) = match space.kind() {
        Kind::A => (3, Some(grassmann_equality(&MarkChain::grassmann(n, space.node(), aj.marks()), a))),
        Kind::C if space.node() == n => (2, Some(lagrangian_equality(&MarkChain::isotropic(n, aj.marks()), a))),
        Kind::D if space.node() == n => (3, Some(spinor_equality(n, &MarkChain::isotropic(n, aj.marks()), aj))),
        Kind::E6 | Kind::E7 => (3, None),
        _ => return None,
    };
    let predicate_proved = !matches!(space.kind(), Kind::D);
    Some(CodimAnalysis { min_codim, bound, equality_predicate, predicate_proved })
}

/// Root content of the stabilizer `g_w = n_w ⊕ g_{0,≥0} ⊕ g_{1,≥a}`, where
/// `n_w` has roots `-Δ(w)`.
pub fn stabilizer_root_set(space: &Space, ctx: &GradingContext, ideal: RootSet) -> BTreeSet<Root> {
    let mut out: BTreeSet<Root> = space.roots_of(ideal).iter().map(Root::neg).collect();
    for r in ctx.root_system().roots() {
        let (k, l) = (ctx.zi_level(&r), ctx.zw_level(&r));
        if (k == 0 && l >= 0) || (k == 1 && l >= ctx.a()) {
            out.insert(r);
        }
    }
    out
}

/// Roots of `g̃_{≥0}`, i.e. with `Z̃_w`-level at least zero.
pub fn tilde_nonnegative_roots(ctx: &GradingContext) -> BTreeSet<Root> {
    ctx.root_system().roots().filter(|r| ctx.tilde_level(r) >= 0).collect()
}
