//! Weyl cones, type cones C_t(Q), the prefans F_t and t-relevant parabolics.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::linalg;
use crate::polyfan::{Cone, Prefan};
use crate::rational::Q;
use crate::root_data::{parabolic_orbit, ParabolicSet, RootDatum, RootSet, TypeLabel};
use crate::Result;

fn root_functional(d: &RootDatum, a: usize) -> Vec<i64> {
    d.root(a).to_vec()
}

/// Ψ_P = Φ(rad^u(P^op)) = −Φ(rad^u P).
pub fn chart_generators(d: &RootDatum, p: &ParabolicSet) -> Vec<usize> {
    let mut g: Vec<usize> = p.unipotent_radical_roots(d).iter().map(|&a| d.neg(a)).collect();
    g.sort_unstable();
    g
}

/// 𝔠(P): equalities on the Levi roots, inequalities on Ψ_P.
pub fn weyl_cone(d: &RootDatum, p: &ParabolicSet) -> Cone {
    let eqs = p.levi_roots(d).iter().filter(|&&a| d.is_positive(a)).map(|&a| root_functional(d, a)).collect();
    let ineqs = chart_generators(d, p).iter().map(|&a| root_functional(d, a)).collect();
    Cone::new(d.rank(), ineqs, eqs)
}

/// C_t(P) for P of type t: inequalities on Ψ_P only.
pub fn type_cone_max(d: &RootDatum, p: &ParabolicSet) -> Cone {
    let ineqs = chart_generators(d, p).iter().map(|&a| root_functional(d, a)).collect();
    Cone::new(d.rank(), ineqs, vec![])
}

/// The cone C_t(Q) together with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeCone {
    pub cone: Cone,
    pub source: ParabolicSet,
    pub t: TypeLabel,
}

/// A type-t parabolic osculatory with Q: it contains a minimal parabolic inside Q.
pub fn osculatory_of_type(d: &RootDatum, q: &ParabolicSet, t: &TypeLabel) -> ParabolicSet {
    let (w, _) = q.reduce_to_standard(d);
    ParabolicSet::standard(d, t).act_inverse(&w)
}

/// C_t(Q): `α ≤ 0` on Ψ_P and `α = 0` on Ψ_P ∩ Φ(L_Q) for a type-t P osculatory with Q.
pub fn type_cone(d: &RootDatum, q: &ParabolicSet, t: &TypeLabel) -> TypeCone {
    let p = osculatory_of_type(d, q, t);
    let levi = q.levi_roots(d);
    let psi = chart_generators(d, &p);
    let ineqs = psi.iter().map(|&a| root_functional(d, a)).collect();
    let eqs = psi.iter().filter(|a| levi.contains(a)).map(|&a| root_functional(d, a)).collect();
    TypeCone { cone: Cone::new(d.rank(), ineqs, eqs), source: q.clone(), t: t.clone() }
}

/// The parabolic whose Weyl cone has `x` in its relative interior.
pub fn parabolic_at(d: &RootDatum, x: &[Q]) -> ParabolicSet {
    let members: RootSet = d
        .all_roots()
        .filter(|&a| linalg::pair(d.root(a), x) >= Q::zero())
        .collect();
    ParabolicSet::from_members(members)
}

/// A prefan F_t with each cone labelled by the t-relevant parabolic indexing it.
#[derive(Clone, Debug)]
pub struct TypePrefan {
    pub t: TypeLabel,
    pub prefan: Prefan,
    pub labels: Vec<ParabolicSet>,
    /// The type-t parabolics, in orbit order.
    pub charts: Vec<ParabolicSet>,
}

impl TypePrefan {
    pub fn index_of_label(&self, q: &ParabolicSet) -> Option<usize> {
        self.labels.iter().position(|l| l == q)
    }
}

/// F_t: all faces of the cones C_t(P), P of type t.
pub fn prefan_of_type(d: &RootDatum, t: &TypeLabel, cap: usize) -> Result<TypePrefan> {
    let charts = parabolic_orbit(d, t, cap)?;
    let maximal = charts.iter().map(|p| type_cone_max(d, p)).collect();
    let prefan = Prefan::from_maximal(d.rank(), maximal)?;
    let labels = prefan
        .cones()
        .iter()
        .map(|c| minimal_relevant(d, &parabolic_at(d, &c.relative_interior_point()), t))
        .collect();
    Ok(TypePrefan { t: t.clone(), prefan, labels, charts })
}

/// The Weyl fan, i.e. F_∅.
pub fn weyl_fan(d: &RootDatum, cap: usize) -> Result<TypePrefan> {
    prefan_of_type(d, &TypeLabel::empty(), cap)
}

/// Whether `cone` is the union of the Weyl cones of the parabolics inside P.
///
/// Checks that every chamber inside P lies in the cone, that every other
/// chamber meets it in lower dimension, that the cone is full-dimensional,
/// and that relative-interior points of all its faces lie in chambers inside P.
pub fn union_matches(d: &RootDatum, cone: &Cone, p: &ParabolicSet, cap: usize) -> Result<bool> {
    let n = d.rank();
    if cone.dim() != n {
        return Ok(false);
    }
    let chambers = parabolic_orbit(d, &TypeLabel::empty(), cap)?;
    let (inside, outside): (Vec<_>, Vec<_>) = chambers.iter().partition(|b| b.is_subset(p));
    let inside: Vec<Cone> = inside.into_iter().map(|b| weyl_cone(d, b)).collect();
    if !inside.iter().all(|c| cone.contains(c)) {
        return Ok(false);
    }
    if outside.iter().any(|b| weyl_cone(d, b).intersection(cone).dim() == n) {
        return Ok(false);
    }
    let samples = cone.faces()?.iter().map(Cone::relative_interior_point).collect::<Vec<_>>();
    Ok(samples.iter().all(|x| inside.iter().any(|c| c.contains_point(x))))
}

/// Equality of C_t(P) with the union of the Weyl cones of the parabolics inside P.
pub fn union_weyl_oracle(d: &RootDatum, p: &ParabolicSet, cap: usize) -> Result<bool> {
    union_matches(d, &type_cone_max(d, p), p, cap)
}

/// Dynkin-diagram data for Q relative to a type t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelevanceReport {
    pub query: ParabolicSet,
    pub t: TypeLabel,
    pub is_relevant: bool,
    pub minimal_relevant: ParabolicSet,
    /// Ỹ_Q carried back from standard position, as root indices.
    pub active_components: RootSet,
    /// Functionals cutting out the span of C_t(Q).
    pub span_equalities: Vec<Vec<i64>>,
    pub dims_equal: bool,
}

pub fn relevance(d: &RootDatum, q: &ParabolicSet, t: &TypeLabel) -> RelevanceReport {
    let (w, yq) = q.reduce_to_standard(d);
    let comps = d.components_of(&yq);
    let active: BTreeSet<usize> = comps
        .iter()
        .filter(|c| c.iter().any(|&i| !t.contains(i)))
        .flatten()
        .copied()
        .collect();
    let orthogonal = |i: usize| !active.contains(&i) && active.iter().all(|&j| !d.dynkin_adjacent(i, j));
    let adjoin: Vec<usize> = t.iter().filter(|&i| !yq.contains(i) && orthogonal(i)).collect();
    let mut ymin = yq.clone();
    ymin.0.extend(adjoin.iter().copied());
    let minimal = ParabolicSet::standard(d, &ymin).act_inverse(&w);
    let active_roots: RootSet = w.act_inverse_set(&active);
    let span_equalities = active_roots.iter().map(|&a| root_functional(d, a)).collect();
    RelevanceReport {
        query: q.clone(),
        t: t.clone(),
        is_relevant: adjoin.is_empty(),
        minimal_relevant: minimal,
        dims_equal: active.len() == yq.len(),
        active_components: active_roots,
        span_equalities,
    }
}

pub fn is_relevant(d: &RootDatum, q: &ParabolicSet, t: &TypeLabel) -> bool {
    relevance(d, q, t).is_relevant
}

pub fn minimal_relevant(d: &RootDatum, q: &ParabolicSet, t: &TypeLabel) -> ParabolicSet {
    relevance(d, q, t).minimal_relevant
}

pub fn span_equalities(d: &RootDatum, q: &ParabolicSet, t: &TypeLabel) -> Vec<Vec<i64>> {
    relevance(d, q, t).span_equalities
}

pub fn dims_equal(d: &RootDatum, q: &ParabolicSet, t: &TypeLabel) -> bool {
    relevance(d, q, t).dims_equal
}

/// The largest parabolic Q′ ⊇ Q among `parabolics` with C_t(Q′) = C_t(Q).
pub fn brute_force_minimal_relevant(
    d: &RootDatum,
    q: &ParabolicSet,
    t: &TypeLabel,
    parabolics: &[ParabolicSet],
) -> ParabolicSet {
    let target = type_cone(d, q, t).cone;
    parabolics
        .iter()
        .filter(|p| q.is_subset(p) && type_cone(d, p, t).cone == target)
        .max_by_key(|p| p.len())
        .cloned()
        .unwrap_or_else(|| q.clone())
}

pub fn brute_force_is_relevant(d: &RootDatum, q: &ParabolicSet, t: &TypeLabel, parabolics: &[ParabolicSet]) -> bool {
    brute_force_minimal_relevant(d, q, t, parabolics) == *q
}

/// Levi roots of Q split by whether they vanish identically on C_t(Q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RtDecomposition {
    pub nonvanishing: RootSet,
    pub vanishing: RootSet,
}

pub fn rt_decomposition(d: &RootDatum, q: &ParabolicSet, t: &TypeLabel) -> RtDecomposition {
    let cone = type_cone(d, q, t).cone;
    let (vanishing, nonvanishing) = q
        .levi_roots(d)
        .into_iter()
        .partition(|&a| cone.vanishes_on_span(d.root(a)));
    RtDecomposition { nonvanishing, vanishing }
}

/// Irreducible components of the datum split by whether t is trivial on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeSupport {
    pub nontrivial: Vec<usize>,
    pub trivial: Vec<usize>,
}

pub fn type_support(d: &RootDatum, t: &TypeLabel) -> TypeSupport {
    let (trivial, nontrivial) = (0..d.components().len()).partition(|&c| d.components()[c].iter().all(|&i| t.contains(i)));
    TypeSupport { nontrivial, trivial }
}

pub fn is_degenerate(d: &RootDatum, t: &TypeLabel) -> bool {
    !type_support(d, t).trivial.is_empty()
}

/// Λ(S″): the vectors killed by every simple root of a component where t is nontrivial.
pub fn degenerate_lineality(d: &RootDatum, t: &TypeLabel) -> Vec<Vec<Q>> {
    let rows: Vec<Vec<Q>> = type_support(d, t)
        .nontrivial
        .iter()
        .flat_map(|&c| d.components()[c].iter().map(|&i| linalg::to_q(d.root(i))))
        .collect();
    let (basis, _) = linalg::rref(&linalg::kernel(&rows, d.rank()));
    basis
}
