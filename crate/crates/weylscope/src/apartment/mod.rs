//! The compactified apartment Ā_t as the F_t-compactification of V, with
//! seminorm evaluation in big-cell charts, strata, stabilizers and projections
//! between types.

mod tropical;

pub use tropical::{group_seminorm_eval, Exponents, GroupPolynomial, TropicalPolynomial};

use std::collections::BTreeMap;

use crate::linalg::{self, pair};
use crate::polyfan::{eval_at_boundary, sequence_limit, with_origin, BoundaryPoint, Cone, OriginChart, Prefan};
use crate::rational::{ExtendedValue, Q};
use crate::root_data::{ParabolicSet, RootDatum, RootSet, TypeLabel};
use crate::type_geometry::{chart_generators, prefan_of_type, rt_decomposition, type_cone, TypePrefan};
use crate::{Error, Result};

/// A root datum, a type t, the prefan F_t and the big-cell charts of the type-t parabolics.
#[derive(Clone, Debug)]
pub struct ApartmentContext {
    datum: RootDatum,
    t: TypeLabel,
    origin: OriginChart,
    fan: TypePrefan,
    generators: Vec<Vec<usize>>,
}

/// A point of Ā_t together with the t-relevant parabolic indexing its stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactApartmentPoint {
    pub point: BoundaryPoint,
    pub stratum: ParabolicSet,
}

/// Residual apartment of a stratum: V/⟨C_t(Q)⟩ with coordinates ⟨u, β_j⟩.
#[derive(Clone, Debug)]
pub struct StratumApartment {
    pub stratum: ParabolicSet,
    pub cone: Cone,
    /// Simple roots β_j of the vanishing Levi subsystem.
    pub base: Vec<usize>,
    /// `None` when the stratum is a point.
    pub residual: Option<RootDatum>,
}

impl StratumApartment {
    pub fn rank(&self) -> usize {
        self.base.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerProfile {
    pub stratum: ParabolicSet,
    pub full_unipotent: RootSet,
    pub full_levi: RootSet,
    /// α ↦ r_α = −⟨u_res, α⟩.
    pub filtered: BTreeMap<usize, Q>,
    pub normalizer_note: String,
}

impl ApartmentContext {
    pub fn new(datum: RootDatum, t: TypeLabel, cap: usize) -> Result<Self> {
        if let Some(i) = t.iter().find(|&i| i >= datum.rank()) {
            return Err(Error::Invalid(format!("type mentions simple root a{} beyond rank {}", i + 1, datum.rank())));
        }
        let fan = prefan_of_type(&datum, &t, cap)?;
        let generators = fan.charts.iter().map(|p| chart_generators(&datum, p)).collect();
        Ok(ApartmentContext { datum, t, origin: with_origin("o"), fan, generators })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn type_label(&self) -> &TypeLabel {
        &self.t
    }

    pub fn origin_chart(&self) -> &OriginChart {
        &self.origin
    }

    pub fn type_prefan(&self) -> &TypePrefan {
        &self.fan
    }

    pub fn prefan(&self) -> &Prefan {
        &self.fan.prefan
    }

    pub fn charts(&self) -> &[ParabolicSet] {
        &self.fan.charts
    }

    /// Ψ_P for chart `i`.
    pub fn generators(&self, chart: usize) -> &[usize] {
        &self.generators[chart]
    }

    pub fn point(&self, point: BoundaryPoint) -> CompactApartmentPoint {
        let stratum = self.fan.labels[point.stratum()].clone();
        CompactApartmentPoint { point, stratum }
    }

    pub fn interior(&self, u: &[Q]) -> Result<CompactApartmentPoint> {
        Ok(self.point(BoundaryPoint::interior(self.prefan(), u)?))
    }

    pub fn origin(&self) -> CompactApartmentPoint {
        self.interior(&vec![Q::from_integer(0.into()); self.datum.rank()]).expect("origin has the right length")
    }

    /// The stratum cone index of a t-relevant parabolic.
    pub fn stratum_index(&self, q: &ParabolicSet) -> Result<usize> {
        let cone = type_cone(&self.datum, q, &self.t).cone;
        let i = self
            .prefan()
            .index_of(&cone)
            .ok_or_else(|| Error::Invalid("stratum cone missing from the prefan".into()))?;
        if self.fan.labels[i] != *q {
            return Err(Error::Invalid(format!("{} is not {}-relevant", q.describe(&self.datum), self.t)));
        }
        Ok(i)
    }

    /// The point of the stratum of Q with the given residual representative.
    pub fn at_stratum(&self, q: &ParabolicSet, residual: &[Q]) -> Result<CompactApartmentPoint> {
        let i = self.stratum_index(q)?;
        Ok(self.point(BoundaryPoint::new(self.prefan(), i, residual)?))
    }

    /// Limit of `u0 + n v`.
    pub fn limit(&self, u0: &[Q], v: &[Q]) -> Result<CompactApartmentPoint> {
        if u0.len() != self.datum.rank() || v.len() != self.datum.rank() {
            return Err(Error::Invalid(format!("vectors must have length {}", self.datum.rank())));
        }
        Ok(self.point(sequence_limit(self.prefan(), u0, v)?))
    }

    pub fn generator_value(&self, x: &CompactApartmentPoint, alpha: usize) -> Result<ExtendedValue> {
        eval_at_boundary(self.prefan(), &x.point, self.datum.root(alpha))
    }

    /// Whether every generator of chart `i` is ≤ 0 or −∞ at x.
    pub fn chart_membership(&self, x: &CompactApartmentPoint, chart: usize) -> bool {
        self.generators[chart].iter().all(|&a| match self.generator_value(x, a) {
            Ok(v) => v <= ExtendedValue::zero(),
            Err(_) => false,
        })
    }

    pub fn accepting_charts(&self, x: &CompactApartmentPoint) -> Vec<usize> {
        (0..self.generators.len()).filter(|&i| self.chart_membership(x, i)).collect()
    }

    /// The first accepting chart in enumeration order.
    pub fn first_chart(&self, x: &CompactApartmentPoint) -> Result<usize> {
        (0..self.generators.len()).find(|&i| self.chart_membership(x, i)).ok_or(Error::NotCovered)
    }

    pub fn seminorm_eval(&self, x: &CompactApartmentPoint, f: &TropicalPolynomial, chart: usize) -> Result<ExtendedValue> {
        if chart >= self.generators.len() {
            return Err(Error::ChartMismatch(format!("no chart {chart}")));
        }
        if !self.chart_membership(x, chart) {
            return Err(Error::ChartMismatch(format!("point outside chart {chart}")));
        }
        let gens = &self.generators[chart];
        if let Some(a) = f.variables().find(|a| gens.binary_search(a).is_err()) {
            return Err(Error::ChartMismatch(format!("root {a} is not a generator of chart {chart}")));
        }
        f.evaluate(|a| self.generator_value(x, a))
    }

    /// Generators of chart `i` evaluating to −∞ at x.
    pub fn vanishing_generators(&self, x: &CompactApartmentPoint, chart: usize) -> RootSet {
        self.generators[chart]
            .iter()
            .copied()
            .filter(|&a| self.generator_value(x, a) == Ok(ExtendedValue::NegInf))
            .collect()
    }

    /// A generator vanishing at x, if any; x is a norm exactly when there is none.
    pub fn norm_witness(&self, x: &CompactApartmentPoint, chart: usize) -> Option<usize> {
        self.vanishing_generators(x, chart).into_iter().next()
    }

    pub fn is_norm(&self, x: &CompactApartmentPoint, chart: usize) -> bool {
        self.norm_witness(x, chart).is_none()
    }

    pub fn stratum_of<'a>(&self, x: &'a CompactApartmentPoint) -> &'a ParabolicSet {
        &x.stratum
    }

    pub fn stratum_apartment(&self, q: &ParabolicSet) -> Result<StratumApartment> {
        let i = self.stratum_index(q)?;
        let vanishing = rt_decomposition(&self.datum, q, &self.t).vanishing;
        let base = self.datum.base_of(&vanishing);
        let residual = if base.is_empty() {
            None
        } else {
            Some(RootDatum::from_cartan(self.datum.cartan_of(&base), None)?)
        };
        Ok(StratumApartment { stratum: q.clone(), cone: self.prefan().cone(i).clone(), base, residual })
    }

    /// The point of the stratum of Q with residual coordinates `y`.
    pub fn embed_stratum(&self, q: &ParabolicSet, y: &[Q]) -> Result<CompactApartmentPoint> {
        let sa = self.stratum_apartment(q)?;
        if y.len() != sa.rank() {
            return Err(Error::Invalid(format!("residual coordinates must have length {}", sa.rank())));
        }
        let rows: Vec<Vec<Q>> = sa.base.iter().map(|&b| linalg::to_q(self.datum.root(b))).collect();
        let u = linalg::solve(&rows, y, self.datum.rank())
            .ok_or_else(|| Error::Invalid("residual coordinates are inconsistent".into()))?;
        self.at_stratum(q, &u)
    }

    /// Stratum parabolic and residual coordinates of x.
    pub fn extract_stratum(&self, x: &CompactApartmentPoint) -> Result<(ParabolicSet, Vec<Q>)> {
        let sa = self.stratum_apartment(&x.stratum)?;
        let y = sa.base.iter().map(|&b| pair(self.datum.root(b), x.point.residual())).collect();
        Ok((x.stratum.clone(), y))
    }

    /// The fibration Ā_t → Ā_{t′} for t ⊆ t′.
    pub fn project(&self, x: &CompactApartmentPoint, target: &ApartmentContext) -> Result<CompactApartmentPoint> {
        if !self.t.is_subset(&target.t) {
            return Err(Error::TypeOrder(self.t.to_string(), target.t.to_string()));
        }
        if self.datum.cartan() != target.datum.cartan() {
            return Err(Error::Invalid("projection between different root data".into()));
        }
        let cone = type_cone(&self.datum, &x.stratum, &target.t).cone;
        let i = target
            .prefan()
            .index_of(&cone)
            .ok_or_else(|| Error::Invalid("image stratum missing from the target prefan".into()))?;
        Ok(target.point(BoundaryPoint::new(target.prefan(), i, x.point.residual())?))
    }

    pub fn stabilizer_profile(&self, x: &CompactApartmentPoint) -> StabilizerProfile {
        let q = &x.stratum;
        let rt = rt_decomposition(&self.datum, q, &self.t);
        let filtered = rt
            .vanishing
            .iter()
            .map(|&a| (a, -pair(self.datum.root(a), x.point.residual())))
            .collect();
        StabilizerProfile {
            stratum: q.clone(),
            full_unipotent: q.unipotent_radical_roots(&self.datum),
            full_levi: rt.nonvanishing,
            filtered,
            normalizer_note: "N(k)_x".to_string(),
        }
    }

    pub fn translate(&self, x: &CompactApartmentPoint, w: &[Q]) -> CompactApartmentPoint {
        self.point(crate::polyfan::translate(self.prefan(), &x.point, w))
    }
}

/// Image of u in V/⟨𝔠(Q)⟩, written as ⟨u, β_j⟩ over a base β of the Levi roots of Q.
pub fn levi_projection(d: &RootDatum, u: &[Q], q: &ParabolicSet) -> Vec<Q> {
    d.base_of(&q.levi_roots(d)).iter().map(|&b| pair(d.root(b), u)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::type_geometry::{is_relevant, type_cone_max};

    fn ctx(name: &str, t: &[usize]) -> ApartmentContext {
        ApartmentContext::new(RootDatum::named(name).unwrap(), TypeLabel::from_indices(t.iter().copied()), 1000).unwrap()
    }

    fn qv(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn charts_cover_prefan() {
        for (name, t) in [("A2", vec![0]), ("B2", vec![]), ("A3", vec![0, 1]), ("A1xA1", vec![1])] {
            let c = ctx(name, &t);
            for cone in c.prefan().cones() {
                assert!(c.charts().iter().any(|p| type_cone_max(c.datum(), p).contains(cone)));
            }
            for cone in c.prefan().cones() {
                let x = c.point(BoundaryPoint::new(c.prefan(), c.prefan().index_of(cone).unwrap(), &qv(&vec![0; c.datum().rank()])).unwrap());
                assert!(!c.accepting_charts(&x).is_empty());
            }
        }
    }

    #[test]
    fn chart_membership_examples() {
        let c = ctx("A2", &[0]);
        let o = c.origin();
        assert_eq!(c.accepting_charts(&o).len(), 3);
        let deep = c.interior(&qv(&[5, 7])).unwrap();
        let borel_chart = c.charts().iter().position(|p| ParabolicSet::borel(c.datum()).is_subset(p)).unwrap();
        assert!(c.chart_membership(&deep, borel_chart));
        let ray = c.prefan().cones().iter().position(|k| k.dim() == 1).unwrap();
        let x = c.point(BoundaryPoint::new(c.prefan(), ray, &qv(&[0, 0])).unwrap());
        assert_eq!(c.accepting_charts(&x).len(), 2);
    }

    #[test]
    fn seminorm_examples() {
        let c = ctx("A2", &[0]);
        let chart = 0;
        let gens = c.generators(chart).to_vec();
        let f = TropicalPolynomial::constant(q(-3))
            .add(&TropicalPolynomial::monomial(Exponents::from([(gens[0], 2)]), q(4)))
            .add(&TropicalPolynomial::monomial(Exponents::from([(gens[1], 1)]), q(1)));
        assert_eq!(c.seminorm_eval(&c.origin(), &f, chart).unwrap(), ExtendedValue::Finite(q(4)));
        let u = c.charts()[chart].clone();
        let x_u = type_cone_max(c.datum(), &u).relative_interior_point();
        let x = c.interior(&linalg::scale(&x_u, &q(1))).unwrap();
        let g = TropicalPolynomial::generator(gens[0]);
        assert_eq!(c.seminorm_eval(&x, &g, chart).unwrap(), ExtendedValue::Finite(pair(c.datum().root(gens[0]), &x_u)));
        let wrong = TropicalPolynomial::generator(c.datum().neg(gens[0]));
        assert!(matches!(c.seminorm_eval(&c.origin(), &wrong, chart), Err(Error::ChartMismatch(_))));
    }

    #[test]
    fn boundary_evaluation_matches_ray_limit() {
        let c = ctx("A2", &[0]);
        let u0 = qv(&[1, -2]);
        for cone in c.prefan().cones() {
            let v = cone.relative_interior_point();
            let x = c.limit(&u0, &v).unwrap();
            let chart = c.first_chart(&x).unwrap();
            for &a in c.generators(chart) {
                let f = TropicalPolynomial::constant(q(0)).add(&TropicalPolynomial::monomial(Exponents::from([(a, 1)]), q(1)));
                let got = c.seminorm_eval(&x, &f, chart).unwrap();
                let alpha = c.datum().root(a);
                let lim = crate::polyfan::limit_of_values(&u0, &v, alpha);
                let expected = std::cmp::max(ExtendedValue::zero(), &ExtendedValue::Finite(q(1)) + &lim);
                assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn norms_and_strata() {
        let c = ctx("A2", &[0]);
        let x = c.interior(&qv(&[2, 3])).unwrap();
        assert!(c.is_norm(&x, c.first_chart(&x).unwrap()));
        assert_eq!(c.stratum_of(&x), &ParabolicSet::whole(c.datum()));
        let p = ParabolicSet::standard(c.datum(), c.type_label());
        let v = type_cone_max(c.datum(), &p).relative_interior_point();
        let corner = c.limit(&qv(&[0, 0]), &v).unwrap();
        assert_eq!(c.stratum_of(&corner), &p);
        let chart = c.first_chart(&corner).unwrap();
        let w = c.norm_witness(&corner, chart).unwrap();
        assert_eq!(c.seminorm_eval(&corner, &TropicalPolynomial::generator(w), chart).unwrap(), ExtendedValue::NegInf);
        for k in 0..c.prefan().len() {
            let x = c.point(BoundaryPoint::new(c.prefan(), k, &qv(&[1, 1])).unwrap());
            let q = c.stratum_of(&x).clone();
            assert!(is_relevant(c.datum(), &q, c.type_label()));
            for chart in c.accepting_charts(&x) {
                let levi = q.levi_roots(c.datum());
                let expected: RootSet = c.generators(chart).iter().copied().filter(|a| !levi.contains(a)).collect();
                assert_eq!(c.vanishing_generators(&x, chart), expected);
            }
        }
    }

    #[test]
    fn ray_stratum_of_a2_delta() {
        let c = ctx("A2", &[0]);
        let x = c.limit(&qv(&[0, 0]), &qv(&[1, 0])).unwrap();
        let q = c.stratum_of(&x);
        assert_eq!(q, &ParabolicSet::standard(c.datum(), &TypeLabel::from_indices([1])));
    }

    #[test]
    fn stratum_apartments() {
        for dd in 1..=5usize {
            let c = ctx(&format!("A{dd}"), &(0..dd - 1).collect::<Vec<_>>());
            for r in 1..=dd {
                let q = ParabolicSet::standard(c.datum(), &TypeLabel::all_but(dd, r - 1));
                let sa = c.stratum_apartment(&q).unwrap();
                assert_eq!(sa.rank(), dd - r);
                if let Some(res) = &sa.residual {
                    assert_eq!(res.num_roots(), (dd - r) * (dd - r + 1));
                }
            }
            let g = c.stratum_apartment(&ParabolicSet::whole(c.datum())).unwrap();
            assert_eq!(g.rank(), dd);
        }
        let c = ctx("A2", &[0]);
        let p = ParabolicSet::standard(c.datum(), c.type_label());
        assert!(c.stratum_apartment(&p).unwrap().residual.is_none());
    }

    #[test]
    fn embed_and_extract() {
        let c = ctx("A3", &[0, 1]);
        let p = ParabolicSet::standard(c.datum(), &TypeLabel::from_indices([1, 2]));
        let y = vec![q(2), q(-1)];
        let x = c.embed_stratum(&p, &y).unwrap();
        assert_eq!(c.stratum_of(&x), &p);
        assert_eq!(c.extract_stratum(&x).unwrap(), (p.clone(), y));
        let base = c.embed_stratum(&p, &[q(0), q(0)]).unwrap();
        assert!(linalg::is_zero(base.point.residual()));
        for u0 in [qv(&[1, 2, 3]), qv(&[0, -1, 4]), qv(&[5, 0, 0])] {
            let v = type_cone(c.datum(), &p, c.type_label()).cone.relative_interior_point();
            let x = c.limit(&u0, &v).unwrap();
            let (qq, y) = c.extract_stratum(&x).unwrap();
            assert_eq!(c.embed_stratum(&qq, &y).unwrap(), x);
        }
    }

    #[test]
    fn projection_examples() {
        let a = ctx("A2", &[]);
        let b = ctx("A2", &[0]);
        let g = ctx("A2", &[0, 1]);
        let x = a.limit(&qv(&[1, 0]), &qv(&[1, 2])).unwrap();
        assert_eq!(a.project(&x, &a).unwrap(), x);
        let pt = a.project(&x, &g).unwrap();
        assert_eq!(g.prefan().len(), 1);
        assert_eq!(pt, g.origin());
        assert_eq!(b.project(&b.project(&x, &b).unwrap(), &g).unwrap(), a.project(&x, &g).unwrap());
        assert!(matches!(b.project(&b.origin(), &a), Err(Error::TypeOrder(..))));
    }

    #[test]
    fn stabilizer_examples() {
        let c = ctx("A2", &[0]);
        let o = c.stabilizer_profile(&c.origin());
        assert_eq!(o.stratum, ParabolicSet::whole(c.datum()));
        assert_eq!(o.filtered.len(), 6);
        assert!(o.filtered.values().all(|v| *v == q(0)));
        let u = qv(&[2, -5]);
        let p = c.stabilizer_profile(&c.interior(&u).unwrap());
        for (&a, r) in &p.filtered {
            assert_eq!(*r, -pair(c.datum().root(a), &u));
        }
        let w = qv(&[1, 1]);
        let shifted = c.stabilizer_profile(&c.translate(&c.interior(&u).unwrap(), &w));
        for (&a, r) in &shifted.filtered {
            assert_eq!(*r, &p.filtered[&a] - pair(c.datum().root(a), &w));
        }
    }

    #[test]
    fn levi_projection_examples() {
        let d = RootDatum::named("A2").unwrap();
        let u = qv(&[3, -1]);
        assert_eq!(levi_projection(&d, &u, &ParabolicSet::whole(&d)), u);
        assert!(levi_projection(&d, &u, &ParabolicSet::borel(&d)).is_empty());
        let p = ParabolicSet::standard(&d, &TypeLabel::from_indices([0]));
        assert_eq!(levi_projection(&d, &u, &p), vec![q(3)]);
        assert!(levi_projection(&d, &qv(&[0, 9]), &p).iter().all(|x| *x == q(0)));
    }
}
