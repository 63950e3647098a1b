mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weylscope::apartment::{ApartmentContext, CompactApartmentPoint};
use weylscope::gl_models::{DiagSeminorm, PglModel};
use weylscope::linalg::{self, pair};
use weylscope::polyfan::{eval_at_boundary, translate, BoundaryPoint, Cone};
use weylscope::rational::q;
use weylscope::root_data::{is_closed, is_generating, is_osculatory, ParabolicSet, RootDatum, TypeLabel, WeylElement, WeylGroup};
use weylscope::type_geometry::{
    is_degenerate, is_relevant, minimal_relevant, prefan_of_type, rt_decomposition, span_equalities, type_cone,
    type_cone_max, weyl_cone,
};
use weylscope::{ExtendedValue, Q};

const DATA: [&str; 7] = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"];

const CASES: [(&str, &[usize]); 8] = [
    ("A2", &[]),
    ("A2", &[0]),
    ("B2", &[1]),
    ("G2", &[0]),
    ("A1xA1", &[1]),
    ("A3", &[0, 1]),
    ("A3", &[1]),
    ("B2", &[]),
];

fn contexts() -> &'static [ApartmentContext] {
    static CELL: OnceLock<Vec<ApartmentContext>> = OnceLock::new();
    CELL.get_or_init(|| CASES.iter().map(|(n, t)| ctx(n, &ty(t))).collect())
}

fn weyl_order(d: &RootDatum) -> usize {
    WeylGroup::enumerate(d, CAP).unwrap().len()
}

fn rational() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=4).prop_map(|(a, b)| weylscope::rational::qr(a, b))
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec(rational(), n)
}

fn point_in(c: &ApartmentContext, stratum: usize, u: &[Q]) -> CompactApartmentPoint {
    c.point(BoundaryPoint::new(c.prefan(), stratum % c.prefan().len(), &u[..c.datum().rank()]).unwrap())
}

#[test]
fn parabolics_are_closed_and_generating() {
    for name in DATA.iter().copied().chain(["A1xA1"]) {
        let d = datum(name);
        for p in parabolics(&d) {
            assert!(is_closed(&d, p.members()) && is_generating(&d, p.members()), "{name}");
        }
    }
}

#[test]
fn parabolic_counts_match_weyl_quotients() {
    for name in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "A1xA1", "A2xA1"] {
        let d = datum(name);
        let w = weyl_order(&d);
        let expected: usize = TypeLabel::all(d.rank())
            .iter()
            .map(|y| {
                let base: Vec<usize> = y.iter().collect();
                let wy = if base.is_empty() { 1 } else { weyl_order(&RootDatum::from_cartan(d.cartan_of(&base), None).unwrap()) };
                w / wy
            })
            .sum();
        assert_eq!(parabolics(&d).len(), expected, "{name}");
    }
}

#[test]
fn faces_of_type_cones_are_prefan_cones() {
    for name in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
        let d = datum(name);
        for t in TypeLabel::all(d.rank()) {
            let f = prefan_of_type(&d, &t, CAP).unwrap();
            for p in &f.charts {
                let c = type_cone_max(&d, p);
                let faces: BTreeSet<Cone> = c.faces().unwrap().into_iter().collect();
                let inside: BTreeSet<Cone> = f.prefan.cones().iter().filter(|k| c.contains(k)).cloned().collect();
                assert_eq!(faces, inside, "{name} t={t}");
            }
        }
    }
}

#[test]
fn strict_convexity_matches_degeneracy() {
    for name in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A2xA1"] {
        let d = datum(name);
        for t in TypeLabel::all(d.rank()) {
            let p = ParabolicSet::standard(&d, &t);
            let cone = type_cone_max(&d, &p);
            let rows: Vec<Vec<Q>> = p.unipotent_radical_roots(&d).iter().map(|&a| linalg::to_q(d.root(a))).collect();
            let spans = linalg::rank(&rows) == d.rank();
            assert_eq!(cone.is_strictly_convex(), !is_degenerate(&d, &t), "{name} t={t}");
            assert_eq!(spans, !is_degenerate(&d, &t), "{name} t={t}");
        }
    }
}

#[test]
fn rt_parts_are_closed_and_match_span_equalities() {
    for name in ["A2", "A3", "B2", "B3", "G2", "A1xA1"] {
        let d = datum(name);
        for t in TypeLabel::all(d.rank()) {
            for q in parabolics(&d).iter().filter(|q| is_relevant(&d, q, &t)) {
                let rt = rt_decomposition(&d, q, &t);
                assert!(is_closed(&d, &rt.vanishing) && is_closed(&d, &rt.nonvanishing));
                let union: BTreeSet<usize> = rt.vanishing.union(&rt.nonvanishing).copied().collect();
                assert_eq!(union, q.levi_roots(&d));
                let span: Vec<Vec<Q>> = span_equalities(&d, q, &t).iter().map(|f| linalg::to_q(f)).collect();
                let annihilated: BTreeSet<usize> =
                    q.levi_roots(&d).into_iter().filter(|&a| linalg::in_span(&linalg::to_q(d.root(a)), &span)).collect();
                assert_eq!(annihilated, rt.vanishing, "{name} t={t} {}", q.describe(&d));
            }
        }
    }
}

#[test]
fn minimal_relevant_is_idempotent_and_keeps_the_cone() {
    for name in ["A2", "A3", "B2", "G2"] {
        let d = datum(name);
        for t in TypeLabel::all(d.rank()) {
            for q in parabolics(&d) {
                let m = minimal_relevant(&d, &q, &t);
                assert!(q.is_subset(&m));
                assert_eq!(minimal_relevant(&d, &m, &t), m);
                assert_eq!(type_cone(&d, &m, &t).cone, type_cone(&d, &q, &t).cone);
            }
        }
    }
}

#[test]
fn stratum_counts_match_relevant_parabolics() {
    for c in contexts() {
        let d = c.datum();
        let relevant: BTreeSet<ParabolicSet> =
            parabolics(d).into_iter().filter(|q| is_relevant(d, q, c.type_label())).collect();
        let labels: BTreeSet<ParabolicSet> = c.type_prefan().labels.iter().cloned().collect();
        assert_eq!(labels.len(), c.prefan().len());
        assert_eq!(labels, relevant);
    }
}

#[test]
fn projection_is_functorial_on_every_stratum() {
    for name in ["A2", "A3", "B2"] {
        let d = datum(name);
        let types = TypeLabel::all(d.rank());
        let cs: Vec<ApartmentContext> = types.iter().map(|t| ctx(name, t)).collect();
        for (i, a) in cs.iter().enumerate() {
            for (j, b) in cs.iter().enumerate().filter(|(j, _)| types[i].is_subset(&types[*j])) {
                for c in cs.iter().zip(&types).filter(|(_, t)| types[j].is_subset(t)).map(|(c, _)| c) {
                    for s in 0..a.prefan().len() {
                        let x = point_in(a, s, &qv(&[1, -2, 3][..d.rank()]));
                        let direct = a.project(&x, c).unwrap();
                        let via = b.project(&a.project(&x, b).unwrap(), c).unwrap();
                        assert_eq!(direct, via);
                    }
                }
            }
        }
    }
}

fn ray() -> impl Strategy<Value = (usize, Vec<Q>, Vec<i64>)> {
    (0..CASES.len(), vector(3), prop::collection::vec(-3i64..=3, 3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weyl_action_preserves_types(k in 0..DATA.len(), word in prop::collection::vec(0usize..3, 0..8), mask in 0u32..8) {
        let d = datum(DATA[k]);
        let word: Vec<usize> = word.into_iter().map(|i| i % d.rank()).collect();
        let y = TypeLabel::from_indices((0..d.rank()).filter(|i| mask & (1 << i) != 0));
        let w = WeylElement::from_word(&d, &word);
        let p = ParabolicSet::standard(&d, &y);
        let wp = p.act(&w);
        prop_assert_eq!(wp.type_label(&d), y.clone());
        let g = WeylGroup::enumerate(&d, CAP).unwrap();
        prop_assert_eq!(wp.standard_position(&d, &g).1, y);
        let op = wp.opposite(&d);
        prop_assert_eq!(op.opposite(&d), wp.clone());
        prop_assert_eq!(op.levi_roots(&d), wp.levi_roots(&d));
        let b = ParabolicSet::borel(&d);
        prop_assert_eq!(is_osculatory(&d, &b, &p), is_osculatory(&d, &b.act(&w), &wp));
    }

    #[test]
    fn faces_of_faces_are_faces(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..5)) {
        let c = Cone::new(3, rows, vec![]);
        let faces = c.faces().unwrap();
        for f in &faces {
            prop_assert!(f.is_face_of(&c));
            for g in f.faces().unwrap() {
                prop_assert!(faces.contains(&g));
            }
        }
    }

    #[test]
    fn translation_composes_and_keeps_the_stratum(k in 0..CASES.len(), s in 0usize..64, u in vector(3), w1 in vector(3), w2 in vector(3)) {
        let c = &contexts()[k];
        let n = c.datum().rank();
        let x = point_in(c, s, &u);
        let (w1, w2) = (&w1[..n], &w2[..n]);
        let once = translate(c.prefan(), &x.point, &linalg::add(w1, w2));
        let twice = translate(c.prefan(), &translate(c.prefan(), &x.point, w1), w2);
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(once.stratum(), x.point.stratum());
        for phi in c.datum().roots() {
            let before = eval_at_boundary(c.prefan(), &x.point, phi);
            let after = eval_at_boundary(c.prefan(), &once, phi);
            if c.prefan().cone(x.point.stratum()).vanishes_on_span(phi) {
                let shift = ExtendedValue::Finite(pair(phi, w1) + pair(phi, w2));
                prop_assert_eq!(after.unwrap(), &before.unwrap() + &shift);
            } else {
                prop_assert_eq!(after, before);
            }
        }
    }

    #[test]
    fn limits_agree_with_limits_of_values((k, u0, v) in ray()) {
        let c = &contexts()[k];
        let n = c.datum().rank();
        let (u0, v): (&[Q], Vec<Q>) = (&u0[..n], qv(&v[..n]));
        let x = c.limit(u0, &v).unwrap();
        let strata: Vec<usize> = (0..c.prefan().len()).filter(|&i| c.prefan().cone(i).contains_point(&v) && c.prefan().cone(i).dim() == c.prefan().cone(x.point.stratum()).dim()).collect();
        prop_assert_eq!(strata, vec![x.point.stratum()]);
        for phi in c.datum().roots() {
            if let Ok(value) = eval_at_boundary(c.prefan(), &x.point, phi) {
                prop_assert_eq!(value, weylscope::polyfan::limit_of_values(u0, &v, phi));
            }
        }
        let chart = c.first_chart(&x).unwrap();
        let gens = c.generators(chart);
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i..] {
                let sum: Vec<i64> = c.datum().root(a).iter().zip(c.datum().root(b)).map(|(p, q)| p + q).collect();
                let va = c.generator_value(&x, a).unwrap();
                let vb = c.generator_value(&x, b).unwrap();
                let vs = eval_at_boundary(c.prefan(), &x.point, &sum).unwrap();
                prop_assert_eq!(vs == ExtendedValue::NegInf, va == ExtendedValue::NegInf || vb == ExtendedValue::NegInf);
            }
        }
    }

    #[test]
    fn seminorm_eval_is_multiplicative(k in 0..CASES.len(), s in 0usize..64, u in vector(3), seed in any::<u64>()) {
        let c = &contexts()[k];
        let x = point_in(c, s, &u);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for chart in c.accepting_charts(&x) {
            let f = random_poly(&mut rng, c.generators(chart));
            let g = random_poly(&mut rng, c.generators(chart));
            let ef = c.seminorm_eval(&x, &f, chart).unwrap();
            let eg = c.seminorm_eval(&x, &g, chart).unwrap();
            prop_assert_eq!(c.seminorm_eval(&x, &f.mul(&g), chart).unwrap(), &ef + &eg);
            prop_assert_eq!(c.seminorm_eval(&x, &f.add(&g), chart).unwrap(), ef.max(eg));
        }
    }

    #[test]
    fn seminorm_eval_commutes_with_limits((k, u0, v) in ray(), seed in any::<u64>()) {
        let c = &contexts()[k];
        let n = c.datum().rank();
        let (u0, v): (&[Q], Vec<Q>) = (&u0[..n], qv(&v[..n]));
        let x = c.limit(u0, &v).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for chart in c.accepting_charts(&x) {
            let f = random_poly(&mut rng, c.generators(chart));
            prop_assert_eq!(c.seminorm_eval(&x, &f, chart).unwrap(), ray_limit_of_evaluations(c.datum(), &f, u0, &v));
        }
    }

    #[test]
    fn interior_points_are_separated_by_generators(k in 0..CASES.len(), u in vector(3), w in vector(3)) {
        let c = &contexts()[k];
        let n = c.datum().rank();
        prop_assume!(!is_degenerate(c.datum(), c.type_label()) && u[..n] != w[..n]);
        let x = c.interior(&u[..n]).unwrap();
        let y = c.interior(&w[..n]).unwrap();
        for chart in 0..c.charts().len() {
            let vx: Vec<_> = c.generators(chart).iter().map(|&a| c.generator_value(&x, a).unwrap()).collect();
            let vy: Vec<_> = c.generators(chart).iter().map(|&a| c.generator_value(&y, a).unwrap()).collect();
            prop_assert_ne!(vx, vy);
        }
    }

    #[test]
    fn stabilizer_levels_shift_under_translation(k in 0..CASES.len(), s in 0usize..64, u in vector(3), w in vector(3)) {
        let c = &contexts()[k];
        let n = c.datum().rank();
        let x = point_in(c, s, &u);
        let y = c.translate(&x, &w[..n]);
        let before = c.stabilizer_profile(&x);
        let after = c.stabilizer_profile(&y);
        prop_assert_eq!(&before.stratum, &after.stratum);
        for (a, r) in &before.filtered {
            prop_assert_eq!(after.filtered[a].clone(), r - pair(c.datum().root(*a), &w[..n]));
        }
        let everything: BTreeSet<usize> = before
            .full_unipotent
            .iter()
            .chain(&before.full_levi)
            .chain(before.filtered.keys())
            .copied()
            .collect();
        prop_assert_eq!(everything.len(), before.full_unipotent.len() + before.full_levi.len() + before.filtered.len());
        prop_assert_eq!(everything, before.stratum.members().clone());
    }

    #[test]
    fn pgl_dictionary_round_trips(n in 1usize..=4, raw in prop::collection::vec(prop_oneof![Just(None), rational().prop_map(Some)], 5)) {
        static MODELS: OnceLock<Vec<PglModel>> = OnceLock::new();
        let models = MODELS.get_or_init(|| (1..=4).map(|n| PglModel::new(n, CAP).unwrap()).collect());
        let m = &models[n - 1];
        let values: Vec<ExtendedValue> = raw[..=n].iter().map(|v| v.clone().map_or(ExtendedValue::NegInf, ExtendedValue::Finite)).collect();
        prop_assume!(values.iter().any(ExtendedValue::is_finite));
        let s = DiagSeminorm::new(values).unwrap();
        let x = m.to_apartment_point(&s).unwrap();
        prop_assert_eq!(m.from_apartment_point(&x).unwrap(), s.clone());
        prop_assert_eq!(&x.stratum, &m.stratum_label(&s).unwrap());
        let roots: BTreeSet<Vec<i64>> = x.stratum.members().iter().map(|&a| m.datum().root(a).to_vec()).collect();
        prop_assert_eq!(roots, coordinate_stabilizer(n, &s.kernel()));
        prop_assert_eq!(m.context().stratum_apartment(&x.stratum).unwrap().rank(), m.quotient_rank(&s));
        prop_assert_eq!(s.is_norm(), x == m.context().interior(x.point.residual()).unwrap());
        let top = s.values().iter().filter_map(ExtendedValue::finite).max().unwrap();
        prop_assert_eq!(top, &q(0));
    }

    #[test]
    fn weyl_cones_of_conjugates_are_conjugate(k in 0..DATA.len(), word in prop::collection::vec(0usize..3, 0..6), mask in 0u32..8, u in vector(3)) {
        let d = datum(DATA[k]);
        let n = d.rank();
        let word: Vec<usize> = word.into_iter().map(|i| i % n).collect();
        let w = WeylElement::from_word(&d, &word);
        let p = ParabolicSet::standard(&d, &TypeLabel::from_indices((0..n).filter(|i| mask & (1 << i) != 0)));
        let cone = weyl_cone(&d, &p);
        let moved = weyl_cone(&d, &p.act(&w));
        // (w u)(α) = u(w⁻¹ α)
        let u = &u[..n];
        let wu: Vec<Q> = (0..n)
            .map(|j| {
                let beta = w.inverse(&d).act_root(j);
                pair(d.root(beta), u)
            })
            .collect();
        prop_assert_eq!(cone.contains_point(u), moved.contains_point(&wu));
    }
}
