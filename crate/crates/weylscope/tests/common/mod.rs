#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use weylscope::apartment::{ApartmentContext, Exponents, TropicalPolynomial};
use weylscope::linalg::pair;
use weylscope::rational::{q, qr};
use weylscope::root_data::{all_parabolics, ParabolicSet, RootDatum, TypeLabel, WeylGroup};
use weylscope::{ExtendedValue, Q};

pub const CAP: usize = 2000;

pub fn datum(name: &str) -> RootDatum {
    RootDatum::named(name).unwrap()
}

pub fn ty(t: &[usize]) -> TypeLabel {
    TypeLabel::from_indices(t.iter().copied())
}

pub fn ctx(name: &str, t: &TypeLabel) -> ApartmentContext {
    ApartmentContext::new(datum(name), t.clone(), CAP).unwrap()
}

pub fn parabolics(d: &RootDatum) -> Vec<ParabolicSet> {
    let w = WeylGroup::enumerate(d, CAP).unwrap();
    all_parabolics(d, &w).into_iter().map(|e| e.set).collect()
}

pub fn qv(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// χ_i − χ_j for A_d in simple-root coordinates, with α_k = χ_k − χ_{k+1} (0-based).
pub fn chi(d: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0i64; d];
    for k in i.min(j)..i.max(j) {
        v[k] = if i < j { 1 } else { -1 };
    }
    v
}

pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Q {
    qr(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<Q> {
    (0..n).map(|_| random_rational(rng, bound)).collect()
}

pub fn random_integer_vector<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<Q> {
    (0..n).map(|_| q(rng.gen_range(-bound..=bound))).collect()
}

/// A random tropical polynomial in the given generators, sometimes with −∞ coefficients.
pub fn random_poly<R: Rng>(rng: &mut R, gens: &[usize]) -> TropicalPolynomial {
    let terms = rng.gen_range(1..=4);
    let monomials = (0..terms)
        .map(|_| {
            let mut e = Exponents::new();
            for &g in gens {
                if rng.gen_bool(0.5) {
                    e.insert(g, rng.gen_range(1..=3));
                }
            }
            let c = if rng.gen_bool(0.1) { ExtendedValue::NegInf } else { ExtendedValue::Finite(random_rational(rng, 5)) };
            (e, c)
        })
        .collect();
    TropicalPolynomial::new(monomials).unwrap()
}

/// Independent max-plus evaluation from raw generator values.
pub fn eval_direct(f: &TropicalPolynomial, value: impl Fn(usize) -> ExtendedValue) -> ExtendedValue {
    let mut best = ExtendedValue::NegInf;
    for (e, c) in f.monomials() {
        let mut acc = c.clone();
        for (&a, &n) in e {
            acc = match (acc, value(a)) {
                (ExtendedValue::NegInf, _) | (_, ExtendedValue::NegInf) => ExtendedValue::NegInf,
                (ExtendedValue::PosInf, _) | (_, ExtendedValue::PosInf) => ExtendedValue::PosInf,
                (ExtendedValue::Finite(x), ExtendedValue::Finite(y)) => ExtendedValue::Finite(x + y * Q::from_integer(n.into())),
            };
        }
        best = best.max(acc);
    }
    best
}

/// lim_n f(u0 + n v) for monomials read as affine functions of n.
pub fn ray_limit_of_evaluations(d: &RootDatum, f: &TropicalPolynomial, u0: &[Q], v: &[Q]) -> ExtendedValue {
    let mut best = ExtendedValue::NegInf;
    for (e, c) in f.monomials() {
        let Some(c) = c.finite() else { continue };
        let mut slope = q(0);
        let mut intercept = c.clone();
        for (&a, &n) in e {
            let n = Q::from_integer(n.into());
            slope += pair(d.root(a), v) * &n;
            intercept += pair(d.root(a), u0) * &n;
        }
        let term = if slope > q(0) {
            ExtendedValue::PosInf
        } else if slope < q(0) {
            ExtendedValue::NegInf
        } else {
            ExtendedValue::Finite(intercept)
        };
        best = best.max(term);
    }
    best
}

/// Roots of GL_{d+1} preserving the span of the coordinate vectors indexed by K.
pub fn coordinate_stabilizer(d: usize, k: &BTreeSet<usize>) -> BTreeSet<Vec<i64>> {
    let n = d + 1;
    (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .filter(|(i, j)| !k.contains(j) || k.contains(i))
        .map(|(i, j)| chi(d, i, j))
        .collect()
}
