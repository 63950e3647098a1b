use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use num_traits::{Signed, Zero};

use crate::linalg::{self, dot, pair, rank, reduce_mod, rref, to_q};
use crate::rational::Q;
use crate::{Error, Result};

/// Largest ambient dimension accepted by the face enumeration.
pub const FACE_DIM_CAP: usize = 12;

/// Sign pattern of a functional on a cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignOn {
    Zero,
    NonPositive,
    NonNegative,
    Mixed,
}

/// A rational polyhedral cone `{u : ⟨u,φ⟩ ≤ 0 (φ ∈ ineqs), ⟨u,ψ⟩ = 0 (ψ ∈ eqs)}`.
///
/// Generators are computed at construction by double description. Equality
/// and hashing compare the point sets, not the descriptions.
#[derive(Clone, Debug)]
pub struct Cone {
    n: usize,
    ineqs: Vec<Vec<i64>>,
    eqs: Vec<Vec<i64>>,
    rays: Vec<Vec<Q>>,
    lines: Vec<Vec<Q>>,
    line_pivots: Vec<usize>,
    dim: usize,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.lines == other.lines && self.rays == other.rays
    }
}

impl Eq for Cone {}

impl Hash for Cone {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.lines.hash(state);
        self.rays.hash(state);
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cone {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.dim, &self.lines, &self.rays).cmp(&(other.n, other.dim, &other.lines, &other.rays))
    }
}

fn dedup_functionals(fs: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut seen = HashSet::new();
    fs.iter()
        .filter(|f| f.iter().any(|&c| c != 0))
        .filter(|f| seen.insert((*f).clone()))
        .cloned()
        .collect()
}

fn sub_multiple(v: &mut [Q], w: &[Q], c: &Q) {
    for (x, y) in v.iter_mut().zip(w) {
        *x -= c * y;
    }
}

/// Extreme rays and a lineality basis of `{A u ≤ 0, B u = 0}`.
fn double_description(n: usize, ineqs: &[Vec<i64>], eqs: &[Vec<i64>]) -> (Vec<Vec<Q>>, Vec<Vec<Q>>) {
    let mut lines: Vec<Vec<Q>> = linalg::kernel(&[], n);
    let mut rays: Vec<Vec<Q>> = Vec::new();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let constraints = eqs.iter().map(|f| (f, true)).chain(ineqs.iter().map(|f| (f, false)));
    for (f, is_eq) in constraints {
        let a = to_q(f);
        if let Some(k) = lines.iter().position(|l| !dot(&a, l).is_zero()) {
            let lk = lines.remove(k);
            let ak = dot(&a, &lk);
            for v in lines.iter_mut().chain(rays.iter_mut()) {
                let c = dot(&a, v) / &ak;
                if !c.is_zero() {
                    sub_multiple(v, &lk, &c);
                }
            }
            if !is_eq {
                rays.push(if ak.is_positive() { linalg::neg(&lk) } else { lk });
            }
        } else {
            let vals: Vec<Q> = rays.iter().map(|r| dot(&a, r)).collect();
            let target = n as i64 - lines.len() as i64 - 2;
            let mut next = Vec::new();
            for (r, v) in rays.iter().zip(&vals) {
                if v.is_zero() || (!is_eq && v.is_negative()) {
                    next.push(r.clone());
                }
            }
            for (p, vp) in rays.iter().zip(&vals).filter(|(_, v)| v.is_positive()) {
                for (m, vm) in rays.iter().zip(&vals).filter(|(_, v)| v.is_negative()) {
                    let tight: Vec<Vec<Q>> = rows
                        .iter()
                        .filter(|row| dot(row, p).is_zero() && dot(row, m).is_zero())
                        .cloned()
                        .collect();
                    if rank(&tight) as i64 == target {
                        let combo: Vec<Q> = m.iter().zip(p).map(|(x, y)| vp * x - vm * y).collect();
                        next.push(linalg::primitive(&combo));
                    }
                }
            }
            rays = next;
        }
        for r in rays.iter_mut() {
            *r = linalg::primitive(r);
        }
        rows.push(a);
    }
    (rays, lines)
}

impl Cone {
    /// Builds a cone in ℚ^n; every functional must have length `n`.
    pub fn new(n: usize, ineqs: Vec<Vec<i64>>, eqs: Vec<Vec<i64>>) -> Self {
        assert!(ineqs.iter().chain(&eqs).all(|f| f.len() == n), "functional length must equal {n}");
        let ineqs = dedup_functionals(&ineqs);
        let eqs = dedup_functionals(&eqs);
        let (rays, lines) = double_description(n, &ineqs, &eqs);
        Self::from_generators(n, ineqs, eqs, rays, lines)
    }

    fn from_generators(
        n: usize,
        ineqs: Vec<Vec<i64>>,
        eqs: Vec<Vec<i64>>,
        rays: Vec<Vec<Q>>,
        lines: Vec<Vec<Q>>,
    ) -> Self {
        let (lines, line_pivots) = rref(&lines);
        let mut canon: BTreeSet<Vec<Q>> = BTreeSet::new();
        for r in rays {
            let red = reduce_mod(&r, &lines, &line_pivots);
            if !linalg::is_zero(&red) {
                canon.insert(linalg::primitive(&red));
            }
        }
        let rays: Vec<Vec<Q>> = canon.into_iter().collect();
        let dim = lines.len() + rank(&rays);
        Cone { n, ineqs, eqs, rays, lines, line_pivots, dim }
    }

    pub fn whole(n: usize) -> Self {
        Self::new(n, vec![], vec![])
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn inequalities(&self) -> &[Vec<i64>] {
        &self.ineqs
    }

    pub fn equalities(&self) -> &[Vec<i64>] {
        &self.eqs
    }

    /// Extreme rays modulo the lineality space, as primitive integer vectors.
    pub fn rays(&self) -> &[Vec<Q>] {
        &self.rays
    }

    /// Basis (reduced row echelon form) of the largest linear subspace in the cone.
    pub fn lineality(&self) -> &[Vec<Q>] {
        &self.lines
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.n
    }

    pub fn contains_point(&self, u: &[Q]) -> bool {
        self.ineqs.iter().all(|f| !pair(f, u).is_positive()) && self.eqs.iter().all(|f| pair(f, u).is_zero())
    }

    pub fn contains(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains_point(r))
            && other.lines.iter().all(|l| self.ineqs.iter().chain(&self.eqs).all(|f| pair(f, l).is_zero()))
    }

    /// Sum of the extreme rays; lies in the relative interior.
    pub fn relative_interior_point(&self) -> Vec<Q> {
        self.rays.iter().fold(vec![Q::zero(); self.n], |acc, r| linalg::add(&acc, r))
    }

    /// Reduced row echelon basis of the linear span, with pivots.
    pub fn span_basis(&self) -> (Vec<Vec<Q>>, Vec<usize>) {
        let gens: Vec<Vec<Q>> = self.lines.iter().chain(&self.rays).cloned().collect();
        rref(&gens)
    }

    /// Canonical representative of `u` modulo the span of the cone.
    pub fn reduce_mod_span(&self, u: &[Q]) -> Vec<Q> {
        let (b, p) = self.span_basis();
        reduce_mod(u, &b, &p)
    }

    pub fn span_contains(&self, u: &[Q]) -> bool {
        linalg::is_zero(&self.reduce_mod_span(u))
    }

    pub fn sign_of(&self, phi: &[i64]) -> SignOn {
        if self.lines.iter().any(|l| !pair(phi, l).is_zero()) {
            return SignOn::Mixed;
        }
        let pos = self.rays.iter().any(|r| pair(phi, r).is_positive());
        let neg = self.rays.iter().any(|r| pair(phi, r).is_negative());
        match (pos, neg) {
            (false, false) => SignOn::Zero,
            (false, true) => SignOn::NonPositive,
            (true, false) => SignOn::NonNegative,
            (true, true) => SignOn::Mixed,
        }
    }

    pub fn vanishes_on_span(&self, phi: &[i64]) -> bool {
        self.sign_of(phi) == SignOn::Zero
    }

    /// Integer basis of the functionals vanishing on the span.
    pub fn annihilator(&self) -> Vec<Vec<i64>> {
        let gens: Vec<Vec<Q>> = self.lines.iter().chain(&self.rays).cloned().collect();
        linalg::kernel(&gens, self.n).iter().map(|v| linalg::to_functional(v)).collect()
    }

    pub fn intersection(&self, other: &Cone) -> Cone {
        let ineqs = self.ineqs.iter().chain(&other.ineqs).cloned().collect();
        let eqs = self.eqs.iter().chain(&other.eqs).cloned().collect();
        Cone::new(self.n, ineqs, eqs)
    }

    fn tight_set(&self, rays: &[usize]) -> BTreeSet<usize> {
        (0..self.ineqs.len())
            .filter(|&i| rays.iter().all(|&r| pair(&self.ineqs[i], &self.rays[r]).is_zero()))
            .collect()
    }

    fn face_from_rays(&self, rays: &[usize]) -> Cone {
        let tight = self.tight_set(rays);
        let ineqs = (0..self.ineqs.len()).filter(|i| !tight.contains(i)).map(|i| self.ineqs[i].clone()).collect();
        let mut eqs = self.eqs.clone();
        eqs.extend(tight.iter().map(|&i| self.ineqs[i].clone()));
        let ray_vecs: Vec<Vec<Q>> = rays.iter().map(|&r| self.rays[r].clone()).collect();
        let dim = self.lines.len() + rank(&ray_vecs);
        Cone {
            n: self.n,
            ineqs,
            eqs,
            rays: ray_vecs,
            lines: self.lines.clone(),
            line_pivots: self.line_pivots.clone(),
            dim,
        }
    }

    /// All faces, from the cone itself down to its lineality space.
    pub fn faces(&self) -> Result<Vec<Cone>> {
        if self.n > FACE_DIM_CAP {
            return Err(Error::DimensionCap { dim: self.n, cap: FACE_DIM_CAP });
        }
        let all: Vec<usize> = (0..self.rays.len()).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([all.clone()]);
        let mut queue = VecDeque::from([all]);
        let mut out = Vec::new();
        while let Some(rs) = queue.pop_front() {
            let tight = self.tight_set(&rs);
            for (i, f) in self.ineqs.iter().enumerate() {
                if tight.contains(&i) {
                    continue;
                }
                let sub: Vec<usize> = rs.iter().copied().filter(|&r| pair(f, &self.rays[r]).is_zero()).collect();
                if seen.insert(sub.clone()) {
                    queue.push_back(sub);
                }
            }
            out.push(self.face_from_rays(&rs));
        }
        out.sort();
        Ok(out)
    }

    pub fn facets(&self) -> Result<Vec<Cone>> {
        Ok(self.faces()?.into_iter().filter(|f| f.dim + 1 == self.dim).collect())
    }

    /// Smallest face containing the point `u` of the cone.
    pub fn minimal_face_containing(&self, u: &[Q]) -> Cone {
        let tight: Vec<&Vec<i64>> = self.ineqs.iter().filter(|f| pair(f, u).is_zero()).collect();
        let rays: Vec<usize> =
            (0..self.rays.len()).filter(|&r| tight.iter().all(|f| pair(f, &self.rays[r]).is_zero())).collect();
        self.face_from_rays(&rays)
    }

    pub fn is_face_of(&self, c: &Cone) -> bool {
        c.contains(self) && c.minimal_face_containing(&self.relative_interior_point()) == *self
    }
}
