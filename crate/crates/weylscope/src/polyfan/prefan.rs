use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::cone::Cone;
use crate::rational::Q;
use crate::{Error, Result};

/// A finite family of cones in ℚ^n; built from maximal cones it is closed under faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prefan {
    n: usize,
    cones: Vec<Cone>,
    is_fan: bool,
}

fn format_point(u: &[Q]) -> String {
    let parts: Vec<String> = u.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

impl Prefan {
    /// Keeps the cones as given, dropping duplicates.
    pub fn from_cones(n: usize, cones: Vec<Cone>) -> Self {
        let mut seen = HashSet::new();
        let cones: Vec<Cone> = cones.into_iter().filter(|c| seen.insert(c.clone())).collect();
        let is_fan = cones.iter().all(Cone::is_strictly_convex);
        Prefan { n, cones, is_fan }
    }

    /// All faces of the given cones, sorted by dimension.
    pub fn from_maximal(n: usize, maximal: Vec<Cone>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut cones = Vec::new();
        for m in &maximal {
            for f in m.faces()? {
                if seen.insert(f.clone()) {
                    cones.push(f);
                }
            }
        }
        cones.sort();
        Ok(Self::from_cones(n, cones))
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn cone(&self, i: usize) -> &Cone {
        &self.cones[i]
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn is_fan(&self) -> bool {
        self.is_fan
    }

    pub fn index_of(&self, c: &Cone) -> Option<usize> {
        self.cones.iter().position(|x| x == c)
    }

    /// Cones not strictly contained in another cone.
    pub fn maximal_indices(&self) -> Vec<usize> {
        (0..self.cones.len())
            .filter(|&i| {
                !self.cones.iter().enumerate().any(|(j, c)| j != i && c.dim() > self.cones[i].dim() && c.contains(&self.cones[i]))
            })
            .collect()
    }

    pub fn check_face_closed(&self) -> Result<bool> {
        for c in &self.cones {
            for f in c.faces()? {
                if self.index_of(&f).is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Verifies that every pairwise intersection is a common face.
    pub fn check_common_faces(&self) -> Result<()> {
        for (i, a) in self.cones.iter().enumerate() {
            for b in &self.cones[i + 1..] {
                common_face(a, b)?;
            }
        }
        Ok(())
    }

    /// Facet matching for maximal cones plus membership of grid sample points.
    pub fn covers(&self) -> bool {
        let maximal: Vec<&Cone> = self.maximal_indices().into_iter().map(|i| &self.cones[i]).collect();
        if maximal.iter().any(|c| c.dim() == self.n && c.rays().is_empty()) {
            return true;
        }
        if maximal.is_empty() || maximal.iter().any(|c| !c.is_full_dimensional()) {
            return false;
        }
        for (i, m) in maximal.iter().enumerate() {
            let Ok(facets) = m.facets() else { return false };
            for f in &facets {
                let partners = maximal
                    .iter()
                    .enumerate()
                    .filter(|(j, other)| *j != i && f.is_face_of(other))
                    .count();
                if partners != 1 {
                    return false;
                }
            }
        }
        let bound: i64 = if self.n <= 3 { 2 } else { 1 };
        let side = (2 * bound + 1) as usize;
        let total = side.pow(self.n as u32);
        (0..total).all(|mut k| {
            let mut u = Vec::with_capacity(self.n);
            for _ in 0..self.n {
                u.push(Q::from_integer(BigInt::from((k % side) as i64 - bound)));
                k /= side;
            }
            maximal.iter().any(|c| c.contains_point(&u))
        })
    }

    /// Index of the smallest cone containing `v` (the one with `v` in its relative interior).
    pub fn smallest_containing(&self, v: &[Q]) -> Option<usize> {
        (0..self.cones.len())
            .filter(|&i| self.cones[i].contains_point(v))
            .min_by_key(|&i| self.cones[i].dim())
    }

    /// Index of the minimal cone (the common lineality space).
    pub fn lineality_index(&self) -> usize {
        self.smallest_containing(&vec![Q::zero(); self.n]).expect("nonempty prefan contains the origin")
    }

    /// Cones containing cone `i`: the strata in the closure of its stratum.
    pub fn stratum_closure(&self, i: usize) -> Vec<usize> {
        (0..self.cones.len()).filter(|&j| self.cones[j].contains(&self.cones[i])).collect()
    }
}

/// `C1 ∩ C2` when it is a face of both cones.
pub fn common_face(c1: &Cone, c2: &Cone) -> Result<Cone> {
    let i = c1.intersection(c2);
    for (a, b) in [(c1, c2), (c2, c1)] {
        if !i.is_face_of(a) {
            let f = a.minimal_face_containing(&i.relative_interior_point());
            let witness = f
                .rays()
                .iter()
                .find(|r| !b.contains_point(r))
                .cloned()
                .unwrap_or_else(|| i.relative_interior_point());
            return Err(Error::FanAxiomViolation { witness: format_point(&witness) });
        }
    }
    Ok(i)
}
