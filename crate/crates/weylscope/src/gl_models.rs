//! Diagonal seminorm classes on V = k^{d+1} and their dictionary with the
//! compactified apartment of A_d for the type δ = Δ − {α_d}.
//!
//! A class is given by log-magnitudes c_i of the basis vectors and corresponds
//! to the dual vector with ⟨u, χ_i⟩ = −c_i.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::apartment::{ApartmentContext, CompactApartmentPoint};
use crate::linalg::pair;
use crate::rational::{ExtendedValue, Q};
use crate::root_data::{ParabolicSet, RootDatum, RootSet, TypeLabel};
use crate::{Error, Result};

/// Seminorm class on k^{d+1}, normalized so the largest value is 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagSeminorm {
    values: Vec<ExtendedValue>,
}

impl DiagSeminorm {
    pub fn new(values: Vec<ExtendedValue>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::Invalid("a seminorm needs at least two coordinates".into()));
        }
        if values.contains(&ExtendedValue::PosInf) {
            return Err(Error::Invalid("seminorm values must be finite or -inf".into()));
        }
        let top = values
            .iter()
            .filter_map(ExtendedValue::finite)
            .max()
            .cloned()
            .ok_or_else(|| Error::Invalid("seminorm values are all -inf".into()))?;
        let values = values
            .into_iter()
            .map(|v| match v {
                ExtendedValue::Finite(x) => ExtendedValue::Finite(x - &top),
                other => other,
            })
            .collect();
        Ok(DiagSeminorm { values })
    }

    pub fn values(&self) -> &[ExtendedValue] {
        &self.values
    }

    /// d, for a seminorm on k^{d+1}.
    pub fn rank(&self) -> usize {
        self.values.len() - 1
    }

    /// Indices with c_i = −∞.
    pub fn kernel(&self) -> BTreeSet<usize> {
        (0..self.values.len()).filter(|&i| !self.values[i].is_finite()).collect()
    }

    pub fn is_norm(&self) -> bool {
        self.kernel().is_empty()
    }
}

/// χ_i − χ_j in simple-root coordinates of A_d (0-based indices, i ≠ j).
pub fn gl_root(d: usize, i: usize, j: usize) -> Vec<i64> {
    let (lo, hi, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
    (0..d).map(|k| if k >= lo && k < hi { s } else { 0 }).collect()
}

/// u with ⟨u, χ_i⟩ = −c_i, i.e. u_j = c_{j+1} − c_j.
fn dual_vector(c: &[Q]) -> Vec<Q> {
    c.windows(2).map(|w| &w[1] - &w[0]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerBlocks {
    pub stratum: ParabolicSet,
    pub full: RootSet,
    pub filtered: BTreeMap<usize, Q>,
}

/// The A_d apartment compactified along F_δ, with its seminorm dictionary.
#[derive(Clone, Debug)]
pub struct PglModel {
    ctx: ApartmentContext,
}

impl PglModel {
    pub fn new(d: usize, cap: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::Invalid("dimension must be at least 2".into()));
        }
        let datum = RootDatum::named(&format!("A{d}"))?;
        Ok(PglModel { ctx: ApartmentContext::new(datum, Self::delta(d), cap)? })
    }

    /// The type δ = Δ − {α_d}.
    pub fn delta(d: usize) -> TypeLabel {
        TypeLabel::all_but(d, d - 1)
    }

    pub fn rank(&self) -> usize {
        self.ctx.datum().rank()
    }

    pub fn context(&self) -> &ApartmentContext {
        &self.ctx
    }

    pub fn datum(&self) -> &RootDatum {
        self.ctx.datum()
    }

    /// Root index of χ_i − χ_j.
    pub fn root_index(&self, i: usize, j: usize) -> usize {
        self.datum().index_of(&gl_root(self.rank(), i, j)).expect("χ_i − χ_j is a root")
    }

    fn check(&self, s: &DiagSeminorm) -> Result<()> {
        if s.rank() != self.rank() {
            return Err(Error::Invalid(format!("seminorm on k^{}, expected k^{}", s.rank() + 1, self.rank() + 1)));
        }
        if s.kernel().len() > self.rank() {
            return Err(Error::Invalid("kernel must be a proper subspace".into()));
        }
        Ok(())
    }

    /// The stabilizer of the coordinate subspace spanned by the kernel indices.
    pub fn stratum_label(&self, s: &DiagSeminorm) -> Result<ParabolicSet> {
        self.check(s)?;
        let k = s.kernel();
        let n = self.rank() + 1;
        let members = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .filter(|(i, j)| !(k.contains(j) && !k.contains(i)))
            .map(|(i, j)| self.root_index(i, j))
            .collect();
        ParabolicSet::new(self.datum(), members)
    }

    pub fn to_apartment_point(&self, s: &DiagSeminorm) -> Result<CompactApartmentPoint> {
        self.check(s)?;
        let zero = Q::zero();
        let base: Vec<Q> = s.values().iter().map(|v| v.finite().unwrap_or(&zero).clone()).collect();
        let dir: Vec<Q> = s.values().iter().map(|v| if v.is_finite() { Q::zero() } else { Q::from_integer((-1).into()) }).collect();
        self.ctx.limit(&dual_vector(&base), &dual_vector(&dir))
    }

    pub fn from_apartment_point(&self, x: &CompactApartmentPoint) -> Result<DiagSeminorm> {
        let n = self.rank() + 1;
        let kernel: BTreeSet<usize> = (0..n)
            .filter(|&j| (0..n).any(|i| i != j && !x.stratum.contains(self.root_index(i, j))))
            .collect();
        let i0 = (0..n).find(|i| !kernel.contains(i)).ok_or(Error::Invalid("empty quotient".into()))?;
        let values = (0..n)
            .map(|i| {
                if kernel.contains(&i) {
                    ExtendedValue::NegInf
                } else if i == i0 {
                    ExtendedValue::zero()
                } else {
                    // c_i − c_{i0} = ⟨u, χ_{i0} − χ_i⟩
                    ExtendedValue::Finite(pair(&gl_root(self.rank(), i0, i), x.point.residual()))
                }
            })
            .collect();
        DiagSeminorm::new(values)
    }

    /// Full root groups: rad^u(Q) and the kernel block; levels c_i − c_j on the quotient block.
    pub fn stabilizer_blocks(&self, s: &DiagSeminorm) -> Result<StabilizerBlocks> {
        let stratum = self.stratum_label(s)?;
        let k = s.kernel();
        let n = self.rank() + 1;
        let mut full = stratum.unipotent_radical_roots(self.datum());
        let mut filtered = BTreeMap::new();
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                match (k.contains(&i), k.contains(&j)) {
                    (true, true) => {
                        full.insert(self.root_index(i, j));
                    }
                    (false, false) => {
                        let ci = s.values()[i].finite().expect("outside the kernel");
                        let cj = s.values()[j].finite().expect("outside the kernel");
                        filtered.insert(self.root_index(i, j), ci - cj);
                    }
                    _ => {}
                }
            }
        }
        Ok(StabilizerBlocks { stratum, full, filtered })
    }

    /// Rank of PGL(V/W) for the kernel W of s.
    pub fn quotient_rank(&self, s: &DiagSeminorm) -> usize {
        self.rank() - s.kernel().len()
    }
}
