use std::cmp::Ordering;

use num_traits::Zero;

use super::cone::SignOn;
use super::prefan::Prefan;
use crate::linalg::{self, pair};
use crate::rational::{sign, ExtendedValue, Q};
use crate::{Error, Result};

/// A point of the compactification of V along a prefan: a stratum cone C and
/// a residual class in V/⟨C⟩, stored as its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryPoint {
    stratum: usize,
    residual: Vec<Q>,
}

impl BoundaryPoint {
    pub fn new(prefan: &Prefan, stratum: usize, residual: &[Q]) -> Result<Self> {
        if stratum >= prefan.len() {
            return Err(Error::Invalid(format!("stratum {stratum} out of range")));
        }
        if residual.len() != prefan.ambient_dim() {
            return Err(Error::Invalid(format!(
                "residual has length {}, expected {}",
                residual.len(),
                prefan.ambient_dim()
            )));
        }
        Ok(BoundaryPoint { stratum, residual: prefan.cone(stratum).reduce_mod_span(residual) })
    }

    /// The point `u` of the open stratum.
    pub fn interior(prefan: &Prefan, u: &[Q]) -> Result<Self> {
        Self::new(prefan, prefan.lineality_index(), u)
    }

    pub fn stratum(&self) -> usize {
        self.stratum
    }

    pub fn residual(&self) -> &[Q] {
        &self.residual
    }
}

/// Value of the functional φ at a boundary point, in ℚ ∪ {±∞}.
pub fn eval_at_boundary(prefan: &Prefan, x: &BoundaryPoint, phi: &[i64]) -> Result<ExtendedValue> {
    match prefan.cone(x.stratum).sign_of(phi) {
        SignOn::Zero => Ok(ExtendedValue::Finite(pair(phi, &x.residual))),
        SignOn::NonPositive => Ok(ExtendedValue::NegInf),
        SignOn::NonNegative => Ok(ExtendedValue::PosInf),
        SignOn::Mixed => Err(Error::Indeterminate),
    }
}

/// `lim_n ⟨u0 + n v, φ⟩`.
pub fn limit_of_values(u0: &[Q], v: &[Q], phi: &[i64]) -> ExtendedValue {
    match sign(&pair(phi, v)) {
        Ordering::Less => ExtendedValue::NegInf,
        Ordering::Greater => ExtendedValue::PosInf,
        Ordering::Equal => ExtendedValue::Finite(pair(phi, u0)),
    }
}

/// Limit of the ray `u0 + n v` in the compactification along a complete prefan.
pub fn sequence_limit(prefan: &Prefan, u0: &[Q], v: &[Q]) -> Result<BoundaryPoint> {
    let stratum = prefan.smallest_containing(v).ok_or(Error::NotCovered)?;
    BoundaryPoint::new(prefan, stratum, u0)
}

fn eventually_in(cone: &super::Cone, u0: &[Q], v: &[Q]) -> bool {
    let ok_ineq = |f: &Vec<i64>| match sign(&pair(f, v)) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => pair(f, u0) <= Q::zero(),
    };
    cone.inequalities().iter().all(ok_ineq)
        && cone.equalities().iter().all(|f| pair(f, v).is_zero() && pair(f, u0).is_zero())
}

/// The convergence criterion for `u0 + n v → x`, checked on generator functionals:
/// the ray eventually lies in some cone containing the stratum, and every
/// generator of such a cone converges in ℚ exactly when it vanishes on the
/// stratum, to the residual value, and tends to −∞ otherwise.
pub fn satisfies_convergence_criterion(prefan: &Prefan, u0: &[Q], v: &[Q], x: &BoundaryPoint) -> bool {
    let c = prefan.cone(x.stratum);
    let star: Vec<usize> = prefan.stratum_closure(x.stratum);
    if !star.iter().any(|&j| eventually_in(prefan.cone(j), u0, v)) {
        return false;
    }
    star.iter().all(|&j| {
        let cj = prefan.cone(j);
        let gens = cj
            .inequalities()
            .iter()
            .cloned()
            .chain(cj.equalities().iter().flat_map(|f| [f.clone(), f.iter().map(|a| -a).collect()]));
        gens.into_iter().all(|phi| {
            let lim = limit_of_values(u0, v, &phi);
            if c.vanishes_on_span(&phi) {
                lim == ExtendedValue::Finite(pair(&phi, &x.residual))
            } else {
                c.sign_of(&phi) != SignOn::NonPositive || lim == ExtendedValue::NegInf
            }
        })
    })
}

pub fn translate(prefan: &Prefan, x: &BoundaryPoint, w: &[Q]) -> BoundaryPoint {
    BoundaryPoint {
        stratum: x.stratum,
        residual: prefan.cone(x.stratum).reduce_mod_span(&linalg::add(&x.residual, w)),
    }
}

/// Base-point bookkeeping: identifies the affine apartment with V through a chosen special point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OriginChart {
    label: String,
}

pub fn with_origin(label: &str) -> OriginChart {
    OriginChart { label: label.to_string() }
}

impl OriginChart {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn to_vector(&self, point: &[Q]) -> Vec<Q> {
        point.to_vec()
    }

    pub fn from_vector(&self, v: &[Q]) -> Vec<Q> {
        v.to_vec()
    }
}
