use std::collections::BTreeMap;

use crate::linalg::pair;
use crate::rational::{ExtendedValue, Q};
use crate::{Error, Result};

/// Exponent assignment ν: generator root index ↦ positive exponent.
pub type Exponents = BTreeMap<usize, u32>;

/// Max-plus polynomial in chart generators with log-magnitude coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TropicalPolynomial {
    monomials: Vec<(Exponents, ExtendedValue)>,
}

fn clean(e: Exponents) -> Exponents {
    e.into_iter().filter(|&(_, n)| n > 0).collect()
}

fn check_coeff(c: &ExtendedValue) -> Result<()> {
    if *c == ExtendedValue::PosInf {
        return Err(Error::Invalid("coefficient +inf is not allowed".into()));
    }
    Ok(())
}

fn max_value(values: impl Iterator<Item = ExtendedValue>) -> ExtendedValue {
    values.max().unwrap_or(ExtendedValue::NegInf)
}

impl TropicalPolynomial {
    pub fn new(monomials: Vec<(Exponents, ExtendedValue)>) -> Result<Self> {
        let mut out = Vec::with_capacity(monomials.len());
        for (e, c) in monomials {
            check_coeff(&c)?;
            out.push((clean(e), c));
        }
        Ok(TropicalPolynomial { monomials: out })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Q) -> Self {
        TropicalPolynomial { monomials: vec![(Exponents::new(), ExtendedValue::Finite(c))] }
    }

    pub fn monomial(exponents: Exponents, c: Q) -> Self {
        TropicalPolynomial { monomials: vec![(clean(exponents), ExtendedValue::Finite(c))] }
    }

    /// The generator X_α with coefficient 0.
    pub fn generator(alpha: usize) -> Self {
        Self::monomial(Exponents::from([(alpha, 1)]), Q::from_integer(0.into()))
    }

    pub fn monomials(&self) -> &[(Exponents, ExtendedValue)] {
        &self.monomials
    }

    /// True when no coefficient is finite.
    pub fn is_zero(&self) -> bool {
        self.monomials.iter().all(|(_, c)| !c.is_finite())
    }

    pub fn variables(&self) -> impl Iterator<Item = usize> + '_ {
        self.monomials.iter().flat_map(|(e, _)| e.keys().copied())
    }

    /// f ⊕ g.
    pub fn add(&self, other: &Self) -> Self {
        let mut monomials = self.monomials.clone();
        monomials.extend(other.monomials.iter().cloned());
        TropicalPolynomial { monomials }
    }

    /// f ⊙ g, without cancellation.
    pub fn mul(&self, other: &Self) -> Self {
        let mut monomials = Vec::with_capacity(self.monomials.len() * other.monomials.len());
        for (e1, c1) in &self.monomials {
            for (e2, c2) in &other.monomials {
                let mut e = e1.clone();
                for (&k, &n) in e2 {
                    *e.entry(k).or_insert(0) += n;
                }
                monomials.push((e, c1 + c2));
            }
        }
        TropicalPolynomial { monomials }
    }

    /// max_ν (c_ν + Σ ν(α)·value(α)); a monomial with a −∞ factor of positive exponent dies.
    pub fn evaluate<F>(&self, mut value: F) -> Result<ExtendedValue>
    where
        F: FnMut(usize) -> Result<ExtendedValue>,
    {
        let mut terms = Vec::with_capacity(self.monomials.len());
        for (e, c) in &self.monomials {
            let mut acc = c.clone();
            for (&a, &n) in e {
                let v = value(a)?.scale(n);
                acc = acc
                    .checked_add(&v)
                    .ok_or_else(|| Error::Invalid("undefined sum +inf + -inf".into()))?;
            }
            terms.push(acc);
        }
        Ok(max_value(terms.into_iter()))
    }
}

/// Polynomial on the group big cell: monomials indexed by a character χ and exponents ν.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupPolynomial {
    monomials: Vec<(Vec<i64>, Exponents, ExtendedValue)>,
}

impl GroupPolynomial {
    pub fn new(monomials: Vec<(Vec<i64>, Exponents, ExtendedValue)>) -> Result<Self> {
        let mut out = Vec::with_capacity(monomials.len());
        for (chi, e, c) in monomials {
            check_coeff(&c)?;
            out.push((chi, clean(e), c));
        }
        Ok(GroupPolynomial { monomials: out })
    }

    pub fn monomials(&self) -> &[(Vec<i64>, Exponents, ExtendedValue)] {
        &self.monomials
    }
}

/// max over (χ, ν) of c + Σ ν(α)⟨u,α⟩ at an interior point; χ carries weight 0.
pub fn group_seminorm_eval(roots: &[Vec<i64>], u: &[Q], f: &GroupPolynomial) -> ExtendedValue {
    max_value(f.monomials.iter().map(|(_, e, c)| {
        let w: Q = e.iter().map(|(&a, &n)| pair(&roots[a], u) * Q::from_integer(n.into())).sum();
        c + &ExtendedValue::Finite(w)
    }))
}
