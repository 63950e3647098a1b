//! Exact rationals and the extended value line ℚ ∪ {±∞}.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact rational number used throughout the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Q, String> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| format!("`{s}` is not a rational number"))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(format!("`{s}` has zero denominator"));
            }
            Ok(Q::new(parse_int(n)?, d))
        }
        None => Ok(Q::from_integer(parse_int(s)?)),
    }
}

pub fn format_rational(x: &Q) -> String {
    x.to_string()
}

/// Parses a comma separated list of rationals.
pub fn parse_vector(s: &str) -> Result<Vec<Q>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// A point of ℚ ∪ {−∞, +∞}, ordered with −∞ first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedValue {
    NegInf,
    Finite(Q),
    PosInf,
}

impl ExtendedValue {
    pub fn zero() -> Self {
        ExtendedValue::Finite(Q::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedValue::Finite(_))
    }

    pub fn finite(&self) -> Option<&Q> {
        match self {
            ExtendedValue::Finite(x) => Some(x),
            _ => None,
        }
    }

    /// Sum, undefined only for (+∞) + (−∞).
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        use ExtendedValue::*;
        match (self, other) {
            (NegInf, PosInf) | (PosInf, NegInf) => None,
            (NegInf, _) | (_, NegInf) => Some(NegInf),
            (PosInf, _) | (_, PosInf) => Some(PosInf),
            (Finite(a), Finite(b)) => Some(Finite(a + b)),
        }
    }

    /// Multiplies by a natural number; `0 · (±∞)` is 0.
    pub fn scale(&self, n: u32) -> Self {
        if n == 0 {
            return Self::zero();
        }
        match self {
            ExtendedValue::Finite(x) => ExtendedValue::Finite(x * Q::from_integer(BigInt::from(n))),
            other => other.clone(),
        }
    }

    pub fn parse(s: &str) -> Result<Self, String> {
        match s.trim() {
            "-inf" | "-∞" => Ok(ExtendedValue::NegInf),
            "+inf" | "inf" | "+∞" | "∞" => Ok(ExtendedValue::PosInf),
            t => parse_rational(t).map(ExtendedValue::Finite),
        }
    }
}

impl From<Q> for ExtendedValue {
    fn from(x: Q) -> Self {
        ExtendedValue::Finite(x)
    }
}

impl Add for &ExtendedValue {
    type Output = ExtendedValue;

    fn add(self, rhs: Self) -> ExtendedValue {
        self.checked_add(rhs).expect("(+inf) + (-inf) is undefined")
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValue::NegInf => write!(f, "-inf"),
            ExtendedValue::PosInf => write!(f, "+inf"),
            ExtendedValue::Finite(x) => write!(f, "{x}"),
        }
    }
}

pub(crate) fn sign(x: &Q) -> Ordering {
    if x.is_positive() {
        Ordering::Greater
    } else if x.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "3", "-7/2", "5/10"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
        }
        assert_eq!(parse_rational("5/10").unwrap(), qr(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn extended_order_and_sum() {
        use ExtendedValue::*;
        assert!(NegInf < Finite(q(-100)));
        assert!(Finite(q(100)) < PosInf);
        assert_eq!(NegInf.checked_add(&Finite(q(1))), Some(NegInf));
        assert_eq!(PosInf.checked_add(&NegInf), None);
        assert_eq!(Finite(q(2)).scale(3), Finite(q(6)));
        assert_eq!(NegInf.scale(0), Finite(q(0)));
        assert_eq!(ExtendedValue::parse("-inf").unwrap(), NegInf);
    }
}
