//! JSON formats. Rationals are written as strings `"p/q"`; integers are also accepted on input.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::apartment::{Exponents, TropicalPolynomial};
use crate::gl_models::DiagSeminorm;
use crate::polyfan::{Cone, Prefan};
use crate::rational::{format_rational, parse_rational, ExtendedValue, Q};
use crate::root_data::RootDatum;
use crate::{Error, Result};

fn json_error(e: serde_json::Error) -> Error {
    Error::Invalid(e.to_string())
}

/// A rational given as a string or a JSON integer.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum RationalField {
    Int(i64),
    Text(String),
}

impl RationalField {
    fn value(&self) -> Result<Q> {
        match self {
            RationalField::Int(n) => Ok(Q::from_integer((*n).into())),
            RationalField::Text(s) => parse_rational(s).map_err(Error::Invalid),
        }
    }

    fn extended(&self) -> Result<ExtendedValue> {
        match self {
            RationalField::Int(n) => Ok(ExtendedValue::Finite(Q::from_integer((*n).into()))),
            RationalField::Text(s) => ExtendedValue::parse(s).map_err(Error::Invalid),
        }
    }
}

fn rationals(v: &[RationalField]) -> Result<Vec<Q>> {
    v.iter().map(RationalField::value).collect()
}

pub fn rational_strings(v: &[Q]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DatumFile {
    name: Option<String>,
    rank: Option<i64>,
    cartan: Option<Vec<Vec<i64>>>,
    roots: Option<Vec<Vec<i64>>>,
}

/// Reads `{"name": "B3"}` or `{"rank": n, "cartan": [[...]], "roots": [[...]]}` (roots optional).
pub fn parse_datum(text: &str) -> Result<RootDatum> {
    let f: DatumFile = serde_json::from_str(text).map_err(json_error)?;
    if let Some(name) = &f.name {
        if f.cartan.is_none() {
            let d = RootDatum::named(name)?;
            if let Some(r) = f.rank {
                if r != d.rank() as i64 {
                    return Err(Error::InvalidDatum(format!("rank {r} does not match {name}")));
                }
            }
            return Ok(d);
        }
    }
    let rank = f.rank.ok_or_else(|| Error::InvalidDatum("missing field `rank`".into()))?;
    if rank <= 0 {
        return Err(Error::InvalidDatum(format!("rank must be positive, got {rank}")));
    }
    let cartan = f.cartan.ok_or_else(|| Error::InvalidDatum("missing field `cartan`".into()))?;
    if cartan.len() != rank as usize {
        return Err(Error::InvalidDatum(format!("Cartan matrix has {} rows, expected {rank}", cartan.len())));
    }
    let d = RootDatum::from_cartan(cartan, f.name)?;
    if let Some(roots) = f.roots {
        let given: BTreeSet<Vec<i64>> = roots.into_iter().collect();
        let actual: BTreeSet<Vec<i64>> = d.roots().iter().cloned().collect();
        if given != actual {
            return Err(Error::InvalidDatum("listed roots differ from the root system of the Cartan matrix".into()));
        }
    }
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeJson {
    pub ambient_dim: usize,
    pub inequalities: Vec<Vec<i64>>,
    #[serde(default)]
    pub equalities: Vec<Vec<i64>>,
    #[serde(default)]
    pub dim: usize,
    #[serde(default)]
    pub rays: Vec<Vec<String>>,
    #[serde(default)]
    pub lineality: Vec<Vec<String>>,
}

impl ConeJson {
    pub fn from_cone(c: &Cone) -> Self {
        ConeJson {
            ambient_dim: c.ambient_dim(),
            inequalities: c.inequalities().to_vec(),
            equalities: c.equalities().to_vec(),
            dim: c.dim(),
            rays: c.rays().iter().map(|r| rational_strings(r)).collect(),
            lineality: c.lineality().iter().map(|r| rational_strings(r)).collect(),
        }
    }

    pub fn to_cone(&self) -> Result<Cone> {
        for f in self.inequalities.iter().chain(&self.equalities) {
            if f.len() != self.ambient_dim {
                return Err(Error::Invalid(format!("functional of length {}, expected {}", f.len(), self.ambient_dim)));
            }
        }
        Ok(Cone::new(self.ambient_dim, self.inequalities.clone(), self.equalities.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefanJson {
    pub ambient_dim: usize,
    #[serde(default)]
    pub is_fan: bool,
    pub cones: Vec<ConeJson>,
}

impl PrefanJson {
    pub fn from_prefan(p: &Prefan) -> Self {
        PrefanJson {
            ambient_dim: p.ambient_dim(),
            is_fan: p.is_fan(),
            cones: p.cones().iter().map(ConeJson::from_cone).collect(),
        }
    }

    pub fn to_prefan(&self) -> Result<Prefan> {
        let cones = self.cones.iter().map(ConeJson::to_cone).collect::<Result<Vec<_>>>()?;
        Ok(Prefan::from_cones(self.ambient_dim, cones))
    }
}

pub fn cone_to_json(c: &Cone) -> String {
    serde_json::to_string_pretty(&ConeJson::from_cone(c)).expect("serializable")
}

pub fn cone_from_json(text: &str) -> Result<Cone> {
    serde_json::from_str::<ConeJson>(text).map_err(json_error)?.to_cone()
}

pub fn prefan_to_json(p: &Prefan) -> String {
    serde_json::to_string_pretty(&PrefanJson::from_prefan(p)).expect("serializable")
}

pub fn prefan_from_json(text: &str) -> Result<Prefan> {
    serde_json::from_str::<PrefanJson>(text).map_err(json_error)?.to_prefan()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MonomialJson {
    #[serde(default)]
    exponents: BTreeMap<String, u32>,
    log_coeff: RationalField,
}

/// Reads a list of monomials whose exponents are keyed by position in `generators`.
pub fn parse_tropical(text: &str, generators: &[usize]) -> Result<TropicalPolynomial> {
    let ms: Vec<MonomialJson> = serde_json::from_str(text).map_err(json_error)?;
    let mut out = Vec::with_capacity(ms.len());
    for m in ms {
        let mut e = Exponents::new();
        for (k, n) in m.exponents {
            let i: usize = k.trim().parse().map_err(|_| Error::Invalid(format!("generator index `{k}` is not a number")))?;
            let root = *generators
                .get(i)
                .ok_or_else(|| Error::ChartMismatch(format!("generator index {i} out of range (chart has {})", generators.len())))?;
            *e.entry(root).or_insert(0) += n;
        }
        out.push((e, m.log_coeff.extended()?));
    }
    TropicalPolynomial::new(out)
}

/// Writes a polynomial with exponents keyed by position in `generators`.
pub fn tropical_to_json(f: &TropicalPolynomial, generators: &[usize]) -> Result<String> {
    let mut items = Vec::new();
    for (e, c) in f.monomials() {
        let mut ex = serde_json::Map::new();
        for (a, n) in e {
            let i = generators
                .iter()
                .position(|g| g == a)
                .ok_or_else(|| Error::ChartMismatch(format!("root {a} is not a chart generator")))?;
            ex.insert(i.to_string(), Value::from(*n));
        }
        items.push(serde_json::json!({ "exponents": ex, "log_coeff": c.to_string() }));
    }
    Ok(serde_json::to_string_pretty(&items).expect("serializable"))
}

/// A point file: a stratum index of the prefan with a residual, or an interior vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointSpec {
    Interior(Vec<Q>),
    Boundary { stratum: usize, residual: Vec<Q> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointFile {
    stratum: Option<usize>,
    residual: Option<Vec<RationalField>>,
    interior: Option<Vec<RationalField>>,
}

pub fn parse_point(text: &str) -> Result<PointSpec> {
    let f: PointFile = serde_json::from_str(text).map_err(json_error)?;
    match (f.interior, f.stratum, f.residual) {
        (Some(u), None, None) => Ok(PointSpec::Interior(rationals(&u)?)),
        (None, Some(stratum), Some(r)) => Ok(PointSpec::Boundary { stratum, residual: rationals(&r)? }),
        _ => Err(Error::Invalid("point file needs either `interior` or both `stratum` and `residual`".into())),
    }
}

pub fn point_to_json(p: &PointSpec) -> String {
    let v = match p {
        PointSpec::Interior(u) => serde_json::json!({ "interior": rational_strings(u) }),
        PointSpec::Boundary { stratum, residual } => {
            serde_json::json!({ "stratum": stratum, "residual": rational_strings(residual) })
        }
    };
    serde_json::to_string_pretty(&v).expect("serializable")
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeminormFile {
    values: Vec<RationalField>,
}

pub fn parse_seminorm(text: &str) -> Result<DiagSeminorm> {
    let f: SeminormFile = serde_json::from_str(text).map_err(json_error)?;
    DiagSeminorm::new(f.values.iter().map(RationalField::extended).collect::<Result<_>>()?)
}

pub fn seminorm_to_json(s: &DiagSeminorm) -> String {
    let values: Vec<String> = s.values().iter().map(ToString::to_string).collect();
    serde_json::to_string_pretty(&serde_json::json!({ "values": values })).expect("serializable")
}
