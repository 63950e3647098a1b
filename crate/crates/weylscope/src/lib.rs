//! Exact combinatorics of Berkovich compactifications of Bruhat-Tits buildings
//! for split semisimple groups.
//!
//! All arithmetic is over ℚ. Points of an apartment are written additively:
//! a vector `u` of the dual space pairs with a character `χ` as `⟨u, χ⟩`, and
//! the multiplicative condition `χ ⩽ 1` reads `⟨u, χ⟩ ≤ 0`. Roots are stored
//! in simple-root coordinates and dual vectors by their values on the simple
//! roots, so `u[j] = ⟨u, α_j⟩`.

pub mod apartment;
pub mod gl_models;
pub mod io;
pub mod linalg;
pub mod polyfan;
pub mod rational;
pub mod root_data;
pub mod type_geometry;

pub use rational::{ExtendedValue, Q};

/// Default bound on Weyl group and orbit enumerations.
pub const DEFAULT_ENUM_CAP: usize = 1152;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown root datum `{0}`")]
    UnknownDatum(String),
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
    #[error("enumeration cap exceeded: more than {cap} elements")]
    CapExceeded { cap: usize },
    #[error("ambient dimension {dim} exceeds the face enumeration cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("fan axiom violated; witness point {witness}")]
    FanAxiomViolation { witness: String },
    #[error("functional changes sign on the stratum cone")]
    Indeterminate,
    #[error("chart mismatch: {0}")]
    ChartMismatch(String),
    #[error("type order violated: {0} is not contained in {1}")]
    TypeOrder(String, String),
    #[error("point is not covered by the prefan")]
    NotCovered,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
