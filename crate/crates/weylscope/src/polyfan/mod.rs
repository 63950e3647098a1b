//! Rational polyhedral cones, prefans and their compactifications.
//!
//! A cone is given by integer functionals on V = ℚ^n: inequalities
//! `⟨u,φ⟩ ≤ 0` and equalities `⟨u,ψ⟩ = 0`. Boundary semantics are decided
//! on these generator functionals; the semigroups they generate are never
//! saturated.

mod boundary;
mod cone;
pub mod lp;
mod prefan;

pub use boundary::{
    eval_at_boundary, limit_of_values, satisfies_convergence_criterion, sequence_limit, translate, with_origin,
    BoundaryPoint, OriginChart,
};
pub use cone::{Cone, SignOn, FACE_DIM_CAP};
pub use prefan::{common_face, Prefan};
