//! Cubic curves through exact point sets.
//!
//! A [`Cubic`] is a homogeneous degree-3 polynomial in `(X, Y, Z)` with
//! integer coefficients over the fixed basis
//! `X³, X²Y, X²Z, XY², XYZ, XZ², Y³, Y²Z, YZ², Z³`.
//! Null spaces of monomial matrices are computed by fraction-free
//! elimination, and containment of a labeled configuration in a cubic is
//! certified either directly (null space of all points) or by seeding a cubic
//! through nine points and propagating along Chasles grids.

mod certify;
mod chasles;
mod grids;
mod kernel;
mod monomial;

pub use certify::{
    certify_bipartite_cubic, certify_cubic, certify_labeled, common_cubic, CubicCertificate, GridFamily,
    PropagationStep, Strategy, SEEDED_MIN_MODULUS,
};
pub use chasles::{chasles_rank_test, chasles_verify, ChaslesInstance};
pub use grids::{claim1_instance, claim2_instance, structural_grids, GridInstance, GridSpec, PointRef};
pub use kernel::{kernel, rank};
pub use monomial::{conic_row, monomial_matrix, monomial_row, on_cubic, Cubic, MONOMIALS};

use thiserror::Error;

use crate::geom::GeomError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubicError {
    #[error("all cubic coefficients are zero")]
    ZeroCubic,
    #[error("degenerate Chasles instance: {0}")]
    DegenerateInstance(String),
    #[error("collinearity mismatch: {0}")]
    CollinearityMismatch(String),
    #[error("no cubic passes through all {0} points")]
    NoCommonCubic(usize),
    #[error("propagation failed: {0}")]
    PropagationFailure(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
}
