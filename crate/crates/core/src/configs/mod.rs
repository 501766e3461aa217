//! Exact configurations: constructions, elliptic-curve fixtures, random
//! general-position sets and projective maps.

mod elliptic;
mod fixtures;
mod polygons;
mod random;
mod transform;

pub use elliptic::{CurvePoint, WeierstrassCurve};
pub use fixtures::{
    build_fixture, fixture_names, gate, load_fixture, load_torsion_fixture, torsion_document, FixtureDescriptor, TorsionSpec,
    TORSION_SPECS,
};
pub use polygons::{gen_affine_regular, gen_sharpness_example};
pub use random::gen_random_general_position;
pub use transform::{apply_map, MapKind};

use thiserror::Error;

use crate::incidence::IncidenceError;
use crate::io::IoError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("n = {0} is not supported by this construction")]
    UnsupportedN(usize),
    #[error("no {n} points in general position found in [-{bound}, {bound}]^2 after {tries} draws")]
    ExhaustedRetries { n: usize, bound: i64, tries: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("fixture gate failed: {0}")]
    FixtureGateFailure(String),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
    #[error(transparent)]
    Io(#[from] IoError),
}
