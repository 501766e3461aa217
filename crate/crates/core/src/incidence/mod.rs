//! Piercing verification and the collinearity structure it forces.
//!
//! A [`Configuration`] pairs a point set `P` with a piercing set `R`. The
//! verifiers here check either plain incidence (every determined line of `P`
//! carries a point of `R`) or the stronger outside-segment hypothesis (the
//! carried point is not inside the segment between the two points of `P`),
//! and then audit and extract the cyclic labeling that the outside-segment
//! hypothesis forces when `|R| = |P|`.

mod audit;
mod config;
mod pierce;
mod relevance;
mod structure;

pub use audit::{hull_audit, HullAudit};
pub use config::{BipartiteConfiguration, Color, Configuration, PierceMode};
pub use pierce::{verify_bipartite_piercing, verify_piercing, verify_piercing_with, PairWitness, PierceReport};
pub use relevance::{build_relevance, RelevanceTable};
pub use structure::{
    check_alternation, extract_bipartite_structure, extract_cyclic_structure, tangency_check, CyclicStructure,
    LabeledPoints,
};

use thiserror::Error;

use crate::geom::GeomError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IncidenceError {
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("P is not in general position: points {0:?} are collinear")]
    GeneralPositionViolation([usize; 3]),
    #[error("P[{0}] is at infinity, which the outside-segment mode does not allow")]
    InfinitePointInP(usize),
    #[error("piercing hypothesis fails on {0} pair(s)")]
    HypothesisViolated(usize),
    #[error("|R| = {r} but |P| = {p}; structure extraction needs equal sizes")]
    SizeMismatch { p: usize, r: usize },
    #[error("point {x} of P has {count} non-relevant points of R, expected exactly 1")]
    StructureViolation { x: usize, count: usize },
    #[error("P is not in convex position: hull has {hull} of {n} points")]
    ConvexPositionViolation { hull: usize, n: usize },
    #[error("hull colors do not alternate")]
    AlternationViolation,
    #[error("inconsistent labeling: {0}")]
    InconsistentLabeling(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
}
