//! Exact minimum piercing sets, direction-spectrum checks and a randomized
//! scan for the cubic conjecture in the incidence setting.
//!
//! # Finite reduction
//!
//! A point of `R` that lies on two or more determined lines is a meet of
//! two of them, so it is one of finitely many candidates. A point on a
//! single determined line can be replaced by any other point of that line
//! (outside the segment, in outside-segment mode) that avoids `P`. Hence the
//! optimum equals the minimum over candidate subsets `S` of
//! `|S| + #{constraints not covered by S}`, which is what the search
//! minimizes. Single-line points are materialized only when a witness is
//! reported.

mod candidates;
mod scan;
mod search;
mod spectrum;

pub use candidates::{build_candidates, CandidateSet, Constraint, MAX_CONSTRAINTS};
pub use scan::{conjecture_scan, Falsification, ScanOptions, ScanReport, ScanTrial};
pub use search::{min_pierce, min_pierce_with, optimal_witnesses, SearchResult, Witness};
pub use spectrum::{jamison_check, ungar_check, JamisonReport, JamisonVerdict, UngarReport};

use thiserror::Error;

use crate::configs::ConfigError;
use crate::incidence::IncidenceError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OptError {
    #[error("points {0:?} are collinear")]
    GeneralPositionViolation([usize; 3]),
    #[error("point {0} of P is at infinity, which outside-segment mode does not allow")]
    InfinitePoint(usize),
    #[error("{0} points determine more than {MAX_CONSTRAINTS} lines")]
    TooManyPoints(usize),
    #[error("all points are collinear")]
    CollinearInput,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}
