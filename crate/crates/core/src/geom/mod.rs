//! Exact projective-plane kernel.
//!
//! Points and lines are homogeneous integer triples kept in canonical form
//! (gcd 1, first nonzero entry positive), so equality is component-wise and
//! both types can be hashed and ordered.

mod directions;
mod hull;
mod point;
mod predicates;

pub use directions::{count_directions, direction_set, Direction};
pub use hull::{convex_hull, general_position_violation, is_general_position};
pub use point::{canonicalize, ProjLine, ProjPoint};
pub use predicates::{
    collinear, det3, incident, join, meet, orientation, side_of_line, strictly_between, Orientation,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("cannot join a point with itself")]
    DegenerateJoin,
    #[error("cannot meet a line with itself")]
    DegenerateMeet,
}
