//! Exact projective incidence geometry for point sets `P` whose determined
//! lines are pierced by a second point set `R`.
//!
//! Everything is computed over arbitrary-precision integers: points and lines
//! are canonical homogeneous triples and every predicate is the sign of a
//! determinant. On top of that kernel the crate offers
//!
//! * [`incidence`]: piercing verification, relevance tables, the hull audit
//!   and extraction of the cyclic collinearity structure
//!   `x_i, x_j, r_k collinear <=> i + j + k = 0 (mod n)`;
//! * [`cubic`]: cubic curves through point sets, fraction-free null spaces,
//!   Chasles grids and the propagation that certifies `P ∪ R` lies on a cubic;
//! * [`configs`]: exact constructions (affine-regular polygons, elliptic-curve
//!   torsion fixtures, random general-position sets, affine and projective maps);
//! * [`opt`]: exact minimum piercing sets by branch and bound, direction
//!   spectrum checks and a randomized scan for counterexamples to the cubic
//!   conjecture in the incidence setting.
//!
//! Data-parallel loops go through [`par::Exec`]; with the `parallel` feature
//! disabled everything runs sequentially.

pub mod configs;
pub mod cubic;
pub mod geom;
pub mod incidence;
pub mod io;
pub mod opt;
pub mod oracle;
pub mod par;

pub use geom::{ProjLine, ProjPoint};
pub use incidence::{BipartiteConfiguration, Configuration, PierceMode};
