use num_bigint::BigInt;
use num_traits::Zero;

use super::ConfigError;
use crate::geom::ProjPoint;
use crate::incidence::{Configuration, PierceMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    /// Last row `(0, 0, λ)`: preserves the line at infinity and betweenness.
    Affine,
    /// Any invertible matrix: preserves incidence only.
    Projective,
}

fn det(m: &[[BigInt; 3]; 3]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Applies `m` (acting on column vectors) to every point.
///
/// Projective maps can move segments across the line at infinity, so the
/// result of a projective map is always an incidence-mode configuration.
pub fn apply_map(config: &Configuration, m: &[[BigInt; 3]; 3], kind: MapKind) -> Result<Configuration, ConfigError> {
    if det(m).is_zero() {
        return Err(ConfigError::SingularMatrix);
    }
    let mode = match kind {
        MapKind::Affine => {
            if !(m[2][0].is_zero() && m[2][1].is_zero()) {
                return Err(ConfigError::InvalidInput("affine maps need last row (0, 0, λ)".into()));
            }
            config.mode()
        }
        MapKind::Projective => {
            if config.mode() != PierceMode::Incidence {
                log::debug!("projective map: downgrading {} to incidence", config.mode());
            }
            PierceMode::Incidence
        }
    };
    let map = |v: &[ProjPoint]| -> Vec<ProjPoint> {
        v.iter().map(|p| p.transform(m).expect("invertible map sends points to points")).collect()
    };
    Ok(Configuration::new(map(config.p()), map(config.r()), mode)?)
}
