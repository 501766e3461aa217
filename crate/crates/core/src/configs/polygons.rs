use super::ConfigError;
use crate::geom::{direction_set, ProjPoint};
use crate::incidence::{Configuration, PierceMode};

fn points(v: &[(i64, i64)]) -> Vec<ProjPoint> {
    v.iter().map(|&(x, y)| ProjPoint::affine(x, y)).collect()
}

/// An integer affine image of the regular `n`-gon with `R` the `n` chord
/// directions on the line at infinity. Only `n ∈ {3, 4, 6}` has exact
/// rational vertices.
pub fn gen_affine_regular(n: usize) -> Result<Configuration, ConfigError> {
    let p = match n {
        3 => points(&[(0, 0), (1, 0), (0, 1)]),
        4 => points(&[(1, 0), (0, 1), (-1, 0), (0, -1)]),
        6 => points(&[(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]),
        _ => return Err(ConfigError::UnsupportedN(n)),
    };
    let r: Vec<ProjPoint> = direction_set(&p).into_iter().map(|d| d.into_point()).collect();
    debug_assert_eq!(r.len(), n);
    Ok(Configuration::new(p, r, PierceMode::OutsideSegment)?)
}

/// Point sets of size `n ∈ {2, 4}` pierced by `n - 1` points.
pub fn gen_sharpness_example(n: usize) -> Result<Configuration, ConfigError> {
    let (p, r) = match n {
        2 => (points(&[(0, 0), (1, 0)]), vec![ProjPoint::affine(2, 0)]),
        // unit square and its three diagonal points
        4 => (
            points(&[(0, 0), (1, 0), (1, 1), (0, 1)]),
            vec![
                ProjPoint::new(1, 1, 2).expect("nonzero"),
                ProjPoint::direction(1, 0).expect("nonzero"),
                ProjPoint::direction(0, 1).expect("nonzero"),
            ],
        ),
        _ => return Err(ConfigError::UnsupportedN(n)),
    };
    Ok(Configuration::new(p, r, PierceMode::Incidence)?)
}
