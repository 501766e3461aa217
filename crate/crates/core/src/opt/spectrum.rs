use num_rational::BigRational;
use num_traits::Zero;

use super::OptError;
use crate::cubic::{conic_row, kernel};
use crate::geom::{collinear, convex_hull, count_directions, ProjPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UngarReport {
    pub directions: usize,
    /// `2⌊n/2⌋`.
    pub bound: usize,
    pub pass: bool,
    pub tight: bool,
}

/// Compares the number of directions spanned by `points` with the lower
/// bound `2⌊n/2⌋` for non-collinear sets.
pub fn ungar_check(points: &[ProjPoint]) -> Result<UngarReport, OptError> {
    let mut distinct = points.to_vec();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != points.len() {
        return Err(OptError::InvalidInput("points must be distinct".into()));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(OptError::InvalidInput("points must be finite".into()));
    }
    let non_collinear = points.len() >= 3
        && (2..points.len()).any(|k| (1..k).any(|j| !collinear(&points[0], &points[j], &points[k])));
    if !non_collinear {
        return Err(OptError::CollinearInput);
    }
    let directions = count_directions(points);
    let bound = 2 * (points.len() / 2);
    Ok(UngarReport { directions, bound, pass: directions >= bound, tight: directions == bound })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JamisonVerdict {
    /// Exactly `n` directions and an affine image of a regular polygon with
    /// `x_{i+1} + x_{i-1} - 2g = λ (x_i - g)`.
    AffineRegular { lambda: BigRational },
    /// Exactly `n` directions, yet the recurrence fails. Impossible for
    /// sets in general position; reported rather than hidden.
    ExtremalNotRegular,
    /// More than `n` directions.
    NotExtremal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JamisonReport {
    pub n: usize,
    pub directions: usize,
    pub verdict: JamisonVerdict,
    /// Whether a conic passes through all points.
    pub on_conic: bool,
}

fn regular_lambda(p: &[ProjPoint]) -> Option<BigRational> {
    let n = p.len();
    let hull = convex_hull(p).ok()?;
    if hull.len() != n {
        return None;
    }
    let aff: Vec<(BigRational, BigRational)> = hull.iter().map(|&i| p[i].to_affine().expect("finite")).collect();
    let count = BigRational::from_integer(n.into());
    let gx = aff.iter().map(|a| a.0.clone()).sum::<BigRational>() / &count;
    let gy = aff.iter().map(|a| a.1.clone()).sum::<BigRational>() / &count;
    let rel: Vec<(BigRational, BigRational)> = aff.iter().map(|(x, y)| (x - &gx, y - &gy)).collect();
    let lhs = |i: usize| {
        let (a, b) = (&rel[(i + 1) % n], &rel[(i + n - 1) % n]);
        (&a.0 + &b.0, &a.1 + &b.1)
    };
    let (l0, r0) = (lhs(0), &rel[0]);
    let lambda = if !r0.0.is_zero() { &l0.0 / &r0.0 } else { &l0.1 / &r0.1 };
    (0..n)
        .all(|i| {
            let (l, r) = (lhs(i), &rel[i]);
            l.0 == &lambda * &r.0 && l.1 == &lambda * &r.1
        })
        .then_some(lambda)
}

/// Checks whether a general-position set spanning exactly `n` directions is
/// an affine image of a regular `n`-gon, walking the hull in order.
pub fn jamison_check(p: &[ProjPoint]) -> Result<JamisonReport, OptError> {
    if let Some(t) = crate::geom::general_position_violation(p) {
        return Err(OptError::GeneralPositionViolation(t));
    }
    if p.len() < 3 {
        return Err(OptError::CollinearInput);
    }
    if p.iter().any(|x| !x.is_finite()) {
        return Err(OptError::InvalidInput("points must be finite".into()));
    }
    let n = p.len();
    let directions = count_directions(p);
    let verdict = if directions != n {
        JamisonVerdict::NotExtremal
    } else {
        match regular_lambda(p) {
            Some(lambda) => JamisonVerdict::AffineRegular { lambda },
            None => JamisonVerdict::ExtremalNotRegular,
        }
    };
    let rows: Vec<_> = p.iter().map(conic_row).collect();
    let on_conic = !kernel(&rows, 6).is_empty();
    Ok(JamisonReport { n, directions, verdict, on_conic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::{gen_affine_regular, gen_random_general_position};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn ungar_on_polygons() {
        let sq = gen_affine_regular(4).unwrap();
        let r = ungar_check(sq.p()).unwrap();
        assert_eq!((r.directions, r.bound, r.pass, r.tight), (4, 4, true, true));
        let hex = gen_affine_regular(6).unwrap();
        assert!(ungar_check(hex.p()).unwrap().tight);
        let line: Vec<_> = (0..4).map(|i| ProjPoint::affine(i, 2 * i)).collect();
        assert_eq!(ungar_check(&line), Err(OptError::CollinearInput));
    }

    #[test]
    fn jamison_on_polygons() {
        for (n, lambda) in [(3, -1), (4, 0), (6, 1)] {
            let c = gen_affine_regular(n).unwrap();
            let r = jamison_check(c.p()).unwrap();
            assert_eq!(r.verdict, JamisonVerdict::AffineRegular { lambda: q(lambda) }, "n = {n}");
            assert!(r.on_conic);
        }
    }

    #[test]
    fn jamison_on_random_sets() {
        let p = gen_random_general_position(6, 20, 7).unwrap();
        let r = jamison_check(&p).unwrap();
        assert!(r.directions > 6);
        assert_eq!(r.verdict, JamisonVerdict::NotExtremal);
    }
}
