use num_rational::BigRational;

use super::{collinear, orientation, GeomError, Orientation, ProjPoint};

/// Indices of the convex hull vertices, counterclockwise, starting at the
/// lexicographically smallest point `(x, then y)`.
///
/// Points in the relative interior of hull edges are not vertices. Duplicate
/// points are reported once (first occurrence); a collinear input yields its
/// two extremes.
pub fn convex_hull(points: &[ProjPoint]) -> Result<Vec<usize>, GeomError> {
    if points.is_empty() {
        return Err(GeomError::InvalidInput("convex hull of an empty set".into()));
    }
    let keys: Vec<(BigRational, BigRational)> = points
        .iter()
        .map(|p| p.to_affine().ok_or_else(|| GeomError::InvalidInput(format!("{p} is at infinity"))))
        .collect::<Result<_, _>>()?;
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]).then(a.cmp(&b)));
    idx.dedup_by(|a, b| points[*a] == points[*b]);
    if idx.len() <= 2 {
        return Ok(idx);
    }

    let ccw = |a: usize, b: usize, c: usize| {
        orientation(&points[a], &points[b], &points[c]).expect("finite points") == Orientation::CounterClockwise
    };
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2 && !ccw(lower[lower.len() - 2], lower[lower.len() - 1], i) {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2 && !ccw(upper[upper.len() - 2], upper[upper.len() - 1], i) {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Ok(lower)
}

/// First collinear triple `(i, j, k)` with `i < j < k`, if any.
pub fn general_position_violation(points: &[ProjPoint]) -> Option<[usize; 3]> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if collinear(&points[i], &points[j], &points[k]) {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}

pub fn is_general_position(points: &[ProjPoint]) -> bool {
    general_position_violation(points).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn pts(v: &[(i64, i64)]) -> Vec<ProjPoint> {
        v.iter().map(|&(x, y)| ProjPoint::affine(x, y)).collect()
    }

    /// Quadratic-per-point oracle: `p` is a vertex iff some directed edge
    /// `(p, q)` has every other point strictly left of it or strictly inside it.
    fn brute_hull(points: &[ProjPoint]) -> BTreeSet<ProjPoint> {
        let mut out = BTreeSet::new();
        let distinct: Vec<&ProjPoint> = points.iter().collect::<BTreeSet<_>>().into_iter().collect();
        if distinct.len() <= 2 {
            return distinct.into_iter().cloned().collect();
        }
        for p in &distinct {
            for q in &distinct {
                if p == q {
                    continue;
                }
                let edge = distinct.iter().filter(|r| *r != p && *r != q).all(|r| {
                    match orientation(p, q, r).unwrap() {
                        Orientation::CounterClockwise => true,
                        Orientation::Clockwise => false,
                        Orientation::Collinear => super::super::strictly_between(p, q, r).unwrap(),
                    }
                });
                if edge {
                    out.insert((*p).clone());
                    out.insert((*q).clone());
                }
            }
        }
        out
    }

    #[test]
    fn square_with_center() {
        let p = pts(&[(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]);
        assert_eq!(convex_hull(&p).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn collinear_and_tiny_inputs() {
        let p = pts(&[(1, 1), (0, 0), (2, 2)]);
        assert_eq!(convex_hull(&p).unwrap(), vec![1, 2]);
        assert_eq!(convex_hull(&pts(&[(5, 5)])).unwrap(), vec![0]);
        assert_eq!(convex_hull(&pts(&[(1, 0), (1, 0), (0, 0)])).unwrap(), vec![2, 0]);
        assert!(convex_hull(&[]).is_err());
        assert!(convex_hull(&[ProjPoint::direction(1, 0).unwrap()]).is_err());
    }

    #[test]
    fn general_position_examples() {
        let square = pts(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert!(is_general_position(&square));
        let mut with_center = square.clone();
        with_center.push(ProjPoint::affine(1, 1));
        assert_eq!(general_position_violation(&with_center), Some([0, 2, 4]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]
        #[test]
        fn hull_matches_brute_force(coords in proptest::collection::vec((-6i64..6, -6i64..6), 1..20)) {
            let p = pts(&coords);
            let hull = convex_hull(&p).unwrap();
            let fast: BTreeSet<ProjPoint> = hull.iter().map(|&i| p[i].clone()).collect();
            prop_assert_eq!(fast.len(), hull.len());
            prop_assert_eq!(fast, brute_hull(&p));
            for w in 0..hull.len() {
                if hull.len() >= 3 {
                    let (a, b, c) = (&p[hull[w]], &p[hull[(w + 1) % hull.len()]], &p[hull[(w + 2) % hull.len()]]);
                    prop_assert_eq!(orientation(a, b, c).unwrap(), Orientation::CounterClockwise);
                }
            }
        }
    }
}
