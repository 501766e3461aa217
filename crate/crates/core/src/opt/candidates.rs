use std::collections::BTreeMap;

use super::OptError;
use crate::geom::{general_position_violation, incident, join, meet, strictly_between, ProjLine, ProjPoint};
use crate::incidence::PierceMode;

/// Constraints are stored as bits of a `u128`.
pub const MAX_CONSTRAINTS: usize = 128;

/// The determined line through `p[i]` and `p[j]`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub i: usize,
    pub j: usize,
    pub line: ProjLine,
}

/// Candidate piercing points and the constraints each one covers.
///
/// Candidates are sorted by decreasing coverage, ties by coordinates, and
/// each covers at least two constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSet {
    pub mode: PierceMode,
    pub p: Vec<ProjPoint>,
    pub constraints: Vec<Constraint>,
    pub points: Vec<ProjPoint>,
    pub cover: Vec<u128>,
}

impl CandidateSet {
    pub fn all_constraints(&self) -> u128 {
        full_mask(self.constraints.len())
    }
}

pub(crate) fn full_mask(len: usize) -> u128 {
    if len == MAX_CONSTRAINTS {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

fn covers(c: &Constraint, p: &[ProjPoint], q: &ProjPoint, mode: PierceMode) -> bool {
    incident(q, &c.line)
        && match mode {
            PierceMode::Incidence => true,
            PierceMode::OutsideSegment => !strictly_between(&p[c.i], &p[c.j], q).expect("finite endpoints"),
        }
}

pub fn build_candidates(p: &[ProjPoint], mode: PierceMode) -> Result<CandidateSet, OptError> {
    if let Some(t) = general_position_violation(p) {
        return Err(OptError::GeneralPositionViolation(t));
    }
    if mode == PierceMode::OutsideSegment {
        if let Some(i) = p.iter().position(|x| !x.is_finite()) {
            return Err(OptError::InfinitePoint(i));
        }
    }
    let n = p.len();
    if n * n.saturating_sub(1) / 2 > MAX_CONSTRAINTS {
        return Err(OptError::TooManyPoints(n));
    }
    let mut constraints = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            constraints.push(Constraint { i, j, line: join(&p[i], &p[j]).expect("distinct points") });
        }
    }
    let mut seen: BTreeMap<ProjPoint, u128> = BTreeMap::new();
    for (a, ca) in constraints.iter().enumerate() {
        for cb in &constraints[a + 1..] {
            let q = meet(&ca.line, &cb.line).expect("distinct lines");
            if p.contains(&q) || seen.contains_key(&q) {
                continue;
            }
            let mask = constraints
                .iter()
                .enumerate()
                .filter(|(_, c)| covers(c, p, &q, mode))
                .fold(0u128, |m, (k, _)| m | 1 << k);
            seen.insert(q, mask);
        }
    }
    let mut cands: Vec<(ProjPoint, u128)> = seen.into_iter().filter(|(_, m)| m.count_ones() >= 2).collect();
    // stable sort keeps coordinate order among equal coverage
    cands.sort_by_key(|c| std::cmp::Reverse(c.1.count_ones()));
    let (points, cover) = cands.into_iter().unzip();
    Ok(CandidateSet { mode, p: p.to_vec(), constraints, points, cover })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::{gen_affine_regular, gen_random_general_position};

    fn square() -> Vec<ProjPoint> {
        [(0, 0), (1, 0), (1, 1), (0, 1)].iter().map(|&(x, y)| ProjPoint::affine(x, y)).collect()
    }

    #[test]
    fn square_candidates_are_the_diagonal_points() {
        let cs = build_candidates(&square(), PierceMode::Incidence).unwrap();
        assert_eq!(cs.constraints.len(), 6);
        assert_eq!(cs.points.len(), 3);
        assert!(cs.cover.iter().all(|m| m.count_ones() == 2));
        assert!(cs.points.contains(&ProjPoint::new(1, 1, 2).unwrap()));
        // in outside-segment mode the centre is between both diagonals
        let cs = build_candidates(&square(), PierceMode::OutsideSegment).unwrap();
        assert_eq!(cs.points.len(), 2);
    }

    #[test]
    fn hexagon_directions_partition_the_lines() {
        let c = gen_affine_regular(6).unwrap();
        let cs = build_candidates(c.p(), PierceMode::Incidence).unwrap();
        assert_eq!(cs.cover[0].count_ones(), 3);
        // the six directions partition the fifteen lines
        let union = c.r().iter().fold(0u128, |acc, r| {
            let k = cs.points.iter().position(|q| q == r).unwrap();
            assert_eq!(acc & cs.cover[k], 0);
            acc | cs.cover[k]
        });
        assert_eq!(union, cs.all_constraints());
    }

    #[test]
    fn coverage_is_at_most_half() {
        for n in [5, 6, 7] {
            for seed in 0..5 {
                let p = gen_random_general_position(n, 5, seed).unwrap();
                let cs = build_candidates(&p, PierceMode::Incidence).unwrap();
                assert!(cs.cover.iter().all(|m| m.count_ones() as usize <= n / 2));
            }
        }
    }

    #[test]
    fn preconditions() {
        let mut p = square();
        p.push(ProjPoint::affine(2, 0));
        assert!(matches!(build_candidates(&p, PierceMode::Incidence), Err(OptError::GeneralPositionViolation(_))));
        let p = vec![ProjPoint::affine(0, 0), ProjPoint::direction(1, 1).unwrap()];
        assert_eq!(build_candidates(&p, PierceMode::OutsideSegment), Err(OptError::InfinitePoint(1)));
        assert!(build_candidates(&p, PierceMode::Incidence).is_ok());
    }
}
