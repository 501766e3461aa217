use std::collections::BTreeSet;

use super::{verify_piercing, Configuration, IncidenceError, PierceMode};
use crate::geom::{convex_hull, incident, join, orientation, side_of_line, Orientation, ProjLine, ProjPoint};

/// Tangent-line bookkeeping for the points of `R` outside the hull of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullAudit {
    /// Number of hull vertices.
    pub k: usize,
    /// Hull vertex indices into `P`, counterclockwise.
    pub hull: Vec<usize>,
    /// Indices of `R` strictly outside the hull (points at infinity included).
    pub r_outside: Vec<usize>,
    /// Tangents from `R_outside` that touch the hull at a single vertex.
    pub a: usize,
    /// Edge-supporting lines that carry exactly one point of `R`.
    pub b: usize,
    /// Edge-supporting lines that carry exactly two points of `R`.
    pub c: usize,
    /// Number of `R` points on each edge line, in hull order.
    pub edge_r_counts: Vec<usize>,
}

impl HullAudit {
    /// `a + b + 2c = 2|R_outside|` and `b + c = k`.
    pub fn identities_hold(&self) -> bool {
        self.a + self.b + 2 * self.c == 2 * self.r_outside.len() && self.b + self.c == self.k
    }

    /// `c = 0` and `|R_outside| = k`: the state forced by the outside-segment hypothesis.
    pub fn is_tight(&self) -> bool {
        self.c == 0 && self.r_outside.len() == self.k
    }
}

fn outside_hull(p: &[ProjPoint], hull: &[usize], r: &ProjPoint) -> bool {
    if r.at_infinity() {
        return true;
    }
    (0..hull.len()).any(|t| {
        let (u, v) = (&p[hull[t]], &p[hull[(t + 1) % hull.len()]]);
        orientation(u, v, r).expect("finite") == Orientation::Clockwise
    })
}

/// Whether `line` leaves all of `p` in one closed half-plane.
fn supports(line: &ProjLine, p: &[ProjPoint]) -> bool {
    let sides: BTreeSet<i8> = p.iter().map(|q| side_of_line(line, q)).filter(|&s| s != 0).collect();
    sides.len() <= 1
}

pub fn hull_audit(config: &Configuration) -> Result<HullAudit, IncidenceError> {
    let report = verify_piercing(config, PierceMode::OutsideSegment)?;
    if !report.holds() {
        return Err(IncidenceError::HypothesisViolated(report.violations.len()));
    }
    let (p, r) = (config.p(), config.r());
    if p.len() < 3 {
        return Err(IncidenceError::InvalidConfiguration("hull audit needs at least 3 points".into()));
    }
    let hull = convex_hull(p)?;
    let k = hull.len();
    let r_outside: Vec<usize> = (0..r.len()).filter(|&i| outside_hull(p, &hull, &r[i])).collect();

    let mut a = 0;
    for &ri in &r_outside {
        let mut tangents: BTreeSet<ProjLine> = BTreeSet::new();
        for &v in &hull {
            let line = join(&p[v], &r[ri])?;
            if supports(&line, p) {
                tangents.insert(line);
            }
        }
        a += tangents.iter().filter(|l| p.iter().filter(|q| incident(q, l)).count() == 1).count();
    }

    let edge_r_counts: Vec<usize> = (0..k)
        .map(|t| {
            let line = join(&p[hull[t]], &p[hull[(t + 1) % k]]).expect("distinct hull vertices");
            r.iter().filter(|q| incident(q, &line)).count()
        })
        .collect();
    let b = edge_r_counts.iter().filter(|&&c| c == 1).count();
    let c = edge_r_counts.iter().filter(|&&c| c == 2).count();
    Ok(HullAudit { k, hull, r_outside, a, b, c, edge_r_counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_with_directions() {
        let p = vec![ProjPoint::affine(1, 0), ProjPoint::affine(0, 1), ProjPoint::affine(-1, 0), ProjPoint::affine(0, -1)];
        let r = [(1, 1), (1, -1), (1, 0), (0, 1)].iter().map(|&(a, b)| ProjPoint::direction(a, b).unwrap()).collect();
        let audit = hull_audit(&Configuration::new(p, r, PierceMode::OutsideSegment).unwrap()).unwrap();
        assert_eq!((audit.k, audit.r_outside.len(), audit.a, audit.b, audit.c), (4, 4, 4, 4, 0));
        assert!(audit.identities_hold() && audit.is_tight());
    }

    #[test]
    fn finite_r_inside_is_not_outside() {
        // P: triangle, R: the three edge directions plus an interior point
        let p = vec![ProjPoint::affine(0, 0), ProjPoint::affine(4, 0), ProjPoint::affine(0, 4)];
        let mut r: Vec<ProjPoint> =
            [(1, 0), (0, 1), (1, -1)].iter().map(|&(a, b)| ProjPoint::direction(a, b).unwrap()).collect();
        r.push(ProjPoint::affine(1, 1));
        r.push(ProjPoint::affine(8, 0));
        let audit = hull_audit(&Configuration::new(p, r, PierceMode::OutsideSegment).unwrap()).unwrap();
        assert_eq!(audit.r_outside, vec![0, 1, 2, 4]);
        // edge y = 0 carries (1:0:0) and (8, 0)
        assert_eq!(audit.edge_r_counts, vec![2, 1, 1]);
        assert_eq!(audit.c, 1);
        assert!(audit.identities_hold());
        assert!(!audit.is_tight());
    }
}
