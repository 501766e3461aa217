use std::collections::BTreeSet;

use super::{join, ProjLine, ProjPoint};

/// A point on the line at infinity, i.e. a parallel class of lines.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction(ProjPoint);

impl Direction {
    /// The point where `l` meets the line at infinity. `None` for the line
    /// at infinity itself.
    pub fn of_line(l: &ProjLine) -> Option<Self> {
        if l.is_at_infinity() {
            return None;
        }
        let [a, b, _] = l.coeffs();
        Some(Direction(ProjPoint::from_triple([b.clone(), -a.clone(), 0.into()]).expect("a or b nonzero")))
    }

    pub fn point(&self) -> &ProjPoint {
        &self.0
    }

    pub fn into_point(self) -> ProjPoint {
        self.0
    }
}

/// Directions of all lines determined by `points`, pairs of equal points skipped.
pub fn direction_set(points: &[ProjPoint]) -> BTreeSet<Direction> {
    let mut out = BTreeSet::new();
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            if let Ok(l) = join(p, q) {
                if let Some(d) = Direction::of_line(&l) {
                    out.insert(d);
                }
            }
        }
    }
    out
}

pub fn count_directions(points: &[ProjPoint]) -> usize {
    direction_set(points).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<ProjPoint> {
        v.iter().map(|&(x, y)| ProjPoint::affine(x, y)).collect()
    }

    #[test]
    fn direction_counts() {
        assert_eq!(count_directions(&pts(&[(0, 0), (3, 7)])), 1);
        // 6 chords of the square: (1,-1) twice, (1,1) twice, horizontal, vertical
        assert_eq!(count_directions(&pts(&[(1, 0), (0, 1), (-1, 0), (0, -1)])), 4);
        // 15 hexagon chords fall into 6 classes of size 2 or 3
        let hex = pts(&[(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]);
        let dirs = direction_set(&hex);
        assert_eq!(dirs.len(), 6);
        let expected: BTreeSet<Direction> = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1)]
            .iter()
            .map(|&(a, b)| Direction(ProjPoint::direction(a, b).unwrap()))
            .collect();
        assert_eq!(dirs, expected);
    }

    #[test]
    fn parallel_lines_share_direction() {
        let l1 = ProjLine::new(1, 2, 3).unwrap();
        let l2 = ProjLine::new(-2, -4, 7).unwrap();
        assert_eq!(Direction::of_line(&l1), Direction::of_line(&l2));
        assert_eq!(Direction::of_line(&ProjLine::at_infinity()), None);
    }
}
