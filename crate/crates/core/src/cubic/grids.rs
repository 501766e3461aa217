use std::collections::BTreeSet;

use super::{ChaslesInstance, CubicError};
use crate::geom::{collinear, join, ProjPoint};
use crate::incidence::LabeledPoints;

/// A point of a labeled configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointRef {
    /// `x_i`, index in cyclic order.
    X(usize),
    /// `r_k`, by residue.
    R(usize),
}

impl std::fmt::Display for PointRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PointRef::X(i) => write!(f, "x_{i}"),
            PointRef::R(k) => write!(f, "r_{k}"),
        }
    }
}

/// Six structural lines, each through `x_a`, `x_b` and `r_k`; the first three
/// form one family, the last three the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub lines: [(usize, usize, usize); 6],
}

impl GridSpec {
    fn from_offsets(m: usize, lines: [(i64, i64, i64); 6]) -> Self {
        let red = |v: i64| v.rem_euclid(m as i64) as usize;
        GridSpec { lines: lines.map(|(a, b, k)| (red(a), red(b), red(k))) }
    }

    fn refs(&self, t: usize) -> [PointRef; 3] {
        let (a, b, k) = self.lines[t];
        [PointRef::X(a), PointRef::X(b), PointRef::R(k)]
    }

    /// The designated meet of family-one line `a` and family-two line `b`.
    fn meet_ref(&self, a: usize, b: usize) -> Option<PointRef> {
        let (l, m) = (self.refs(a), self.refs(3 + b));
        let shared: Vec<PointRef> = l.iter().filter(|p| m.contains(p)).copied().collect();
        match shared.as_slice() {
            [p] => Some(*p),
            _ => None,
        }
    }

    /// The nine designated meets, or `None` if the spec is not a 3×3 grid.
    pub fn members(&self) -> Option<[PointRef; 9]> {
        let mut out = [PointRef::X(0); 9];
        for a in 0..3 {
            for b in 0..3 {
                out[3 * a + b] = self.meet_ref(a, b)?;
            }
        }
        let set: BTreeSet<PointRef> = out.iter().copied().collect();
        (set.len() == 9).then_some(out)
    }
}

/// A grid realized on a labeled configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridInstance {
    pub spec: GridSpec,
    pub members: [PointRef; 9],
    pub instance: ChaslesInstance,
}

fn resolve(lp: &LabeledPoints, p: PointRef) -> Result<&ProjPoint, CubicError> {
    match p {
        PointRef::X(i) => Ok(lp.x(i as i64)),
        PointRef::R(k) => lp.r(k as i64).ok_or_else(|| CubicError::DegenerateInstance(format!("no point labeled r_{k}"))),
    }
}

impl GridInstance {
    /// Builds the six lines, checks each stated triple is collinear and that
    /// the meets are the designated points.
    pub fn build(spec: GridSpec, lp: &LabeledPoints) -> Result<Self, CubicError> {
        let members = spec
            .members()
            .ok_or_else(|| CubicError::DegenerateInstance(format!("{:?} is not a 3x3 grid", spec.lines)))?;
        let mut lines = Vec::with_capacity(6);
        for t in 0..6 {
            let [xa, xb, rk] = spec.refs(t);
            let (pa, pb, pr) = (resolve(lp, xa)?, resolve(lp, xb)?, resolve(lp, rk)?);
            if pa == pb {
                return Err(CubicError::DegenerateInstance(format!("{xa} and {xb} coincide")));
            }
            if !collinear(pa, pb, pr) {
                return Err(CubicError::CollinearityMismatch(format!("{xa}, {xb}, {rk} are not collinear")));
            }
            lines.push(join(pa, pb)?);
        }
        let ls = [lines[0].clone(), lines[1].clone(), lines[2].clone()];
        let ms = [lines[3].clone(), lines[4].clone(), lines[5].clone()];
        let instance = ChaslesInstance::new(ls, ms)?;
        for a in 0..3 {
            for b in 0..3 {
                let want = resolve(lp, members[3 * a + b])?;
                if &instance.meets[a][b] != want {
                    return Err(CubicError::CollinearityMismatch(format!(
                        "line {a} of the first family meets line {b} of the second off {}",
                        members[3 * a + b]
                    )));
                }
            }
        }
        Ok(GridInstance { spec, members, instance })
    }
}

/// Lines `x_{n-2-i} x_{n-3-i} r_{5+2i}`, `x_{n-4-i} x_{n-5-i} r_{9+2i}`, `x_{n-1-i} x_{n-6-i} r_{7+2i}`
/// against `x_{n-3-i} x_{n-6-i} r_{9+2i}`, `x_{n-1-i} x_{n-4-i} r_{5+2i}`, `x_{n-2-i} x_{n-5-i} r_{7+2i}`.
pub fn claim1_spec(m: usize, i: i64) -> GridSpec {
    GridSpec::from_offsets(
        m,
        [
            (-2 - i, -3 - i, 5 + 2 * i),
            (-4 - i, -5 - i, 9 + 2 * i),
            (-1 - i, -6 - i, 7 + 2 * i),
            (-3 - i, -6 - i, 9 + 2 * i),
            (-1 - i, -4 - i, 5 + 2 * i),
            (-2 - i, -5 - i, 7 + 2 * i),
        ],
    )
}

/// Lines `x_{n-1-i} x_{n-6-i} r_{7+2i}`, `x_{n-2-i} x_{n-7-i} r_{9+2i}`, `x_{n-3-i} x_{n-5-i} r_{8+2i}`
/// against `x_{n-3-i} x_{n-6-i} r_{9+2i}`, `x_{n-2-i} x_{n-5-i} r_{7+2i}`, `x_{n-1-i} x_{n-7-i} r_{8+2i}`.
pub fn claim2_spec(m: usize, i: i64) -> GridSpec {
    GridSpec::from_offsets(
        m,
        [
            (-1 - i, -6 - i, 7 + 2 * i),
            (-2 - i, -7 - i, 9 + 2 * i),
            (-3 - i, -5 - i, 8 + 2 * i),
            (-3 - i, -6 - i, 9 + 2 * i),
            (-2 - i, -5 - i, 7 + 2 * i),
            (-1 - i, -7 - i, 8 + 2 * i),
        ],
    )
}

pub fn claim1_instance(i: i64, lp: &LabeledPoints) -> Result<GridInstance, CubicError> {
    GridInstance::build(claim1_spec(lp.modulus, i), lp)
}

pub fn claim2_instance(i: i64, lp: &LabeledPoints) -> Result<GridInstance, CubicError> {
    GridInstance::build(claim2_spec(lp.modulus, i), lp)
}

/// Every 3×3 grid formed by structural lines `x_a x_b r_{-(a+b)}` whose nine
/// designated meets are points of the labeled configuration.
///
/// Both families together pass through six `x` points, each line carrying
/// two; read off alternately the lines trace a hexagon on those six points,
/// and the grid condition asks that the line opposite each family-one line
/// carry the same `r`. Specs are deduplicated by member set.
pub fn structural_grids(lp: &LabeledPoints) -> Vec<GridSpec> {
    let m = lp.modulus;
    let has_r = |k: usize| lp.rs.contains_key(&k);
    let r_of = |a: usize, b: usize| (2 * m - (a + b) % m) % m;
    let mut seen: BTreeSet<[PointRef; 9]> = BTreeSet::new();
    let mut out = Vec::new();
    let mut subset = Vec::with_capacity(6);
    for_each_subset(m, 6, &mut subset, &mut |xs: &[usize]| {
        let first = xs[0];
        let mut rest = [xs[1], xs[2], xs[3], xs[4], xs[5]];
        permutations(&mut rest, 0, &mut |perm: &[usize; 5]| {
            if perm[0] > perm[4] {
                return;
            }
            let c = [first, perm[0], perm[1], perm[2], perm[3], perm[4]];
            let l = [(c[0], c[1]), (c[2], c[3]), (c[4], c[5])];
            // m-line t is opposite l-line t: (c3,c4) ⟂ (c0,c1), (c5,c0) ⟂ (c2,c3), (c1,c2) ⟂ (c4,c5)
            let mm = [(c[3], c[4]), (c[5], c[0]), (c[1], c[2])];
            let rl = l.map(|(a, b)| r_of(a, b));
            let rm = mm.map(|(a, b)| r_of(a, b));
            if rl != rm || rl[0] == rl[1] || rl[1] == rl[2] || rl[0] == rl[2] || !rl.iter().all(|&k| has_r(k)) {
                return;
            }
            let spec = GridSpec {
                lines: [
                    (l[0].0, l[0].1, rl[0]),
                    (l[1].0, l[1].1, rl[1]),
                    (l[2].0, l[2].1, rl[2]),
                    (mm[0].0, mm[0].1, rm[0]),
                    (mm[1].0, mm[1].1, rm[1]),
                    (mm[2].0, mm[2].1, rm[2]),
                ],
            };
            if let Some(mut members) = spec.members() {
                members.sort();
                if seen.insert(members) {
                    out.push(spec);
                }
            }
        });
    });
    out
}

fn for_each_subset(m: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    let start = cur.last().map_or(0, |&v| v + 1);
    for v in start..m {
        if m - v < k - cur.len() {
            break;
        }
        cur.push(v);
        for_each_subset(m, k, cur, f);
        cur.pop();
    }
}

fn permutations(items: &mut [usize; 5], at: usize, f: &mut impl FnMut(&[usize; 5])) {
    if at == items.len() {
        f(items);
        return;
    }
    for t in at..items.len() {
        items.swap(at, t);
        permutations(items, at + 1, f);
        items.swap(at, t);
    }
}
