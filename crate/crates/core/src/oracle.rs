//! Independent brute-force re-computations of the fast paths.
//!
//! Everything here is deliberately naive: affine rational arithmetic instead
//! of canonical homogeneous triples, Gauss–Jordan over the rationals instead
//! of fraction-free elimination, and exhaustive subset enumeration instead of
//! branch and bound. [`facts`] collects fast-path results, [`oracle_facts`]
//! recomputes them, and [`diff`] lists disagreements.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cubic::{kernel, monomial_matrix, Cubic};
use crate::geom::{convex_hull, ProjPoint};
use crate::incidence::{
    extract_bipartite_structure, extract_cyclic_structure, verify_bipartite_piercing, verify_piercing, PierceMode,
};
use crate::io::{ConfigDocument, PointSets};
use crate::opt::min_pierce;

/// Largest `n` for which [`exhaustive_min_pierce`] is allowed.
pub const EXHAUSTIVE_MAX_N: usize = 5;

type Q = BigRational;

fn q(v: &BigInt) -> Q {
    Q::from_integer(v.clone())
}

fn det3(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> BigInt {
    let [a0, a1, a2] = a.coords();
    let [b0, b1, b2] = b.coords();
    let [c0, c1, c2] = c.coords();
    a0 * b1 * c2 + a1 * b2 * c0 + a2 * b0 * c1 - a2 * b1 * c0 - a1 * b0 * c2 - a0 * b2 * c1
}

fn on_line(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> bool {
    det3(a, b, c).is_zero()
}

fn affine(p: &ProjPoint) -> Option<(Q, Q)> {
    let [x, y, z] = p.coords();
    (!z.is_zero()).then(|| (q(x) / q(z), q(y) / q(z)))
}

/// `m` on the line through finite `a`, `b` lies strictly inside the segment.
fn inside(a: &ProjPoint, b: &ProjPoint, m: &ProjPoint) -> bool {
    let (Some(a), Some(b), Some(m)) = (affine(a), affine(b), affine(m)) else {
        return false;
    };
    // parameter along whichever axis the segment is not constant in
    let t = if a.0 != b.0 { (&m.0 - &a.0) / (&b.0 - &a.0) } else { (&m.1 - &a.1) / (&b.1 - &a.1) };
    t.is_positive() && t < Q::one()
}

fn pierces(a: &ProjPoint, b: &ProjPoint, r: &ProjPoint, mode: PierceMode) -> bool {
    on_line(a, b, r)
        && match mode {
            PierceMode::Incidence => true,
            PierceMode::OutsideSegment => !inside(a, b, r),
        }
}

/// Pairs `(i, j)`, `i < j`, with no witness in `r`. With `mixed`, only pairs
/// with `i < mixed <= j` are scanned.
pub fn naive_violations(p: &[ProjPoint], r: &[ProjPoint], mode: PierceMode, mixed: Option<usize>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if mixed.is_some_and(|m| !(i < m && m <= j)) {
                continue;
            }
            if !r.iter().any(|x| pierces(&p[i], &p[j], x, mode)) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Hull vertices: points not inside or on the boundary of a triangle of
/// other points and not strictly inside a segment of two others.
pub fn naive_hull(p: &[ProjPoint]) -> Option<BTreeSet<usize>> {
    let a: Vec<(Q, Q)> = p.iter().map(affine).collect::<Option<_>>()?;
    let cross = |o: &(Q, Q), u: &(Q, Q), v: &(Q, Q)| (&u.0 - &o.0) * (&v.1 - &o.1) - (&u.1 - &o.1) * (&v.0 - &o.0);
    let n = a.len();
    let mut out = BTreeSet::new();
    'point: for x in 0..n {
        for i in (0..n).filter(|&i| i != x) {
            for j in (0..n).filter(|&j| j != x && j != i) {
                for k in (0..n).filter(|&k| k != x && k != i && k != j) {
                    let s = [cross(&a[i], &a[j], &a[x]), cross(&a[j], &a[k], &a[x]), cross(&a[k], &a[i], &a[x])];
                    let all_pos = s.iter().all(|v| !v.is_negative());
                    let all_neg = s.iter().all(|v| !v.is_positive());
                    if (all_pos || all_neg) && !cross(&a[i], &a[j], &a[k]).is_zero() {
                        continue 'point;
                    }
                }
            }
        }
        out.insert(x);
    }
    Some(out)
}

/// Rank and null-space dimension by Gauss–Jordan elimination over the rationals.
pub fn rational_rank(rows: &[Vec<BigInt>], ncols: usize) -> usize {
    let mut m: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(q).collect()).collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, piv);
        let inv = Q::one() / &m[rank][col];
        for v in m[rank].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot) {
                    *v -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn monomials(p: &ProjPoint) -> Vec<BigInt> {
    let [x, y, z] = p.coords();
    let mut out = Vec::with_capacity(10);
    for a in (0..=3u32).rev() {
        for b in (0..=3 - a).rev() {
            let c = 3 - a - b;
            out.push(x.pow(a) * y.pow(b) * z.pow(c));
        }
    }
    out
}

pub fn cubic_kernel_dim(points: &[ProjPoint]) -> usize {
    let rows: Vec<Vec<BigInt>> = points.iter().map(monomials).collect();
    10 - rational_rank(&rows, 10)
}

pub fn cubic_vanishes(c: &Cubic, points: &[ProjPoint]) -> bool {
    points.iter().all(|p| monomials(p).iter().zip(c.coeffs()).map(|(m, a)| m * a).sum::<BigInt>().is_zero())
}

/// Does `x_i, x_j, r_k collinear <=> i + j + k = 0 (mod m)` hold for every
/// scanned pair under the given labeling? With `bipartite`, only pairs of
/// opposite parity are scanned.
pub fn triple_scan(points: &[ProjPoint], r: &[ProjPoint], order: &[usize], labels: &[usize], bipartite: bool) -> bool {
    let m = order.len();
    let permutation = m == points.len() && order.iter().filter(|&&i| i < m).collect::<BTreeSet<_>>().len() == m;
    if m == 0 || !permutation || labels.len() != r.len() {
        return false;
    }
    for i in 0..m {
        for j in i + 1..m {
            if bipartite && (i + j) % 2 == 0 {
                continue;
            }
            for (k, rk) in r.iter().enumerate() {
                let expected = (i + j + labels[k]).is_multiple_of(m);
                if on_line(&points[order[i]], &points[order[j]], rk) != expected {
                    return false;
                }
            }
        }
    }
    true
}

fn meet_point(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint, d: &ProjPoint) -> Option<ProjPoint> {
    // line ab = a × b, line cd = c × d, meet = (a × b) × (c × d)
    let cross = |u: [BigInt; 3], v: [BigInt; 3]| {
        [&u[1] * &v[2] - &u[2] * &v[1], &u[2] * &v[0] - &u[0] * &v[2], &u[0] * &v[1] - &u[1] * &v[0]]
    };
    let l1 = cross(a.coords().clone(), b.coords().clone());
    let l2 = cross(c.coords().clone(), d.coords().clone());
    ProjPoint::from_triple(cross(l1, l2)).ok()
}

/// Minimum of `|S| + uncovered` over every subset `S` of pairwise meets.
pub fn exhaustive_min_pierce(p: &[ProjPoint], mode: PierceMode) -> Option<usize> {
    if p.len() > EXHAUSTIVE_MAX_N {
        return None;
    }
    let pairs: Vec<(usize, usize)> = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).collect();
    let mut cands = BTreeSet::new();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in &pairs[a + 1..] {
            if let Some(m) = meet_point(&p[i], &p[j], &p[k], &p[l]) {
                if !p.contains(&m) {
                    cands.insert(m);
                }
            }
        }
    }
    let masks: Vec<u32> = cands
        .iter()
        .map(|c| pairs.iter().enumerate().filter(|(_, &(i, j))| pierces(&p[i], &p[j], c, mode)).fold(0, |m, (e, _)| m | 1 << e))
        .collect();
    let full = (1u32 << pairs.len()) - 1;
    (0u64..1 << masks.len())
        .map(|s| {
            let covered = (0..masks.len()).filter(|&c| s >> c & 1 == 1).fold(0, |m, c| m | masks[c]);
            s.count_ones() as usize + (full & !covered).count_ones() as usize
        })
        .min()
}

/// Results that both the fast paths and the oracle compute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facts {
    pub violations: Vec<(usize, usize)>,
    /// Hull vertex indices of `P` (or `B ∪ G`), when all points are finite.
    pub hull: Option<BTreeSet<usize>>,
    /// `(order, labels)` of the extracted structure. The oracle reports the
    /// claimed labeling back only if its triple scan confirms it.
    pub structure: Option<(Vec<usize>, Vec<usize>)>,
    pub cubic_kernel_dim: usize,
    pub stored_cubic_vanishes: Option<bool>,
    pub optimum: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub check: &'static str,
    pub fast: String,
    pub oracle: String,
}

fn parts(doc: &ConfigDocument) -> (Vec<ProjPoint>, &[ProjPoint], Option<usize>) {
    match &doc.sets {
        PointSets::Plain(c) => (c.p().to_vec(), c.r(), None),
        PointSets::Bipartite(bc) => (bc.colored_points(), bc.r(), Some(bc.b().len())),
    }
}

/// Fast-path results. `exhaustive` also runs the exact optimizer.
pub fn facts(doc: &ConfigDocument, exhaustive: bool) -> Facts {
    let (points, r, _) = parts(doc);
    let (violations, structure) = match &doc.sets {
        PointSets::Plain(c) => {
            let v = verify_piercing(c, doc.mode).map(|rep| rep.violations).unwrap_or_default();
            let st = (doc.mode == PierceMode::OutsideSegment)
                .then(|| extract_cyclic_structure(c).ok())
                .flatten()
                .map(|s| (s.order, s.labels));
            (v, st)
        }
        PointSets::Bipartite(bc) => {
            let v = verify_bipartite_piercing(bc).map(|rep| rep.violations).unwrap_or_default();
            (v, extract_bipartite_structure(bc).ok().map(|s| (s.order, s.labels)))
        }
    };
    let hull = points
        .iter()
        .all(ProjPoint::is_finite)
        .then(|| convex_hull(&points).ok().map(|h| h.into_iter().collect()))
        .flatten();
    let all: Vec<ProjPoint> = points.iter().chain(r).cloned().collect();
    Facts {
        violations,
        hull,
        structure,
        cubic_kernel_dim: kernel(&monomial_matrix(&all), 10).len(),
        stored_cubic_vanishes: doc.cubic.as_ref().map(|c| all.iter().all(|p| c.contains(p))),
        optimum: (exhaustive && matches!(doc.sets, PointSets::Plain(_))).then(|| min_pierce(&points, doc.mode).ok().map(|s| s.optimum)).flatten(),
    }
}

/// Oracle recomputation; the structure labeling to test is taken from `claimed`.
pub fn oracle_facts(doc: &ConfigDocument, claimed: &Facts, exhaustive: bool) -> Facts {
    let (points, r, mixed) = parts(doc);
    let all: Vec<ProjPoint> = points.iter().chain(r).cloned().collect();
    let structure = claimed
        .structure
        .as_ref()
        .filter(|(order, labels)| triple_scan(&points, r, order, labels, mixed.is_some()))
        .cloned();
    Facts {
        violations: naive_violations(&points, r, doc.mode, mixed),
        hull: naive_hull(&points),
        structure,
        cubic_kernel_dim: cubic_kernel_dim(&all),
        stored_cubic_vanishes: doc.cubic.as_ref().map(|c| cubic_vanishes(c, &all)),
        optimum: (exhaustive && matches!(doc.sets, PointSets::Plain(_))).then(|| exhaustive_min_pierce(&points, doc.mode)).flatten(),
    }
}

pub fn diff(fast: &Facts, oracle: &Facts) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let mut check = |name: &'static str, a: String, b: String| {
        if a != b {
            out.push(Mismatch { check: name, fast: a, oracle: b });
        }
    };
    check("piercing", format!("{:?}", fast.violations), format!("{:?}", oracle.violations));
    check("hull", format!("{:?}", fast.hull), format!("{:?}", oracle.hull));
    check("structure", format!("{:?}", fast.structure), format!("{:?}", oracle.structure));
    check("cubic_kernel", fast.cubic_kernel_dim.to_string(), oracle.cubic_kernel_dim.to_string());
    check("stored_cubic", format!("{:?}", fast.stored_cubic_vanishes), format!("{:?}", oracle.stored_cubic_vanishes));
    check("optimum", format!("{:?}", fast.optimum), format!("{:?}", oracle.optimum));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::{gen_random_general_position, load_fixture};
    use proptest::prelude::*;

    #[test]
    fn fixtures_agree() {
        for name in crate::configs::fixture_names() {
            let doc = load_fixture(name).unwrap();
            let exhaustive = matches!(&doc.sets, PointSets::Plain(c) if c.n() <= EXHAUSTIVE_MAX_N);
            let f = facts(&doc, exhaustive);
            assert_eq!(diff(&f, &oracle_facts(&doc, &f, exhaustive)), vec![], "{name}");
        }
    }

    #[test]
    fn patched_results_are_caught() {
        let doc = load_fixture("hexagon").unwrap();
        let f = facts(&doc, false);
        assert!(f.structure.is_some());
        let mut bad = f.clone();
        bad.structure.as_mut().unwrap().1.swap(0, 1);
        let d = diff(&bad, &oracle_facts(&doc, &bad, false));
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].check, "structure");
        let mut bad = f.clone();
        bad.violations.push((0, 1));
        assert_eq!(diff(&bad, &oracle_facts(&doc, &f, false))[0].check, "piercing");
    }

    #[test]
    fn exhaustive_guardrail() {
        let p = gen_random_general_position(6, 5, 0).unwrap();
        assert_eq!(exhaustive_min_pierce(&p, PierceMode::Incidence), None);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn optimizer_matches_exhaustive_search(n in 2usize..=5, seed: u64, outside: bool) {
            let mode = if outside { PierceMode::OutsideSegment } else { PierceMode::Incidence };
            let p = gen_random_general_position(n, 3, seed).unwrap();
            prop_assert_eq!(Some(min_pierce(&p, mode).unwrap().optimum), exhaustive_min_pierce(&p, mode));
        }

        #[test]
        fn rational_rank_matches_bareiss(rows in proptest::collection::vec(proptest::collection::vec(-4i64..5, 5), 0..7)) {
            let m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
            prop_assert_eq!(rational_rank(&m, 5), crate::cubic::rank(&m, 5));
        }
    }
}
