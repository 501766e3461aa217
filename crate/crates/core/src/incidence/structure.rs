use std::collections::BTreeMap;

use super::{
    verify_bipartite_piercing, verify_piercing, BipartiteConfiguration, Color, Configuration, IncidenceError, PierceMode,
};
use crate::geom::{collinear, convex_hull, incident, join, side_of_line, ProjPoint};

/// A cyclic labeling of `P` (convex order) and `R` (residues) with
/// `x_i, x_j, r_k collinear <=> i + j + k = 0 (mod modulus)`.
///
/// For bipartite configurations the modulus is `2n`, the cyclic order runs
/// over blue and green points together, and only odd residues label `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicStructure {
    pub modulus: usize,
    /// `order[i]` is the index of `x_i` in the underlying point list.
    pub order: Vec<usize>,
    /// `labels[r]` is the residue assigned to `R[r]`.
    pub labels: Vec<usize>,
}

impl CyclicStructure {
    /// Index into `R` of the point labeled `residue`.
    pub fn r_index(&self, residue: usize) -> Option<usize> {
        let residue = residue % self.modulus;
        self.labels.iter().position(|&l| l == residue)
    }

    /// Materializes the labeled points.
    pub fn labeled(&self, points: &[ProjPoint], r: &[ProjPoint]) -> LabeledPoints {
        LabeledPoints {
            modulus: self.modulus,
            xs: self.order.iter().map(|&i| points[i].clone()).collect(),
            rs: self.labels.iter().zip(r).map(|(&l, p)| (l, p.clone())).collect(),
        }
    }

    /// Swaps the residues of two points of `R`.
    pub fn with_swapped_labels(mut self, r1: usize, r2: usize) -> Self {
        self.labels.swap(r1, r2);
        self
    }
}

/// `x_0..x_{m-1}` in cyclic order and the points of `R` keyed by residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoints {
    pub modulus: usize,
    pub xs: Vec<ProjPoint>,
    pub rs: BTreeMap<usize, ProjPoint>,
}

impl LabeledPoints {
    /// `x_i` with the index reduced mod the modulus.
    pub fn x(&self, i: i64) -> &ProjPoint {
        &self.xs[i.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn r(&self, k: i64) -> Option<&ProjPoint> {
        self.rs.get(&(k.rem_euclid(self.modulus as i64) as usize))
    }
}

/// Groups the pairs `(i, j)` (positions in `order`) by `(i + j) mod m` and
/// returns, for each residue class that has pairs, the `R` points incident
/// to every line in the class.
fn common_points(
    points: &[ProjPoint],
    r: &[ProjPoint],
    order: &[usize],
    modulus: usize,
    class_filter: impl Fn(usize) -> bool,
) -> Result<Vec<(usize, usize)>, IncidenceError> {
    let m = order.len();
    let mut out = Vec::new();
    for s in (0..modulus).filter(|&s| class_filter(s)) {
        let mut common: Option<Vec<usize>> = None;
        for i in 0..m {
            for j in i + 1..m {
                if (i + j) % modulus != s {
                    continue;
                }
                let line = join(&points[order[i]], &points[order[j]])?;
                let on: Vec<usize> = (0..r.len()).filter(|&k| incident(&r[k], &line)).collect();
                common = Some(match common {
                    None => on,
                    Some(c) => c.into_iter().filter(|k| on.contains(k)).collect(),
                });
            }
        }
        let Some(common) = common else { continue };
        match common.as_slice() {
            [] => {
                return Err(IncidenceError::InconsistentLabeling(format!(
                    "no point of R lies on every line x_i x_j with i + j = {s} (mod {modulus})"
                )))
            }
            [k] => out.push((s, *k)),
            _ => {
                return Err(IncidenceError::InconsistentLabeling(format!(
                    "several points of R lie on every line of class {s}"
                )))
            }
        }
    }
    Ok(out)
}

fn assign_labels(classes: &[(usize, usize)], modulus: usize, r_len: usize) -> Result<Vec<usize>, IncidenceError> {
    let mut labels: Vec<Option<usize>> = vec![None; r_len];
    for &(s, k) in classes {
        if labels[k].is_some() {
            return Err(IncidenceError::InconsistentLabeling(format!("R[{k}] serves two residue classes")));
        }
        labels[k] = Some((modulus - s) % modulus);
    }
    labels
        .into_iter()
        .enumerate()
        .map(|(k, l)| l.ok_or_else(|| IncidenceError::InconsistentLabeling(format!("R[{k}] received no label"))))
        .collect()
}

fn check_biconditional(
    points: &[ProjPoint],
    r: &[ProjPoint],
    st: &CyclicStructure,
    constrained: impl Fn(usize, usize) -> bool,
) -> Result<(), IncidenceError> {
    let m = st.order.len();
    for i in 0..m {
        for j in i + 1..m {
            if !constrained(i, j) {
                continue;
            }
            for (k, rk) in r.iter().enumerate() {
                let on = collinear(&points[st.order[i]], &points[st.order[j]], rk);
                let predicted = (i + j + st.labels[k]).is_multiple_of(st.modulus);
                if on != predicted {
                    return Err(IncidenceError::InconsistentLabeling(format!(
                        "x_{i}, x_{j}, r_{} collinear = {on}, labeling predicts {predicted}",
                        st.labels[k]
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Extracts the cyclic collinearity structure of an outside-segment
/// configuration with `|R| = |P|`.
///
/// `x_0` is the lexicographically smallest point and the order is
/// counterclockwise. A non-convex `P` contradicts the outside-segment
/// hypothesis and is reported as [`IncidenceError::ConvexPositionViolation`].
pub fn extract_cyclic_structure(config: &Configuration) -> Result<CyclicStructure, IncidenceError> {
    let report = verify_piercing(config, PierceMode::OutsideSegment)?;
    if !report.holds() {
        return Err(IncidenceError::HypothesisViolated(report.violations.len()));
    }
    let (p, r) = (config.p(), config.r());
    let n = p.len();
    if r.len() != n {
        return Err(IncidenceError::SizeMismatch { p: n, r: r.len() });
    }
    let order = convex_hull(p)?;
    if order.len() != n {
        return Err(IncidenceError::ConvexPositionViolation { hull: order.len(), n });
    }
    let classes = common_points(p, r, &order, n, |_| true)?;
    let labels = assign_labels(&classes, n, r.len())?;
    let st = CyclicStructure { modulus: n, order, labels };
    check_biconditional(p, r, &st, |_, _| true)?;
    Ok(st)
}

/// For each `i`, the line `x_i r_{-2i}` meets `P` only in `x_i` and leaves
/// `P` in one closed half-plane.
pub fn tangency_check(config: &Configuration, st: &CyclicStructure) -> bool {
    let (p, r) = (config.p(), config.r());
    if st.order.len() != p.len() || st.labels.len() != r.len() {
        return false;
    }
    let n = st.modulus;
    (0..n).all(|i| {
        let Some(k) = st.r_index((2 * n - (2 * i) % n) % n) else {
            return false;
        };
        let x = &p[st.order[i]];
        let Ok(line) = join(x, &r[k]) else { return false };
        let mut sides = p.iter().filter(|q| *q != x).map(|q| side_of_line(&line, q));
        match sides.next() {
            None => true,
            Some(0) => false,
            Some(s) => sides.all(|t| t == s),
        }
    })
}

/// All of `B ∪ G` on the hull, colors alternating.
pub fn check_alternation(bc: &BipartiteConfiguration) -> bool {
    let pts = bc.colored_points();
    let Ok(hull) = convex_hull(&pts) else { return false };
    if hull.len() != pts.len() {
        return false;
    }
    (0..hull.len()).all(|t| bc.color(hull[t]) != bc.color(hull[(t + 1) % hull.len()]))
}

/// Extracts the mod-`2n` structure of a bipartite configuration. Indices in
/// `order` refer to [`BipartiteConfiguration::colored_points`]; only
/// blue-green pairs are constrained and `R` receives the odd residues.
pub fn extract_bipartite_structure(bc: &BipartiteConfiguration) -> Result<CyclicStructure, IncidenceError> {
    let report = verify_bipartite_piercing(bc)?;
    if !report.holds() {
        return Err(IncidenceError::HypothesisViolated(report.violations.len()));
    }
    let pts = bc.colored_points();
    let order = convex_hull(&pts)?;
    if order.len() != pts.len() {
        return Err(IncidenceError::ConvexPositionViolation { hull: order.len(), n: pts.len() });
    }
    if !check_alternation(bc) {
        return Err(IncidenceError::AlternationViolation);
    }
    debug_assert_eq!(bc.color(order[0]) == Color::Blue, bc.color(order[2 % order.len()]) == Color::Blue);
    let modulus = pts.len();
    let classes = common_points(&pts, bc.r(), &order, modulus, |s| s % 2 == 1)?;
    let labels = assign_labels(&classes, modulus, bc.r().len())?;
    let st = CyclicStructure { modulus, order, labels };
    check_biconditional(&pts, bc.r(), &st, |i, j| (i + j) % 2 == 1)?;
    Ok(st)
}
