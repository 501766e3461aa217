use super::{BipartiteConfiguration, Configuration, IncidenceError, PierceMode};
use crate::geom::{general_position_violation, incident, join, strictly_between, ProjPoint};
use crate::par::Exec;

/// Per-pair result of a piercing scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub i: usize,
    pub j: usize,
    /// Indices into `R` of points on the line `x_i x_j` that satisfy the mode.
    pub witnesses: Vec<usize>,
    /// Number of points of `R` on the line, regardless of mode.
    pub r_on_line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PierceReport {
    pub mode: PierceMode,
    /// Number of points whose pairs were scanned.
    pub n: usize,
    /// Scanned pairs with `i < j`, sorted.
    pub pairs: Vec<PairWitness>,
    /// Pairs with no witness, sorted.
    pub violations: Vec<(usize, usize)>,
}

impl PierceReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn pair(&self, i: usize, j: usize) -> Option<&PairWitness> {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.pairs.binary_search_by(|w| (w.i, w.j).cmp(&(i, j))).ok().map(|k| &self.pairs[k])
    }

    /// Witness list of the unordered pair `{i, j}`; empty if the pair was not scanned.
    pub fn witnesses(&self, i: usize, j: usize) -> &[usize] {
        self.pair(i, j).map(|w| w.witnesses.as_slice()).unwrap_or(&[])
    }
}

fn scan_pair(p: &[ProjPoint], r: &[ProjPoint], i: usize, j: usize, mode: PierceMode) -> PairWitness {
    let line = join(&p[i], &p[j]).expect("distinct points");
    let mut witnesses = Vec::new();
    let mut r_on_line = 0;
    for (k, rk) in r.iter().enumerate() {
        if !incident(rk, &line) {
            continue;
        }
        r_on_line += 1;
        let ok = match mode {
            PierceMode::Incidence => true,
            PierceMode::OutsideSegment => !strictly_between(&p[i], &p[j], rk).expect("finite distinct endpoints"),
        };
        if ok {
            witnesses.push(k);
        }
    }
    PairWitness { i, j, witnesses, r_on_line }
}

fn scan(p: &[ProjPoint], r: &[ProjPoint], pairs: Vec<(usize, usize)>, mode: PierceMode, exec: Exec) -> PierceReport {
    let pairs = exec.map(&pairs, |&(i, j)| scan_pair(p, r, i, j, mode));
    let violations = pairs.iter().filter(|w| w.witnesses.is_empty()).map(|w| (w.i, w.j)).collect();
    PierceReport { mode, n: p.len(), pairs, violations }
}

/// Checks that every line through two points of `P` carries a point of `R`
/// satisfying `mode`.
pub fn verify_piercing(config: &Configuration, mode: PierceMode) -> Result<PierceReport, IncidenceError> {
    verify_piercing_with(config, mode, Exec::default())
}

pub fn verify_piercing_with(config: &Configuration, mode: PierceMode, exec: Exec) -> Result<PierceReport, IncidenceError> {
    let p = config.p();
    if let Some(t) = general_position_violation(p) {
        return Err(IncidenceError::GeneralPositionViolation(t));
    }
    if mode == PierceMode::OutsideSegment {
        if let Some(i) = p.iter().position(ProjPoint::at_infinity) {
            return Err(IncidenceError::InfinitePointInP(i));
        }
    }
    let n = p.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Ok(scan(p, config.r(), pairs, mode, exec))
}

/// Outside-segment verification restricted to blue-green pairs. Pair indices
/// refer to [`BipartiteConfiguration::colored_points`].
pub fn verify_bipartite_piercing(bc: &BipartiteConfiguration) -> Result<PierceReport, IncidenceError> {
    let pts = bc.colored_points();
    if let Some(t) = general_position_violation(&pts) {
        return Err(IncidenceError::GeneralPositionViolation(t));
    }
    let n = bc.n();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (n..2 * n).map(move |j| (i, j))).collect();
    Ok(scan(&pts, bc.r(), pairs, PierceMode::OutsideSegment, Exec::default()))
}
