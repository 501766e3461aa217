use super::{verify_piercing, Configuration, IncidenceError, PierceMode};

/// For every `x` in `P`: which point of `R` was chosen on each line `xy`,
/// and the point of `R` never chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelevanceTable {
    /// `relevant[x]` lists `(y, r)` for every `y != x`, ordered by `y`.
    pub relevant: Vec<Vec<(usize, usize)>>,
    pub non_relevant: Vec<usize>,
}

/// Builds the relevance table under the outside-segment hypothesis. When a
/// line carries several admissible points the lowest `R` index is chosen.
pub fn build_relevance(config: &Configuration) -> Result<RelevanceTable, IncidenceError> {
    let report = verify_piercing(config, PierceMode::OutsideSegment)?;
    if !report.holds() {
        return Err(IncidenceError::HypothesisViolated(report.violations.len()));
    }
    let n = config.n();
    let m = config.r().len();
    let mut relevant = Vec::with_capacity(n);
    let mut non_relevant = Vec::with_capacity(n);
    for x in 0..n {
        let row: Vec<(usize, usize)> =
            (0..n).filter(|&y| y != x).map(|y| (y, report.witnesses(x, y)[0])).collect();
        let mut used = vec![false; m];
        for &(_, r) in &row {
            used[r] = true;
        }
        let missing: Vec<usize> = (0..m).filter(|&r| !used[r]).collect();
        if missing.len() != 1 {
            return Err(IncidenceError::StructureViolation { x, count: missing.len() });
        }
        non_relevant.push(missing[0]);
        relevant.push(row);
    }
    Ok(RelevanceTable { relevant, non_relevant })
}
