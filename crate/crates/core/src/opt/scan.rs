use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{optimal_witnesses, OptError};
use crate::configs::gen_random_general_position;
use crate::cubic::common_cubic;
use crate::geom::ProjPoint;
use crate::incidence::PierceMode;
use crate::par::Exec;

pub const SCAN_NOTE: &str = "randomized search for counterexamples; finding none is evidence, not a proof";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    /// Coordinates are drawn from `[-bound, bound]`; small grids make
    /// coincidences, and hence small piercing sets, likelier.
    pub bound: i64,
    /// Maximum number of optimal witnesses tested per instance.
    pub cap: usize,
    pub mode: PierceMode,
    /// Runs trials in parallel; reports stay identical.
    pub exec: Exec,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { bound: 4, cap: 100, mode: PierceMode::Incidence, exec: Exec::Sequential }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanTrial {
    pub trial: usize,
    pub seed: u64,
    pub p: Vec<ProjPoint>,
    pub optimum: usize,
    /// Optimal witnesses tested for a cubic (zero unless `optimum == n`).
    pub witnesses_tested: usize,
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Falsification {
    pub trial: usize,
    pub p: Vec<ProjPoint>,
    pub r: Vec<ProjPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub options: ScanOptions,
    pub histogram: BTreeMap<usize, usize>,
    /// Instances with optimum exactly `n`, the hypothesis of the conjecture.
    pub in_hypothesis: usize,
    /// Instances with a smaller optimum (only possible for `n ≤ 4`), skipped.
    pub below_n: usize,
    pub witnesses_tested: usize,
    pub falsifications: Vec<Falsification>,
    pub per_trial: Vec<ScanTrial>,
    pub note: &'static str,
}

/// For each of `trials` random general-position sets of size `n`, computes
/// the exact optimum; when it is exactly `n`, tests every optimal witness
/// `R` (up to the cap) for a cubic through `P ∪ R`.
pub fn conjecture_scan(n: usize, trials: usize, seed: u64, opts: ScanOptions) -> Result<ScanReport, OptError> {
    if n < 4 {
        return Err(OptError::InvalidInput(format!("the scan needs n >= 4, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..trials).map(|_| rng.random()).collect();
    let results = opts.exec.map_range(trials, |t| -> Result<(ScanTrial, Vec<Falsification>), OptError> {
        let p = gen_random_general_position(n, opts.bound, seeds[t])?;
        let (res, witnesses) = if opts.cap == 0 {
            (super::min_pierce(&p, opts.mode)?, (Vec::new(), false))
        } else {
            let (res, w, truncated) = optimal_witnesses(&p, opts.mode, opts.cap)?;
            if res.optimum == n {
                (res, (w, truncated))
            } else {
                (res, (Vec::new(), false))
            }
        };
        let (witnesses, truncated) = witnesses;
        let mut falsified = Vec::new();
        for w in &witnesses {
            let pts: Vec<ProjPoint> = p.iter().chain(&w.r).cloned().collect();
            if common_cubic(&pts).is_err() {
                falsified.push(Falsification { trial: t, p: p.clone(), r: w.r.clone() });
            }
        }
        let trial = ScanTrial {
            trial: t,
            seed: seeds[t],
            p,
            optimum: res.optimum,
            witnesses_tested: witnesses.len(),
            truncated,
        };
        Ok((trial, falsified))
    });
    let mut report = ScanReport {
        n,
        trials,
        seed,
        options: opts,
        histogram: BTreeMap::new(),
        in_hypothesis: 0,
        below_n: 0,
        witnesses_tested: 0,
        falsifications: Vec::new(),
        per_trial: Vec::with_capacity(trials),
        note: SCAN_NOTE,
    };
    for r in results {
        let (trial, falsified) = r?;
        *report.histogram.entry(trial.optimum).or_default() += 1;
        match trial.optimum.cmp(&n) {
            std::cmp::Ordering::Equal => report.in_hypothesis += 1,
            std::cmp::Ordering::Less => report.below_n += 1,
            std::cmp::Ordering::Greater => {}
        }
        report.witnesses_tested += trial.witnesses_tested;
        report.falsifications.extend(falsified);
        report.per_trial.push(trial);
    }
    Ok(report)
}
