use std::collections::BTreeSet;

use num_traits::Zero;

use super::grids::{claim1_spec, claim2_spec};
use super::{
    chasles_verify, kernel, monomial_matrix, structural_grids, Cubic, CubicError, GridInstance, GridSpec, PointRef,
};
use crate::geom::ProjPoint;
use crate::incidence::{BipartiteConfiguration, Configuration, CyclicStructure, LabeledPoints};

/// Smallest modulus for which the nine-point seed and its grids are available.
pub const SEEDED_MIN_MODULUS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Null space of the monomial matrix of every point.
    Direct,
    /// A cubic through `x_{n-1}, ..., x_{n-7}, r_5, r_7`, pushed through Chasles grids.
    Seeded,
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "direct" => Ok(Strategy::Direct),
            "paper" | "seeded" => Ok(Strategy::Seeded),
            other => Err(format!("unknown strategy {other:?} (expected direct or paper)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridFamily {
    Claim1,
    Claim2,
    /// Any other 3×3 grid of structural lines.
    Structural,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropagationStep {
    pub family: GridFamily,
    /// Shift parameter for the claim families.
    pub shift: Option<i64>,
    pub spec: GridSpec,
    pub added: PointRef,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicCertificate {
    pub cubic: Cubic,
    /// Strategy that actually produced the cubic (seeded falls back to direct below the minimum modulus).
    pub strategy: Strategy,
    /// Dimension of the space of cubics through all points.
    pub kernel_dim: usize,
    pub steps: Vec<PropagationStep>,
}

/// A canonical cubic through all of `points` and the dimension of the
/// space of such cubics.
pub fn common_cubic(points: &[ProjPoint]) -> Result<(Cubic, usize), CubicError> {
    let k = kernel(&monomial_matrix(points), 10);
    let first = k.first().ok_or(CubicError::NoCommonCubic(points.len()))?;
    Ok((Cubic::from_slice(first)?, k.len()))
}

fn resolve(lp: &LabeledPoints, p: PointRef) -> &ProjPoint {
    match p {
        PointRef::X(i) => &lp.xs[i],
        PointRef::R(k) => &lp.rs[&k],
    }
}

struct Propagation<'a> {
    lp: &'a LabeledPoints,
    cubic: Cubic,
    known: BTreeSet<PointRef>,
    steps: Vec<PropagationStep>,
}

impl Propagation<'_> {
    /// Applies `spec` if exactly one of its meets is still unknown.
    fn try_grid(&mut self, family: GridFamily, shift: Option<i64>, spec: GridSpec) -> Result<bool, CubicError> {
        let Some(members) = spec.members() else { return Ok(false) };
        if !members.iter().all(|p| match p {
            PointRef::X(_) => true,
            PointRef::R(k) => self.lp.rs.contains_key(k),
        }) {
            return Ok(false);
        }
        let unknown: Vec<PointRef> = members.iter().filter(|p| !self.known.contains(p)).copied().collect();
        let [added] = unknown.as_slice() else { return Ok(false) };
        let added = *added;
        let grid = match GridInstance::build(spec.clone(), self.lp) {
            Ok(g) => g,
            Err(CubicError::DegenerateInstance(_)) => return Ok(false),
            Err(e) => return Err(e),
        };
        if !chasles_verify(&grid.instance) {
            return Err(CubicError::PropagationFailure(format!("{family:?} grid {:?} fails the rank test", spec.lines)));
        }
        if !self.cubic.contains(resolve(self.lp, added)) {
            return Err(CubicError::PropagationFailure(format!(
                "{family:?} grid {:?}: seeded cubic misses {added}",
                spec.lines
            )));
        }
        self.known.insert(added);
        self.steps.push(PropagationStep { family, shift, spec, added });
        Ok(true)
    }

    fn claims_pass(&mut self, use_claim2: bool) -> Result<bool, CubicError> {
        let m = self.lp.modulus;
        let mut changed = false;
        for i in 0..m as i64 {
            changed |= self.try_grid(GridFamily::Claim1, Some(i), claim1_spec(m, i))?;
        }
        if use_claim2 {
            for i in 0..m as i64 {
                changed |= self.try_grid(GridFamily::Claim2, Some(i), claim2_spec(m, i))?;
            }
        }
        Ok(changed)
    }
}

fn all_refs(lp: &LabeledPoints) -> BTreeSet<PointRef> {
    (0..lp.xs.len()).map(PointRef::X).chain(lp.rs.keys().map(|&k| PointRef::R(k))).collect()
}

fn seeded(lp: &LabeledPoints, use_claim2: bool) -> Result<(Cubic, Vec<PropagationStep>), CubicError> {
    let m = lp.modulus as i64;
    let mut seed: Vec<PointRef> = (1..=7).map(|t| PointRef::X((m - t) as usize)).collect();
    seed.extend([PointRef::R(5 % m as usize), PointRef::R(7 % m as usize)]);
    let seed_points: Vec<ProjPoint> = seed
        .iter()
        .map(|&p| match p {
            PointRef::R(k) if !lp.rs.contains_key(&k) => {
                Err(CubicError::PropagationFailure(format!("seed point r_{k} is not labeled")))
            }
            _ => Ok(resolve(lp, p).clone()),
        })
        .collect::<Result<_, _>>()?;
    let (cubic, _) = common_cubic(&seed_points)?;
    let mut prop = Propagation { lp, cubic, known: seed.into_iter().collect(), steps: Vec::new() };
    let target = all_refs(lp);

    while prop.claims_pass(use_claim2)? {}
    if prop.known != target {
        // The claim families alone stall once the modulus exceeds 8; the
        // remaining points are reached through other structural grids.
        let grids = structural_grids(lp);
        loop {
            let mut changed = false;
            for spec in &grids {
                changed |= prop.try_grid(GridFamily::Structural, None, spec.clone())?;
            }
            changed |= prop.claims_pass(use_claim2)?;
            if !changed {
                break;
            }
        }
    }
    if prop.known != target {
        let missing: Vec<String> = target.difference(&prop.known).map(|p| p.to_string()).collect();
        return Err(CubicError::PropagationFailure(format!("never reached {}", missing.join(", "))));
    }
    Ok((prop.cubic, prop.steps))
}

/// Certifies that every labeled point lies on one cubic.
///
/// `use_claim2` enables the second claim family (even-residue `R` points);
/// the bipartite case has no even residues and leaves it off.
pub fn certify_labeled(lp: &LabeledPoints, strategy: Strategy, use_claim2: bool) -> Result<CubicCertificate, CubicError> {
    let points: Vec<ProjPoint> = lp.xs.iter().chain(lp.rs.values()).cloned().collect();
    let kernel_dim = kernel(&monomial_matrix(&points), 10).len();
    let strategy = if strategy == Strategy::Seeded && lp.modulus < SEEDED_MIN_MODULUS {
        log::info!("modulus {} is below {SEEDED_MIN_MODULUS}; using the direct strategy", lp.modulus);
        Strategy::Direct
    } else {
        strategy
    };
    let (cubic, steps) = match strategy {
        Strategy::Direct => (common_cubic(&points)?.0, Vec::new()),
        Strategy::Seeded => seeded(lp, use_claim2)?,
    };
    if let Some(p) = points.iter().find(|p| !cubic.eval(p).is_zero()) {
        return Err(CubicError::PropagationFailure(format!("certified cubic misses {p}")));
    }
    Ok(CubicCertificate { cubic, strategy, kernel_dim, steps })
}

pub fn certify_cubic(config: &Configuration, st: &CyclicStructure, strategy: Strategy) -> Result<CubicCertificate, CubicError> {
    let lp = st.labeled(config.p(), config.r());
    certify_labeled(&lp, strategy, lp.modulus.is_multiple_of(2))
}

pub fn certify_bipartite_cubic(
    bc: &BipartiteConfiguration,
    st: &CyclicStructure,
    strategy: Strategy,
) -> Result<CubicCertificate, CubicError> {
    let lp = st.labeled(&bc.colored_points(), bc.r());
    certify_labeled(&lp, strategy, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_generic_points_have_no_cubic() {
        let pts: Vec<ProjPoint> = [
            (0, 0),
            (1, 5),
            (2, -3),
            (7, 1),
            (-4, 4),
            (3, 9),
            (-6, -2),
            (5, -7),
            (8, 8),
            (-9, 3),
            (11, -1),
            (2, 13),
        ]
        .iter()
        .map(|&(x, y)| ProjPoint::affine(x, y))
        .collect();
        assert_eq!(common_cubic(&pts), Err(CubicError::NoCommonCubic(12)));
        assert!(common_cubic(&pts[..9]).is_ok());
    }

    #[test]
    fn strategy_names() {
        assert_eq!("paper".parse::<Strategy>(), Ok(Strategy::Seeded));
        assert_eq!("direct".parse::<Strategy>(), Ok(Strategy::Direct));
        assert!("fit".parse::<Strategy>().is_err());
    }
}
