use std::collections::BTreeSet;
use std::fmt;

use super::IncidenceError;
use crate::geom::ProjPoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PierceMode {
    /// Every determined line contains a point of `R`.
    Incidence,
    /// Every determined line `xy` contains a point of `R` outside the open segment `xy`.
    OutsideSegment,
}

impl PierceMode {
    pub fn as_str(self) -> &'static str {
        match self {
            PierceMode::Incidence => "incidence",
            PierceMode::OutsideSegment => "outside_segment",
        }
    }
}

impl fmt::Display for PierceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for PierceMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "incidence" => Ok(PierceMode::Incidence),
            "outside_segment" => Ok(PierceMode::OutsideSegment),
            other => Err(format!("unknown mode {other:?} (expected incidence or outside_segment)")),
        }
    }
}

fn check_distinct(name: &str, pts: &[ProjPoint]) -> Result<(), IncidenceError> {
    let mut seen = BTreeSet::new();
    for p in pts {
        if !seen.insert(p) {
            return Err(IncidenceError::InvalidConfiguration(format!("{p} appears twice in {name}")));
        }
    }
    Ok(())
}

fn check_disjoint(a_name: &str, a: &[ProjPoint], b_name: &str, b: &[ProjPoint]) -> Result<(), IncidenceError> {
    let set: BTreeSet<&ProjPoint> = a.iter().collect();
    match b.iter().find(|p| set.contains(p)) {
        Some(p) => Err(IncidenceError::InvalidConfiguration(format!("{p} lies in both {a_name} and {b_name}"))),
        None => Ok(()),
    }
}

/// A point set `P` together with a candidate piercing set `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    p: Vec<ProjPoint>,
    r: Vec<ProjPoint>,
    mode: PierceMode,
}

impl Configuration {
    pub fn new(p: Vec<ProjPoint>, r: Vec<ProjPoint>, mode: PierceMode) -> Result<Self, IncidenceError> {
        check_distinct("P", &p)?;
        check_distinct("R", &r)?;
        check_disjoint("P", &p, "R", &r)?;
        if mode == PierceMode::OutsideSegment {
            if let Some(i) = p.iter().position(ProjPoint::at_infinity) {
                return Err(IncidenceError::InfinitePointInP(i));
            }
        }
        Ok(Configuration { p, r, mode })
    }

    pub fn p(&self) -> &[ProjPoint] {
        &self.p
    }

    pub fn r(&self) -> &[ProjPoint] {
        &self.r
    }

    pub fn mode(&self) -> PierceMode {
        self.mode
    }

    pub fn n(&self) -> usize {
        self.p.len()
    }

    pub fn with_mode(self, mode: PierceMode) -> Result<Self, IncidenceError> {
        Configuration::new(self.p, self.r, mode)
    }

    /// `P` followed by `R`.
    pub fn all_points(&self) -> Vec<ProjPoint> {
        self.p.iter().chain(&self.r).cloned().collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    Blue,
    Green,
}

/// Blue and green point sets with a red piercing set for the blue-green lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteConfiguration {
    b: Vec<ProjPoint>,
    g: Vec<ProjPoint>,
    r: Vec<ProjPoint>,
}

impl BipartiteConfiguration {
    pub fn new(b: Vec<ProjPoint>, g: Vec<ProjPoint>, r: Vec<ProjPoint>) -> Result<Self, IncidenceError> {
        if b.len() != g.len() || g.len() != r.len() {
            return Err(IncidenceError::InvalidConfiguration(format!(
                "|B| = {}, |G| = {}, |R| = {} must be equal",
                b.len(),
                g.len(),
                r.len()
            )));
        }
        check_distinct("B", &b)?;
        check_distinct("G", &g)?;
        check_distinct("R", &r)?;
        check_disjoint("B", &b, "G", &g)?;
        check_disjoint("B", &b, "R", &r)?;
        check_disjoint("G", &g, "R", &r)?;
        if let Some(i) = b.iter().chain(&g).position(ProjPoint::at_infinity) {
            return Err(IncidenceError::InfinitePointInP(i));
        }
        Ok(BipartiteConfiguration { b, g, r })
    }

    pub fn b(&self) -> &[ProjPoint] {
        &self.b
    }

    pub fn g(&self) -> &[ProjPoint] {
        &self.g
    }

    pub fn r(&self) -> &[ProjPoint] {
        &self.r
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    /// `B` followed by `G`; indices below `n()` are blue.
    pub fn colored_points(&self) -> Vec<ProjPoint> {
        self.b.iter().chain(&self.g).cloned().collect()
    }

    pub fn color(&self, combined_index: usize) -> Color {
        if combined_index < self.b.len() {
            Color::Blue
        } else {
            Color::Green
        }
    }

    pub fn all_points(&self) -> Vec<ProjPoint> {
        self.b.iter().chain(&self.g).chain(&self.r).cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_invariants() {
        let a = ProjPoint::affine(0, 0);
        let b = ProjPoint::affine(1, 0);
        let inf = ProjPoint::direction(1, 0).unwrap();
        assert!(Configuration::new(vec![a.clone(), b.clone()], vec![inf.clone()], PierceMode::OutsideSegment).is_ok());
        assert!(Configuration::new(vec![a.clone(), a.clone()], vec![], PierceMode::Incidence).is_err());
        assert!(Configuration::new(vec![a.clone()], vec![a.clone()], PierceMode::Incidence).is_err());
        assert_eq!(
            Configuration::new(vec![a.clone(), inf.clone()], vec![], PierceMode::OutsideSegment),
            Err(IncidenceError::InfinitePointInP(1))
        );
        assert!(Configuration::new(vec![a.clone(), inf], vec![], PierceMode::Incidence).is_ok());
        assert!(BipartiteConfiguration::new(vec![a.clone()], vec![b], vec![]).is_err());
        assert_eq!("outside_segment".parse::<PierceMode>(), Ok(PierceMode::OutsideSegment));
        assert!("between".parse::<PierceMode>().is_err());
    }
}
