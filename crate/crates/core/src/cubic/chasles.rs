use std::collections::BTreeSet;

use super::{monomial_row, rank, CubicError};
use crate::geom::{meet, ProjLine, ProjPoint};

/// Two families of three lines whose nine pairwise meets are distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChaslesInstance {
    pub ls: [ProjLine; 3],
    pub ms: [ProjLine; 3],
    /// `meets[a][b]` is `ls[a] ∩ ms[b]`.
    pub meets: [[ProjPoint; 3]; 3],
}

impl ChaslesInstance {
    pub fn new(ls: [ProjLine; 3], ms: [ProjLine; 3]) -> Result<Self, CubicError> {
        let lines: BTreeSet<&ProjLine> = ls.iter().chain(&ms).collect();
        if lines.len() != 6 {
            return Err(CubicError::DegenerateInstance("the six lines are not distinct".into()));
        }
        let meets: [[ProjPoint; 3]; 3] = std::array::from_fn(|a| {
            std::array::from_fn(|b| meet(&ls[a], &ms[b]).expect("distinct lines"))
        });
        let distinct: BTreeSet<&ProjPoint> = meets.iter().flatten().collect();
        if distinct.len() != 9 {
            return Err(CubicError::DegenerateInstance(format!("only {} distinct meets", distinct.len())));
        }
        Ok(ChaslesInstance { ls, ms, meets })
    }

    pub fn points(&self) -> Vec<ProjPoint> {
        self.meets.iter().flatten().cloned().collect()
    }
}

/// For each of the nine points: adding it to the other eight leaves the rank
/// of the monomial matrix unchanged, i.e. every cubic through the eight
/// passes through it.
pub fn chasles_rank_test(points: &[ProjPoint]) -> bool {
    let rows: Vec<_> = points.iter().map(monomial_row).collect();
    let full = rank(&rows, 10);
    (0..rows.len()).all(|t| {
        let sub: Vec<_> = rows.iter().enumerate().filter(|&(i, _)| i != t).map(|(_, r)| r.clone()).collect();
        rank(&sub, 10) == full
    })
}

pub fn chasles_verify(inst: &ChaslesInstance) -> bool {
    chasles_rank_test(&inst.points())
}
