use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::candidates::full_mask;
use super::{build_candidates, CandidateSet, OptError};
use crate::geom::ProjPoint;
use crate::incidence::PierceMode;
use crate::par::Exec;

/// An optimal piercing set: chosen candidates plus one free point for each
/// constraint they leave uncovered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Indices into [`CandidateSet::points`].
    pub chosen: Vec<usize>,
    /// Indices into [`CandidateSet::constraints`] paid for by a free point.
    pub singles: Vec<usize>,
    /// Chosen candidates followed by the materialized free points.
    pub r: Vec<ProjPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub mode: PierceMode,
    pub optimum: usize,
    pub witness: Witness,
    /// Branch-and-bound nodes visited (scheduling dependent in parallel runs).
    pub nodes: u64,
    pub candidates: usize,
    pub constraints: usize,
}

#[derive(Clone, Debug)]
struct Partial {
    chosen: Vec<usize>,
    singles: Vec<usize>,
}

impl Partial {
    fn cost(&self) -> usize {
        self.chosen.len() + self.singles.len()
    }
}

struct Tree<'a> {
    cover: &'a [u128],
    forbidden: Vec<bool>,
    nodes: u64,
}

impl Tree<'_> {
    fn new(cover: &[u128]) -> Tree<'_> {
        Tree { cover, forbidden: vec![false; cover.len()], nodes: 0 }
    }

    /// `⌈|u| / max coverage⌉` over the candidates still allowed.
    fn lower_bound(&self, u: u128) -> usize {
        if u == 0 {
            return 0;
        }
        let best = self
            .cover
            .iter()
            .zip(&self.forbidden)
            .filter(|(_, &f)| !f)
            .map(|(c, _)| (c & u).count_ones())
            .max()
            .unwrap_or(0)
            .max(1);
        u.count_ones().div_ceil(best) as usize
    }

    /// Allowed candidates covering constraint `e`, best coverage of `u` first.
    fn options(&self, u: u128, e: u32) -> Vec<usize> {
        let mut opts: Vec<usize> =
            (0..self.cover.len()).filter(|&c| !self.forbidden[c] && self.cover[c] >> e & 1 == 1).collect();
        opts.sort_by_key(|&c| std::cmp::Reverse((self.cover[c] & u).count_ones()));
        opts
    }

    /// Visits the children of a node: each option with its predecessors
    /// forbidden, then a free point for `e`. `visit` returns `false` to stop.
    fn branch(&mut self, u: u128, partial: &mut Partial, visit: &mut dyn FnMut(&mut Self, u128, &mut Partial) -> bool) -> bool {
        let e = u.trailing_zeros();
        let opts = self.options(u, e);
        let mut go_on = true;
        let mut marked = 0;
        for &c in &opts {
            partial.chosen.push(c);
            go_on = visit(self, u & !self.cover[c], partial);
            partial.chosen.pop();
            self.forbidden[c] = true;
            marked += 1;
            if !go_on {
                break;
            }
        }
        if go_on {
            partial.singles.push(e as usize);
            go_on = visit(self, u & !(1u128 << e), partial);
            partial.singles.pop();
        }
        for &c in &opts[..marked] {
            self.forbidden[c] = false;
        }
        go_on
    }

    fn minimize(&mut self, u: u128, partial: &mut Partial, best: &AtomicUsize, found: &mut Option<Partial>) -> bool {
        self.nodes += 1;
        let cost = partial.cost();
        if u == 0 {
            if cost < best.load(Ordering::Relaxed) {
                best.fetch_min(cost, Ordering::Relaxed);
                *found = Some(partial.clone());
            }
            return true;
        }
        if cost + self.lower_bound(u) >= best.load(Ordering::Relaxed) {
            return true;
        }
        self.branch(u, partial, &mut |t, u, p| t.minimize(u, p, best, found))
    }

    fn enumerate(&mut self, u: u128, partial: &mut Partial, target: usize, cap: usize, out: &mut Vec<Partial>) -> bool {
        self.nodes += 1;
        let cost = partial.cost();
        if u == 0 {
            if cost == target {
                out.push(partial.clone());
            }
            return out.len() < cap;
        }
        if cost + self.lower_bound(u) > target {
            return true;
        }
        self.branch(u, partial, &mut |t, u, p| t.enumerate(u, p, target, cap, out))
    }
}

fn greedy(cs: &CandidateSet) -> Partial {
    let mut u = cs.all_constraints();
    let mut chosen = Vec::new();
    loop {
        let pick = cs.cover.iter().enumerate().map(|(c, m)| (c, (m & u).count_ones())).filter(|&(_, k)| k >= 2).fold(
            None,
            |acc: Option<(usize, u32)>, (c, k)| match acc {
                Some((_, bk)) if bk >= k => acc,
                _ => Some((c, k)),
            },
        );
        let Some((c, _)) = pick else { break };
        chosen.push(c);
        u &= !cs.cover[c];
    }
    let singles = (0..cs.constraints.len()).filter(|&e| u >> e & 1 == 1).collect();
    Partial { chosen, singles }
}

/// A free point on the line of constraint `e`: beyond `p[j]` on the ray
/// from `p[i]`, or a point of the line off `P` when an endpoint is infinite.
fn free_point(cs: &CandidateSet, e: usize, taken: &[ProjPoint]) -> ProjPoint {
    let c = &cs.constraints[e];
    let (x, y) = (&cs.p[c.i], &cs.p[c.j]);
    let ok = |q: &ProjPoint| !cs.p.contains(q) && !taken.contains(q);
    match (x.to_affine(), y.to_affine()) {
        (Some((x0, x1)), Some((y0, y1))) => (2i64..)
            .map(|t| {
                let t = BigRational::from_integer(t.into());
                let s = &t - BigRational::from_integer(1.into());
                ProjPoint::from_rational(&(&t * &y0 - &s * &x0), &(&t * &y1 - &s * &x1))
            })
            .find(ok)
            .expect("a line has infinitely many points"),
        _ => (1i64..)
            .map(|t| {
                let t = BigInt::from(t);
                let [a, b, d] = x.coords();
                let [p, q, r] = y.coords();
                ProjPoint::from_triple([a + &t * p, b + &t * q, d + &t * r]).expect("x and y independent")
            })
            .find(ok)
            .expect("a line has infinitely many points"),
    }
}

fn materialize(cs: &CandidateSet, partial: &Partial) -> Witness {
    let mut r: Vec<ProjPoint> = partial.chosen.iter().map(|&c| cs.points[c].clone()).collect();
    for &e in &partial.singles {
        let q = free_point(cs, e, &r);
        r.push(q);
    }
    Witness { chosen: partial.chosen.clone(), singles: partial.singles.clone(), r }
}

pub fn min_pierce(p: &[ProjPoint], mode: PierceMode) -> Result<SearchResult, OptError> {
    min_pierce_with(p, mode, Exec::Sequential)
}

/// Exact minimum piercing set by branch and bound.
///
/// The root's children are searched as independent tasks sharing one
/// incumbent. The optimum never depends on `exec`; with
/// [`Exec::Sequential`] the witness and node count are reproducible too.
pub fn min_pierce_with(p: &[ProjPoint], mode: PierceMode, exec: Exec) -> Result<SearchResult, OptError> {
    let cs = build_candidates(p, mode)?;
    let u = cs.all_constraints();
    let incumbent = greedy(&cs);
    let best = AtomicUsize::new(incumbent.cost());
    let mut nodes = 1;
    let mut winner = incumbent;

    if u != 0 {
        let e = u.trailing_zeros();
        let opts = Tree::new(&cs.cover).options(u, e);
        // task k takes option k with options < k forbidden; the last task is the free point
        let results = exec.map_range(opts.len() + 1, |k| {
            let mut tree = Tree::new(&cs.cover);
            for &c in &opts[..k] {
                tree.forbidden[c] = true;
            }
            let mut partial = Partial { chosen: Vec::new(), singles: Vec::new() };
            let next = if k < opts.len() {
                partial.chosen.push(opts[k]);
                u & !cs.cover[opts[k]]
            } else {
                partial.singles.push(e as usize);
                u & !(1u128 << e)
            };
            let mut found = None;
            tree.minimize(next, &mut partial, &best, &mut found);
            (found, tree.nodes)
        });
        for (found, n) in results {
            nodes += n;
            if let Some(f) = found {
                if f.cost() < winner.cost() {
                    winner = f;
                }
            }
        }
    }
    debug_assert_eq!(winner.cost(), best.load(Ordering::Relaxed));
    Ok(SearchResult {
        mode,
        optimum: winner.cost(),
        witness: materialize(&cs, &winner),
        nodes,
        candidates: cs.points.len(),
        constraints: cs.constraints.len(),
    })
}

/// All optimal witnesses up to `cap`, in search order, plus whether the
/// cap was reached (reported even if the cap happens to equal the total).
/// Two witnesses differ in their chosen candidates; free points are
/// materialized canonically.
pub fn optimal_witnesses(
    p: &[ProjPoint],
    mode: PierceMode,
    cap: usize,
) -> Result<(SearchResult, Vec<Witness>, bool), OptError> {
    let result = min_pierce(p, mode)?;
    let cs = build_candidates(p, mode)?;
    let mut out = Vec::new();
    let mut tree = Tree::new(&cs.cover);
    let complete = cap == 0
        || tree.enumerate(full_mask(cs.constraints.len()), &mut Partial { chosen: vec![], singles: vec![] }, result.optimum, cap, &mut out);
    Ok((result, out.iter().map(|w| materialize(&cs, w)).collect(), !complete))
}
