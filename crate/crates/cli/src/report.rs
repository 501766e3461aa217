//! Serializable report types. Field order is the output order.

use std::collections::BTreeMap;

use pierce_core::io::Int;
use pierce_core::ProjPoint;
use serde::Serialize;

pub type Pt = [Int; 3];

pub fn pt(p: &ProjPoint) -> Pt {
    p.coords().clone().map(Int)
}

pub fn pts(v: &[ProjPoint]) -> Vec<Pt> {
    v.iter().map(pt).collect()
}

#[derive(Serialize)]
pub struct PairRow {
    pub i: usize,
    pub j: usize,
    pub witnesses: Vec<usize>,
    pub r_on_line: usize,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub command: &'static str,
    pub file: String,
    pub mode: String,
    pub bipartite: bool,
    pub n: usize,
    pub r: usize,
    pub holds: bool,
    pub violations: Vec<[usize; 2]>,
    pub pairs: Vec<PairRow>,
    pub exit: i32,
}

#[derive(Serialize)]
pub struct LabelRow {
    pub r: usize,
    pub label: usize,
    pub point: Pt,
}

#[derive(Serialize)]
pub struct AuditRow {
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub r_outside: usize,
    pub identities_hold: bool,
    pub tight: bool,
}

#[derive(Serialize)]
pub struct StructureReport {
    pub command: &'static str,
    pub file: String,
    pub bipartite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<usize>,
    /// `x_order[i]` is the index (into P, or B then G) of `x_i`.
    pub x_order: Vec<usize>,
    pub labels: Vec<LabelRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hull_audit: Option<AuditRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tangency: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alternation: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit: i32,
}

#[derive(Serialize)]
pub struct StepRow {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shift: Option<i64>,
    pub added: String,
}

#[derive(Serialize)]
pub struct VanishRow {
    pub point: Pt,
    pub value: Int,
}

#[derive(Serialize)]
pub struct FitReport {
    pub command: &'static str,
    pub file: String,
    pub strategy_requested: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strategy_used: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cubic: Option<Vec<Int>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_stored: Option<bool>,
    pub steps: Vec<StepRow>,
    pub vanishing: Vec<VanishRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit: i32,
}

#[derive(Serialize)]
pub struct InstanceRow {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(rename = "P")]
    pub p: Vec<Pt>,
    pub optimum: usize,
    #[serde(rename = "R")]
    pub r: Vec<Pt>,
    /// Free points in `R`, each on a single determined line.
    pub free_points: usize,
    pub candidates: usize,
    pub nodes: u64,
}

#[derive(Serialize)]
pub struct SearchReport {
    pub command: &'static str,
    pub mode: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub trials: usize,
    pub seed: u64,
    pub bound: i64,
    pub parallel: bool,
    pub histogram: BTreeMap<String, usize>,
    pub min_optimum: Option<usize>,
    pub instances: Vec<InstanceRow>,
    pub exit: i32,
}

#[derive(Serialize)]
pub struct FalsificationRow {
    pub trial: usize,
    #[serde(rename = "P")]
    pub p: Vec<Pt>,
    #[serde(rename = "R")]
    pub r: Vec<Pt>,
}

#[derive(Serialize)]
pub struct ScanRow {
    pub trial: usize,
    pub seed: u64,
    pub optimum: usize,
    pub witnesses_tested: usize,
    pub truncated: bool,
}

#[derive(Serialize)]
pub struct ScanReport {
    pub command: &'static str,
    pub scan: &'static str,
    pub mode: String,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub bound: i64,
    pub cap: usize,
    pub parallel: bool,
    pub histogram: BTreeMap<String, usize>,
    pub in_hypothesis: usize,
    pub below_n: usize,
    pub witnesses_tested: usize,
    pub falsification_count: usize,
    pub falsifications: Vec<FalsificationRow>,
    pub trials_detail: Vec<ScanRow>,
    pub note: &'static str,
    pub exit: i32,
}

#[derive(Serialize)]
pub struct RenderReport {
    pub command: &'static str,
    pub file: String,
    pub out: String,
    pub glyphs: usize,
    pub arrows: usize,
    pub lines: usize,
    pub exit: i32,
}

#[derive(Serialize)]
pub struct CheckRow {
    pub check: &'static str,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct MismatchRow {
    pub check: &'static str,
    pub fast: String,
    pub oracle: String,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub command: &'static str,
    pub file: String,
    pub exhaustive: bool,
    pub checks: Vec<CheckRow>,
    pub mismatches: Vec<MismatchRow>,
    /// The fast path found no violations and the stored cubic (if any) vanishes.
    pub verdict_positive: bool,
    pub exit: i32,
}
