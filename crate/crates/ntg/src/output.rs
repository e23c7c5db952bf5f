//! Serializable views of graphs, reports, ledgers and window results.
//! Infinite distances and girths are written as `null`.

use std::collections::BTreeMap;

use ntg_core::oracle::{Ledger, Tally};
use ntg_core::witness::{
    ChainCheck, CorollaryReport, CorollaryVerdict, DiameterReport, F2Poly, LowerBound, ZWindowReport,
    ZxyReport,
};
use ntg_core::{Dist, NTotalGraph, StructureReport};
use serde::Serialize;

use crate::sweep::ExpectationResult;

fn dist(d: Dist) -> Option<u32> {
    d.finite()
}

#[derive(Serialize)]
pub struct GraphJson {
    pub ring: String,
    #[serde(rename = "D")]
    pub ideal: String,
    pub n: u32,
    pub side: String,
    pub vertices: Vec<String>,
    pub edges: Vec<[u32; 2]>,
    pub notes: Vec<String>,
}

impl GraphJson {
    pub fn new(g: &NTotalGraph, notes: Vec<String>) -> Self {
        GraphJson {
            ring: g.ring().descriptor().to_string(),
            ideal: g.ideal().to_string(),
            n: g.n(),
            side: g.side().to_string(),
            vertices: g.vertices().iter().map(|&v| g.ring().label(v)).collect(),
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
            notes,
        }
    }
}

#[derive(Serialize)]
pub struct ClassJson {
    pub kind: &'static str,
    pub sizes: Vec<u32>,
    pub count: usize,
}

#[derive(Serialize)]
pub struct ReportJson {
    pub summary: String,
    pub classes: Vec<ClassJson>,
    pub connected: bool,
    pub totally_disconnected: bool,
    pub diameter: Option<u32>,
    pub girth: Option<u32>,
    pub component_diameters: Vec<u32>,
}

impl From<&StructureReport> for ReportJson {
    fn from(r: &StructureReport) -> Self {
        ReportJson {
            summary: r.summary(),
            classes: r
                .classes
                .iter()
                .map(|&(c, count)| ClassJson { kind: c.kind(), sizes: c.sizes(), count })
                .collect(),
            connected: r.connected,
            totally_disconnected: r.totally_disconnected,
            diameter: dist(r.diameter),
            girth: dist(r.girth),
            component_diameters: r.component_diameters.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct TallyJson {
    #[serde(rename = "match")]
    pub matches: usize,
    #[serde(rename = "mismatch")]
    pub mismatches: usize,
    pub inapplicable: usize,
}

impl From<Tally> for TallyJson {
    fn from(t: Tally) -> Self {
        TallyJson { matches: t.matches, mismatches: t.mismatches, inapplicable: t.inapplicable }
    }
}

#[derive(Serialize)]
pub struct EntryJson {
    pub theorem: &'static str,
    pub config: String,
    pub verdict: &'static str,
    pub predicted: String,
    pub observed: String,
}

#[derive(Serialize)]
pub struct LedgerJson {
    pub configurations: usize,
    pub tally: TallyJson,
    pub by_theorem: BTreeMap<&'static str, TallyJson>,
    pub mismatches: Vec<EntryJson>,
    pub expectations: Vec<ExpectationResult>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<EntryJson>>,
}

impl LedgerJson {
    pub fn new(ledger: &Ledger, expectations: Vec<ExpectationResult>, all_entries: bool) -> Self {
        let entry = |e: &ntg_core::oracle::LedgerEntry| EntryJson {
            theorem: e.theorem.as_str(),
            config: e.config.to_string(),
            verdict: e.outcome.verdict.as_str(),
            predicted: e.outcome.predicted.clone(),
            observed: e.outcome.observed.clone(),
        };
        LedgerJson {
            configurations: ledger.configurations,
            tally: ledger.tally().into(),
            by_theorem: ledger
                .tally_by_theorem()
                .into_iter()
                .map(|(id, t)| (id.as_str(), t.into()))
                .collect(),
            mismatches: ledger.mismatches().map(entry).collect(),
            expectations,
            notes: ledger.notes.clone(),
            entries: all_entries.then(|| ledger.entries.iter().map(entry).collect()),
        }
    }
}

fn polys(p: &[F2Poly]) -> Vec<String> {
    p.iter().map(F2Poly::to_string).collect()
}

#[derive(Serialize)]
pub struct ZWindowJson {
    pub ring: &'static str,
    pub primes: Vec<u64>,
    pub n: u32,
    pub radius: i64,
    pub distance: Option<u32>,
    pub path: Option<Vec<String>>,
    pub witness: Option<Vec<String>>,
    pub verdict: &'static str,
}

pub fn z_verdict(r: &ZWindowReport) -> &'static str {
    if r.confirms_distance_two() {
        "window-confirmed"
    } else if r.n % 2 == 1 {
        "mismatch"
    } else {
        "no-prediction"
    }
}

impl From<&ZWindowReport> for ZWindowJson {
    fn from(r: &ZWindowReport) -> Self {
        let strings = |v: &[i64]| v.iter().map(i64::to_string).collect();
        ZWindowJson {
            ring: "Z",
            primes: r.primes.clone(),
            n: r.n,
            radius: r.radius,
            distance: dist(r.distance),
            path: r.path.as_deref().map(strings),
            witness: r.witness.as_ref().map(|w| strings(w)),
            verdict: z_verdict(r),
        }
    }
}

#[derive(Serialize)]
pub struct EdgeJson {
    pub from: String,
    pub to: String,
    pub ideal: Option<String>,
}

#[derive(Serialize)]
pub struct ChainJson {
    pub n: u32,
    pub path: Vec<String>,
    pub edges: Vec<EdgeJson>,
    pub holds: bool,
}

impl ChainJson {
    fn new(c: &ChainCheck, vars: usize) -> Self {
        ChainJson {
            n: c.n,
            path: polys(&c.path()),
            edges: c
                .edges
                .iter()
                .map(|e| EdgeJson {
                    from: e.from.to_string(),
                    to: e.to.to_string(),
                    ideal: e.generator.map(|g| format!("({})", g.describe(vars))),
                })
                .collect(),
            holds: c.holds(),
        }
    }
}

#[derive(Serialize)]
pub struct LowerBoundJson {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl From<&LowerBound> for LowerBoundJson {
    fn from(l: &LowerBound) -> Self {
        match l {
            LowerBound::WindowConfirmed { distance } => {
                LowerBoundJson { status: "window-confirmed", distance: Some(*distance), reason: None }
            }
            LowerBound::UpperBoundOnly { reason } => {
                LowerBoundJson { status: "upper-bound-only", distance: None, reason: Some(reason.clone()) }
            }
            LowerBound::Violated { distance } => {
                LowerBoundJson { status: "violated", distance: Some(*distance), reason: None }
            }
        }
    }
}

#[derive(Serialize)]
pub struct CorollaryJson {
    pub bound: u32,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl From<&CorollaryReport> for CorollaryJson {
    fn from(c: &CorollaryReport) -> Self {
        let (status, distance, reason) = match &c.verdict {
            CorollaryVerdict::Trivial => ("trivial", None, None),
            CorollaryVerdict::Holds { distance } => ("holds", Some(*distance), None),
            CorollaryVerdict::Violated { distance } => ("violated", Some(*distance), None),
            CorollaryVerdict::UpperBoundOnly { reason } => ("upper-bound-only", None, Some(reason.clone())),
        };
        CorollaryJson { bound: c.bound, status, distance, reason }
    }
}

#[derive(Serialize)]
pub struct F2Json {
    pub ring: &'static str,
    pub vars: usize,
    pub m: usize,
    pub chains: Vec<ChainJson>,
    pub common_zero_certificate: bool,
    pub window_vertices: usize,
    pub lower_bound: LowerBoundJson,
    pub window_path: Option<Vec<String>>,
    pub corollary: CorollaryJson,
}

impl F2Json {
    pub fn new(d: &DiameterReport, c: &CorollaryReport) -> Self {
        let vars = d.m - 1;
        F2Json {
            ring: "F2poly",
            vars,
            m: d.m,
            chains: d.chains.iter().map(|ch| ChainJson::new(ch, vars)).collect(),
            common_zero_certificate: d.certificate,
            window_vertices: d.window_vertices,
            lower_bound: (&d.lower_bound).into(),
            window_path: d.window_path.as_deref().map(polys),
            corollary: c.into(),
        }
    }
}

#[derive(Serialize)]
pub struct ZxyJson {
    pub ring: &'static str,
    pub n: u32,
    pub deg_cap: u32,
    pub coef_cap: u32,
    pub len_cap: u32,
    pub vertices: usize,
    pub levels: Vec<usize>,
    pub reached: usize,
    pub constant_term_violation: Option<String>,
    pub one_reached: bool,
    pub zero_neighbors_in_d: bool,
    pub verdict: &'static str,
}

impl From<&ZxyReport> for ZxyJson {
    fn from(r: &ZxyReport) -> Self {
        ZxyJson {
            ring: "ZXY",
            n: r.n,
            deg_cap: r.deg_cap,
            coef_cap: r.coef_cap,
            len_cap: r.len_cap,
            vertices: r.vertices,
            levels: r.levels.clone(),
            reached: r.reached(),
            constant_term_violation: r.constant_term_violation.clone(),
            one_reached: r.one_reached,
            zero_neighbors_in_d: r.zero_neighbors_in_d,
            verdict: if r.confirmed() { "window-confirmed" } else { "violated" },
        }
    }
}
