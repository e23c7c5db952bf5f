//! Closed-form predictions checked against brute force.
//!
//! A sweep expands into configurations `(ring, D, n)`. Every configuration is
//! run through every [`TheoremId`]; hypotheses are checked first, so a
//! statement that does not apply is recorded as inapplicable rather than
//! skipped.

mod analysis;
mod checks;
mod predict;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::RangeInclusive;

pub use analysis::Analysis;
pub use checks::{
    check, minimal_generator_count, GeneratorSearch, Outcome, TheoremId, Verdict,
    GENERATOR_SEARCH_CAP,
};
pub use predict::{
    predict_connectivity_corollary, predict_diam_girth_ranges, predict_field_char2,
    predict_field_odd_char, RangeCheck,
};

use crate::drawings;
use crate::ideal::{IdealDescriptor, IdealUnion};
use crate::ring::{Ring, RingDescriptor};
use crate::Error;

/// One `(ring, D, n)` triple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Config {
    pub ring: RingDescriptor,
    pub ideal: IdealDescriptor,
    pub n: u32,
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} D={} n={}", self.ring, self.ideal, self.n)
    }
}

/// Which ideal unions a sweep group uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealSelection {
    Listed(Vec<IdealDescriptor>),
    /// Every nonempty union of coordinate zero cylinders (`zero` for fields).
    CoordinateUnions,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepGroup {
    pub name: String,
    pub rings: Vec<RingDescriptor>,
    pub ideals: IdealSelection,
    pub n: RangeInclusive<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSpec {
    pub groups: Vec<SweepGroup>,
    /// Also compare the reference drawings and record their errata.
    pub figures: bool,
}

/// A ring and ideal union built once, with the exponents to run.
pub struct PreparedCase {
    pub ring: Ring,
    pub ideal: IdealUnion,
    pub exponents: Vec<u32>,
}

impl PreparedCase {
    pub fn configs(&self) -> impl Iterator<Item = Config> + '_ {
        self.exponents.iter().map(|&n| Config {
            ring: self.ring.descriptor().clone(),
            ideal: self.ideal.descriptor().clone(),
            n,
        })
    }
}

impl SweepSpec {
    /// Builds every ring and ideal union in sweep order.
    pub fn prepare(&self) -> Result<Vec<PreparedCase>, Error> {
        let mut out = Vec::new();
        for g in &self.groups {
            if g.n.start() == &0 {
                return Err(Error::MalformedSweep(alloc::format!(
                    "group `{}`: exponents start at 1",
                    g.name
                )));
            }
            if g.n.is_empty() {
                return Err(Error::MalformedSweep(alloc::format!(
                    "group `{}`: empty exponent range",
                    g.name
                )));
            }
            for rd in &g.rings {
                let ring = Ring::from_descriptor(rd)
                    .map_err(|e| Error::MalformedSweep(alloc::format!("group `{}`: {e}", g.name)))?;
                let ideals = match &g.ideals {
                    IdealSelection::Listed(list) => list.clone(),
                    IdealSelection::CoordinateUnions => {
                        IdealDescriptor::all_coordinate_unions(ring.factors().len())
                    }
                };
                for id in ideals {
                    let ideal = IdealUnion::new(&ring, &id).map_err(|e| {
                        Error::MalformedSweep(alloc::format!("group `{}`, {rd} D={id}: {e}", g.name))
                    })?;
                    out.push(PreparedCase {
                        ring: ring.clone(),
                        ideal,
                        exponents: g.n.clone().collect(),
                    });
                }
            }
        }
        Ok(out)
    }
}

/// One theorem on one configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub theorem: TheoremId,
    pub config: Config,
    pub outcome: Outcome,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub matches: usize,
    pub mismatches: usize,
    pub inapplicable: usize,
}

impl Tally {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Match => self.matches += 1,
            Verdict::Mismatch => self.mismatches += 1,
            Verdict::Inapplicable => self.inapplicable += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.matches + self.mismatches + self.inapplicable
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Ledger {
    pub configurations: usize,
    pub entries: Vec<LedgerEntry>,
    /// Drawing errata and other remarks.
    pub notes: Vec<String>,
}

impl Ledger {
    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for e in &self.entries {
            t.add(e.outcome.verdict);
        }
        t
    }

    pub fn tally_by_theorem(&self) -> BTreeMap<TheoremId, Tally> {
        let mut map: BTreeMap<TheoremId, Tally> = BTreeMap::new();
        for e in &self.entries {
            map.entry(e.theorem).or_default().add(e.outcome.verdict);
        }
        map
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &LedgerEntry> {
        self.entries
            .iter()
            .filter(|e| e.outcome.verdict == Verdict::Mismatch)
    }

    pub fn has_mismatch(&self) -> bool {
        self.mismatches().next().is_some()
    }

    /// Every configuration appears once per theorem.
    pub fn is_complete(&self) -> bool {
        self.entries.len() == self.configurations * TheoremId::ALL.len()
    }

    /// Per-theorem summary, then mismatches, then notes.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = self.write_text(&mut out);
        out
    }

    fn write_text(&self, out: &mut String) -> fmt::Result {
        let t = self.tally();
        writeln!(
            out,
            "configurations: {}  checks: {}  match: {}  mismatch: {}  inapplicable: {}",
            self.configurations,
            t.total(),
            t.matches,
            t.mismatches,
            t.inapplicable
        )?;
        writeln!(out)?;
        writeln!(
            out,
            "{:<40} {:>7} {:>9} {:>13}",
            "theorem", "match", "mismatch", "inapplicable"
        )?;
        for (id, t) in self.tally_by_theorem() {
            writeln!(
                out,
                "{:<40} {:>7} {:>9} {:>13}",
                id.as_str(),
                t.matches,
                t.mismatches,
                t.inapplicable
            )?;
        }
        if self.has_mismatch() {
            writeln!(out, "\nmismatches:")?;
            for e in self.mismatches() {
                writeln!(
                    out,
                    "  {} [{}]\n    predicted: {}\n    observed:  {}",
                    e.theorem, e.config, e.outcome.predicted, e.outcome.observed
                )?;
            }
        }
        if !self.notes.is_empty() {
            writeln!(out, "\nnotes:")?;
            for n in &self.notes {
                writeln!(out, "  - {n}")?;
            }
        }
        Ok(())
    }
}

/// All theorem outcomes for one configuration, in [`TheoremId::ALL`] order.
pub fn verify_config(ring: &Ring, ideal: &IdealUnion, n: u32) -> Result<Vec<LedgerEntry>, Error> {
    let config = Config {
        ring: ring.descriptor().clone(),
        ideal: ideal.descriptor().clone(),
        n,
    };
    let analysis = Analysis::new(&config, ring, ideal)?;
    Ok(TheoremId::ALL
        .iter()
        .map(|&t| LedgerEntry {
            theorem: t,
            config: config.clone(),
            outcome: check(t, &analysis),
        })
        .collect())
}

/// Notes that accompany a sweep: drawing errata when requested, and the
/// two-element field remark when `F_2` is swept.
pub fn sweep_notes(spec: &SweepSpec, cases: &[PreparedCase]) -> Result<Vec<String>, Error> {
    let mut notes = Vec::new();
    if spec.figures {
        notes.extend(drawings::errata_notes()?);
    }
    if cases.iter().any(|c| c.ring.is_field() && c.ring.order() == 2) {
        notes.push(
            "F_2 with D = {0}: 1^n + 1^n = 0 lies in D but would join 1 to itself, which a simple \
             graph drops, and 0^n + 1^n = 1 does not; so 0 and 1 are both isolated and the \
             prediction K_1 + K_1 holds"
                .to_string(),
        );
    }
    Ok(notes)
}

/// Runs every theorem on every configuration of the sweep, in order.
pub fn verify_all(spec: &SweepSpec) -> Result<Ledger, Error> {
    let cases = spec.prepare()?;
    let mut ledger = Ledger {
        notes: sweep_notes(spec, &cases)?,
        ..Ledger::default()
    };
    for case in &cases {
        for &n in &case.exponents {
            ledger
                .entries
                .extend(verify_config(&case.ring, &case.ideal, n)?);
            ledger.configurations += 1;
        }
    }
    Ok(ledger)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn group(name: &str, rings: &[&str], ideals: IdealSelection, n: RangeInclusive<u32>) -> SweepGroup {
        SweepGroup {
            name: name.into(),
            rings: rings.iter().map(|r| r.parse().unwrap()).collect(),
            ideals,
            n,
        }
    }

    #[test]
    fn empty_sweep() {
        let ledger = verify_all(&SweepSpec::default()).unwrap();
        assert!(ledger.entries.is_empty());
        assert!(ledger.is_complete());
        assert!(!ledger.has_mismatch());
    }

    #[test]
    fn small_field_sweep_matches() {
        let spec = SweepSpec {
            groups: vec![group(
                "fields",
                &["Fp:2", "Fq:2:2", "Fp:3", "Fp:7", "Fq:3:2"],
                IdealSelection::CoordinateUnions,
                1..=6,
            )],
            figures: false,
        };
        let ledger = verify_all(&spec).unwrap();
        assert_eq!(ledger.configurations, 30);
        assert!(ledger.is_complete());
        assert!(!ledger.has_mismatch(), "{}", ledger.render_text());
        let by = ledger.tally_by_theorem();
        assert_eq!(by[&TheoremId::Char2FieldDecomposition].matches, 12);
        assert_eq!(by[&TheoremId::OddFieldDecomposition].matches, 18);
        assert!(ledger.notes.iter().any(|n| n.contains("F_2")));
    }

    #[test]
    fn product_sweep_matches() {
        let spec = SweepSpec {
            groups: vec![group(
                "products",
                &["prod(Fp:2,Fp:3)", "prod(Fp:3,Fp:7)", "prod(Fp:2,Fp:2,Fp:3)"],
                IdealSelection::CoordinateUnions,
                1..=4,
            )],
            figures: false,
        };
        let ledger = verify_all(&spec).unwrap();
        assert!(!ledger.has_mismatch(), "{}", ledger.render_text());
        // Z3 x Z7, n = 2: no u anywhere, so the two-cylinder check expects disconnection
        let e = ledger
            .entries
            .iter()
            .find(|e| {
                e.theorem == TheoremId::TwoCylinderDiameter
                    && e.config.to_string() == "prod(Fp:3,Fp:7) D=zero@1|zero@2 n=2"
            })
            .unwrap();
        assert_eq!(e.outcome.verdict, Verdict::Match);
        assert!(e.outcome.observed.starts_with("connected=false"));
    }

    #[test]
    fn malformed_sweeps() {
        let bad_n = SweepSpec {
            groups: vec![group("g", &["Fp:5"], IdealSelection::CoordinateUnions, 0..=3)],
            figures: false,
        };
        assert!(matches!(verify_all(&bad_n), Err(Error::MalformedSweep(_))));
        let bad_ring = SweepSpec {
            groups: vec![group("g", &["Fp:6"], IdealSelection::CoordinateUnions, 1..=3)],
            figures: false,
        };
        assert!(matches!(verify_all(&bad_ring), Err(Error::MalformedSweep(_))));
    }
}
