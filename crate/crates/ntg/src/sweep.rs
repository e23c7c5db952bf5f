//! Sweep files in TOML or JSON, translated into [`SweepSpec`].
//!
//! ```toml
//! figures = true
//!
//! [[group]]
//! name = "odd-fields"
//! fields = { max = 361, parity = "odd" }
//! n = "1..16"
//!
//! [[group]]
//! name = "products"
//! products = { primes = [2, 3, 5, 7], factors = "2..3" }
//! ideals = "coordinate-unions"
//! n = [1, 6]
//!
//! [[expect]]
//! ring = "Fp:7"
//! n = 3
//! side = "complement"
//! summary = "K_{3,3}"
//! ```

use std::ops::RangeInclusive;
use std::path::Path;

use ntg_core::arith::prime_powers_in;
use ntg_core::graph::build_graph;
use ntg_core::oracle::{IdealSelection, SweepGroup, SweepSpec};
use ntg_core::structure::decompose;
use ntg_core::{IdealDescriptor, IdealUnion, Ring, RingDescriptor, Side};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const PAPER_SUITE_NAME: &str = "paper_suite";
pub const PAPER_SUITE: &str = include_str!("../suites/paper_suite.toml");

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepFile {
    #[serde(default)]
    figures: bool,
    #[serde(default, rename = "group")]
    groups: Vec<GroupDto>,
    #[serde(default, rename = "expect")]
    expectations: Vec<ExpectDto>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDto {
    name: String,
    #[serde(default)]
    rings: Vec<String>,
    fields: Option<FieldsDto>,
    products: Option<ProductsDto>,
    ideals: Option<IdealsDto>,
    n: RangeDto,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldsDto {
    #[serde(default = "two")]
    min: u64,
    max: u64,
    #[serde(default)]
    parity: Parity,
}

fn two() -> u64 {
    2
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Parity {
    #[default]
    Any,
    Odd,
    Even,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductsDto {
    primes: Vec<u32>,
    factors: RangeDto,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum IdealsDto {
    Keyword(String),
    Listed(Vec<String>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum RangeDto {
    Single(u64),
    Pair([u64; 2]),
    Text(String),
}

impl RangeDto {
    fn to_range(&self) -> Result<RangeInclusive<u64>, String> {
        match self {
            RangeDto::Single(v) => Ok(*v..=*v),
            RangeDto::Pair([a, b]) => checked(*a, *b),
            RangeDto::Text(s) => parse_range(s),
        }
    }
}

fn checked(lo: u64, hi: u64) -> Result<RangeInclusive<u64>, String> {
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// `5`, `1..16` or `1..=16`; both ends inclusive.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let s = s.trim();
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad range `{s}`"));
    match s.split_once("..") {
        None => num(s).map(|v| v..=v),
        Some((a, b)) => checked(num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
    }
}

pub fn parse_side(s: &str) -> Result<Side, String> {
    match s.to_ascii_lowercase().as_str() {
        "whole" | "r" => Ok(Side::Whole),
        "d" => Ok(Side::D),
        "complement" | "r\\d" => Ok(Side::Complement),
        _ => Err(format!("unknown side `{s}` (whole, d, complement)")),
    }
}

pub fn side_name(side: Side) -> &'static str {
    match side {
        Side::Whole => "whole",
        Side::D => "d",
        Side::Complement => "complement",
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExpectDto {
    ring: String,
    ideal: Option<String>,
    n: u32,
    #[serde(default = "whole")]
    side: String,
    summary: Option<String>,
    connected: Option<bool>,
}

fn whole() -> String {
    "whole".into()
}

/// A stated property of one graph, checked by brute force.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub ring: RingDescriptor,
    pub ideal: Option<IdealDescriptor>,
    pub n: u32,
    pub side: Side,
    pub summary: Option<String>,
    pub connected: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectationResult {
    pub config: String,
    pub side: &'static str,
    pub expected: String,
    pub observed: String,
    pub ok: bool,
}

/// Every coordinate zero cylinder; `{0}` for a field.
pub fn default_ideal(ring: &Ring) -> IdealDescriptor {
    let positions: Vec<usize> = (0..ring.factors().len()).collect();
    IdealDescriptor::coordinate_zeros(&positions)
}

impl Expectation {
    pub fn check(&self) -> Result<ExpectationResult, CliError> {
        let ring = Ring::from_descriptor(&self.ring)?;
        let desc = self.ideal.clone().unwrap_or_else(|| default_ideal(&ring));
        let ideal = IdealUnion::new(&ring, &desc)?;
        let g = build_graph(&ring, &ideal, self.n)?.induced_subgraph(self.side);
        let report = decompose(&g);
        let mut expected = Vec::new();
        let mut observed = Vec::new();
        let mut ok = true;
        if let Some(s) = &self.summary {
            expected.push(format!("summary {s}"));
            observed.push(format!("summary {}", report.summary()));
            ok &= *s == report.summary();
        }
        if let Some(c) = self.connected {
            expected.push(format!("connected={c}"));
            observed.push(format!("connected={}", report.connected));
            ok &= c == report.connected;
        }
        Ok(ExpectationResult {
            config: format!("{} D={} n={}", ring.descriptor(), ideal.descriptor(), self.n),
            side: side_name(self.side),
            expected: expected.join(", "),
            observed: observed.join(", "),
            ok,
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Sweep {
    pub spec: SweepSpec,
    pub expectations: Vec<Expectation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Toml,
    Json,
}

pub fn parse_sweep(text: &str, format: Format) -> Result<Sweep, CliError> {
    let file: SweepFile = match format {
        Format::Toml => toml::from_str(text)?,
        Format::Json => serde_json::from_str(text)?,
    };
    convert(file)
}

/// `paper_suite` names the bundled suite; anything else is a path, read as
/// JSON when it ends in `.json` and as TOML otherwise.
pub fn load_sweep(source: &str) -> Result<Sweep, CliError> {
    if source == PAPER_SUITE_NAME {
        return parse_sweep(PAPER_SUITE, Format::Toml);
    }
    let text = std::fs::read_to_string(source).map_err(|e| CliError::Read {
        path: source.to_string(),
        source: e,
    })?;
    let format = match Path::new(source).extension().and_then(|e| e.to_str()) {
        Some("json") => Format::Json,
        _ => Format::Toml,
    };
    parse_sweep(&text, format)
}

fn malformed(group: &str, why: impl std::fmt::Display) -> CliError {
    CliError::Core(ntg_core::Error::MalformedSweep(format!("group `{group}`: {why}")))
}

fn convert(file: SweepFile) -> Result<Sweep, CliError> {
    let mut groups = Vec::new();
    for g in file.groups {
        let bad = |why: String| malformed(&g.name, why);
        let mut rings = Vec::new();
        for r in &g.rings {
            let rd = r.parse::<RingDescriptor>().map_err(|e| bad(e.to_string()))?;
            Ring::from_descriptor(&rd).map_err(|e| bad(e.to_string()))?;
            rings.push(rd);
        }
        if let Some(f) = &g.fields {
            for m in prime_powers_in(f.min, f.max) {
                let keep = match f.parity {
                    Parity::Any => true,
                    Parity::Odd => m % 2 == 1,
                    Parity::Even => m % 2 == 0,
                };
                if keep {
                    rings.push(RingDescriptor::field(m).map_err(|e| bad(e.to_string()))?);
                }
            }
        }
        if let Some(p) = &g.products {
            let f = p.factors.to_range().map_err(&bad)?;
            let f = *f.start() as usize..=*f.end() as usize;
            rings.extend(RingDescriptor::products_of_primes(&p.primes, f));
        }
        if rings.is_empty() {
            return Err(bad("no rings".into()));
        }
        let ideals = match &g.ideals {
            None => IdealSelection::CoordinateUnions,
            Some(IdealsDto::Keyword(k)) if k == "coordinate-unions" => IdealSelection::CoordinateUnions,
            Some(IdealsDto::Keyword(k)) => return Err(bad(format!("unknown ideal selection `{k}`"))),
            Some(IdealsDto::Listed(list)) => IdealSelection::Listed(
                list.iter()
                    .map(|s| s.parse::<IdealDescriptor>().map_err(|e| bad(e.to_string())))
                    .collect::<Result<_, _>>()?,
            ),
        };
        let n = g.n.to_range().map_err(&bad)?;
        let n = u32::try_from(*n.start()).map_err(|e| bad(e.to_string()))?
            ..=u32::try_from(*n.end()).map_err(|e| bad(e.to_string()))?;
        groups.push(SweepGroup { name: g.name, rings, ideals, n });
    }
    let mut expectations = Vec::new();
    for e in file.expectations {
        let usage = |why: String| CliError::Usage(format!("expect {}: {why}", e.ring));
        expectations.push(Expectation {
            ring: e.ring.parse().map_err(|err: ntg_core::Error| usage(err.to_string()))?,
            ideal: e
                .ideal
                .as_deref()
                .map(str::parse)
                .transpose()
                .map_err(|err: ntg_core::Error| usage(err.to_string()))?,
            n: e.n,
            side: parse_side(&e.side).map_err(usage)?,
            summary: e.summary.clone(),
            connected: e.connected,
        });
    }
    Ok(Sweep {
        spec: SweepSpec { groups, figures: file.figures },
        expectations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..16").unwrap(), 1..=16);
        assert_eq!(parse_range("1..=16").unwrap(), 1..=16);
        assert_eq!(parse_range(" 7 ").unwrap(), 7..=7);
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("a..2").is_err());
        assert!(parse_range("").is_err());
    }

    #[test]
    fn bundled_suite_parses() {
        let s = load_sweep(PAPER_SUITE_NAME).unwrap();
        assert!(s.spec.figures);
        let names: Vec<&str> = s.spec.groups.iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["char2-fields", "odd-fields", "products"]);
        assert_eq!(s.spec.groups[0].rings.len(), 8);
        assert_eq!(s.spec.groups[1].rings.len(), 83);
        assert_eq!(s.spec.groups[2].rings.len(), 30);
    }

    #[test]
    fn toml_and_json_agree() {
        let toml = r#"
            [[group]]
            name = "g"
            rings = ["Fp:7", "prod(Fp:2,Fp:3)"]
            ideals = ["zero@1"]
            n = [1, 3]
        "#;
        let json = r#"{"group": [{"name": "g", "rings": ["Fp:7", "prod(Fp:2,Fp:3)"],
            "ideals": ["zero@1"], "n": "1..3"}]}"#;
        let a = parse_sweep(toml, Format::Toml).unwrap();
        let b = parse_sweep(json, Format::Json).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.spec.groups[0].n, 1..=3);
    }

    #[test]
    fn malformed_files() {
        for bad in [
            "[[group]]\nname = \"g\"\nn = 1",
            "[[group]]\nname = \"g\"\nrings = [\"Fp:6\"]\nn = 1",
            "[[group]]\nname = \"g\"\nrings = [\"Fp:5\"]\nn = \"3..1\"",
            "[[group]]\nname = \"g\"\nrings = [\"Fp:5\"]\nideals = \"all\"\nn = 1",
            "[[group]]\nname = \"g\"\nrings = [\"Fp:5\"]\nn = 1\nextra = 2",
            "[[expect]]\nring = \"Fp:5\"\nn = 1\nside = \"left\"",
        ] {
            assert!(parse_sweep(bad, Format::Toml).is_err(), "{bad}");
        }
    }

    #[test]
    fn expectations() {
        let s = parse_sweep(
            "[[expect]]\nring = \"Fp:7\"\nn = 3\nside = \"complement\"\nsummary = \"K_{3,3}\"\n\
             [[expect]]\nring = \"Fp:7\"\nn = 3\nconnected = true",
            Format::Toml,
        )
        .unwrap();
        let r: Vec<_> = s.expectations.iter().map(|e| e.check().unwrap()).collect();
        assert!(r[0].ok);
        assert!(!r[1].ok);
        assert_eq!(r[1].observed, "connected=false");
    }
}
