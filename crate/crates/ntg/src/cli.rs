//! Command-line front end. [`run`] takes the argument list and output streams
//! and returns the exit code: 0 on success, 1 when a verification finds a
//! mismatch, 2 on usage or configuration errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ntg_core::drawings;
use ntg_core::graph::build_graph;
use ntg_core::oracle::{predict_field_char2, predict_field_odd_char};
use ntg_core::structure::decompose;
use ntg_core::witness::{
    verify_corollary_rminusd, verify_diameter_m_construction, verify_z_window, verify_zxy_nonconnectivity,
    witness_vertex, CorollaryVerdict, F2WindowSpec, Generator, LowerBound, ZWindowReport,
};
use ntg_core::{FieldParams, IdealUnion, Ring, RingDescriptor, Side, StructureReport};
use rayon::prelude::*;
use serde::Serialize;

use crate::output::{F2Json, GraphJson, LedgerJson, ReportJson, ZWindowJson, ZxyJson};
use crate::parallel::{pool, verify_parallel};
use crate::sweep::{default_ideal, load_sweep, parse_range, parse_side, side_name};
use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "ntg", version, about = "n-total graphs of finite commutative rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build one graph and write it as DOT or JSON
    Graph(GraphArgs),
    /// Decompose a graph, its D part and its R\D part
    Analyze(AnalyzeArgs),
    /// Run a sweep file (or the bundled `paper_suite`) through every check
    Verify(VerifyArgs),
    /// Tabulate field structures over ranges of orders and exponents
    Scan(ScanArgs),
    /// Bounded checks over Z, F2[X1..Xk] and Z[X,Y]
    Window(WindowArgs),
}

#[derive(Args, Debug)]
struct Target {
    /// Ring: Fp:7, Fq:3:2, Fq:2:2:1,1,1 or prod(Fp:2,Fp:3)
    #[arg(long)]
    ring: String,
    /// Ideal union such as zero, zero@1|zero@2; defaults to every coordinate zero
    #[arg(long)]
    ideal: Option<String>,
    #[arg(long)]
    n: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[command(flatten)]
    target: Target,
    /// whole, d or complement
    #[arg(long, default_value = "whole")]
    side: String,
    #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
    format: GraphFormat,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Path to a TOML or JSON sweep file, or `paper_suite`
    source: String,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
    /// Include every ledger entry in JSON output
    #[arg(long)]
    entries: bool,
}

#[derive(Args, Debug)]
struct ScanArgs {
    /// Field orders, e.g. 2..64; orders that are not prime powers are skipped
    #[arg(long)]
    m: String,
    /// Exponents, e.g. 1..8
    #[arg(long)]
    n: String,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WindowRing {
    #[value(name = "Z")]
    Z,
    #[value(name = "F2poly")]
    F2poly,
    #[value(name = "ZXY")]
    Zxy,
}

#[derive(Args, Debug)]
struct WindowArgs {
    #[arg(long, value_enum, ignore_case = true)]
    ring: WindowRing,
    /// Primes for Z, comma separated
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    primes: Vec<u64>,
    /// Exponent or range; defaults to 1..5 (Z), 1..8 (F2poly), 1..3 (ZXY)
    #[arg(long)]
    n: Option<String>,
    /// Window radius for Z; defaults to the smallest one holding the witness path
    #[arg(long)]
    radius: Option<i64>,
    /// Number of variables for F2poly (m - 1)
    #[arg(long, default_value_t = 3)]
    vars: usize,
    /// Degree cap; defaults to 2 (F2poly) and 3 (ZXY)
    #[arg(long)]
    deg_cap: Option<u32>,
    /// Monomial-count cap for F2poly
    #[arg(long)]
    max_terms: Option<usize>,
    /// Coefficient bound for ZXY
    #[arg(long, default_value_t = 1)]
    coef_cap: u32,
    /// Path length cap for ZXY
    #[arg(long, default_value_t = 6)]
    len_cap: u32,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let result = match &cli.command {
        Command::Graph(a) => cmd_graph(a, out, err),
        Command::Analyze(a) => cmd_analyze(a, out, err),
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Scan(a) => cmd_scan(a, out, err),
        Command::Window(a) => cmd_window(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

struct Built {
    ring: Ring,
    ideal: IdealUnion,
    n: u32,
}

fn build(t: &Target) -> Result<Built, CliError> {
    let ring = Ring::from_descriptor(&t.ring.parse::<RingDescriptor>()?)?;
    let ideal = match &t.ideal {
        Some(s) => IdealUnion::parse(&ring, s)?,
        None => IdealUnion::new(&ring, &default_ideal(&ring))?,
    };
    Ok(Built { ring, ideal, n: t.n })
}

fn target_line(b: &Built) -> String {
    format!("--ring {} --ideal {} --n {}", b.ring.descriptor(), b.ideal.descriptor(), b.n)
}

fn json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn cmd_graph(a: &GraphArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let b = build(&a.target)?;
    let side = parse_side(&a.side).map_err(CliError::Usage)?;
    writeln!(
        err,
        "# ntg graph {} --side {} --format {}",
        target_line(&b),
        side_name(side),
        format_name(a.format)
    )?;
    let g = build_graph(&b.ring, &b.ideal, b.n)?.induced_subgraph(side);
    let notes = drawings::notes_for(&b.ring, &b.ideal, b.n, side)?;
    match a.format {
        GraphFormat::Dot => write!(out, "{}", g.export_dot(&notes))?,
        GraphFormat::Json => json(out, &GraphJson::new(&g, notes))?,
    }
    Ok(0)
}

fn format_name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn report_line(r: &StructureReport) -> String {
    let diams: Vec<String> = r.component_diameters.iter().map(u32::to_string).collect();
    format!(
        "{}; connected: {}; diameter: {}; girth: {}; component diameters: {}",
        r.summary(),
        yes_no(r.connected),
        r.diameter,
        r.girth,
        diams.join(", ")
    )
}

#[derive(Serialize)]
struct AnalyzeJson {
    ring: String,
    #[serde(rename = "D")]
    ideal: String,
    n: u32,
    d_is_ideal: bool,
    whole: ReportJson,
    d: ReportJson,
    complement: ReportJson,
}

fn cmd_analyze(a: &AnalyzeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let b = build(&a.target)?;
    writeln!(err, "# ntg analyze {} --format {}", target_line(&b), format_name(a.format))?;
    let whole = build_graph(&b.ring, &b.ideal, b.n)?;
    let reports: Vec<StructureReport> = [Side::Whole, Side::D, Side::Complement]
        .iter()
        .map(|&s| decompose(&whole.induced_subgraph(s)))
        .collect();
    let is_ideal = b.ideal.is_ideal(&b.ring);
    match a.format {
        TextFormat::Text => {
            writeln!(out, "{}  D = {}", whole.title(), b.ideal.descriptor())?;
            for (label, r) in ["whole", "D", "R\\D"].iter().zip(&reports) {
                writeln!(out, "{label:<6} {}", report_line(r))?;
            }
            writeln!(out, "D is an ideal: {}", yes_no(is_ideal))?;
        }
        TextFormat::Json => json(
            out,
            &AnalyzeJson {
                ring: b.ring.descriptor().to_string(),
                ideal: b.ideal.descriptor().to_string(),
                n: b.n,
                d_is_ideal: is_ideal,
                whole: (&reports[0]).into(),
                d: (&reports[1]).into(),
                complement: (&reports[2]).into(),
            },
        )?,
    }
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    writeln!(
        err,
        "# ntg verify {} --format {}{}",
        a.source,
        format_name(a.format),
        if a.entries { " --entries" } else { "" }
    )?;
    let sweep = load_sweep(&a.source)?;
    let ledger = verify_parallel(&sweep.spec, &pool()?)?;
    let expectations = sweep
        .expectations
        .iter()
        .map(|e| e.check())
        .collect::<Result<Vec<_>, _>>()?;
    let failed = ledger.has_mismatch() || expectations.iter().any(|e| !e.ok);
    match a.format {
        TextFormat::Text => {
            write!(out, "{}", ledger.render_text())?;
            if !expectations.is_empty() {
                writeln!(out, "\nexpectations:")?;
                for e in &expectations {
                    let status = if e.ok { "ok  " } else { "FAIL" };
                    write!(out, "  {status} {} [{}]: {}", e.config, e.side, e.expected)?;
                    if !e.ok {
                        write!(out, " (observed {})", e.observed)?;
                    }
                    writeln!(out)?;
                }
            }
        }
        TextFormat::Json => json(out, &LedgerJson::new(&ledger, expectations, a.entries))?,
    }
    Ok(if failed { 1 } else { 0 })
}

#[derive(Serialize)]
struct ScanRow {
    m: u64,
    n: u32,
    d: u64,
    alpha: u64,
    side: &'static str,
    summary: String,
    predicted: bool,
}

fn scan_cell(m: u64, n: u32) -> Result<ScanRow, CliError> {
    let ring = Ring::field_of_order(m)?;
    let ideal = IdealUnion::new(&ring, &default_ideal(&ring))?;
    let fp = FieldParams::new(m, n)?;
    let (side, predicted) = if m.is_multiple_of(2) {
        (Side::Whole, predict_field_char2(m, n)?)
    } else {
        (Side::Complement, predict_field_odd_char(m, n)?)
    };
    let report = decompose(&build_graph(&ring, &ideal, n)?.induced_subgraph(side));
    Ok(ScanRow {
        m,
        n,
        d: fp.d,
        alpha: fp.alpha,
        side: side_name(side),
        summary: report.summary(),
        predicted: report == predicted,
    })
}

fn cmd_scan(a: &ScanArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let ms = parse_range(&a.m).map_err(CliError::Usage)?;
    let ns = parse_range(&a.n).map_err(CliError::Usage)?;
    if *ms.start() < 2 || *ns.start() < 1 || *ns.end() > u32::MAX as u64 {
        return Err(CliError::Usage("need m >= 2 and n >= 1".into()));
    }
    if *ms.end() > ntg_core::MAX_GRAPH_ORDER as u64 {
        return Err(CliError::Usage(format!("m is capped at {}", ntg_core::MAX_GRAPH_ORDER)));
    }
    writeln!(
        err,
        "# ntg scan --m {}..{} --n {}..{} --format {}",
        ms.start(),
        ms.end(),
        ns.start(),
        ns.end(),
        format_name(a.format)
    )?;
    let cells: Vec<(u64, u32)> = ntg_core::arith::prime_powers_in(*ms.start(), *ms.end())
        .flat_map(|m| ns.clone().map(move |n| (m, n as u32)))
        .collect();
    let rows: Vec<ScanRow> = pool()?
        .install(|| cells.par_iter().map(|&(m, n)| scan_cell(m, n)).collect::<Result<_, _>>())?;
    match a.format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        TableFormat::Text => {
            for r in &rows {
                let side = if r.side == "whole" { "R" } else { "R\\D" };
                writeln!(
                    out,
                    "m={}, n={}: d={}, α={}, {side} {}{}",
                    r.m,
                    r.n,
                    r.d,
                    r.alpha,
                    r.summary,
                    if r.predicted { "" } else { "  (differs from prediction)" }
                )?;
            }
        }
    }
    Ok(if rows.iter().all(|r| r.predicted) { 0 } else { 1 })
}

fn exponents(a: &WindowArgs, default: &str) -> Result<Vec<u32>, CliError> {
    let r = parse_range(a.n.as_deref().unwrap_or(default)).map_err(CliError::Usage)?;
    if *r.start() == 0 || *r.end() > 64 {
        return Err(CliError::Usage("window exponents must lie in 1..64".into()));
    }
    Ok(r.map(|n| n as u32).collect())
}

fn cmd_window(a: &WindowArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match a.ring {
        WindowRing::Z => window_z(a, out, err),
        WindowRing::F2poly => window_f2(a, out, err),
        WindowRing::Zxy => window_zxy(a, out, err),
    }
}

fn auto_radius(primes: &[u64], n: u32) -> i64 {
    let max_p = primes.iter().copied().max().unwrap_or(2) as i64;
    let w = if primes.len() >= 2 { witness_vertex(primes, n).map_or(0, i64::abs) } else { 0 };
    max_p.max(w).max(2 * max_p)
}

fn window_z(a: &WindowArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let ns = exponents(a, "1..5")?;
    let primes: Vec<String> = a.primes.iter().map(u64::to_string).collect();
    let radius = match a.radius {
        Some(r) => r,
        None => ns.iter().map(|&n| auto_radius(&a.primes, n)).max().unwrap_or(1),
    };
    writeln!(
        err,
        "# ntg window --ring Z --primes {} --n {}..{} --radius {radius} --format {}",
        primes.join(","),
        ns[0],
        ns[ns.len() - 1],
        format_name(a.format)
    )?;
    let reports = ns
        .iter()
        .map(|&n| verify_z_window(&a.primes, n, radius))
        .collect::<Result<Vec<ZWindowReport>, _>>()?;
    let failed = reports.iter().any(|r| crate::output::z_verdict(r) == "mismatch");
    match a.format {
        TextFormat::Json => json(out, &reports.iter().map(ZWindowJson::from).collect::<Vec<_>>())?,
        TextFormat::Text => {
            let ideals: Vec<String> = a.primes.iter().map(|p| format!("{p}Z")).collect();
            for r in &reports {
                writeln!(out, "Z, D = {}, n = {}, window [-{radius}, {radius}]", ideals.join(" ∪ "), r.n)?;
                let path = |p: &[i64]| p.iter().map(i64::to_string).collect::<Vec<_>>().join(" - ");
                match &r.path {
                    Some(p) => writeln!(out, "  d(0,1) = {} via {}", r.distance, path(p))?,
                    None => writeln!(out, "  1 is not reachable from 0 in the window")?,
                }
                if let Some(w) = &r.witness {
                    writeln!(out, "  witness path {} verified", path(w))?;
                }
                writeln!(out, "  verdict: {}", crate::output::z_verdict(r))?;
            }
        }
    }
    Ok(if failed { 1 } else { 0 })
}

fn window_f2(a: &WindowArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let ns = exponents(a, "1..8")?;
    let m = a.vars + 1;
    let spec = F2WindowSpec {
        deg_cap: a.deg_cap.unwrap_or(2),
        max_terms: a.max_terms,
        ..F2WindowSpec::default()
    };
    writeln!(
        err,
        "# ntg window --ring F2poly --vars {} --n {}..{} --deg-cap {}{} --format {}",
        a.vars,
        ns[0],
        ns[ns.len() - 1],
        spec.deg_cap,
        a.max_terms.map(|t| format!(" --max-terms {t}")).unwrap_or_default(),
        format_name(a.format)
    )?;
    let d = verify_diameter_m_construction(m, ns[0]..=ns[ns.len() - 1], &spec)?;
    let c = verify_corollary_rminusd(m, &spec)?;
    let failed = !d.upper_bound_holds()
        || matches!(d.lower_bound, LowerBound::Violated { .. })
        || matches!(c.verdict, CorollaryVerdict::Violated { .. });
    match a.format {
        TextFormat::Json => json(out, &F2Json::new(&d, &c))?,
        TextFormat::Text => {
            let gens: Vec<String> = Generator::all(a.vars)
                .iter()
                .map(|g| format!("({})", g.describe(a.vars)))
                .collect();
            writeln!(out, "F2[X1..X{}], D = {}, m = {m}", a.vars, gens.join(" ∪ "))?;
            for ch in &d.chains {
                let path: Vec<String> = ch.path().iter().map(|p| p.to_string()).collect();
                let via: Vec<String> = ch
                    .edges
                    .iter()
                    .map(|e| e.generator.map_or("none".into(), |g| format!("({})", g.describe(a.vars))))
                    .collect();
                writeln!(
                    out,
                    "  n = {}: {}; edges in {} [{}]",
                    ch.n,
                    path.join(" - "),
                    via.join(", "),
                    if ch.holds() { "holds" } else { "FAILS" }
                )?;
            }
            if d.certificate {
                writeln!(out, "  common-zero certificate: d(0,1) >= {m} in the whole ring")?;
            }
            let mut line = format!("  window: {} vertices, degree <= {}; ", d.window_vertices, spec.deg_cap);
            match &d.lower_bound {
                LowerBound::WindowConfirmed { distance } => {
                    let _ = write!(line, "shortest 0-1 path has length {distance} (window-confirmed)");
                }
                LowerBound::UpperBoundOnly { reason } => {
                    let _ = write!(line, "upper bound only ({reason})");
                }
                LowerBound::Violated { distance } => {
                    let _ = write!(line, "path of length {distance} < {m} found");
                }
            }
            writeln!(out, "{line}")?;
            let verdict = match &c.verdict {
                CorollaryVerdict::Trivial => "trivial".to_string(),
                CorollaryVerdict::Holds { distance } => format!("distance {distance} from F_2 to 1 (holds)"),
                CorollaryVerdict::Violated { distance } => format!("distance {distance} from F_2 to 1 (VIOLATED)"),
                CorollaryVerdict::UpperBoundOnly { reason } => format!("upper bound only ({reason})"),
            };
            writeln!(out, "  R\\D bound m-2 = {}: {verdict}", c.bound)?;
        }
    }
    Ok(if failed { 1 } else { 0 })
}

fn window_zxy(a: &WindowArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let ns = exponents(a, "1..3")?;
    let deg = a.deg_cap.unwrap_or(3);
    writeln!(
        err,
        "# ntg window --ring ZXY --n {}..{} --deg-cap {deg} --coef-cap {} --len-cap {} --format {}",
        ns[0],
        ns[ns.len() - 1],
        a.coef_cap,
        a.len_cap,
        format_name(a.format)
    )?;
    let reports = ns
        .iter()
        .map(|&n| verify_zxy_nonconnectivity(n, deg, a.coef_cap, a.len_cap))
        .collect::<Result<Vec<_>, _>>()?;
    let failed = reports.iter().any(|r| !r.confirmed());
    match a.format {
        TextFormat::Json => json(out, &reports.iter().map(ZxyJson::from).collect::<Vec<_>>())?,
        TextFormat::Text => {
            for r in &reports {
                writeln!(
                    out,
                    "Z[X,Y], D = XR ∪ YR, n = {}, degree <= {}, coefficients in [-{c}, {c}]: {} vertices",
                    r.n,
                    r.deg_cap,
                    r.vertices,
                    c = r.coef_cap
                )?;
                let levels: Vec<String> = r.levels.iter().map(usize::to_string).collect();
                writeln!(out, "  newly reached per step: {}", levels.join(", "))?;
                match &r.constant_term_violation {
                    None => writeln!(out, "  every reached vertex has constant term 0")?,
                    Some(v) => writeln!(out, "  reached {v}, which has a nonzero constant term")?,
                }
                writeln!(
                    out,
                    "  1 {} within {} steps; neighbours of 0 {} the window part of XR ∪ YR",
                    if r.one_reached { "reached" } else { "not reached" },
                    r.len_cap,
                    if r.zero_neighbors_in_d { "are exactly" } else { "differ from" }
                )?;
                writeln!(out, "  verdict: {}", if r.confirmed() { "window-confirmed" } else { "violated" })?;
            }
        }
    }
    Ok(if failed { 1 } else { 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("ntg").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn fixture(name: &str) -> String {
        format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
    }

    #[test]
    fn graph_dot_f4() {
        let (code, out, err) = call(&["graph", "--ring", "Fq:2:2", "--ideal", "zero@1", "--n", "3", "--format", "dot"]);
        assert_eq!(code, 0, "{err}");
        assert!(err.starts_with("# ntg graph --ring Fq:2:2"));
        assert!(out.starts_with("graph"));
        assert_eq!(out.matches(" -- ").count(), 3);
    }

    #[test]
    fn graph_json_z2z3_with_erratum() {
        let (code, out, _) = call(&[
            "graph", "--ring", "prod(Fp:2,Fp:3)", "--ideal", "zero@1|zero@2", "--n", "2", "--format", "json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
        assert_eq!(v["edges"].as_array().unwrap().len(), 7);
        assert_eq!(v["D"], "zero@1|zero@2");
        assert!(v["notes"][0].as_str().unwrap().contains("(0,1)-(1,1)"));
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, err) = call(&["graph", "--ring", "Fq:2:2"]);
        assert_eq!(code, 2);
        assert!(err.contains("--n"));
        assert_eq!(call(&["graph", "--ring", "Fp:6", "--n", "1"]).0, 2);
        assert_eq!(call(&["graph", "--ring", "Fp:5", "--n", "1", "--side", "left"]).0, 2);
        assert_eq!(call(&["analyze", "--ring", "Fp:5", "--ideal", "full@1", "--n", "1"]).0, 2);
        assert_eq!(call(&["scan", "--m", "9..2", "--n", "1"]).0, 2);
        assert_eq!(call(&["scan", "--m", "x", "--n", "1"]).0, 2);
        assert_eq!(call(&["verify", "/nonexistent/sweep.toml"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn analyze_examples() {
        let (code, out, _) = call(&["analyze", "--ring", "Fp:7", "--n", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("whole  K_{3,3} ⊕ K_1;"), "{out}");
        assert!(out.contains("R\\D    K_{3,3}; connected: yes; diameter: 2; girth: 4"), "{out}");

        let (_, out, _) = call(&["analyze", "--ring", "Fq:2:2", "--n", "5", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["complement"]["totally_disconnected"], true);

        let (_, out, _) = call(&["analyze", "--ring", "prod(Fp:2,Fp:2)", "--n", "3", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["whole"]["connected"], true);
        assert_eq!(v["whole"]["diameter"], 2);
        assert_eq!(v["whole"]["girth"], 4);
        assert_eq!(v["whole"]["classes"][0]["kind"], "complete_bipartite");
        assert_eq!(v["whole"]["classes"][0]["sizes"], serde_json::json!([2, 2]));
    }

    #[test]
    fn scan_cell_and_table() {
        let (code, out, _) = call(&["scan", "--m", "9", "--n", "5", "--format", "text"]);
        assert_eq!(code, 0);
        assert_eq!(out, "m=9, n=5: d=1, α=8, R\\D 4×K_{1,1}\n");
        let (code, out, _) = call(&["scan", "--m", "2..64", "--n", "1..8"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "m,n,d,alpha,side,summary,predicted");
        // 27 prime powers in 2..64, 8 exponents each
        assert_eq!(lines.len(), 1 + 27 * 8);
        assert!(lines.contains(&"7,3,3,2,complement,\"K_{3,3}\",true"));
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = call(&["verify", &fixture("empty.toml")]);
        assert_eq!(code, 0);
        assert!(out.starts_with("configurations: 0"));
        let (code, out, _) = call(&["verify", &fixture("wrong_prediction.toml")]);
        assert_eq!(code, 1);
        assert!(out.contains("FAIL"));
        let (code, out, _) = call(&["verify", &fixture("small.json"), "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["tally"]["mismatch"], 0);
        assert!(v.get("entries").is_none());
    }

    #[test]
    fn output_is_deterministic() {
        let args = ["verify", &fixture("small.json"), "--format", "json", "--entries"];
        let a = call(&args);
        let b = call(&args);
        assert_eq!(a, b);
    }

    #[test]
    fn window_subcommands() {
        let (code, out, _) = call(&["window", "--ring", "Z", "--primes", "2,3", "--n", "3", "--radius", "6"]);
        assert_eq!(code, 0);
        assert!(out.contains("witness path 0 - 3 - 1 verified"), "{out}");
        assert!(out.contains("verdict: window-confirmed"));
        assert_eq!(call(&["window", "--ring", "Z", "--primes", "5,7", "--n", "3", "--radius", "10"]).0, 2);

        let (code, out, _) = call(&["window", "--ring", "F2poly", "--vars", "3", "--n", "1..2", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["chains"][0]["path"], serde_json::json!(["0", "X1", "X1+X2", "X1+X2+X3", "1"]));
        assert_eq!(v["lower_bound"]["status"], "window-confirmed");
        assert_eq!(v["corollary"]["distance"], 2);

        let (code, out, _) = call(&["window", "--ring", "zxy", "--n", "3", "--deg-cap", "2", "--len-cap", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("every reached vertex has constant term 0"));
    }
}
