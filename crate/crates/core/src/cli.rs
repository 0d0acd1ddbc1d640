//! The `ivc` command line.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0    | success; coloring valid; instance feasible; W decided |
//! | 1    | coloring invalid; infeasible; not interval colorable; bounds refused (disconnected); table row failed |
//! | 2    | solver budget exhausted before a decision |
//! | 3    | malformed input file or I/O error |
//! | 64   | usage error, including family parameter preconditions |
//!
//! Output never contains timings, so identical invocations give identical
//! bytes.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::coloring::{bounds, color_count, parse_coloring, validate_interval, BoundsReport, EdgeColoring};
use crate::constructions::{
    bipartite_extremal, build_family, ConstructionError, FamilyId, FamilyInstance, FamilyParams,
};
use crate::exec::Exec;
use crate::graph::{make_complete, make_complete_bipartite, make_cycle, make_path, parse_graph, Graph};
use crate::solver::{compute_w_exact, find_interval_coloring, SolveBudget, SolveStatus, WStatus};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "ivc",
    version,
    about = "Interval edge colorings: extremal families, validation, bounds and exact search"
)]
pub struct Cli {
    /// Report format for verify, solve, bounds, table and color -o.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One JSON object per line.
    Records,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph file for a family member or a basic shape.
    Gen(GenArgs),
    /// Write graph and coloring of a family member.
    Color(ColorArgs),
    /// Check a coloring against the interval coloring definition.
    Verify(VerifyArgs),
    /// Decide interval t-colorability, or compute W, by exact search.
    Solve(SolveArgs),
    /// Print the diameter and vertex-count upper bounds for a graph.
    Bounds(GraphInput),
    /// Build a grid of family members and compare them with the bounds.
    Table(TableArgs),
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// cycle, kbb, k2q, gdq, gdd-even, gdd-3, gdd-odd, or gdd to pick the
    /// tight bipartite family for --d and --delta.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub delta: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Basic shape instead of a family; sized by --n (and --m for
    /// complete-bipartite).
    #[arg(long, value_enum, conflicts_with = "family")]
    pub shape: Option<Shape>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Output file; stdout if omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Write PREFIX.graph and PREFIX.col instead of a bundle on stdout.
    #[arg(short, long, value_name = "PREFIX")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph file, `-` for stdin.
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, requires = "coloring", conflicts_with = "input")]
    pub graph: Option<PathBuf>,
    #[arg(long, requires = "graph")]
    pub coloring: Option<PathBuf>,
    /// Bundle as written by `color` without -o, `-` for stdin.
    #[arg(long, required_unless_present = "graph")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    /// Number of colors to decide.
    #[arg(long, conflicts_with = "w", required_unless_present = "w")]
    pub t: Option<u32>,
    /// Compute W, the largest feasible number of colors.
    #[arg(long)]
    pub w: bool,
    /// Search node budget (per value of t with --w).
    #[arg(long, default_value_t = SolveBudget::default().max_nodes)]
    pub max_nodes: u64,
    /// Wall-clock budget in seconds; results past it may differ run to run.
    #[arg(long)]
    pub max_seconds: Option<f64>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub family: String,
    /// Single value or inclusive range `a..b`.
    #[arg(long)]
    pub d: Option<Range>,
    #[arg(long)]
    pub q: Option<Range>,
    #[arg(long)]
    pub delta: Option<Range>,
}

/// Inclusive range of parameter values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: u32,
    pub hi: u32,
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |x: &str| x.parse::<u32>().map_err(|_| format!("`{s}` is not a number or range a..b"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => (parse(s)?, parse(s)?),
        };
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(Range { lo, hi })
    }
}

impl Range {
    fn values(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

/// What went wrong, mapped onto the exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Refused(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Input(_) => EXIT_INPUT,
            Failure::Refused(_) => EXIT_NO,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Refused(m) => m,
        }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::InvalidParameter(m) => Failure::Usage(m),
            ConstructionError::Certificate { .. } => Failure::Input(e.to_string()),
            other => Failure::Refused(other.to_string()),
        }
    }
}

fn io_failure(what: &Path, e: std::io::Error) -> Failure {
    Failure::Input(format!("{}: {e}", what.display()))
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
}

impl Io<'_> {
    fn line(&mut self, s: impl AsRef<str>) -> Result<(), Failure> {
        writeln!(self.out, "{}", s.as_ref()).map_err(|e| io_failure(Path::new("<stdout>"), e))
    }

    fn raw(&mut self, s: &str) -> Result<(), Failure> {
        self.out.write_all(s.as_bytes()).map_err(|e| io_failure(Path::new("<stdout>"), e))
    }

    fn record<T: Serialize>(&mut self, r: &T) -> Result<(), Failure> {
        let s = serde_json::to_string(r).expect("records serialize");
        self.line(s)
    }

    fn note(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.err, "note: {}", s.as_ref());
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let mut io = Io { out, err, format: cli.format };
    let result = match cli.command {
        Command::Gen(a) => gen(&mut io, a),
        Command::Color(a) => color(&mut io, a),
        Command::Verify(a) => verify(&mut io, a),
        Command::Solve(a) => solve(&mut io, a),
        Command::Bounds(a) => bounds_cmd(&mut io, a),
        Command::Table(a) => table(&mut io, a),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "error: {}", f.message());
            f.code()
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| io_failure(path, e))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| io_failure(path, e))
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| io_failure(path, e))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read_input(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// A family request after routing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Request {
    Family(FamilyId, FamilyParams),
    /// `gdd`: the tight bipartite family for `d` and `Δ`.
    Gdd {
        d: u32,
        delta: u32,
    },
}

fn parse_family(name: &str) -> Result<Option<FamilyId>, Failure> {
    if name == "gdd" {
        return Ok(None);
    }
    name.parse::<FamilyId>().map(Some).map_err(|_| {
        let known: Vec<&str> = FamilyId::ALL.iter().map(|f| f.as_str()).collect();
        Failure::Usage(format!("unknown family `{name}`; expected one of {}, gdd", known.join(", ")))
    })
}

/// Checks which parameters the family takes and reroutes `d = 2` and
/// `Δ = 2` requests for the gdd families to kbb and cycle.
fn resolve(family: Option<FamilyId>, p: FamilyParams, io: &mut Io<'_>) -> Result<Request, Failure> {
    let takes = |f: Option<FamilyId>| -> (bool, bool, bool) {
        match f {
            None => (true, false, true),
            Some(FamilyId::Cycle) => (true, false, false),
            Some(FamilyId::Kbb) => (false, false, true),
            Some(FamilyId::K2q) => (false, true, false),
            Some(FamilyId::Gdq) => (true, true, false),
            Some(FamilyId::Gdd3) => (false, false, true),
            Some(FamilyId::GddEven | FamilyId::GddOdd) => (true, false, true),
        }
    };
    let name = family.map_or("gdd", FamilyId::as_str);
    let (td, tq, tdelta) = takes(family);
    for (given, taken, flag) in [(p.d, td, "d"), (p.q, tq, "q"), (p.delta, tdelta, "delta")] {
        match (given.is_some(), taken) {
            (true, false) => return Err(Failure::Usage(format!("family {name} does not take --{flag}"))),
            (false, true) => return Err(Failure::Usage(format!("family {name} needs --{flag}"))),
            _ => {}
        }
    }
    let gdd_d = match family {
        Some(FamilyId::Gdd3) => Some(3),
        Some(FamilyId::GddEven | FamilyId::GddOdd) | None => p.d,
        _ => None,
    };
    if let (Some(d), Some(delta)) = (gdd_d, p.delta) {
        let routed = match (d, delta) {
            (_, 2) if d >= 2 => Some((FamilyId::Cycle, FamilyParams { d: Some(d), ..Default::default() })),
            (2, _) if delta >= 2 => Some((FamilyId::Kbb, FamilyParams { delta: Some(delta), ..Default::default() })),
            _ => None,
        };
        if let Some((to, params)) = routed {
            if family.is_some() {
                io.note(format!("{name} with d={d}, delta={delta} is built as {to}"));
            }
            return Ok(Request::Family(to, params));
        }
        if family.is_none() {
            return Ok(Request::Gdd { d, delta });
        }
    }
    Ok(Request::Family(family.expect("gdd has both parameters"), p))
}

fn build(req: Request) -> Result<FamilyInstance, ConstructionError> {
    match req {
        Request::Family(f, p) => build_family(f, p),
        Request::Gdd { d, delta } => bipartite_extremal(d, delta),
    }
}

fn family_request(a: &FamilyArgs, io: &mut Io<'_>) -> Result<Request, Failure> {
    let name = a.family.as_deref().ok_or_else(|| Failure::Usage("--family is required".into()))?;
    let family = parse_family(name)?;
    resolve(family, FamilyParams { d: a.d, q: a.q, delta: a.delta }, io)
}

fn shape_graph(a: &GenArgs, shape: Shape) -> Result<Graph, Failure> {
    let n = a.n.ok_or_else(|| Failure::Usage("--shape needs --n".into()))?;
    let g = match shape {
        Shape::Path => make_path(n),
        Shape::Cycle => make_cycle(n),
        Shape::Complete => make_complete(n),
        Shape::CompleteBipartite => {
            let m = a.m.ok_or_else(|| Failure::Usage("complete-bipartite needs --m".into()))?;
            make_complete_bipartite(m, n)
        }
    };
    if a.m.is_some() && shape != Shape::CompleteBipartite {
        return Err(Failure::Usage("--m only applies to complete-bipartite".into()));
    }
    g.map_err(|e| Failure::Usage(e.to_string()))
}

fn gen(io: &mut Io<'_>, a: GenArgs) -> Result<i32, Failure> {
    let g = match a.shape {
        Some(shape) => shape_graph(&a, shape)?,
        None => build(family_request(&a.family, io)?)?.graph,
    };
    match &a.output {
        Some(path) => write_file(path, &g.to_text())?,
        None => io.raw(&g.to_text())?,
    }
    Ok(EXIT_OK)
}

/// One row of `table`, also printed by `color -o`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub family: String,
    pub d: Option<u32>,
    pub q: Option<u32>,
    pub delta: Option<u32>,
    pub t: u64,
    pub bound_general: u64,
    pub bound_bipartite: Option<u64>,
    /// Bound minus `t`: the bipartite bound for the bipartite families, the
    /// general bound for k2q and gdq.
    pub gap: i64,
    pub valid: bool,
}

impl InstanceRecord {
    pub fn of(inst: &FamilyInstance) -> Self {
        let report = validate_interval(&inst.graph, &inst.coloring).expect("instance coloring is total");
        let t = u64::from(report.t.unwrap_or_else(|| color_count(&inst.coloring).unwrap_or(0)));
        let b = bounds(&inst.graph).expect("family graphs are connected");
        let reference = match (inst.family.is_bipartite_extremal(), b.bipartite_diameter_bound) {
            (true, Some(bb)) => bb,
            _ => b.general_diameter_bound,
        };
        InstanceRecord {
            family: inst.family.to_string(),
            d: inst.params.d,
            q: inst.params.q,
            delta: inst.params.delta,
            t,
            bound_general: b.general_diameter_bound,
            bound_bipartite: b.bipartite_diameter_bound,
            gap: reference as i64 - t as i64,
            valid: report.is_valid() && inst.check().is_ok(),
        }
    }

    fn text(&self) -> String {
        let opt = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
        format!(
            "{:<8} {:>3} {:>3} {:>5} {:>5} {:>13} {:>15} {:>4} {}",
            self.family,
            opt(self.d.map(u64::from)),
            opt(self.q.map(u64::from)),
            opt(self.delta.map(u64::from)),
            self.t,
            self.bound_general,
            opt(self.bound_bipartite),
            self.gap,
            self.valid
        )
    }
}

const TABLE_HEADER: &str = "family     d   q delta     t bound_general bound_bipartite  gap valid";

fn bundle_text(inst: &FamilyInstance) -> String {
    format!("{}{}", inst.graph.to_text(), inst.coloring.to_text(&inst.graph))
}

fn color(io: &mut Io<'_>, a: ColorArgs) -> Result<i32, Failure> {
    let inst = build(family_request(&a.family, io)?)?;
    let Some(prefix) = &a.output else {
        io.raw(&bundle_text(&inst))?;
        return Ok(EXIT_OK);
    };
    let with_ext = |ext: &str| {
        let mut s = prefix.clone().into_os_string();
        s.push(ext);
        PathBuf::from(s)
    };
    write_file(&with_ext(".graph"), &inst.graph.to_text())?;
    write_file(&with_ext(".col"), &inst.coloring.to_text(&inst.graph))?;
    let rec = InstanceRecord::of(&inst);
    match io.format {
        Format::Records => io.record(&rec)?,
        Format::Text => {
            io.line(TABLE_HEADER)?;
            io.line(rec.text())?;
        }
    }
    Ok(EXIT_OK)
}

/// Splits a bundle at its first coloring header line. Returns the graph
/// part, the coloring part and the line number the coloring starts on.
fn split_bundle(text: &str) -> (&str, &str, usize) {
    let mut offset = 0;
    for (i, line) in text.split_inclusive('\n').enumerate() {
        if line.starts_with("c ") {
            return (&text[..offset], &text[offset..], i);
        }
        offset += line.len();
    }
    (text, "", text.split_inclusive('\n').count())
}

#[derive(Serialize)]
struct VerifyRecord {
    valid: bool,
    t: Option<u32>,
    violations: Vec<String>,
}

fn verify(io: &mut Io<'_>, a: VerifyArgs) -> Result<i32, Failure> {
    let (g, c) = match (&a.graph, &a.coloring, &a.input) {
        (Some(gp), Some(cp), None) => {
            let g = load_graph(gp)?;
            let text = read_input(cp)?;
            let c = parse_coloring(&g, &text).map_err(|e| Failure::Input(format!("{}: {e}", cp.display())))?;
            (g, c)
        }
        (None, None, Some(ip)) => {
            let text = read_input(ip)?;
            let (gt, ct, skip) = split_bundle(&text);
            let g = parse_graph(gt).map_err(|e| Failure::Input(format!("{}: {e}", ip.display())))?;
            let c = parse_coloring(&g, ct)
                .map_err(|e| Failure::Input(format!("{}: line {}: {}", ip.display(), e.line + skip, e.message)))?;
            (g, c)
        }
        _ => return Err(Failure::Usage("give either --graph and --coloring, or --input".into())),
    };
    let report = validate_interval(&g, &c).expect("parsed coloring is total");
    match io.format {
        Format::Records => io.record(&VerifyRecord {
            valid: report.is_valid(),
            t: report.t,
            violations: report.violations.iter().map(ToString::to_string).collect(),
        })?,
        Format::Text => {
            match report.t {
                Some(t) => io.line(format!("valid t={t}"))?,
                None => io.line(format!("invalid violations={}", report.violations.len()))?,
            }
            for v in &report.violations {
                io.line(format!("violation {v}"))?;
            }
        }
    }
    Ok(if report.is_valid() { EXIT_OK } else { EXIT_NO })
}

#[derive(Serialize)]
struct SolveRecord<'a> {
    t: u32,
    status: &'a str,
    nodes_explored: u64,
    coloring: Option<&'a [u32]>,
}

#[derive(Serialize)]
struct Trial<'a> {
    t: u32,
    status: &'a str,
}

#[derive(Serialize)]
struct WRecord<'a> {
    w: Option<u32>,
    status: &'a str,
    cutoff: u32,
    trials: Vec<Trial<'a>>,
    coloring: Option<&'a [u32]>,
}

fn w_status(s: WStatus) -> &'static str {
    match s {
        WStatus::Exact => "exact",
        WStatus::NotIntervalColorable => "not-interval-colorable",
        WStatus::Unknown => "unknown",
    }
}

fn solve(io: &mut Io<'_>, a: SolveArgs) -> Result<i32, Failure> {
    let g = load_graph(&a.graph.graph)?;
    if a.max_seconds.is_some_and(|s| !(s > 0.0 && s.is_finite())) {
        return Err(Failure::Usage("--max-seconds must be a positive number".into()));
    }
    let budget = SolveBudget { max_nodes: a.max_nodes.max(1), max_seconds: a.max_seconds };
    let certificate = |io: &mut Io<'_>, c: Option<&EdgeColoring>| match c {
        Some(c) => io.raw(&c.to_text(&g)),
        None => Ok(()),
    };
    if let Some(t) = a.t {
        let o = find_interval_coloring(&g, t, budget).map_err(|e| Failure::Usage(e.to_string()))?;
        match io.format {
            Format::Records => io.record(&SolveRecord {
                t,
                status: o.status.as_str(),
                nodes_explored: o.nodes_explored,
                coloring: o.certificate.as_ref().map(EdgeColoring::colors),
            })?,
            Format::Text => {
                io.line(format!("status {}", o.status.as_str()))?;
                io.line(format!("t {t}"))?;
                io.line(format!("nodes {}", o.nodes_explored))?;
                certificate(io, o.certificate.as_ref())?;
            }
        }
        return Ok(match o.status {
            SolveStatus::Feasible => EXIT_OK,
            SolveStatus::Infeasible => EXIT_NO,
            SolveStatus::Unknown => EXIT_UNKNOWN,
        });
    }
    let o = compute_w_exact(&g, budget).map_err(|e| Failure::Refused(e.to_string()))?;
    match io.format {
        Format::Records => io.record(&WRecord {
            w: o.w,
            status: w_status(o.status),
            cutoff: o.cutoff,
            trials: o.trials.iter().map(|&(t, s)| Trial { t, status: s.as_str() }).collect(),
            coloring: o.certificate.as_ref().map(EdgeColoring::colors),
        })?,
        Format::Text => {
            io.line(format!("status {}", w_status(o.status)))?;
            io.line(format!("w {}", o.w.map_or("-".to_string(), |w| w.to_string())))?;
            io.line(format!("cutoff {}", o.cutoff))?;
            for (t, s) in &o.trials {
                io.line(format!("trial t={t} {}", s.as_str()))?;
            }
            certificate(io, o.certificate.as_ref())?;
        }
    }
    Ok(match o.status {
        WStatus::Exact => EXIT_OK,
        WStatus::NotIntervalColorable => EXIT_NO,
        WStatus::Unknown => EXIT_UNKNOWN,
    })
}

#[derive(Serialize)]
struct BoundsRecord {
    vertices: usize,
    diameter: usize,
    max_degree: usize,
    connected: bool,
    bipartite: bool,
    triangle_free: bool,
    general_diameter_bound: u64,
    bipartite_diameter_bound: Option<u64>,
    triangle_free_bound: Option<u64>,
    general_vertex_bound: Option<u64>,
}

impl From<&BoundsReport> for BoundsRecord {
    fn from(b: &BoundsReport) -> Self {
        BoundsRecord {
            vertices: b.vertices,
            diameter: b.diameter,
            max_degree: b.max_degree,
            connected: b.applicable.connected,
            bipartite: b.applicable.bipartite,
            triangle_free: b.applicable.triangle_free,
            general_diameter_bound: b.general_diameter_bound,
            bipartite_diameter_bound: b.bipartite_diameter_bound,
            triangle_free_bound: b.triangle_free_bound,
            general_vertex_bound: b.general_vertex_bound,
        }
    }
}

fn bounds_cmd(io: &mut Io<'_>, a: GraphInput) -> Result<i32, Failure> {
    let g = load_graph(&a.graph)?;
    let b = bounds(&g).map_err(|e| Failure::Refused(e.to_string()))?;
    let r = BoundsRecord::from(&b);
    match io.format {
        Format::Records => io.record(&r)?,
        Format::Text => {
            let opt = |v: Option<u64>| v.map_or("none".to_string(), |x| x.to_string());
            for (k, v) in [
                ("vertices", r.vertices.to_string()),
                ("diameter", r.diameter.to_string()),
                ("max_degree", r.max_degree.to_string()),
                ("connected", r.connected.to_string()),
                ("bipartite", r.bipartite.to_string()),
                ("triangle_free", r.triangle_free.to_string()),
                ("general_diameter_bound", r.general_diameter_bound.to_string()),
                ("bipartite_diameter_bound", opt(r.bipartite_diameter_bound)),
                ("triangle_free_bound", opt(r.triangle_free_bound)),
                ("general_vertex_bound", opt(r.general_vertex_bound)),
            ] {
                io.line(format!("{k} {v}"))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn table(io: &mut Io<'_>, a: TableArgs) -> Result<i32, Failure> {
    let family = parse_family(&a.family)?;
    let values = |r: Option<Range>| -> Vec<Option<u32>> {
        match r {
            Some(r) => r.values().map(Some).collect(),
            None => vec![None],
        }
    };
    let mut requests = Vec::new();
    for d in values(a.d) {
        for q in values(a.q) {
            for delta in values(a.delta) {
                requests.push(resolve(family, FamilyParams { d, q, delta }, io)?);
            }
        }
    }
    let rows = Exec::default().map(requests, build);
    let mut code = EXIT_OK;
    if io.format == Format::Text {
        io.line(TABLE_HEADER)?;
    }
    for row in rows {
        let rec = InstanceRecord::of(&row?);
        if !rec.valid {
            code = EXIT_NO;
        }
        match io.format {
            Format::Records => io.record(&rec)?,
            Format::Text => io.line(rec.text())?,
        }
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("ivc").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!("3".parse::<Range>(), Ok(Range { lo: 3, hi: 3 }));
        assert_eq!("1..5".parse::<Range>(), Ok(Range { lo: 1, hi: 5 }));
        assert!("5..1".parse::<Range>().is_err());
        assert!("1..".parse::<Range>().is_err());
    }

    #[test]
    fn bundle_split() {
        let (g, c, skip) = split_bundle("g 2 1\ne 0 1\nc 1\nk 0 1 1\n");
        assert_eq!((g, c, skip), ("g 2 1\ne 0 1\n", "c 1\nk 0 1 1\n", 2));
        assert_eq!(split_bundle("g 1 0\n"), ("g 1 0\n", "", 1));
    }

    #[test]
    fn gdd_routing() {
        let (code, out, err) = run_str(&["gen", "--family", "gdd-even", "--d", "2", "--delta", "3"]);
        assert_eq!(code, 0);
        assert!(err.contains("built as kbb"), "{err}");
        assert_eq!(parse_graph(&out).unwrap().edge_count(), 9);

        let (code, out, err) = run_str(&["gen", "--family", "gdd-odd", "--d", "5", "--delta", "2"]);
        assert_eq!(code, 0);
        assert!(err.contains("built as cycle"));
        assert_eq!(parse_graph(&out).unwrap().vertex_count(), 10);

        let (code, _, err) = run_str(&["gen", "--family", "gdd", "--d", "4", "--delta", "3"]);
        assert_eq!((code, err.as_str()), (0, ""));
    }

    #[test]
    fn parameter_errors_are_usage_errors() {
        assert_eq!(run_str(&["gen", "--family", "kbb", "--d", "3", "--delta", "3"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["gen", "--family", "gdd-even", "--d", "5", "--delta", "3"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["gen", "--family", "gdq", "--d", "2"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["gen", "--family", "nope", "--d", "2"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["gen"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
        assert_eq!(run_str(&["--version"]).0, EXIT_OK);
    }

    #[test]
    fn gdd_3_needs_no_d() {
        let (code, out, _) = run_str(&["gen", "--family", "gdd-3", "--delta", "3"]);
        assert_eq!(code, 0);
        assert_eq!(parse_graph(&out).unwrap().vertex_count(), 10);
    }

    #[test]
    fn shapes() {
        let (code, out, _) = run_str(&["gen", "--shape", "complete-bipartite", "--m", "2", "--n", "3"]);
        assert_eq!(code, 0);
        assert_eq!(parse_graph(&out).unwrap(), make_complete_bipartite(2, 3).unwrap());
        assert_eq!(run_str(&["gen", "--shape", "cycle", "--n", "2"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["gen", "--shape", "path", "--n", "3", "--m", "2"]).0, EXIT_USAGE);
    }

    #[test]
    fn table_rows_in_grid_order() {
        let (code, out, _) =
            run_str(&["--format", "records", "table", "--family", "gdq", "--d", "1..3", "--q", "1..2"]);
        assert_eq!(code, 0);
        let keys: Vec<(u64, u64)> = out
            .lines()
            .map(|l| {
                let v: serde_json::Value = serde_json::from_str(l).unwrap();
                (v["d"].as_u64().unwrap(), v["q"].as_u64().unwrap())
            })
            .collect();
        assert_eq!(keys, vec![(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)]);
    }
}
