//! The `immlab` command line.
//!
//! Exit codes: 0 success, 1 refuted claim or error, 2 budget exhausted,
//! 64 malformed input, 66 I/O failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructions::{build_family, Attachment, ConstructionParams, DevosSpec, ExplicitPod, Family, LabeledGraph, PodCount};
use crate::error::{Error, Result};
use crate::formulas::{self, Analysis};
use crate::hajos::{random_trial, RandomTrialConfig};
use crate::immersion::{
    check_special10, find_immersion_with, is_pod_with, refute_dock_graph, Budget, PodReport, Refutation, SearchOptions,
    SearchReport, SearchVerdict,
};
use crate::metrics::{chromatic_number, clique_number, edge_connectivity, min_degree, DEFAULT_COLORING_BUDGET};
use crate::multigraph::{parse_graph6, MultiGraph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_PARSE: i32 = 64;
pub const EXIT_IO: i32 = 66;

#[derive(Parser, Debug)]
#[command(name = "immlab", version, about = "Complete-graph immersion constructions and exact search")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a family instance and export it.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check degree, connectivity, colouring and immersion claims for an instance.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Immersion size to refute or find; defaults to d.
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether the input graph immerses K_t.
    Immerse {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test the d-pod conditions on a pod family or an input graph.
    PodCheck {
        #[arg(long, conflicts_with = "input")]
        family: Option<Family>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random Hajós-operation sequences from K_{k+1}, tracking the K_{k+1} immersion.
    HajosTrial {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        trials: u64,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        steps: usize,
        #[arg(long)]
        allow_beta: bool,
        #[arg(long, default_value_t = 40)]
        max_order: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the closed-form counts and inequalities for one d.
    Analyze {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        bays: usize,
        /// Pods on every dock vertex, for the vertex count of M^{d-2}_d.
        #[arg(long, default_value_t = 1)]
        pods: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct FamilyArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub bays: usize,
    /// Edge-connectivity target for pkd and mkd.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// `min`, a number of pods per bay, or `vertex:N` for N per dock vertex.
    #[arg(long, default_value = "min")]
    pub pods: String,
    /// `concentrated`, `round_robin`, or `map:FILE` with a JSON placement list.
    #[arg(long)]
    pub attach: Option<String>,
    /// Odd cycle lengths for the devos family.
    #[arg(long, value_delimiter = ',')]
    pub cycles: Vec<usize>,
    /// Recorded in reports; constructions are deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct SearchArgs {
    /// Search nodes allowed per corner set.
    #[arg(long, env = "IMMLAB_BUDGET_NODES", default_value_t = 10_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_nodes: u64,
    #[arg(long, value_parser = positive_seconds)]
    pub budget_secs: Option<f64>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
}

impl SearchArgs {
    pub fn options(&self) -> SearchOptions {
        SearchOptions {
            budget: Budget {
                nodes_per_corner_set: self.budget_nodes,
                max_seconds: self.budget_secs,
            },
            jobs: self.jobs as usize,
            ..Default::default()
        }
    }
}

fn positive_seconds(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("{s:?} is not a positive number of seconds")),
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Edgelist,
    Dot,
    Graph6,
    Json,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    pub format: Format,
    /// Graph destination; a `.meta.json` sidecar is written next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Every report carries the tool version, its configuration and the graph hash.
#[derive(Serialize)]
pub struct Envelope<'a, C: Serialize, R: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config: &'a C,
    pub seed: Option<u64>,
    pub graph_hash: Option<String>,
    pub result: R,
}

fn envelope<'a, C: Serialize, R: Serialize>(
    command: &'static str,
    config: &'a C,
    seed: Option<u64>,
    graph_hash: Option<String>,
    result: R,
) -> Envelope<'a, C, R> {
    Envelope {
        tool: "immlab",
        version: env!("CARGO_PKG_VERSION"),
        command,
        config,
        seed,
        graph_hash,
        result,
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_PARSE,
            };
        }
    };
    match execute(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Usage(_) | Error::Json(_) => EXIT_PARSE,
        Error::Io(_) => EXIT_IO,
        Error::BudgetExceeded(_) => EXIT_UNKNOWN,
        _ => EXIT_FAIL,
    }
}

pub fn execute(command: &Command) -> Result<i32> {
    match command {
        Command::Construct { family, output } => construct(family, output),
        Command::Verify {
            family,
            t,
            search,
            out,
        } => verify(family, *t, search, out.as_deref()),
        Command::Immerse { input, t, search, out } => immerse(input, *t, search, out.as_deref()),
        Command::PodCheck {
            family,
            input,
            d,
            k,
            search,
            out,
        } => pod_check(*family, input.as_deref(), *d, *k, search, out.as_deref()),
        Command::HajosTrial {
            seed,
            trials,
            k,
            steps,
            allow_beta,
            max_order,
            search,
            out,
        } => {
            let cfg = RandomTrialConfig {
                k: *k,
                steps: *steps,
                allow_beta: *allow_beta,
                max_order: *max_order,
            };
            hajos_trial(*seed, *trials, &cfg, search, out.as_deref())
        }
        Command::Analyze { d, bays, pods, out } => analyze(*d, *bays, *pods, out.as_deref()),
    }
}

/// Turns family flags into construction parameters.
pub fn params_from_args(args: &FamilyArgs) -> Result<ConstructionParams> {
    let d = match (args.d, args.family.fixed_d(), args.family) {
        (Some(d), _, _) => d,
        (None, Some(d), _) => d,
        (None, None, Family::DevosFamily) => 0,
        (None, None, f) => return Err(Error::InfeasibleParams(format!("{f} needs --d"))),
    };
    let mut p = ConstructionParams::new(args.family, d)
        .bays(args.bays)
        .connectivity(args.k)
        .pods(parse_pod_count(&args.pods)?);
    if let Some(a) = &args.attach {
        p = p.attach(parse_attachment(a)?);
    }
    if args.family == Family::DevosFamily {
        p = p.devos(DevosSpec::Cycles(args.cycles.clone()));
    }
    Ok(p)
}

fn parse_error(message: String) -> Error {
    Error::Usage(message)
}

pub fn parse_pod_count(s: &str) -> Result<PodCount> {
    if s == "min" {
        return Ok(PodCount::MinimumToFill);
    }
    let (per_vertex, n) = match s.strip_prefix("vertex:") {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let n: usize = n.parse().map_err(|_| parse_error(format!("bad --pods value {s:?}")))?;
    Ok(if per_vertex {
        PodCount::PerDockVertex(n)
    } else {
        PodCount::PerBay(n)
    })
}

pub fn parse_attachment(s: &str) -> Result<Attachment> {
    match s {
        "concentrated" => Ok(Attachment::Concentrated),
        "round_robin" | "round-robin" => Ok(Attachment::RoundRobin),
        _ => {
            let path = s
                .strip_prefix("map:")
                .ok_or_else(|| parse_error(format!("bad --attach value {s:?}")))?;
            let pods: Vec<ExplicitPod> = serde_json::from_str(&fs::read_to_string(path)?)?;
            Ok(Attachment::Explicit(pods))
        }
    }
}

/// Reads a graph, choosing the encoding from the file extension:
/// `.json`, `.g6`/`.graph6`, otherwise the edge list.
pub fn read_graph(path: &Path) -> Result<MultiGraph> {
    let text = fs::read_to_string(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => MultiGraph::parse_json(&text),
        Some("g6") | Some("graph6") => parse_graph6(&text),
        _ => MultiGraph::parse_edge_list(&text),
    }
}

pub fn encode_graph(g: &MultiGraph, format: Format) -> Result<String> {
    Ok(match format {
        Format::Edgelist => g.to_edge_list(),
        Format::Dot => g.to_dot(),
        Format::Graph6 => g.to_graph6()? + "\n",
        Format::Json => g.to_json() + "\n",
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_json<T: Serialize>(out: Option<&Path>, value: &T) -> Result<()> {
    emit(out, &(serde_json::to_string_pretty(value)? + "\n"))
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(".meta.json");
    out.with_file_name(name)
}

#[derive(Serialize)]
struct ConstructResult<'a> {
    order: usize,
    size: u64,
    #[serde(flatten)]
    structure: &'a LabeledGraph,
}

fn construct(args: &FamilyArgs, output: &OutputArgs) -> Result<i32> {
    let params = params_from_args(args)?;
    let lg = build_family(&params)?;
    let text = encode_graph(&lg.graph, output.format)?;
    emit(output.out.as_deref(), &text)?;
    let meta = envelope(
        "construct",
        &params,
        args.seed,
        Some(lg.graph.canonical_hash()),
        ConstructResult {
            order: lg.graph.order(),
            size: lg.graph.size(),
            structure: &lg,
        },
    );
    if let Some(out) = &output.out {
        emit_json(Some(&sidecar_path(out)), &meta)?;
    }
    eprintln!(
        "{}: {} vertices, {} edges, hash {}",
        params.family,
        lg.graph.order(),
        lg.graph.size(),
        lg.graph.canonical_hash()
    );
    Ok(EXIT_OK)
}

/// One checked statement in a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub claim: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub family: Family,
    pub d: usize,
    pub t: usize,
    pub order: usize,
    pub min_degree: u64,
    pub edge_connectivity: u64,
    pub chromatic_number: usize,
    pub clique_number: usize,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pod: Option<PodReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refutation: Option<Refutation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchReport>,
    /// A search ran out of budget, so some claim is undecided.
    pub undecided: bool,
}

impl VerifyReport {
    pub fn all_hold(&self) -> bool {
        !self.undecided && self.checks.iter().all(|c| c.holds)
    }
}

fn expected_edge_connectivity(params: &ConstructionParams) -> Option<u64> {
    match params.family {
        Family::Gd | Family::Gnd => Some(3),
        Family::H5d => Some(5),
        Family::Mkd => Some(params.k as u64),
        Family::Special10Graph => Some(8),
        _ => None,
    }
}

fn expected_chromatic(params: &ConstructionParams) -> Option<usize> {
    let d = params.d;
    match params.family {
        Family::Gd if d >= 10 => Some(d - 3),
        Family::Gd | Family::Gnd | Family::H5d | Family::Mkd | Family::Special10Graph => Some(d - 2),
        Family::Seymour10 => Some(4),
        _ => None,
    }
}

/// Runs every claim for one family instance.
pub fn verify_instance(params: &ConstructionParams, t: Option<usize>, opts: &SearchOptions) -> Result<VerifyReport> {
    let lg = build_family(params)?;
    let g = &lg.graph;
    let d = lg.d;
    let t = t.unwrap_or(d);
    let mut report = VerifyReport {
        family: params.family,
        d,
        t,
        order: g.order(),
        min_degree: min_degree(g)?,
        edge_connectivity: edge_connectivity(g)?,
        chromatic_number: chromatic_number(g, DEFAULT_COLORING_BUDGET)?,
        clique_number: clique_number(g, DEFAULT_COLORING_BUDGET)?,
        checks: Vec::new(),
        pod: None,
        refutation: None,
        search: None,
        undecided: false,
    };
    let mut check = |claim: String, holds: bool| report.checks.push(Check { claim, holds });
    check(
        format!("edge connectivity {} <= minimum degree {}", report.edge_connectivity, report.min_degree),
        report.edge_connectivity <= report.min_degree,
    );
    check(
        format!("clique number {} <= chromatic number {}", report.clique_number, report.chromatic_number),
        report.clique_number <= report.chromatic_number,
    );
    if params.family.is_pod() {
        check(
            format!("minimum degree {} >= d - 2 = {}", report.min_degree, d - 2),
            report.min_degree + 2 >= d as u64,
        );
    } else if params.family != Family::HajosSeed {
        check(
            format!("minimum degree {} = d - 1 = {}", report.min_degree, d - 1),
            report.min_degree + 1 == d as u64,
        );
    }
    if let Some(lambda) = expected_edge_connectivity(params) {
        check(
            format!("edge connectivity {} = {lambda}", report.edge_connectivity),
            report.edge_connectivity == lambda,
        );
    }
    if let Some(chi) = expected_chromatic(params) {
        check(
            format!("chromatic number {} = {chi}", report.chromatic_number),
            report.chromatic_number == chi,
        );
    }
    if params.family == Family::Seymour10 {
        check(format!("clique number {} = 4", report.clique_number), report.clique_number == 4);
    }
    if let Family::DevosFamily = params.family {
        let degree = g.order() - d;
        let parts = match &params.devos {
            Some(DevosSpec::Cycles(c)) => c.len(),
            Some(DevosSpec::Components(c)) => c.len(),
            None => 0,
        };
        let bound = g.order().saturating_sub(parts * degree);
        check(
            format!("chromatic number {} <= n - tD = {bound}", report.chromatic_number),
            report.chromatic_number <= bound,
        );
    }

    if params.family.is_pod() {
        match is_pod_with(g, d, opts) {
            Ok(pod) => {
                report.checks.push(Check {
                    claim: format!("is a {d}-pod"),
                    holds: pod.is_pod,
                });
                report.pod = Some(pod);
            }
            Err(Error::BudgetExceeded(_)) => report.undecided = true,
            Err(e) => return Err(e),
        }
    } else if params.family.has_dock() {
        let dec = lg.decomposition();
        let refutation = if params.family == Family::Special10Graph {
            check_special10(g, &dec, opts)
        } else {
            refute_dock_graph(g, &dec, d, opts)
        };
        match refutation {
            Ok(r) => {
                report.checks.push(Check {
                    claim: format!("no K_{d} immersion (structural refutation)"),
                    holds: r.holds(),
                });
                report.refutation = Some(r);
            }
            Err(Error::BudgetExceeded(_)) => report.undecided = true,
            Err(e) => return Err(e),
        }
    } else {
        let search = find_immersion_with(g, t, opts);
        let expect_immersed = params.family == Family::HajosSeed;
        match &search.verdict {
            SearchVerdict::Unknown { .. } => report.undecided = true,
            v => report.checks.push(Check {
                claim: if expect_immersed {
                    format!("K_{t} immersion exists")
                } else {
                    format!("no K_{t} immersion (exhaustive search)")
                },
                holds: v.is_immersed() == expect_immersed,
            }),
        }
        report.search = Some(search);
    }
    Ok(report)
}

fn verify(args: &FamilyArgs, t: Option<usize>, search: &SearchArgs, out: Option<&Path>) -> Result<i32> {
    let params = params_from_args(args)?;
    let report = verify_instance(&params, t, &search.options())?;
    let hash = build_family(&params)?.graph.canonical_hash();
    for c in &report.checks {
        eprintln!("{} {}", if c.holds { "ok  " } else { "FAIL" }, c.claim);
    }
    let code = if report.undecided {
        eprintln!("undecided: search budget exhausted");
        EXIT_UNKNOWN
    } else if report.all_hold() {
        EXIT_OK
    } else {
        EXIT_FAIL
    };
    #[derive(Serialize)]
    struct Config<'a> {
        params: &'a ConstructionParams,
        t: Option<usize>,
        search: &'a SearchArgs,
    }
    let config = Config {
        params: &params,
        t,
        search,
    };
    emit_json(out, &envelope("verify", &config, args.seed, Some(hash), &report))?;
    Ok(code)
}

fn immerse(input: &Path, t: usize, search: &SearchArgs, out: Option<&Path>) -> Result<i32> {
    let g = read_graph(input)?;
    let report = find_immersion_with(&g, t, &search.options());
    eprintln!("K_{t}: {}", report.verdict.kind());
    #[derive(Serialize)]
    struct Config<'a> {
        input: &'a Path,
        t: usize,
        search: &'a SearchArgs,
    }
    let config = Config { input, t, search };
    emit_json(out, &envelope("immerse", &config, None, Some(g.canonical_hash()), &report))?;
    Ok(match report.verdict {
        SearchVerdict::Unknown { .. } => EXIT_UNKNOWN,
        _ => EXIT_OK,
    })
}

fn pod_check(
    family: Option<Family>,
    input: Option<&Path>,
    d: Option<usize>,
    k: usize,
    search: &SearchArgs,
    out: Option<&Path>,
) -> Result<i32> {
    let (g, d) = match (family, input) {
        (Some(f), _) => {
            if !f.is_pod() {
                return Err(Error::InfeasibleParams(format!("{f} is not a pod family")));
            }
            let d = d.or(f.fixed_d()).ok_or_else(|| Error::InfeasibleParams(format!("{f} needs --d")))?;
            let lg = build_family(&ConstructionParams::new(f, d).connectivity(k))?;
            (lg.graph, d)
        }
        (None, Some(path)) => {
            let d = d.ok_or_else(|| Error::InfeasibleParams("--in needs --d".into()))?;
            (read_graph(path)?, d)
        }
        (None, None) => return Err(Error::InfeasibleParams("give --family or --in".into())),
    };
    let report = is_pod_with(&g, d, &search.options())?;
    eprintln!(
        "{}-pod: {} ({} gadgets, {} pairings checked)",
        d,
        report.is_pod,
        report.gadgets.len(),
        report.matchings_checked
    );
    #[derive(Serialize)]
    struct Config<'a> {
        family: Option<Family>,
        input: Option<&'a Path>,
        d: usize,
        k: usize,
        search: &'a SearchArgs,
    }
    let config = Config {
        family,
        input,
        d,
        k,
        search,
    };
    emit_json(out, &envelope("pod-check", &config, None, Some(g.canonical_hash()), &report))?;
    Ok(if report.is_pod { EXIT_OK } else { EXIT_FAIL })
}

fn hajos_trial(seed: u64, trials: u64, cfg: &RandomTrialConfig, search: &SearchArgs, out: Option<&Path>) -> Result<i32> {
    let opts = search.options();
    let mut lines = String::new();
    let mut violations = 0;
    for i in 0..trials {
        let report = random_trial(seed.wrapping_add(i), cfg, &opts)?;
        violations += usize::from(report.non_beta_flip);
        lines.push_str(&serde_json::to_string(&report)?);
        lines.push('\n');
    }
    emit(out, &lines)?;
    eprintln!("{trials} trials, {violations} flips after alpha or gamma");
    Ok(if violations == 0 { EXIT_OK } else { EXIT_FAIL })
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeResult {
    #[serde(flatten)]
    pub analysis: Analysis,
    /// `|V(M^{d-2}_d)|` for the requested bays and pods, when `d >= 9`.
    pub mk_vertex_count: Option<usize>,
    /// Conjecture threshold for that graph with `m` equal to the pods per vertex.
    pub conjecture_threshold: Option<String>,
}

fn analyze(d: usize, bays: usize, pods: usize, out: Option<&Path>) -> Result<i32> {
    let analysis = formulas::analyze(d);
    if analysis.devos.is_empty() {
        eprintln!("no feasible DeVos parameters for d = {d}");
    } else {
        eprintln!("{} feasible DeVos parameter sets for d = {d}", analysis.devos.len());
    }
    let count = formulas::mk_vertex_count(d, bays, pods).ok();
    let threshold =
        count.map(|c| formulas::conjecture_fraction(c as u64, pods as u64, d as u64).to_string());
    #[derive(Serialize)]
    struct Config {
        d: usize,
        bays: usize,
        pods: usize,
    }
    let result = AnalyzeResult {
        analysis,
        mk_vertex_count: count,
        conjecture_threshold: threshold,
    };
    emit_json(out, &envelope("analyze", &Config { d, bays, pods }, None, None, &result))?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pod_count_syntax() {
        assert_eq!(parse_pod_count("min").unwrap(), PodCount::MinimumToFill);
        assert_eq!(parse_pod_count("3").unwrap(), PodCount::PerBay(3));
        assert_eq!(parse_pod_count("vertex:2").unwrap(), PodCount::PerDockVertex(2));
        assert!(matches!(parse_pod_count("x"), Err(Error::Usage(_))));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["immlab", "analyze"]), EXIT_PARSE);
        assert_eq!(run(["immlab", "immerse", "--in", "/nonexistent/x", "--t", "3"]), EXIT_IO);
        assert_eq!(run(["immlab", "immerse", "--in", "x", "--t", "3", "--budget-nodes", "0"]), EXIT_PARSE);
        assert_eq!(run(["immlab", "--version"]), EXIT_OK);
    }

    #[test]
    fn sidecar_name() {
        assert_eq!(sidecar_path(Path::new("/tmp/g.txt")), PathBuf::from("/tmp/g.txt.meta.json"));
    }

    #[test]
    fn verify_g8_holds() {
        let report = verify_instance(&ConstructionParams::new(Family::Gd, 8), None, &SearchOptions::default()).unwrap();
        assert!(report.all_hold(), "{:?}", report.checks);
        assert_eq!(report.chromatic_number, 6);
    }
}
