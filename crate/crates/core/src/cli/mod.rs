//! The `qaoa-transfer` command-line front end.
//!
//! Every command writes one primary output, to `-o FILE` or stdout: JSON
//! reports wrapped as `{tool, version, command, config, result}`, or CSV and
//! edge lists headed by `#` lines carrying the same tool, version and config.
//! Exit codes: 0 on success, 2 for parameter, parse and I/O errors, 3 when a
//! capacity limit is hit.

mod config;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graphs::{self, Graph, Seed};
use crate::lightcone::{self, LightconeClass};
use crate::maxcut;
use crate::numfmt::sig;
use crate::optimize::{self, LrSchedule, OptimizerConfig};
use crate::qaoa::{self, Backend};
use crate::tensornet;
use crate::transfer::{self, ExperimentOptions, ExperimentReport, Sufficiency};

const TOOL: &str = "qaoa-transfer";
const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "qaoa-transfer", version, about = "QAOA MaxCut energies, optimization and parameter transferability")]
struct Cli {
    /// Worker threads; defaults to the available hardware parallelism.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Flat key=value file filling in flags not given on the command line.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a random graph as an edge list.
    Gen(GenArgs),
    /// Lightcone class histogram of a graph.
    Subgraphs(SubgraphsArgs),
    /// Edge-contribution landscape of one lightcone class on a grid.
    Landscape(LandscapeArgs),
    /// Multistart RMSProp over a graph's energy or a class's contribution.
    Optimize(OptimizeArgs),
    /// Exact MaxCut.
    Maxcut(MaxcutArgs),
    /// Tensor-network contraction width of every edge's lightcone.
    Widths(WidthsArgs),
    /// Transferability map over enumerated lightcone classes.
    Map(MapArgs),
    /// Transfer optimized parameters from a donor graph to an acceptor graph.
    Transfer(TransferArgs),
}

#[derive(Args, Debug, Serialize)]
struct OptArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    steps: usize,
    #[arg(long, default_value_t = 20)]
    restarts: usize,
    #[arg(long, default_value_t = 0.05)]
    learning_rate: f64,
    #[arg(long, default_value_t = 0.9)]
    rms_decay: f64,
    #[arg(long, default_value_t = 1e-8)]
    rms_epsilon: f64,
    /// Finite-difference half-width for backends without analytic gradients.
    #[arg(long, default_value_t = 1e-6)]
    grad_step: f64,
    #[arg(long, value_enum, default_value_t = LrSchedule::Cosine)]
    schedule: LrSchedule,
}

impl OptArgs {
    fn config(&self) -> Result<OptimizerConfig> {
        let cfg = OptimizerConfig {
            steps: self.steps,
            restarts: self.restarts,
            learning_rate: self.learning_rate,
            rms_decay: self.rms_decay,
            rms_epsilon: self.rms_epsilon,
            grad_step: self.grad_step,
            seed: Seed(self.seed),
            schedule: self.schedule,
            ..OptimizerConfig::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Args, Debug, Serialize)]
struct GenArgs {
    /// Random d-regular graph (needs -d).
    #[arg(long, conflicts_with = "bounded")]
    regular: bool,
    /// Random graph with m edges and maximum degree dmax.
    #[arg(long)]
    bounded: bool,
    #[arg(short, long)]
    n: usize,
    #[arg(short, long)]
    d: Option<usize>,
    #[arg(short, long)]
    m: Option<usize>,
    #[arg(long)]
    dmax: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct SubgraphsArgs {
    graph: PathBuf,
    #[arg(short, long, default_value_t = 1)]
    p: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct LandscapeArgs {
    /// Class token `d1-d2-t`.
    #[arg(long)]
    class: LightconeClass,
    /// Grid points over one gamma period [0, 2pi).
    #[arg(long, default_value_t = qaoa::DEFAULT_GRID_STEPS)]
    gamma_steps: usize,
    /// Grid points over one beta period [0, pi).
    #[arg(long, default_value_t = qaoa::DEFAULT_GRID_STEPS)]
    beta_steps: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct OptimizeArgs {
    /// Edge-list file; omit when optimizing a single class.
    #[arg(required_unless_present = "class", conflicts_with = "class")]
    graph: Option<PathBuf>,
    #[arg(long)]
    class: Option<LightconeClass>,
    #[arg(long, value_enum, default_value_t = Backend::Fast)]
    backend: Backend,
    #[arg(short, long, default_value_t = 1)]
    p: usize,
    #[command(flatten)]
    #[serde(flatten)]
    optimizer: OptArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
enum MaxcutMethod {
    Bnb,
    Brute,
}

#[derive(Args, Debug, Serialize)]
struct MaxcutArgs {
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = MaxcutMethod::Bnb)]
    method: MaxcutMethod,
    /// Branch-and-bound time limit in seconds; unlimited when omitted.
    #[arg(long)]
    budget: Option<f64>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct WidthsArgs {
    graph: PathBuf,
    #[arg(short, long, default_value_t = 1)]
    p: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
enum MapFormat {
    Json,
    Csv,
}

#[derive(Args, Debug, Serialize)]
struct MapArgs {
    /// Classes of d-regular graphs, d <= dmax.
    #[arg(long, conflicts_with = "general")]
    regular: bool,
    /// All classes with degrees up to dmax.
    #[arg(long)]
    general: bool,
    #[arg(long)]
    dmax: usize,
    /// Defaults to csv for a `.csv` output path, json otherwise.
    #[arg(long, value_enum)]
    format: Option<MapFormat>,
    #[command(flatten)]
    #[serde(flatten)]
    optimizer: OptArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct TransferArgs {
    donor: PathBuf,
    acceptor: PathBuf,
    /// Branch-and-bound time limit per graph in seconds.
    #[arg(long, default_value_t = 600.0)]
    budget: f64,
    /// Threshold for the sufficiency check reported alongside the experiment.
    #[arg(long, default_value_t = transfer::DEFAULT_THRESHOLD)]
    threshold: f64,
    #[command(flatten)]
    #[serde(flatten)]
    optimizer: OptArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// Run with the process arguments and return the exit code.
pub fn main() -> i32 {
    run(std::env::args_os())
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match parse(args) {
        Ok(Ok(cli)) => cli,
        Ok(Err(e)) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn parse(args: Vec<OsString>) -> Result<std::result::Result<Cli, clap::Error>> {
    let cmd = Cli::command();
    let matches = match cmd.clone().try_get_matches_from(&args) {
        Ok(m) => m,
        Err(e) => return Ok(Err(e)),
    };
    let Some(path) = matches.get_one::<PathBuf>("config") else {
        return Ok(Cli::from_arg_matches(&matches));
    };
    let entries = config::parse(&read_file(path)?)?;
    let merged = config::merge(&cmd, &matches, args, &entries)?;
    Ok(Cli::try_parse_from(merged))
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph> {
    graphs::read_edge_list(&read_file(path)?).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse { line, message: format!("{}: {message}", path.display()) },
        other => other,
    })
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Numerical(e.to_string()))
}

fn emit_json<C: Serialize, R: Serialize>(command: &str, config: &C, result: &R, output: Option<&Path>) -> Result<()> {
    let doc = json!({
        "tool": TOOL,
        "version": VERSION,
        "command": command,
        "config": to_value(config)?,
        "result": to_value(result)?,
    });
    let mut text = serde_json::to_string_pretty(&doc).map_err(|e| Error::Numerical(e.to_string()))?;
    text.push('\n');
    emit(output, &text)
}

/// `#` header lines for text outputs.
fn comment_header<C: Serialize>(command: &str, config: &C) -> Result<String> {
    let cfg = serde_json::to_string(config).map_err(|e| Error::Numerical(e.to_string()))?;
    Ok(format!("# {TOOL} {VERSION} {command}\n# config: {cfg}\n"))
}

fn execute(cli: Cli) -> Result<()> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Error::param("--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Error::param(format!("thread pool: {e}")))?;
    }
    match cli.command {
        Command::Gen(a) => cmd_gen(&a),
        Command::Subgraphs(a) => cmd_subgraphs(&a),
        Command::Landscape(a) => cmd_landscape(&a),
        Command::Optimize(a) => cmd_optimize(&a),
        Command::Maxcut(a) => cmd_maxcut(&a),
        Command::Widths(a) => cmd_widths(&a),
        Command::Map(a) => cmd_map(&a),
        Command::Transfer(a) => cmd_transfer(&a),
    }
}

fn cmd_gen(a: &GenArgs) -> Result<()> {
    let seed = Seed(a.seed);
    let g = match (a.regular, a.bounded) {
        (true, false) => {
            let d = a.d.ok_or_else(|| Error::param("--regular needs -d"))?;
            graphs::random_regular(a.n, d, seed)?
        }
        (false, true) => {
            let (Some(m), Some(dmax)) = (a.m, a.dmax) else {
                return Err(Error::param("--bounded needs -m and --dmax"));
            };
            graphs::random_bounded(a.n, m, dmax, seed)?
        }
        _ => return Err(Error::param("choose exactly one of --regular or --bounded")),
    };
    let text = comment_header("gen", a)? + &graphs::write_edge_list(&g);
    emit(a.output.as_deref(), &text)
}

fn cmd_subgraphs(a: &SubgraphsArgs) -> Result<()> {
    let g = read_graph(&a.graph)?;
    let h = lightcone::histogram(&g, a.p)?;
    let result = json!({ "total": h.total(), "counts": to_value(&h)? });
    emit_json("subgraphs", a, &result, a.output.as_deref())
}

fn cmd_landscape(a: &LandscapeArgs) -> Result<()> {
    if a.gamma_steps == 0 || a.beta_steps == 0 {
        return Err(Error::param("grid sizes must be positive"));
    }
    let gamma = qaoa::periodic_grid(a.gamma_steps, 2.0 * std::f64::consts::PI);
    let beta = qaoa::periodic_grid(a.beta_steps, std::f64::consts::PI);
    let l = qaoa::landscape(a.class, &gamma, &beta)?;
    let (i, j, v) = l.argmax();
    let mut text = comment_header("landscape", a)?;
    text += &format!("# grid max {} at gamma={} beta={}\n", sig(v), sig(l.gamma[i]), sig(l.beta[j]));
    text += &l.to_csv();
    emit(a.output.as_deref(), &text)
}

fn cmd_optimize(a: &OptimizeArgs) -> Result<()> {
    let cfg = a.optimizer.config()?;
    let result = match (&a.graph, a.class) {
        (Some(path), None) => optimize::optimize_graph_with(&read_graph(path)?, &cfg, a.backend, a.p)?,
        (None, Some(c)) => {
            if a.p != 1 {
                return Err(Error::UnsupportedDepth(a.p));
            }
            optimize::optimize_class(c, &cfg)?
        }
        _ => return Err(Error::param("give either a graph file or --class")),
    };
    emit_json("optimize", a, &result, a.output.as_deref())
}

fn budget(secs: Option<f64>) -> Result<Option<Duration>> {
    match secs {
        None => Ok(None),
        Some(s) if s.is_finite() && s >= 0.0 => Ok(Some(Duration::from_secs_f64(s))),
        Some(s) => Err(Error::param(format!("budget must be a non-negative number of seconds, got {s}"))),
    }
}

fn cmd_maxcut(a: &MaxcutArgs) -> Result<()> {
    let g = read_graph(&a.graph)?;
    let (solution, optimal, upper_bound) = match a.method {
        MaxcutMethod::Brute => {
            let s = maxcut::brute_force(&g)?;
            let v = s.value;
            (s, true, v)
        }
        MaxcutMethod::Bnb => {
            let o = maxcut::branch_and_bound(&g, budget(a.budget)?);
            (o.solution, o.optimal, o.upper_bound)
        }
    };
    let result = json!({
        "value": solution.value,
        "optimal": optimal,
        "upper_bound": upper_bound,
        "assignment": solution.assignment_string(),
    });
    emit_json("maxcut", a, &result, a.output.as_deref())
}

fn cmd_widths(a: &WidthsArgs) -> Result<()> {
    let g = read_graph(&a.graph)?;
    let widths = tensornet::width_profile(&g, a.p, Seed(a.seed))?;
    let s = tensornet::summarize_widths(&widths);
    let mut text = comment_header("widths", a)?;
    text += &format!("# max={} mean={} stddev={}\nedge_index,width\n", s.max, sig(s.mean), sig(s.stddev));
    for (i, w) in widths.iter().enumerate() {
        text += &format!("{i},{w}\n");
    }
    emit(a.output.as_deref(), &text)
}

fn cmd_map(a: &MapArgs) -> Result<()> {
    let classes = match (a.regular, a.general) {
        (true, false) => lightcone::enumerate_regular(a.dmax),
        (false, true) => lightcone::enumerate_general(a.dmax),
        _ => return Err(Error::param("choose exactly one of --regular or --general")),
    };
    let map = transfer::build_map(&classes, &a.optimizer.config()?)?;
    let csv_path = a.output.as_deref().and_then(Path::extension).is_some_and(|e| e == "csv");
    match a.format.unwrap_or(if csv_path { MapFormat::Csv } else { MapFormat::Json }) {
        MapFormat::Csv => emit(a.output.as_deref(), &(comment_header("map", a)? + &map.to_csv())),
        MapFormat::Json => {
            let mut result = to_value(&map)?;
            if classes.iter().any(LightconeClass::is_regular) {
                result["parity"] = to_value(&transfer::parity_summary(&map))?;
            }
            emit_json("map", a, &result, a.output.as_deref())
        }
    }
}

#[derive(Serialize)]
struct TransferResult {
    #[serde(flatten)]
    report: ExperimentReport,
    sufficiency: Sufficiency,
}

fn cmd_transfer(a: &TransferArgs) -> Result<()> {
    let donor = read_graph(&a.donor)?;
    let acceptor = read_graph(&a.acceptor)?;
    let opts = ExperimentOptions {
        optimizer: a.optimizer.config()?,
        maxcut_budget_secs: Some(a.budget),
        donor_id: a.donor.display().to_string(),
        acceptor_id: a.acceptor.display().to_string(),
    };
    budget(opts.maxcut_budget_secs)?;
    let report = transfer::run_experiment(&donor, &acceptor, &opts)?;
    let dmax = donor.max_degree().max(acceptor.max_degree()).max(1);
    let map = transfer::build_map(&lightcone::enumerate_general(dmax), &opts.optimizer)?;
    let sufficiency = transfer::check_sufficient(&donor, &acceptor, &map, a.threshold)?;
    emit_json("transfer", a, &TransferResult { report, sufficiency }, a.output.as_deref())
}
