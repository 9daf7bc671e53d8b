//! Command-line frontend.
//!
//! Exit codes: 0 success, 1 property failure or runtime error, 2 unexpected
//! conjecture violation, 64 usage error.

mod render;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::BoundReport;
use crate::enumerate::{scan_corpus, scan_order, ScanOptions, GENERATE_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::{from_graph6, Graph};
use crate::verify::{run_all, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Largest order scanned without `--allow-long`.
pub const DEFAULT_MAX_SCAN_ORDER: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "graph-energy", version, about = "Graph energy, energy lower bounds and exhaustive scans")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectrum, energy and exact determinant of one graph.
    Energy(GraphArgs),
    /// Every lower bound, target and verdict for one graph.
    Bounds(GraphArgs),
    /// Sufficient conditions satisfied by one graph.
    Classify(GraphArgs),
    /// Analyse all graphs of an order, or a graph6 corpus.
    Scan {
        /// Order `n`, a graph6 file, `-` for stdin, or a graph6 literal.
        input: String,
        #[arg(long, env = "GRAPH_ENERGY_WORKERS", value_parser = clap::value_parser!(u32).range(1..))]
        workers: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Permit orders above 9.
        #[arg(long)]
        allow_long: bool,
        /// Abort on the first malformed corpus line.
        #[arg(long)]
        strict: bool,
    },
    /// Run the property suite.
    Verify {
        #[arg(long, default_value_t = 100_000)]
        grid_points: usize,
        /// Check every graph up to this order.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=10))]
        max_order: u32,
    },
}

#[derive(Debug, clap::Args)]
struct GraphArgs {
    /// graph6 string, a file whose first line is one, or `-` for stdin.
    input: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Energy,
    Bounds,
    Classify,
    Scan,
    Verify,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Order(usize),
    File(PathBuf),
    Stdin,
    Graph6(String),
    /// `verify` reads no input.
    None,
}

impl Input {
    /// Integer → order, `-` → stdin, existing path → file, otherwise graph6.
    pub fn detect(arg: &str) -> Input {
        if let Ok(n) = arg.parse::<usize>() {
            Input::Order(n)
        } else if arg == "-" {
            Input::Stdin
        } else if Path::new(arg).is_file() {
            Input::File(arg.into())
        } else {
            Input::Graph6(arg.to_string())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub input: Input,
    pub workers: usize,
    pub format: Format,
    pub strict: bool,
    pub long_runs_enabled: bool,
    pub grid_points: usize,
    pub max_order: usize,
}

impl RunConfig {
    fn from_cli(cli: Cli) -> RunConfig {
        let base = RunConfig {
            command: CommandKind::Verify,
            input: Input::None,
            workers: default_workers(),
            format: Format::Text,
            strict: false,
            long_runs_enabled: false,
            grid_points: VerifyConfig::default().grid_points,
            max_order: VerifyConfig::default().max_order,
        };
        let graph = |command, a: GraphArgs| RunConfig { command, input: Input::detect(&a.input), format: a.format, ..base.clone() };
        match cli.command {
            Command::Energy(a) => graph(CommandKind::Energy, a),
            Command::Bounds(a) => graph(CommandKind::Bounds, a),
            Command::Classify(a) => graph(CommandKind::Classify, a),
            Command::Scan { input, workers, format, allow_long, strict } => RunConfig {
                command: CommandKind::Scan,
                input: Input::detect(&input),
                workers: workers.map_or(base.workers, |w| w as usize),
                format,
                strict,
                long_runs_enabled: allow_long,
                ..base
            },
            Command::Verify { grid_points, max_order } => {
                RunConfig { grid_points, max_order: max_order as usize, ..base }
            }
        }
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let cfg = RunConfig::from_cli(cli);
    match execute(&cfg, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Graph6 { .. } | Error::InvalidArgument(_) | Error::UnsupportedOrder { .. } => EXIT_USAGE,
                _ => EXIT_FAILURE,
            }
        }
    }
}

pub fn execute(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    match cfg.command {
        CommandKind::Energy | CommandKind::Bounds | CommandKind::Classify => {
            let g = read_single(&cfg.input)?;
            let report = BoundReport::from_graph(&g)?;
            render::report(out, cfg.command, cfg.format, &report)?;
            Ok(EXIT_OK)
        }
        CommandKind::Scan => {
            let opts = ScanOptions { workers: cfg.workers, strict: cfg.strict };
            let summary = match &cfg.input {
                Input::Order(n) => {
                    let max = if cfg.long_runs_enabled { GENERATE_MAX_ORDER } else { DEFAULT_MAX_SCAN_ORDER };
                    if *n > max {
                        let hint = if *n <= GENERATE_MAX_ORDER { " (pass --allow-long)" } else { "" };
                        return Err(Error::InvalidArgument(format!("scan order {n} exceeds {max}{hint}")));
                    }
                    scan_order(*n, &opts)?
                }
                Input::File(p) => scan_corpus(BufReader::new(File::open(p)?), &opts)?,
                Input::Stdin => scan_corpus(io::stdin().lock(), &opts)?,
                Input::Graph6(s) => scan_corpus(s.as_bytes(), &ScanOptions { strict: true, ..opts })?,
                Input::None => return Err(Error::InvalidArgument("scan needs an input".into())),
            };
            render::summary(out, cfg.format, &summary)?;
            Ok(if summary.unexpected_violations().is_empty() { EXIT_OK } else { EXIT_VIOLATION })
        }
        CommandKind::Verify => {
            let vc = VerifyConfig { grid_points: cfg.grid_points, max_order: cfg.max_order, ..VerifyConfig::default() };
            let results = run_all(&vc)?;
            for r in &results {
                match &r.failure {
                    None => writeln!(out, "PASS {} ({} checks)", r.name, r.checked)?,
                    Some(why) => writeln!(out, "FAIL {}: {why}", r.name)?,
                }
            }
            Ok(if results.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}

fn first_line(reader: impl BufRead) -> Result<String> {
    for line in reader.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            return Ok(line);
        }
    }
    Err(Error::InvalidArgument("no graph6 line in input".into()))
}

fn read_single(input: &Input) -> Result<Graph> {
    let text = match input {
        Input::Graph6(s) => s.clone(),
        Input::Stdin => first_line(io::stdin().lock())?,
        Input::File(p) => first_line(BufReader::new(File::open(p)?))?,
        Input::Order(n) => return Err(Error::InvalidArgument(format!("expected a graph6 string, got order {n}"))),
        Input::None => return Err(Error::InvalidArgument("missing graph input".into())),
    };
    from_graph6(&text)
}
