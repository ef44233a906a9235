//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use bipartite_core::{
    bfs_bipartiteness, decide_balls, decide_segments, degeneracy_scan, generic_bipartiteness, BallsError,
    GridFactory, IntersectionGraph, Mode, NeighborSearch, Provenance, Report, SegmentSweep, SweepError, SweepOptions,
    Verdict,
};
use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{self, GenKind, GenSpec, GenSpecError};
use crate::instance::{Instance, InstanceError};
use crate::output::VerdictDoc;
use crate::svg;

pub const EXIT_BIPARTITE: i32 = 0;
pub const EXIT_ODD_CYCLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bipartite", version, about = "Bipartiteness of segment, disk and ball intersection graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide one instance file and print the verdict.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Overrides the file's mode (segments only).
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        out: OutFormat,
        /// Re-check the emitted witness against the input.
        #[arg(long)]
        verify: bool,
    },
    /// Print a pseudo-random instance.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        n: usize,
        /// Build the instance so its graph is bipartite.
        #[arg(long)]
        bipartite: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time every applicable algorithm on a file or `gen:<kind>:<n>[:bipartite][:seed=S]`.
    Bench { input: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Auto,
    Sweep,
    Generic,
    Balls,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Closed,
    Open,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Svg,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    GenSpec(#[from] GenSpecError),
    #[error("--algo {algo} does not apply to {kind}")]
    Unsupported { algo: &'static str, kind: &'static str },
    #[error("--mode applies to segments only")]
    ModeOnSegmentsOnly,
    #[error("input is not in general position ({0}); use --algo auto")]
    Degenerate(String),
    #[error("invalid balls input: {0}")]
    BadBalls(BallsError),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("verification failed: {0}")]
    Verify(String),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) | CliError::Verify(_) | CliError::Output(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        }
    }
}

impl From<SweepError> for CliError {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::Degenerate(what) => CliError::Degenerate(what),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<BallsError> for CliError {
    fn from(e: BallsError) -> Self {
        match e {
            BallsError::CapWithoutPair(_) | BallsError::NotBipartite => CliError::Internal(e.to_string()),
            other => CliError::BadBalls(other),
        }
    }
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
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_BIPARTITE };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Check { file, algo, mode, out: format, verify } => {
            let mut instance = load(&file)?;
            if let Some(m) = mode {
                match &mut instance {
                    Instance::Segments { mode, .. } => *mode = if m == ModeArg::Open { Mode::Open } else { Mode::Closed },
                    _ => return Err(CliError::ModeOnSegmentsOnly),
                }
            }
            let report = decide(&instance, algo)?;
            let doc = VerdictDoc::from_report(&report);
            if verify {
                verify_doc(&instance, &doc)?;
            }
            match format {
                OutFormat::Json => writeln!(out, "{}", doc.to_json())?,
                OutFormat::Svg => write!(out, "{}", svg::render(&instance, &report.verdict))?,
            }
            Ok(if report.verdict.is_bipartite() { EXIT_BIPARTITE } else { EXIT_ODD_CYCLE })
        }
        Command::Gen { kind, n, bipartite, seed } => {
            let instance = GenSpec { kind, n, bipartite, seed }.generate();
            writeln!(out, "{}", instance.to_json())?;
            Ok(EXIT_BIPARTITE)
        }
        Command::Bench { input } => {
            let instance = if input.starts_with("gen:") {
                GenSpec::parse(&input)?.generate()
            } else {
                load(&PathBuf::from(&input))?
            };
            writeln!(out, "{} n={}", instance.kind(), instance.len())?;
            writeln!(out, "{}", bench::HEADER)?;
            for row in bench::bench(&instance) {
                writeln!(out, "{row}")?;
            }
            Ok(EXIT_BIPARTITE)
        }
    }
}

fn load(path: &PathBuf) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
    Ok(Instance::parse(&text)?)
}

fn report(verdict: Verdict, provenance: Provenance) -> Report {
    Report { verdict, provenance, perturbed: false }
}

fn decide(instance: &Instance, algo: Algo) -> Result<Report, CliError> {
    let unsupported = |algo| CliError::Unsupported { algo, kind: instance.kind() };
    match instance {
        Instance::Segments { mode, items } => match algo {
            Algo::Auto => Ok(decide_segments(items, *mode)?),
            Algo::Sweep => {
                let scan = degeneracy_scan(items, *mode);
                if let Some(v) = scan.violations.first() {
                    return Err(CliError::Degenerate(format!("{v:?}")));
                }
                let run = SegmentSweep::new(items, *mode, SweepOptions::default())?.run()?;
                Ok(report(run.verdict, Provenance::Sweep))
            }
            Algo::Generic => Ok(report(generic_bipartiteness(items, *mode, &GridFactory), Provenance::Generic)),
            Algo::Oracle => Ok(report(bfs_bipartiteness(&IntersectionGraph::build(items, *mode)), Provenance::Oracle)),
            Algo::Balls => Err(unsupported("balls")),
        },
        Instance::Disks { items } | Instance::Balls { items, .. } => match algo {
            Algo::Auto | Algo::Balls => Ok(decide_balls(items, NeighborSearch::Grid)?),
            Algo::Generic => Ok(report(generic_bipartiteness(items, Mode::Closed, &GridFactory), Provenance::Generic)),
            Algo::Oracle => {
                let graph = IntersectionGraph::build(items, Mode::Closed);
                Ok(report(bfs_bipartiteness(&graph), Provenance::Oracle))
            }
            Algo::Sweep => Err(unsupported("sweep")),
        },
    }
}

/// Round-trips the document through JSON and validates the re-read witness
/// against the input.
fn verify_doc(instance: &Instance, doc: &VerdictDoc) -> Result<(), CliError> {
    let back = VerdictDoc::parse(&doc.to_json())
        .and_then(|d| d.to_report())
        .map_err(|e| CliError::Verify(e.to_string()))?;
    let checked = match instance {
        Instance::Segments { mode, items } => back.verdict.validate(items, *mode),
        Instance::Disks { items } | Instance::Balls { items, .. } => back.verdict.validate(items, Mode::Closed),
    };
    checked.map_err(|e| CliError::Verify(e.to_string()))
}
