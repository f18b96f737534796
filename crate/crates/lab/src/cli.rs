//! Command-line front end. Exit codes: 0 clean, 1 violation found, 2 usage
//! or input/output error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use domcycle_core::enumerate::MAX_ENUM_ORDER;
use domcycle_core::graph6;
use domcycle_core::{EnumError, EnumSpec, Graph};
use thiserror::Error;

use crate::analysis::Analysis;
use crate::gallery::{sharpness_gallery, GalleryError};
use crate::report::{DomainSpec, ErrorRow, VerificationReport};
use crate::stream::{read_all, ErrorPolicy, StreamError};
use crate::sweep::{
    enumerate_parallel, graphs_up_to, lemma_sweep, theorem1_domain, tightness_search,
    verify_theorem1, with_threads, Applicability, Check, DomainError,
};

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "domcycle",
    version,
    about = "Longest-cycle domination checks on small graphs"
)]
pub struct Cli {
    /// Worker threads; defaults to all cores. Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Also write newline-delimited JSON to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print invariants and every longest cycle of each input graph.
    Analyze(AnalyzeArgs),
    /// Write one canonical graph6 line per isomorphism class.
    Enum(EnumArgs),
    /// Check that every longest cycle of every applicable graph dominates.
    Verify(VerifyArgs),
    /// Sweep one lemma or classical bound over a domain.
    Lemmas(LemmaArgs),
    /// Build and measure the extremal constructions for a minimum degree.
    Gallery(GalleryArgs),
    /// Search for 2-connected graphs with a non-dominating longest cycle.
    Tightness(TightnessArgs),
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum OnError {
    #[default]
    Abort,
    Skip,
}

impl From<OnError> for ErrorPolicy {
    fn from(o: OnError) -> ErrorPolicy {
        match o {
            OnError::Abort => ErrorPolicy::Abort,
            OnError::Skip => ErrorPolicy::Skip,
        }
    }
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["graph6_line", "input"])))]
struct AnalyzeArgs {
    /// A single graph6 string.
    #[arg(long)]
    graph6_line: Option<String>,
    /// A graph6 file, one graph per line; `-` reads standard input.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    on_error: OnError,
}

#[derive(Debug, Args)]
struct EnumArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    min_degree: usize,
    #[arg(long)]
    max_edges: Option<usize>,
    #[arg(long)]
    biconnected: bool,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Minimum degree of the domain. Required without --input; with --input,
    /// restricts the hypotheses to δ(G) >= d and q <= q_max(d).
    #[arg(long, required_unless_present = "input")]
    delta: Option<usize>,
    /// Largest order to enumerate or, with --input, to keep.
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    on_error: OnError,
}

#[derive(Debug, Args)]
struct LemmaArgs {
    /// 1, 2, 3, 4, S (segment lengths), D or E.
    #[arg(long)]
    which: Check,
    /// Sweep all graphs (2-connected ones for 4 and D) up to this order.
    #[arg(long, required_unless_present = "input", conflicts_with = "input")]
    n_max: Option<usize>,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    on_error: OnError,
}

#[derive(Debug, Args)]
struct GalleryArgs {
    #[arg(long)]
    delta: usize,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("range").required(true).multiple(true).args(["q", "q_from"])))]
struct TightnessArgs {
    #[arg(long)]
    delta: usize,
    /// A single size; shorthand for --q-from q --q-to q.
    #[arg(long, conflicts_with_all = ["q_from", "q_to"])]
    q: Option<usize>,
    #[arg(long, requires = "q_to")]
    q_from: Option<usize>,
    #[arg(long, requires = "q_from")]
    q_to: Option<usize>,
    #[arg(long, default_value_t = MAX_ENUM_ORDER)]
    n_max: usize,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Output(#[from] io::Error),
    #[error(transparent)]
    Stream(#[from] StreamError),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Gallery(#[from] GalleryError),
    #[error("graph6: {0}")]
    Graph6(#[from] domcycle_core::Graph6Error),
    #[error(transparent)]
    Threads(#[from] rayon::ThreadPoolBuildError),
}

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn open(path: &Path) -> Result<Box<dyn BufRead>, CliError> {
    if path == Path::new("-") {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    Ok(Box::new(BufReader::new(
        File::open(path).map_err(io_error(path))?,
    )))
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    Ok(BufWriter::new(File::create(path).map_err(io_error(path))?))
}

/// Reads graphs from a file, keeping unreadable lines as error rows under
/// the skip policy.
fn read_graphs(path: &Path, policy: ErrorPolicy) -> Result<(Vec<Graph>, Vec<ErrorRow>), CliError> {
    let (graphs, errors) = read_all(open(path)?, policy)?;
    Ok((
        graphs.into_iter().map(|g| g.graph).collect(),
        errors.iter().map(ErrorRow::from).collect(),
    ))
}

fn stream_domain(path: &Path, delta: Option<usize>, n_max: Option<usize>) -> DomainSpec {
    DomainSpec {
        source: "stream".into(),
        delta,
        n_max,
        input: Some(path.display().to_string()),
        ..Default::default()
    }
}

struct Context<'a> {
    out: &'a mut (dyn Write + Send),
    json: Option<PathBuf>,
}

impl Context<'_> {
    fn finish(
        &mut self,
        mut report: VerificationReport,
        started: Instant,
    ) -> Result<i32, CliError> {
        report.summary.wall_time_ms = started.elapsed().as_millis() as u64;
        self.out.write_all(report.render().as_bytes())?;
        if let Some(path) = &self.json {
            let mut file = create(path)?;
            report.write_ndjson(&mut file)?;
            file.flush()?;
        }
        Ok(if report.is_clean() {
            EXIT_CLEAN
        } else {
            EXIT_VIOLATION
        })
    }

    fn json_lines<T: serde::Serialize>(&self, items: &[T]) -> Result<(), CliError> {
        if let Some(path) = &self.json {
            let mut file = create(path)?;
            for item in items {
                serde_json::to_writer(&mut file, item).map_err(io::Error::from)?;
                file.write_all(b"\n")?;
            }
            file.flush()?;
        }
        Ok(())
    }
}

fn analyze(cx: &mut Context, args: AnalyzeArgs) -> Result<i32, CliError> {
    let (graphs, errors) = match (&args.graph6_line, &args.input) {
        (Some(line), _) => (vec![graph6::parse(line.trim())?], Vec::new()),
        (None, Some(path)) => read_graphs(path, args.on_error.into())?,
        (None, None) => unreachable!("clap requires one source"),
    };
    let analyses: Vec<Analysis> = {
        use rayon::prelude::*;
        graphs.par_iter().map(Analysis::of).collect()
    };
    for a in &analyses {
        cx.out.write_all(a.render().as_bytes())?;
    }
    for e in &errors {
        writeln!(cx.out, "line {}: {}", e.line, e.message)?;
    }
    cx.json_lines(&analyses)?;
    Ok(EXIT_CLEAN)
}

fn enumerate(cx: &mut Context, args: EnumArgs) -> Result<i32, CliError> {
    let mut spec = EnumSpec::new(args.n)?
        .min_degree(args.min_degree)?
        .biconnected(args.biconnected);
    if let Some(q) = args.max_edges {
        spec = spec.max_edges_at_most(q);
    }
    let graphs = enumerate_parallel(&spec);
    let write = |w: &mut dyn Write| -> io::Result<()> {
        for g in &graphs {
            writeln!(w, "{}", graph6::emit(g))?;
        }
        w.flush()
    };
    match &args.out {
        Some(path) => {
            write(&mut create(path)?)?;
            writeln!(
                cx.out,
                "{} graphs written to {}",
                graphs.len(),
                path.display()
            )?;
        }
        None => write(cx.out)?,
    }
    cx.json_lines(&[serde_json::json!({
        "kind": "enum",
        "n": args.n,
        "min_degree": args.min_degree,
        "max_edges": spec.max_edges_bound(),
        "biconnected": args.biconnected,
        "count": graphs.len(),
    })])?;
    Ok(EXIT_CLEAN)
}

fn verify(cx: &mut Context, args: VerifyArgs) -> Result<i32, CliError> {
    let started = Instant::now();
    let report = match &args.input {
        None => {
            let delta = args.delta.expect("clap requires --delta without --input");
            let domain = theorem1_domain(delta, args.n_max)?;
            let graphs = domain.graphs()?;
            verify_theorem1(&graphs, Applicability::AtLeast(delta), domain.describe())
        }
        Some(path) => {
            let (mut graphs, errors) = read_graphs(path, args.on_error.into())?;
            if let Some(k) = args.n_max {
                graphs.retain(|g| g.order() <= k);
            }
            let rule = args
                .delta
                .map_or(Applicability::OwnDegree, Applicability::AtLeast);
            verify_theorem1(&graphs, rule, stream_domain(path, args.delta, args.n_max))
                .with_errors(errors)
        }
    };
    cx.finish(report, started)
}

fn lemmas(cx: &mut Context, args: LemmaArgs) -> Result<i32, CliError> {
    let started = Instant::now();
    let report = match (&args.input, args.n_max) {
        (Some(path), _) => {
            let (graphs, errors) = read_graphs(path, args.on_error.into())?;
            lemma_sweep(&graphs, args.which, stream_domain(path, None, None)).with_errors(errors)
        }
        (None, Some(k)) => {
            let biconnected = args.which.wants_biconnected();
            let graphs = graphs_up_to(1, k, biconnected)?;
            let domain = DomainSpec {
                source: "enumeration".into(),
                n_min: Some(1),
                n_max: Some(k),
                biconnected: Some(biconnected),
                ..Default::default()
            };
            lemma_sweep(&graphs, args.which, domain)
        }
        (None, None) => unreachable!("clap requires --n-max without --input"),
    };
    cx.finish(report, started)
}

fn gallery(cx: &mut Context, args: GalleryArgs) -> Result<i32, CliError> {
    let entries = sharpness_gallery(args.delta)?;
    for e in &entries {
        cx.out.write_all(e.render().as_bytes())?;
    }
    cx.json_lines(&entries)?;
    Ok(EXIT_CLEAN)
}

fn tightness(cx: &mut Context, args: TightnessArgs) -> Result<i32, CliError> {
    let started = Instant::now();
    let (from, to) = match args.q {
        Some(q) => (q, q),
        None => (args.q_from.unwrap_or(0), args.q_to.unwrap_or(0)),
    };
    let report = tightness_search(args.delta, from, to, args.n_max)?;
    // witnesses are findings, not failures
    cx.finish(report, started).map(|_| EXIT_CLEAN)
}

/// Parses `args` (program name first) and runs the command, writing the
/// human-readable output to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_ERROR;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_CLEAN;
        }
    };
    let Cli {
        threads,
        json,
        command,
    } = cli;
    let mut cx = Context { out, json };
    let result = with_threads(threads, || match command {
        Command::Analyze(a) => analyze(&mut cx, a),
        Command::Enum(a) => enumerate(&mut cx, a),
        Command::Verify(a) => verify(&mut cx, a),
        Command::Lemmas(a) => lemmas(&mut cx, a),
        Command::Gallery(a) => gallery(&mut cx, a),
        Command::Tightness(a) => tightness(&mut cx, a),
    });
    match result.map_err(CliError::from).and_then(|r| r) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
