use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lapsum::families;
use lapsum::graph::Graph;
use lapsum::graph6::{parse_graph6, write_graph6};
use lapsum::threshold::{
    conjugate_degrees, is_complete_split, is_split, recognize_threshold, CreationSequence,
};
use lapsum::verify::{bound_report, full_brouwer, GraphProfile, DEFAULT_TOL_EQ};
use lapsum_cli::pipeline::{run, Checks, GraphSource, KSelect, RunConfig};
use lapsum_cli::records::OutputFormat;

/// Print to stdout, exiting quietly if the consumer closed the pipe
/// (e.g. `lapsum spectrum G | head`); a panic here would spray a backtrace.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "lapsum",
    version,
    about = "Verify conjectured bounds on Laplacian eigenvalue sums s_k(G)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the sum-bound / complement-pair checks over a graph stream.
    Verify(VerifyArgs),
    /// Construct a named family member and report on it.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
        /// Print only the graph6 line (for piping into `verify --input`).
        #[arg(long, global = true)]
        graph6_only: bool,
    },
    /// Spectrum, degree data, and per-k verdicts for one graph.
    Spectrum {
        /// The graph, graph6-encoded.
        graph6: String,
    },
    /// All applicable upper bounds on s_k for one graph, side by side.
    Bounds {
        /// The graph, graph6-encoded.
        graph6: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Vertex count for the exhaustive modes.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    n: Option<usize>,
    /// Exhaustive mode: every labeled graph, or every threshold graph.
    #[arg(long, value_enum, default_value_t = Mode::Labeled)]
    mode: Mode,
    /// File with one graph6 line per graph (instead of an exhaustive mode).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Comma-separated subset of: brouwer, ng, bounds, identities.
    #[arg(long, default_value = "brouwer,ng")]
    checks: String,
    /// "all", or comma-separated k values (intersected with 1..=n-1).
    #[arg(long, default_value = "all")]
    k: String,
    /// Write one record per (graph, k, check) to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    /// Numeric tolerance for calling a verdict an exact equality.
    #[arg(long, default_value_t = DEFAULT_TOL_EQ)]
    tol_eq: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Labeled,
    Threshold,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Clique of size `clique` joined to `n - clique` independent vertices.
    CompleteSplit { n: usize, clique: usize },
    /// Clique, fully attached vertices, and nested partial attachments.
    NestedSplit {
        clique: usize,
        saturated: usize,
        /// Comma-separated non-increasing attachment counts, each < clique.
        #[arg(value_delimiter = ',', num_args = 0..)]
        tails: Vec<usize>,
    },
    /// `pages` triangles on a shared edge, `pendants` leaves on one endpoint.
    Book { pendants: usize, pages: usize },
    /// Star on n vertices with `long_legs` legs subdivided once.
    Spider { n: usize, long_legs: usize },
    /// Cycles of length p and q linked through a path on l vertices.
    Infinity { p: usize, l: usize, q: usize },
    /// Two hubs joined by three disjoint paths of p, l, q edges.
    Theta { p: usize, l: usize, q: usize },
    /// Threshold graph realized from a 0/1 creation sequence.
    Threshold { bits: String },
    /// Join of a base graph (graph6) with `apexes` extra dominating vertices.
    Cone { graph6: String, apexes: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(clean) => {
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Family { family, graph6_only } => {
            let g = build_family(family)?;
            if graph6_only {
                outln!("{}", write_graph6(&g));
            } else {
                describe_graph(&g)?;
            }
            Ok(true)
        }
        Command::Spectrum { graph6 } => {
            let g = parse_graph6(graph6.trim()).map_err(|e| e.to_string())?;
            describe_graph(&g)?;
            Ok(true)
        }
        Command::Bounds { graph6, k } => {
            let g = parse_graph6(graph6.trim()).map_err(|e| e.to_string())?;
            cmd_bounds(&g, k)
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<bool, String> {
    let source = match (&args.input, args.n) {
        (Some(path), _) => GraphSource::Graph6File(path.clone()),
        (None, Some(n)) => match args.mode {
            Mode::Labeled => GraphSource::LabeledExhaustive { n },
            Mode::Threshold => GraphSource::ThresholdExhaustive { n },
        },
        (None, None) => return Err("either --n or --input is required".into()),
    };

    let mut config = RunConfig::new(source);
    config.checks = parse_checks(&args.checks)?;
    config.ks = parse_ks(&args.k)?;
    config.tol_eq = args.tol_eq;
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        config.jobs = jobs;
    }
    if let Some(path) = &args.out {
        let format = match args.format {
            Format::Jsonl => OutputFormat::Jsonl,
            Format::Csv => OutputFormat::Csv,
        };
        config.out = Some((path.clone(), format));
    }

    let summary = run(&config).map_err(|e| e.to_string())?;

    outln!(
        "graphs {}  records {}  violations {}  anomalies {}  equalities {}  elapsed {:.2?}",
        summary.graphs,
        summary.records,
        summary.violations,
        summary.anomalies,
        summary.equalities,
        summary.elapsed
    );
    let shown = summary.witnesses.len();
    for w in &summary.witnesses {
        outln!("equality  {}  k={}  [{}]", w.graph6, w.k, w.check);
    }
    if summary.equalities > shown {
        outln!("... and {} more equalities", summary.equalities - shown);
    }
    Ok(summary.violations == 0 && summary.anomalies == 0)
}

fn parse_checks(s: &str) -> Result<Checks, String> {
    let mut checks = Checks { brouwer: false, ng: false, bounds: false, identities: false };
    for name in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match name {
            "brouwer" => checks.brouwer = true,
            "ng" => checks.ng = true,
            "bounds" => checks.bounds = true,
            "identities" => checks.identities = true,
            other => {
                return Err(format!(
                    "unknown check '{other}' (expected brouwer, ng, bounds, identities)"
                ))
            }
        }
    }
    if !(checks.brouwer || checks.ng || checks.bounds || checks.identities) {
        return Err("at least one check is required".into());
    }
    Ok(checks)
}

fn parse_ks(s: &str) -> Result<KSelect, String> {
    if s.trim() == "all" {
        return Ok(KSelect::All);
    }
    let ks: Vec<usize> = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad k value '{t}'")))
        .collect::<Result<_, _>>()?;
    if ks.is_empty() {
        return Err("empty k list".into());
    }
    Ok(KSelect::List(ks))
}

fn build_family(f: FamilyCommand) -> Result<Graph, String> {
    let g = match f {
        FamilyCommand::CompleteSplit { n, clique } => families::complete_split(n, clique),
        FamilyCommand::NestedSplit { clique, saturated, tails } => {
            families::nested_split(clique, saturated, &tails)
        }
        FamilyCommand::Book { pendants, pages } => families::book_with_pendants(pendants, pages),
        FamilyCommand::Spider { n, long_legs } => families::spider(n, long_legs),
        FamilyCommand::Infinity { p, l, q } => families::infinity_graph(p, l, q),
        FamilyCommand::Theta { p, l, q } => families::theta_graph(p, l, q),
        FamilyCommand::Threshold { bits } => {
            return CreationSequence::parse(&bits)
                .map(|seq| seq.realize())
                .map_err(|e| e.to_string())
        }
        FamilyCommand::Cone { graph6, apexes } => {
            let base = parse_graph6(&graph6).map_err(|e| e.to_string())?;
            families::cone_over(&base, apexes)
        }
    };
    g.map_err(|e| e.to_string())
}

fn describe_graph(g: &Graph) -> Result<(), String> {
    let profile = GraphProfile::new(g).map_err(|e| e.to_string())?;
    let n = g.n();
    outln!("graph6      {}", write_graph6(g));
    outln!("n: {}   m: {}   connected: {}", n, g.edge_count(), g.is_connected());

    let degrees = g.degree_sequence();
    let conj = conjugate_degrees(&degrees);
    outln!("degrees     {:?}", degrees.values());
    outln!("conjugate   {:?}", conj.values());
    outln!("trace       {}", conj.trace());
    outln!(
        "threshold: {}   split: {}   complete split: {}   clique number: {}",
        recognize_threshold(g).is_some(),
        is_split(g),
        is_complete_split(g),
        profile.omega(),
    );

    let mu = profile.spectrum().values();
    let formatted: Vec<String> = mu
        .iter()
        .map(|&x| format!("{:.6}", if x.abs() < 5e-7 { 0.0 } else { x }))
        .collect();
    outln!("spectrum    [{}]", formatted.join(", "));

    if n >= 2 {
        outln!("{:>3} {:>14} {:>10} {:>12}  class", "k", "s_k", "bound", "slack");
        for v in full_brouwer(g).map_err(|e| e.to_string())? {
            outln!(
                "{:>3} {:>14.6} {:>10} {:>12.6}  {}",
                v.k, v.s_k, v.bound, v.slack, v.class
            );
        }
    }
    Ok(())
}

fn cmd_bounds(g: &Graph, k: usize) -> Result<bool, String> {
    let r = bound_report(g, k).map_err(|e| e.to_string())?;
    outln!("k           {}", r.k);
    outln!("s_k         {:.6}", r.s_k);
    outln!("sum bound   {:.6}   (m + C(k+1,2))", r.brouwer);
    outln!("conjugate   {:.6}   (sum of first k conjugate degrees)", r.grone_merris);
    match r.wang {
        Some(b) => outln!("wang        {b:.6}"),
        None => outln!("wang        n/a (disconnected)"),
    }
    match r.zhou {
        Some(b) => outln!("zhou        {b:.6}"),
        None => outln!("zhou        n/a (k > n-2)"),
    }
    match r.nikiforov {
        Some((lhs, rhs)) => outln!("adjacency complement pair   {lhs:.6} <= {rhs:.6}"),
        None => outln!("adjacency complement pair   n/a (2k+1 > n)"),
    }
    Ok(true)
}
