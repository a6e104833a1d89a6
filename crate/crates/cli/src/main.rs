use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use halfgraph::constructions::{best_edge_half, krivelevich_bound, maxdeg_halves, triple_half_bound};
use halfgraph::density::{c4_density, delta, rho};
use halfgraph::exactmath::fmt_rational;
use halfgraph::girth5::{girth5_report, rows_to_csv};
use halfgraph::graphcore::mis::independence_number;
use halfgraph::graphcore::{enumerate_triangle_free, graph6, named, Graph, VertexSet};
use halfgraph::halves::{beta_exact, local_search_half, BoundCertificate, DEFAULT_RESTARTS, DEFAULT_SEED};
use halfgraph::independence::independence_half_any;
use halfgraph::verify::{run_sections, SectionName, VerifyOptions};

/// `println!` that exits quietly once stdout is closed, e.g. when piped into `head`.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "halfgraph",
    version,
    about = "Sparse halves of triangle-free graphs, computed exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate or inspect graphs.
    #[command(subcommand)]
    Graphs(GraphsCmd),
    /// Compute or bound β(G).
    #[command(subcommand)]
    Beta(BetaCmd),
    /// Run the reproduction suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum GraphsCmd {
    /// All triangle-free graphs on n vertices up to isomorphism, as graph6.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=10))]
        n: u64,
        /// Print only the number of graphs.
        #[arg(long)]
        count_only: bool,
    },
    /// Basic invariants of a graph.
    Info(Source),
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct Source {
    /// One of c5, petersen, clebsch, hoffman_singleton, gewirtz, m22, higman_sims.
    #[arg(long)]
    named: Option<String>,
    /// A graph6 file; only the first graph is used.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum BetaCmd {
    /// Exact β by branch and bound (small graphs only).
    Exact {
        #[command(flatten)]
        source: Source,
    },
    /// An upper bound from one construction.
    Bound {
        #[arg(long, value_enum)]
        method: Method,
        #[command(flatten)]
        source: Source,
        /// Seed for local search.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Restarts for local search.
        #[arg(long, default_value_t = DEFAULT_RESTARTS, value_parser = positive)]
        retries: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Edge,
    Maxdeg,
    Triple,
    Independence,
    LocalSearch,
    Krivelevich,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Check the numeric claims section by section.
    Paper {
        #[arg(long, value_enum, default_value_t = SectionArg::All)]
        section: SectionArg,
        /// Write the full report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the girth-5 case table as CSV.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Local-search restarts for the Higman-Sims check.
        #[arg(long, default_value_t = DEFAULT_RESTARTS, value_parser = positive)]
        retries: usize,
        /// Local-search seed for the Higman-Sims check.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Sections run concurrently.
        #[arg(long, default_value_t = 1, value_parser = positive)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SectionArg {
    Quadrilaterals,
    Sparse,
    Srg,
    Independence,
    Girth5,
    Counts,
    All,
}

impl SectionArg {
    fn names(self) -> Vec<SectionName> {
        match self {
            SectionArg::Quadrilaterals => vec![SectionName::Quadrilaterals],
            SectionArg::Sparse => vec![SectionName::Sparse],
            SectionArg::Srg => vec![SectionName::Srg],
            SectionArg::Independence => vec![SectionName::Independence],
            SectionArg::Girth5 => vec![SectionName::Girth5],
            SectionArg::Counts => vec![SectionName::Counts],
            SectionArg::All => SectionName::ALL.to_vec(),
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn load(source: &Source) -> Result<Graph> {
    match (&source.named, &source.file) {
        (Some(name), _) => Ok(named(name)?.graph),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let graphs = graph6::decode_all(&text).with_context(|| format!("parsing {}", path.display()))?;
            graphs
                .into_iter()
                .next()
                .with_context(|| format!("{} holds no graph", path.display()))
        }
        (None, None) => bail!("pass --named or --file"),
    }
}

fn graphs(cmd: GraphsCmd) -> Result<bool> {
    match cmd {
        GraphsCmd::Enumerate { n, count_only } => {
            let all = enumerate_triangle_free(n as usize)?;
            if count_only {
                out!("{}", all.len());
            } else {
                for g in &all {
                    out!("{}", graph6::encode(g));
                }
                eprintln!("{} graphs", all.len());
            }
        }
        GraphsCmd::Info(source) => {
            let g = load(&source)?;
            out!("n: {}", g.n());
            out!("edges: {}", g.edge_count());
            out!("rho: {}", fmt_rational(&rho(&g)));
            out!("delta: {}", fmt_rational(&delta(&g)));
            out!("c4: {}", fmt_rational(&c4_density(&g)));
            match g.girth() {
                Some(girth) => out!("girth: {girth}"),
                None => out!("girth: none"),
            }
            out!("triangle_free: {}", g.is_triangle_free());
            out!("induced_2matching: {}", g.has_induced_2matching());
        }
    }
    Ok(true)
}

fn print_certificate(cert: &BoundCertificate, headline: &halfgraph::exactmath::Rational) {
    out!("{}", fmt_rational(headline));
    if let Some(half) = &cert.half {
        out!("half_value: {}", fmt_rational(&cert.bound));
        let w: Vec<String> = half.weights().iter().map(fmt_rational).collect();
        out!("half: {}", w.join(" "));
    }
    for (k, v) in &cert.params {
        out!("{k}: {}", fmt_rational(v));
    }
}

fn beta(cmd: BetaCmd) -> Result<bool> {
    match cmd {
        BetaCmd::Exact { source } => {
            let g = load(&source)?;
            let (value, half) = beta_exact(&g)?;
            let cert = BoundCertificate::from_half(&g, "exact", half)?;
            print_certificate(&cert, &value);
        }
        BetaCmd::Bound {
            method,
            source,
            seed,
            retries,
        } => {
            let g = load(&source)?;
            // analytic methods lead with the formula value, constructive ones with β of their half
            let (cert, headline) = match method {
                Method::Edge => {
                    let c = best_edge_half(&g)?;
                    let b = c.bound.clone();
                    (c, b)
                }
                Method::Maxdeg => analytic(maxdeg_halves(&g)?),
                Method::Triple => analytic(triple_half_bound(&g)?),
                Method::Krivelevich => {
                    let b = krivelevich_bound(&g)?;
                    (BoundCertificate::analytic("krivelevich", b.clone()), b)
                }
                Method::Independence => {
                    let a = VertexSet::from_vertices(g.n(), independence_number(&g).1);
                    let c = independence_half_any(&g, &a)?;
                    let b = c.bound.clone();
                    (c, b)
                }
                Method::LocalSearch => {
                    let c = local_search_half(&g, seed, retries)?;
                    let b = c.bound.clone();
                    (c, b)
                }
            };
            print_certificate(&cert, &headline);
        }
    }
    Ok(true)
}

fn analytic(cert: BoundCertificate) -> (BoundCertificate, halfgraph::exactmath::Rational) {
    let b = cert.param("analytic").cloned().unwrap_or_else(|| cert.bound.clone());
    (cert, b)
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn verify(cmd: VerifyCmd) -> Result<bool> {
    let VerifyCmd::Paper {
        section,
        json,
        table,
        retries,
        seed,
        jobs,
    } = cmd;
    let opts = VerifyOptions {
        seed,
        restarts: retries,
    };
    let report = run_sections(&section.names(), &opts, jobs);
    for s in &report.sections {
        out!("[{}]", s.name);
        for c in &s.checks {
            out!("  {}", c.line());
        }
        out!(
            "  {}/{} pass",
            s.checks.iter().filter(|c| c.pass).count(),
            s.checks.len()
        );
    }
    out!("total: {}/{} pass", report.total() - report.failed(), report.total());
    if let Some(path) = json {
        write(&path, &serde_json::to_string_pretty(&report)?)?;
    }
    if let Some(path) = table {
        write(&path, &rows_to_csv(&girth5_report()?))?;
    }
    if !report.passed() {
        eprintln!("failed checks:");
        for s in &report.sections {
            for c in s.failures() {
                eprintln!("  {}/{}: {}", s.name, c.id, c.claim);
            }
        }
    }
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Graphs(cmd) => graphs(cmd),
        Command::Beta(cmd) => beta(cmd),
        Command::Verify(cmd) => verify(cmd),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
