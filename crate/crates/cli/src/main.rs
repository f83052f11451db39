use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use cliquegraph::clique::clique_number;
use cliquegraph::generators::{
    golay_coset_graph, gq_collinearity_graph, gq_dual, gq_elliptic, gq_symplectic, oa_block_graph,
    orthogonal_array, rook_graph, triangular_graph,
};
use cliquegraph::graph::{complete_graph, complete_multipartite, parse_graph6, write_graph6};
use cliquegraph::report::{self, AnalysisOptions, AnalysisReport, PredictionReport};
use cliquegraph::spectral::DEFAULT_TOL;
use cliquegraph::verify::{self, Scope, VerifyReport};
use cliquegraph::{Error, Graph, SrgParams};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_LIMIT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "cliquegraph",
    version,
    about = "Clique graphs of clique-regular graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Human-readable text instead of JSON.
    #[arg(long)]
    pretty: bool,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Stamp the report with the current time.
    #[arg(long)]
    timestamp: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as one graph6 line.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(long, short, global = true)]
        output: Option<PathBuf>,
    },
    /// Analyze a graph6 graph (file path, or `-` for stdin).
    Analyze {
        input: String,
        /// Clique order to analyze; repeatable. Defaults to the clique number.
        #[arg(long = "omega", short = 'w')]
        omegas: Vec<usize>,
        /// Require exact spectra even above the exact-size cap.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Predict the clique graph of an srg from its parameters alone.
    Predict {
        n: u64,
        k: u64,
        lambda: u64,
        mu: u64,
        #[arg(long, short = 'w')]
        omega: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run a theorem check; exit 1 on the first failure.
    Verify {
        /// One of the known theorem ids, or `all`.
        theorem: String,
        #[arg(long, value_enum, default_value_t = CorpusArg::Standard)]
        corpus: CorpusArg,
        /// Field order for gq-duality; repeatable.
        #[arg(long)]
        q: Vec<usize>,
        /// Exhaustive sweep over connected graphs up to this order.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Number of random graphs in sweeps.
        #[arg(long, default_value_t = 10_000)]
        random: usize,
        #[arg(long, default_value_t = 9)]
        random_max_n: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CorpusArg {
    Standard,
}

#[derive(Clone, Copy, ValueEnum)]
enum GqKind {
    Symplectic,
    Elliptic,
}

#[derive(Subcommand)]
enum Family {
    /// n × n rook's graph.
    Rook {
        n: usize,
    },
    /// Line graph of K_n.
    Triangular {
        n: usize,
    },
    /// Block graph of OA(n, m), n prime.
    OaBlock {
        n: usize,
        m: usize,
    },
    /// Collinearity graph of W(q), q prime.
    GqSymplectic {
        q: usize,
    },
    /// Collinearity graph of Q-(5, q), q in {2, 3}.
    GqElliptic {
        q: usize,
    },
    /// Collinearity graph of the dual of W(q) or Q-(5, q).
    GqDualCollinearity {
        #[arg(value_enum)]
        kind: GqKind,
        q: usize,
    },
    /// Coset graph of the ternary Golay code.
    Golay,
    Complete {
        n: usize,
    },
    /// Complete multipartite graph with the given part sizes.
    CompleteMultipartite {
        #[arg(required = true)]
        parts: Vec<usize>,
    },
}

enum Failure {
    Usage(String),
    Io(String),
    Limit(String),
    Failed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) => Failure::Limit(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed) => ExitCode::from(EXIT_FAILED),
        Err(Failure::Usage(m)) => fail(EXIT_USAGE, &m),
        Err(Failure::Io(m)) => fail(EXIT_IO, &m),
        Err(Failure::Limit(m)) => fail(EXIT_LIMIT, &m),
    }
}

fn fail(code: u8, message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen { family, output } => {
            let g = generate(family)?;
            emit(&output, &format!("{}\n", write_graph6(&g)))
        }
        Command::Analyze {
            input,
            omegas,
            exact,
            tol,
            out,
        } => {
            if !(tol > 0.0 && tol < 1.0) {
                return Err(Failure::Usage(format!(
                    "tolerance must lie in (0, 1), got {tol}"
                )));
            }
            let g = read_graph(&input)?;
            let omegas = if omegas.is_empty() {
                vec![clique_number(&g).max(2)]
            } else {
                omegas
            };
            if let Some(w) = omegas.iter().find(|&&w| w < 2) {
                return Err(Failure::Usage(format!("omega must be at least 2, got {w}")));
            }
            let opts = AnalysisOptions {
                omegas,
                tol,
                force_exact: exact,
            };
            let mut r = report::analyze(&g, &input, &opts)?;
            r.timestamp = stamp(out.timestamp);
            let text = if out.pretty {
                pretty_analysis(&r)
            } else {
                report::to_json(&r)
            };
            emit(&out.output, &format!("{text}\n"))
        }
        Command::Predict {
            n,
            k,
            lambda,
            mu,
            omega,
            out,
        } => {
            let params = SrgParams::new(n, k, lambda, mu)?;
            let mut r = report::predict(&params, omega)?;
            r.timestamp = stamp(out.timestamp);
            let text = if out.pretty {
                pretty_prediction(&r)
            } else {
                report::to_json(&r)
            };
            emit(&out.output, &format!("{text}\n"))
        }
        Command::Verify {
            theorem,
            corpus: _,
            q,
            max_n,
            random,
            random_max_n,
            seed,
            out,
        } => {
            let scope = Scope {
                exhaustive_max_n: max_n,
                random_count: random,
                random_max_n: random_max_n.max(1),
                seed,
                q: if q.is_empty() { Scope::default().q } else { q },
            };
            let ids: Vec<&str> = if theorem == "all" {
                verify::THEOREMS.to_vec()
            } else {
                vec![theorem.as_str()]
            };
            let mut reports = Vec::new();
            for id in ids {
                reports.push(verify::run(id, &scope)?);
            }
            let text = if out.pretty {
                reports.iter().map(pretty_verify).collect::<String>()
            } else {
                reports
                    .iter()
                    .map(|r| report::to_json(r) + "\n")
                    .collect::<String>()
            };
            emit(&out.output, &text)?;
            if reports.iter().all(|r| r.pass) {
                Ok(())
            } else {
                Err(Failure::Failed)
            }
        }
    }
}

fn generate(family: Family) -> Result<Graph, Failure> {
    Ok(match family {
        Family::Rook { n } => rook_graph(n)?,
        Family::Triangular { n } => triangular_graph(n)?,
        Family::OaBlock { n, m } => oa_block_graph(&orthogonal_array(n, m)?),
        Family::GqSymplectic { q } => gq_collinearity_graph(&gq_symplectic(q)?)?,
        Family::GqElliptic { q } => gq_collinearity_graph(&gq_elliptic(q)?)?,
        Family::GqDualCollinearity { kind, q } => {
            let s = match kind {
                GqKind::Symplectic => gq_symplectic(q)?,
                GqKind::Elliptic => gq_elliptic(q)?,
            };
            gq_collinearity_graph(&gq_dual(&s)?)?
        }
        Family::Golay => golay_coset_graph(),
        Family::Complete { n } => complete_graph(n),
        Family::CompleteMultipartite { parts } => complete_multipartite(&parts)?,
    })
}

fn read_graph(input: &str) -> Result<Graph, Failure> {
    let mut text = String::new();
    if input == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(input).map_err(|e| Failure::Io(format!("{input}: {e}")))?;
    }
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Failure::Usage(format!("{input}: no graph6 line")))?;
    Ok(parse_graph6(line)?)
}

fn emit(path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))
        }
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}

fn stamp(on: bool) -> Option<String> {
    on.then(|| {
        let secs = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        format!("unix:{secs}")
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pretty_analysis(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let st = &r.stats;
    let _ = writeln!(s, "input      {}", r.input.source);
    let _ = writeln!(
        s,
        "graph      n={} edges={} degree {}..{}{} connected={}",
        st.n,
        st.edges,
        st.min_degree,
        st.max_degree,
        st.k.map_or(String::new(), |k| format!(" ({k}-regular)")),
        yes(st.connected)
    );
    let _ = writeln!(
        s,
        "cliques    clique number {}, clique regular for {:?}",
        r.clique_number, r.clique_regular_orders
    );
    if let Some(srg) = &r.srg {
        let _ = writeln!(
            s,
            "srg        {}{}",
            srg.params,
            if srg.boring { " (boring)" } else { "" }
        );
    }
    let _ = writeln!(
        s,
        "spectrum   {} [{:?}]",
        r.spectrum.spectrum, r.spectrum.mode
    );
    for w in &r.omegas {
        let _ = writeln!(s);
        let _ = writeln!(s, "omega {}", w.omega);
        let _ = writeln!(s, "  cliques          {}", w.clique_count);
        let _ = writeln!(s, "  clique regular   {}", yes(w.clique_regular));
        if let Some(c) = &w.counterexample {
            let _ = writeln!(
                s,
                "  counterexample   edge {:?} lies in {} cliques",
                c.edge, c.cliques
            );
        }
        let _ = writeln!(s, "  clique assembly  {}", yes(w.regular_clique_assembly));
        let cg = &w.clique_graph;
        let mut desc = format!("n={} edges={}", cg.n, cg.edges);
        if let Some(shape) = &cg.shape {
            let _ = write!(desc, ", isomorphic to {shape}");
        }
        if let Some(srg) = &cg.srg {
            let _ = write!(desc, ", srg{}", srg.params);
        }
        let _ = writeln!(s, "  clique graph     {desc}");
        if let Some(spec) = &w.spectrum {
            let _ = writeln!(s, "  spectrum         {} [{:?}]", spec.spectrum, spec.mode);
        }
        if let Some(b) = &w.bounds {
            let _ = writeln!(
                s,
                "  interlacing      [{:.6}, {:.6}] {}",
                b.interlacing.lower,
                b.interlacing.upper,
                if b.interlacing.holds {
                    "ok"
                } else {
                    "VIOLATED"
                }
            );
            let _ = writeln!(
                s,
                "  degree bound     [{:.6}, {:.6}] {}",
                b.degree.lower,
                b.degree.upper,
                if b.degree.holds { "ok" } else { "VIOLATED" }
            );
        }
        if let Some(t) = &w.transfer {
            let _ = writeln!(
                s,
                "  transfer         {} [{:?}]",
                if t.holds { "holds" } else { "FAILS" },
                t.mode
            );
        }
        if let Some(p) = &w.srg_prediction {
            let _ = writeln!(
                s,
                "  srg prediction   {}",
                p.predicted
                    .map_or("not strongly regular".into(), |x| format!("srg{x}"))
            );
        }
    }
    s.trim_end().to_string()
}

fn pretty_prediction(r: &PredictionReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "host        srg{} spectrum {}",
        r.params, r.host_spectrum
    );
    let _ = writeln!(
        s,
        "clique graph omega={} n={} k={}",
        r.omega, r.clique_graph_order, r.clique_graph_degree
    );
    let _ = writeln!(s, "spectrum    {}", r.predicted_spectrum);
    match &r.classification {
        Some(c) => {
            let verdict = c
                .predicted
                .map_or("not strongly regular".into(), |p| format!("srg{p}"));
            let _ = writeln!(s, "verdict     {verdict}");
        }
        None => {
            let _ = writeln!(s, "verdict     boring parameters");
        }
    }
    if let Some(rca) = r.rca_necessary_condition {
        let _ = writeln!(s, "rca bound   k >= mu(omega-1): {}", yes(rca));
    }
    let _ = writeln!(s, "absolute    {}", yes(r.absolute_bound));
    s.trim_end().to_string()
}

fn pretty_verify(r: &VerifyReport) -> String {
    let mut s = format!(
        "{:<28} {}  ({} cases, {} failures)\n",
        r.theorem,
        if r.pass { "PASS" } else { "FAIL" },
        r.cases,
        r.failures
    );
    for c in &r.results {
        let _ = writeln!(s, "  [{}] {}", if c.pass { "ok" } else { "!!" }, c.name);
    }
    if let Some(f) = &r.first_failure {
        let _ = writeln!(
            s,
            "  first failure: {} {}",
            f.name,
            f.detail.as_deref().unwrap_or("")
        );
        if let Some(g6) = &f.graph6 {
            let _ = writeln!(s, "  graph6: {g6}");
        }
    }
    s
}
