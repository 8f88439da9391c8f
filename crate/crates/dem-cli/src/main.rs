//! `demtool` — generate named graph families, compute distance-edge
//! monitoring numbers and sets, probe deletions, and rerun the reproduction
//! suites.
//!
//! Exit codes: 0 success / all cases pass, 1 verification failure,
//! 2 usage or format error, 3 search budget exceeded.

use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dem_cli::report::ReportDocument;
use dem_cli::reproduce::{run_suite, RunOptions, Suite};
use dem_core::{
    dem_number_with, generate, greedy_dem, is_dem_set, monitored_edges, parse_graph,
    restrict_dem, revalidate_after_edge_deletion, scan, vertex_names, write_graph, DemResult,
    Error, FamilySpec, Graph, Method, ScanMode, SearchConfig, VertexId,
};

#[derive(Parser)]
#[command(
    name = "demtool",
    version,
    about = "Distance-edge monitoring: solvers, graph families, perturbation scans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph family and print it in the plain-text format.
    Gen {
        /// Family spec, e.g. `cycle:7`, `kite:3,8`, `conical:2,9`, `g8_star`.
        #[arg(value_parser = FamilySpec::from_str)]
        family: FamilySpec,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Prepend `# vertex i: name` comment lines.
        #[arg(long)]
        names: bool,
    },
    /// Compute the monitoring number of a graph.
    Dem {
        #[command(flatten)]
        input: Input,
        /// Also print the lexicographically smallest minimum monitoring set.
        #[arg(long)]
        basis: bool,
        /// Use the greedy upper-bound heuristic instead of the exact solver.
        #[arg(long)]
        greedy: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// List the edges a single vertex monitors, one `u v` line each.
    Em {
        #[command(flatten)]
        input: Input,
        /// The probe vertex.
        #[arg(short = 'x', long)]
        vertex: VertexId,
    },
    /// Check whether a vertex set monitors every edge.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        monitors: Monitors,
    },
    /// Monitoring number restricted to a subgraph's edges.
    Restrict {
        #[command(flatten)]
        input: Input,
        /// File of `u v` lines naming the edges that must be monitored.
        #[arg(long, value_name = "FILE")]
        sub_edges: PathBuf,
        #[command(flatten)]
        budget: Budget,
    },
    /// Recompute the monitoring number after each single deletion.
    Perturb {
        #[command(flatten)]
        input: Input,
        /// Scan edge deletions.
        #[arg(long, conflicts_with = "vertices")]
        edges: bool,
        /// Scan vertex deletions.
        #[arg(long)]
        vertices: bool,
        /// Monitor set to revalidate after each edge deletion.
        #[arg(short = 'M', long, value_parser = parse_vertex_list)]
        monitors: Option<VertexList>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        #[command(flatten)]
        budget: Budget,
    },
    /// Check whether a monitor set survives one edge deletion.
    Revalidate {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        monitors: Monitors,
        /// The edge to delete, as `u,v`.
        #[arg(short, long, value_parser = parse_edge)]
        edge: (VertexId, VertexId),
    },
    /// Rerun a reproduction suite and report every case.
    Reproduce {
        /// One of: families, perturbation-edge, perturbation-vertex,
        /// restrict, table1, exhaustive-small, all.
        #[arg(long, value_parser = Suite::from_str)]
        suite: Suite,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        /// Record wall-clock per case (makes output run-dependent).
        #[arg(long)]
        timings: bool,
        /// Cap internal parallelism; the output does not depend on it.
        #[arg(long)]
        threads: Option<usize>,
        #[command(flatten)]
        budget: Budget,
    },
}

#[derive(Args)]
struct Input {
    /// Graph file in the plain-text format; stdin when omitted.
    #[arg(short, long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Monitors {
    /// Comma-separated vertex indices, e.g. `-M 0,3,7`.
    #[arg(short = 'M', long, value_parser = parse_vertex_list)]
    monitors: VertexList,
}

#[derive(Args)]
struct Budget {
    /// Cap on complete-subset coverage tests in the exact solver.
    #[arg(long)]
    budget: Option<u64>,
}

impl Budget {
    fn config(&self) -> SearchConfig {
        self.budget.map_or_else(SearchConfig::default, SearchConfig::with_budget)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Debug)]
struct VertexList(Vec<VertexId>);

fn parse_vertex_list(s: &str) -> Result<VertexList, String> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<VertexId>()
                .map_err(|_| format!("`{tok}` is not a vertex index"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(VertexList)
}

fn parse_edge(s: &str) -> Result<(VertexId, VertexId), String> {
    match parse_vertex_list(s)?.0[..] {
        [u, v] => Ok((u, v)),
        _ => Err(format!("`{s}` is not an edge; expected `u,v`")),
    }
}

/// A failure with the exit code it maps to.
struct Failure {
    message: String,
    code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::BudgetExceeded { .. } => 3,
            _ => 2,
        };
        Failure { message: e.to_string(), code }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Gen { family, output, names } => {
            let g = generate(&family)?;
            let mut text = String::new();
            if names {
                for (i, name) in vertex_names(&family)?.iter().enumerate() {
                    writeln!(text, "# vertex {i}: {name}").expect("string write");
                }
            }
            text.push_str(&write_graph(&g));
            match output {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| file_failure(&path, e))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dem { input, basis, greedy, budget } => {
            let g = input.load()?;
            let res =
                if greedy { greedy_dem(&g) } else { dem_number_with(&g, &budget.config())? };
            print!("{}", describe_result(&res, basis));
            Ok(ExitCode::SUCCESS)
        }
        Command::Em { input, vertex } => {
            let g = input.load()?;
            let em = monitored_edges(&g, vertex)?;
            for (u, v) in em.to_pairs(&g) {
                println!("{u} {v}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { input, monitors } => {
            let g = input.load()?;
            let coverage = is_dem_set(&g, &monitors.monitors.0)?;
            println!("verdict: {}", coverage.verdict);
            for (u, v) in coverage.uncovered.to_pairs(&g) {
                println!("uncovered: {u} {v}");
            }
            Ok(if coverage.verdict { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Restrict { input, sub_edges, budget } => {
            let g = input.load()?;
            let text = fs::read_to_string(&sub_edges)
                .map_err(|e| file_failure(&sub_edges, e))?;
            let pairs = parse_edge_lines(&text)?;
            let res = restrict_dem(&g, &pairs, &budget.config())?;
            print!("{}", describe_result(&res, true));
            Ok(ExitCode::SUCCESS)
        }
        Command::Perturb { input, edges, vertices, monitors, format, budget } => {
            let mode = match (edges, vertices) {
                (true, false) => ScanMode::Edges,
                (false, true) => ScanMode::Vertices,
                _ => {
                    return Err(Failure {
                        message: "pass exactly one of --edges or --vertices".into(),
                        code: 2,
                    })
                }
            };
            if monitors.is_some() && mode == ScanMode::Vertices {
                return Err(Failure {
                    message: "-M only applies to edge scans: vertex deletion relabels \
                              the survivors, so the set would be ambiguous"
                        .into(),
                    code: 2,
                });
            }
            let g = input.load()?;
            let report =
                scan(&g, mode, monitors.as_ref().map(|m| m.0.as_slice()), &budget.config())?;
            match format {
                Format::Tsv => print!("{}", report.to_tsv()),
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Revalidate { input, monitors, edge: (u, v) } => {
            let g = input.load()?;
            let e = g.edge_id(u, v).ok_or(Error::MissingEdge(u, v))?;
            let reval = revalidate_after_edge_deletion(&g, &monitors.monitors.0, e)?;
            println!("verdict: {}", reval.verdict);
            for (a, b) in reval.uncovered {
                println!("uncovered: {a} {b}");
            }
            Ok(if reval.verdict { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Reproduce { suite, format, timings, threads, budget } => {
            let opts = RunOptions {
                budget: budget.config().budget,
                timings,
            };
            let doc = match threads {
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .map_err(|e| Failure { message: e.to_string(), code: 2 })?
                    .install(|| run_suite(suite, &opts))?,
                None => run_suite(suite, &opts)?,
            };
            print_document(&doc, format);
            Ok(if doc.pass { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

impl Input {
    fn load(&self) -> Result<Graph, Failure> {
        let text = match &self.input {
            Some(path) => fs::read_to_string(path).map_err(|e| file_failure(path, e))?,
            None => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Failure { message: format!("stdin: {e}"), code: 2 })?;
                buf
            }
        };
        Ok(parse_graph(&text)?)
    }
}

fn file_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { message: format!("{}: {e}", path.display()), code: 2 }
}

fn describe_result(res: &DemResult, with_basis: bool) -> String {
    let method = match res.method {
        Method::Exact => "exact",
        Method::Greedy => "greedy",
    };
    let mut out = format!(
        "value: {}\nmethod: {method}\nsubsets examined: {}\n",
        res.value, res.subsets_examined
    );
    if with_basis {
        let basis: Vec<String> = res.basis.iter().map(usize::to_string).collect();
        out.push_str(&format!("basis: {}\n", basis.join(" ")));
    }
    out
}

/// Parses `u v` lines (comments and blanks allowed) into endpoint pairs.
fn parse_edge_lines(text: &str) -> Result<Vec<(VertexId, VertexId)>, Failure> {
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = |reason: String| Failure { message: format!("line {}: {reason}", i + 1), code: 2 };
        match fields[..] {
            [u, v] => {
                let u = u.parse().map_err(|_| bad(format!("`{u}` is not a vertex index")))?;
                let v = v.parse().map_err(|_| bad(format!("`{v}` is not a vertex index")))?;
                pairs.push((u, v));
            }
            _ => return Err(bad("expected exactly `u v`".into())),
        }
    }
    Ok(pairs)
}

fn print_document(doc: &ReportDocument, format: Format) {
    match format {
        Format::Tsv => print!("{}", doc.to_tsv()),
        Format::Json => print!("{}", doc.to_json()),
    }
}
