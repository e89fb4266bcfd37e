//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a law is violated or a search
//! disagrees with the closed form, 2 on usage, input or capacity errors.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cliques::clique_profile;
use crate::clusters::{analyze_cluster, classify, decompose_all, ClusterReport};
use crate::codec::{from_edge_list, parse_autodetect, to_graph6};
use crate::colex::{
    build_colex, colex_edges, decompose, extremal_family, g as g_value, Decomposition,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::laws::{run_suite, Grid};
use crate::moves::{colex_fold, fold, improve, partial_fold};
use crate::search::{f_max_with, Catalog, SearchReport, SearchSpec};

#[derive(Debug, Parser)]
#[command(
    name = "cliquebound",
    version,
    about = "Clique counts of graphs with m edges and maximum degree at most r"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Colex graph C(N), or the extremal graphs for (m, r).
    Colex(ColexArgs),
    /// Clique profile of a graph.
    Count(CountArgs),
    /// Clusters of a graph with their red/blue decomposition.
    Clusters(GraphArgs),
    /// Apply one local move at a cluster.
    Move(MoveArgs),
    /// Find a local move that increases the clique count.
    Improve(GraphArgs),
    /// Exhaustive extremal search over G(m, r).
    Search(SearchArgs),
    /// Run the law suite over the verification grid.
    Laws(LawsArgs),
}

#[derive(Debug, Args)]
struct ColexArgs {
    /// Number of edges of the colex graph.
    #[arg(long, conflicts_with_all = ["m", "r"])]
    edges: Option<usize>,
    /// Print the edges in colex order instead of JSON.
    #[arg(long, requires = "edges")]
    edgelist: bool,
    #[arg(long, requires = "r")]
    m: Option<usize>,
    #[arg(long, requires = "m")]
    r: Option<usize>,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// graph6 or edge-list file ("-" for stdin); the format is detected from
    /// the first byte. Without it stdin is read.
    #[arg(long)]
    input: Option<String>,
    /// Read an edge list from stdin.
    #[arg(long, conflicts_with = "input")]
    edgelist_stdin: bool,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Reject graphs with a vertex of degree above this bound.
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Debug, Args)]
struct GraphArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    r: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Fold,
    ColexFold,
    PartialFold,
}

#[derive(Debug, Args)]
struct MoveArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Cluster vertices, 1-based and comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    cluster: Vec<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Graph6,
    Tsv,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    r: usize,
    /// Maximize k_t instead of the total clique count.
    #[arg(long)]
    t: Option<usize>,
    /// Also search every edge count from this value up to --m.
    #[arg(long)]
    m_min: Option<usize>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    connected_only: bool,
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct LawsArgs {
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = 4)]
    r_max: usize,
    #[arg(long, default_value_t = 12)]
    m_max: usize,
    /// Largest red-graph order for the fixed-loss laws (at most 7).
    #[arg(long, default_value_t = 7)]
    s_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

/// Runs the command line `argv` (program name first), writing results to
/// `out` and diagnostics to stderr. Returns the exit status.
pub fn run<W: Write>(argv: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    match dispatch(cli.verb, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch<W: Write>(verb: Verb, out: &mut W) -> Result<i32> {
    match verb {
        Verb::Colex(a) => colex(a, out),
        Verb::Count(a) => {
            let g = read_graph(&a.input)?;
            if let Some(r) = a.r {
                check_degree(&g, r)?;
            }
            emit_json(out, &clique_profile(&g))
        }
        Verb::Clusters(a) => {
            let g = load(&a)?;
            let reports: Vec<ClusterReport> = decompose_all(&g, a.r)
                .iter()
                .map(|cd| ClusterReport::new(cd, classify(&g, cd)))
                .collect();
            emit_json(out, &reports)
        }
        Verb::Move(a) => {
            let g = load(&a.graph)?;
            let mut cluster = VertexSet::EMPTY;
            for &v in &a.cluster {
                if v == 0 || v > g.vertex_count() {
                    return Err(Error::Domain(format!(
                        "cluster vertex {v} is not in the graph"
                    )));
                }
                cluster.insert(v - 1);
            }
            let cd = analyze_cluster(&g, a.graph.r, cluster)?;
            let outcome = match a.kind {
                KindArg::Fold => fold(&g, &cd),
                KindArg::ColexFold => colex_fold(&g, &cd)?,
                KindArg::PartialFold => partial_fold(&g, &cd)?,
            };
            emit_json(out, &outcome.report())
        }
        Verb::Improve(a) => {
            let g = load(&a)?;
            let report = match improve(&g, a.r)? {
                Some(imp) => ImproveReport {
                    improved: true,
                    kind: Some(imp.kind.name()),
                    cluster: imp.cluster.iter().map(|v| v + 1).collect(),
                    k_before: imp.k_before,
                    k_after: imp.k_after,
                    result_graph6: Some(to_graph6(&imp.graph)),
                },
                None => {
                    let k = crate::cliques::k_total(&g);
                    ImproveReport {
                        improved: false,
                        kind: None,
                        cluster: Vec::new(),
                        k_before: k,
                        k_after: k,
                        result_graph6: None,
                    }
                }
            };
            emit_json(out, &report)
        }
        Verb::Search(a) => search(a, out),
        Verb::Laws(a) => laws(a, out),
    }
}

#[derive(Serialize)]
struct ImproveReport {
    improved: bool,
    kind: Option<&'static str>,
    cluster: Vec<usize>,
    k_before: u64,
    k_after: u64,
    result_graph6: Option<String>,
}

#[derive(Serialize)]
struct ColexReport {
    m: usize,
    graph6: String,
    profile: crate::cliques::CliqueProfile,
}

#[derive(Serialize)]
struct Part {
    graph6: String,
    copies: usize,
}

#[derive(Serialize)]
struct ExtremalReport {
    decomposition: Decomposition,
    g: u64,
    /// Each extremal graph as its distinct parts with multiplicities.
    extremal: Vec<Vec<Part>>,
}

fn colex<W: Write>(a: ColexArgs, out: &mut W) -> Result<i32> {
    match (a.edges, a.m, a.r) {
        (Some(n), _, _) => {
            let g = build_colex(n)?;
            if a.edgelist {
                let text: Vec<String> = colex_edges(n)
                    .iter()
                    .map(|e| format!("{} {}", e.u + 1, e.v + 1))
                    .collect();
                for line in text {
                    writeln!(out, "{line}")?;
                }
                Ok(0)
            } else {
                emit_json(
                    out,
                    &ColexReport {
                        m: n,
                        graph6: to_graph6(&g),
                        profile: clique_profile(&g),
                    },
                )
            }
        }
        (None, Some(m), Some(r)) => {
            if r == 0 {
                return Err(Error::Domain("r must be at least 1".into()));
            }
            let extremal = extremal_family(m, r)
                .iter()
                .map(|a| {
                    a.parts()
                        .iter()
                        .map(|(g, c)| Part {
                            graph6: to_graph6(g),
                            copies: *c,
                        })
                        .collect()
                })
                .collect();
            emit_json(
                out,
                &ExtremalReport {
                    decomposition: decompose(m, r),
                    g: g_value(m, r),
                    extremal,
                },
            )
        }
        _ => Err(Error::Domain(
            "colex needs --edges N or both --m and --r".into(),
        )),
    }
}

fn search<W: Write>(a: SearchArgs, out: &mut W) -> Result<i32> {
    let m_min = a.m_min.unwrap_or(a.m);
    if m_min == 0 || m_min > a.m {
        return Err(Error::Domain(format!(
            "need 1 ≤ --m-min ≤ --m, got {m_min}"
        )));
    }
    let specs: Vec<SearchSpec> = (m_min..=a.m)
        .map(|m| {
            SearchSpec::new(m, a.r)
                .threads(a.jobs)
                .t_filter(a.t)
                .connected_only(a.connected_only)
                .force(a.force)
        })
        .collect();
    // Validate every spec (guardrail included) before the catalog is built.
    for spec in &specs {
        crate::search::check_spec(spec)?;
    }
    let catalog = Catalog::build(a.m, a.r, a.jobs)?;
    let reports: Vec<SearchReport> = specs.iter().map(|s| f_max_with(&catalog, s)).collect();
    let agrees = reports.iter().all(|r| r.agrees);
    match a.format {
        Format::Json if reports.len() == 1 => {
            emit_json(out, &reports[0])?;
        }
        Format::Json => {
            emit_json(out, &reports)?;
        }
        Format::Graph6 => {
            for rep in &reports {
                for line in &rep.argmax {
                    writeln!(out, "{line}")?;
                }
            }
        }
        Format::Tsv => {
            writeln!(out, "m\tr\tt\tf\tg\tagrees\tgraphs\tmaximizers")?;
            for rep in &reports {
                let t = rep.t.map(|t| t.to_string()).unwrap_or_else(|| "-".into());
                writeln!(
                    out,
                    "{}\t{}\t{t}\t{}\t{}\t{}\t{}\t{}",
                    rep.m,
                    rep.r,
                    rep.f,
                    rep.g,
                    rep.agrees,
                    rep.graphs_enumerated,
                    rep.argmax.len()
                )?;
            }
        }
    }
    Ok(if agrees { 0 } else { 1 })
}

fn laws<W: Write>(a: LawsArgs, out: &mut W) -> Result<i32> {
    let grid = Grid {
        r_max: a.r_max,
        m_max: a.m_max,
        s_max: a.s_max,
        threads: a.jobs,
        ..Grid::default()
    };
    let reports = run_suite(&grid)?;
    match a.format {
        Format::Json => {
            emit_json(out, &reports)?;
        }
        Format::Tsv => {
            writeln!(out, "law\tchecked\tvacuous\tviolations")?;
            for rep in &reports {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    rep.law,
                    rep.instances_checked,
                    rep.vacuous,
                    rep.violations.len()
                )?;
            }
        }
        Format::Graph6 => {
            for v in reports.iter().flat_map(|r| &r.violations) {
                if !v.graph.is_empty() {
                    writeln!(out, "{}", v.graph)?;
                }
            }
        }
    }
    Ok(if reports.iter().all(|r| r.passed()) {
        0
    } else {
        1
    })
}

fn emit_json<W: Write, T: Serialize>(out: &mut W, value: &T) -> Result<i32> {
    let text = serde_json::to_string(value).map_err(|e| Error::Parse(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(0)
}

fn read_graph(args: &InputArgs) -> Result<Graph> {
    let mut text = String::new();
    match args.input.as_deref() {
        Some("-") | None => {
            std::io::stdin().read_to_string(&mut text)?;
        }
        Some(path) => text = std::fs::read_to_string(path)?,
    }
    if args.edgelist_stdin {
        from_edge_list(&text)
    } else {
        parse_autodetect(&text)
    }
}

fn check_degree(g: &Graph, r: usize) -> Result<()> {
    match g.degree_violation(r) {
        Some(v) => Err(Error::Domain(format!(
            "vertex {} has degree {} > r={r}",
            v + 1,
            g.degree(v)
        ))),
        None => Ok(()),
    }
}

fn load(a: &GraphArgs) -> Result<Graph> {
    let g = read_graph(&a.input)?;
    check_degree(&g, a.r)?;
    Ok(g)
}
