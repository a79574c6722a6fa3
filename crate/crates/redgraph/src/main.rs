use std::fs::File;
use std::io::{self, BufRead, BufReader, Cursor, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use redgraph::{census_cached, csv_opt, gnp_scan_parallel, process_lines, read_graph6_lines};
use redgraph_core::dist::{metrics, Dist};
use redgraph_core::enumerate::{
    diameter_lt3_count, kappa, kappa_strong, max_weak_edges, stats_row,
};
use redgraph_core::graph6::to_graph6;
use redgraph_core::mesh::{mesh_distance_query, mesh_graph, rect_mask, MeshKind, MeshSpec};
use redgraph_core::nibble::{
    nibble, NibbleOutcome, NibblePolicy, NibbleSearch, NibbleSearchResult,
};
use redgraph_core::random::{p_diam_le2, p_red_formula, thresholds};
use redgraph_core::redundancy::classify;
use redgraph_core::transforms;
use redgraph_core::Graph;

/// Distance-redundancy toolkit for simple undirected graphs.
///
/// Graphs come in as graph6 lines (stdin or file), results go out as
/// lines, CSV or JSON on stdout; diagnostics go to stderr. Exit codes:
/// 0 success, 1 domain error, 2 usage error.
#[derive(Parser)]
#[command(name = "redgraph", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// graph6 file to read; stdin when omitted
    input: Option<PathBuf>,
    /// inline graph6 string (repeatable; replaces file/stdin input)
    #[arg(long = "g6")]
    g6: Vec<String>,
    /// worker threads for batch inputs (order-preserving)
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl InputArgs {
    fn reader(&self) -> anyhow::Result<Box<dyn BufRead>> {
        if !self.g6.is_empty() {
            return Ok(Box::new(Cursor::new(self.g6.join("\n"))));
        }
        match &self.input {
            Some(path) => Ok(Box::new(BufReader::new(File::open(path)?))),
            None => Ok(Box::new(BufReader::new(io::stdin()))),
        }
    }

    fn graphs(&self) -> anyhow::Result<Vec<Graph>> {
        let mut out = Vec::new();
        for item in read_graph6_lines(self.reader()?) {
            out.push(item?.1);
        }
        Ok(out)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Per-vertex redundancy report for each input graph, as JSON lines.
    #[command(after_help = "Examples:\n  $ redgraph analyze --g6 Dhc\n  $ redgraph analyze graphs.g6 --jobs 4")]
    Analyze(InputArgs),
    /// Classify each input graph as WEAK, STRONG or NEITHER.
    #[command(after_help = "Examples:\n  $ redgraph classify --g6 Dhc\n  $ redgraph classify --g6 D~{")]
    Classify(InputArgs),
    /// Apply a graph surgery and print the result as graph6.
    #[command(after_help = "Examples:\n  $ redgraph transform short --vertex 0 --g6 Dhc\n  $ redgraph transform tensor --g6 Bw --g6 Bw\n  $ redgraph transform strengthen --g6 Dhc")]
    Transform {
        #[command(subcommand)]
        op: TransformOp,
    },
    /// Delete redundant vertices until the graph is weak or empty.
    #[command(after_help = "Examples:\n  $ redgraph nibble --g6 D~{\n  $ redgraph nibble --policy exhaustive --g6 Dhc")]
    Nibble {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = PolicyArg::MinDegree)]
        policy: PolicyArg,
        /// node-expansion budget for the exhaustive policy
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    /// Build a masked square/triangular mesh; print it or answer a
    /// distance query by the nibbling procedure.
    #[command(after_help = "Examples:\n  $ redgraph mesh --kind square --rect 4x4\n  $ redgraph mesh --kind square --rect 6x6 --query 2,2:4,5")]
    Mesh {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// rectangle of cells, HxW
        #[arg(long)]
        rect: String,
        /// cells to remove, as "r,c;r,c;..."
        #[arg(long, default_value = "")]
        holes: String,
        /// distance query "si,sj:ti,tj" between interior lattice points
        #[arg(long)]
        query: Option<String>,
    },
    /// Reproduce the enumeration tables as CSV.
    #[command(name = "enum", after_help = "Examples:\n  $ redgraph enum --n 6 --table stats\n  $ redgraph enum --n 6 --table stats --connected\n  $ redgraph enum --n 6 --table weak-edges")]
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        table: TableArg,
        /// restrict to connected graphs (stats table)
        #[arg(long)]
        connected: bool,
        /// directory for graphs_n{N}.g6 cache files
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Monte-Carlo scan of G(n,p) over a p grid, as CSV.
    #[command(after_help = "Examples:\n  $ redgraph gnp --n 24 --p-from 0.1 --p-to 0.5 --steps 3 --samples 50 --seed 7")]
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p_from: f64,
        #[arg(long)]
        p_to: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        samples: usize,
        /// RNG seed; falls back to REDGRAPH_SEED, then 0
        #[arg(long)]
        seed: Option<u64>,
        /// also count second-order redundant vertices (slow)
        #[arg(long)]
        second_order: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Analytic curves: per-vertex redundancy estimate, diameter<=2
    /// probability, and the threshold ladder, as CSV.
    #[command(after_help = "Examples:\n  $ redgraph formulas --n 100 --steps 5\n  $ redgraph formulas --n 1000 --thresholds")]
    Formulas {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 60)]
        steps: usize,
        /// print the threshold ladder instead of the curves
        #[arg(long)]
        thresholds: bool,
    },
    /// Count graphs with complete components (and the strong variant).
    #[command(after_help = "Examples:\n  $ redgraph kappa --n 11\n  $ redgraph kappa --n 8 --strong")]
    Kappa {
        #[arg(long)]
        n: usize,
        /// strong-graph variant (substitutes the diameter<3 count)
        #[arg(long)]
        strong: bool,
    },
}

#[derive(Subcommand)]
enum TransformOp {
    /// clique-complete the neighborhood of --vertex, then delete it
    Short {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        vertex: usize,
    },
    /// like short, but add only a minimal edge set leaving no pendants
    PartialShort {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        vertex: usize,
    },
    /// tensor (categorical) product of two input graphs
    Tensor {
        #[command(flatten)]
        input: InputArgs,
    },
    /// glue two graphs along a vertex correspondence "a:b,a:b,..."
    Merge {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        map: String,
    },
    /// duplicate --vertex as a weak or strong twin
    SplitTwin {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        vertex: usize,
        #[arg(long, value_enum, default_value_t = TwinArg::Weak)]
        twin: TwinArg,
    },
    /// add k mutually non-adjacent vertices adjacent to everything
    DominatingTwins {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// weak-split every non-redundant vertex, yielding a strong graph
    Strengthen {
        #[command(flatten)]
        input: InputArgs,
    },
    /// attach a star over the redundant vertices, yielding a weak graph
    SpiderWeaken {
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    FirstIndex,
    MinDegree,
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Square,
    Triangular,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Stats,
    Kappa,
    WeakEdges,
}

#[derive(Clone, Copy, ValueEnum)]
enum TwinArg {
    Weak,
    Strong,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("redgraph: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Analyze(input) => {
            process_lines(input.reader()?, &mut out, input.jobs, |g| {
                let report = classify(g);
                let m = metrics(g);
                serde_json::json!({
                    "graph": to_graph6(g),
                    "metrics": {
                        "connected": m.connected,
                        "diameter": match m.diameter {
                            Dist::Finite(d) => serde_json::json!(d),
                            Dist::Unreachable => serde_json::Value::Null,
                        },
                        "girth": m.girth,
                    },
                    "report": report,
                })
                .to_string()
            })?;
        }
        Command::Classify(input) => {
            process_lines(input.reader()?, &mut out, input.jobs, |g| {
                classify(g).class.to_string()
            })?;
        }
        Command::Transform { op } => run_transform(op, &mut out)?,
        Command::Nibble { input, policy, budget } => {
            let core_policy = match policy {
                PolicyArg::FirstIndex => Some(NibblePolicy::FirstIndex),
                PolicyArg::MinDegree => Some(NibblePolicy::MinDegreeThenIndex),
                PolicyArg::Exhaustive => None,
            };
            let mut search = NibbleSearch { memo: Default::default(), budget };
            for item in read_graph6_lines(input.reader()?) {
                let (_, g) = item?;
                let line = match core_policy {
                    Some(p) => {
                        let t = nibble(&g, p);
                        serde_json::json!({
                            "input": to_graph6(&g),
                            "deletions": t.deletions,
                            "final": to_graph6(&t.final_graph),
                            "final_class": match t.final_class {
                                NibbleOutcome::Empty => "EMPTY",
                                NibbleOutcome::Weak => "WEAK",
                            },
                            "steps_isometric": t.steps_isometric,
                        })
                    }
                    None => match search.erasable(&g) {
                        NibbleSearchResult::Erasable(order) => serde_json::json!({
                            "input": to_graph6(&g), "result": "ERASABLE", "order": order,
                        }),
                        NibbleSearchResult::Stuck => serde_json::json!({
                            "input": to_graph6(&g), "result": "STUCK",
                        }),
                        NibbleSearchResult::Undecided => serde_json::json!({
                            "input": to_graph6(&g), "result": "UNDECIDED",
                        }),
                    },
                };
                writeln!(out, "{line}")?;
            }
        }
        Command::Mesh { kind, rect, holes, query } => {
            let kind = match kind {
                KindArg::Square => MeshKind::Square,
                KindArg::Triangular => MeshKind::Triangular,
            };
            let (h, w) = rect
                .split_once('x')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or_else(|| anyhow::anyhow!("--rect wants HxW, got {rect:?}"))?;
            let mut spec: MeshSpec = rect_mask(kind, h, w);
            for hole in holes.split(';').filter(|s| !s.is_empty()) {
                let cell = parse_point(hole)?;
                if !spec.cells.remove(&cell) {
                    anyhow::bail!("hole {hole:?} is not a cell of the {h}x{w} mask");
                }
            }
            match query {
                None => {
                    let mesh = mesh_graph(&spec).map_err(|e| anyhow::anyhow!("{e}"))?;
                    writeln!(out, "{}", to_graph6(&mesh.graph))?;
                }
                Some(q) => {
                    let (s, t) = q
                        .split_once(':')
                        .ok_or_else(|| anyhow::anyhow!("--query wants si,sj:ti,tj"))?;
                    let d = mesh_distance_query(&spec, parse_point(s)?, parse_point(t)?)
                        .map_err(|e| anyhow::anyhow!("{e}"))?;
                    match d {
                        Dist::Finite(d) => writeln!(out, "{d}")?,
                        Dist::Unreachable => writeln!(out, "unreachable")?,
                    }
                }
            }
        }
        Command::Enumerate { n, table, connected, cache_dir } => {
            run_enum(n, table, connected, cache_dir.as_deref(), &mut out)?
        }
        Command::Gnp { n, p_from, p_to, steps, samples, seed, second_order, jobs } => {
            let seed = seed.unwrap_or_else(env_seed);
            let grid: Vec<f64> = (0..steps.max(1))
                .map(|i| {
                    if steps <= 1 {
                        p_from
                    } else {
                        p_from + (p_to - p_from) * i as f64 / (steps - 1) as f64
                    }
                })
                .collect();
            writeln!(
                out,
                "n,p,samples,connected_samples,p_connected,mean_diameter,\
                 mean_redundant_count,mean_2nd_order_redundant_count,p_weak,p_strong,\
                 p_diam3_half_redundant"
            )?;
            for r in gnp_scan_parallel(n, &grid, samples, seed, second_order, jobs) {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    r.n,
                    r.p,
                    r.samples,
                    r.connected_samples,
                    r.p_connected,
                    r.mean_diameter,
                    r.mean_redundant_count,
                    csv_opt(r.mean_2nd_order_redundant_count),
                    r.p_weak,
                    r.p_strong,
                    r.p_diam3_half_redundant
                )?;
            }
        }
        Command::Formulas { n, steps, thresholds: want_thresholds } => {
            if want_thresholds {
                let t = thresholds(n);
                writeln!(out, "n,l,connected_p,weak_p,weak_end_p,diam2_p,strong_p")?;
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    t.n, t.l, t.connected_p, t.weak_p, t.weak_end_p, t.diam2_p, t.strong_p
                )?;
            } else {
                writeln!(out, "p,p_red,p_diam_le2")?;
                for i in 1..=steps {
                    let p = i as f64 / (steps + 1) as f64;
                    writeln!(out, "{p},{},{}", p_red_formula(n, p), p_diam_le2(n, p))?;
                }
            }
        }
        Command::Kappa { n, strong } => {
            if strong {
                anyhow::ensure!(n >= 1 && n <= 10, "strong variant needs enumeration at n-1 <= 9");
                writeln!(out, "{}", kappa_strong(n, diameter_lt3_count(n - 1)))?;
            } else {
                writeln!(out, "{}", kappa(n))?;
            }
        }
    }
    Ok(())
}

fn env_seed() -> u64 {
    std::env::var("REDGRAPH_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0)
}

fn parse_point(s: &str) -> anyhow::Result<(i64, i64)> {
    s.split_once(',')
        .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
        .ok_or_else(|| anyhow::anyhow!("expected \"i,j\", got {s:?}"))
}

fn one_graph(input: &InputArgs) -> anyhow::Result<Graph> {
    let graphs = input.graphs()?;
    anyhow::ensure!(graphs.len() == 1, "expected exactly one input graph, got {}", graphs.len());
    Ok(graphs.into_iter().next().unwrap())
}

fn two_graphs(input: &InputArgs) -> anyhow::Result<(Graph, Graph)> {
    let graphs = input.graphs()?;
    anyhow::ensure!(graphs.len() == 2, "expected exactly two input graphs, got {}", graphs.len());
    let mut it = graphs.into_iter();
    Ok((it.next().unwrap(), it.next().unwrap()))
}

fn run_transform(op: TransformOp, out: &mut impl Write) -> anyhow::Result<()> {
    let result = match op {
        TransformOp::Short { input, vertex } => {
            transforms::short(&one_graph(&input)?, vertex).map_err(|e| anyhow::anyhow!("{e}"))?
        }
        TransformOp::PartialShort { input, vertex } => {
            transforms::partial_short(&one_graph(&input)?, vertex)
                .map_err(|e| anyhow::anyhow!("{e}"))?
        }
        TransformOp::Tensor { input } => {
            let (a, b) = two_graphs(&input)?;
            transforms::tensor_product(&a, &b).map_err(|e| anyhow::anyhow!("{e}"))?
        }
        TransformOp::Merge { input, map } => {
            let (a, b) = two_graphs(&input)?;
            let mut correspondence = Vec::new();
            for pair in map.split(',').filter(|s| !s.is_empty()) {
                let (x, y) = pair
                    .split_once(':')
                    .ok_or_else(|| anyhow::anyhow!("--map wants a:b,a:b, got {pair:?}"))?;
                correspondence.push((x.trim().parse()?, y.trim().parse()?));
            }
            transforms::merge(&a, &b, &correspondence).map_err(|e| anyhow::anyhow!("{e}"))?
        }
        TransformOp::SplitTwin { input, vertex, twin } => {
            let kind = match twin {
                TwinArg::Weak => transforms::SplitKind::Weak,
                TwinArg::Strong => transforms::SplitKind::Strong,
            };
            transforms::split_twin(&one_graph(&input)?, vertex, kind)
                .map_err(|e| anyhow::anyhow!("{e}"))?
        }
        TransformOp::DominatingTwins { input, k } => {
            anyhow::ensure!(k >= 2, "at least two dominating twins required");
            transforms::add_dominating_twins(&one_graph(&input)?, k)
                .map_err(|e| anyhow::anyhow!("{e}"))?
        }
        TransformOp::Strengthen { input } => {
            transforms::strengthen_by_twin_split(&one_graph(&input)?)
        }
        TransformOp::SpiderWeaken { input } => transforms::spider_weaken(&one_graph(&input)?)
            .map_err(|e| anyhow::anyhow!("{e}"))?,
    };
    writeln!(out, "{}", to_graph6(&result))?;
    Ok(())
}

fn run_enum(
    n: usize,
    table: TableArg,
    connected: bool,
    cache_dir: Option<&std::path::Path>,
    out: &mut impl Write,
) -> anyhow::Result<()> {
    match table {
        TableArg::Stats => {
            writeln!(
                out,
                "n,graphs,no_surrounded,all_surrounded,no_redundant,all_redundant,\
                 redundant_not_surrounded,redundant_not_surrounded_diam_gt2,connected_only"
            )?;
            for m in 1..=n {
                // the cache only needs priming once; stats_row regenerates
                if let Some(dir) = cache_dir {
                    census_cached(m, Some(dir))?;
                }
                let r = stats_row(m, connected).map_err(|e| anyhow::anyhow!("{e}"))?;
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    r.n,
                    r.graphs,
                    r.no_surrounded,
                    r.all_surrounded,
                    r.no_redundant,
                    r.all_redundant,
                    r.redundant_not_surrounded,
                    r.redundant_not_surrounded_diam_gt2,
                    r.connected_only
                )?;
            }
        }
        TableArg::Kappa => {
            writeln!(out, "n,kappa,kappa_strong")?;
            for m in 1..=n {
                let strong = if (1..=10).contains(&m) {
                    kappa_strong(m, diameter_lt3_count(m - 1)).to_string()
                } else {
                    String::new()
                };
                writeln!(out, "{m},{},{strong}", kappa(m))?;
            }
        }
        TableArg::WeakEdges => {
            writeln!(out, "n,max_weak_edges,f")?;
            for m in 1..=n {
                let (max, f) = max_weak_edges(m).map_err(|e| anyhow::anyhow!("{e}"))?;
                writeln!(out, "{m},{max},{f}")?;
            }
        }
    }
    Ok(())
}
