use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use treeconn::gen::{gen, GenKind};
use treeconn::oracle::toughness;
use treeconn::parity::{parity_forest, ParitySpec};
use treeconn::ratio::{self, Rational};
use treeconn::suites::{default_seeds, run_suite, suite_id, SUITE_COUNT, SUITE_NAMES};
use treeconn::{
    bounded_m_subgraph, bounded_spanning_tree, derive_spec, f_trail, f_walk, m_components, omega_m, pack_trees,
    DegreeSpec, ForestMode, Multigraph, Outcome, PackResult, SpanningSubgraph, SpecKind,
};

#[derive(Parser)]
#[command(name = "treeconn", version, about = "Tree packings, degree-bounded subgraphs, parity forests and spanning walks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Plain,
    ForestException,
}

impl From<Mode> for ForestMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Plain => ForestMode::Plain,
            Mode::ForestException => ForestMode::ForestException,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Component counts, Ω_m for m = 1..M, m-components and toughness.
    Analyze {
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        m: usize,
    },
    /// m edge-disjoint spanning trees or a deficient partition.
    Pack {
        graph: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Spanning tree under degree bounds, or a violating set.
    BoundedTree {
        graph: PathBuf,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// m-tree-connected spanning subgraph under degree bounds, or a violating set.
    BoundedSubgraph {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Spanning forest with degree caps and parities.
    ParityForest {
        graph: PathBuf,
        /// Caps: one integer, a comma list, or a JSON array/file.
        #[arg(long)]
        f: String,
        /// Vertices of odd degree; without it parities follow f.
        #[arg(long = "Q")]
        q: Option<String>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Spanning closed walk visiting each vertex at most f times.
    FWalk {
        graph: PathBuf,
        #[arg(long)]
        f: String,
        /// Edge ids of a matching the walk must traverse.
        #[arg(long)]
        matching: Option<String>,
    },
    /// Spanning closed trail visiting each vertex at most f times.
    FTrail {
        graph: PathBuf,
        #[arg(long)]
        f: String,
        #[arg(long, default_value = "0")]
        lambda: String,
    },
    /// Runs an acceptance suite; exit code 0 iff every selected suite passes.
    Verify {
        /// Suite name, number, or "all".
        #[arg(long)]
        suite: String,
        /// Seed range "a..b"; defaults to the suite's own range.
        #[arg(long)]
        seeds: Option<String>,
    },
    /// Seeded instance of a graph class, verified before output.
    Gen {
        /// k-edge-connected, k-tree-connected, doubled, circulant, complete,
        /// complete-bipartite, claw-free or connected.
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long, default_value_t = 3)]
        a: usize,
        #[arg(long, default_value_t = 3)]
        b: usize,
        /// Edge probability in percent.
        #[arg(long, default_value_t = 40)]
        p: u32,
        /// Circulant offsets, comma separated.
        #[arg(long, default_value = "1")]
        offsets: String,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct BoundArgs {
    /// η: a rational "p/q" for every vertex, or a JSON array/file of rationals.
    #[arg(long)]
    eta: Option<String>,
    #[arg(long, default_value = "0")]
    lambda: String,
    /// Edge ids of the forest to keep.
    #[arg(long)]
    forest: Option<String>,
    #[arg(long, value_enum, default_value = "plain")]
    mode: Mode,
    /// Vertices carrying a bound; defaults to all.
    #[arg(long)]
    x: Option<String>,
    /// Derive η and λ from a connectivity class, e.g. '{"kind":"k-edge-connected","k":3,"m":1}'.
    #[arg(long, conflicts_with_all = ["eta", "x"])]
    derive: Option<String>,
}

/// Inline JSON when the text looks like JSON, otherwise a file path.
fn load_json(arg: &str) -> anyhow::Result<Value> {
    let t = arg.trim();
    let text = if t.starts_with('[') || t.starts_with('{') {
        t.to_string()
    } else {
        std::fs::read_to_string(t).with_context(|| format!("reading {t}"))?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing JSON from {t}"))
}

fn read_graph(path: &Path) -> anyhow::Result<Multigraph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(Multigraph::from_json_str(&text)?)
}

fn int_list(arg: &str) -> anyhow::Result<Vec<i64>> {
    let t = arg.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    if t.starts_with('[') || Path::new(t).is_file() {
        let v = load_json(t)?;
        let v = v.get("edges").cloned().unwrap_or(v);
        return Ok(serde_json::from_value(v)?);
    }
    t.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| anyhow!("not an integer: {x:?}"))).collect()
}

fn index_list(arg: &str) -> anyhow::Result<Vec<usize>> {
    int_list(arg)?.into_iter().map(|x| usize::try_from(x).map_err(|_| anyhow!("negative index {x}"))).collect()
}

/// One integer for every vertex, or an explicit list of length n.
fn per_vertex(arg: &str, n: usize) -> anyhow::Result<Vec<i64>> {
    let v = int_list(arg)?;
    match v.len() {
        1 => Ok(vec![v[0]; n]),
        len if len == n => Ok(v),
        len => bail!("expected 1 or {n} values, got {len}"),
    }
}

fn rational_list(arg: &str, n: usize) -> anyhow::Result<Vec<Rational>> {
    if let Ok(r) = ratio::parse(arg) {
        return Ok(vec![r; n]);
    }
    let items: Vec<Value> = serde_json::from_value(load_json(arg)?)?;
    if items.len() != n {
        bail!("expected {n} values of eta, got {}", items.len());
    }
    items
        .iter()
        .map(|x| match x {
            Value::String(s) => Ok(ratio::parse(s)?),
            Value::Number(k) => k.as_i64().map(ratio::int).ok_or_else(|| anyhow!("eta must be rational")),
            other => bail!("eta entries must be strings or integers, got {other}"),
        })
        .collect()
}

fn subgraph(g: &Multigraph, arg: &str) -> anyhow::Result<SpanningSubgraph> {
    Ok(SpanningSubgraph::new(g, index_list(arg)?)?)
}

fn degree_spec(g: &Multigraph, m: usize, b: &BoundArgs) -> anyhow::Result<DegreeSpec> {
    let n = g.vertex_count();
    let mut spec = if let Some(d) = &b.derive {
        let kind: SpecKind = serde_json::from_value(load_json(d)?)?;
        derive_spec(g, &kind)?
    } else {
        let eta = b.eta.as_deref().ok_or_else(|| anyhow!("either --eta or --derive is required"))?;
        DegreeSpec {
            x: match &b.x {
                Some(x) => index_list(x)?,
                None => (0..n).collect(),
            },
            eta: rational_list(eta, n)?,
            lambda: ratio::parse(&b.lambda)?,
            m,
            forest: None,
        }
    };
    if let Some(f) = &b.forest {
        spec = spec.with_forest(subgraph(g, f)?);
    }
    if spec.m != m {
        bail!("derived spec has m={} but --m is {m}", spec.m);
    }
    Ok(spec)
}

fn write_dot(dot: &Option<PathBuf>, g: &Multigraph, h: Option<&SpanningSubgraph>) -> anyhow::Result<()> {
    if let Some(path) = dot {
        std::fs::write(path, g.to_dot(h)).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

/// JSON body and exit code for an outcome whose solution is rendered by `show`.
fn outcome_json<T>(o: &Outcome<T>, show: impl FnOnce(&T) -> Value) -> (Value, u8) {
    let status = o.status();
    match o {
        Outcome::Solution(t) => {
            let mut body = show(t);
            body["status"] = json!(status);
            (body, 0)
        }
        Outcome::Certificate(c) => (json!({ "status": status, "certificate": c }), 2),
        Outcome::Deficient(d) => (json!({ "status": status, "m": d.m, "crossing": d.crossing, "partition": d.to_json() }), 2),
        Outcome::Inconclusive(why) => (json!({ "status": status, "reason": why }), 3),
    }
}

fn subgraph_json(g: &Multigraph, h: &SpanningSubgraph) -> Value {
    json!({ "edges": h.edges(), "degrees": h.degrees(g) })
}

fn parse_seeds(arg: &str) -> anyhow::Result<std::ops::Range<u64>> {
    let (a, b) = arg.split_once("..").ok_or_else(|| anyhow!("seeds must look like a..b"))?;
    let (a, b): (u64, u64) = (a.trim().parse()?, b.trim().parse()?);
    if a >= b {
        bail!("empty seed range {arg}");
    }
    Ok(a..b)
}

fn gen_kind(cmd: &Cmd) -> anyhow::Result<GenKind> {
    let Cmd::Gen { kind, n, k, extra, a, b, p, offsets, .. } = cmd else { unreachable!() };
    let (n, k) = (*n, *k);
    Ok(match kind.as_str() {
        "k-edge-connected" => GenKind::KEdgeConnected { n, k },
        "k-tree-connected" => GenKind::KTreeConnected { n, k, extra: *extra },
        "doubled" => GenKind::Doubled { n },
        "circulant" => GenKind::Circulant { n, offsets: index_list(offsets)? },
        "complete" => GenKind::Complete { n },
        "complete-bipartite" => GenKind::CompleteBipartite { a: *a, b: *b },
        "claw-free" => GenKind::ClawFree { n },
        "connected" => GenKind::Connected { n, p_percent: *p },
        other => bail!("unknown kind {other:?}"),
    })
}

fn run(cmd: Cmd) -> anyhow::Result<(Value, u8)> {
    Ok(match cmd {
        Cmd::Analyze { graph, m } => {
            let g = read_graph(&graph)?;
            let mut omegas = serde_json::Map::new();
            let mut comps = serde_json::Map::new();
            for k in 1..=m.max(1) {
                omegas.insert(k.to_string(), json!(ratio::format(&omega_m(&g, k)?)));
                comps.insert(k.to_string(), json!(m_components(&g, k)?.partition.parts()));
            }
            let tough = toughness(&g).ok();
            (
                json!({
                    "n": g.vertex_count(),
                    "edges": g.edge_count(),
                    "omega": g.component_count(),
                    "Omega": omegas,
                    "components": comps,
                    "toughness": tough.as_ref().map(|t| t.value.as_ref().map_or("inf".to_string(), ratio::format)),
                    "toughness_witness": tough.map(|t| t.witness),
                }),
                0,
            )
        }
        Cmd::Pack { graph, m, dot } => {
            let g = read_graph(&graph)?;
            match pack_trees(&g, m)? {
                PackResult::Packing(p) => {
                    let all = p.trees.iter().fold(SpanningSubgraph::empty(), |a, t| a.union(t));
                    write_dot(&dot, &g, Some(&all))?;
                    (json!({ "status": "packing", "trees": p.to_json() }), 0)
                }
                PackResult::Deficient(d) => {
                    write_dot(&dot, &g, None)?;
                    (json!({ "status": "deficient", "m": d.m, "crossing": d.crossing, "partition": d.to_json() }), 2)
                }
            }
        }
        Cmd::BoundedTree { graph, bounds, dot } => {
            let g = read_graph(&graph)?;
            let spec = degree_spec(&g, 1, &bounds)?;
            let out = bounded_spanning_tree(&g, &spec, bounds.mode.into())?;
            write_dot(&dot, &g, out.clone().solution().as_ref())?;
            outcome_json(&out, |t| subgraph_json(&g, t))
        }
        Cmd::BoundedSubgraph { graph, m, bounds, dot } => {
            let g = read_graph(&graph)?;
            let spec = degree_spec(&g, m, &bounds)?;
            let out = bounded_m_subgraph(&g, &spec, bounds.mode.into())?;
            write_dot(&dot, &g, out.clone().solution().as_ref())?;
            outcome_json(&out, |h| subgraph_json(&g, h))
        }
        Cmd::ParityForest { graph, f, q, dot } => {
            let g = read_graph(&graph)?;
            let f = per_vertex(&f, g.vertex_count())?;
            let spec = match q {
                Some(q) => ParitySpec::Prescribed { f, q: index_list(&q)? },
                None => ParitySpec::FParity { f },
            };
            let out = parity_forest(&g, &spec)?;
            write_dot(&dot, &g, out.clone().solution().as_ref())?;
            outcome_json(&out, |h| subgraph_json(&g, h))
        }
        Cmd::FWalk { graph, f, matching } => {
            let g = read_graph(&graph)?;
            let f = per_vertex(&f, g.vertex_count())?;
            let m = match matching {
                Some(m) => subgraph(&g, &m)?,
                None => SpanningSubgraph::empty(),
            };
            let out = f_walk(&g, &f, &m)?;
            outcome_json(&out, |w| json!({ "walk": w.vertices, "edges": w.edges, "visits": w.visits(g.vertex_count()) }))
        }
        Cmd::FTrail { graph, f, lambda } => {
            let g = read_graph(&graph)?;
            let f = per_vertex(&f, g.vertex_count())?;
            let out = f_trail(&g, &f, ratio::parse(&lambda)?)?;
            outcome_json(&out, |t| json!({ "trail": t.edges, "vertices": t.vertices, "visits": t.visits(g.vertex_count()) }))
        }
        Cmd::Verify { suite, seeds } => {
            let ids: Vec<usize> = if suite == "all" {
                (1..=SUITE_COUNT).collect()
            } else {
                vec![suite_id(&suite).ok_or_else(|| anyhow!("unknown suite {suite:?}; known: {}", SUITE_NAMES.join(", ")))?]
            };
            let range = seeds.as_deref().map(parse_seeds).transpose()?;
            let mut reports = Vec::new();
            for id in ids {
                let report = run_suite(id, range.clone().unwrap_or_else(|| default_seeds(id)))?;
                eprintln!("{}", report.line());
                reports.push(report);
            }
            let passed = reports.iter().all(|r| r.passed());
            (json!({ "passed": passed, "reports": reports }), if passed { 0 } else { 2 })
        }
        cmd @ Cmd::Gen { .. } => {
            let kind = gen_kind(&cmd)?;
            let Cmd::Gen { seed, dot, .. } = cmd else { unreachable!() };
            let inst = gen(&kind, seed)?;
            write_dot(&dot, &inst.graph, None)?;
            (inst.to_json(), 0)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok((body, code)) => {
            let text = serde_json::to_string_pretty(&body).expect("serializable");
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
