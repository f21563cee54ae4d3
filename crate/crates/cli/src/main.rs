use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;
use stgraph::engine::{improve, Certificate, Outcome};
use stgraph::enumerate::{enumerate_connected_filtered, NoFilter, StFilter};
use stgraph::predicates::{hamilton_uv_path, is_hamiltonian};
use stgraph::verify::{verify, Source, TheoremId};
use stgraph::{
    exception_witness, from_graph6, independence_number, is_hamiltonian_connected, is_k_connected, is_petersen,
    is_st_graph, min_induced_edges, min_size_search, parse_stream, to_graph6, vertex_connectivity, Graph, STParams,
};

#[derive(Parser)]
#[command(name = "stgraph", version, about = "Exact tools for [s,t]-graphs and Hamilton connectivity on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every predicate on one graph.
    Check {
        /// Graph in graph6 format.
        graph6: String,
        #[arg(long, requires = "t")]
        s: Option<usize>,
        #[arg(long, requires = "s")]
        t: Option<usize>,
        /// Also test k-connectivity and the kK1 ∨ G_k exception.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively check a theorem over connected graphs up to an order.
    Verify {
        /// main, ce (Chvatal-Erdos), wangmou or bound.
        theorem: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        nmax: Option<usize>,
        /// graph6 stream to scan instead of the generator ("-" for stdin).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Generate every connected graph instead of pruning by the hypothesis.
        #[arg(long)]
        no_prune: bool,
        #[arg(long)]
        json: bool,
    },
    /// Search for a Hamilton (u,v)-path with the rule engine.
    FindPath {
        graph6: String,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        /// Print one line per accepted rule application.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Minimum size of a connected [s,t]-graph of order n.
    MinSize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print every connected graph of order n as graph6, one per line.
    Gen {
        #[arg(long)]
        n: usize,
        /// Only [s,t]-graphs.
        #[arg(long, requires = "t")]
        s: Option<usize>,
        #[arg(long, requires = "s")]
        t: Option<usize>,
    },
}

fn parse_graph(text: &str) -> Result<Graph> {
    from_graph6(text).with_context(|| format!("cannot decode graph6 string `{text}`"))
}

fn st_params(s: Option<usize>, t: Option<usize>) -> Result<Option<STParams>> {
    match (s, t) {
        (Some(s), Some(t)) => Ok(Some(STParams::new(s, t)?)),
        _ => Ok(None),
    }
}

fn check(g: &Graph, st: Option<STParams>, k: Option<usize>, as_json: bool) -> Result<ExitCode> {
    let n = g.order();
    let kappa = (n > 0).then(|| vertex_connectivity(g));
    let minima: Vec<(usize, usize)> = (2..=n).map(|s| (s, min_induced_edges(g, s).unwrap())).collect();
    let hamiltonian = (n >= 3).then(|| is_hamiltonian(g).unwrap());
    let hc = is_hamiltonian_connected(g);
    let st_result = st.map(|p| (p, is_st_graph(g, p)));
    let k_result = k.map(|k| (k, is_k_connected(g, k), exception_witness(g, k)));
    if as_json {
        let report = json!({
            "graph6": to_graph6(g)?,
            "order": n,
            "size": g.size(),
            "degrees": g.degrees(),
            "connected": g.is_connected(),
            "vertex_connectivity": kappa,
            "independence_number": independence_number(g),
            "min_induced_edges": minima.iter().map(|&(s, e)| json!({"s": s, "edges": e})).collect::<Vec<_>>(),
            "hamiltonian": hamiltonian,
            "hamiltonian_connected": hc,
            "petersen": is_petersen(g),
            "st": st_result.map(|(p, ok)| json!({"s": p.s, "t": p.t, "holds": ok})),
            "k": k_result.map(|(k, conn, w)| json!({"k": k, "k_connected": conn, "exception_witness": w})),
        });
        println!("{}", serde_json::to_string_pretty(&report)?);
        return Ok(ExitCode::SUCCESS);
    }
    println!("graph6                 {}", to_graph6(g)?);
    println!("order, size            {n}, {}", g.size());
    println!("degrees                {:?}", g.degrees());
    println!("connected              {}", g.is_connected());
    if let Some(kappa) = kappa {
        println!("vertex connectivity    {kappa}");
    }
    println!("independence number    {}", independence_number(g));
    let minima: Vec<String> = minima.iter().map(|(s, e)| format!("{s}:{e}")).collect();
    println!("min induced edges      {}", minima.join(" "));
    if let Some(h) = hamiltonian {
        println!("hamiltonian            {h}");
    }
    println!("hamiltonian-connected  {hc}");
    println!("petersen               {}", is_petersen(g));
    if let Some((p, ok)) = st_result {
        println!("{:<23}{ok}", format!("[{},{}]-graph", p.s, p.t));
    }
    if let Some((k, conn, w)) = k_result {
        println!("{:<23}{conn}", format!("{k}-connected"));
        match w {
            Some(w) => println!("exception witness      {:?} joined to {:?}", w.independent_part, w.rest),
            None => println!("exception witness      none"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read_input(path: &PathBuf) -> Result<Vec<Graph>> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    }
    Ok(parse_stream(&text)?)
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    theorem: &str,
    k: usize,
    nmax: Option<usize>,
    input: Option<PathBuf>,
    jobs: Option<usize>,
    no_prune: bool,
    as_json: bool,
) -> Result<ExitCode> {
    let theorem: TheoremId = theorem.parse()?;
    let nmax = nmax.unwrap_or(match theorem {
        TheoremId::WangMou => 10,
        _ => 8,
    });
    let source = match (input, no_prune) {
        (Some(path), _) => Source::Graphs(read_input(&path)?),
        (None, true) => Source::GeneratedUnpruned,
        (None, false) => Source::Generated,
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            bail!("--jobs must be positive");
        }
        pool = pool.num_threads(j);
    }
    let report = pool.build()?.install(|| verify(theorem, nmax, k, source))?;
    if as_json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("{report}");
    }
    Ok(if report.verified() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn find_path(g: &Graph, u: usize, v: usize, trace: bool, as_json: bool) -> Result<ExitCode> {
    let result = improve(g, u, v)?;
    let fallback = match &result.outcome {
        Outcome::HamiltonPath(_) => None,
        Outcome::Stalled { .. } => Some(hamilton_uv_path(g, u, v)),
    };
    let found = result.hamilton_path().is_some() || matches!(fallback, Some(Some(_)));
    if as_json {
        let report = json!({
            "engine": result,
            "exact_search": fallback.map(|p| p.map(|p| p.into_vertices())),
        });
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        if trace {
            for t in &result.trace {
                println!("{t}");
            }
        }
        match &result.outcome {
            Outcome::HamiltonPath(p) => println!("hamilton path (engine): {p:?}"),
            Outcome::Stalled { path, certificate } => {
                println!("engine stalled at {path:?}");
                match certificate {
                    Certificate::SparseSet(s) => println!("certificate: sparse set {s:?} with {} edges", g.edges_within(*s)),
                    Certificate::JoinWitness(w) => {
                        println!("certificate: join witness {:?} joined to {:?}", w.independent_part, w.rest)
                    }
                    Certificate::None => println!("certificate: none"),
                }
                match fallback.flatten() {
                    Some(p) => println!("hamilton path (exact search): {p:?}"),
                    None => println!("no hamilton path from {u} to {v}"),
                }
            }
        }
    }
    Ok(if found { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn gen(n: usize, st: Option<STParams>) -> Result<ExitCode> {
    let out = io::stdout();
    let mut out = BufWriter::new(out.lock());
    let mut emit = |g: Graph| -> Result<()> {
        writeln!(out, "{}", to_graph6(&g)?)?;
        Ok(())
    };
    match st {
        Some(p) => enumerate_connected_filtered(n, StFilter(p))?.try_for_each(&mut emit)?,
        None => enumerate_connected_filtered(n, NoFilter)?.try_for_each(&mut emit)?,
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check { graph6, s, t, k, json } => check(&parse_graph(&graph6)?, st_params(s, t)?, k, json),
        Command::Verify { theorem, k, nmax, input, jobs, no_prune, json } => {
            run_verify(&theorem, k, nmax, input, jobs, no_prune, json)
        }
        Command::FindPath { graph6, u, v, trace, json } => find_path(&parse_graph(&graph6)?, u, v, trace, json),
        Command::MinSize { n, s, t, json } => {
            let r = min_size_search(n, s, t)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                println!("{r}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { n, s, t } => gen(n, st_params(s, t)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
