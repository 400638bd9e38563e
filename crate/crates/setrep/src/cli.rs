//! Command-line front end. Thin: parse, read files, call the library,
//! print one JSON (or CSV) artifact. Exit codes: 0 success, 1 invalid
//! input or an invalid report, 2 usage errors.

use crate::cover::{
    chromatic_index_greedy, cover_size, greedy_cover, thickness, validate_cover, GreedyStrategy,
};
use crate::encoding::{decode_bipartite, encode_bipartite};
use crate::error::Result;
use crate::exact_cover::{exact_theta0, exact_theta0_prime};
use crate::experiments::{
    concentration_report, emit_plot, rows_to_csv, run_fkn_bipartite, run_theta0_scaling,
    CoverMethod, ExperimentConfig,
};
use crate::graph::{gen_gnnp, gen_gnp};
use crate::io;
use crate::linear_space::{linear_space_cover, linear_space_cover_parts, linear_space_for};
use crate::rep::{atoms, co_star, kneser_from_cover, reduce, verify, Mode};
use crate::seed::Seed;
use crate::solvers::{decide_difference_rep, exact_f_kn, exact_f_mode, exact_prague, CapSchedule};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "setrep",
    version,
    about = "Set representations of graphs: generation, clique covers, exact solvers, experiments"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Master seed for anything randomized
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Compact machine-readable JSON instead of the default rendering
    #[arg(long, global = true)]
    json: bool,
    /// Write the artifact to this path instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate random graphs
    #[command(subcommand)]
    Gen(GenCmd),
    /// Build, verify, and transform set representations
    #[command(subcommand)]
    Rep(RepCmd),
    /// Edge clique covers
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Exact solvers for small graphs
    #[command(subcommand)]
    Exact(ExactCmd),
    /// Random-graph experiment harness
    #[command(subcommand)]
    Exp(ExpCmd),
}

#[derive(Subcommand)]
enum GenCmd {
    /// G(n,p): each pair is an edge independently with probability p
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    /// G(n,n,p): bipartite, n vertices a side
    Gnnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
}

#[derive(Subcommand)]
enum RepCmd {
    /// Check a representation against a graph; exit 1 on mismatch
    Verify {
        rep: PathBuf,
        graph: PathBuf,
        /// kneser, min, max, or avg
        #[arg(long)]
        mode: Mode,
        #[arg(long)]
        k: usize,
    },
    /// Co-star representation (incident complement edges); prints
    /// {"rank", "representation"}
    Costar { graph: PathBuf },
    /// Drop redundant ground elements
    Reduce {
        rep: PathBuf,
        #[arg(long)]
        mode: Mode,
        #[arg(long)]
        k: usize,
    },
    /// Atom partition of the ground set
    Atoms { rep: PathBuf },
    /// Kneser representation from an edge clique cover of the
    /// complement; pass the cover's graph and the cover
    FromCover { graph: PathBuf, cover: PathBuf },
    /// Matrix encoding of a bipartite representation (one file of sets
    /// per side, shared ground set)
    Encode { rep_a: PathBuf, rep_b: PathBuf },
    /// Rebuild the bipartite graph from an encoding
    Decode {
        encoding: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum CoverCmd {
    /// Greedy edge clique cover
    Greedy {
        graph: PathBuf,
        #[arg(long, default_value = "edge_greedy")]
        strategy: GreedyStrategy,
    },
    /// Cover line-by-line over a random linear space on the vertices
    LinearSpace {
        graph: PathBuf,
        #[arg(long, default_value = "edge_greedy")]
        strategy: GreedyStrategy,
    },
    /// Check a cover against a graph; exit 1 with the first violation
    Validate { graph: PathBuf, cover: PathBuf },
    /// Size, thickness, and greedy class count of a cover
    Stats { cover: PathBuf },
}

#[derive(Subcommand)]
enum ExactCmd {
    /// Kneser rank
    Fkn { graph: PathBuf },
    /// Minimum k admitting a k-min-difference representation
    Fmin(DiffArgs),
    /// k-max-difference; --cap below k makes refutations inexact
    Fmax(DiffArgs),
    /// k-average-difference; --cap below 2k makes refutations inexact
    Favg(DiffArgs),
    /// Prague dimension
    Prague { graph: PathBuf },
    /// Minimum thickness over edge clique covers
    Theta0 { graph: PathBuf },
    /// Minimum vertex-disjoint classes over edge clique covers
    Theta0p { graph: PathBuf },
    /// Decide one (mode, k, cap) instance instead of minimizing
    Decide {
        graph: PathBuf,
        #[arg(long)]
        mode: Mode,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
}

#[derive(Args)]
struct DiffArgs {
    graph: PathBuf,
    /// Per-pattern multiplicity cap; defaults to a complete schedule
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct ScalingArgs {
    /// Comma-separated strictly ascending graph sizes
    #[arg(long, value_delimiter = ',', default_value = "64,128,256")]
    n: Vec<usize>,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 3)]
    trials: usize,
    /// Comma-separated: direct_<s> or lines_<s> for s in edge_greedy,
    /// vertex_greedy, random_order
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "direct_edge_greedy,lines_edge_greedy"
    )]
    strategies: Vec<CoverMethod>,
    /// Node budget for the clique search behind the lower bound
    #[arg(long, default_value_t = 200_000)]
    omega_budget: u64,
    /// Record wall-clock per cover; off by default so reruns are
    /// byte-identical
    #[arg(long)]
    record_timing: bool,
    /// Also write an SVG chart of mean ratios here
    #[arg(long, value_name = "PATH")]
    plot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ExpCmd {
    /// Cover thickness vs the degree lower bound on G(n,p); emits CSV
    Theta0Scaling(ScalingArgs),
    /// Kneser-rank upper bounds for bipartite G(n,n,p) via covers of
    /// the filled-in complement; emits CSV
    FknBipartite(ScalingArgs),
    /// Per-vertex thickness of one line-partitioned cover vs the
    /// Chernoff threshold
    Concentration {
        #[arg(long, default_value_t = 256)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value = "edge_greedy")]
        strategy: GreedyStrategy,
        /// Constant c in mu = c*sqrt(n)/ln n; calibrated from the run
        /// when absent
        #[arg(long)]
        c: Option<f64>,
    },
}

struct Outcome {
    value: Value,
    /// preferred non-JSON rendering (CSV for experiments)
    text: Option<String>,
    code: i32,
}

impl Outcome {
    fn ok(value: Value) -> Outcome {
        Outcome {
            value,
            text: None,
            code: 0,
        }
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            let rendered = if cli.json {
                let mut s = outcome.value.to_string();
                s.push('\n');
                s
            } else {
                outcome.text.unwrap_or_else(|| io::pretty(&outcome.value))
            };
            let emitted = match &cli.out {
                Some(path) => io::write_string(path, &rendered),
                None => {
                    print!("{rendered}");
                    Ok(())
                }
            };
            match emitted {
                Ok(()) => outcome.code,
                Err(e) => {
                    eprintln!("error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn strategy_id(s: GreedyStrategy) -> u64 {
    CoverMethod::Lines(s).ids().1
}

fn scaling_config(a: &ScalingArgs, seed: u64, out: Option<&PathBuf>) -> ExperimentConfig {
    let mut cfg = ExperimentConfig::new(a.n.clone(), a.p, a.trials, Seed::new(seed));
    cfg.strategies = a.strategies.clone();
    cfg.omega_budget = a.omega_budget;
    cfg.record_timing = a.record_timing;
    cfg.out = out.cloned();
    cfg
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let seed = Seed::new(cli.seed);
    match &cli.cmd {
        Cmd::Gen(GenCmd::Gnp { n, p }) => {
            let g = gen_gnp(*n, *p, &seed)?;
            Ok(Outcome::ok(io::graph_to_json(&g)))
        }
        Cmd::Gen(GenCmd::Gnnp { n, p }) => {
            let g = gen_gnnp(*n, *p, &seed)?;
            Ok(Outcome::ok(io::bipartite_to_json(&g)))
        }

        Cmd::Rep(RepCmd::Verify { rep, graph, mode, k }) => {
            let rep = io::read_rep(rep)?;
            let g = io::read_graph(graph)?;
            let report = verify(&rep, &g, *mode, *k)?;
            Ok(Outcome {
                value: serde_json::to_value(&report).expect("reports serialize"),
                text: None,
                code: if report.valid { 0 } else { 1 },
            })
        }
        Cmd::Rep(RepCmd::Costar { graph }) => {
            let g = io::read_graph(graph)?;
            let (rep, rank) = co_star(&g);
            Ok(Outcome::ok(json!({
                "rank": rank,
                "representation": io::rep_to_json(&rep),
            })))
        }
        Cmd::Rep(RepCmd::Reduce { rep, mode, k }) => {
            let rep = io::read_rep(rep)?;
            let reduced = reduce(&rep, *mode, *k)?;
            Ok(Outcome::ok(io::rep_to_json(&reduced)))
        }
        Cmd::Rep(RepCmd::Atoms { rep }) => {
            let rep = io::read_rep(rep)?;
            let partition = atoms(&rep);
            Ok(Outcome::ok(json!({
                "count": partition.len(),
                "max_atom_size": partition.max_atom_size(),
                "atoms": serde_json::to_value(&partition.atoms).expect("atoms serialize"),
            })))
        }
        Cmd::Rep(RepCmd::FromCover { graph, cover }) => {
            let g = io::read_graph(graph)?;
            let cover = io::read_cover(cover)?;
            let (rep, rank) = kneser_from_cover(&g, &cover)?;
            Ok(Outcome::ok(json!({
                "rank": rank,
                "representation": io::rep_to_json(&rep),
            })))
        }
        Cmd::Rep(RepCmd::Encode { rep_a, rep_b }) => {
            let a = io::read_rep(rep_a)?;
            let b = io::read_rep(rep_b)?;
            let enc = encode_bipartite(&a, &b)?;
            Ok(Outcome::ok(io::encoding_to_json(&enc)))
        }
        Cmd::Rep(RepCmd::Decode { encoding, k }) => {
            let enc = io::read_encoding(encoding)?;
            let g = decode_bipartite(&enc, *k)?;
            Ok(Outcome::ok(io::bipartite_to_json(&g)))
        }

        Cmd::Cover(CoverCmd::Greedy { graph, strategy }) => {
            let g = io::read_graph(graph)?;
            let cover = greedy_cover(&g, *strategy, &seed);
            Ok(Outcome::ok(io::cover_to_json(&cover)))
        }
        Cmd::Cover(CoverCmd::LinearSpace { graph, strategy }) => {
            let g = io::read_graph(graph)?;
            let ls = linear_space_for(g.n(), &seed.child(0))?;
            let cover = linear_space_cover(&g, &ls, *strategy, &seed.child(1))?;
            Ok(Outcome::ok(io::cover_to_json(&cover)))
        }
        Cmd::Cover(CoverCmd::Validate { graph, cover }) => {
            let g = io::read_graph(graph)?;
            let cover = io::read_cover(cover)?;
            let report = validate_cover(&g, &cover);
            Ok(Outcome {
                value: serde_json::to_value(&report).expect("reports serialize"),
                text: None,
                code: if report.valid { 0 } else { 1 },
            })
        }
        Cmd::Cover(CoverCmd::Stats { cover }) => {
            let cover = io::read_cover(cover)?;
            let coloring = chromatic_index_greedy(&cover);
            Ok(Outcome::ok(json!({
                "n": cover.n(),
                "cliques": cover_size(&cover),
                "thickness": thickness(&cover),
                "greedy_classes": coloring.classes,
            })))
        }

        Cmd::Exact(ExactCmd::Fkn { graph }) => {
            let g = io::read_graph(graph)?;
            let r = exact_f_kn(&g)?;
            Ok(Outcome::ok(io::solver_result_to_json(&r)))
        }
        Cmd::Exact(ExactCmd::Fmin(a)) => run_f_mode(a, Mode::Min),
        Cmd::Exact(ExactCmd::Fmax(a)) => run_f_mode(a, Mode::Max),
        Cmd::Exact(ExactCmd::Favg(a)) => run_f_mode(a, Mode::Avg),
        Cmd::Exact(ExactCmd::Prague { graph }) => {
            let g = io::read_graph(graph)?;
            let r = exact_prague(&g)?;
            Ok(Outcome::ok(io::solver_result_to_json(&r)))
        }
        Cmd::Exact(ExactCmd::Theta0 { graph }) => {
            let g = io::read_graph(graph)?;
            let sol = exact_theta0(&g)?;
            Ok(Outcome::ok(json!({
                "value": sol.value,
                "exact": true,
                "nodes_explored": sol.nodes,
                "witness": io::cover_to_json(&sol.cover),
            })))
        }
        Cmd::Exact(ExactCmd::Theta0p { graph }) => {
            let g = io::read_graph(graph)?;
            let sol = exact_theta0_prime(&g)?;
            Ok(Outcome::ok(json!({
                "value": sol.value,
                "exact": true,
                "nodes_explored": sol.nodes,
                "witness": {
                    "cover": io::cover_to_json(&sol.cover),
                    "classes": sol.coloring.classes,
                    "assignment": sol.coloring.assignment,
                },
            })))
        }
        Cmd::Exact(ExactCmd::Decide { graph, mode, k, cap }) => {
            let g = io::read_graph(graph)?;
            let d = decide_difference_rep(&g, *mode, *k, *cap)?;
            Ok(Outcome::ok(json!({
                "representable": d.witness.is_some(),
                "nodes_explored": d.nodes,
                "witness": d.witness.as_ref().map(io::rep_to_json),
            })))
        }

        Cmd::Exp(ExpCmd::Theta0Scaling(a)) => {
            let cfg = scaling_config(a, cli.seed, cli.out.as_ref());
            let rows = run_theta0_scaling(&cfg)?;
            if let Some(plot) = &a.plot {
                emit_plot(&rows, plot)?;
            }
            Ok(Outcome {
                value: serde_json::to_value(&rows).expect("rows serialize"),
                text: Some(rows_to_csv(&rows)),
                code: 0,
            })
        }
        Cmd::Exp(ExpCmd::FknBipartite(a)) => {
            let cfg = scaling_config(a, cli.seed, cli.out.as_ref());
            let rows = run_fkn_bipartite(&cfg)?;
            if let Some(plot) = &a.plot {
                emit_plot(&rows, plot)?;
            }
            Ok(Outcome {
                value: serde_json::to_value(&rows).expect("rows serialize"),
                text: Some(rows_to_csv(&rows)),
                code: 0,
            })
        }
        Cmd::Exp(ExpCmd::Concentration { n, p, strategy, c }) => {
            // Mirrors trial 0 of the scaling run's seed paths, so the
            // report describes the same cover the CSV row measured.
            let nn = *n as u64;
            let g = gen_gnp(*n, *p, &seed.descend(&[1, nn, 0]))?;
            let ls = linear_space_for(*n, &seed.descend(&[2, nn, 0]))?;
            let parts = linear_space_cover_parts(
                &g,
                &ls,
                *strategy,
                &seed.descend(&[3, nn, 0, 1, strategy_id(*strategy)]),
            )?;
            let report = concentration_report(&g, &ls, &parts, *c)?;
            Ok(Outcome::ok(
                serde_json::to_value(&report).expect("reports serialize"),
            ))
        }
    }
}

fn run_f_mode(a: &DiffArgs, mode: Mode) -> Result<Outcome> {
    let g = io::read_graph(&a.graph)?;
    let schedule = match a.cap {
        Some(c) => CapSchedule::Fixed(c),
        None => CapSchedule::Default,
    };
    let r = exact_f_mode(&g, mode, schedule)?;
    Ok(Outcome::ok(io::solver_result_to_json(&r)))
}
