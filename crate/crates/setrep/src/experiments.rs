use crate::clique::max_clique_budgeted;
use crate::cover::{greedy_cover, thickness, validate_cover, GreedyStrategy};
use crate::error::{Error, Result};
use crate::graph::{gen_gnnp, gen_gnp, Graph};
use crate::linear_space::{linear_space_cover, linear_space_for, LinearSpace};
use crate::seed::Seed;
use rayon::prelude::*;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

/// How a cover is produced in the experiment harness: directly on the
/// whole graph, or line-by-line over a linear space on the vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverMethod {
    Direct(GreedyStrategy),
    Lines(GreedyStrategy),
}

impl CoverMethod {
    pub(crate) fn ids(self) -> (u64, u64) {
        let inner_id = |s: GreedyStrategy| match s {
            GreedyStrategy::EdgeGreedy => 0,
            GreedyStrategy::VertexGreedy => 1,
            GreedyStrategy::RandomOrder => 2,
        };
        match self {
            CoverMethod::Direct(s) => (0, inner_id(s)),
            CoverMethod::Lines(s) => (1, inner_id(s)),
        }
    }
}

impl fmt::Display for CoverMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverMethod::Direct(s) => write!(f, "direct_{s}"),
            CoverMethod::Lines(s) => write!(f, "lines_{s}"),
        }
    }
}

impl FromStr for CoverMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<CoverMethod> {
        if let Some(rest) = s.strip_prefix("direct_") {
            Ok(CoverMethod::Direct(rest.parse()?))
        } else if let Some(rest) = s.strip_prefix("lines_") {
            Ok(CoverMethod::Lines(rest.parse()?))
        } else {
            Err(Error::parameter(format!(
                "unknown cover method {s:?}; expected direct_* or lines_*"
            )))
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    /// graph sizes, ascending
    pub n_grid: Vec<usize>,
    pub p: f64,
    pub trials: usize,
    pub seed: Seed,
    pub strategies: Vec<CoverMethod>,
    /// node budget for the clique search backing theta0_lower
    pub omega_budget: u64,
    /// when false (the default) wall_ms is reported as 0, keeping CSV
    /// output byte-identical across reruns; timings go to the row only
    /// when explicitly requested
    pub record_timing: bool,
    /// optional destination the caller will write CSV to
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(n_grid: Vec<usize>, p: f64, trials: usize, seed: Seed) -> ExperimentConfig {
        ExperimentConfig {
            n_grid,
            p,
            trials,
            seed,
            strategies: vec![
                CoverMethod::Direct(GreedyStrategy::EdgeGreedy),
                CoverMethod::Lines(GreedyStrategy::EdgeGreedy),
            ],
            omega_budget: 200_000,
            record_timing: false,
            out: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_grid.is_empty() {
            return Err(Error::parameter("n_grid must be nonempty"));
        }
        if self.n_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::parameter("n_grid must be strictly ascending"));
        }
        if self.trials == 0 {
            return Err(Error::parameter("need at least one trial"));
        }
        if self.strategies.is_empty() {
            return Err(Error::parameter("need at least one cover strategy"));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::parameter(format!(
                "edge probability must lie in [0, 1], got {}",
                self.p
            )));
        }
        Ok(())
    }
}

/// One measurement cell. `ratio_upper`/`ratio_lower` are
/// value * ln(N) / N with N the vertex count of the covered graph —
/// N = n for theta0-scaling rows and N = 2n for bipartite rows.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct ExperimentRow {
    pub n: usize,
    pub p: f64,
    pub trial: usize,
    pub strategy: String,
    pub theta0_upper: usize,
    pub theta0_lower: usize,
    pub fkn_upper: usize,
    pub ratio_upper: f64,
    pub ratio_lower: f64,
    pub omega_exact: bool,
    pub wall_ms: u64,
}

pub const CSV_HEADER: &str =
    "n,p,trial,strategy,theta0_upper,theta0_lower,fkn_upper,ratio_upper,ratio_lower,omega_exact,wall_ms";

const CSV_COMMENT: &str = "# ratios use natural logarithms: ratio = value * ln(N) / N, \
N = vertex count of the covered graph (2n for bipartite rows)";

fn ratio(value: usize, n: usize) -> f64 {
    if n < 2 {
        return 0.0;
    }
    value as f64 * (n as f64).ln() / n as f64
}

/// Delta / (omega - 1), with omega taken from a budgeted clique search.
/// Returns the bound, the clique size used, and whether it was exact; an
/// inexact omega makes the bound a heuristic rather than a guarantee,
/// which the row records.
fn lower_bound_budgeted(g: &Graph, budget: u64) -> (usize, bool) {
    let stats = g.degree_stats();
    if stats.edge_count == 0 {
        return (0, true);
    }
    let est = max_clique_budgeted(g, budget);
    let omega = est.vertices.len();
    debug_assert!(omega >= 2, "a graph with an edge has a 2-clique");
    (stats.max_degree.div_ceil(omega - 1), est.exact)
}

fn build_cover(
    g: &Graph,
    method: CoverMethod,
    space: Option<&LinearSpace>,
    cover_seed: &Seed,
) -> Result<crate::cover::CliqueCover> {
    match method {
        CoverMethod::Direct(s) => Ok(greedy_cover(g, s, cover_seed)),
        CoverMethod::Lines(s) => {
            let ls = space.expect("line covers need a linear space");
            linear_space_cover(g, ls, s, cover_seed)
        }
    }
}

/// Thickness of greedy covers of G(n,p) against the Delta/(omega-1)
/// lower bound, across the size grid. Cells run in parallel; every
/// quantity in a cell derives from seeds fixed by (master, n, trial,
/// strategy), so the output is schedule-independent and adding
/// strategies later does not perturb existing cells.
pub fn run_theta0_scaling(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRow>> {
    cfg.validate()?;
    let mut cells = Vec::new();
    for &n in &cfg.n_grid {
        for trial in 0..cfg.trials {
            cells.push((n, trial));
        }
    }
    let results: Vec<Result<Vec<ExperimentRow>>> = cells
        .par_iter()
        .map(|&(n, trial)| {
            let g = gen_gnp(n, cfg.p, &cfg.seed.descend(&[1, n as u64, trial as u64]))?;
            let (theta0_lower, omega_exact) = lower_bound_budgeted(&g, cfg.omega_budget);
            let needs_space = cfg
                .strategies
                .iter()
                .any(|m| matches!(m, CoverMethod::Lines(_)));
            let space = if needs_space && g.n() >= 2 {
                Some(linear_space_for(n, &cfg.seed.descend(&[2, n as u64, trial as u64]))?)
            } else {
                None
            };
            let mut rows = Vec::with_capacity(cfg.strategies.len());
            for &method in &cfg.strategies {
                let (kind, inner) = method.ids();
                let cover_seed = cfg
                    .seed
                    .descend(&[3, n as u64, trial as u64, kind, inner]);
                let started = std::time::Instant::now();
                let cover = build_cover(&g, method, space.as_ref(), &cover_seed)?;
                let report = validate_cover(&g, &cover);
                if !report.valid {
                    return Err(Error::Invariant(format!(
                        "{method} produced an invalid cover at n={n} trial={trial}: {}",
                        report.violation.expect("invalid report carries a violation")
                    )));
                }
                let wall_ms = if cfg.record_timing {
                    started.elapsed().as_millis() as u64
                } else {
                    0
                };
                let theta0_upper = thickness(&cover);
                rows.push(ExperimentRow {
                    n,
                    p: cfg.p,
                    trial,
                    strategy: method.to_string(),
                    theta0_upper,
                    theta0_lower,
                    fkn_upper: theta0_upper + 1,
                    ratio_upper: ratio(theta0_upper, n),
                    ratio_lower: ratio(theta0_lower, n),
                    omega_exact,
                    wall_ms,
                });
            }
            Ok(rows)
        })
        .collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

pub(crate) fn bipartite_union_instance(
    seed: &Seed,
    n: usize,
    trial: usize,
    p: f64,
) -> Result<(crate::graph::BipartiteGraph, Graph)> {
    let bip = gen_gnnp(n, p, &seed.descend(&[4, n as u64, trial as u64]))?;
    let side_a = gen_gnp(n, p, &seed.descend(&[5, n as u64, trial as u64]))?;
    let side_b = gen_gnp(n, p, &seed.descend(&[6, n as u64, trial as u64]))?;
    let mut edges: Vec<(usize, usize)> = bip.edges().into_iter().map(|(l, r)| (l, n + r)).collect();
    edges.extend(side_a.edges());
    edges.extend(side_b.edges().into_iter().map(|(a, b)| (n + a, n + b)));
    let h = Graph::from_edges(2 * n, edges)?;
    Ok((bip, h))
}

/// Upper bounds on the Kneser rank of a random bipartite graph G(n,n,p):
/// both sides are filled in with G(n,p) to form H, the complement of H
/// is covered, and thickness + 2 bounds the rank. The row's n is the
/// side size; ratios are taken over the 2n vertices of H.
pub fn run_fkn_bipartite(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRow>> {
    cfg.validate()?;
    let mut cells = Vec::new();
    for &n in &cfg.n_grid {
        for trial in 0..cfg.trials {
            cells.push((n, trial));
        }
    }
    let results: Vec<Result<Vec<ExperimentRow>>> = cells
        .par_iter()
        .map(|&(n, trial)| {
            let (_, h) = bipartite_union_instance(&cfg.seed, n, trial, cfg.p)?;
            let target = h.complement();
            let big_n = 2 * n;
            let (theta0_lower, omega_exact) = lower_bound_budgeted(&target, cfg.omega_budget);
            let needs_space = cfg
                .strategies
                .iter()
                .any(|m| matches!(m, CoverMethod::Lines(_)));
            let space = if needs_space && big_n >= 2 {
                Some(linear_space_for(
                    big_n,
                    &cfg.seed.descend(&[8, n as u64, trial as u64]),
                )?)
            } else {
                None
            };
            let mut rows = Vec::with_capacity(cfg.strategies.len());
            for &method in &cfg.strategies {
                let (kind, inner) = method.ids();
                let cover_seed = cfg
                    .seed
                    .descend(&[7, n as u64, trial as u64, kind, inner]);
                let started = std::time::Instant::now();
                let cover = build_cover(&target, method, space.as_ref(), &cover_seed)?;
                let report = validate_cover(&target, &cover);
                if !report.valid {
                    return Err(Error::Invariant(format!(
                        "{method} produced an invalid cover at n={n} trial={trial}: {}",
                        report.violation.expect("invalid report carries a violation")
                    )));
                }
                let wall_ms = if cfg.record_timing {
                    started.elapsed().as_millis() as u64
                } else {
                    0
                };
                let theta0_upper = thickness(&cover);
                let fkn_upper = theta0_upper + 2;
                rows.push(ExperimentRow {
                    n,
                    p: cfg.p,
                    trial,
                    strategy: method.to_string(),
                    theta0_upper,
                    theta0_lower,
                    fkn_upper,
                    ratio_upper: ratio(fkn_upper, big_n),
                    ratio_lower: ratio(theta0_lower, big_n),
                    omega_exact,
                    wall_ms,
                });
            }
            Ok(rows)
        })
        .collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Mean ratio_upper per (n, strategy), minimized over strategies: the
/// "best strategy" curve used by the scaling trend checks.
pub fn best_strategy_ratios(rows: &[ExperimentRow]) -> Vec<(usize, f64)> {
    let mut grid: Vec<usize> = rows.iter().map(|r| r.n).collect();
    grid.sort_unstable();
    grid.dedup();
    let mut strategies: Vec<&str> = rows.iter().map(|r| r.strategy.as_str()).collect();
    strategies.sort_unstable();
    strategies.dedup();
    grid.iter()
        .map(|&n| {
            let best = strategies
                .iter()
                .filter_map(|&s| {
                    let vals: Vec<f64> = rows
                        .iter()
                        .filter(|r| r.n == n && r.strategy == s)
                        .map(|r| r.ratio_upper)
                        .collect();
                    if vals.is_empty() {
                        None
                    } else {
                        Some(vals.iter().sum::<f64>() / vals.len() as f64)
                    }
                })
                .fold(f64::INFINITY, f64::min);
            (n, best)
        })
        .collect()
}

fn format_row(r: &ExperimentRow) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}",
        r.n,
        r.p,
        r.trial,
        r.strategy,
        r.theta0_upper,
        r.theta0_lower,
        r.fkn_upper,
        r.ratio_upper,
        r.ratio_lower,
        r.omega_exact,
        r.wall_ms
    )
}

pub fn rows_to_csv(rows: &[ExperimentRow]) -> String {
    let mut out = String::new();
    out.push_str(CSV_COMMENT);
    out.push('\n');
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format_row(r));
        out.push('\n');
    }
    out
}

pub fn emit_csv(rows: &[ExperimentRow], path: &Path) -> Result<()> {
    std::fs::write(path, rows_to_csv(rows)).map_err(|e| Error::io(path, e))
}

pub fn parse_csv(text: &str) -> Result<Vec<ExperimentRow>> {
    let mut rows = Vec::new();
    let mut saw_header = false;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !saw_header {
            if line != CSV_HEADER {
                return Err(Error::Format(format!(
                    "line {}: unexpected header {line:?}",
                    lineno + 1
                )));
            }
            saw_header = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 11 {
            return Err(Error::Format(format!(
                "line {}: expected 11 fields, found {}",
                lineno + 1,
                fields.len()
            )));
        }
        let bad = |what: &str| Error::Format(format!("line {}: bad {what}", lineno + 1));
        rows.push(ExperimentRow {
            n: fields[0].parse().map_err(|_| bad("n"))?,
            p: fields[1].parse().map_err(|_| bad("p"))?,
            trial: fields[2].parse().map_err(|_| bad("trial"))?,
            strategy: fields[3].to_string(),
            theta0_upper: fields[4].parse().map_err(|_| bad("theta0_upper"))?,
            theta0_lower: fields[5].parse().map_err(|_| bad("theta0_lower"))?,
            fkn_upper: fields[6].parse().map_err(|_| bad("fkn_upper"))?,
            ratio_upper: fields[7].parse().map_err(|_| bad("ratio_upper"))?,
            ratio_lower: fields[8].parse().map_err(|_| bad("ratio_lower"))?,
            omega_exact: fields[9].parse().map_err(|_| bad("omega_exact"))?,
            wall_ms: fields[10].parse().map_err(|_| bad("wall_ms"))?,
        });
    }
    if !saw_header {
        return Err(Error::Format("missing CSV header".into()));
    }
    Ok(rows)
}

/// Log-x chart of mean ratios against n: one series per strategy
/// (ratio_upper) plus the shared lower-bound series. Self-contained SVG.
pub fn emit_plot(rows: &[ExperimentRow], path: &Path) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::parameter("nothing to plot: no rows"));
    }
    let mut grid: Vec<usize> = rows.iter().map(|r| r.n).collect();
    grid.sort_unstable();
    grid.dedup();
    let mut strategies: Vec<String> = rows.iter().map(|r| r.strategy.clone()).collect();
    strategies.sort();
    strategies.dedup();

    let mean = |pick: &dyn Fn(&ExperimentRow) -> bool, field: &dyn Fn(&ExperimentRow) -> f64| {
        let vals: Vec<f64> = rows.iter().filter(|r| pick(r)).map(field).collect();
        vals.iter().sum::<f64>() / vals.len().max(1) as f64
    };

    let mut series: Vec<(String, Vec<(f64, f64)>)> = Vec::new();
    for s in &strategies {
        let pts: Vec<(f64, f64)> = grid
            .iter()
            .map(|&n| {
                (
                    n as f64,
                    mean(&|r: &ExperimentRow| r.n == n && &r.strategy == s, &|r| {
                        r.ratio_upper
                    }),
                )
            })
            .collect();
        series.push((s.clone(), pts));
    }
    let lower_pts: Vec<(f64, f64)> = grid
        .iter()
        .map(|&n| (n as f64, mean(&|r: &ExperimentRow| r.n == n, &|r| r.ratio_lower)))
        .collect();
    series.push(("lower_bound".into(), lower_pts));

    let (w, h, ml, mr, mt, mb) = (800.0, 500.0, 70.0, 30.0, 30.0, 60.0);
    let x_min = (grid[0] as f64).ln();
    let x_max = (*grid.last().unwrap() as f64).ln().max(x_min + 1e-9);
    let y_max = series
        .iter()
        .flat_map(|(_, pts)| pts.iter().map(|&(_, y)| y))
        .fold(0.0f64, f64::max)
        .max(1e-9);
    let sx = |n: f64| ml + (n.ln() - x_min) / (x_max - x_min) * (w - ml - mr);
    let sy = |v: f64| h - mb - v / (y_max * 1.05) * (h - mt - mb);

    let palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2"];
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w} {h}\" font-family=\"monospace\" font-size=\"12\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n"
    ));
    // axes
    svg.push_str(&format!(
        "<line x1=\"{ml}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        h - mb,
        w - mr,
        h - mb
    ));
    svg.push_str(&format!(
        "<line x1=\"{ml}\" y1=\"{mt}\" x2=\"{ml}\" y2=\"{}\" stroke=\"black\"/>\n",
        h - mb
    ));
    for &n in &grid {
        let x = sx(n as f64);
        svg.push_str(&format!(
            "<line x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\" stroke=\"black\"/>\n",
            h - mb,
            h - mb + 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{x}\" y=\"{}\" text-anchor=\"middle\">{n}</text>\n",
            h - mb + 20.0
        ));
    }
    for i in 0..=4 {
        let v = y_max * 1.05 * i as f64 / 4.0;
        let y = sy(v);
        svg.push_str(&format!(
            "<line x1=\"{}\" y1=\"{y}\" x2=\"{ml}\" y2=\"{y}\" stroke=\"black\"/>\n",
            ml - 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{v:.3}</text>\n",
            ml - 9.0,
            y + 4.0
        ));
    }
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">n (log scale)</text>\n",
        (ml + w - mr) / 2.0,
        h - 15.0
    ));
    svg.push_str(&format!(
        "<text x=\"18\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {})\">value * ln(N) / N</text>\n",
        (mt + h - mb) / 2.0,
        (mt + h - mb) / 2.0
    ));
    for (i, (name, pts)) in series.iter().enumerate() {
        let color = palette[i % palette.len()];
        let path_pts: Vec<String> = pts
            .iter()
            .map(|&(n, v)| format!("{},{}", sx(n), sy(v)))
            .collect();
        svg.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n",
            path_pts.join(" ")
        ));
        for &(n, v) in pts {
            svg.push_str(&format!(
                "<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"{color}\"/>\n",
                sx(n),
                sy(v)
            ));
        }
        let ly = mt + 16.0 * i as f64;
        svg.push_str(&format!(
            "<rect x=\"{}\" y=\"{}\" width=\"10\" height=\"10\" fill=\"{color}\"/>\n",
            w - mr - 180.0,
            ly
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\">{name}</text>\n",
            w - mr - 165.0,
            ly + 9.0
        ));
    }
    svg.push_str("</svg>\n");
    std::fs::write(path, svg).map_err(|e| Error::io(path, e))
}

/// Per-vertex thickness of a line-partitioned cover against a
/// Chernoff-style threshold. X_i(v) counts the cliques of line i's part
/// containing v, X(v) is their sum, and b_v the number of lines through
/// v. The threshold is mu * b_v + l * sqrt(4 * b_v * ln n) with l the
/// longest line; mu comes from the configurable constant c (as
/// c * sqrt(n) / ln n), or is calibrated to the run's own mean per-line
/// contribution when c is not given.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ConcentrationReport {
    pub n: usize,
    /// mean of X_i(v) over incidences (v on line i)
    pub mean_line_contribution: f64,
    /// the constant c in mu = c * sqrt(n) / ln n (calibrated or given)
    pub c: f64,
    pub max_line_size: usize,
    pub thickness: Vec<usize>,
    pub thresholds: Vec<f64>,
    pub exceed_count: usize,
    pub exceed_fraction: f64,
}

pub fn concentration_report(
    g: &Graph,
    ls: &LinearSpace,
    parts: &[Vec<Vec<u32>>],
    c: Option<f64>,
) -> Result<ConcentrationReport> {
    let n = g.n();
    if ls.points() != n {
        return Err(Error::parameter(format!(
            "space has {} points but the graph has {n} vertices",
            ls.points()
        )));
    }
    if parts.len() != ls.lines().len() {
        return Err(Error::parameter(format!(
            "{} cover parts for {} lines",
            parts.len(),
            ls.lines().len()
        )));
    }
    if n < 2 {
        return Err(Error::parameter("need at least 2 vertices"));
    }
    let mut x = vec![0usize; n];
    let mut b = vec![0usize; n];
    let mut incidences = 0usize;
    let mut contributions = 0usize;
    let mut max_line = 0usize;
    for (line, part) in ls.lines().iter().zip(parts) {
        max_line = max_line.max(line.len());
        let on_line: std::collections::HashSet<u32> = line.iter().copied().collect();
        for clique in part {
            for &v in clique {
                if !on_line.contains(&v) {
                    return Err(Error::parameter(format!(
                        "cover part mentions vertex {v} outside its line"
                    )));
                }
                x[v as usize] += 1;
            }
        }
        for &v in line {
            b[v as usize] += 1;
        }
        incidences += line.len();
        contributions += part.iter().map(|c| c.len()).sum::<usize>();
    }
    let mean_line_contribution = contributions as f64 / incidences.max(1) as f64;
    let ln_n = (n as f64).ln();
    let mu = match c {
        Some(c) => c * (n as f64).sqrt() / ln_n,
        None => mean_line_contribution,
    };
    let c_used = mu * ln_n / (n as f64).sqrt();
    let thresholds: Vec<f64> = (0..n)
        .map(|v| mu * b[v] as f64 + max_line as f64 * (4.0 * b[v] as f64 * ln_n).sqrt())
        .collect();
    let exceed_count = (0..n).filter(|&v| x[v] as f64 > thresholds[v]).count();
    Ok(ConcentrationReport {
        n,
        mean_line_contribution,
        c: c_used,
        max_line_size: max_line,
        thickness: x,
        thresholds,
        exceed_count,
        exceed_fraction: exceed_count as f64 / n as f64,
    })
}
