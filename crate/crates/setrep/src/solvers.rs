use crate::error::{Error, Result};
use crate::exact_cover::{self, exact_theta0, mask_vertices, pair_rank};
use crate::graph::Graph;
use crate::rep::{difference_edge, verify, Mode, SetRepresentation};
use std::collections::HashSet;

/// Outcome of an exact small-graph solver. `value` is the optimum when
/// `exact` is true; otherwise it is an upper bound obtained after some
/// refutation ran with a multiplicity cap too small to be conclusive.
#[derive(Clone, Debug)]
pub struct SolverResult {
    pub value: usize,
    pub exact: bool,
    pub nodes_explored: u64,
    pub witness: Witness,
}

#[derive(Clone, Debug)]
pub enum Witness {
    Representation(SetRepresentation),
    Colorings(Vec<Vec<u32>>),
}

impl Witness {
    pub fn representation(&self) -> Option<&SetRepresentation> {
        match self {
            Witness::Representation(r) => Some(r),
            Witness::Colorings(_) => None,
        }
    }

    pub fn colorings(&self) -> Option<&[Vec<u32>]> {
        match self {
            Witness::Representation(_) => None,
            Witness::Colorings(c) => Some(c),
        }
    }
}

const FKN_LIMIT: usize = 10;
const DIFF_LIMIT: usize = 5;
const PRAGUE_LIMIT: usize = 6;

/// Exact Kneser rank. With t the exact minimum cover thickness of the
/// complement, the rank is t or t+1: a rank-t representation is the same
/// thing as a multiset of complement-cliques in which every vertex lies
/// in exactly t members (ground elements = clique instances), every
/// complement edge lies in some member, and no two vertices have the
/// same incidence multiset. The search covers complement edges with
/// per-vertex budget t, then pads deficits with fresh singletons, which
/// keeps incidences distinct except between vertices already at full
/// budget — those are rechecked and the search backtracks past them.
pub fn exact_f_kn(g: &Graph) -> Result<SolverResult> {
    if g.n() > FKN_LIMIT {
        return Err(Error::Capacity {
            what: "exact_f_kn",
            n: g.n(),
            limit: FKN_LIMIT,
        });
    }
    let comp = g.complement();
    let theta = exact_theta0(&comp)?;
    let t = theta.value;
    let mut nodes = theta.nodes;

    if t > 0 {
        let mut ctx = exact_cover::Ctx::new(&comp);
        let uncovered = ctx.edge_mask(&comp);
        let mut counts = vec![0usize; g.n()];
        let mut chosen: Vec<u32> = Vec::new();
        let found = search_rank_t(&mut ctx, uncovered, &mut counts, t, &mut chosen);
        nodes += ctx.nodes;
        if found {
            let cliques: Vec<Vec<usize>> = chosen
                .iter()
                .map(|&c| mask_vertices(c).into_iter().map(|v| v as usize).collect())
                .collect();
            let mut patterns: Vec<(&[usize], usize)> =
                cliques.iter().map(|c| (c.as_slice(), 1)).collect();
            let deficits: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
            for v in 0..g.n() {
                let have = cliques.iter().filter(|c| c.contains(&v)).count();
                if have < t {
                    patterns.push((deficits[v].as_slice(), t - have));
                }
            }
            let rep = SetRepresentation::from_patterns(g.n(), patterns);
            debug_assert!(verify(&rep, g, Mode::Kneser, t).unwrap().valid);
            return Ok(SolverResult {
                value: t,
                exact: true,
                nodes_explored: nodes,
                witness: Witness::Representation(rep),
            });
        }
    }
    // no rank-t representation (t = 0 has none by fiat: ranks start at 1)
    let (rep, rank) = crate::rep::kneser_from_cover(&comp, &theta.cover)?;
    debug_assert_eq!(rank, t + 1);
    debug_assert!(verify(&rep, g, Mode::Kneser, rank).unwrap().valid);
    Ok(SolverResult {
        value: rank,
        exact: true,
        nodes_explored: nodes,
        witness: Witness::Representation(rep),
    })
}

/// Branch on the lowest uncovered complement edge; a leaf is accepted
/// when padding the budget deficits with singletons leaves all vertex
/// incidences distinct. Deficit vertices get fresh private elements, so
/// only full-budget vertices can collide.
fn search_rank_t(
    ctx: &mut exact_cover::Ctx,
    uncovered: u64,
    counts: &mut [usize],
    t: usize,
    chosen: &mut Vec<u32>,
) -> bool {
    ctx.nodes += 1;
    if uncovered == 0 {
        let full: Vec<usize> = (0..ctx.n).filter(|&v| counts[v] == t).collect();
        let mut keys: Vec<Vec<usize>> = full
            .iter()
            .map(|&v| {
                (0..chosen.len())
                    .filter(|&i| chosen[i] >> v & 1 == 1)
                    .collect()
            })
            .collect();
        keys.sort();
        return keys.windows(2).all(|w| w[0] != w[1]);
    }
    for w in 0..ctx.n {
        let udeg = exact_cover::uncovered_degree(ctx, uncovered, w);
        if udeg > 0 && counts[w] + udeg.div_ceil(ctx.omega - 1) > t {
            return false;
        }
    }
    let (u, v) = ctx.lowest_uncovered(uncovered);
    let rank = pair_rank(ctx.n, u, v);
    for i in 0..ctx.candidates[rank].len() {
        let clique = ctx.candidates[rank][i];
        let mut members = clique;
        let mut blocked = false;
        while members != 0 {
            let w = members.trailing_zeros() as usize;
            members &= members - 1;
            if counts[w] >= t {
                blocked = true;
                break;
            }
        }
        if blocked {
            continue;
        }
        let mut m = clique;
        while m != 0 {
            counts[m.trailing_zeros() as usize] += 1;
            m &= m - 1;
        }
        chosen.push(clique);
        if search_rank_t(ctx, uncovered & !ctx.clique_edges(clique), counts, t, chosen) {
            return true;
        }
        chosen.pop();
        let mut m = clique;
        while m != 0 {
            counts[m.trailing_zeros() as usize] -= 1;
            m &= m - 1;
        }
    }
    false
}

/// Result of a single rank decision: the witness if one exists within
/// the multiplicity cap, plus the node count of the search.
#[derive(Clone, Debug)]
pub struct DiffDecision {
    pub witness: Option<SetRepresentation>,
    pub nodes: u64,
}

/// Decides whether g has a rank-k representation in the given difference
/// mode using at most `cap` ground elements per membership pattern.
///
/// Any representation can be normalized by clamping each pattern's
/// multiplicity at the cap: for c >= k this preserves every test
/// "difference >= k" (if some pattern already carries >= k elements the
/// clamped pattern still carries k; otherwise nothing clamps), and for
/// avg mode c >= 2k likewise preserves "symmetric difference >= 2k". So
/// the search is complete — not merely sound — at cap k (min/max) and
/// cap 2k (avg); smaller caps may miss witnesses.
pub fn decide_difference_rep(
    g: &Graph,
    mode: Mode,
    k: usize,
    cap: usize,
) -> Result<DiffDecision> {
    if mode == Mode::Kneser {
        return Err(Error::parameter(
            "difference search handles min, max, and avg modes only",
        ));
    }
    if g.n() > DIFF_LIMIT {
        return Err(Error::Capacity {
            what: "decide_difference_rep",
            n: g.n(),
            limit: DIFF_LIMIT,
        });
    }
    if k == 0 {
        return Err(Error::parameter("rank must be at least 1"));
    }
    if cap == 0 {
        return Err(Error::parameter("multiplicity cap must be at least 1"));
    }
    let mut search = DiffSearch::new(g, mode, k, cap);
    let found = search.run(0);
    let witness = if found {
        let rep = SetRepresentation::from_patterns(
            g.n(),
            search
                .pattern_verts
                .iter()
                .zip(&search.mults)
                .filter(|&(_, &m)| m > 0)
                .map(|(p, &m)| (p.as_slice(), m)),
        );
        debug_assert!(verify(&rep, g, mode, k).unwrap().valid);
        Some(rep)
    } else {
        None
    };
    Ok(DiffDecision {
        witness,
        nodes: search.nodes,
    })
}

struct DiffSearch<'a> {
    g: &'a Graph,
    mode: Mode,
    k: usize,
    cap: usize,
    n: usize,
    /// vertex lists of the nonempty patterns, ascending (size, mask)
    pattern_verts: Vec<Vec<usize>>,
    /// ordered vertex pairs (u, v) with u in the pattern, v outside
    sep_pairs: Vec<Vec<(usize, usize)>>,
    /// rem[i][u*n+v] = patterns at index >= i separating u from v
    rem: Vec<Vec<u16>>,
    /// d[u*n+v] = current |A_u \ A_v|
    d: Vec<usize>,
    mults: Vec<usize>,
    memo: HashSet<(u16, Vec<u16>)>,
    clamp: usize,
    nodes: u64,
}

impl<'a> DiffSearch<'a> {
    fn new(g: &'a Graph, mode: Mode, k: usize, cap: usize) -> DiffSearch<'a> {
        let n = g.n();
        let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
        masks.sort_by_key(|&m| (m.count_ones(), m));
        let pattern_verts: Vec<Vec<usize>> = masks
            .iter()
            .map(|&m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
            .collect();
        let sep_pairs: Vec<Vec<(usize, usize)>> = masks
            .iter()
            .map(|&m| {
                let mut pairs = Vec::new();
                for u in 0..n {
                    for v in 0..n {
                        if u != v && m >> u & 1 == 1 && m >> v & 1 == 0 {
                            pairs.push((u, v));
                        }
                    }
                }
                pairs
            })
            .collect();
        let mut rem = vec![vec![0u16; n * n]; masks.len() + 1];
        for i in (0..masks.len()).rev() {
            let next = rem[i + 1].clone();
            rem[i] = next;
            for &(u, v) in &sep_pairs[i] {
                rem[i][u * n + v] += 1;
            }
        }
        let clamp = match mode {
            Mode::Avg => 2 * k,
            _ => k,
        };
        DiffSearch {
            g,
            mode,
            k,
            cap,
            n,
            pattern_verts,
            sep_pairs,
            rem,
            d: vec![0; n * n],
            mults: vec![0; masks.len()],
            memo: HashSet::new(),
            clamp,
            nodes: 0,
        }
    }

    fn bump(&mut self, i: usize, delta: isize) {
        for &(u, v) in &self.sep_pairs[i] {
            let slot = &mut self.d[u * self.n + v];
            *slot = slot.checked_add_signed(delta).unwrap();
        }
    }

    /// A pair is hopeless when its predicate is already forced to the
    /// wrong value: differences only grow, and the remaining patterns
    /// can add at most cap * rem to each direction.
    fn pruned(&self, i: usize) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                let duv = self.d[u * self.n + v];
                let dvu = self.d[v * self.n + u];
                let auv = duv + self.cap * self.rem[i][u * self.n + v] as usize;
                let avu = dvu + self.cap * self.rem[i][v * self.n + u] as usize;
                let edge = self.g.has_edge(u, v);
                let dead = match (self.mode, edge) {
                    (Mode::Min, true) => auv.min(avu) < self.k,
                    (Mode::Min, false) => duv >= self.k && dvu >= self.k,
                    (Mode::Max, true) => auv.max(avu) < self.k,
                    (Mode::Max, false) => duv >= self.k || dvu >= self.k,
                    (Mode::Avg, true) => auv + avu < 2 * self.k,
                    (Mode::Avg, false) => duv + dvu >= 2 * self.k,
                    (Mode::Kneser, _) => unreachable!(),
                };
                if dead {
                    return true;
                }
            }
        }
        false
    }

    fn satisfied(&self) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                let edge =
                    difference_edge(self.mode, self.k, self.d[u * self.n + v], self.d[v * self.n + u]);
                if edge != self.g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    fn memo_key(&self, i: usize) -> (u16, Vec<u16>) {
        let clamped = self
            .d
            .iter()
            .map(|&x| x.min(self.clamp) as u16)
            .collect();
        (i as u16, clamped)
    }

    fn run(&mut self, i: usize) -> bool {
        self.nodes += 1;
        if i == self.pattern_verts.len() {
            return self.satisfied();
        }
        if self.pruned(i) {
            return false;
        }
        if self.sep_pairs[i].is_empty() {
            // the all-vertices pattern separates nothing and never
            // affects a predicate
            self.mults[i] = 0;
            return self.run(i + 1);
        }
        let key = self.memo_key(i);
        if self.memo.contains(&key) {
            return false;
        }
        for mult in 0..=self.cap {
            if mult > 0 {
                self.bump(i, 1);
            }
            self.mults[i] = mult;
            if self.run(i + 1) {
                return true;
            }
        }
        self.bump(i, -(self.cap as isize));
        self.mults[i] = 0;
        self.memo.insert(key);
        false
    }
}

/// Multiplicity caps per rank for the difference searches. Min mode
/// always runs at cap k, which is complete (see decide_difference_rep);
/// the schedule only steers max and avg.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CapSchedule {
    /// max -> 2k, avg -> 2k; both provably complete
    Default,
    /// fixed cap for max/avg at every rank; refutations at ranks where
    /// the cap is below the proven-complete level make the result inexact
    Fixed(usize),
}

impl CapSchedule {
    fn cap(self, mode: Mode, k: usize) -> usize {
        match (self, mode) {
            (_, Mode::Min) => k,
            (CapSchedule::Default, _) => 2 * k,
            (CapSchedule::Fixed(c), _) => c,
        }
    }

    fn refutation_is_exact(self, mode: Mode, k: usize) -> bool {
        let cap = self.cap(mode, k);
        match mode {
            Mode::Min | Mode::Max => cap >= k,
            Mode::Avg => cap >= 2 * k,
            Mode::Kneser => false,
        }
    }
}

/// Exact f_min / f_max / f_avg: the least rank admitting a
/// representation in the given mode. Ranks are tried from 1 upward; the
/// Kneser rank bounds the loop because a Kneser witness of rank r is
/// also a valid mode witness at rank r, and its pattern multiplicities
/// fit every default cap.
pub fn exact_f_mode(g: &Graph, mode: Mode, schedule: CapSchedule) -> Result<SolverResult> {
    if mode == Mode::Kneser {
        return Err(Error::parameter("use exact_f_kn for kneser rank"));
    }
    if g.n() > DIFF_LIMIT {
        return Err(Error::Capacity {
            what: "exact_f_mode",
            n: g.n(),
            limit: DIFF_LIMIT,
        });
    }
    let kn = exact_f_kn(g)?;
    let mut nodes = kn.nodes_explored;
    let mut exact = true;
    for k in 1..=kn.value {
        let dec = decide_difference_rep(g, mode, k, schedule.cap(mode, k))?;
        nodes += dec.nodes;
        if let Some(rep) = dec.witness {
            return Ok(SolverResult {
                value: k,
                exact,
                nodes_explored: nodes,
                witness: Witness::Representation(rep),
            });
        }
        if !schedule.refutation_is_exact(mode, k) {
            exact = false;
        }
    }
    // only reachable when a sub-complete fixed cap excluded even the
    // Kneser witness; fall back to it as an upper-bound witness
    debug_assert!(!exact);
    let Witness::Representation(rep) = kn.witness else {
        unreachable!("exact_f_kn always yields a representation");
    };
    debug_assert!(verify(&rep, g, mode, kn.value).unwrap().valid);
    Ok(SolverResult {
        value: kn.value,
        exact: false,
        nodes_explored: nodes,
        witness: Witness::Representation(rep),
    })
}

/// Checks the product-coloring conditions: every coloring assigns all n
/// vertices a color; adjacent vertices differ in every coloring;
/// non-adjacent vertices agree in at least one; no two vertices have
/// identical color vectors.
pub fn prague_valid(g: &Graph, colorings: &[Vec<u32>]) -> bool {
    if colorings.is_empty() || colorings.iter().any(|c| c.len() != g.n()) {
        return false;
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let agree = colorings.iter().filter(|c| c[u] == c[v]).count();
            if g.has_edge(u, v) {
                if agree > 0 {
                    return false;
                }
            } else if agree == 0 || agree == colorings.len() {
                return false;
            }
        }
    }
    true
}

/// Exact Prague dimension: the least t admitting colorings as in
/// prague_valid. Vertices receive color vectors one at a time; within
/// each coordinate, colors are introduced in canonical ascending order
/// (a new color may be used only if all smaller ones already appear in
/// that coordinate), which fixes vertex 0 to the all-zero vector and
/// collapses color permutations. An explicit construction with one
/// coordinate per non-edge plus one injective coordinate shows t is at
/// most e(complement)+1, so the loop terminates.
pub fn exact_prague(g: &Graph) -> Result<SolverResult> {
    if g.n() > PRAGUE_LIMIT {
        return Err(Error::Capacity {
            what: "exact_prague",
            n: g.n(),
            limit: PRAGUE_LIMIT,
        });
    }
    let bound = g.complement().edge_count() + 1;
    let mut nodes = 0u64;
    for t in 1..=bound {
        let mut search = PragueSearch {
            g,
            t,
            vecs: Vec::with_capacity(g.n()),
            used_max: vec![-1; t],
            nodes: 0,
        };
        let found = search.place(0);
        nodes += search.nodes;
        if found {
            let mut colorings = vec![vec![0u32; g.n()]; t];
            for (v, vec) in search.vecs.iter().enumerate() {
                for (c, &color) in vec.iter().enumerate() {
                    colorings[c][v] = color;
                }
            }
            debug_assert!(prague_valid(g, &colorings));
            return Ok(SolverResult {
                value: t,
                exact: true,
                nodes_explored: nodes,
                witness: Witness::Colorings(colorings),
            });
        }
    }
    Err(Error::Invariant(format!(
        "no product coloring with {bound} coordinates; the non-edge construction guarantees one"
    )))
}

struct PragueSearch<'a> {
    g: &'a Graph,
    t: usize,
    vecs: Vec<Vec<u32>>,
    used_max: Vec<i64>,
    nodes: u64,
}

impl<'a> PragueSearch<'a> {
    fn place(&mut self, v: usize) -> bool {
        if v == self.g.n() {
            return true;
        }
        let mut x = vec![0u32; self.t];
        self.assign(v, 0, &mut x)
    }

    fn assign(&mut self, v: usize, coord: usize, x: &mut Vec<u32>) -> bool {
        self.nodes += 1;
        if coord == self.t {
            // coordinate-level checks handled edges; finish with the
            // non-edge and distinctness conditions
            for u in 0..v {
                if !self.g.has_edge(u, v) {
                    let vu = &self.vecs[u];
                    let agree = (0..self.t).filter(|&c| vu[c] == x[c]).count();
                    if agree == 0 || agree == self.t {
                        return false;
                    }
                }
            }
            self.vecs.push(x.clone());
            let saved: Vec<i64> = self.used_max.clone();
            for c in 0..self.t {
                self.used_max[c] = self.used_max[c].max(x[c] as i64);
            }
            if self.place(v + 1) {
                return true;
            }
            self.vecs.pop();
            self.used_max = saved;
            return false;
        }
        let top = (self.used_max[coord] + 1).min(self.g.n() as i64 - 1);
        for color in 0..=top.max(0) as u32 {
            if (0..v).any(|u| self.g.has_edge(u, v) && self.vecs[u][coord] == color) {
                continue;
            }
            x[coord] = color;
            if self.assign(v, coord + 1, x) {
                return true;
            }
        }
        false
    }
}
