use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::seed::{uniform, Seed};

/// An edge clique cover: a list of cliques (as sorted vertex lists) whose
/// union of pairs contains every edge of the graph. The list order is
/// meaningful: clique indices become ground elements in
/// `kneser_from_cover` and first-fit coloring processes them in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCover {
    n: usize,
    cliques: Vec<Vec<u32>>,
}

impl CliqueCover {
    pub fn new(n: usize, cliques: Vec<Vec<u32>>) -> Result<Self> {
        let mut cliques = cliques;
        for (i, clique) in cliques.iter_mut().enumerate() {
            clique.sort_unstable();
            if clique.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::parameter(format!(
                    "clique {i} contains a repeated vertex"
                )));
            }
            if let Some(&hi) = clique.last() {
                if hi as usize >= n {
                    return Err(Error::parameter(format!(
                        "clique {i} contains vertex {hi}, out of range for n = {n}"
                    )));
                }
            }
        }
        Ok(CliqueCover { n, cliques })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cliques(&self) -> &[Vec<u32>] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }
}

/// Number of cliques in the cover (the cover's contribution to theta_1).
pub fn cover_size(cover: &CliqueCover) -> usize {
    cover.cliques.len()
}

/// Maximum, over the vertices, of the number of cliques containing the
/// vertex (the cover's contribution to theta_0).
pub fn thickness(cover: &CliqueCover) -> usize {
    let mut count = vec![0usize; cover.n];
    for clique in &cover.cliques {
        for &v in clique {
            count[v as usize] += 1;
        }
    }
    count.into_iter().max().unwrap_or(0)
}

/// Greedy strategies for building an edge clique cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GreedyStrategy {
    /// Grow from the lowest uncovered edge, preferring extension vertices
    /// that cover the most still-uncovered edges into the clique.
    EdgeGreedy,
    /// Grow from the lowest uncovered edge, preferring extension vertices
    /// with the highest total uncovered degree.
    VertexGreedy,
    /// Grow from the lowest uncovered edge, extending by uniformly random
    /// candidates drawn from the seed's stream.
    RandomOrder,
}

impl std::fmt::Display for GreedyStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GreedyStrategy::EdgeGreedy => "edge_greedy",
            GreedyStrategy::VertexGreedy => "vertex_greedy",
            GreedyStrategy::RandomOrder => "random_order",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for GreedyStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<GreedyStrategy> {
        match s {
            "edge_greedy" => Ok(GreedyStrategy::EdgeGreedy),
            "vertex_greedy" => Ok(GreedyStrategy::VertexGreedy),
            "random_order" => Ok(GreedyStrategy::RandomOrder),
            other => Err(Error::parameter(format!(
                "unknown strategy {other:?}; expected edge_greedy, vertex_greedy, or random_order"
            ))),
        }
    }
}

/// Covers every edge of g by maximal cliques, greedily. Repeatedly takes
/// the lexicographically lowest uncovered edge, extends it to a maximal
/// clique (extension preference set by the strategy, ties to the lowest
/// vertex), and marks the clique's edges covered. Deterministic for a
/// given (graph, strategy, seed); only RandomOrder consumes the seed.
pub fn greedy_cover(g: &Graph, strategy: GreedyStrategy, seed: &Seed) -> CliqueCover {
    let n = g.n();
    let mut rng = seed.rng();
    let mut uncovered: Vec<BitSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut udeg: Vec<u32> = (0..n).map(|v| uncovered[v].count() as u32).collect();
    let mut cliques: Vec<Vec<u32>> = Vec::new();
    let mut cursor = 0;

    loop {
        // lowest uncovered edge (u, v); the lowest endpoint never
        // decreases as edges get covered, so a cursor suffices
        while cursor < n && uncovered[cursor].is_empty() {
            cursor += 1;
        }
        if cursor >= n {
            break;
        }
        let u = cursor;
        let v = uncovered[u].first().expect("cursor row is nonempty");
        debug_assert!(v > u, "all uncovered edges below the cursor are gone");

        let mut clique = vec![u, v];
        let mut shared = g.neighbors(u).clone();
        shared.intersect_with(g.neighbors(v));
        let mut cand: Vec<usize> = shared.to_vec();
        // per-candidate score, kept incrementally as the clique grows:
        // EdgeGreedy counts uncovered edges into the clique (rows only
        // change between cliques), VertexGreedy the uncovered degree
        let mut scores: Vec<u32> = match strategy {
            GreedyStrategy::EdgeGreedy => cand
                .iter()
                .map(|&x| {
                    uncovered[x].contains(u) as u32 + uncovered[x].contains(v) as u32
                })
                .collect(),
            GreedyStrategy::VertexGreedy => cand.iter().map(|&x| udeg[x]).collect(),
            GreedyStrategy::RandomOrder => Vec::new(),
        };

        while !cand.is_empty() {
            let idx = match strategy {
                GreedyStrategy::RandomOrder => uniform(&mut rng, cand.len()),
                _ => {
                    // first index of maximal score = lowest such vertex
                    let mut best = 0;
                    for i in 1..scores.len() {
                        if scores[i] > scores[best] {
                            best = i;
                        }
                    }
                    best
                }
            };
            let w = cand[idx];
            clique.push(w);
            let neigh = g.neighbors(w);
            let row = &uncovered[w];
            let mut kept = 0;
            for i in 0..cand.len() {
                let x = cand[i];
                if x != w && neigh.contains(x) {
                    cand[kept] = x;
                    if strategy == GreedyStrategy::EdgeGreedy {
                        scores[kept] = scores[i] + row.contains(x) as u32;
                    } else if strategy == GreedyStrategy::VertexGreedy {
                        scores[kept] = scores[i];
                    }
                    kept += 1;
                }
            }
            cand.truncate(kept);
            scores.truncate(kept.min(scores.len()));
        }

        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                if uncovered[a].contains(b) {
                    uncovered[a].remove(b);
                    uncovered[b].remove(a);
                    udeg[a] -= 1;
                    udeg[b] -= 1;
                }
            }
        }
        clique.sort_unstable();
        cliques.push(clique.into_iter().map(|v| v as u32).collect());
    }

    CliqueCover { n, cliques }
}

/// First-fit partition of the cover's cliques into classes of pairwise
/// vertex-disjoint cliques, in list order. `assignment[i]` is the class
/// of clique i; `classes` is the number of classes used (an upper bound
/// for the clique-cover chromatic index theta'_0).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CliqueColoring {
    pub classes: usize,
    pub assignment: Vec<usize>,
}

pub fn chromatic_index_greedy(cover: &CliqueCover) -> CliqueColoring {
    let mut used: Vec<BitSet> = Vec::new();
    let mut assignment = Vec::with_capacity(cover.cliques.len());
    for clique in &cover.cliques {
        let class = (0..used.len())
            .find(|&i| clique.iter().all(|&v| !used[i].contains(v as usize)))
            .unwrap_or_else(|| {
                used.push(BitSet::new(cover.n));
                used.len() - 1
            });
        for &v in clique {
            used[class].insert(v as usize);
        }
        assignment.push(class);
    }
    CliqueColoring {
        classes: used.len(),
        assignment,
    }
}

/// Any clique through a vertex covers at most omega - 1 of its edges, so
/// the maximum degree forces at least ceil(Delta / (omega - 1)) cliques
/// through some vertex. Edgeless graphs need no cliques at all. Calls the
/// exact maximum-clique search, so it is meant for graphs where that is
/// affordable.
pub fn theta0_lower_bound(g: &Graph) -> usize {
    let stats = g.degree_stats();
    if stats.edge_count == 0 {
        return 0;
    }
    let omega = crate::clique::max_clique(g).len();
    debug_assert!(omega >= 2);
    stats.max_degree.div_ceil(omega - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoverViolation {
    SizeMismatch { cover_n: usize, graph_n: usize },
    /// Clique `index` contains the non-adjacent pair (u, v).
    NotAClique { index: usize, u: usize, v: usize },
    UncoveredEdge { u: usize, v: usize },
}

impl std::fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoverViolation::SizeMismatch { cover_n, graph_n } => {
                write!(f, "cover is over {cover_n} vertices but the graph has {graph_n}")
            }
            CoverViolation::NotAClique { index, u, v } => {
                write!(f, "clique {index} contains the non-adjacent pair ({u}, {v})")
            }
            CoverViolation::UncoveredEdge { u, v } => {
                write!(f, "edge ({u}, {v}) is not covered by any clique")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CoverReport {
    pub valid: bool,
    pub violation: Option<CoverViolation>,
}

/// Is every listed set a clique of g, and every edge of g inside some
/// listed clique? Reports the first violation: cliques are checked in
/// list order (pairs lexicographically), then edges lexicographically.
pub fn validate_cover(g: &Graph, cover: &CliqueCover) -> CoverReport {
    let bad = |violation| CoverReport {
        valid: false,
        violation: Some(violation),
    };
    if cover.n != g.n() {
        return bad(CoverViolation::SizeMismatch {
            cover_n: cover.n,
            graph_n: g.n(),
        });
    }
    for (index, clique) in cover.cliques.iter().enumerate() {
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                if !g.has_edge(u as usize, v as usize) {
                    return bad(CoverViolation::NotAClique {
                        index,
                        u: u as usize,
                        v: v as usize,
                    });
                }
            }
        }
    }
    let mut covered: Vec<BitSet> = (0..g.n()).map(|_| BitSet::new(g.n())).collect();
    for clique in &cover.cliques {
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                covered[u as usize].insert(v as usize);
                covered[v as usize].insert(u as usize);
            }
        }
    }
    for u in 0..g.n() {
        for v in g.neighbors(u).iter() {
            if v > u && !covered[u].contains(v) {
                return bad(CoverViolation::UncoveredEdge { u, v });
            }
        }
    }
    CoverReport {
        valid: true,
        violation: None,
    }
}
