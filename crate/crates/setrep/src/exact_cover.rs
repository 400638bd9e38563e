use crate::cover::{
    chromatic_index_greedy, greedy_cover, thickness, validate_cover, CliqueColoring, CliqueCover,
    GreedyStrategy,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::seed::Seed;

/// Exact minimum thickness over all edge clique covers (theta_0), with a
/// witnessing cover. `nodes` counts branch-and-bound search nodes.
#[derive(Clone, Debug)]
pub struct CoverSolution {
    pub value: usize,
    pub cover: CliqueCover,
    pub nodes: u64,
}

/// Exact minimum number of classes over all partitions of an edge clique
/// cover into vertex-disjoint classes (theta'_0), with a witness.
#[derive(Clone, Debug)]
pub struct CoverColoringSolution {
    pub value: usize,
    pub cover: CliqueCover,
    pub coloring: CliqueColoring,
    pub nodes: u64,
}

const THETA0_LIMIT: usize = 10;
const THETA0_PRIME_LIMIT: usize = 7;

/// Shared machinery for the two exact cover searches: graphs are small
/// (n <= 10), so vertex sets are u32 masks and the uncovered edge set is
/// a u64 mask over pair ranks.
pub(crate) struct Ctx {
    pub(crate) n: usize,
    pub(crate) adj: Vec<u32>,
    pub(crate) omega: usize,
    /// all cliques of size >= 2 containing each edge, per pair rank,
    /// ordered by size descending then lexicographic vertex order
    pub(crate) candidates: Vec<Vec<u32>>,
    pub(crate) nodes: u64,
}

pub(crate) fn pair_rank(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    // edges in lexicographic order: (0,1), (0,2), ..., (n-2, n-1)
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

impl Ctx {
    pub(crate) fn new(g: &Graph) -> Ctx {
        let n = g.n();
        let adj: Vec<u32> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
            .collect();
        let omega = crate::clique::max_clique(g).len();
        let mut candidates = vec![Vec::new(); n * (n - 1) / 2];
        for u in 0..n {
            for v in u + 1..n {
                if !g.has_edge(u, v) {
                    continue;
                }
                let common = adj[u] & adj[v];
                let base = 1u32 << u | 1 << v;
                let mut cliques = Vec::new();
                // every subset of the common neighborhood that is itself
                // a clique yields a clique through (u, v); non-maximal
                // cliques matter because they load fewer vertices
                let mut subsets = vec![0u32];
                let members: Vec<usize> = (0..n).filter(|&w| common >> w & 1 == 1).collect();
                for &w in &members {
                    let prev = subsets.len();
                    for i in 0..prev {
                        let s = subsets[i];
                        if s & !adj[w] == 0 {
                            subsets.push(s | 1 << w);
                        }
                    }
                }
                for s in subsets {
                    cliques.push(base | s);
                }
                cliques.sort_by(|a, b| {
                    b.count_ones()
                        .cmp(&a.count_ones())
                        .then_with(|| mask_lex(*a).cmp(&mask_lex(*b)))
                });
                candidates[pair_rank(n, u, v)] = cliques;
            }
        }
        Ctx {
            n,
            adj,
            omega,
            candidates,
            nodes: 0,
        }
    }

    pub(crate) fn edge_mask(&self, g: &Graph) -> u64 {
        let mut mask = 0u64;
        for (u, v) in g.edges() {
            mask |= 1u64 << pair_rank(self.n, u, v);
        }
        mask
    }

    pub(crate) fn lowest_uncovered(&self, uncovered: u64) -> (usize, usize) {
        let rank = uncovered.trailing_zeros() as usize;
        let mut acc = 0;
        for u in 0..self.n {
            let row = self.n - 1 - u;
            if rank < acc + row {
                return (u, u + 1 + (rank - acc));
            }
            acc += row;
        }
        unreachable!("rank {rank} exceeds the pair count")
    }

    /// pairs of `clique_mask` as an edge mask
    pub(crate) fn clique_edges(&self, clique: u32) -> u64 {
        let mut mask = 0u64;
        let mut rest = clique;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut others = rest;
            while others != 0 {
                let v = others.trailing_zeros() as usize;
                others &= others - 1;
                mask |= 1u64 << pair_rank(self.n, u, v);
            }
        }
        mask
    }
}

/// Sort key placing lexicographically smaller vertex lists first.
pub(crate) fn mask_lex(mask: u32) -> Vec<u32> {
    let mut v = Vec::new();
    let mut m = mask;
    while m != 0 {
        v.push(m.trailing_zeros());
        m &= m - 1;
    }
    v
}

pub(crate) fn mask_vertices(mask: u32) -> Vec<u32> {
    mask_lex(mask)
}

/// Exact theta_0 by iterative deepening on the thickness bound: for each
/// candidate t, a depth-first search covers the lowest uncovered edge
/// with some clique while no vertex exceeds t cliques. Covers found this
/// way never contain a redundant clique, which is no loss: dropping
/// redundant cliques from any cover only lowers per-vertex counts.
/// Refuses graphs with more than 10 vertices.
pub fn exact_theta0(g: &Graph) -> Result<CoverSolution> {
    if g.n() > THETA0_LIMIT {
        return Err(Error::Capacity {
            what: "exact_theta0",
            n: g.n(),
            limit: THETA0_LIMIT,
        });
    }
    if g.edge_count() == 0 {
        return Ok(CoverSolution {
            value: 0,
            cover: CliqueCover::new(g.n(), vec![])?,
            nodes: 0,
        });
    }
    let greedy = greedy_cover(g, GreedyStrategy::EdgeGreedy, &Seed::new(0));
    let ub = thickness(&greedy);
    let lb = crate::cover::theta0_lower_bound(g).max(1);
    let mut ctx = Ctx::new(g);
    let all_edges = ctx.edge_mask(g);

    for t in lb..ub {
        let mut counts = vec![0usize; ctx.n];
        let mut chosen = Vec::new();
        if search_theta0(&mut ctx, all_edges, &mut counts, t, &mut chosen) {
            let cover = CliqueCover::new(
                g.n(),
                chosen.into_iter().map(mask_vertices).collect(),
            )?;
            debug_assert!(validate_cover(g, &cover).valid);
            debug_assert_eq!(thickness(&cover), t);
            return Ok(CoverSolution {
                value: t,
                cover,
                nodes: ctx.nodes,
            });
        }
    }
    Ok(CoverSolution {
        value: ub,
        cover: greedy,
        nodes: ctx.nodes,
    })
}

fn search_theta0(
    ctx: &mut Ctx,
    uncovered: u64,
    counts: &mut [usize],
    t: usize,
    chosen: &mut Vec<u32>,
) -> bool {
    ctx.nodes += 1;
    if uncovered == 0 {
        return true;
    }
    // capacity pruning: every vertex still needs ceil(uncovered degree /
    // (omega - 1)) more cliques through it
    for w in 0..ctx.n {
        let udeg = uncovered_degree(ctx, uncovered, w);
        if udeg > 0 && counts[w] + udeg.div_ceil(ctx.omega - 1) > t {
            return false;
        }
    }
    let (u, v) = ctx.lowest_uncovered(uncovered);
    let rank = pair_rank(ctx.n, u, v);
    for i in 0..ctx.candidates[rank].len() {
        let clique = ctx.candidates[rank][i];
        if mask_lex(clique)
            .iter()
            .any(|&w| counts[w as usize] >= t)
        {
            continue;
        }
        let mut m = clique;
        while m != 0 {
            counts[m.trailing_zeros() as usize] += 1;
            m &= m - 1;
        }
        chosen.push(clique);
        let next = uncovered & !ctx.clique_edges(clique);
        if search_theta0(ctx, next, counts, t, chosen) {
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

pub(crate) fn uncovered_degree(ctx: &Ctx, uncovered: u64, w: usize) -> usize {
    let mut deg = 0;
    for x in 0..ctx.n {
        if x != w {
            let (a, b) = (w.min(x), w.max(x));
            if ctx.adj[a] >> b & 1 == 1 && uncovered >> pair_rank(ctx.n, a, b) & 1 == 1 {
                deg += 1;
            }
        }
    }
    deg
}

/// Exact theta'_0: minimum k such that the edges can be covered by k
/// subgraphs whose components are all complete. Equivalently, a clique
/// cover plus an assignment of cliques to k classes with the cliques of
/// each class pairwise vertex-disjoint; the search branches on the
/// lowest uncovered edge over (clique, class) pairs. Classes that are
/// still empty are interchangeable, so only the first empty class is
/// ever tried. Refuses graphs with more than 7 vertices.
pub fn exact_theta0_prime(g: &Graph) -> Result<CoverColoringSolution> {
    if g.n() > THETA0_PRIME_LIMIT {
        return Err(Error::Capacity {
            what: "exact_theta0_prime",
            n: g.n(),
            limit: THETA0_PRIME_LIMIT,
        });
    }
    if g.edge_count() == 0 {
        return Ok(CoverColoringSolution {
            value: 0,
            cover: CliqueCover::new(g.n(), vec![])?,
            coloring: CliqueColoring {
                classes: 0,
                assignment: vec![],
            },
            nodes: 0,
        });
    }
    let greedy = greedy_cover(g, GreedyStrategy::EdgeGreedy, &Seed::new(0));
    let greedy_coloring = chromatic_index_greedy(&greedy);
    let ub = greedy_coloring.classes;
    let lb = crate::cover::theta0_lower_bound(g).max(1);
    let mut ctx = Ctx::new(g);
    let all_edges = ctx.edge_mask(g);

    for k in lb..ub {
        let mut class_used = vec![0u32; k];
        let mut chosen = Vec::new();
        if search_theta0_prime(&mut ctx, all_edges, &mut class_used, &mut chosen) {
            let cover = CliqueCover::new(
                g.n(),
                chosen.iter().map(|&(c, _)| mask_vertices(c)).collect(),
            )?;
            debug_assert!(validate_cover(g, &cover).valid);
            let assignment: Vec<usize> = chosen.iter().map(|&(_, class)| class).collect();
            let classes = assignment.iter().max().map_or(0, |&m| m + 1);
            debug_assert!(classes <= k);
            return Ok(CoverColoringSolution {
                value: k,
                cover,
                coloring: CliqueColoring {
                    classes: k,
                    assignment,
                },
                nodes: ctx.nodes,
            });
        }
    }
    Ok(CoverColoringSolution {
        value: ub,
        cover: greedy,
        coloring: greedy_coloring,
        nodes: ctx.nodes,
    })
}

fn search_theta0_prime(
    ctx: &mut Ctx,
    uncovered: u64,
    class_used: &mut [u32],
    chosen: &mut Vec<(u32, usize)>,
) -> bool {
    ctx.nodes += 1;
    if uncovered == 0 {
        return true;
    }
    let k = class_used.len();
    // a vertex's future cliques need pairwise distinct classes avoiding
    // the classes that already use the vertex
    for w in 0..ctx.n {
        let udeg = uncovered_degree(ctx, uncovered, w);
        if udeg > 0 {
            let avail = class_used.iter().filter(|&&m| m >> w & 1 == 0).count();
            if udeg.div_ceil(ctx.omega - 1) > avail {
                return false;
            }
        }
    }
    let (u, v) = ctx.lowest_uncovered(uncovered);
    let rank = pair_rank(ctx.n, u, v);
    for i in 0..ctx.candidates[rank].len() {
        let clique = ctx.candidates[rank][i];
        let mut tried_empty = false;
        for class in 0..k {
            if class_used[class] == 0 {
                if tried_empty {
                    continue; // empty classes are interchangeable
                }
                tried_empty = true;
            }
            if class_used[class] & clique != 0 {
                continue;
            }
            class_used[class] |= clique;
            chosen.push((clique, class));
            let next = uncovered & !ctx.clique_edges(clique);
            if search_theta0_prime(ctx, next, class_used, chosen) {
                return true;
            }
            chosen.pop();
            class_used[class] &= !clique;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta0_named_graphs() {
        assert_eq!(exact_theta0(&Graph::complete(6)).unwrap().value, 1);
        assert_eq!(exact_theta0(&Graph::cycle(5)).unwrap().value, 2);
        assert_eq!(exact_theta0(&Graph::petersen()).unwrap().value, 3);
        assert_eq!(exact_theta0(&Graph::empty(4)).unwrap().value, 0);
        assert_eq!(exact_theta0(&Graph::star(5)).unwrap().value, 4);
    }

    #[test]
    fn theta0_capacity_guard() {
        let big = Graph::empty(11);
        assert!(matches!(
            exact_theta0(&big),
            Err(Error::Capacity { limit: 10, .. })
        ));
    }

    #[test]
    fn theta0_witness_is_a_cover_of_claimed_thickness() {
        for n in 2..=6usize {
            for trial in 0..20u64 {
                let g =
                    crate::graph::gen_gnp(n, 0.5, &Seed::new(trial * 31 + n as u64)).unwrap();
                let sol = exact_theta0(&g).unwrap();
                assert!(validate_cover(&g, &sol.cover).valid);
                assert_eq!(thickness(&sol.cover), sol.value);
                assert!(sol.value >= crate::cover::theta0_lower_bound(&g));
            }
        }
    }

    /// Independent check on 4-vertex graphs: enumerate all multisets of
    /// cliques up to a small depth and take the best thickness.
    fn theta0_bruteforce(g: &Graph) -> usize {
        let n = g.n();
        let mut cliques: Vec<Vec<usize>> = Vec::new();
        for mask in 1u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if verts.len() >= 2
                && verts
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
            {
                cliques.push(verts);
            }
        }
        let edges = g.edges();
        if edges.is_empty() {
            return 0;
        }
        // at most one clique per edge is ever needed
        let mut best = usize::MAX;
        let mut stack: Vec<usize> = Vec::new();
        fn rec(
            cliques: &[Vec<usize>],
            edges: &[(usize, usize)],
            n: usize,
            stack: &mut Vec<usize>,
            best: &mut usize,
        ) {
            let covered = |u: usize, v: usize, stack: &[usize]| {
                stack
                    .iter()
                    .any(|&c| cliques[c].contains(&u) && cliques[c].contains(&v))
            };
            if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !covered(u, v, stack)) {
                for (ci, c) in cliques.iter().enumerate() {
                    if c.contains(&u) && c.contains(&v) {
                        stack.push(ci);
                        rec(cliques, edges, n, stack, best);
                        stack.pop();
                    }
                }
            } else {
                let mut counts = vec![0usize; n];
                for &c in stack.iter() {
                    for &v in &cliques[c] {
                        counts[v] += 1;
                    }
                }
                *best = (*best).min(counts.into_iter().max().unwrap());
            }
        }
        rec(&cliques, &edges, n, &mut stack, &mut best);
        best
    }

    #[test]
    fn theta0_matches_bruteforce_on_all_four_vertex_graphs() {
        for mask in 0u32..64 {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(4, edges).unwrap();
            assert_eq!(
                exact_theta0(&g).unwrap().value,
                theta0_bruteforce(&g),
                "mismatch on {g:?}"
            );
        }
    }

    #[test]
    fn theta0_prime_named_graphs() {
        assert_eq!(exact_theta0_prime(&Graph::complete(4)).unwrap().value, 1);
        assert_eq!(exact_theta0_prime(&Graph::path(3)).unwrap().value, 2);
        assert_eq!(exact_theta0_prime(&Graph::cycle(5)).unwrap().value, 3);
        assert_eq!(exact_theta0_prime(&Graph::empty(5)).unwrap().value, 0);
        assert_eq!(exact_theta0_prime(&Graph::matching(3)).unwrap().value, 1);
    }

    #[test]
    fn theta0_prime_capacity_guard() {
        assert!(matches!(
            exact_theta0_prime(&Graph::empty(8)),
            Err(Error::Capacity { limit: 7, .. })
        ));
    }

    #[test]
    fn theta0_prime_witness_classes_are_disjoint_covers() {
        for trial in 0..30u64 {
            let g = crate::graph::gen_gnp(6, 0.5, &Seed::new(4000 + trial)).unwrap();
            let sol = exact_theta0_prime(&g).unwrap();
            assert!(validate_cover(&g, &sol.cover).valid);
            assert!(sol.coloring.classes <= sol.value);
            assert!(sol.value >= exact_theta0(&g).unwrap().value);
            for class in 0..sol.coloring.classes {
                let mut seen = vec![false; g.n()];
                for (i, clique) in sol.cover.cliques().iter().enumerate() {
                    if sol.coloring.assignment[i] == class {
                        for &v in clique {
                            assert!(!seen[v as usize]);
                            seen[v as usize] = true;
                        }
                    }
                }
            }
        }
    }
}
