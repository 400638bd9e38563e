use crate::bitset::BitSet;
use crate::graph::Graph;

/// Result of a budgeted maximum-clique search. When `exact` is false the
/// search ran out of its node budget and `vertices` is only the best
/// clique found so far (still a valid clique, and at least as large as a
/// greedy one).
#[derive(Clone, Debug)]
pub struct CliqueEstimate {
    pub vertices: Vec<usize>,
    pub exact: bool,
    pub nodes: u64,
}

/// Maximum clique, exact. Branch and bound with a greedy-coloring upper
/// bound; intended for graphs up to a few thousand vertices at random
/// density. Among all maximum cliques the lexicographically smallest
/// vertex set is returned, so results are stable across runs.
/// The empty graph on n >= 1 vertices has clique number 1; n = 0 gives
/// the empty clique.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let est = search(g, u64::MAX);
    debug_assert!(est.exact);
    lex_min_refine(g, est.vertices.len())
}

/// Maximum-clique search that gives up after `node_budget` search nodes.
/// The budget is a deterministic proxy for a time limit: identical inputs
/// explore identical trees on every platform, so truncated results are
/// reproducible. No lexicographic refinement is applied; callers use this
/// for clique-number estimates, not canonical witnesses.
pub fn max_clique_budgeted(g: &Graph, node_budget: u64) -> CliqueEstimate {
    search(g, node_budget)
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
    /// When set, stop as soon as a clique of this size is found.
    target: Option<usize>,
}

fn search(g: &Graph, budget: u64) -> CliqueEstimate {
    let n = g.n();
    if n == 0 {
        return CliqueEstimate {
            vertices: vec![],
            exact: true,
            nodes: 0,
        };
    }
    let mut s = Search {
        g,
        best: greedy_clique(g),
        current: Vec::new(),
        nodes: 0,
        budget,
        exhausted: false,
        target: None,
    };
    let mut cand = BitSet::new(n);
    for v in 0..n {
        cand.insert(v);
    }
    s.expand(&cand);
    CliqueEstimate {
        vertices: s.best,
        exact: !s.exhausted,
        nodes: s.nodes,
    }
}

/// Greedy clique used to prime the incumbent: repeatedly add the
/// highest-degree candidate (ties to the lowest index).
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return vec![];
    }
    let mut cand = BitSet::new(n);
    for v in 0..n {
        cand.insert(v);
    }
    let mut clique = Vec::new();
    while let Some(first) = cand.first() {
        let mut pick = first;
        let mut pick_deg = g.neighbors(first).intersection_count(&cand);
        for v in cand.iter().skip(1) {
            let d = g.neighbors(v).intersection_count(&cand);
            if d > pick_deg {
                pick = v;
                pick_deg = d;
            }
        }
        clique.push(pick);
        cand.intersect_with(g.neighbors(pick));
    }
    clique.sort_unstable();
    clique
}

impl Search<'_> {
    fn expand(&mut self, cand: &BitSet) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return true; // unwind
        }
        // Greedy coloring of the candidate set; color(v) bounds the size
        // of any clique inside cand that contains v as its highest-color
        // member, so |current| + color(v) bounds cliques extending v.
        let order = color_order(self.g, cand);
        let mut cand = cand.clone();
        for &(v, color) in order.iter().rev() {
            if self.current.len() + color <= self.best_floor() {
                return false; // every remaining vertex has a lower color
            }
            cand.remove(v);
            self.current.push(v);
            let mut next = cand.clone();
            next.intersect_with(self.g.neighbors(v));
            if self.current.len() > self.best_floor() && self.improves() {
                self.record();
                if self.target.is_some_and(|t| self.best.len() >= t) {
                    self.current.pop();
                    return true;
                }
            }
            if !next.is_empty() && self.expand(&next) {
                self.current.pop();
                return true;
            }
            self.current.pop();
        }
        false
    }

    fn best_floor(&self) -> usize {
        match self.target {
            // In decision mode, prune anything that cannot reach target.
            Some(t) => t - 1,
            None => self.best.len(),
        }
    }

    fn improves(&self) -> bool {
        match self.target {
            Some(t) => self.current.len() >= t,
            None => self.current.len() > self.best.len(),
        }
    }

    fn record(&mut self) {
        self.best = self.current.clone();
        self.best.sort_unstable();
    }
}

/// Candidates paired with greedy color classes (1-based), sorted by color
/// ascending; vertices inside a class are taken in ascending index order,
/// making the whole search deterministic.
fn color_order(g: &Graph, cand: &BitSet) -> Vec<(usize, usize)> {
    let mut order = Vec::with_capacity(cand.count());
    let mut uncolored = cand.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.first() {
            order.push((v, color));
            uncolored.remove(v);
            avail.remove(v);
            avail.subtract(g.neighbors(v));
        }
    }
    order
}

/// Lexicographically smallest maximum clique, given the clique number:
/// grow a prefix, at each step keeping the smallest vertex that still
/// allows a clique of size omega through the prefix.
fn lex_min_refine(g: &Graph, omega: usize) -> Vec<usize> {
    let n = g.n();
    let mut prefix: Vec<usize> = Vec::with_capacity(omega);
    let mut cand = BitSet::new(n);
    for v in 0..n {
        cand.insert(v);
    }
    while prefix.len() < omega {
        let mut chosen = None;
        for v in cand.to_vec() {
            let mut rest = cand.clone();
            rest.remove(v);
            rest.intersect_with(g.neighbors(v));
            let need = omega - prefix.len() - 1;
            if need == 0 || clique_of_size_exists(g, &rest, need) {
                chosen = Some((v, rest));
                break;
            }
        }
        let (v, rest) = chosen.expect("a maximum clique must exist");
        prefix.push(v);
        cand = rest;
    }
    prefix
}

fn clique_of_size_exists(g: &Graph, cand: &BitSet, size: usize) -> bool {
    if cand.count() < size {
        return false;
    }
    let mut s = Search {
        g,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget: u64::MAX,
        exhausted: false,
        target: Some(size),
    };
    s.expand(cand);
    s.best.len() >= size
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::seed::Seed;

    /// Exhaustive maximum clique by subset enumeration; independent oracle
    /// for graphs up to ~20 vertices.
    fn max_clique_bruteforce(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if verts.len() > best
                && verts
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
            {
                best = verts.len();
            }
        }
        best
    }

    #[test]
    fn clique_on_named_graphs() {
        assert_eq!(max_clique(&Graph::complete(6)).len(), 6);
        assert_eq!(max_clique(&Graph::cycle(5)), vec![0, 1]);
        assert_eq!(max_clique(&Graph::petersen()).len(), 2);
        assert_eq!(max_clique(&Graph::empty(4)), vec![0]);
        assert_eq!(max_clique(&Graph::empty(0)), Vec::<usize>::new());
    }

    #[test]
    fn matches_bruteforce_on_random_graphs() {
        for trial in 0..40 {
            let p = 0.2 + 0.6 * (trial % 5) as f64 / 4.0;
            let g = crate::graph::gen_gnp(12, p, &Seed::new(500 + trial as u64)).unwrap();
            let found = max_clique(&g);
            // the returned set really is a clique
            for (i, &u) in found.iter().enumerate() {
                for &v in &found[i + 1..] {
                    assert!(g.has_edge(u, v));
                }
            }
            assert_eq!(found.len(), max_clique_bruteforce(&g), "{g:?}");
        }
    }

    #[test]
    fn returns_lexicographically_smallest() {
        // two maximum cliques: {1, 2, 3} and {2, 3, 4}; also {0, 4} edges
        let g = Graph::from_edges(
            5,
            [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (0, 4)],
        )
        .unwrap();
        assert_eq!(max_clique(&g), vec![1, 2, 3]);
    }

    #[test]
    fn no_neighbor_extends_result() {
        let g = crate::graph::gen_gnp(60, 0.5, &Seed::new(81)).unwrap();
        let clique = max_clique(&g);
        for v in 0..60 {
            if !clique.contains(&v) {
                assert!(
                    !clique.iter().all(|&u| g.has_edge(u, v)),
                    "vertex {v} extends the clique"
                );
            }
        }
    }

    #[test]
    fn budgeted_search_is_deterministic_and_flagged() {
        let g = crate::graph::gen_gnp(100, 0.6, &Seed::new(17)).unwrap();
        let a = max_clique_budgeted(&g, 50);
        let b = max_clique_budgeted(&g, 50);
        assert_eq!(a.vertices, b.vertices);
        assert_eq!(a.nodes, b.nodes);
        assert!(!a.exact, "tiny budget should not finish n=100 p=0.6");
        assert!(!a.vertices.is_empty());
        let full = max_clique_budgeted(&g, u64::MAX);
        assert!(full.exact);
        assert!(full.vertices.len() >= a.vertices.len());
    }
}
