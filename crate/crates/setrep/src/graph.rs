use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::seed::{bernoulli, Seed};

/// Simple undirected graph on vertices 0..n-1, stored as one adjacency
/// bitset per vertex. No self-loops, no multi-edges. Graphs are immutable
/// once built; all operations that "modify" a graph return a new one.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

impl Graph {
    /// Edgeless graph on n vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| BitSet::new(n)).collect(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::parameter(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::parameter(format!("self-loop at vertex {u}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count()).sum::<usize>() / 2
    }

    /// Edges as (u, v) pairs with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    /// Complement graph: same vertices, edge set inverted (no self-loops).
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adj[u].contains(v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced by `verts` (strictly increasing); vertex i of the
    /// result is verts[i].
    pub fn induced(&self, verts: &[usize]) -> Graph {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut max_degree = 0;
        let mut min_degree = if self.n == 0 { 0 } else { usize::MAX };
        let mut total = 0;
        for v in 0..self.n {
            let d = self.degree(v);
            max_degree = max_degree.max(d);
            min_degree = min_degree.min(d);
            total += d;
        }
        DegreeStats {
            max_degree,
            min_degree: if self.n == 0 { 0 } else { min_degree },
            edge_count: total / 2,
        }
    }

    /// Diameter via BFS from every vertex. Graphs on <= 1 vertex have
    /// diameter 0; disconnected graphs have infinite diameter.
    pub fn diameter(&self) -> Diameter {
        if self.n <= 1 {
            return Diameter::Finite(0);
        }
        let mut overall = 0;
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            dist.fill(usize::MAX);
            dist[start] = 0;
            queue.clear();
            queue.push_back(start);
            let mut reached = 1;
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        overall = overall.max(dist[v]);
                        reached += 1;
                        queue.push_back(v);
                    }
                }
            }
            if reached < self.n {
                return Diameter::Infinite;
            }
        }
        Diameter::Finite(overall)
    }

    // -- named graphs used throughout the tests and examples --

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Star K_{1,n-1} with center 0.
    pub fn star(n: usize) -> Self {
        assert!(n >= 1);
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(0, v);
        }
        g
    }

    /// t disjoint edges (a perfect matching on 2t vertices).
    pub fn matching(t: usize) -> Self {
        let mut g = Graph::empty(2 * t);
        for i in 0..t {
            g.add_edge(2 * i, 2 * i + 1);
        }
        g
    }

    /// The Petersen graph: vertices are the 2-element subsets of {0..4}
    /// in lexicographic order, adjacent iff disjoint.
    pub fn petersen() -> Self {
        let pairs = two_subsets_of_five();
        let mut g = Graph::empty(10);
        for i in 0..10 {
            for j in i + 1..10 {
                if pairs[i].0 != pairs[j].0
                    && pairs[i].0 != pairs[j].1
                    && pairs[i].1 != pairs[j].0
                    && pairs[i].1 != pairs[j].1
                {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// The 2-element subsets of {0..4} in lexicographic order; shared by the
/// Petersen constructor and the canonical Petersen representation.
pub(crate) fn two_subsets_of_five() -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(10);
    for a in 0..5 {
        for b in a + 1..5 {
            pairs.push((a, b));
        }
    }
    pairs
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub min_degree: usize,
    pub edge_count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for Diameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "infinite"),
        }
    }
}

/// Erdos-Renyi random graph G(n, p): each of the C(n, 2) pairs is an edge
/// independently with probability p. Pairs are drawn in lexicographic
/// order, one stream word per pair, so a given seed pins the graph.
pub fn gen_gnp(n: usize, p: f64, seed: &Seed) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = seed.rng();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if bernoulli(&mut rng, p) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Random bipartite graph G(n, n, p): parts of n vertices each, every
/// cross pair an edge independently with probability p.
pub fn gen_gnnp(n: usize, p: f64, seed: &Seed) -> Result<BipartiteGraph> {
    check_probability(p)?;
    let mut rng = seed.rng();
    let mut adj = Vec::with_capacity(n);
    for _ in 0..n {
        let mut row = BitSet::new(n);
        for r in 0..n {
            if bernoulli(&mut rng, p) {
                row.insert(r);
            }
        }
        adj.push(row);
    }
    Ok(BipartiteGraph { n, adj })
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::parameter(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    Ok(())
}

/// Bipartite graph with parts of equal size n; vertices of both parts are
/// labeled 0..n-1 and edges go between a left and a right vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n: usize,
    /// adj[l] = right-neighbors of left vertex l.
    adj: Vec<BitSet>,
}

impl BipartiteGraph {
    pub fn empty(n: usize) -> Self {
        BipartiteGraph {
            n,
            adj: (0..n).map(|_| BitSet::new(n)).collect(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = BipartiteGraph::empty(n);
        for (l, r) in edges {
            if l >= n || r >= n {
                return Err(Error::parameter(format!(
                    "bipartite edge ({l}, {r}) out of range for side size {n}"
                )));
            }
            g.adj[l].insert(r);
        }
        Ok(g)
    }

    pub fn side_size(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        self.adj[l].contains(r)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count()).sum()
    }

    /// Edges as (left, right) pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for l in 0..self.n {
            for r in self.adj[l].iter() {
                out.push((l, r));
            }
        }
        out
    }

    /// The same graph on 2n vertices: left vertex l stays l, right vertex
    /// r becomes n + r.
    pub fn flatten(&self) -> Graph {
        let mut g = Graph::empty(2 * self.n);
        for (l, r) in self.edges() {
            g.add_edge(l, self.n + r);
        }
        g
    }
}

impl std::fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "BipartiteGraph(n+n={}+{}, edges={:?})",
            self.n,
            self.n,
            self.edges()
        )
    }
}
