use crate::cover::{validate_cover, thickness, CliqueCover};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// How a family of sets encodes a graph.
///
/// * `Kneser`: all sets have size exactly k, are pairwise distinct, and
///   u ~ v iff the sets are disjoint.
/// * `Min`: u ~ v iff min(|A\B|, |B\A|) >= k.
/// * `Max`: u ~ v iff max(|A\B|, |B\A|) >= k.
/// * `Avg`: u ~ v iff |A\B| + |B\A| >= 2k, i.e. the average one-sided
///   difference is at least k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Kneser,
    Min,
    Max,
    Avg,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Mode::Kneser => "kneser",
            Mode::Min => "min",
            Mode::Max => "max",
            Mode::Avg => "avg",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "kneser" => Ok(Mode::Kneser),
            "min" => Ok(Mode::Min),
            "max" => Ok(Mode::Max),
            "avg" => Ok(Mode::Avg),
            other => Err(Error::parameter(format!(
                "unknown mode {other:?}; expected kneser, min, max, or avg"
            ))),
        }
    }
}

/// One set per vertex over a ground set 0..ground_size-1. Sets are kept
/// as strictly increasing element lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetRepresentation {
    ground_size: usize,
    sets: Vec<Vec<u32>>,
}

impl SetRepresentation {
    pub fn new(ground_size: usize, sets: Vec<Vec<u32>>) -> Result<Self> {
        let mut sets = sets;
        for (v, set) in sets.iter_mut().enumerate() {
            set.sort_unstable();
            if set.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::parameter(format!(
                    "set of vertex {v} contains a repeated element"
                )));
            }
            if let Some(&hi) = set.last() {
                if hi as usize >= ground_size {
                    return Err(Error::parameter(format!(
                        "set of vertex {v} contains element {hi}, but the ground set has size {ground_size}"
                    )));
                }
            }
        }
        Ok(SetRepresentation { ground_size, sets })
    }

    /// Number of vertices represented.
    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn set(&self, v: usize) -> &[u32] {
        &self.sets[v]
    }

    pub fn sets(&self) -> &[Vec<u32>] {
        &self.sets
    }

    /// Number of distinct ground elements actually appearing in some set.
    pub fn union_size(&self) -> usize {
        let mut used = vec![false; self.ground_size];
        for set in &self.sets {
            for &x in set {
                used[x as usize] = true;
            }
        }
        used.iter().filter(|&&u| u).count()
    }

    /// Build from atom multiplicities: each (vertex pattern, multiplicity)
    /// pair contributes that many fresh ground elements shared by exactly
    /// the pattern's vertices. Used by the exact solvers to materialize
    /// witnesses.
    pub(crate) fn from_patterns<'a, I>(n: usize, patterns: I) -> SetRepresentation
    where
        I: IntoIterator<Item = (&'a [usize], usize)>,
    {
        let mut sets = vec![Vec::new(); n];
        let mut next = 0u32;
        for (pattern, mult) in patterns {
            for _ in 0..mult {
                for &v in pattern {
                    sets[v].push(next);
                }
                next += 1;
            }
        }
        SetRepresentation {
            ground_size: next as usize,
            sets,
        }
    }
}

/// |A \ B| for strictly increasing slices.
pub(crate) fn diff_count(a: &[u32], b: &[u32]) -> usize {
    let mut count = 0;
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j >= b.len() || b[j] != x {
            count += 1;
        }
    }
    count
}

fn disjoint(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// Edge predicate on one-sided difference sizes (d_uv = |A_u \ A_v|).
pub(crate) fn difference_edge(mode: Mode, k: usize, d_uv: usize, d_vu: usize) -> bool {
    match mode {
        Mode::Kneser => unreachable!("kneser edges are decided by disjointness"),
        Mode::Min => d_uv.min(d_vu) >= k,
        Mode::Max => d_uv.max(d_vu) >= k,
        Mode::Avg => d_uv + d_vu >= 2 * k,
    }
}

fn pair_edge(mode: Mode, k: usize, a: &[u32], b: &[u32]) -> bool {
    match mode {
        Mode::Kneser => disjoint(a, b),
        _ => difference_edge(mode, k, diff_count(a, b), diff_count(b, a)),
    }
}

/// Checks the side conditions of a rank-k Kneser representation: every
/// set has size exactly k and the sets are pairwise distinct. Returns the
/// first violation in scan order.
fn kneser_side_violation(rep: &SetRepresentation, k: usize) -> Option<Violation> {
    for (v, set) in rep.sets.iter().enumerate() {
        if set.len() != k {
            return Some(Violation::SetSize {
                vertex: v,
                size: set.len(),
                expected: k,
            });
        }
    }
    for u in 0..rep.n() {
        for v in u + 1..rep.n() {
            if rep.sets[u] == rep.sets[v] {
                return Some(Violation::DuplicateSets { u, v });
            }
        }
    }
    None
}

/// The graph a representation induces under the given mode and rank.
/// In kneser mode the side conditions (exact sizes, pairwise distinct
/// sets) are enforced and their violation is an error.
pub fn induced_graph(rep: &SetRepresentation, mode: Mode, k: usize) -> Result<Graph> {
    if mode == Mode::Kneser {
        if let Some(v) = kneser_side_violation(rep, k) {
            return Err(Error::Representation(v.to_string()));
        }
    }
    let n = rep.n();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if pair_edge(mode, k, &rep.sets[u], &rep.sets[v]) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// First reason a representation fails to represent a graph.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Kneser side condition: wrong set size.
    SetSize {
        vertex: usize,
        size: usize,
        expected: usize,
    },
    /// Kneser side condition: two vertices share the same set.
    DuplicateSets { u: usize, v: usize },
    /// The pair's predicate disagrees with the graph: `expected_edge` is
    /// what the graph says, the representation says the opposite.
    PairMismatch {
        u: usize,
        v: usize,
        expected_edge: bool,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::SetSize {
                vertex,
                size,
                expected,
            } => write!(f, "vertex {vertex} has set size {size}, expected {expected}"),
            Violation::DuplicateSets { u, v } => {
                write!(f, "vertices {u} and {v} have identical sets")
            }
            Violation::PairMismatch {
                u,
                v,
                expected_edge,
            } => {
                if *expected_edge {
                    write!(f, "pair ({u}, {v}) is an edge but the sets say non-edge")
                } else {
                    write!(f, "pair ({u}, {v}) is a non-edge but the sets say edge")
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub violation: Option<Violation>,
}

impl VerifyReport {
    fn ok() -> Self {
        VerifyReport {
            valid: true,
            violation: None,
        }
    }

    fn bad(v: Violation) -> Self {
        VerifyReport {
            valid: false,
            violation: Some(v),
        }
    }
}

/// Does `rep` represent exactly `g` under (mode, k)? Size and
/// distinctness checks come first in kneser mode, then pairs are scanned
/// in lexicographic order; the first violation is reported.
pub fn verify(rep: &SetRepresentation, g: &Graph, mode: Mode, k: usize) -> Result<VerifyReport> {
    if rep.n() != g.n() {
        return Err(Error::parameter(format!(
            "representation has {} sets but the graph has {} vertices",
            rep.n(),
            g.n()
        )));
    }
    if mode == Mode::Kneser {
        if let Some(v) = kneser_side_violation(rep, k) {
            return Ok(VerifyReport::bad(v));
        }
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let says_edge = pair_edge(mode, k, &rep.sets[u], &rep.sets[v]);
            if says_edge != g.has_edge(u, v) {
                return Ok(VerifyReport::bad(Violation::PairMismatch {
                    u,
                    v,
                    expected_edge: g.has_edge(u, v),
                }));
            }
        }
    }
    Ok(VerifyReport::ok())
}

/// The co-star construction: represent g by taking, for each vertex, the
/// set of complement edges incident to it, padded with fresh dummy
/// elements to a common rank. Two vertices' sets share an element iff
/// they share a complement edge, i.e. iff they are non-adjacent in g, so
/// the result is a Kneser representation of g.
///
/// The rank is n-1-delta(g) when delta(g) <= n-3 (delta = minimum
/// degree); the degenerate cases need padding room for distinctness:
/// complete graphs get rank 1 and delta = n-2 gets rank 2. Complement
/// edge {i, j} maps to the ground element at its rank in the
/// lexicographically sorted complement edge list.
pub fn co_star(g: &Graph) -> (SetRepresentation, usize) {
    let n = g.n();
    let comp = g.complement();
    let comp_edges = comp.edges();
    let delta = g.degree_stats().min_degree;

    let rank = if comp_edges.is_empty() {
        1 // complete graph (or n <= 1): rank-1 disjoint singletons
    } else if delta + 2 >= n {
        2 // delta = n-2: sets of size <= 1 need a pad to stay distinct
    } else {
        n - 1 - delta
    };

    let mut sets: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (idx, &(u, v)) in comp_edges.iter().enumerate() {
        sets[u].push(idx as u32);
        sets[v].push(idx as u32);
    }
    let mut next = comp_edges.len() as u32;
    for set in sets.iter_mut() {
        debug_assert!(set.len() <= rank);
        while set.len() < rank {
            set.push(next);
            next += 1;
        }
    }
    let rep = SetRepresentation {
        ground_size: next as usize,
        sets,
    };
    debug_assert!(verify(&rep, g, Mode::Kneser, rank).unwrap().valid);
    (rep, rank)
}

/// Removes ground elements as long as some single element can be deleted
/// from every set containing it without changing the induced graph.
/// Candidates are tried in increasing element order, restarting from the
/// lowest element after each successful deletion, so the result is
/// deterministic. The surviving elements are compacted to 0..s'-1 in
/// their original order.
///
/// Only difference modes make sense here (deleting an element never
/// preserves exact kneser set sizes), so kneser input is rejected.
pub fn reduce(rep: &SetRepresentation, mode: Mode, k: usize) -> Result<SetRepresentation> {
    if mode == Mode::Kneser {
        return Err(Error::parameter(
            "reduce applies to difference modes (min, max, avg), not kneser",
        ));
    }
    let n = rep.n();
    let s = rep.ground_size;
    let target = induced_graph(rep, mode, k)?;

    // element -> vertices whose sets contain it (fixed under deletions of
    // other elements)
    let mut pattern: Vec<Vec<usize>> = vec![Vec::new(); s];
    for (v, set) in rep.sets.iter().enumerate() {
        for &x in set {
            pattern[x as usize].push(v);
        }
    }
    // one-sided difference matrix d[u][v] = |A_u \ A_v|, updated in place
    // as elements are deleted
    let mut d = vec![vec![0usize; n]; n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                d[u][v] = diff_count(&rep.sets[u], &rep.sets[v]);
            }
        }
    }

    let mut deleted = vec![false; s];
    let mut in_pattern = vec![false; n];
    let mut x = 0;
    while x < s {
        if deleted[x] {
            x += 1;
            continue;
        }
        if pattern[x].is_empty() {
            // unused ground element; dropped by compaction regardless
            deleted[x] = true;
            x += 1;
            continue;
        }
        for &a in &pattern[x] {
            in_pattern[a] = true;
        }
        // Deleting x from all its sets lowers d[a][b] by one exactly for
        // a in pattern, b outside; pairs inside the pattern are
        // unaffected. The graph is preserved iff every such pair keeps
        // its edge status.
        let mut safe = true;
        'check: for &a in &pattern[x] {
            for b in 0..n {
                if b == a || in_pattern[b] {
                    continue;
                }
                let keeps = difference_edge(mode, k, d[a][b] - 1, d[b][a]);
                if keeps != target.has_edge(a, b) {
                    safe = false;
                    break 'check;
                }
            }
        }
        if safe {
            deleted[x] = true;
            for &a in &pattern[x] {
                for b in 0..n {
                    if b != a && !in_pattern[b] {
                        d[a][b] -= 1;
                    }
                }
            }
        }
        for &a in &pattern[x] {
            in_pattern[a] = false;
        }
        x = if safe { 0 } else { x + 1 };
    }

    // compact the surviving elements, preserving order
    let mut relabel = vec![u32::MAX; s];
    let mut next = 0u32;
    for x in 0..s {
        if !deleted[x] {
            relabel[x] = next;
            next += 1;
        }
    }
    let sets = rep
        .sets
        .iter()
        .map(|set| {
            set.iter()
                .filter(|&&x| !deleted[x as usize])
                .map(|&x| relabel[x as usize])
                .collect()
        })
        .collect();
    let out = SetRepresentation {
        ground_size: next as usize,
        sets,
    };
    debug_assert_eq!(induced_graph(&out, mode, k)?, target);
    Ok(out)
}

/// A maximal block of ground elements contained in exactly the same sets.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Atom {
    /// Vertices whose sets contain the block, ascending.
    pub pattern: Vec<usize>,
    /// The block's elements, ascending.
    pub elements: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct AtomPartition {
    pub atoms: Vec<Atom>,
}

impl AtomPartition {
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn max_atom_size(&self) -> usize {
        self.atoms.iter().map(|a| a.elements.len()).max().unwrap_or(0)
    }
}

/// Partition of the used ground elements into atoms (maximal blocks with
/// identical membership pattern). Elements in no set are omitted. Atoms
/// are ordered by pattern, lexicographically.
pub fn atoms(rep: &SetRepresentation) -> AtomPartition {
    let mut by_pattern: std::collections::BTreeMap<Vec<usize>, Vec<u32>> =
        std::collections::BTreeMap::new();
    let mut pattern: Vec<Vec<usize>> = vec![Vec::new(); rep.ground_size];
    for (v, set) in rep.sets.iter().enumerate() {
        for &x in set {
            pattern[x as usize].push(v);
        }
    }
    for (x, pat) in pattern.into_iter().enumerate() {
        if !pat.is_empty() {
            by_pattern.entry(pat).or_default().push(x as u32);
        }
    }
    AtomPartition {
        atoms: by_pattern
            .into_iter()
            .map(|(pattern, elements)| Atom { pattern, elements })
            .collect(),
    }
}

/// Turn a clique cover of g into a Kneser representation of complement(g)
/// of rank thickness(cover) + 1: vertex v receives the indices of the
/// cliques containing it plus fresh dummy padding. Vertices share an
/// element iff they share a clique, i.e. iff they are adjacent in g, and
/// the padding (at least one fresh element per vertex) keeps all sets
/// distinct.
pub fn kneser_from_cover(g: &Graph, cover: &CliqueCover) -> Result<(SetRepresentation, usize)> {
    let report = validate_cover(g, cover);
    if let Some(v) = report.violation {
        return Err(Error::parameter(format!("invalid cover: {v}")));
    }
    let rank = thickness(cover) + 1;
    let mut sets: Vec<Vec<u32>> = vec![Vec::new(); g.n()];
    for (idx, clique) in cover.cliques().iter().enumerate() {
        for &v in clique {
            sets[v as usize].push(idx as u32);
        }
    }
    let mut next = cover.len() as u32;
    for set in sets.iter_mut() {
        while set.len() < rank {
            set.push(next);
            next += 1;
        }
    }
    let rep = SetRepresentation {
        ground_size: next as usize,
        sets,
    };
    debug_assert!(verify(&rep, &g.complement(), Mode::Kneser, rank)
        .unwrap()
        .valid);
    Ok((rep, rank))
}
