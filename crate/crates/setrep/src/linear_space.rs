use crate::cover::{greedy_cover, CliqueCover, GreedyStrategy};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::seed::{sample_indices, Seed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Incidence structure on points 0..points-1 where the intent is that
/// every pair of points lies on exactly one line (L1) and every line has
/// at least two points (L2). The constructor checks only well-formedness;
/// the axioms themselves are checked by `validate_linear_space`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearSpace {
    points: usize,
    lines: Vec<Vec<u32>>,
}

impl LinearSpace {
    pub fn new(points: usize, lines: Vec<Vec<u32>>) -> Result<LinearSpace> {
        let mut sorted = Vec::with_capacity(lines.len());
        for (i, line) in lines.into_iter().enumerate() {
            let mut line = line;
            line.sort_unstable();
            if line.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::parameter(format!("line {i} repeats a point")));
            }
            if let Some(&p) = line.last() {
                if p as usize >= points {
                    return Err(Error::parameter(format!(
                        "line {i} mentions point {p}, but there are only {points} points"
                    )));
                }
            }
            sorted.push(line);
        }
        Ok(LinearSpace {
            points,
            lines: sorted,
        })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn lines(&self) -> &[Vec<u32>] {
        &self.lines
    }

    pub fn stats(&self) -> LinearSpaceStats {
        let mut degree = vec![0usize; self.points];
        let mut max_line_size = 0;
        for line in &self.lines {
            max_line_size = max_line_size.max(line.len());
            for &p in line {
                degree[p as usize] += 1;
            }
        }
        LinearSpaceStats {
            points: self.points,
            lines: self.lines.len(),
            max_line_size,
            max_point_degree: degree.into_iter().max().unwrap_or(0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LinearSpaceStats {
    pub points: usize,
    pub lines: usize,
    pub max_line_size: usize,
    pub max_point_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceViolation {
    /// a line with fewer than two points (L2)
    ShortLine { line: usize },
    /// a point pair on no line (L1)
    PairUncovered { u: usize, v: usize },
    /// a point pair on two or more lines (L1)
    PairMultiplyCovered { u: usize, v: usize },
}

impl std::fmt::Display for SpaceViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpaceViolation::ShortLine { line } => {
                write!(f, "line {line} has fewer than 2 points")
            }
            SpaceViolation::PairUncovered { u, v } => {
                write!(f, "points {u} and {v} lie on no common line")
            }
            SpaceViolation::PairMultiplyCovered { u, v } => {
                write!(f, "points {u} and {v} lie on more than one line")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SpaceReport {
    pub valid: bool,
    pub violation: Option<SpaceViolation>,
}

/// Checks L1 (every pair on exactly one line) and L2 (every line has at
/// least two points) exhaustively, reporting the first failure: short
/// lines in line order, then pair failures in lexicographic order.
pub fn validate_linear_space(ls: &LinearSpace) -> SpaceReport {
    for (i, line) in ls.lines.iter().enumerate() {
        if line.len() < 2 {
            return SpaceReport {
                valid: false,
                violation: Some(SpaceViolation::ShortLine { line: i }),
            };
        }
    }
    let n = ls.points;
    let mut seen = vec![0u8; n * n];
    for line in &ls.lines {
        for (i, &u) in line.iter().enumerate() {
            for &v in &line[i + 1..] {
                let slot = &mut seen[u as usize * n + v as usize];
                *slot = slot.saturating_add(1);
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            match seen[u * n + v] {
                0 => {
                    return SpaceReport {
                        valid: false,
                        violation: Some(SpaceViolation::PairUncovered { u, v }),
                    }
                }
                1 => {}
                _ => {
                    return SpaceReport {
                        valid: false,
                        violation: Some(SpaceViolation::PairMultiplyCovered { u, v }),
                    }
                }
            }
        }
    }
    SpaceReport {
        valid: true,
        violation: None,
    }
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The affine plane AG(2,q) for prime q: points are pairs (x, y) over
/// the field of q elements, encoded as x*q + y; lines are the q^2 graphs
/// of y = m*x + b plus the q verticals x = c. Only primes are accepted,
/// which keeps the arithmetic to modular integers. For point counts that
/// are not squares of primes, see `linear_space_for`.
pub fn affine_plane(q: usize) -> Result<LinearSpace> {
    if !is_prime(q) {
        return Err(Error::parameter(format!("{q} is not prime")));
    }
    let mut lines = Vec::with_capacity(q * q + q);
    for m in 0..q {
        for b in 0..q {
            lines.push(
                (0..q)
                    .map(|x| (x * q + (m * x + b) % q) as u32)
                    .collect::<Vec<u32>>(),
            );
        }
    }
    for c in 0..q {
        lines.push((0..q).map(|y| (c * q + y) as u32).collect());
    }
    let ls = LinearSpace::new(q * q, lines)?;
    debug_assert!(validate_linear_space(&ls).valid);
    Ok(ls)
}

/// Restriction to a point subset: lines become traces with >= 2 points,
/// points are relabeled 0..keep.len()-1 in ascending order of the old
/// labels. Any kept pair whose trace collapsed below 2 points gets an
/// explicit 2-point line so L1 survives even for imperfect inputs; for a
/// valid input space this never fires, because the unique line through a
/// kept pair keeps both points.
pub fn restrict_to_points(ls: &LinearSpace, keep: &[usize]) -> Result<LinearSpace> {
    if keep.is_empty() {
        return Err(Error::parameter("cannot restrict to zero points"));
    }
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    if keep.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::parameter("kept points repeat"));
    }
    if *keep.last().unwrap() >= ls.points {
        return Err(Error::parameter(format!(
            "kept point {} out of range (space has {} points)",
            keep.last().unwrap(),
            ls.points
        )));
    }
    let mut relabel = vec![usize::MAX; ls.points];
    for (new, &old) in keep.iter().enumerate() {
        relabel[old] = new;
    }
    let n = keep.len();
    let mut lines: Vec<Vec<u32>> = Vec::new();
    let mut covered = vec![false; n * n];
    for line in &ls.lines {
        let trace: Vec<u32> = line
            .iter()
            .filter(|&&p| relabel[p as usize] != usize::MAX)
            .map(|&p| relabel[p as usize] as u32)
            .collect();
        if trace.len() >= 2 {
            for (i, &u) in trace.iter().enumerate() {
                for &v in &trace[i + 1..] {
                    covered[u as usize * n + v as usize] = true;
                }
            }
            lines.push(trace);
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if !covered[u * n + v] {
                lines.push(vec![u as u32, v as u32]);
            }
        }
    }
    LinearSpace::new(n, lines)
}

/// A linear space on n points: the affine plane over the smallest prime
/// q with q^2 >= n, restricted to a random n-subset of its points. Every
/// point ends up on at most q+1 lines of size at most q, both within a
/// constant of sqrt(n).
pub fn linear_space_for(n: usize, seed: &Seed) -> Result<LinearSpace> {
    if n < 2 {
        return Err(Error::parameter(format!(
            "need at least 2 points, got {n}"
        )));
    }
    let mut q = (n as f64).sqrt().ceil() as usize;
    while !is_prime(q) || q * q < n {
        q += 1;
    }
    let plane = affine_plane(q)?;
    if q * q == n {
        return Ok(plane);
    }
    let mut rng = seed.rng();
    let keep = sample_indices(&mut rng, q * q, n);
    restrict_to_points(&plane, &keep)
}

/// Per-line covers: for each line L of the space, a greedy clique cover
/// of the induced subgraph g[L], with cliques mapped back to the labels
/// of g. Lines run in parallel; line i covers under seed.child(i), so
/// the result does not depend on the parallel schedule.
pub fn linear_space_cover_parts(
    g: &Graph,
    ls: &LinearSpace,
    inner: GreedyStrategy,
    seed: &Seed,
) -> Result<Vec<Vec<Vec<u32>>>> {
    if ls.points != g.n() {
        return Err(Error::parameter(format!(
            "space has {} points but the graph has {} vertices",
            ls.points,
            g.n()
        )));
    }
    let parts: Vec<Vec<Vec<u32>>> = ls
        .lines
        .par_iter()
        .enumerate()
        .map(|(i, line)| {
            let verts: Vec<usize> = line.iter().map(|&p| p as usize).collect();
            let sub = g.induced(&verts);
            let cover = greedy_cover(&sub, inner, &seed.child(i as u64));
            cover
                .cliques()
                .iter()
                .map(|clique| clique.iter().map(|&v| verts[v as usize] as u32).collect())
                .collect()
        })
        .collect();
    Ok(parts)
}

/// Union of the per-line covers, in line order. L1 puts every edge of g
/// inside exactly one line, so the union covers every edge.
pub fn linear_space_cover(
    g: &Graph,
    ls: &LinearSpace,
    inner: GreedyStrategy,
    seed: &Seed,
) -> Result<CliqueCover> {
    let parts = linear_space_cover_parts(g, ls, inner, seed)?;
    let cover = CliqueCover::new(g.n(), parts.into_iter().flatten().collect())?;
    debug_assert!(crate::cover::validate_cover(g, &cover).valid);
    Ok(cover)
}
