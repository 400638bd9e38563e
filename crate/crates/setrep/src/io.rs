//! File formats: JSON for every object, plus a plain edge-list text
//! format for graphs. Readers sniff JSON by a leading `{`.

use crate::cover::CliqueCover;
use crate::encoding::BipartiteEncoding;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::linear_space::LinearSpace;
use crate::rep::SetRepresentation;
use crate::solvers::{SolverResult, Witness};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::Path;

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn write_string(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

fn from_json_str<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(format!("invalid JSON: {e}")))
}

pub fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

// ---- graphs -------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphWire {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BipartiteWire {
    n: usize,
    sides: usize,
    edges: Vec<(usize, usize)>,
}

/// `{"n": .., "edges": [[u,v], ..]}` with u < v, sorted.
pub fn graph_to_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edges() })
}

pub fn graph_from_json_str(text: &str) -> Result<Graph> {
    let w: GraphWire = from_json_str(text)?;
    Graph::from_edges(w.n, w.edges)
}

/// Header line `n=<count>`, then one `u v` pair per line. Blank lines
/// and `#` comments are ignored.
pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn graph_from_text(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: String| Error::Format(format!("line {}: {what}", i + 1));
        if n.is_none() {
            let rest = line
                .strip_prefix("n=")
                .ok_or_else(|| bad(format!("expected header n=<count>, found {line:?}")))?;
            n = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| bad(format!("bad vertex count {rest:?}")))?,
            );
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(bad(format!("expected \"u v\", found {line:?}")));
        }
        let u = fields[0]
            .parse()
            .map_err(|_| bad(format!("bad vertex {:?}", fields[0])))?;
        let v = fields[1]
            .parse()
            .map_err(|_| bad(format!("bad vertex {:?}", fields[1])))?;
        edges.push((u, v));
    }
    let n = n.ok_or_else(|| Error::Format("graph file has no n=<count> header".into()))?;
    Graph::from_edges(n, edges)
}

pub fn graph_from_str(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        graph_from_json_str(text)
    } else {
        graph_from_text(text)
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    graph_from_str(&read_to_string(path)?)
}

/// Bipartite JSON is graph JSON plus `"sides": 2`; edges are
/// `[left, right]` with both sides labeled 0..n-1.
pub fn bipartite_to_json(g: &BipartiteGraph) -> Value {
    json!({ "n": g.side_size(), "sides": 2, "edges": g.edges() })
}

pub fn bipartite_from_str(text: &str) -> Result<BipartiteGraph> {
    let w: BipartiteWire = from_json_str(text)?;
    if w.sides != 2 {
        return Err(Error::Format(format!(
            "bipartite graphs have \"sides\": 2, found {}",
            w.sides
        )));
    }
    BipartiteGraph::from_edges(w.n, w.edges)
}

pub fn read_bipartite(path: &Path) -> Result<BipartiteGraph> {
    bipartite_from_str(&read_to_string(path)?)
}

// ---- representations ----------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepWire {
    ground_size: usize,
    sets: BTreeMap<String, Vec<u32>>,
}

/// `{"ground_size": s, "sets": {"0": [..], "1": [..], ..}}` keyed by
/// vertex index.
pub fn rep_to_json(rep: &SetRepresentation) -> Value {
    let mut sets = serde_json::Map::new();
    for v in 0..rep.n() {
        sets.insert(v.to_string(), json!(rep.set(v)));
    }
    json!({ "ground_size": rep.ground_size(), "sets": sets })
}

/// Accepts a bare representation object, or the `{"rank": ..,
/// "representation": {..}}` wrapper that constructor subcommands emit.
pub fn rep_from_str(text: &str) -> Result<SetRepresentation> {
    let v: Value = from_json_str(text)?;
    let inner = match v.get("representation") {
        Some(inner) => inner.clone(),
        None => v,
    };
    let w: RepWire =
        serde_json::from_value(inner).map_err(|e| Error::Format(format!("invalid JSON: {e}")))?;
    let n = w.sets.len();
    let mut sets: Vec<Option<Vec<u32>>> = vec![None; n];
    for (key, set) in w.sets {
        let v: usize = key
            .parse()
            .map_err(|_| Error::Format(format!("set key {key:?} is not a vertex index")))?;
        if v >= n {
            return Err(Error::Format(format!(
                "set key {v} out of range: {n} sets present, so vertices are 0..{n}"
            )));
        }
        if sets[v].replace(set).is_some() {
            return Err(Error::Format(format!("vertex {v} appears twice")));
        }
    }
    let sets = sets
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| Error::Format(format!("vertex {v} has no set"))))
        .collect::<Result<Vec<_>>>()?;
    SetRepresentation::new(w.ground_size, sets)
}

pub fn read_rep(path: &Path) -> Result<SetRepresentation> {
    rep_from_str(&read_to_string(path)?)
}

// ---- covers and linear spaces -------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoverWire {
    n: usize,
    cliques: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceWire {
    points: usize,
    lines: Vec<Vec<u32>>,
}

pub fn cover_to_json(cover: &CliqueCover) -> Value {
    json!({ "n": cover.n(), "cliques": cover.cliques() })
}

pub fn cover_from_str(text: &str) -> Result<CliqueCover> {
    let w: CoverWire = from_json_str(text)?;
    CliqueCover::new(w.n, w.cliques)
}

pub fn read_cover(path: &Path) -> Result<CliqueCover> {
    cover_from_str(&read_to_string(path)?)
}

pub fn space_to_json(ls: &LinearSpace) -> Value {
    json!({ "points": ls.points(), "lines": ls.lines() })
}

pub fn space_from_str(text: &str) -> Result<LinearSpace> {
    let w: SpaceWire = from_json_str(text)?;
    LinearSpace::new(w.points, w.lines)
}

pub fn read_space(path: &Path) -> Result<LinearSpace> {
    space_from_str(&read_to_string(path)?)
}

// ---- encodings and solver results ---------------------------------------

pub fn encoding_to_json(enc: &BipartiteEncoding) -> Value {
    serde_json::to_value(enc).expect("encoding always serializes")
}

pub fn encoding_from_str(text: &str) -> Result<BipartiteEncoding> {
    from_json_str(text)
}

pub fn read_encoding(path: &Path) -> Result<BipartiteEncoding> {
    encoding_from_str(&read_to_string(path)?)
}

/// `{"value", "exact", "nodes_explored", "witness"}`; the witness is a
/// representation object or an array of colorings, telling the two
/// apart by shape.
pub fn solver_result_to_json(r: &SolverResult) -> Value {
    let witness = match &r.witness {
        Witness::Representation(rep) => rep_to_json(rep),
        Witness::Colorings(cols) => json!(cols),
    };
    json!({
        "value": r.value,
        "exact": r.exact,
        "nodes_explored": r.nodes_explored,
        "witness": witness,
    })
}
