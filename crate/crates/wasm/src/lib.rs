//! Browser bindings. Each export takes plain strings and numbers and returns a JSON string;
//! errors come back as JS exceptions carrying the message.

use indsublab::canon::{from_graph6, to_graph6};
use indsublab::enumerator::alternating_enumerator;
use indsublab::reductions::{count_cliques_via_indsub, find_witness_graph};
use indsublab::sylow::SylowLattice;
use indsublab::util::Rational;
use indsublab::{canonical_key, Graph, GraphParameter};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const MAX_ENUM_EDGES: usize = 16;
const MAX_PIPELINE_N: usize = 6;
const MAX_LATTICE_N: usize = 9;

/// Either graph6, or `n: u-v u-v ...` with `n` optional (then it is one past the largest vertex).
pub fn parse_graph(text: &str) -> Result<Graph, String> {
    let text = text.trim();
    if !text.contains('-') && !text.contains(':') && !text.is_empty() {
        return from_graph6(text).map_err(|e| e.to_string());
    }
    let (n, rest) = match text.split_once(':') {
        Some((n, rest)) => (Some(n.trim().parse::<usize>().map_err(|_| format!("bad vertex count {n:?}"))?), rest),
        None => (None, text),
    };
    let mut edges = Vec::new();
    for tok in rest.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let (u, v) = tok.split_once('-').ok_or_else(|| format!("bad edge {tok:?}"))?;
        let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("bad edge {tok:?}"));
        edges.push((parse(u)?, parse(v)?));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::new(n, &edges).map_err(|e| e.to_string())
}

fn edges_json(g: &Graph) -> Value {
    json!(g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())
}

/// `χ̂(Φ, G)` plus the sums of `Φ` over the edge subsets of each size.
pub fn enumerator_report(phi: &str, graph: &str) -> Result<String, String> {
    let phi = GraphParameter::parse(phi).map_err(|e| e.to_string())?;
    let g = parse_graph(graph)?;
    let edges = g.edges();
    if edges.len() > MAX_ENUM_EDGES {
        return Err(format!("{} edges; the demo stops at {MAX_ENUM_EDGES}", edges.len()));
    }
    let mut by_size = vec![Rational::from_integer(0.into()); edges.len() + 1];
    for mask in 0u64..1 << edges.len() {
        by_size[mask.count_ones() as usize] += phi.evaluate(&g.edge_subgraph_mask(&edges, mask)).map_err(|e| e.to_string())?;
    }
    let value = alternating_enumerator(&phi, &g).map_err(|e| e.to_string())?;
    let key = canonical_key(&g).map(|k| k.to_string()).unwrap_or_else(|_| to_graph6(&g));
    Ok(json!({
        "graph6": to_graph6(&g),
        "canonical": key,
        "n": g.n(),
        "edges": edges_json(&g),
        "by_size": by_size.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "value": value.to_string(),
    })
    .to_string())
}

/// The Sylow fixed-point lattice of `K_{p^m}`.
pub fn lattice_report(p: usize, m: usize) -> Result<String, String> {
    let n = p.checked_pow(m as u32).unwrap_or(usize::MAX);
    if n > MAX_LATTICE_N {
        return Err(format!("K_{n} is past the demo limit of {MAX_LATTICE_N} vertices"));
    }
    let syl = SylowLattice::build(p, m).map_err(|e| e.to_string())?;
    let points: Vec<Value> = syl
        .points
        .iter()
        .map(|(pt, _)| {
            let g = pt.graph();
            json!({
                "tuple": (0..m).map(|i| pt.set(i)).collect::<Vec<_>>(),
                "graph6": to_graph6(&g),
                "edges": edges_json(&g),
                "level": pt.level(),
                "empty_prefix": pt.empty_prefix(),
            })
        })
        .collect();
    Ok(json!({ "p": p, "m": m, "n": n, "orbits": syl.lattice.orbit_count(), "points": points }).to_string())
}

/// Counts `l`-cliques through the IndSub-oracle pipeline and by brute force.
pub fn pipeline_report(l: usize, phi: &str, graph: &str) -> Result<String, String> {
    let phi = GraphParameter::parse(phi).map_err(|e| e.to_string())?;
    let g = parse_graph(graph)?;
    if g.n() > MAX_PIPELINE_N {
        return Err(format!("{} vertices; the demo stops at {MAX_PIPELINE_N}", g.n()));
    }
    let f = find_witness_graph(&phi, l, None)
        .map_err(|e| e.to_string())?
        .ok_or_else(|| format!("no pattern on at most 6 vertices contains K_{{{l},{l}}} with a nonzero enumerator"))?;
    let rep = count_cliques_via_indsub(l, &phi, &f, &g).map_err(|e| e.to_string())?;
    Ok(json!({
        "count": rep.count.to_string(),
        "direct": g.count_cliques(l).to_string(),
        "f": to_graph6(&f),
        "f_edges": edges_json(&f),
        "f_n": f.n(),
        "oracle_calls": rep.oracle_calls,
        "max_query_size": rep.max_query_size,
        "size_bound": rep.size_bound,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn enumerator(phi: &str, graph: &str) -> Result<String, JsError> {
    enumerator_report(phi, graph).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn lattice(p: usize, m: usize) -> Result<String, JsError> {
    lattice_report(p, m).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn pipeline(l: usize, phi: &str, graph: &str) -> Result<String, JsError> {
    pipeline_report(l, phi, graph).map_err(|e| JsError::new(&e))
}
