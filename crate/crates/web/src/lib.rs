use serde_json::json;
use wasm_bindgen::prelude::*;

use xdist::coloring::{default_sub_colorings, grid_pattern_coloring, layered_coloring, validate_coloring, LayeredVariant};
use xdist::families::path;
use xdist::{exact_distance_graph, product, Graph, ProductKind};

const MAX_SIDE: usize = 24;
const MAX_CUBE: usize = 10;
const SUB_BUDGET: u64 = 200_000;

fn grid(kind: &str, m: usize, p: usize) -> Result<Graph, String> {
    if !(2..=MAX_SIDE).contains(&m) {
        return Err(format!("side must be between 2 and {MAX_SIDE}"));
    }
    let kind = match kind {
        "cartesian" => ProductKind::Cartesian,
        "strong" => ProductKind::Strong,
        "direct" => ProductKind::Direct,
        other => return Err(format!("unknown product `{other}`")),
    };
    let pm = path(m).map_err(|e| e.to_string())?;
    let g = product(kind, &pm, &pm).map_err(|e| e.to_string())?;
    exact_distance_graph(&g, p).map_err(|e| e.to_string())
}

/// Neighborhoods and components of the exact distance-p graph of an m x m grid product.
pub fn grid_view_json(kind: &str, m: usize, p: usize) -> Result<String, String> {
    let g = grid(kind, m, p)?;
    let mut component = vec![0usize; g.order()];
    let comps = g.connected_components();
    for (c, vs) in comps.iter().enumerate() {
        for &v in vs {
            component[v] = c;
        }
    }
    let neighbors: Vec<Vec<usize>> = (0..g.order()).map(|v| g.neighbors(v).collect()).collect();
    Ok(json!({
        "kind": kind, "m": m, "p": p,
        "edges": g.edge_count(),
        "components": comps.len(),
        "component": component,
        "neighbors": neighbors,
    })
    .to_string())
}

/// The p x p block 4-coloring of the strong grid, checked against its distance-p graph.
pub fn grid_coloring_json(m: usize, p: usize) -> Result<String, String> {
    let g = grid("strong", m, p)?;
    let c = grid_pattern_coloring(m, p).map_err(|e| e.to_string())?;
    let verdict = validate_coloring(&g, &c).map_err(|e| e.to_string())?;
    Ok(json!({
        "m": m, "p": p,
        "colors": c.colors(),
        "proper": verdict.proper,
        "colors_used": verdict.colors_used,
        "violations": verdict.violations,
    })
    .to_string())
}

/// Level-by-level coloring of Q_n^[p]; `variant` is one of n-2, n-3, n-4/first, n-4/second.
pub fn hypercube_layered_json(n: usize, variant: &str) -> Result<String, String> {
    if n > MAX_CUBE {
        return Err(format!("dimension must be at most {MAX_CUBE}"));
    }
    let variant = match variant {
        "n-2" => LayeredVariant::NMinus2,
        "n-3" => LayeredVariant::NMinus3,
        "n-4/first" => LayeredVariant::NMinus4First,
        "n-4/second" => LayeredVariant::NMinus4Second,
        other => return Err(format!("unknown construction `{other}`")),
    };
    let subs = default_sub_colorings(n, variant, SUB_BUDGET).map_err(|e| e.to_string())?;
    let r = layered_coloring(n, variant, &subs).map_err(|e| e.to_string())?;
    let words: Vec<String> = (0..1usize << n).map(|x| format!("{x:0n$b}")).collect();
    Ok(json!({
        "n": n, "p": r.p,
        "words": words,
        "colors": r.coloring.colors(),
        "colors_used": r.colors_used,
        "rule_colors": r.rule_colors,
        "fresh_colors": r.fresh_colors,
        "uncovered_levels": r.uncovered_levels,
        "cleared_levels": r.cleared_levels,
        "proper": r.proper,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn grid_view(kind: &str, m: usize, p: usize) -> Result<String, JsValue> {
    grid_view_json(kind, m, p).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn grid_coloring(m: usize, p: usize) -> Result<String, JsValue> {
    grid_coloring_json(m, p).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn hypercube_layered(n: usize, variant: &str) -> Result<String, JsValue> {
    hypercube_layered_json(n, variant).map_err(|e| JsValue::from_str(&e))
}
