#![allow(dead_code)]

use proptest::prelude::*;
use xdist::graph::VertexLabel;
use xdist::Graph;

/// Loop-free graph on `1..=max` vertices with integer labels.
pub fn graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| from_bits(n, &bits))
    })
}

pub fn connected_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let tree = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        (tree, proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)).prop_map(move |(parents, bits)| {
            let mut g = from_bits(n, &bits);
            for (v, &u) in parents.iter().enumerate() {
                g = g.edge_union(&Graph::from_edges(n, &[(u, v + 1)], false).unwrap()).unwrap();
            }
            g
        })
    })
}

pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges, false)
        .unwrap()
        .with_labels((0..n as i64).map(VertexLabel::Int).collect())
        .unwrap()
}

/// Smallest `k` admitting a proper coloring, by plain vertex-order backtracking.
pub fn brute_chromatic(g: &Graph) -> usize {
    fn fill(g: &Graph, k: u32, v: usize, colors: &mut Vec<u32>) -> bool {
        if v == g.order() {
            return true;
        }
        for c in 1..=k {
            if (0..v).all(|u| !(g.has_edge(u, v) && colors[u] == c)) {
                colors.push(c);
                if fill(g, k, v + 1, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    (1..=g.order().max(1)).find(|&k| fill(g, k as u32, 0, &mut Vec::new())).unwrap_or(0)
}
