//! Seeded random and structured graphs for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::families::{complete, cycle, edgeless, hypercube, path, star};
use crate::graph::{Graph, VertexLabel};

pub const DENSITIES: [f64; 3] = [0.25, 0.5, 0.75];
pub const DEFAULT_SEED: u64 = 20_190_611;

/// Erdős–Rényi graph on `n` vertices with edge probability `density`, integer labels.
pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let g = Graph::from_fn(n, |_, _| rng.gen_bool(density));
    g.with_labels((0..n as i64).map(VertexLabel::Int).collect())
        .expect("integer labels are distinct")
}

/// Paths, cycles, stars, complete graphs, hypercubes and edgeless graphs with at most `max_order` vertices.
pub fn structured_graphs(max_order: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(path(n).expect("n >= 1"));
        if n >= 3 {
            out.push(cycle(n).expect("n >= 3"));
        }
        if n >= 4 {
            out.push(star(n).expect("n >= 1"));
        }
        out.push(complete(n).expect("n >= 1"));
    }
    for d in 1..=3 {
        if 1 << d <= max_order {
            out.push(hypercube(d).expect("small hypercube"));
        }
    }
    out.push(edgeless(2.min(max_order).max(1)).expect("n >= 1"));
    out
}

/// `count` graphs: structured graphs first, then random ones cycling through [`DENSITIES`].
pub fn graph_corpus(seed: u64, count: usize, max_order: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Graph> = structured_graphs(max_order).into_iter().take(count / 2).collect();
    let mut i = 0;
    while out.len() < count {
        let n = rng.gen_range(1..=max_order);
        out.push(random_graph(&mut rng, n, DENSITIES[i % DENSITIES.len()]));
        i += 1;
    }
    out
}

/// `count` factor pairs: a quarter drawn from the structured graphs, the rest random.
pub fn pair_corpus(seed: u64, count: usize, max_order: usize) -> Vec<(Graph, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds = structured_graphs(max_order);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        if i < count / 4 {
            let a = seeds[rng.gen_range(0..seeds.len())].clone();
            let b = seeds[rng.gen_range(0..seeds.len())].clone();
            out.push((a, b));
        } else {
            let d = DENSITIES[i % DENSITIES.len()];
            let (n, m) = (rng.gen_range(1..=max_order), rng.gen_range(1..=max_order));
            let a = random_graph(&mut rng, n, d);
            let b = random_graph(&mut rng, m, d);
            out.push((a, b));
        }
    }
    out
}

/// Erdős–Rényi graph from a seed alone.
pub fn seeded_random_graph(seed: u64, n: usize, density: f64) -> Graph {
    random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, density)
}

/// `count` random pairs with orders in `min_order..=max_order` accepted by `keep`, densities
/// cycling through [`DENSITIES`]. Gives up after `1000 * count` draws and returns what it has.
pub fn random_pairs(
    seed: u64,
    count: usize,
    min_order: usize,
    max_order: usize,
    keep: impl Fn(&Graph, &Graph) -> bool,
) -> Vec<(Graph, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut draws = 0;
    while out.len() < count && draws < 1000 * count.max(1) {
        let d = DENSITIES[draws % DENSITIES.len()];
        draws += 1;
        let (n, m) = (rng.gen_range(min_order..=max_order), rng.gen_range(min_order..=max_order));
        let g = random_graph(&mut rng, n, d);
        let h = random_graph(&mut rng, m, d);
        if keep(&g, &h) {
            out.push((g, h));
        }
    }
    out
}

/// Random connected graph on `n` vertices: a random spanning tree plus edges of probability `density`.
pub fn random_connected(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges, false)
        .expect("endpoints in range")
        .with_labels((0..n as i64).map(VertexLabel::Int).collect())
        .expect("integer labels are distinct")
}
