//! Labeled generators for paths, cycles, hypercubes and Johnson/Kneser graphs.
//!
//! Vertex orders are fixed: integers ascending, bit strings in numeric order,
//! subsets in colexicographic order (which is numeric order of their masks).
//! Subsets and bit strings share one encoding, so level `L_j` of `Q_n` lists
//! exactly the vertices of `J(n, j, ·)` in the same order.

use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexLabel};
use crate::products::{product, ProductKind};

pub const DEFAULT_HYPERCUBE_LIMIT: usize = 14;

fn int_labels(n: usize) -> Vec<VertexLabel> {
    (0..n as i64).map(VertexLabel::Int).collect()
}

fn labeled(g: Graph, labels: Vec<VertexLabel>) -> Graph {
    let mut g = g;
    g.set_labels_unchecked(Some(labels));
    g
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs at least one vertex"));
    }
    Ok(labeled(Graph::from_fn(n, |u, v| v == u + 1), int_labels(n)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs at least three vertices"));
    }
    Ok(labeled(Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)), int_labels(n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete graph needs at least one vertex"));
    }
    Ok(labeled(Graph::from_fn(n, |_, _| true), int_labels(n)))
}

pub fn edgeless(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("edgeless graph needs at least one vertex"));
    }
    Ok(labeled(Graph::empty(n, false), int_labels(n)))
}

/// Star `K_{1,n-1}` with center 0.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("star needs at least one vertex"));
    }
    Ok(labeled(Graph::from_fn(n, |u, _| u == 0), int_labels(n)))
}

pub fn hypercube(n: usize) -> Result<Graph> {
    hypercube_with_limit(n, DEFAULT_HYPERCUBE_LIMIT)
}

/// `Q_n` built as `Q_{n-1} □ K_2`, then checked against the Hamming-distance definition.
pub fn hypercube_with_limit(n: usize, limit: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("hypercube dimension must be at least 1"));
    }
    if n > limit {
        return Err(invalid(format!("hypercube dimension {n} exceeds limit {limit}")));
    }
    let k2 = complete(2)?;
    let mut q = k2.clone();
    for _ in 1..n {
        q = product(ProductKind::Cartesian, &q, &k2)?;
    }
    let hamming = Graph::from_fn(1 << n, |u, v| (u ^ v).count_ones() == 1);
    assert!(q.same_edges(&hamming), "recursive hypercube disagrees with Hamming construction");
    let labels = (0..1u64 << n)
        .map(|value| VertexLabel::Bits { len: n as u8, value })
        .collect();
    Ok(labeled(q, labels))
}

/// All `k`-subsets of `{1..n}` as masks, in colexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<u64> {
    assert!(n < 64 && k <= n);
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut x: u64 = (1 << k) - 1;
    let limit = 1u64 << n;
    while x < limit {
        out.push(x);
        // Gosper's hack: next mask with the same popcount.
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

fn check_johnson_params(n: usize, k: usize, i: usize) -> Result<()> {
    if i > k || k > n {
        return Err(invalid(format!("need 0 <= i <= k <= n, got n={n} k={k} i={i}")));
    }
    if n >= 32 {
        return Err(invalid("ground set too large"));
    }
    Ok(())
}

fn subset_graph(n: usize, k: usize, adjacent: impl Fn(u32) -> bool) -> Graph {
    let sets = subsets(n, k);
    let g = Graph::from_fn(sets.len(), |a, b| adjacent((sets[a] & sets[b]).count_ones()));
    let labels = sets.iter().map(|&mask| VertexLabel::Subset { n: n as u8, mask }).collect();
    labeled(g, labels)
}

/// Generalized Johnson graph `J(n,k,i)`: `k`-subsets adjacent when they meet in exactly `i` elements.
pub fn johnson(n: usize, k: usize, i: usize) -> Result<Graph> {
    check_johnson_params(n, k, i)?;
    Ok(subset_graph(n, k, |m| m as usize == i))
}

/// Generalized Kneser graph `K(n,k,i)`: `k`-subsets adjacent when they meet in at most `i` elements.
pub fn kneser_general(n: usize, k: usize, i: usize) -> Result<Graph> {
    check_johnson_params(n, k, i)?;
    Ok(subset_graph(n, k, |m| m as usize <= i))
}

/// Indices of the weight-`j` vertices of `Q_n`, ascending.
pub fn hypercube_level(n: usize, j: usize) -> Result<Vec<usize>> {
    if j > n || n == 0 || n >= 32 {
        return Err(invalid(format!("need 0 <= j <= n, got n={n} j={j}")));
    }
    Ok(subsets(n, j).into_iter().map(|m| m as usize).collect())
}

/// Position of `mask` in the colex listing of its popcount class.
pub fn subset_index(n: usize, mask: u64) -> usize {
    // Colex rank: sum of C(pos, rank+1) over set bits.
    let mut idx = 0usize;
    let mut r = 0usize;
    for pos in 0..n {
        if mask >> pos & 1 == 1 {
            r += 1;
            idx += binomial(pos as u64, r as u64) as usize;
        }
    }
    idx
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::{all_pairs_distances, metric_profile};

    #[test]
    fn small_families() {
        assert!(path(2).unwrap().same_edges(&complete(2).unwrap()));
        assert!(cycle(3).unwrap().same_edges(&complete(3).unwrap()));
        assert_eq!(edgeless(4).unwrap().edge_count(), 0);
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert_eq!(star(5).unwrap().degree(0), 4);
    }

    #[test]
    fn hypercube_q3() {
        let q3 = hypercube(3).unwrap();
        assert_eq!(q3.edge_count(), 12);
        assert!((0..8).all(|v| q3.degree(v) == 3));
        assert_eq!(q3.label(6).unwrap().to_string(), "110");
    }

    #[test]
    fn hypercube_distance_equals_hamming_up_to_seven() {
        for n in 1..=7 {
            let q = hypercube(n).unwrap();
            let d = all_pairs_distances(&q);
            for u in 0..q.order() {
                for v in 0..q.order() {
                    assert_eq!(d.get(u, v), Some((u ^ v).count_ones()));
                }
            }
        }
    }

    #[test]
    fn hypercube_is_positional_cartesian_square() {
        let q4 = hypercube(4).unwrap();
        let rec = product(ProductKind::Cartesian, &hypercube(3).unwrap(), &complete(2).unwrap()).unwrap();
        assert!(q4.same_edges(&rec));
    }

    #[test]
    fn hypercube_limit() {
        assert!(hypercube_with_limit(5, 4).is_err());
        assert!(hypercube(0).is_err());
    }

    #[test]
    fn petersen_from_johnson() {
        let p = johnson(5, 2, 0).unwrap();
        assert_eq!(p.order(), 10);
        assert!((0..10).all(|v| p.degree(v) == 3));
        // girth 5: no triangles, no 4-cycles
        let d = all_pairs_distances(&p);
        for u in 0..10 {
            for v in u + 1..10 {
                let common = (0..10).filter(|&w| p.has_edge(u, w) && p.has_edge(v, w)).count();
                if p.has_edge(u, v) {
                    assert_eq!(common, 0);
                } else {
                    assert_eq!(common, 1);
                    assert_eq!(d.get(u, v), Some(2));
                }
            }
        }
        assert_eq!(metric_profile(&p).diameter, Some(2));
    }

    #[test]
    fn johnson_421_brute_force_degrees() {
        let g = johnson(4, 2, 1).unwrap();
        let sets = subsets(4, 2);
        for (a, &sa) in sets.iter().enumerate() {
            let expected = sets.iter().filter(|&&sb| (sa & sb).count_ones() == 1).count();
            assert_eq!(g.degree(a), expected);
            assert_eq!(expected, 4);
        }
    }

    #[test]
    fn johnson_kkk_is_edgeless() {
        for (n, k) in [(5, 2), (6, 3), (4, 4)] {
            assert_eq!(johnson(n, k, k).unwrap().edge_count(), 0);
        }
        assert!(johnson(3, 4, 0).is_err());
        assert!(johnson(5, 2, 3).is_err());
    }

    #[test]
    fn kneser_is_union_of_johnson_layers() {
        let k = kneser_general(8, 3, 1).unwrap();
        assert_eq!(k.order(), 56);
        let u = johnson(8, 3, 0).unwrap().edge_union(&johnson(8, 3, 1).unwrap()).unwrap();
        assert!(k.same_edges(&u));
        assert!(kneser_general(7, 3, 0).unwrap().same_edges(&johnson(7, 3, 0).unwrap()));
    }

    #[test]
    fn levels() {
        assert_eq!(hypercube_level(4, 2).unwrap().len(), 6);
        assert_eq!(hypercube_level(4, 0).unwrap(), vec![0]);
        let n = 6;
        let full = (1usize << n) - 1;
        for j in 0..=n {
            let mut flipped: Vec<usize> = hypercube_level(n, j).unwrap().iter().map(|v| v ^ full).collect();
            flipped.sort_unstable();
            assert_eq!(flipped, hypercube_level(n, n - j).unwrap());
        }
    }

    #[test]
    fn colex_rank_matches_listing() {
        for n in 1..=9 {
            for k in 0..=n {
                for (idx, &m) in subsets(n, k).iter().enumerate() {
                    assert_eq!(subset_index(n, m), idx);
                }
                assert_eq!(subsets(n, k).len() as u64, binomial(n as u64, k as u64));
            }
        }
    }
}
