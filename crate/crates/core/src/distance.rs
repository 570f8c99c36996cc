//! Shortest-path distances, eccentricities, radius and diameter.

use serde::Serialize;

use crate::bits::{self, BitSet};
use crate::graph::Graph;

const UNREACHABLE: u32 = u32::MAX;

/// All-pairs shortest-path distances. Loops never shorten a path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Distance from `u` to `v`, or `None` when no path exists.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.entries[u * self.order + v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn row(&self, u: usize) -> impl Iterator<Item = Option<u32>> + '_ {
        self.entries[u * self.order..(u + 1) * self.order]
            .iter()
            .map(|&d| (d != UNREACHABLE).then_some(d))
    }
}

/// Breadth-first distances from `source`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<u32>> {
    let mut out = vec![UNREACHABLE; g.order()];
    bfs_into(g, source, &mut out, &mut Vec::new());
    out.into_iter().map(|d| (d != UNREACHABLE).then_some(d)).collect()
}

fn bfs_into(g: &Graph, source: usize, dist: &mut [u32], queue: &mut Vec<usize>) {
    dist.iter_mut().for_each(|d| *d = UNREACHABLE);
    dist[source] = 0;
    queue.clear();
    queue.push(source);
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let du = dist[u];
        for v in bits::ones(g.row(u)) {
            if dist[v] == UNREACHABLE {
                dist[v] = du + 1;
                queue.push(v);
            }
        }
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut entries = vec![UNREACHABLE; n * n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        bfs_into(g, s, &mut entries[s * n..(s + 1) * n], &mut queue);
    }
    DistanceMatrix { order: n, entries }
}

/// Vertices at distance exactly `p` from `source`, as a bit row.
///
/// Expands whole frontiers word-wise and stops at depth `p`.
pub(crate) fn sphere(g: &Graph, source: usize, p: usize, visited: &mut BitSet, frontier: &mut BitSet, next: &mut BitSet) {
    visited.clear_all();
    frontier.clear_all();
    visited.insert(source);
    frontier.insert(source);
    for _ in 0..p {
        next.clear_all();
        for u in frontier.iter() {
            for (w, r) in next.as_words_mut().iter_mut().zip(g.row(u)) {
                *w |= *r;
            }
        }
        for (w, seen) in next.as_words_mut().iter_mut().zip(visited.as_words()) {
            *w &= !*seen;
        }
        for (seen, w) in visited.as_words_mut().iter_mut().zip(next.as_words()) {
            *seen |= *w;
        }
        std::mem::swap(frontier, next);
        if frontier.is_empty() {
            break;
        }
    }
}

/// Per-vertex eccentricity (`None` = infinite), radius and diameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricProfile {
    pub eccentricities: Vec<Option<u32>>,
    pub radius: Option<u32>,
    pub diameter: Option<u32>,
}

pub fn metric_profile(g: &Graph) -> MetricProfile {
    let n = g.order();
    let mut dist = vec![UNREACHABLE; n];
    let mut queue = Vec::with_capacity(n);
    let eccentricities: Vec<Option<u32>> = (0..n)
        .map(|s| {
            bfs_into(g, s, &mut dist, &mut queue);
            if dist.contains(&UNREACHABLE) {
                None
            } else {
                dist.iter().copied().max()
            }
        })
        .collect();
    // `None` sorts before `Some`, so rank infinite as largest by hand.
    let key = |e: &Option<u32>| e.map_or(u64::MAX, u64::from);
    let radius = eccentricities.iter().min_by_key(|e| key(e)).copied().unwrap_or(Some(0));
    let diameter = eccentricities.iter().max_by_key(|e| key(e)).copied().unwrap_or(Some(0));
    MetricProfile {
        eccentricities,
        radius,
        diameter,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn path_distances() {
        let p4 = families::path(4).unwrap();
        let d = all_pairs_distances(&p4);
        assert_eq!(d.get(0, 3), Some(3));
        assert_eq!(d.get(2, 2), Some(0));
    }

    #[test]
    fn unreachable_is_explicit() {
        let g = families::complete(2).unwrap().disjoint_copies(2).unwrap();
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 2), None);
        assert_eq!(d.get(0, 1), Some(1));
        let m = metric_profile(&g);
        assert_eq!(m.radius, None);
        assert_eq!(m.diameter, None);
    }

    #[test]
    fn loops_do_not_shorten_paths() {
        let g = Graph::from_edges(3, &[(0, 0), (0, 1), (1, 2)], true).unwrap();
        assert_eq!(all_pairs_distances(&g).get(0, 2), Some(2));
    }

    #[test]
    fn profiles_of_standard_graphs() {
        let m = metric_profile(&families::path(5).unwrap());
        assert_eq!((m.radius, m.diameter), (Some(2), Some(4)));
        let m = metric_profile(&families::complete(6).unwrap());
        assert_eq!((m.radius, m.diameter), (Some(1), Some(1)));
        let m = metric_profile(&families::hypercube(4).unwrap());
        assert_eq!((m.radius, m.diameter), (Some(4), Some(4)));
    }

    #[test]
    fn hypercube_distance_is_hamming() {
        let q3 = families::hypercube(3).unwrap();
        let d = all_pairs_distances(&q3);
        assert_eq!(d.get(0b000, 0b110), Some(2));
        for u in 0..8 {
            for v in 0..8 {
                assert_eq!(d.get(u, v), Some((u ^ v).count_ones()));
            }
        }
    }
}
