//! Dense simple graphs with optional loops and vertex labels.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::bits::{self, BitSet};
use crate::error::{Error, Result};

/// Semantic name of a vertex, kept alongside its dense index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexLabel {
    Int(i64),
    /// Bit string of length `len`; the first character is the most significant bit of `value`.
    Bits { len: u8, value: u64 },
    /// Subset of `{1..n}`; element `j` is bit `j - 1` of `mask`.
    Subset { n: u8, mask: u64 },
    Pair(Box<VertexLabel>, Box<VertexLabel>),
}

impl VertexLabel {
    pub fn pair(a: VertexLabel, b: VertexLabel) -> Self {
        VertexLabel::Pair(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Int(i) => write!(f, "{i}"),
            VertexLabel::Bits { len, value } => {
                for k in (0..*len).rev() {
                    write!(f, "{}", (value >> k) & 1)?;
                }
                Ok(())
            }
            VertexLabel::Subset { n, mask } => {
                write!(f, "{{")?;
                let mut first = true;
                for j in 0..*n {
                    if mask >> j & 1 == 1 {
                        if !first {
                            write!(f, ",")?;
                        }
                        write!(f, "{}", j + 1)?;
                        first = false;
                    }
                }
                write!(f, "}}")
            }
            VertexLabel::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// Finite simple graph on vertices `0..order`, stored as a symmetric bit matrix.
///
/// Loops live on the diagonal and are only present when `loops_allowed` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    stride: usize,
    adj: Vec<u64>,
    loops_allowed: bool,
    labels: Option<Vec<VertexLabel>>,
}

impl Graph {
    pub fn empty(order: usize, loops_allowed: bool) -> Self {
        let stride = bits::words_for(order);
        Graph {
            order,
            stride,
            adj: vec![0; stride * order],
            loops_allowed,
            labels: None,
        }
    }

    /// Builds a graph from an edge list; duplicate edges are ignored.
    pub fn from_edges(order: usize, edges: &[(usize, usize)], loops_allowed: bool) -> Result<Self> {
        let mut g = Graph::empty(order, loops_allowed);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v && !loops_allowed {
                return Err(Error::ForbiddenLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a loop-free graph whose edges are the pairs `u < v` accepted by `adjacent`.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(order, false);
        for u in 0..order {
            for v in u + 1..order {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Edgeless graph with a loop at every vertex.
    pub fn all_loops(order: usize) -> Self {
        let mut g = Graph::empty(order, true);
        for v in 0..order {
            g.add_edge(v, v);
        }
        g
    }

    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::LabelCount {
                got: labels.len(),
                expected: self.order,
            });
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if !seen.insert(l) {
                return Err(Error::DuplicateLabel(i));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn set_labels_unchecked(&mut self, labels: Option<Vec<VertexLabel>>) {
        debug_assert!(labels.as_ref().is_none_or(|l| l.len() == self.order));
        self.labels = labels;
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        let s = self.stride;
        bits::set(&mut self.adj[u * s..(u + 1) * s], v);
        bits::set(&mut self.adj[v * s..(v + 1) * s], u);
    }

    pub(crate) fn row_mut(&mut self, u: usize) -> &mut [u64] {
        let s = self.stride;
        &mut self.adj[u * s..(u + 1) * s]
    }

    /// Makes the matrix symmetric by mirroring every set bit.
    pub(crate) fn symmetrize(&mut self) {
        for u in 0..self.order {
            let nbrs: Vec<usize> = bits::ones(self.row(u)).collect();
            for v in nbrs {
                let s = self.stride;
                bits::set(&mut self.adj[v * s..(v + 1) * s], u);
            }
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn loops_allowed(&self) -> bool {
        self.loops_allowed
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&VertexLabel> {
        self.labels.as_ref().map(|l| &l[v])
    }

    /// Adjacency row of `u`, including the diagonal bit when `u` carries a loop.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.stride..(u + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::get(self.row(u), v)
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    pub fn has_any_loop(&self) -> bool {
        (0..self.order).any(|v| self.has_loop(v))
    }

    /// Neighbors of `u` other than `u` itself, ascending.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(u)).filter(move |&v| v != u)
    }

    /// Degree ignoring any loop.
    pub fn degree(&self, u: usize) -> usize {
        bits::count(self.row(u)) - usize::from(self.has_loop(u))
    }

    /// Edges `(u, v)` with `u <= v`, in lexicographic order; loops appear as `(v, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| bits::ones(self.row(u)).filter(move |&v| v >= u).map(move |v| (u, v)))
    }

    /// Number of edges, loops included.
    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn is_isolate_free(&self) -> bool {
        self.first_isolated().is_none()
    }

    pub fn first_isolated(&self) -> Option<usize> {
        (0..self.order).find(|&v| self.degree(v) == 0)
    }

    pub(crate) fn require_loop_free(&self) -> Result<()> {
        if self.has_any_loop() {
            Err(Error::LoopsPresent)
        } else {
            Ok(())
        }
    }

    /// Union of edge sets on a shared vertex set.
    pub fn edge_union(&self, other: &Graph) -> Result<Graph> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        if let (Some(a), Some(b)) = (&self.labels, &other.labels) {
            if let Some(i) = (0..a.len()).find(|&i| a[i] != b[i]) {
                return Err(Error::LabelMismatch(i));
            }
        }
        let mut g = self.clone();
        g.loops_allowed |= other.loops_allowed;
        for (w, o) in g.adj.iter_mut().zip(&other.adj) {
            *w |= *o;
        }
        if g.labels.is_none() {
            g.labels = other.labels.clone();
        }
        Ok(g)
    }

    /// `k` disjoint copies; copy `i` occupies indices `i*n..(i+1)*n`.
    pub fn disjoint_copies(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(crate::error::invalid("number of copies must be at least 1"));
        }
        let n = self.order;
        let mut g = Graph::empty(k * n, self.loops_allowed);
        for c in 0..k {
            for (u, v) in self.edges() {
                g.add_edge(c * n + u, c * n + v);
            }
        }
        if let Some(labels) = &self.labels {
            let mut out = Vec::with_capacity(k * n);
            for c in 0..k {
                out.extend(labels.iter().map(|l| VertexLabel::pair(l.clone(), VertexLabel::Int(c as i64))));
            }
            g.labels = Some(out);
        }
        Ok(g)
    }

    pub fn complement(&self) -> Result<Graph> {
        self.require_loop_free()?;
        let mut g = Graph::from_fn(self.order, |u, v| !self.has_edge(u, v));
        g.labels = self.labels.clone();
        Ok(g)
    }

    /// Subgraph induced by `vertices`, relabeled `0..len` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(vertices.len(), self.loops_allowed);
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g = g.with_labels(vertices.iter().map(|&v| labels[v].clone()).collect())?;
        }
        Ok(g)
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = BitSet::new(self.order);
        let mut comps = Vec::new();
        let mut queue = Vec::new();
        for s in 0..self.order {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for v in bits::ones(self.row(u)) {
                    if !seen.contains(v) {
                        seen.insert(v);
                        queue.push(v);
                    }
                }
            }
            let mut comp = queue.clone();
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    /// True for graphs with at most one component (the empty graph included).
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Two-coloring by breadth-first search, or `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Result<Option<Bipartition>> {
        self.require_loop_free()?;
        let mut side = vec![u8::MAX; self.order];
        let mut queue = Vec::new();
        for s in 0..self.order {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for v in self.neighbors(u) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push(v);
                    } else if side[v] == side[u] {
                        return Ok(None);
                    }
                }
            }
        }
        Ok(Some(Bipartition { side }))
    }

    pub fn is_bipartite(&self) -> Result<bool> {
        Ok(self.bipartition()?.is_some())
    }

    /// Same vertex set and labels, no edges.
    pub fn edgeless_like(&self) -> Graph {
        let mut g = Graph::empty(self.order, false);
        g.labels = self.labels.clone();
        g
    }

    /// Positional edge-set equality, ignoring labels and the loop flag.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.order == other.order && self.adj == other.adj
    }
}

/// Side assignment (0 or 1) for every vertex of a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub side: Vec<u8>,
}

impl Bipartition {
    pub fn parts(&self) -> (Vec<usize>, Vec<usize>) {
        let a = (0..self.side.len()).filter(|&v| self.side[v] == 0).collect();
        let b = (0..self.side.len()).filter(|&v| self.side[v] == 1).collect();
        (a, b)
    }

    /// True if no edge of `g` joins two vertices on the same side.
    pub fn separates(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| self.side[u] != self.side[v])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)], false).unwrap()
    }

    #[test]
    fn build_symmetrizes_and_dedups() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 0), (1, 2), (2, 3), (2, 3)], false).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(1, 0) && g.has_edge(0, 1));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)], false),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)], false), Err(Error::ForbiddenLoop(1)));
        let looped = Graph::from_edges(1, &[(0, 0)], true).unwrap();
        assert!(looped.has_loop(0));
        assert_eq!(looped.degree(0), 0);
    }

    #[test]
    fn duplicate_labels_rejected() {
        let g = Graph::empty(2, false);
        let err = g.with_labels(vec![VertexLabel::Int(1), VertexLabel::Int(1)]);
        assert_eq!(err, Err(Error::DuplicateLabel(1)));
    }

    #[test]
    fn union_properties() {
        let a = Graph::from_edges(4, &[(0, 1)], false).unwrap();
        let b = Graph::from_edges(4, &[(2, 3), (0, 1)], false).unwrap();
        let e = Graph::empty(4, false);
        assert!(a.edge_union(&a).unwrap().same_edges(&a));
        assert!(e.edge_union(&b).unwrap().same_edges(&b));
        assert!(a.edge_union(&b).unwrap().same_edges(&b.edge_union(&a).unwrap()));
        assert!(matches!(a.edge_union(&Graph::empty(3, false)), Err(Error::OrderMismatch { .. })));
        let la = a.clone().with_labels((0..4).map(VertexLabel::Int).collect()).unwrap();
        let lb = b.with_labels((1..5).map(VertexLabel::Int).collect()).unwrap();
        assert_eq!(la.edge_union(&lb), Err(Error::LabelMismatch(0)));
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        assert_eq!(k3().complement().unwrap().edge_count(), 0);
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)], false).unwrap();
        assert!(g.complement().unwrap().complement().unwrap().same_edges(&g));
        assert_eq!(Graph::all_loops(2).complement(), Err(Error::LoopsPresent));
    }

    #[test]
    fn copies_and_components() {
        let g = Graph::from_edges(2, &[(0, 1)], false).unwrap();
        let two = g.disjoint_copies(2).unwrap();
        assert_eq!(two.connected_components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(g.disjoint_copies(1).unwrap().same_edges(&g));
        assert!(g.disjoint_copies(0).is_err());
        assert_eq!(Graph::empty(2, false).disjoint_copies(2).unwrap().component_count(), 4);
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let g = k3().with_labels((10..13).map(VertexLabel::Int).collect()).unwrap();
        let s = g.induced_subgraph(&[2, 0]).unwrap();
        assert_eq!(s.edge_count(), 1);
        assert_eq!(s.label(0), Some(&VertexLabel::Int(12)));
        assert!(g.induced_subgraph(&[1]).unwrap().edge_count() == 0);
        assert!(g.induced_subgraph(&[0, 1, 2]).unwrap().same_edges(&g));
        assert!(g.induced_subgraph(&[5]).is_err());
    }

    #[test]
    fn bipartition_first_part_has_lowest_vertex() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], false).unwrap();
        let bp = c4.bipartition().unwrap().unwrap();
        assert_eq!(bp.parts(), (vec![0, 2], vec![1, 3]));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)], false).unwrap();
        assert_eq!(c5.bipartition().unwrap(), None);
        assert_eq!(Graph::all_loops(1).bipartition(), Err(Error::LoopsPresent));
    }

    #[test]
    fn label_display() {
        assert_eq!(VertexLabel::Bits { len: 4, value: 0b0110 }.to_string(), "0110");
        assert_eq!(VertexLabel::Subset { n: 5, mask: 0b10011 }.to_string(), "{1,2,5}");
        let p = VertexLabel::pair(VertexLabel::Int(1), VertexLabel::Int(2));
        assert_eq!(p.to_string(), "(1,2)");
    }
}
