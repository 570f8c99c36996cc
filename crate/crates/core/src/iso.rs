//! Small-graph isomorphism by individualization and refinement.
//!
//! Both graphs are colored jointly: an initial invariant (loop flag, degree,
//! distance histogram) followed by iterated neighbor-color refinement. The search
//! individualizes one vertex of the smallest non-trivial cell and tries every
//! candidate in the matching cell of the other graph. Every leaf is replayed
//! against both edge sets before it is reported.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::distance::bfs_distances;
use crate::graph::Graph;

pub const DEFAULT_ISO_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum IsoOutcome {
    /// `mapping[v]` is the image in the second graph of vertex `v` of the first.
    Isomorphic { mapping: Vec<usize> },
    NotIsomorphic,
    Undecided { nodes: u64 },
}

impl IsoOutcome {
    pub fn mapping(&self) -> Option<&[usize]> {
        match self {
            IsoOutcome::Isomorphic { mapping } => Some(mapping),
            _ => None,
        }
    }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> IsoOutcome {
    are_isomorphic_with_budget(g, h, DEFAULT_ISO_BUDGET)
}

pub fn are_isomorphic_with_budget(g: &Graph, h: &Graph, budget: u64) -> IsoOutcome {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return IsoOutcome::NotIsomorphic;
    }
    let Some((cg, ch)) = joint_canonical(&initial_signature(g), &initial_signature(h)) else {
        return IsoOutcome::NotIsomorphic;
    };
    let mut search = Search { g, h, nodes: 0, budget };
    let Some((cg, ch)) = search.refine(cg, ch) else {
        return IsoOutcome::NotIsomorphic;
    };
    match search.descend(cg, ch) {
        Step::Found(mapping) => IsoOutcome::Isomorphic { mapping },
        Step::Exhausted => IsoOutcome::NotIsomorphic,
        Step::OutOfBudget => IsoOutcome::Undecided { nodes: search.nodes },
    }
}

/// True if `mapping` is a bijection carrying edges onto edges and non-edges onto non-edges.
pub fn verify_bijection(g: &Graph, h: &Graph, mapping: &[usize]) -> bool {
    let n = g.order();
    if h.order() != n || mapping.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &w in mapping {
        if w >= n || hit[w] {
            return false;
        }
        hit[w] = true;
    }
    (0..n).all(|u| (u..n).all(|v| g.has_edge(u, v) == h.has_edge(mapping[u], mapping[v])))
}

fn initial_signature(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    (0..n)
        .map(|v| {
            let mut sig = vec![u32::from(g.has_loop(v)), g.degree(v) as u32];
            let mut hist = vec![0u32; n + 1];
            for d in bfs_distances(g, v) {
                hist[d.map_or(n, |d| d as usize)] += 1;
            }
            sig.extend(hist);
            sig
        })
        .collect()
}

/// Assigns the same color ids to equal signatures in both graphs; `None` if the color histograms differ.
fn joint_canonical<S: Ord + Clone>(sg: &[S], sh: &[S]) -> Option<(Vec<u32>, Vec<u32>)> {
    let mut counts: BTreeMap<&S, (usize, usize)> = BTreeMap::new();
    for s in sg {
        counts.entry(s).or_default().0 += 1;
    }
    for s in sh {
        counts.entry(s).or_default().1 += 1;
    }
    if counts.values().any(|(a, b)| a != b) {
        return None;
    }
    let ids: BTreeMap<&S, u32> = counts.keys().enumerate().map(|(i, s)| (*s, i as u32)).collect();
    Some((sg.iter().map(|s| ids[s]).collect(), sh.iter().map(|s| ids[s]).collect()))
}

fn class_count(c: &[u32]) -> usize {
    c.iter().copied().max().map_or(0, |m| m as usize + 1)
}

enum Step {
    Found(Vec<usize>),
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn refine(&self, mut cg: Vec<u32>, mut ch: Vec<u32>) -> Option<(Vec<u32>, Vec<u32>)> {
        loop {
            let before = class_count(&cg);
            let sig = |gr: &Graph, c: &[u32]| -> Vec<(u32, Vec<u32>)> {
                (0..gr.order())
                    .map(|v| {
                        let mut nb: Vec<u32> = gr.neighbors(v).map(|u| c[u]).collect();
                        nb.sort_unstable();
                        (c[v], nb)
                    })
                    .collect()
            };
            let (ng, nh) = joint_canonical(&sig(self.g, &cg), &sig(self.h, &ch))?;
            cg = ng;
            ch = nh;
            if class_count(&cg) == before {
                return Some((cg, ch));
            }
        }
    }

    fn descend(&mut self, cg: Vec<u32>, ch: Vec<u32>) -> Step {
        let n = cg.len();
        let classes = class_count(&cg);
        if classes == n {
            let mut inverse = vec![0usize; n];
            for (w, &c) in ch.iter().enumerate() {
                inverse[c as usize] = w;
            }
            let mapping: Vec<usize> = cg.iter().map(|&c| inverse[c as usize]).collect();
            return if verify_bijection(self.g, self.h, &mapping) {
                Step::Found(mapping)
            } else {
                Step::Exhausted
            };
        }
        let mut sizes = vec![0usize; classes];
        for &c in &cg {
            sizes[c as usize] += 1;
        }
        let target = (0..classes)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c))
            .expect("a non-singleton cell exists") as u32;
        let v = cg.iter().position(|&c| c == target).expect("cell is non-empty");
        let fresh = classes as u32;
        for w in (0..n).filter(|&w| ch[w] == target) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            let mut ig = cg.clone();
            let mut ih = ch.clone();
            ig[v] = fresh;
            ih[w] = fresh;
            if let Some((rg, rh)) = self.refine(ig, ih) {
                match self.descend(rg, rh) {
                    Step::Exhausted => {}
                    done => return done,
                }
            }
        }
        Step::Exhausted
    }
}
