//! The exact distance-`p` graph `G^[♮p]` and the path power `G^{♮p}`.

use crate::bits::{self, BitSet};
use crate::distance::sphere;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

pub const DEFAULT_PATH_BUDGET: u64 = 50_000_000;

/// Graph on `V(G)` joining vertices at distance exactly `p`.
///
/// `p = 0` yields the edgeless graph with a loop at every vertex.
pub fn exact_distance_graph(g: &Graph, p: usize) -> Result<Graph> {
    g.require_loop_free()?;
    let n = g.order();
    let mut out = if p == 0 {
        Graph::all_loops(n)
    } else {
        let mut out = Graph::empty(n, false);
        let (mut visited, mut frontier, mut next) = (BitSet::new(n), BitSet::new(n), BitSet::new(n));
        for s in 0..n {
            sphere(g, s, p, &mut visited, &mut frontier, &mut next);
            out.row_mut(s).copy_from_slice(frontier.as_words());
        }
        out
    };
    out.set_labels_unchecked(g.labels().map(<[_]>::to_vec));
    Ok(out)
}

/// Graph on `V(G)` joining `u != v` whenever a simple `u,v`-path of length exactly `p` exists.
pub fn path_power(g: &Graph, p: usize) -> Result<Graph> {
    path_power_with_budget(g, p, DEFAULT_PATH_BUDGET)
}

pub fn path_power_with_budget(g: &Graph, p: usize, budget: u64) -> Result<Graph> {
    g.require_loop_free()?;
    if p == 0 {
        return Err(invalid("path power needs p >= 1"));
    }
    let n = g.order();
    let mut out = Graph::empty(n, false);
    let mut steps = 0u64;
    let mut on_path = BitSet::new(n);
    let mut ends = BitSet::new(n);
    for s in 0..n {
        ends.clear_all();
        on_path.insert(s);
        extend(g, s, p, &mut on_path, &mut ends, &mut steps, budget)?;
        on_path.remove(s);
        ends.remove(s);
        out.row_mut(s).copy_from_slice(ends.as_words());
    }
    out.symmetrize();
    out.set_labels_unchecked(g.labels().map(<[_]>::to_vec));
    Ok(out)
}

fn extend(g: &Graph, u: usize, left: usize, on_path: &mut BitSet, ends: &mut BitSet, steps: &mut u64, budget: u64) -> Result<()> {
    *steps += 1;
    if *steps > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    if left == 0 {
        ends.insert(u);
        return Ok(());
    }
    let next: Vec<usize> = bits::ones(g.row(u)).filter(|&v| !on_path.contains(v)).collect();
    for v in next {
        on_path.insert(v);
        extend(g, v, left - 1, on_path, ends, steps, budget)?;
        on_path.remove(v);
    }
    Ok(())
}
