//! Exact and heuristic vertex coloring.
//!
//! The search is DSATUR backtracking: pick the uncolored vertex with the most
//! distinct neighbor colors (ties: higher degree, then lower index), try the
//! allowed colors in increasing order. Colors above the precolored palette are
//! interchangeable, so a vertex may open at most one new color. Chromatic number
//! is found by descending decision calls from the greedy bound to the clique bound,
//! one connected component at a time.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Coloring;
use crate::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_COLOR_BUDGET: u64 = 200_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum ChromaticOutcome {
    Exact { chi: usize, coloring: Coloring },
    /// Budget ran out; `coloring` witnesses `upper`.
    Undecided { lower: usize, upper: usize, coloring: Coloring },
}

impl ChromaticOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self {
            ChromaticOutcome::Exact { chi, .. } => Some(*chi),
            ChromaticOutcome::Undecided { .. } => None,
        }
    }

    pub fn bounds(&self) -> (usize, usize) {
        match self {
            ChromaticOutcome::Exact { chi, .. } => (*chi, *chi),
            ChromaticOutcome::Undecided { lower, upper, .. } => (*lower, *upper),
        }
    }

    pub fn coloring(&self) -> &Coloring {
        match self {
            ChromaticOutcome::Exact { coloring, .. } | ChromaticOutcome::Undecided { coloring, .. } => coloring,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Colorable(Vec<u32>),
    NotColorable,
    Undecided,
}

struct OutOfBudget;

struct Engine<'a> {
    g: &'a Graph,
    k: usize,
    fixed: u32,
    color: Vec<u32>,
    cnt: Vec<u16>,
    sat: Vec<u32>,
    deg: Vec<u32>,
    uncolored: usize,
    top: u32,
    nodes: u64,
    budget: u64,
}

impl<'a> Engine<'a> {
    /// `precolor` must be proper and use colors `<= k`.
    fn new(g: &'a Graph, k: usize, precolor: &[Option<u32>], budget: u64) -> Self {
        let n = g.order();
        let fixed = precolor.iter().flatten().copied().max().unwrap_or(0);
        let mut e = Engine {
            g,
            k,
            fixed,
            color: vec![0; n],
            cnt: vec![0; n * (k + 1)],
            sat: vec![0; n],
            deg: (0..n).map(|v| g.degree(v) as u32).collect(),
            uncolored: n,
            top: fixed,
            nodes: 0,
            budget,
        };
        for (v, c) in precolor.iter().enumerate() {
            if let Some(c) = *c {
                e.assign(v, c);
            }
        }
        e
    }

    /// Colors `v` with `c`; returns false if some uncolored neighbor is left with no color.
    fn assign(&mut self, v: usize, c: u32) -> bool {
        self.color[v] = c;
        self.uncolored -= 1;
        let stride = self.k + 1;
        let mut alive = true;
        for u in bits::ones(self.g.row(v)) {
            if u == v {
                continue;
            }
            let slot = &mut self.cnt[u * stride + c as usize];
            *slot += 1;
            if *slot == 1 {
                self.sat[u] += 1;
                if self.color[u] == 0 && self.sat[u] as usize >= self.k {
                    alive = false;
                }
            }
        }
        alive
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = 0;
        self.uncolored += 1;
        let stride = self.k + 1;
        for u in bits::ones(self.g.row(v)) {
            if u == v {
                continue;
            }
            let slot = &mut self.cnt[u * stride + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn select(&self) -> usize {
        let mut best = usize::MAX;
        for v in 0..self.color.len() {
            if self.color[v] != 0 {
                continue;
            }
            if best == usize::MAX || (self.sat[v], self.deg[v]) > (self.sat[best], self.deg[best]) {
                best = v;
            }
        }
        best
    }

    fn blocked(&self, v: usize, c: u32) -> bool {
        self.cnt[v * (self.k + 1) + c as usize] > 0
    }

    fn search(&mut self) -> std::result::Result<bool, OutOfBudget> {
        if self.uncolored == 0 {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OutOfBudget);
        }
        let v = self.select();
        let limit = (self.top.max(self.fixed) + 1).min(self.k as u32);
        for c in 1..=limit {
            if self.blocked(v, c) {
                continue;
            }
            let saved_top = self.top;
            self.top = self.top.max(c);
            let alive = self.assign(v, c);
            if alive && self.search()? {
                return Ok(true);
            }
            self.unassign(v);
            self.top = saved_top;
        }
        Ok(false)
    }

    fn greedy(&mut self) {
        while self.uncolored > 0 {
            let v = self.select();
            let c = (1..=self.k as u32).find(|&c| !self.blocked(v, c)).expect("palette wide enough for greedy");
            self.top = self.top.max(c);
            self.assign(v, c);
        }
    }
}

fn check_precolor(g: &Graph, precolor: &[Option<u32>]) -> Result<()> {
    if precolor.len() != g.order() {
        return Err(Error::PartialColoring(precolor.len().min(g.order())));
    }
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (precolor[u], precolor[v]) {
            if a == b {
                return Err(Error::ImproperAssembly(u, v));
            }
        }
    }
    if precolor.iter().flatten().any(|&c| c == 0) {
        return Err(crate::error::invalid("colors are 1-based"));
    }
    Ok(())
}

/// Greedy DSATUR coloring extending `precolor`.
pub fn dsatur_extend(g: &Graph, precolor: &[Option<u32>]) -> Result<Vec<u32>> {
    g.require_loop_free()?;
    check_precolor(g, precolor)?;
    let fixed = precolor.iter().flatten().copied().max().unwrap_or(0) as usize;
    let maxdeg = (0..g.order()).map(|v| g.degree(v)).max().unwrap_or(0);
    let mut e = Engine::new(g, fixed + maxdeg + 1, precolor, u64::MAX);
    e.greedy();
    Ok(e.color)
}

/// Greedy DSATUR coloring.
pub fn dsatur(g: &Graph) -> Result<Coloring> {
    Coloring::new(dsatur_extend(g, &vec![None; g.order()])?)
}

/// Decides whether `precolor` extends to a proper coloring with colors `1..=k`.
pub fn k_coloring(g: &Graph, k: usize, precolor: &[Option<u32>], budget: u64) -> Result<(Decision, u64)> {
    g.require_loop_free()?;
    check_precolor(g, precolor)?;
    if precolor.iter().flatten().any(|&c| c as usize > k) {
        return Ok((Decision::NotColorable, 0));
    }
    if g.order() > 0 && k == 0 {
        return Ok((Decision::NotColorable, 0));
    }
    let mut e = Engine::new(g, k, precolor, budget);
    // a precolored vertex may already have a fully blocked neighbor
    if (0..g.order()).any(|v| e.color[v] == 0 && e.sat[v] as usize >= k) {
        return Ok((Decision::NotColorable, 0));
    }
    let d = match e.search() {
        Ok(true) => Decision::Colorable(e.color.clone()),
        Ok(false) => Decision::NotColorable,
        Err(OutOfBudget) => Decision::Undecided,
    };
    Ok((d, e.nodes))
}

/// Maximum clique by branch and bound with greedy-coloring bounds; `(clique, proven_maximum)`.
pub fn max_clique(g: &Graph, budget: u64) -> (Vec<usize>, bool) {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut st = CliqueSearch {
        g,
        best: Vec::new(),
        cur: Vec::new(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    st.expand(order);
    let mut best = st.best;
    best.sort_unstable();
    (best, !st.exhausted)
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    cur: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, cands: Vec<usize>) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        // greedy color classes give an upper bound on the clique inside each prefix
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in &cands {
            match classes.iter_mut().find(|cl| cl.iter().all(|&u| !self.g.has_edge(u, v))) {
                Some(cl) => cl.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut ordered = Vec::with_capacity(cands.len());
        for (ci, cl) in classes.iter().enumerate() {
            for &v in cl {
                ordered.push((v, ci + 1));
            }
        }
        while let Some((v, bound)) = ordered.pop() {
            if self.cur.len() + bound <= self.best.len() || self.exhausted {
                return;
            }
            self.cur.push(v);
            let next: Vec<usize> = ordered.iter().map(|&(u, _)| u).filter(|&u| self.g.has_edge(u, v)).collect();
            if next.is_empty() {
                if self.cur.len() > self.best.len() {
                    self.best = self.cur.clone();
                }
            } else {
                self.expand(next);
            }
            self.cur.pop();
        }
    }
}

/// Chromatic number within a node budget, solved per connected component.
pub fn exact_chromatic(g: &Graph, budget: u64) -> Result<ChromaticOutcome> {
    g.require_loop_free()?;
    let n = g.order();
    if n == 0 {
        return Ok(ChromaticOutcome::Exact {
            chi: 0,
            coloring: Coloring::new(Vec::new())?,
        });
    }
    let mut comps = g.connected_components();
    comps.sort_by_key(|c| (std::cmp::Reverse(c.len()), c[0]));
    let mut colors = vec![0u32; n];
    let mut lower = 0usize;
    let mut upper = 0usize;
    let mut decided = true;
    let mut spent = 0u64;
    for comp in comps {
        let sub = g.induced_subgraph(&comp)?.without_labels();
        let res = component_chromatic(&sub, lower, budget.saturating_sub(spent))?;
        spent += res.nodes;
        decided &= res.decided;
        lower = lower.max(res.lower);
        upper = upper.max(res.colors.iter().copied().max().unwrap_or(0) as usize);
        for (i, &v) in comp.iter().enumerate() {
            colors[v] = res.colors[i];
        }
    }
    let coloring = Coloring::new(colors)?;
    debug_assert!(super::validate_coloring(g, &coloring)?.proper);
    Ok(if decided && lower == coloring.count() {
        ChromaticOutcome::Exact { chi: lower, coloring }
    } else {
        ChromaticOutcome::Undecided {
            lower,
            upper: coloring.count(),
            coloring,
        }
    })
}

struct ComponentResult {
    colors: Vec<u32>,
    lower: usize,
    decided: bool,
    nodes: u64,
}

/// Colors a connected graph with as few colors as needed, but never aims below `floor`.
fn component_chromatic(g: &Graph, floor: usize, budget: u64) -> Result<ComponentResult> {
    let n = g.order();
    let (clique, _) = max_clique(g, 200_000);
    let mut best = dsatur_extend(g, &vec![None; n])?;
    let mut best_k = best.iter().copied().max().unwrap_or(0) as usize;
    let lower = clique.len().max(1);
    let mut nodes = 0u64;
    let target_floor = floor.max(lower);
    while best_k > target_floor {
        // local search never takes more than half the budget
        let cap = TABU_ITERS.min((budget / 2).saturating_sub(nodes));
        if cap == 0 {
            break;
        }
        let (found, used) = tabu_coloring(g, best_k - 1, &best, TABU_SEED ^ n as u64, cap);
        nodes += used;
        match found {
            Some(c) => {
                best_k = c.iter().copied().max().unwrap_or(0) as usize;
                best = c;
            }
            None => break,
        }
    }
    if best_k <= target_floor {
        return Ok(ComponentResult {
            colors: best,
            lower: lower.max(best_k.min(lower)),
            decided: true,
            nodes,
        });
    }
    let mut precolor = vec![None; n];
    for (i, &v) in clique.iter().enumerate() {
        precolor[v] = Some(i as u32 + 1);
    }
    loop {
        let k = best_k - 1;
        if k < target_floor {
            break;
        }
        let (d, used) = k_coloring(g, k, &precolor, budget.saturating_sub(nodes))?;
        nodes += used;
        match d {
            Decision::Colorable(c) => {
                best_k = c.iter().copied().max().unwrap_or(0) as usize;
                best = c;
            }
            Decision::NotColorable => {
                return Ok(ComponentResult {
                    colors: best,
                    lower: best_k,
                    decided: true,
                    nodes,
                });
            }
            Decision::Undecided => {
                return Ok(ComponentResult {
                    colors: best,
                    lower,
                    decided: false,
                    nodes,
                });
            }
        }
    }
    // reached the floor: this component does not raise the overall count
    Ok(ComponentResult {
        colors: best,
        lower: lower.min(best_k),
        decided: true,
        nodes,
    })
}

const TABU_ITERS: u64 = 200_000;
const TABU_SEED: u64 = 0x7ab0_c01e;

/// Tabu search for a proper coloring with colors `1..=k`, starting from `start`
/// (colors above `k` are redrawn at random). Returns the coloring if found and the
/// number of iterations spent.
pub fn tabu_coloring(g: &Graph, k: usize, start: &[u32], seed: u64, max_iters: u64) -> (Option<Vec<u32>>, u64) {
    let n = g.order();
    if k == 0 {
        return (if n == 0 { Some(Vec::new()) } else { None }, 0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let stride = k + 1;
    let mut color: Vec<u32> = start
        .iter()
        .map(|&c| if c == 0 || c as usize > k { rng.gen_range(1..=k as u32) } else { c })
        .collect();
    let mut gamma = vec![0i32; n * stride];
    for v in 0..n {
        for u in g.neighbors(v) {
            gamma[v * stride + color[u] as usize] += 1;
        }
    }
    let mut conflicts: i64 = (0..n).map(|v| gamma[v * stride + color[v] as usize] as i64).sum::<i64>() / 2;
    let mut best_conflicts = conflicts;
    let mut tabu_until = vec![0u64; n * stride];
    let mut iter = 0u64;
    while conflicts > 0 {
        if iter >= max_iters {
            return (None, iter);
        }
        iter += 1;
        let mut best: Option<(usize, u32)> = None;
        let mut best_delta = i32::MAX;
        let mut ties = 0u32;
        let mut conflicted = 0usize;
        for v in 0..n {
            let own = gamma[v * stride + color[v] as usize];
            if own == 0 {
                continue;
            }
            conflicted += 1;
            for c in 1..=k as u32 {
                if c == color[v] {
                    continue;
                }
                let delta = gamma[v * stride + c as usize] - own;
                let aspiring = conflicts + (delta as i64) < best_conflicts;
                if tabu_until[v * stride + c as usize] > iter && !aspiring {
                    continue;
                }
                if delta < best_delta {
                    best_delta = delta;
                    best = Some((v, c));
                    ties = 1;
                } else if delta == best_delta {
                    ties += 1;
                    if rng.gen_range(0..ties) == 0 {
                        best = Some((v, c));
                    }
                }
            }
        }
        let Some((v, c)) = best else { continue };
        let old = color[v];
        color[v] = c;
        for u in g.neighbors(v) {
            gamma[u * stride + old as usize] -= 1;
            gamma[u * stride + c as usize] += 1;
        }
        conflicts += best_delta as i64;
        best_conflicts = best_conflicts.min(conflicts);
        tabu_until[v * stride + old as usize] = iter + rng.gen_range(0..10u64) + (conflicted as u64 * 6) / 10;
    }
    (Some(color), iter)
}

/// Extends a partial coloring using as few fresh colors beyond the precolored palette as the budget allows.
///
/// Returns the completed colors and the number of fresh colors opened.
pub fn extend_with_fewest_fresh(g: &Graph, precolor: &[Option<u32>], budget: u64) -> Result<(Vec<u32>, usize, bool)> {
    let fixed = precolor.iter().flatten().copied().max().unwrap_or(0) as usize;
    let greedy = dsatur_extend(g, precolor)?;
    let greedy_fresh = (greedy.iter().copied().max().unwrap_or(0) as usize).saturating_sub(fixed);
    let mut spent = 0u64;
    for fresh in 0..greedy_fresh {
        let (d, used) = k_coloring(g, fixed + fresh, precolor, budget.saturating_sub(spent))?;
        spent += used;
        match d {
            Decision::Colorable(c) => return Ok((c, fresh, true)),
            Decision::NotColorable => continue,
            Decision::Undecided => return Ok((greedy, greedy_fresh, false)),
        }
    }
    Ok((greedy, greedy_fresh, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::validate_coloring;
    use crate::families::{complete, cycle, johnson, path};

    #[test]
    fn complete_and_odd_cycle() {
        assert_eq!(exact_chromatic(&complete(5).unwrap(), 1000).unwrap().exact(), Some(5));
        assert_eq!(exact_chromatic(&cycle(7).unwrap(), 1000).unwrap().exact(), Some(3));
        assert_eq!(exact_chromatic(&cycle(8).unwrap(), 1000).unwrap().exact(), Some(2));
        assert_eq!(exact_chromatic(&Graph::empty(3, false), 10).unwrap().exact(), Some(1));
    }

    #[test]
    fn petersen_needs_three() {
        let out = exact_chromatic(&johnson(5, 2, 0).unwrap(), 100_000).unwrap();
        assert_eq!(out.exact(), Some(3));
        assert!(validate_coloring(&johnson(5, 2, 0).unwrap(), out.coloring()).unwrap().proper);
    }

    #[test]
    fn disconnected_takes_max_over_components() {
        let g = complete(4).unwrap().disjoint_copies(1).unwrap();
        let two = g.edge_union(&Graph::empty(4, false)).unwrap();
        let mixed = product_of(&two);
        assert_eq!(exact_chromatic(&mixed, 1000).unwrap().exact(), Some(4));
    }

    fn product_of(g: &Graph) -> Graph {
        // K_4 plus a disjoint path on three vertices
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        edges.extend([(4, 5), (5, 6)]);
        Graph::from_edges(7, &edges, false).unwrap()
    }

    #[test]
    fn clique_search() {
        let (c, exact) = max_clique(&johnson(6, 3, 1).unwrap(), 1_000_000);
        assert!(exact);
        let g = johnson(6, 3, 1).unwrap();
        for (a, &u) in c.iter().enumerate() {
            for &v in &c[a + 1..] {
                assert!(g.has_edge(u, v));
            }
        }
        assert_eq!(max_clique(&path(4).unwrap(), 100).0.len(), 2);
    }

    #[test]
    fn decision_with_precolor() {
        let c5 = cycle(5).unwrap();
        let pre = vec![Some(1), None, None, None, None];
        assert_eq!(k_coloring(&c5, 2, &pre, 1000).unwrap().0, Decision::NotColorable);
        match k_coloring(&c5, 3, &pre, 1000).unwrap().0 {
            Decision::Colorable(c) => {
                assert_eq!(c[0], 1);
                assert!(validate_coloring(&c5, &Coloring::new(c).unwrap()).unwrap().proper);
            }
            other => panic!("{other:?}"),
        }
        let bad = vec![Some(1), Some(1), None, None, None];
        assert!(k_coloring(&c5, 3, &bad, 10).is_err());
    }

    #[test]
    fn budget_exhaustion_is_a_value() {
        let g = johnson(8, 4, 1).unwrap();
        let out = exact_chromatic(&g, 1).unwrap();
        let (lo, hi) = out.bounds();
        assert!(lo <= hi);
        assert!(validate_coloring(&g, out.coloring()).unwrap().proper);
    }

    #[test]
    fn tabu_finds_petersen_three_coloring() {
        let g = johnson(5, 2, 0).unwrap();
        let (c, _) = tabu_coloring(&g, 3, &[1; 10], 1, 10_000);
        let c = c.expect("three colors suffice");
        assert!(validate_coloring(&g, &Coloring::new(c).unwrap()).unwrap().proper);
        assert_eq!(tabu_coloring(&g, 2, &[1; 10], 1, 1_000).0, None);
    }

    #[test]
    fn extension_reuses_palette() {
        let p = path(4).unwrap();
        let pre = vec![Some(1), None, None, Some(2)];
        let (c, fresh, _) = extend_with_fewest_fresh(&p, &pre, 1000).unwrap();
        assert_eq!(fresh, 0);
        assert_eq!((c[0], c[3]), (1, 2));
    }
}
