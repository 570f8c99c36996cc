//! Explicit colorings of Kneser-type graphs.

use super::Coloring;
use crate::error::{invalid, Result};
use crate::families::subsets;

fn set(elems: &[u32]) -> u64 {
    elems.iter().map(|&e| 1u64 << (e - 1)).sum()
}

fn has(mask: u64, e: u32) -> bool {
    mask >> (e - 1) & 1 == 1
}

/// Every case of the twelve-color rule for `K(8,3,1)` whose condition holds for `mask`.
///
/// The rule is read in the printed order; a well-defined coloring has exactly one
/// match per 3-subset of `{1..8}`, except that the last case is the catch-all.
pub fn k831_case(mask: u64) -> Vec<u32> {
    let mut hits = Vec::new();
    for i in 1..=4u32 {
        if has(mask, 2 * i - 1) && has(mask, 2 * i) {
            hits.push(i);
        }
    }
    let triple = |a: u32, b: u32, pool: [u32; 4]| pool.iter().any(|&j| mask == set(&[a, b, j]));
    if triple(1, 4, [5, 6, 7, 8]) {
        hits.push(5);
    }
    if triple(2, 3, [5, 6, 7, 8]) {
        hits.push(6);
    }
    if triple(5, 8, [1, 2, 3, 4]) {
        hits.push(7);
    }
    if triple(6, 7, [1, 2, 3, 4]) {
        hits.push(8);
    }
    for (color, pool) in [(9, [1, 3, 5, 7]), (10, [1, 3, 6, 8]), (11, [2, 4, 5, 7]), (12, [2, 4, 6, 8])] {
        if mask & !set(&pool) == 0 {
            hits.push(color);
        }
    }
    hits
}

/// The twelve-color map on `K(8,3,1)`, vertices in colex order.
///
/// The first matching case wins; [`k831_case`] exposes all matches for checking that
/// the rule never needs that tie-break.
pub fn k831_coloring() -> Result<Coloring> {
    let colors = subsets(8, 3)
        .into_iter()
        .map(|m| {
            k831_case(m)
                .first()
                .copied()
                .ok_or_else(|| invalid(format!("no case of the rule covers mask {m:#b}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    Coloring::new(colors)
}

/// Coloring of `J(n,k,0)` with `n - 2k + 2` colors: the least element, capped.
pub fn kneser_min_coloring(n: usize, k: usize) -> Result<Coloring> {
    if k == 0 || 2 * k > n {
        return Err(invalid(format!("need 1 <= k <= n/2, got n={n} k={k}")));
    }
    let cap = (n - 2 * k + 2) as u32;
    let colors = subsets(n, k)
        .into_iter()
        .map(|m| (m.trailing_zeros() + 1).min(cap))
        .collect();
    Coloring::new(colors)
}
