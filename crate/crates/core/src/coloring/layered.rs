//! Level-by-level colorings of `Q_n^[♮p]` for `p ∈ {n-2, n-3, n-4}`.
//!
//! Each variant lists per-level rules: a middle level takes a supplied coloring of the
//! generalized Johnson graph it induces (possibly carried to the mirror level by
//! complementing every vertex), and runs of outer levels share one color. Rules are
//! applied in order and a later rule never overwrites a level an earlier one colored.
//! Whatever the rules leave blank, or any level where they produce a monochromatic
//! edge, is completed afterwards and reported as such.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::solver::{extend_with_fewest_fresh, k_coloring, Decision};
use super::{exact_chromatic, j841_five_coloring, kneser_min_coloring, validate_coloring, Coloring};
use crate::error::{invalid, Error, Result};
use crate::exact::exact_distance_graph;
use crate::families::{hypercube, johnson, subset_index};
use crate::graph::Graph;

/// True when some vertex of weight `i` and some vertex of weight `j` are at Hamming distance `p` in `Q_n`.
pub fn level_adjacent(n: usize, p: usize, i: usize, j: usize) -> bool {
    let (i, j, n, p) = (i as i64, j as i64, n as i64, p as i64);
    (j - i - p) % 2 == 0 && (j - i).abs() <= p && i + j >= p && i + j <= 2 * n - p && i <= n && j <= n
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LayeredVariant {
    /// `p = n-2`, `n` even: middle level plus two outer colors.
    NMinus2,
    /// `p = n-3`, `n` odd.
    NMinus3,
    /// `p = n-4`, `n` even, levels `n/2 - 2`, `n/2`, `n/2 + 2`.
    NMinus4First,
    /// `p = n-4`, `n` even, level `n/2 - 1` plus two outer colors.
    NMinus4Second,
}

impl LayeredVariant {
    pub const ALL: [LayeredVariant; 4] = [
        LayeredVariant::NMinus2,
        LayeredVariant::NMinus3,
        LayeredVariant::NMinus4First,
        LayeredVariant::NMinus4Second,
    ];

    pub fn distance(self, n: usize) -> usize {
        n - match self {
            LayeredVariant::NMinus2 => 2,
            LayeredVariant::NMinus3 => 3,
            LayeredVariant::NMinus4First | LayeredVariant::NMinus4Second => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LayeredVariant::NMinus2 => "n-2",
            LayeredVariant::NMinus3 => "n-3",
            LayeredVariant::NMinus4First => "n-4/first",
            LayeredVariant::NMinus4Second => "n-4/second",
        }
    }

    /// The variants that apply to `(n, p)`.
    pub fn for_distance(n: usize, p: usize) -> Vec<LayeredVariant> {
        Self::ALL.into_iter().filter(|v| v.check(n).is_ok() && v.distance(n) == p).collect()
    }

    fn check(self, n: usize) -> Result<()> {
        let ok = match self {
            LayeredVariant::NMinus2 => n % 2 == 0 && n >= 4,
            LayeredVariant::NMinus3 => n % 2 == 1 && n >= 5,
            LayeredVariant::NMinus4First | LayeredVariant::NMinus4Second => n % 2 == 0 && n >= 6,
        };
        if !ok || n > 12 {
            return Err(invalid(format!("variant {} does not apply to n={n}", self.name())));
        }
        Ok(())
    }

    /// Johnson graphs `J(n,k,i)` whose colorings the rules consume, as `(k, i)`.
    pub fn required(self, n: usize) -> Vec<(usize, usize)> {
        let h = n / 2;
        match self {
            LayeredVariant::NMinus2 => vec![(h, 1)],
            LayeredVariant::NMinus3 => vec![((n - 3) / 2, 0), ((n - 1) / 2, 1)],
            LayeredVariant::NMinus4First => vec![(h - 2, 0), (h, 2)],
            LayeredVariant::NMinus4Second => vec![(h - 1, 1)],
        }
    }

    fn rules(self, n: usize, counts: &BTreeMap<(usize, usize), u32>) -> Vec<(Vec<usize>, Rule)> {
        let all = |pred: &dyn Fn(usize) -> bool| (0..=n).filter(|&i| pred(i)).collect::<Vec<_>>();
        let h = n / 2;
        match self {
            LayeredVariant::NMinus2 => {
                let c = counts[&(h, 1)];
                vec![
                    (vec![h], Rule::sub((h, 1), 0, false)),
                    (all(&|i| i + 2 <= h), Rule::Constant(c + 1)),
                    (all(&|i| i >= h + 2), Rule::Constant(c + 2)),
                ]
            }
            LayeredVariant::NMinus3 => {
                let (a, b) = ((n - 3) / 2, (n - 1) / 2);
                let (ca, cb) = (counts[&(a, 0)], counts[&(b, 1)]);
                vec![
                    (vec![a], Rule::sub((a, 0), 0, false)),
                    (vec![b + 1], Rule::sub((b, 1), ca, true)),
                    (all(&|i| i > a + 3), Rule::Constant(ca + cb + 1)),
                    (all(&|i| i < a), Rule::Constant(1)),
                ]
            }
            LayeredVariant::NMinus4First => {
                let a = h - 2;
                let ca = counts[&(a, 0)];
                vec![
                    (vec![a], Rule::sub((a, 0), 0, false)),
                    (vec![h + 2], Rule::sub((a, 0), ca, true)),
                    (vec![h], Rule::sub((h, 2), 2 * ca, false)),
                    (all(&|i| i + 1 < h), Rule::Constant(1)),
                    (all(&|i| i > h + 1), Rule::Constant(ca + 1)),
                ]
            }
            LayeredVariant::NMinus4Second => {
                let b = h - 1;
                let cb = counts[&(b, 1)];
                vec![
                    (vec![b], Rule::sub((b, 1), 0, false)),
                    (all(&|i| i + 3 <= h), Rule::Constant(cb + 1)),
                    (all(&|i| i >= h + 2), Rule::Constant(cb + 2)),
                ]
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Rule {
    /// Color from `J(n,k,i)`, shifted by `offset`; with `complement`, vertex `x` takes the color of `!x`.
    Sub { key: (usize, usize), offset: u32, complement: bool },
    Constant(u32),
}

impl Rule {
    fn sub(key: (usize, usize), offset: u32, complement: bool) -> Self {
        Rule::Sub { key, offset, complement }
    }
}

/// Colorings of generalized Johnson graphs `J(n,k,i)` keyed by `(k, i)`, vertices in colex order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubColorings(pub BTreeMap<(usize, usize), Coloring>);

/// Sub-colorings from the explicit Kneser coloring (`i = 0`), the stored `J(8,4,1)`
/// certificate, or the exact solver under `budget` (its best coloring if undecided).
pub fn default_sub_colorings(n: usize, variant: LayeredVariant, budget: u64) -> Result<SubColorings> {
    variant.check(n)?;
    let mut out = BTreeMap::new();
    for (k, i) in variant.required(n) {
        let c = if i == 0 {
            kneser_min_coloring(n, k)?
        } else if (n, k, i) == (8, 4, 1) {
            j841_five_coloring()?
        } else {
            exact_chromatic(&johnson(n, k, i)?, budget)?.coloring().clone()
        };
        out.insert((k, i), c);
    }
    Ok(SubColorings(out))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleConflict {
    pub levels: (usize, usize),
    pub witness: (usize, usize),
    pub color: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayeredReport {
    pub n: usize,
    pub p: usize,
    pub variant: LayeredVariant,
    /// `(k, i, colors)` for every supplied Johnson coloring.
    pub sub_coloring_counts: Vec<(usize, usize, usize)>,
    /// Levels colored by the rules and kept.
    pub rule_levels: Vec<usize>,
    /// Levels no rule mentions.
    pub uncovered_levels: Vec<usize>,
    /// Levels the rules colored but that had to be cleared because of `conflicts`.
    pub cleared_levels: Vec<usize>,
    pub conflicts: Vec<RuleConflict>,
    pub rule_colors: usize,
    /// True when the rules alone color every vertex properly.
    pub printed_rule_sufficient: bool,
    pub fallback: Option<String>,
    pub fresh_colors: usize,
    pub colors_used: usize,
    pub proper: bool,
    pub violations: Vec<(usize, usize)>,
    pub coloring: Coloring,
}

const FALLBACK_BUDGET: u64 = 100_000;

pub fn layered_coloring(n: usize, variant: LayeredVariant, subs: &SubColorings) -> Result<LayeredReport> {
    variant.check(n)?;
    let p = variant.distance(n);
    let q = exact_distance_graph(&hypercube(n)?, p)?;
    let full = (1usize << n) - 1;

    let mut counts = BTreeMap::new();
    let mut normalized = BTreeMap::new();
    for key @ (k, i) in variant.required(n) {
        let c = subs
            .0
            .get(&key)
            .ok_or_else(|| invalid(format!("missing coloring of J({n},{k},{i})")))?;
        let jg = johnson(n, k, i)?;
        let verdict = validate_coloring(&jg, c)?;
        if let Some(&(u, v)) = verdict.violations.first() {
            return Err(Error::ImproperAssembly(u, v));
        }
        let c = c.normalized();
        counts.insert(key, c.count() as u32);
        normalized.insert(key, c);
    }

    let mut colors = vec![0u32; 1 << n];
    let mut level_of_rule: BTreeSet<usize> = BTreeSet::new();
    for (levels, rule) in variant.rules(n, &counts) {
        for level in levels {
            if !level_of_rule.insert(level) {
                continue;
            }
            for x in (0..=full).filter(|x: &usize| x.count_ones() as usize == level) {
                colors[x] = match rule {
                    Rule::Constant(c) => c,
                    Rule::Sub { key, offset, complement } => {
                        let src = if complement { full ^ x } else { x };
                        offset + normalized[&key].color(subset_index(n, src as u64))
                    }
                };
            }
        }
    }
    let weight = |x: usize| x.count_ones() as usize;

    let mut conflicts: Vec<RuleConflict> = Vec::new();
    let mut seen_pairs = BTreeSet::new();
    for (u, v) in q.edges() {
        if colors[u] != 0 && colors[u] == colors[v] {
            let levels = (weight(u).min(weight(v)), weight(u).max(weight(v)));
            if seen_pairs.insert(levels) {
                conflicts.push(RuleConflict {
                    levels,
                    witness: (u, v),
                    color: colors[u],
                });
            }
        }
    }
    let cleared: BTreeSet<usize> = conflicts.iter().flat_map(|c| [c.levels.0, c.levels.1]).collect();
    for x in 0..=full {
        if cleared.contains(&weight(x)) {
            colors[x] = 0;
        }
    }
    let rule_levels: Vec<usize> = level_of_rule.difference(&cleared).copied().collect();
    let uncovered: Vec<usize> = (0..=n).filter(|l| !level_of_rule.contains(l)).collect();
    let rule_colors = colors.iter().filter(|&&c| c != 0).collect::<BTreeSet<_>>().len();

    let mut fallback = None;
    let mut fresh = 0;
    if colors.contains(&0) {
        let (filled, how, f) = complete(&q, &colors)?;
        colors = filled;
        fallback = Some(how);
        fresh = f;
    }

    let coloring = Coloring::new(colors)?;
    let verdict = validate_coloring(&q, &coloring)?;
    Ok(LayeredReport {
        n,
        p,
        variant,
        sub_coloring_counts: counts.iter().map(|(&(k, i), &c)| (k, i, c as usize)).collect(),
        rule_levels,
        uncovered_levels: uncovered.clone(),
        cleared_levels: cleared.into_iter().collect(),
        printed_rule_sufficient: uncovered.is_empty() && conflicts.is_empty(),
        conflicts,
        rule_colors,
        fallback,
        fresh_colors: fresh,
        colors_used: coloring.count(),
        proper: verdict.proper,
        violations: verdict.violations,
        coloring,
    })
}

/// Fills the zeros of `colors`: first within the colors already present, then by copying a
/// fully colored component through `x -> x xor 1`, then with as few fresh colors as the search finds.
fn complete(q: &Graph, colors: &[u32]) -> Result<(Vec<u32>, String, usize)> {
    let palette: BTreeSet<u32> = colors.iter().copied().filter(|&c| c != 0).collect();
    // compact the palette so the search sees colors 1..=k
    let rank: BTreeMap<u32, u32> = palette.iter().enumerate().map(|(i, &c)| (c, i as u32 + 1)).collect();
    let unrank: Vec<u32> = palette.iter().copied().collect();
    let pre: Vec<Option<u32>> = colors.iter().map(|c| rank.get(c).copied()).collect();
    let k = palette.len();
    let back = |c: Vec<u32>| -> Vec<u32> {
        c.into_iter()
            .map(|x| if (x as usize) <= k { unrank[x as usize - 1] } else { x - k as u32 + unrank.last().copied().unwrap_or(0) })
            .collect()
    };

    if k > 0 {
        if let (Decision::Colorable(c), _) = k_coloring(q, k, &pre, FALLBACK_BUDGET)? {
            return Ok((back(c), "extension within the rule palette".into(), 0));
        }
    }

    if let Some(t) = transport(q, colors) {
        return Ok((t, "copy of the other parity component under x -> x xor 1".into(), 0));
    }

    let (c, f, _) = extend_with_fewest_fresh(q, &pre, FALLBACK_BUDGET)?;
    Ok((back(c), format!("extension with {f} fresh colors"), f))
}

/// Recolors every component holding a blank vertex from its image under `x -> x xor 1`,
/// when that image is fully colored. `None` if some blank component has no such image.
fn transport(q: &Graph, colors: &[u32]) -> Option<Vec<u32>> {
    let comps = q.connected_components();
    let mut comp_of = vec![0usize; q.order()];
    for (ci, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = ci;
        }
    }
    let mut out = colors.to_vec();
    for c in &comps {
        if c.iter().all(|&v| colors[v] != 0) {
            continue;
        }
        let image = comp_of[c[0] ^ 1];
        if comps[image].iter().any(|&v| colors[v] == 0) {
            return None;
        }
        for &v in c {
            out[v] = colors[v ^ 1];
        }
    }
    let ok = q.edges().all(|(u, v)| out[u] != out[v]);
    ok.then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::all_pairs_distances;

    #[test]
    fn level_adjacency_matches_hypercube() {
        for n in 1..=7 {
            let q = hypercube(n).unwrap();
            let d = all_pairs_distances(&q);
            for p in 0..=n {
                let mut seen = BTreeSet::new();
                for u in 0..1usize << n {
                    for v in 0..1usize << n {
                        if d.get(u, v) == Some(p as u32) {
                            seen.insert((u.count_ones() as usize, v.count_ones() as usize));
                        }
                    }
                }
                for i in 0..=n {
                    for j in 0..=n {
                        assert_eq!(level_adjacent(n, p, i, j), seen.contains(&(i, j)), "n={n} p={p} i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn n6_minus2_uses_johnson_middle() {
        let subs = default_sub_colorings(6, LayeredVariant::NMinus2, 1_000_000).unwrap();
        let r = layered_coloring(6, LayeredVariant::NMinus2, &subs).unwrap();
        assert!(r.proper);
        assert_eq!(r.sub_coloring_counts, vec![(3, 1, 6)]);
        assert_eq!(r.uncovered_levels, vec![2, 4]);
        assert!(!r.printed_rule_sufficient);
        assert!(r.colors_used <= 8);
    }

    #[test]
    fn n7_minus3() {
        let subs = default_sub_colorings(7, LayeredVariant::NMinus3, 1_000_000).unwrap();
        let r = layered_coloring(7, LayeredVariant::NMinus3, &subs).unwrap();
        assert!(r.proper);
        assert!(r.conflicts.is_empty());
        assert_eq!(r.uncovered_levels, vec![3, 5]);
    }

    #[test]
    fn second_n_minus_4_rule_clashes_on_its_top_level() {
        let subs = default_sub_colorings(6, LayeredVariant::NMinus4Second, 1_000_000).unwrap();
        let r = layered_coloring(6, LayeredVariant::NMinus4Second, &subs).unwrap();
        assert!(r.proper);
        assert_eq!(r.cleared_levels, vec![5]);
        let c = &r.conflicts[0];
        assert_eq!(c.levels, (5, 5));
        assert_eq!(c.witness.0.count_ones(), 5);
    }

    #[test]
    fn improper_sub_coloring_is_rejected() {
        let mut subs = default_sub_colorings(6, LayeredVariant::NMinus2, 1_000_000).unwrap();
        subs.0.insert((3, 1), Coloring::new(vec![1; 20]).unwrap());
        assert!(matches!(
            layered_coloring(6, LayeredVariant::NMinus2, &subs),
            Err(Error::ImproperAssembly(_, _))
        ));
    }

    #[test]
    fn wrong_parity_is_rejected() {
        assert!(layered_coloring(7, LayeredVariant::NMinus2, &SubColorings::default()).is_err());
        assert_eq!(LayeredVariant::for_distance(10, 6), vec![LayeredVariant::NMinus4First, LayeredVariant::NMinus4Second]);
    }
}
