//! Structure of `Q_n^[♮p]`: even-distance decomposition, the explicit isomorphism
//! `Q_n^[♮n-1] ≅ Q_n` for even `n`, Johnson graphs on the levels, and the parity split.
//!
//! Vertex `x` of `Q_n` is the integer whose binary expansion, most significant bit first,
//! is `x_1 x_2 ... x_n`. Bit `x_k` is therefore `(x >> (n - k)) & 1`.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exact::exact_distance_graph;
use crate::families::{binomial, hypercube, hypercube_level, johnson, subset_index, subsets};
use crate::graph::Graph;
use crate::identities::{check_identity, IdentityReport};
use crate::iso::{are_isomorphic_with_budget, verify_bijection, IsoOutcome, DEFAULT_ISO_BUDGET};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub check: String,
    pub instance: String,
    pub pass: bool,
    /// The verified bijection, when one was constructed or found.
    pub mapping: Option<Vec<usize>>,
    pub details: Vec<String>,
}

fn xq(n: usize, p: usize) -> Result<Graph> {
    exact_distance_graph(&hypercube(n)?, p)
}

/// `Q_n^[♮2p] ≅ 2(Q_{n-1}^[♮2p] ⊎ Q_{n-1}^[♮2p-1])`, decided by isomorphism search.
pub fn even_distance_decomposition_check(n: usize, p: usize) -> Result<StructureReport> {
    even_distance_decomposition_with_budget(n, p, DEFAULT_ISO_BUDGET)
}

pub fn even_distance_decomposition_with_budget(n: usize, p: usize, budget: u64) -> Result<StructureReport> {
    if p == 0 || 2 * p > n || n > 7 {
        return Err(invalid(format!("need 2 <= 2p <= n <= 7, got n={n}, p={p}")));
    }
    let lhs = xq(n, 2 * p)?.without_labels();
    let half = xq(n - 1, 2 * p)?.edge_union(&xq(n - 1, 2 * p - 1)?)?;
    let rhs = half.disjoint_copies(2)?.without_labels();
    let outcome = are_isomorphic_with_budget(&lhs, &rhs, budget);
    let mut details = vec![format!("{} vertices, {} edges on each side", lhs.order(), lhs.edge_count())];

    // projection of the even-weight half onto Q_{n-1}, as a cross-check
    let even: Vec<usize> = (0..1usize << n).filter(|x| x.count_ones() % 2 == 0).collect();
    let proj: Vec<usize> = even.iter().map(|x| x >> 1).collect();
    let explicit = verify_bijection(&lhs.induced_subgraph(&even)?, &half.clone().without_labels(), &proj);
    details.push(format!("dropping the last bit maps the even-weight half onto one copy: {explicit}"));

    let (pass, mapping) = match outcome {
        IsoOutcome::Isomorphic { mapping } => (true, Some(mapping)),
        IsoOutcome::NotIsomorphic => (false, None),
        IsoOutcome::Undecided { nodes } => {
            return Err(crate::error::Error::BudgetExceeded(nodes));
        }
    };
    Ok(StructureReport {
        check: "even-distance-decomposition".into(),
        instance: format!("n={n}, p={p}"),
        pass,
        mapping,
        details,
    })
}

fn bit(x: usize, n: usize, k: usize) -> usize {
    (x >> (n - k)) & 1
}

/// Number of odd 2-bit words `x_{2i+1} x_{2i+2}` (words `01` and `10`).
pub fn odd_words(x: usize, n: usize) -> usize {
    (0..n / 2).filter(|i| bit(x, n, 2 * i + 1) != bit(x, n, 2 * i + 2)).count()
}

/// Type A: an even number of odd words.
pub fn is_type_a(x: usize, n: usize) -> bool {
    odd_words(x, n) % 2 == 0
}

/// The word-wise map `f`: type A keeps even words and flips odd ones, type B flips even
/// words and keeps odd ones.
pub fn f_map(x: usize, n: usize) -> usize {
    let a = is_type_a(x, n);
    let mut y = x;
    for i in 0..n / 2 {
        let odd = bit(x, n, 2 * i + 1) != bit(x, n, 2 * i + 2);
        if odd == a {
            y ^= 0b11 << (n - 2 * i - 2);
        }
    }
    y
}

/// Builds `f` and verifies it is a bijection and an isomorphism `Q_n^[♮n-1] → Q_n`, and that it preserves type.
pub fn qn_nminus1_isomorphism(n: usize) -> Result<StructureReport> {
    if n < 2 || n % 2 == 1 {
        return Err(invalid(format!("n must be even and at least 2, got {n}")));
    }
    let mapping: Vec<usize> = (0..1usize << n).map(|x| f_map(x, n)).collect();
    let ok = verify_bijection(&xq(n, n - 1)?, &hypercube(n)?, &mapping);
    let type_kept = (0..1usize << n).all(|x| is_type_a(x, n) == is_type_a(mapping[x], n));
    Ok(StructureReport {
        check: "f: Q_n^[n-1] -> Q_n".into(),
        instance: format!("n={n}"),
        pass: ok && type_kept,
        mapping: Some(mapping),
        details: vec![format!("isomorphism {ok}"), format!("type preserved {type_kept}")],
    })
}

/// `A ↦ {1..n} ∖ A` as an isomorphism `J(n,k,i) → J(n,n-k,n-2k+i)`.
pub fn johnson_complement_isomorphism(n: usize, k: usize, i: usize) -> Result<StructureReport> {
    if i > k || k > n || n + i < 2 * k || n >= 32 {
        return Err(invalid(format!("need i <= k <= n and n-2k+i >= 0, got n={n} k={k} i={i}")));
    }
    let j = n + i - 2 * k;
    let (from, to) = (johnson(n, k, i)?, johnson(n, n - k, j)?);
    let full = (1u64 << n) - 1;
    let mapping: Vec<usize> = subsets(n, k).into_iter().map(|a| subset_index(n, full & !a)).collect();
    let ok = verify_bijection(&from, &to, &mapping);
    Ok(StructureReport {
        check: "johnson-complement".into(),
        instance: format!("J({n},{k},{i}) -> J({n},{},{j})", n - k),
        pass: ok,
        mapping: Some(mapping),
        details: Vec::new(),
    })
}

/// The level `L_i` of `Q_n^[♮p]` induces `J(n, i, i - p/2)`, compared positionally.
pub fn level_induces_johnson_check(n: usize, p: usize, i: usize) -> Result<IdentityReport> {
    if p % 2 == 1 || 2 * i < p || 2 * i + p > 2 * n {
        return Err(invalid(format!("need even p and p/2 <= i <= n - p/2, got n={n} p={p} i={i}")));
    }
    let level = xq(n, p)?.induced_subgraph(&hypercube_level(n, i)?)?.without_labels();
    let j = johnson(n, i, i - p / 2)?.without_labels();
    check_identity("level-johnson", &format!("n={n}, p={p}, L_{i} vs J({n},{i},{})", i - p / 2), &level, &j)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub n: usize,
    pub p: usize,
    /// No edge joins an even-weight and an odd-weight vertex.
    pub no_cross_edges: bool,
    /// Bit complement carries the even half onto the odd half (odd `n` only).
    pub complement_isomorphism: Option<bool>,
    /// Flipping the last bit carries the even half onto the odd half.
    pub flip_isomorphism: bool,
    /// Isomorphism search between the halves (even `n`).
    pub search: Option<IsoOutcome>,
    pub even_components: usize,
    pub odd_components: usize,
    pub pass: bool,
}

pub fn parity_components_check(n: usize, p: usize) -> Result<ParityReport> {
    parity_components_with_budget(n, p, DEFAULT_ISO_BUDGET)
}

pub fn parity_components_with_budget(n: usize, p: usize, budget: u64) -> Result<ParityReport> {
    if p % 2 == 1 || p > n {
        return Err(invalid(format!("need even p <= n, got n={n}, p={p}")));
    }
    let x = xq(n, p)?;
    let (even, odd): (Vec<usize>, Vec<usize>) = (0..1usize << n).partition(|v| v.count_ones() % 2 == 0);
    let no_cross_edges = x.edges().all(|(u, v)| (u ^ v).count_ones() % 2 == 0);
    let ge = x.induced_subgraph(&even)?.without_labels();
    let go = x.induced_subgraph(&odd)?.without_labels();
    // odd[k] is the k-th odd-weight vertex in ascending order
    let mut pos = vec![usize::MAX; 1 << n];
    for (k, &v) in odd.iter().enumerate() {
        pos[v] = k;
    }
    let image = |m: usize| -> Vec<usize> { even.iter().map(|&v| pos[v ^ m]).collect() };
    let full = (1usize << n) - 1;
    let complement_isomorphism = (n % 2 == 1).then(|| verify_bijection(&ge, &go, &image(full)));
    let flip_isomorphism = verify_bijection(&ge, &go, &image(1));
    let search = (n % 2 == 0).then(|| are_isomorphic_with_budget(&ge, &go, budget));
    let pass = no_cross_edges
        && complement_isomorphism.unwrap_or(true)
        && flip_isomorphism
        && !matches!(search, Some(IsoOutcome::NotIsomorphic));
    Ok(ParityReport {
        n,
        p,
        no_cross_edges,
        complement_isomorphism,
        flip_isomorphism,
        search,
        even_components: ge.component_count(),
        odd_components: go.component_count(),
        pass,
    })
}

/// Every vertex of `Q_n^[♮p]` has exactly `C(n, p)` vertices at distance `p` (itself when `p = 0`).
pub fn degree_law_check(n: usize, p: usize) -> Result<bool> {
    let x = xq(n, p)?;
    let want = binomial(n as u64, p as u64) as usize;
    Ok((0..x.order()).all(|v| crate::bits::count(x.row(v)) == want))
}

/// `Q_n^[♮n]` is the antipodal perfect matching.
pub fn antipodal_matching_check(n: usize) -> Result<bool> {
    let x = xq(n, n)?;
    let full = (1usize << n) - 1;
    Ok((0..x.order()).all(|v| x.degree(v) == 1 && x.has_edge(v, v ^ full)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete;

    #[test]
    fn small_decompositions() {
        let r = even_distance_decomposition_check(3, 1).unwrap();
        assert!(r.pass);
        let k4s = complete(4).unwrap().disjoint_copies(2).unwrap().without_labels();
        assert!(are_isomorphic_with_budget(&xq(3, 2).unwrap().without_labels(), &k4s, 1000).mapping().is_some());
        assert!(even_distance_decomposition_check(5, 1).unwrap().pass);
        assert!(even_distance_decomposition_check(6, 2).unwrap().pass);
        assert!(even_distance_decomposition_check(8, 1).is_err());
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_map(0b0000, 4), 0b0000);
        // one odd word: type B, so even words flip and the odd word stays
        assert_eq!(f_map(0b0100, 4), 0b0111);
        assert!(qn_nminus1_isomorphism(2).unwrap().pass);
        assert!(qn_nminus1_isomorphism(4).unwrap().pass);
        assert!(qn_nminus1_isomorphism(6).unwrap().pass);
        assert!(qn_nminus1_isomorphism(5).is_err());
    }

    #[test]
    fn complement_map() {
        let r = johnson_complement_isomorphism(5, 2, 1).unwrap();
        assert!(r.pass);
        // {1,2} is the first 2-set; {3,4,5} is the last 3-set
        assert_eq!(r.mapping.unwrap()[0], 9);
        assert_eq!(johnson_complement_isomorphism(8, 4, 1).unwrap().instance, "J(8,4,1) -> J(8,4,1)");
        assert!(johnson_complement_isomorphism(5, 3, 0).is_err());
    }

    #[test]
    fn levels() {
        assert!(level_induces_johnson_check(4, 2, 2).unwrap().pass);
        assert!(level_induces_johnson_check(6, 4, 3).unwrap().pass);
        assert!(level_induces_johnson_check(8, 6, 4).unwrap().pass);
        assert!(level_induces_johnson_check(6, 3, 3).is_err());
        assert!(level_induces_johnson_check(6, 4, 1).is_err());
    }

    #[test]
    fn parity_split() {
        let r = parity_components_check(5, 2).unwrap();
        assert_eq!(r.complement_isomorphism, Some(true));
        assert!(r.pass && r.search.is_none());
        let r = parity_components_check(4, 2).unwrap();
        assert!(r.no_cross_edges && r.pass);
        assert!(r.search.unwrap().mapping().is_some());
        assert!(parity_components_check(6, 4).unwrap().pass);
    }

    #[test]
    fn degree_and_matching() {
        for n in 1..=6 {
            assert!(antipodal_matching_check(n).unwrap());
            for p in 0..=n {
                assert!(degree_law_check(n, p).unwrap());
            }
        }
    }
}
