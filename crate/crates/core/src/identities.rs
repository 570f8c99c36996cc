//! Right-hand sides of the exact-distance product identities and positional checks against
//! the directly computed left-hand sides.
//!
//! `G^[♮0]` carries a loop at every vertex, so the direct product `G^[♮0] × K` copies `K`
//! into every layer; that is how the `i = 0` and `i = p` summands contribute.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exact::{exact_distance_graph, path_power};
use crate::families::path;
use crate::graph::Graph;
use crate::products::{product, ProductKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub instance: String,
    pub pass: bool,
    /// Edges present in the left-hand side only.
    pub only_in_lhs: Vec<(usize, usize)>,
    /// Edges present in the right-hand side only.
    pub only_in_rhs: Vec<(usize, usize)>,
    /// Labels of the first few differing pairs.
    pub witnesses: Vec<String>,
    /// Failed checks that are not edge differences (component counts and the like).
    pub failures: Vec<String>,
}

fn union_all(parts: Vec<Graph>, order: usize) -> Result<Graph> {
    let mut acc = Graph::empty(order, false);
    for g in parts {
        acc = acc.edge_union(&g)?;
    }
    Ok(acc)
}

fn xd(g: &Graph, p: usize) -> Result<Graph> {
    exact_distance_graph(g, p)
}

/// `⊎_{i=0}^{p} G^[♮i] × H^[♮p-i]`.
pub fn rhs_cartesian(g: &Graph, h: &Graph, p: usize) -> Result<Graph> {
    let parts = (0..=p)
        .map(|i| product(ProductKind::Direct, &xd(g, i)?, &xd(h, p - i)?))
        .collect::<Result<Vec<_>>>()?;
    union_all(parts, g.order() * h.order())
}

/// `⊎_{i=1}^{p-1} (G^[♮i] × H^[♮p-i]) ⊎ (G^[♮p] □ H^[♮p])`, for `p >= 1`.
pub fn rhs_cartesian_second(g: &Graph, h: &Graph, p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(invalid("the second form needs p >= 1"));
    }
    let mut parts = (1..p)
        .map(|i| product(ProductKind::Direct, &xd(g, i)?, &xd(h, p - i)?))
        .collect::<Result<Vec<_>>>()?;
    parts.push(product(ProductKind::Cartesian, &xd(g, p)?, &xd(h, p)?)?);
    union_all(parts, g.order() * h.order())
}

/// `⊎_{i=0}^{p} (G^[♮p] × H^[♮i]) ⊎ (G^[♮i] × H^[♮p])`.
pub fn rhs_strong(g: &Graph, h: &Graph, p: usize) -> Result<Graph> {
    let (gp, hp) = (xd(g, p)?, xd(h, p)?);
    let mut parts = Vec::new();
    for i in 0..=p {
        parts.push(product(ProductKind::Direct, &gp, &xd(h, i)?)?);
        parts.push(product(ProductKind::Direct, &xd(g, i)?, &hp)?);
    }
    union_all(parts, g.order() * h.order())
}

fn require_isolate_free(g: &Graph) -> Result<()> {
    match g.first_isolated() {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// `(G^{♮2} □ H^{♮2}) ⊎ (G^{♮2} × H^[♮2]) ⊎ (G^[♮2] × H^{♮2})` for isolate-free factors.
pub fn rhs_direct2(g: &Graph, h: &Graph) -> Result<Graph> {
    require_isolate_free(g)?;
    require_isolate_free(h)?;
    let (g2, h2) = (path_power(g, 2)?, path_power(h, 2)?);
    let (gx, hx) = (xd(g, 2)?, xd(h, 2)?);
    union_all(
        vec![
            product(ProductKind::Cartesian, &g2, &h2)?,
            product(ProductKind::Direct, &g2, &hx)?,
            product(ProductKind::Direct, &gx, &h2)?,
        ],
        g.order() * h.order(),
    )
}

/// `G^[♮2] ∘ H̄` for `p = 2` and `G^[♮p] ∘ K̄_{n(H)}` for `p >= 3`; `G` isolate-free with at least two vertices.
pub fn rhs_lex(g: &Graph, h: &Graph, p: usize) -> Result<Graph> {
    if g.order() < 2 {
        return Err(invalid("G must have at least two vertices; for K_1 the product is H itself"));
    }
    require_isolate_free(g)?;
    match p {
        0 | 1 => Err(invalid("the lexicographic identity needs p >= 2")),
        2 => product(ProductKind::Lexicographic, &xd(g, 2)?, &h.complement()?),
        _ => product(ProductKind::Lexicographic, &xd(g, p)?, &h.edgeless_like()),
    }
}

fn pair_name(g: &Graph, (u, v): (usize, usize)) -> String {
    match (g.label(u), g.label(v)) {
        (Some(a), Some(b)) => format!("{a}~{b}"),
        _ => format!("{u}~{v}"),
    }
}

/// Positional edge-set comparison of two graphs on the same labeled vertex set.
pub fn check_identity(identity: &str, instance: &str, lhs: &Graph, rhs: &Graph) -> Result<IdentityReport> {
    if lhs.order() != rhs.order() {
        return Err(Error::OrderMismatch {
            left: lhs.order(),
            right: rhs.order(),
        });
    }
    if let (Some(a), Some(b)) = (lhs.labels(), rhs.labels()) {
        if let Some(i) = (0..a.len()).find(|&i| a[i] != b[i]) {
            return Err(Error::LabelMismatch(i));
        }
    }
    let only_in_lhs: Vec<_> = lhs.edges().filter(|&(u, v)| !rhs.has_edge(u, v)).collect();
    let only_in_rhs: Vec<_> = rhs.edges().filter(|&(u, v)| !lhs.has_edge(u, v)).collect();
    let witnesses = only_in_lhs
        .iter()
        .chain(&only_in_rhs)
        .take(5)
        .map(|&e| pair_name(lhs, e))
        .collect();
    Ok(IdentityReport {
        identity: identity.to_string(),
        instance: instance.to_string(),
        pass: only_in_lhs.is_empty() && only_in_rhs.is_empty(),
        only_in_lhs,
        only_in_rhs,
        witnesses,
        failures: Vec::new(),
    })
}

fn describe(g: &Graph, h: &Graph, p: usize) -> String {
    format!("G(n={},m={}) H(n={},m={}) p={p}", g.order(), g.edge_count(), h.order(), h.edge_count())
}

/// `(G □ H)^[♮p]` against [`rhs_cartesian`].
pub fn cartesian_identity(g: &Graph, h: &Graph, p: usize) -> Result<IdentityReport> {
    let lhs = xd(&product(ProductKind::Cartesian, g, h)?, p)?;
    check_identity("cartesian", &describe(g, h, p), &lhs, &rhs_cartesian(g, h, p)?)
}

/// `(G □ H)^[♮p]` against [`rhs_cartesian_second`], `p >= 1`.
pub fn cartesian_second_identity(g: &Graph, h: &Graph, p: usize) -> Result<IdentityReport> {
    let lhs = xd(&product(ProductKind::Cartesian, g, h)?, p)?;
    check_identity("cartesian-second-form", &describe(g, h, p), &lhs, &rhs_cartesian_second(g, h, p)?)
}

/// `(G^[♮0] × H^[♮p]) ⊎ (G^[♮p] × H^[♮0])` against `G^[♮p] □ H^[♮p]`, `p >= 1`.
pub fn layer_terms_identity(g: &Graph, h: &Graph, p: usize) -> Result<IdentityReport> {
    let lhs = product(ProductKind::Direct, &xd(g, 0)?, &xd(h, p)?)?.edge_union(&product(ProductKind::Direct, &xd(g, p)?, &xd(h, 0)?)?)?;
    let rhs = product(ProductKind::Cartesian, &xd(g, p)?, &xd(h, p)?)?;
    check_identity("cartesian-layer-terms", &describe(g, h, p), &lhs, &rhs)
}

pub fn strong_identity(g: &Graph, h: &Graph, p: usize) -> Result<IdentityReport> {
    let lhs = xd(&product(ProductKind::Strong, g, h)?, p)?;
    check_identity("strong", &describe(g, h, p), &lhs, &rhs_strong(g, h, p)?)
}

pub fn direct2_identity(g: &Graph, h: &Graph) -> Result<IdentityReport> {
    let lhs = xd(&product(ProductKind::Direct, g, h)?, 2)?;
    check_identity("direct", &describe(g, h, 2), &lhs, &rhs_direct2(g, h)?)
}

/// `(G × H)^[♮2]` against `G^[♮2] ⊠ H^[♮2]`; expected to hold for triangle-free isolate-free factors.
pub fn direct2_strong_identity(g: &Graph, h: &Graph) -> Result<IdentityReport> {
    let lhs = xd(&product(ProductKind::Direct, g, h)?, 2)?;
    let rhs = product(ProductKind::Strong, &xd(g, 2)?, &xd(h, 2)?)?;
    check_identity("direct-triangle-free", &describe(g, h, 2), &lhs, &rhs)
}

pub fn lex_identity(g: &Graph, h: &Graph, p: usize) -> Result<IdentityReport> {
    let lhs = xd(&product(ProductKind::Lexicographic, g, h)?, p)?;
    check_identity("lexicographic", &describe(g, h, p), &lhs, &rhs_lex(g, h, p)?)
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges()
        .filter(|&(u, v)| u != v)
        .all(|(u, v)| crate::bits::is_empty(&and_rows(g.row(u), g.row(v))))
}

fn and_rows(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKind {
    Cartesian,
    Direct,
}

/// Checks the local structure of `(P_m □ P_m)^[♮2]` or `(P_m × P_m)^[♮2]` on interior vertices
/// (at least two steps from the boundary): parity component count, degree 8, the exact
/// neighborhood, and king-move adjacency after the coordinate change of each component.
pub fn grid_window_check(m: usize, which: GridKind) -> Result<IdentityReport> {
    if m < 9 {
        return Err(invalid(format!("window side must be at least 9, got {m}")));
    }
    let pm = path(m)?;
    let kind = match which {
        GridKind::Cartesian => ProductKind::Cartesian,
        GridKind::Direct => ProductKind::Direct,
    };
    let x = xd(&product(kind, &pm, &pm)?, 2)?;
    let at = |i: i64, j: i64| (i * m as i64 + j) as usize;
    let interior: Vec<(i64, i64)> = (2..m as i64 - 2).flat_map(|i| (2..m as i64 - 2).map(move |j| (i, j))).collect();

    let mut failures = Vec::new();
    let want_components = match which {
        GridKind::Cartesian => 2,
        GridKind::Direct => 4,
    };
    let comps = x.component_count();
    if comps != want_components {
        failures.push(format!("{comps} components, expected {want_components}"));
    }

    let offsets: Vec<(i64, i64)> = match which {
        GridKind::Cartesian => vec![(-1, -1), (-1, 1), (1, -1), (1, 1), (0, -2), (0, 2), (-2, 0), (2, 0)],
        GridKind::Direct => vec![(-2, -2), (-2, 2), (2, -2), (2, 2), (0, -2), (0, 2), (-2, 0), (2, 0)],
    };
    let mut only_in_lhs = Vec::new();
    let mut only_in_rhs = Vec::new();
    for &(i, j) in &interior {
        let v = at(i, j);
        if x.degree(v) != 8 {
            failures.push(format!("({i},{j}) has degree {}", x.degree(v)));
        }
        let expected: Vec<usize> = offsets.iter().map(|&(a, b)| at(i + a, j + b)).collect();
        for u in x.neighbors(v) {
            if !expected.contains(&u) {
                only_in_lhs.push((v.min(u), v.max(u)));
            }
        }
        for &u in &expected {
            if !x.has_edge(u, v) {
                only_in_rhs.push((v.min(u), v.max(u)));
            }
        }
    }

    // coordinate change onto the king's graph, per component
    let chart = |(i, j): (i64, i64)| -> (u8, i64, i64) {
        match which {
            GridKind::Cartesian => {
                let s = ((i + j) % 2) as u8;
                (s, (i + j - s as i64).div_euclid(2), (i - j - s as i64).div_euclid(2))
            }
            GridKind::Direct => {
                let (a, b) = (i % 2, j % 2);
                ((2 * a + b) as u8, (i - a) / 2, (j - b) / 2)
            }
        }
    };
    for (ai, &u) in interior.iter().enumerate() {
        let cu = chart(u);
        for &v in &interior[ai + 1..] {
            let cv = chart(v);
            if cu.0 != cv.0 {
                continue;
            }
            let king = (cu.1 - cv.1).abs().max((cu.2 - cv.2).abs()) == 1;
            let edge = x.has_edge(at(u.0, u.1), at(v.0, v.1));
            if king != edge {
                failures.push(format!("{u:?} and {v:?}: edge {edge}, king move {king}"));
            }
        }
    }
    only_in_lhs.sort_unstable();
    only_in_lhs.dedup();
    only_in_rhs.sort_unstable();
    only_in_rhs.dedup();
    let witnesses = only_in_lhs.iter().chain(&only_in_rhs).take(5).map(|&e| pair_name(&x, e)).collect();
    failures.truncate(20);
    Ok(IdentityReport {
        identity: format!("grid-window-{}", if which == GridKind::Cartesian { "cartesian" } else { "direct" }),
        instance: format!("m={m}, {} interior vertices, {comps} components", interior.len()),
        pass: only_in_lhs.is_empty() && only_in_rhs.is_empty() && failures.is_empty(),
        only_in_lhs,
        only_in_rhs,
        witnesses,
        failures,
    })
}
