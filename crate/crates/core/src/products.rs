//! Cartesian, strong, direct and lexicographic products, plus closed-form product distances.
//!
//! Product vertex `(g, h)` has index `g * n(H) + h`. Loops in a factor take part in
//! the adjacency rules like any other edge, so a loop at `g` in the direct product
//! copies `H` onto the layer `{g} × V(H)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, VertexLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Strong,
    Direct,
    Lexicographic,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Strong,
        ProductKind::Direct,
        ProductKind::Lexicographic,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "□",
            ProductKind::Strong => "⊠",
            ProductKind::Direct => "×",
            ProductKind::Lexicographic => "∘",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Strong => "strong",
            ProductKind::Direct => "direct",
            ProductKind::Lexicographic => "lexicographic",
        };
        f.write_str(s)
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" | "box" => Ok(ProductKind::Cartesian),
            "strong" => Ok(ProductKind::Strong),
            "direct" | "tensor" => Ok(ProductKind::Direct),
            "lexicographic" | "lex" => Ok(ProductKind::Lexicographic),
            other => Err(invalid(format!("unknown product kind `{other}`"))),
        }
    }
}

pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    let loops = g.loops_allowed() || h.loops_allowed();
    let mut out = Graph::empty(ng * nh, loops);
    for g1 in 0..ng {
        for h1 in 0..nh {
            let row = out.row_mut(g1 * nh + h1);
            let cart = matches!(kind, ProductKind::Cartesian | ProductKind::Strong);
            let direct = matches!(kind, ProductKind::Direct | ProductKind::Strong);
            if cart {
                for g2 in bits::ones(g.row(g1)) {
                    bits::set(row, g2 * nh + h1);
                }
                for h2 in bits::ones(h.row(h1)) {
                    bits::set(row, g1 * nh + h2);
                }
            }
            if direct {
                for g2 in bits::ones(g.row(g1)) {
                    for h2 in bits::ones(h.row(h1)) {
                        bits::set(row, g2 * nh + h2);
                    }
                }
            }
            if kind == ProductKind::Lexicographic {
                for g2 in bits::ones(g.row(g1)) {
                    for h2 in 0..nh {
                        bits::set(row, g2 * nh + h2);
                    }
                }
                for h2 in bits::ones(h.row(h1)) {
                    bits::set(row, g1 * nh + h2);
                }
            }
        }
    }
    // Rows are built from symmetric rules, but mirror anyway so the invariant never depends on it.
    out.symmetrize();
    if let (Some(lg), Some(lh)) = (g.labels(), h.labels()) {
        let labels = lg
            .iter()
            .flat_map(|a| lh.iter().map(move |b| VertexLabel::pair(a.clone(), b.clone())))
            .collect();
        out.set_labels_unchecked(Some(labels));
    }
    Ok(out)
}

/// Shortest even and shortest odd walk lengths between each ordered pair.
struct WalkParity {
    order: usize,
    even: Vec<Option<u32>>,
    odd: Vec<Option<u32>>,
    isolated: Vec<bool>,
}

impl WalkParity {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut even = vec![None; n * n];
        let mut odd = vec![None; n * n];
        let mut queue = Vec::new();
        for s in 0..n {
            // state = vertex * 2 + parity
            let mut dist = vec![u32::MAX; 2 * n];
            dist[2 * s] = 0;
            queue.clear();
            queue.push(2 * s);
            let mut head = 0;
            while head < queue.len() {
                let st = queue[head];
                head += 1;
                let (u, par) = (st / 2, st % 2);
                for v in g.neighbors(u) {
                    let nxt = 2 * v + (1 - par);
                    if dist[nxt] == u32::MAX {
                        dist[nxt] = dist[st] + 1;
                        queue.push(nxt);
                    }
                }
            }
            for t in 0..n {
                even[s * n + t] = (dist[2 * t] != u32::MAX).then_some(dist[2 * t]);
                odd[s * n + t] = (dist[2 * t + 1] != u32::MAX).then_some(dist[2 * t + 1]);
            }
        }
        let isolated = (0..n).map(|v| g.degree(v) == 0).collect();
        WalkParity {
            order: n,
            even,
            odd,
            isolated,
        }
    }

    /// Walk-length set of parity `par` from `a` to `b`: `(start, extends_by_two)`.
    fn class(&self, a: usize, b: usize, par: usize) -> Option<(u32, bool)> {
        let start = if par == 0 { self.even[a * self.order + b] } else { self.odd[a * self.order + b] }?;
        // Only a closed walk at an isolated vertex cannot be padded by going back and forth.
        Some((start, !(a == b && self.isolated[a])))
    }
}

fn min_common(x: (u32, bool), y: (u32, bool)) -> Option<u32> {
    match (x, y) {
        ((a, true), (b, true)) => Some(a.max(b)),
        ((a, false), (b, true)) | ((b, true), (a, false)) => (a >= b).then_some(a),
        ((a, false), (b, false)) => (a == b).then_some(a),
    }
}

/// Closed-form distances in a product, evaluated from factor data alone.
pub struct ProductDistance {
    kind: ProductKind,
    g: Graph,
    dg: DistanceMatrix,
    dh: DistanceMatrix,
    walks: Option<(WalkParity, WalkParity)>,
}

impl ProductDistance {
    pub fn new(kind: ProductKind, g: &Graph, h: &Graph) -> Result<Self> {
        g.require_loop_free()?;
        h.require_loop_free()?;
        let walks = (kind == ProductKind::Direct).then(|| (WalkParity::new(g), WalkParity::new(h)));
        Ok(ProductDistance {
            kind,
            g: g.clone(),
            dg: all_pairs_distances(g),
            dh: all_pairs_distances(h),
            walks,
        })
    }

    pub fn distance(&self, (g1, h1): (usize, usize), (g2, h2): (usize, usize)) -> Option<u32> {
        let dg = self.dg.get(g1, g2);
        let dh = self.dh.get(h1, h2);
        match self.kind {
            ProductKind::Cartesian => Some(dg? + dh?),
            ProductKind::Strong => Some(dg?.max(dh?)),
            ProductKind::Direct => {
                let (wg, wh) = self.walks.as_ref().expect("walk data for direct product");
                (0..2)
                    .filter_map(|par| min_common(wg.class(g1, g2, par)?, wh.class(h1, h2, par)?))
                    .min()
            }
            ProductKind::Lexicographic => {
                if g1 != g2 {
                    dg
                } else if self.g.degree(g1) > 0 {
                    Some(dh.map_or(2, |d| d.min(2)))
                } else {
                    dh
                }
            }
        }
    }
}

/// Distance between `u` and `v` in `G * H` computed from the factor metrics.
pub fn product_distance(kind: ProductKind, g: &Graph, h: &Graph, u: (usize, usize), v: (usize, usize)) -> Result<Option<u32>> {
    for &(a, b) in &[u, v] {
        if a >= g.order() || b >= h.order() {
            return Err(Error::VertexOutOfRange {
                vertex: a.max(b),
                order: g.order().max(h.order()),
            });
        }
    }
    Ok(ProductDistance::new(kind, g, h)?.distance(u, v))
}
