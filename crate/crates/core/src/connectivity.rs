//! Connectivity predictions for exact distance graphs, each paired with the component count
//! of the graph actually built.

use serde::Serialize;

use crate::distance::metric_profile;
use crate::error::{invalid, Error, Result};
use crate::exact::exact_distance_graph;
use crate::families::hypercube;
use crate::graph::Graph;
use crate::products::{product, ProductKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityVerdict {
    pub statement: String,
    /// `None` when no closed characterization applies.
    pub predicted: Option<bool>,
    pub oracle: bool,
    pub components: usize,
    pub agreement: Option<bool>,
    pub outside_range: bool,
    pub notes: Vec<String>,
}

impl ConnectivityVerdict {
    fn new(statement: &str, predicted: Option<bool>, built: &Graph) -> Self {
        let components = built.component_count();
        let oracle = components <= 1;
        ConnectivityVerdict {
            statement: statement.to_string(),
            predicted,
            oracle,
            components,
            agreement: predicted.map(|p| p == oracle),
            outside_range: false,
            notes: Vec::new(),
        }
    }

    /// True unless a prediction was made and contradicted.
    pub fn agrees(&self) -> bool {
        self.agreement != Some(false)
    }
}

/// Component-count oracle.
pub fn is_connected_oracle(g: &Graph) -> bool {
    g.component_count() <= 1
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

fn require_nontrivial(g: &Graph) -> Result<()> {
    if g.order() < 2 {
        Err(invalid("factor must have at least two vertices"))
    } else {
        Ok(())
    }
}

fn radius(g: &Graph) -> usize {
    metric_profile(g).radius.map_or(usize::MAX, |r| r as usize)
}

fn diameter(g: &Graph) -> usize {
    metric_profile(g).diameter.map_or(usize::MAX, |d| d as usize)
}

/// True when `G^[♮p]` is guaranteed disconnected because `p > rad(G)`: a central vertex
/// has no vertex at distance `p`.
pub fn radius_obstruction(g: &Graph, p: usize) -> Result<bool> {
    require_nontrivial(g)?;
    require_connected(g)?;
    Ok(p > radius(g))
}

/// `(G ⊠ H)^[♮p]` is connected iff `rad(G) >= p` and (`G^[♮p]` connected or `diam(H) >= p`),
/// with the factors ordered so that `rad(G) >= rad(H)`.
pub fn strong_product_characterization(g: &Graph, h: &Graph, p: usize) -> Result<ConnectivityVerdict> {
    require_nontrivial(g)?;
    require_nontrivial(h)?;
    require_connected(g)?;
    require_connected(h)?;
    if p < 2 {
        return Err(invalid("the strong product characterization needs p >= 2"));
    }
    let (a, b) = if radius(g) >= radius(h) { (g, h) } else { (h, g) };
    let predicted = radius(a) >= p && (is_connected_oracle(&exact_distance_graph(a, p)?) || diameter(b) >= p);
    let built = exact_distance_graph(&product(ProductKind::Strong, g, h)?, p)?;
    let mut v = ConnectivityVerdict::new("strong", Some(predicted), &built);
    if !std::ptr::eq(a, g) {
        v.notes.push("factors swapped so the first has the larger radius".into());
    }
    Ok(v)
}

/// `(G ∘ H)^[♮p]` is connected iff `G^[♮p]` is connected, for non-trivial `G`.
pub fn lex_characterization(g: &Graph, h: &Graph, p: usize) -> Result<ConnectivityVerdict> {
    require_nontrivial(g)?;
    if p == 0 {
        return Err(invalid("p must be at least 1"));
    }
    let predicted = is_connected_oracle(&exact_distance_graph(g, p)?);
    let built = exact_distance_graph(&product(ProductKind::Lexicographic, g, h)?, p)?;
    Ok(ConnectivityVerdict::new("lexicographic", Some(predicted), &built))
}

/// `(G □ H)^[♮2]` is connected iff one factor is non-bipartite.
pub fn cartesian_p2_characterization(g: &Graph, h: &Graph) -> Result<ConnectivityVerdict> {
    require_nontrivial(g)?;
    require_nontrivial(h)?;
    require_connected(g)?;
    require_connected(h)?;
    let predicted = !g.is_bipartite()? || !h.is_bipartite()?;
    let built = exact_distance_graph(&product(ProductKind::Cartesian, g, h)?, 2)?;
    Ok(ConnectivityVerdict::new("cartesian p=2", Some(predicted), &built))
}

/// `(G × H)^[♮2]` is connected iff `G^[♮2]` and `H^[♮2]` are connected.
pub fn direct_p2_characterization(g: &Graph, h: &Graph) -> Result<ConnectivityVerdict> {
    require_nontrivial(g)?;
    require_nontrivial(h)?;
    require_connected(g)?;
    require_connected(h)?;
    let predicted = is_connected_oracle(&exact_distance_graph(g, 2)?) && is_connected_oracle(&exact_distance_graph(h, 2)?);
    let built = exact_distance_graph(&product(ProductKind::Direct, g, h)?, 2)?;
    let mut v = ConnectivityVerdict::new("direct p=2", Some(predicted), &built);
    if predicted {
        v.notes.push("G^[2] ⊠ H^[2] is a connected spanning subgraph".into());
    }
    Ok(v)
}

/// `Q_d^[♮p]` is connected iff `p` is odd, for `d >= 2` and `1 <= p < d`.
pub fn hypercube_characterization(d: usize, p: usize) -> Result<ConnectivityVerdict> {
    if d < 2 || p == 0 {
        return Err(invalid(format!("need d >= 2 and p >= 1, got d={d}, p={p}")));
    }
    let built = exact_distance_graph(&hypercube(d)?, p)?;
    if p >= d {
        let mut v = ConnectivityVerdict::new("hypercube", None, &built);
        v.outside_range = true;
        v.notes.push("outside the characterized range".into());
        return Ok(v);
    }
    Ok(ConnectivityVerdict::new("hypercube", Some(p % 2 == 1), &built))
}

/// Dispatches on the product kind; Cartesian and direct products with `p != 2` get the oracle only.
/// A one-vertex factor also falls back to the oracle.
pub fn product_connectivity(kind: ProductKind, g: &Graph, h: &Graph, p: usize) -> Result<ConnectivityVerdict> {
    let nontrivial = g.order() >= 2 && h.order() >= 2;
    match (kind, p) {
        (ProductKind::Strong, p) if p >= 2 && nontrivial => strong_product_characterization(g, h, p),
        (ProductKind::Lexicographic, p) if p >= 1 && g.order() >= 2 => lex_characterization(g, h, p),
        (ProductKind::Cartesian, 2) if nontrivial => cartesian_p2_characterization(g, h),
        (ProductKind::Direct, 2) if nontrivial => direct_p2_characterization(g, h),
        _ => {
            let built = exact_distance_graph(&product(kind, g, h)?, p)?;
            let mut v = ConnectivityVerdict::new(&kind.to_string(), None, &built);
            v.notes.push("no closed characterization".into());
            Ok(v)
        }
    }
}

/// For bipartite `G`: even `p` gives at least two components (`n >= 2`), odd `p` keeps the
/// bipartition of `G` as a proper 2-coloring of `G^[♮p]`. `None` if `G` is not bipartite.
pub fn bipartite_parity_check(g: &Graph, p: usize) -> Result<Option<bool>> {
    let Some(sides) = g.bipartition()? else {
        return Ok(None);
    };
    let x = exact_distance_graph(g, p)?;
    Ok(Some(if p % 2 == 0 {
        g.order() < 2 || x.component_count() >= 2
    } else {
        x.edges().all(|(u, v)| sides.side[u] != sides.side[v])
    }))
}
