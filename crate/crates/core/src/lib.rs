//! Exact distance graphs of graph products and hypercubes.
//!
//! `G^[♮p]` joins the vertices of `G` at distance exactly `p`. The crate builds these
//! graphs for products and hypercubes, checks structural identities about them against
//! direct computation, and colors them.

pub mod bits;
pub mod coloring;
pub mod connectivity;
pub mod corpus;
pub mod distance;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod hypercube;
pub mod identities;
pub mod io;
pub mod iso;
pub mod products;

pub use coloring::{validate_coloring, Coloring};
pub use distance::{all_pairs_distances, metric_profile, DistanceMatrix};
pub use error::{Error, Result};
pub use exact::{exact_distance_graph, path_power};
pub use graph::{Graph, VertexLabel};
pub use iso::{are_isomorphic, IsoOutcome};
pub use products::{product, ProductKind};
