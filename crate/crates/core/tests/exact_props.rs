mod common;

use proptest::prelude::*;
use xdist::connectivity::bipartite_parity_check;
use xdist::identities::is_triangle_free;
use xdist::{exact_distance_graph, metric_profile, path_power};

use common::{connected_graph, graph};

proptest! {
    #[test]
    fn exact_distance_edges_lie_in_path_power(g in graph(9), p in 1usize..5) {
        let x = exact_distance_graph(&g, p).unwrap();
        let pp = path_power(&g, p).unwrap();
        for (u, v) in x.edges() {
            prop_assert!(pp.has_edge(u, v));
        }
    }

    #[test]
    fn triangle_free_graphs_have_equal_second_powers(g in graph(10)) {
        prop_assume!(is_triangle_free(&g));
        prop_assert!(exact_distance_graph(&g, 2).unwrap().same_edges(&path_power(&g, 2).unwrap()));
    }

    #[test]
    fn beyond_the_diameter_nothing_remains(g in connected_graph(1, 10), extra in 1usize..4) {
        let diam = metric_profile(&g).diameter.unwrap() as usize;
        prop_assert_eq!(exact_distance_graph(&g, diam + extra).unwrap().edge_count(), 0);
    }

    #[test]
    fn bipartite_parity_law(g in graph(10), p in 1usize..6) {
        if let Some(ok) = bipartite_parity_check(&g, p).unwrap() {
            prop_assert!(ok);
        }
    }
}
