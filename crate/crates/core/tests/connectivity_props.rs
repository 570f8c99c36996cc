mod common;

use proptest::prelude::*;
use xdist::connectivity::{
    bipartite_parity_check, cartesian_p2_characterization, hypercube_characterization, lex_characterization,
    strong_product_characterization,
};
use xdist::{exact_distance_graph, metric_profile, Graph};

use common::{connected_graph, graph};

/// Random tree plus random edges between its two depth classes, on 2 to 9 vertices.
fn bipartite_graph() -> impl Strategy<Value = Graph> {
    (2usize..=9).prop_flat_map(|n| {
        let tree = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        (tree, proptest::collection::vec(any::<bool>(), n * n)).prop_map(move |(parents, extra)| {
            let mut side = vec![false; n];
            let mut edges = Vec::new();
            for (i, &u) in parents.iter().enumerate() {
                side[i + 1] = !side[u];
                edges.push((u, i + 1));
            }
            for u in 0..n {
                for v in u + 1..n {
                    if side[u] != side[v] && extra[u * n + v] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges, false).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn strong_matches_oracle(g in connected_graph(2, 7), h in connected_graph(2, 7), p in 2usize..5) {
        let v = strong_product_characterization(&g, &h, p).unwrap();
        prop_assert_eq!(v.agreement, Some(true), "{:?}", v);
    }

    #[test]
    fn lexicographic_matches_oracle(g in graph(7), h in graph(5), p in 1usize..5) {
        prop_assume!(g.order() >= 2);
        let v = lex_characterization(&g, &h, p).unwrap();
        prop_assert_eq!(v.agreement, Some(true), "{:?}", v);
    }

    #[test]
    fn cartesian_matches_oracle(g in connected_graph(2, 7), h in connected_graph(2, 7)) {
        let v = cartesian_p2_characterization(&g, &h).unwrap();
        prop_assert_eq!(v.agreement, Some(true), "{:?}", v);
    }

    #[test]
    fn odd_distance_keeps_the_bipartition(g in bipartite_graph(), k in 0usize..4) {
        let p = 2 * k + 1;
        prop_assume!(p <= metric_profile(&g).diameter.unwrap() as usize);
        let sides = g.bipartition().unwrap().unwrap();
        let x = exact_distance_graph(&g, p).unwrap();
        prop_assert!(x.edges().all(|(u, v)| sides.side[u] != sides.side[v]));
        prop_assert_eq!(bipartite_parity_check(&g, p).unwrap(), Some(true));
    }
}

#[test]
fn hypercubes_connected_exactly_for_odd_distance() {
    for d in 2..=9 {
        for p in 1..d {
            let v = hypercube_characterization(d, p).unwrap();
            assert_eq!(v.agreement, Some(true), "d={d} p={p}");
            assert_eq!(v.oracle, p % 2 == 1);
        }
    }
}
