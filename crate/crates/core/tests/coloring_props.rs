mod common;

use proptest::prelude::*;
use xdist::coloring::{chi_bound_formulas, exact_chromatic, grid_pattern_coloring, validate_coloring};
use xdist::families::{johnson, path};
use xdist::io::{read_coloring_dimacs, read_coloring_json, write_coloring_dimacs, write_coloring_json};
use xdist::{exact_distance_graph, product, ProductKind};

use common::{brute_chromatic, graph};

proptest! {
    #[test]
    fn solver_matches_brute_force(g in graph(8)) {
        let out = exact_chromatic(&g, 1_000_000).unwrap();
        prop_assert_eq!(out.exact(), Some(brute_chromatic(&g)));
        prop_assert!(validate_coloring(&g, out.coloring()).unwrap().proper);
    }

    #[test]
    fn coloring_files_round_trip(g in graph(10)) {
        let c = exact_chromatic(&g, 100_000).unwrap().coloring().clone();
        prop_assert_eq!(read_coloring_json(&write_coloring_json(&c)).unwrap(), c.clone());
        prop_assert_eq!(read_coloring_dimacs(&write_coloring_dimacs(&c)).unwrap(), c);
    }
}

#[test]
fn kneser_chromatic_formula() {
    for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3)] {
        let out = exact_chromatic(&johnson(n, k, 0).unwrap(), 10_000_000).unwrap();
        assert_eq!(out.exact(), Some(n - 2 * k + 2), "J({n},{k},0)");
    }
}

#[test]
fn grid_pattern_is_a_proper_four_coloring() {
    for m in 2..=24 {
        let pm = path(m).unwrap();
        let strong = product(ProductKind::Strong, &pm, &pm).unwrap();
        for p in 1..=4 {
            if m < 2 * p {
                continue;
            }
            let g = exact_distance_graph(&strong, p).unwrap();
            let v = validate_coloring(&g, &grid_pattern_coloring(m, p).unwrap()).unwrap();
            assert!(v.proper, "m={m} p={p}");
            assert_eq!(v.colors_used, 4, "m={m} p={p}");
        }
    }
}

#[test]
fn bounds_never_cross() {
    for n in 1..=12 {
        for p in 1..=n {
            let b = chi_bound_formulas(n, p).unwrap();
            assert!(b.lower.value <= b.upper.value, "n={n} p={p}: {b:?}");
        }
    }
}
