mod common;

use proptest::prelude::*;
use xdist::identities::{
    cartesian_identity, cartesian_second_identity, direct2_identity, direct2_strong_identity, is_triangle_free,
    layer_terms_identity, lex_identity, strong_identity,
};

use common::graph;

fn show(r: &xdist::identities::IdentityReport) -> String {
    format!("{} {} lhs-only {:?} rhs-only {:?}", r.identity, r.instance, r.only_in_lhs, r.only_in_rhs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cartesian(g in graph(7), h in graph(7), p in 0usize..6) {
        let r = cartesian_identity(&g, &h, p).unwrap();
        prop_assert!(r.pass, "{}", show(&r));
        if p >= 1 {
            let r = cartesian_second_identity(&g, &h, p).unwrap();
            prop_assert!(r.pass, "{}", show(&r));
            let r = layer_terms_identity(&g, &h, p).unwrap();
            prop_assert!(r.pass, "{}", show(&r));
        }
    }

    #[test]
    fn strong(g in graph(7), h in graph(7), p in 0usize..6) {
        let r = strong_identity(&g, &h, p).unwrap();
        prop_assert!(r.pass, "{}", show(&r));
    }

    #[test]
    fn direct(g in graph(7), h in graph(7)) {
        prop_assume!(g.is_isolate_free() && h.is_isolate_free());
        let r = direct2_identity(&g, &h).unwrap();
        prop_assert!(r.pass, "{}", show(&r));
        if is_triangle_free(&g) && is_triangle_free(&h) {
            let r = direct2_strong_identity(&g, &h).unwrap();
            prop_assert!(r.pass, "{}", show(&r));
        }
    }

    #[test]
    fn lexicographic(g in graph(7), h in graph(6), p in 2usize..6) {
        prop_assume!(g.order() >= 2 && g.is_isolate_free());
        let r = lex_identity(&g, &h, p).unwrap();
        prop_assert!(r.pass, "{}", show(&r));
    }

    #[test]
    fn report_passes_iff_no_differences(g in graph(6), h in graph(6), p in 0usize..4) {
        let r = cartesian_identity(&g, &h, p).unwrap();
        prop_assert_eq!(r.pass, r.only_in_lhs.is_empty() && r.only_in_rhs.is_empty());
    }
}
