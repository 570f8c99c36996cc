use xdist::hypercube::{
    antipodal_matching_check, degree_law_check, f_map, is_type_a, johnson_complement_isomorphism, qn_nminus1_isomorphism,
};

#[test]
fn degree_law_up_to_ten() {
    for n in 1..=10 {
        for p in 0..=n {
            assert!(degree_law_check(n, p).unwrap(), "n={n} p={p}");
        }
    }
}

#[test]
fn antipodal_matching_up_to_ten() {
    for n in 1..=10 {
        assert!(antipodal_matching_check(n).unwrap(), "n={n}");
    }
}

#[test]
fn f_preserves_type_and_is_an_isomorphism() {
    for n in (2..=10).step_by(2) {
        assert!((0..1usize << n).all(|x| is_type_a(x, n) == is_type_a(f_map(x, n), n)));
        assert!(qn_nminus1_isomorphism(n).unwrap().pass, "n={n}");
    }
}

#[test]
fn complement_relabeling_for_all_small_parameters() {
    for n in 1..=9 {
        for k in 0..=n {
            for i in 0..=k {
                if n + i >= 2 * k {
                    assert!(johnson_complement_isomorphism(n, k, i).unwrap().pass, "J({n},{k},{i})");
                }
            }
        }
    }
}
