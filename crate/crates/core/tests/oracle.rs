use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use ktrees::oracle::{
    enumerate_coding_trees, enumerate_trees, fixed_count, orbit_count, ColorPermutation, VertexKind,
};
use ktrees::{count_ktrees, solve_system};

#[test]
fn orbit_counts_match_engine() {
    for k in 1..=3 {
        let u = count_ktrees(k, 6).unwrap().u;
        for (n, expected) in u.iter().enumerate() {
            assert_eq!(BigInt::from(orbit_count(k, n).unwrap()), *expected, "k={k} n={n}");
        }
    }
}

#[test]
fn fixed_counts_depend_only_on_cycle_type() {
    for k in 1..=3 {
        for n in 0..=5 {
            let mut by_type: BTreeMap<_, Vec<usize>> = BTreeMap::new();
            for p in ColorPermutation::all(k + 1) {
                by_type
                    .entry(p.cycle_type())
                    .or_default()
                    .push(fixed_count(k, n, &p).unwrap());
            }
            for (ty, counts) in by_type {
                assert!(
                    counts.windows(2).all(|w| w[0] == w[1]),
                    "k={k} n={n} type {ty}: {counts:?}"
                );
            }
        }
    }
}

#[test]
fn fixed_counts_match_engine_per_cycle_type() {
    for k in 1..=3 {
        let cache = solve_system(k, 6).unwrap();
        for p in ColorPermutation::all(k + 1) {
            let series = cache.u_lambda(&p.cycle_type()).unwrap().integer_coeffs().unwrap();
            for (n, expected) in series.iter().enumerate() {
                assert_eq!(
                    BigInt::from(fixed_count(k, n, &p).unwrap()),
                    *expected,
                    "k={k} n={n} perm {p:?}"
                );
            }
        }
    }
}

#[test]
fn identity_fixes_all_classes() {
    for k in 1..=3 {
        for n in 0..=5 {
            let total = enumerate_coding_trees(k, n).unwrap().len();
            assert_eq!(
                fixed_count(k, n, &ColorPermutation::identity(k + 1)).unwrap(),
                total
            );
        }
    }
}

#[test]
fn generated_trees_are_valid_with_a_center_vertex() {
    for k in 1..=3 {
        for n in 0..=5 {
            for (code, tree) in enumerate_trees(k, n).unwrap() {
                assert_eq!(tree.black_count(), n);
                assert_eq!(tree.centers().len(), 1, "{code}");
                for v in 0..tree.vertex_count() {
                    if tree.kinds()[v] == VertexKind::Black {
                        assert_eq!(tree.neighbors(v).len(), k + 1);
                    } else if tree.neighbors(v).len() == 1 && n > 0 {
                        // leaves are always fronts
                        assert!(matches!(tree.kinds()[v], VertexKind::Colored(_)));
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn codes_survive_a_decode_round_trip(k in 1usize..=3, n in 0usize..=4, pick in any::<prop::sample::Index>()) {
        let codes = enumerate_coding_trees(k, n).unwrap();
        let code = &codes[pick.index(codes.len())];
        let tree = code.decode(k).unwrap();
        prop_assert_eq!(&tree.canonical_code(), code);
    }

    #[test]
    fn recoloring_preserves_the_class_count(k in 1usize..=3, n in 0usize..=4, pick in any::<prop::sample::Index>()) {
        let perms = ColorPermutation::all(k + 1);
        let p = &perms[pick.index(perms.len())];
        let trees = enumerate_trees(k, n).unwrap();
        let recolored: std::collections::BTreeSet<_> = trees.values().map(|t| t.recolor(p).canonical_code()).collect();
        prop_assert_eq!(recolored.len(), trees.len());
    }
}
