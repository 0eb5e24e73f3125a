mod common;

use hdecomp::closure::{enumerate_closed_sets, DEFAULT_LIMIT};
use hdecomp::connectivity::{body_connected_components, is_body_connected};
use hdecomp::decomposition::{build_tree, find_split, is_split};
use hdecomp::oracle::{oracle_body_components, oracle_closed_sets, oracle_has_split, oracle_is_hdecomposable};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn components_agree(h in common::dihypergraph(10, 10, 4)) {
        prop_assert_eq!(body_connected_components(&h), oracle_body_components(&h).unwrap());
    }

    #[test]
    fn split_existence_agrees(h in common::dihypergraph(9, 8, 4)) {
        prop_assume!(h.vertex_count() >= 2);
        let oracle = oracle_has_split(&h).unwrap();
        let found = find_split(&h).unwrap();
        prop_assert_eq!(oracle.is_some(), found.is_some());
        prop_assert_eq!(found.is_some(), !is_body_connected(&h));
        if let Some((a, b)) = found {
            prop_assert!(is_split(&h, &a, &b).unwrap());
        }
        if let Some((a, b)) = oracle {
            prop_assert!(is_split(&h, &a, &b).unwrap());
        }
    }

    #[test]
    fn decomposability_agrees(h in common::dihypergraph(8, 9, 4)) {
        prop_assert_eq!(build_tree(&h).is_tree(), oracle_is_hdecomposable(&h).unwrap());
    }

    #[test]
    fn closed_sets_agree(h in common::dihypergraph(10, 12, 4)) {
        prop_assert_eq!(enumerate_closed_sets(&h, DEFAULT_LIMIT).unwrap(), oracle_closed_sets(&h).unwrap());
    }
}
