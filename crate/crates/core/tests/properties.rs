mod common;

use hdecomp::closure::{
    check_corollary, check_split_theorem, decompose_closure, enumerate_closed_sets, forward_chain, is_closed,
    product, trace, DEFAULT_LIMIT,
};
use hdecomp::connectivity::body_connected_components;
use hdecomp::decomposition::{build_tree, reconstruct, restrict_htree, validate_htree};
use hdecomp::{Dihypergraph, Edge};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bipartition_partitions_edges(h in common::dihypergraph(8, 10, 4), mask in any::<u64>()) {
        let u1 = common::subset(&h, mask);
        prop_assume!(u1 != *h.vertices());
        let u2 = h.vertices().difference(&u1);
        let mut all: Vec<Edge> = h.induced(&u1).unwrap().edges().to_vec();
        all.extend(h.induced(&u2).unwrap().edges().iter().cloned());
        all.extend(h.bipartite_part(&u1, &u2).unwrap());
        all.sort();
        prop_assert_eq!(all, h.edges().to_vec());
    }

    #[test]
    fn induced_composes(h in common::dihypergraph(8, 10, 4), a in any::<u64>(), b in any::<u64>()) {
        let outer = common::subset(&h, a);
        let inner = outer.intersection(&common::subset(&h, b));
        prop_assume!(!inner.is_empty());
        prop_assert_eq!(h.induced(&outer).unwrap().induced(&inner).unwrap(), h.induced(&inner).unwrap());
    }

    #[test]
    fn components_ignore_edge_order_and_unit_edges(h in common::dihypergraph(9, 10, 4)) {
        let mut reversed: Vec<(Vec<String>, String)> = h
            .edges()
            .iter()
            .rev()
            .map(|e| (e.body().iter().map(|&v| h.name(v).to_string()).collect(), h.name(e.head()).to_string()))
            .collect();
        let names: Vec<String> = h.vertices().iter().map(|v| h.name(v).to_string()).collect();
        let again = Dihypergraph::new(names.clone(), reversed.clone()).unwrap();
        prop_assert_eq!(body_connected_components(&again), body_connected_components(&h));
        reversed.retain(|(b, _)| b.len() >= 2);
        let without_units = Dihypergraph::new(names, reversed).unwrap();
        prop_assert_eq!(body_connected_components(&without_units), body_connected_components(&h));
    }

    #[test]
    fn trees_are_deterministic_and_reconstruct(h in common::dihypergraph(9, 10, 4)) {
        let a = build_tree(&h);
        let b = build_tree(&h);
        prop_assert_eq!(&a, &b);
        if let Some(t) = a.tree() {
            prop_assert_eq!(reconstruct(&t).unwrap(), h);
        }
    }

    #[test]
    fn heredity(h in common::dihypergraph(8, 10, 4), mask in any::<u64>()) {
        if let Some(t) = build_tree(&h).tree() {
            let sub = common::subset(&h, mask);
            let induced = h.induced(&sub).unwrap();
            let r = restrict_htree(&h, &t, &sub).unwrap();
            prop_assert!(validate_htree(&induced, &r).is_ok());
            prop_assert!(build_tree(&induced).is_tree());
        }
    }

    #[test]
    fn forward_chain_is_a_closure_operator(h in common::dihypergraph(10, 12, 4), a in any::<u64>(), b in any::<u64>()) {
        let x = common::subset(&h, a);
        let y = x.union(&common::subset(&h, b));
        let cx = forward_chain(&h, &x).unwrap();
        prop_assert!(x.is_subset(&cx));
        prop_assert!(cx.is_subset(&forward_chain(&h, &y).unwrap()));
        prop_assert_eq!(forward_chain(&h, &cx).unwrap(), cx.clone());
        prop_assert!(is_closed(&h, &cx).unwrap());
    }

    #[test]
    fn traces_and_products_are_closure_systems(h in common::dihypergraph(8, 10, 4), mask in any::<u64>()) {
        let f = enumerate_closed_sets(&h, DEFAULT_LIMIT).unwrap();
        f.check_invariants().unwrap();
        let u1 = common::subset(&h, mask);
        prop_assume!(u1 != *h.vertices());
        let u2 = h.vertices().difference(&u1);
        let (t1, t2) = (trace(&f, &u1).unwrap(), trace(&f, &u2).unwrap());
        t1.check_invariants().unwrap();
        t2.check_invariants().unwrap();
        let p = product(&t1, &t2).unwrap();
        p.check_invariants().unwrap();
        prop_assert!(f.sets().iter().all(|s| p.contains(s)));
    }

    #[test]
    fn split_theorem_on_every_found_split(h in common::dihypergraph(8, 10, 4)) {
        let comps = body_connected_components(&h);
        prop_assume!(comps.len() >= 2);
        let u1 = comps.blocks()[0].clone();
        let u2 = h.vertices().difference(&u1);
        let r = check_split_theorem(&h, &u1, &u2, DEFAULT_LIMIT).unwrap();
        prop_assert!(!r.has_violation(), "{:?}", r.items());
    }

    #[test]
    fn corollary_and_annotations(h in common::dihypergraph(8, 10, 4)) {
        let r = check_corollary(&h, DEFAULT_LIMIT).unwrap();
        prop_assert_eq!(r.violation, None);
        let ct = decompose_closure(&h, DEFAULT_LIMIT).unwrap();
        let grounds = ct.tree.grounds();
        for (g, f) in grounds.iter().zip(&ct.systems) {
            prop_assert_eq!(f.ground(), g);
        }
    }
}
