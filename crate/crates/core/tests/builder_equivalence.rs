mod common;

use hdecomp::decomposition::{build_factor_tree, build_tree, validate_factor_tree, validate_htree, BuildOutcome};
use hdecomp::fixtures;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn assert_same_as_literal(h: &hdecomp::Dihypergraph) {
    match (build_tree(h), common::literal_tree(h, false)) {
        (BuildOutcome::Tree(t), Some(lit)) => {
            assert_eq!(*t, lit);
            validate_htree(h, &t).unwrap();
        }
        (BuildOutcome::Fail { .. }, None) => {}
        (got, lit) => panic!("builder {:?} vs literal {:?}", got.is_tree(), lit.is_some()),
    }
    let f = build_factor_tree(h);
    assert_eq!(*f, common::literal_tree(h, true).unwrap());
    validate_factor_tree(h, &f).unwrap();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn matches_literal_recursion(h in common::dihypergraph(9, 10, 4)) {
        assert_same_as_literal(&h);
    }
}

#[test]
fn matches_literal_recursion_on_generated_families() {
    let mut rng = StdRng::seed_from_u64(7);
    for i in 0..300 {
        let n = 2 + i % 30;
        assert_same_as_literal(&fixtures::random_digraph(&mut rng, n, 2 * n));
        assert_same_as_literal(&fixtures::random_decomposable(&mut rng, n, n, 3));
        assert_same_as_literal(&fixtures::random(&mut rng, n, n / 2, 3));
    }
}

#[test]
fn deep_path_does_not_overflow() {
    let n = 100_000;
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges = (0..n - 1).map(|i| (vec![names[i + 1].clone()], names[i].clone()));
    let h = hdecomp::Dihypergraph::new(names.clone(), edges).unwrap();
    let t = build_tree(&h).tree().unwrap();
    assert_eq!(t.len(), 2 * n - 1);
    validate_htree(&h, &t).unwrap();
}
