mod common;

use obskit_core::testkit::{all_graphs, letters, random_graph, random_product};
use obskit_core::CoherenceGraph;
use proptest::prelude::*;

fn check_relation(g: &CoherenceGraph) {
    let atoms = g.atoms().unwrap();
    for a in &atoms {
        assert!(g.coherent(a, a).unwrap(), "{a} not self-coherent");
        let anti = g.anti_neighbourhood(a).unwrap();
        for b in &atoms {
            let coh = g.coherent(a, b).unwrap();
            assert_eq!(coh, g.coherent(b, a).unwrap(), "asymmetric on {a}, {b}");
            assert_eq!(anti.contains(b), !coh, "anti-neighbourhood of {a} at {b}");
        }
        assert!(anti.iter().all(|b| atoms.contains(b)));
        assert!(anti.windows(2).all(|w| w[0] < w[1]), "unsorted anti-neighbourhood");
    }
}

#[test]
fn every_small_graph_is_reflexive_symmetric_and_fan() {
    for n in 0..=4 {
        for g in all_graphs(&letters(n)) {
            check_relation(&g);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_finite_graphs(seed in any::<u64>(), n in 1usize..8) {
        let g = random_graph(&mut common::rng(seed), letters(n), 0.5);
        check_relation(&g);
    }

    #[test]
    fn product_anti_neighbourhoods_match_flattened_complement(seed in any::<u64>(), k in 1usize..4) {
        let g = random_product(&mut common::rng(seed), k, 3, 0.5);
        prop_assert!(g.has_fan());
        check_relation(&g);
    }
}

#[test]
fn symmetric_closure_and_reflexive_pairs_on_load() {
    let g =
        CoherenceGraph::from_json(r#"{"kind":"finite","atoms":["a","b","c"],"coh":[["b","a"],["c","c"]]}"#).unwrap();
    let a = "a".parse().unwrap();
    let b = "b".parse().unwrap();
    let c = "c".parse().unwrap();
    assert!(g.coherent(&a, &b).unwrap() && g.coherent(&b, &a).unwrap());
    assert!(!g.coherent(&a, &c).unwrap());
    assert!(g.coherent(&c, &c).unwrap());
}

#[test]
fn anticlique_has_no_fan() {
    let g = common::omega();
    assert!(!g.has_fan());
    assert!(g.anti_neighbourhood(&"n1".parse().unwrap()).is_err());
    assert_eq!(g.atoms(), None);
}
