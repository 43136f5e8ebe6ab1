mod common;

use std::sync::Arc;

use common::o;
use obskit_core::product::{c2d, coprod_term, d2c, prod_term, vec_impl};
use obskit_core::testkit::{
    enumerate_terms, leaves, product_components, random_product, random_representative, random_term, random_vector, Op,
};
use obskit_core::{
    AnticliqueGraph, Atom, CoherenceGraph, FanEngine, FiniteGraph, ObsTerm, Oracle, ProductEngine, ProductGraph,
};
use proptest::prelude::*;
use rand::Rng;

fn bb() -> CoherenceGraph {
    CoherenceGraph::from_json(
        r#"{"kind":"product","components":{
            "1":{"kind":"finite","atoms":["0","1"]},
            "2":{"kind":"finite","atoms":["0","1"]}}}"#,
    )
    .unwrap()
}

/// The atoms of a product of finite graphs, tagged with their component.
fn tagged_atoms(g: &CoherenceGraph) -> Vec<Atom> {
    product_components(g).iter().flat_map(|(i, atoms)| atoms.iter().map(|a| a.lift(i))).collect()
}

fn exhaustive_depth_two(g: &CoherenceGraph) {
    let terms = enumerate_terms(&leaves(&tagged_atoms(g)), &Op::ALL, 2);
    let engine = ProductEngine::new(g).unwrap();
    let oracle = Oracle::new(g).unwrap();
    let sems: Vec<_> = terms.iter().map(|s| oracle.eval(s).unwrap()).collect();
    for (i, s) in terms.iter().enumerate() {
        for (j, t) in terms.iter().enumerate() {
            assert_eq!(engine.leq(s, t).unwrap(), sems[i].is_subset(&sems[j]), "{s} ≤ {t}");
        }
    }
}

#[test]
fn exhaustive_depth_two_on_boolean_square() {
    exhaustive_depth_two(&bb());
}

#[test]
fn exhaustive_depth_two_on_random_products() {
    let mut rng = common::rng(5);
    for components in [2, 3, 3] {
        exhaustive_depth_two(&random_product(&mut rng, components, 3, 0.5));
    }
}

fn random_instance(seed: u64) -> (CoherenceGraph, Vec<Atom>, rand_chacha::ChaCha8Rng) {
    let mut rng = common::rng(seed);
    let components = rng.gen_range(1..=3);
    let g = random_product(&mut rng, components, 3, 0.5);
    let atoms = tagged_atoms(&g);
    (g, atoms, rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn agrees_with_oracle(seed in any::<u64>()) {
        let (g, atoms, mut rng) = random_instance(seed);
        let s = random_term(&mut rng, &atoms, &Op::ALL, 12);
        let t = random_term(&mut rng, &atoms, &Op::ALL, 12);
        let want = Oracle::new(&g).unwrap().leq(&s, &t).unwrap();
        prop_assert_eq!(ProductEngine::new(&g).unwrap().leq(&s, &t).unwrap(), want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn representatives_denote_the_term(seed in any::<u64>()) {
        let (g, atoms, mut rng) = random_instance(seed);
        let s = random_term(&mut rng, &atoms, &Op::ALL, 12);
        let engine = ProductEngine::new(&g).unwrap();
        let oracle = Oracle::new(&g).unwrap();
        let want = oracle.eval(&s).unwrap();
        prop_assert_eq!(oracle.eval(&engine.tau_vee(&s).unwrap().disjunctive_term()).unwrap(), want.clone());
        prop_assert_eq!(oracle.eval(&engine.tau_wedge(&s).unwrap().conjunctive_term()).unwrap(), want);
    }

    #[test]
    fn vector_implication(seed in any::<u64>()) {
        let (g, _, mut rng) = random_instance(seed);
        let comps = product_components(&g);
        let u = random_vector(&mut rng, &comps, &Op::ALL, 7);
        let v = random_vector(&mut rng, &comps, &Op::ALL, 7);
        let oracle = Oracle::new(&g).unwrap();
        let lhs = ObsTerm::imp(prod_term(&u), coprod_term(&v));
        prop_assert_eq!(oracle.eval(&lhs).unwrap(), oracle.eval(&coprod_term(&vec_impl(&u, &v))).unwrap());
    }

    #[test]
    fn conversions_preserve_meaning(seed in any::<u64>()) {
        let (g, _, mut rng) = random_instance(seed);
        let comps = product_components(&g);
        let r = random_representative(&mut rng, &comps, 3, 5);
        let oracle = Oracle::new(&g).unwrap();
        prop_assert_eq!(
            oracle.eval(&c2d(&r).disjunctive_term()).unwrap(),
            oracle.eval(&r.conjunctive_term()).unwrap()
        );
        prop_assert_eq!(
            oracle.eval(&d2c(&r).conjunctive_term()).unwrap(),
            oracle.eval(&r.disjunctive_term()).unwrap()
        );
    }

    #[test]
    fn component_equivalence_lifts(seed in any::<u64>()) {
        let (g, _, mut rng) = random_instance(seed);
        let comps = product_components(&g);
        let (index, atoms) = &comps[rng.gen_range(0..comps.len())];
        let component = match &g {
            CoherenceGraph::Product(p) => p.component(index).unwrap().clone(),
            _ => unreachable!(),
        };
        let fan = FanEngine::new(&component).unwrap();
        let s = random_term(&mut rng, atoms, &Op::ALL, 9);
        let t = if rng.gen_bool(0.5) {
            fan.normalize(&s).unwrap().to_obs()
        } else {
            random_term(&mut rng, atoms, &Op::ALL, 9)
        };
        let engine = ProductEngine::new(&g).unwrap();
        let (ls, lt) = (engine.inject(index, &s).unwrap(), engine.inject(index, &t).unwrap());
        if fan.equiv(&s, &t).unwrap() {
            prop_assert!(engine.equiv(&ls, &lt).unwrap());
        }
        // the converse holds too since injection reflects containment
        prop_assert_eq!(engine.leq(&ls, &lt).unwrap(), fan.leq(&s, &t).unwrap());
    }
}

#[test]
fn boolean_square_examples() {
    let g = bb();
    let e = ProductEngine::new(&g).unwrap();
    assert!(e.leq(&o("0@1 & (0@1 -> 0@2)"), &o("0@2")).unwrap());
    assert!(!e.leq(&o("top"), &o("0@1 | 1@1")).unwrap());
    assert!(e.leq(&o("0@1"), &o("0@1 | 1@2")).unwrap());
}

/// A boolean component next to an anticlique component.
fn mixed() -> CoherenceGraph {
    CoherenceGraph::from_json(
        r#"{"kind":"product","components":{
            "1":{"kind":"finite","atoms":["0","1"]},
            "2":{"kind":"anticlique","prefix":"n"}}}"#,
    )
    .unwrap()
}

/// The product with its anticlique component replaced by the finite
/// discrete graph on the anticlique atoms of `s` and `t` plus two fresh ones.
fn finite_stand_in(s: &ObsTerm, t: &ObsTerm) -> CoherenceGraph {
    let omega = AnticliqueGraph::new("n").unwrap();
    let used: Vec<Atom> =
        s.atoms().union(&t.atoms()).filter(|a| a.component() == Some("2")).map(|a| a.base()).collect();
    let mut atoms = used.clone();
    atoms.extend(omega.fresh_atoms(&used, 2));
    let boolean: CoherenceGraph = FiniteGraph::discrete(atoms_named(&["0", "1"])).unwrap().into();
    let stand_in: CoherenceGraph = FiniteGraph::discrete(atoms).unwrap().into();
    ProductGraph::new([("1", boolean), ("2", stand_in)]).unwrap().into()
}

fn atoms_named(names: &[&str]) -> Vec<Atom> {
    names.iter().map(|n| n.parse().unwrap()).collect()
}

#[test]
fn mixed_product_examples() {
    let g = mixed();
    let e = ProductEngine::new(&g).unwrap();
    // excluded middle holds on neither side, so not for the product
    assert!(!e.leq(&o("top"), &o("n1@2 | (n1@2 -> bot)")).unwrap());
    // one excluded-middle instance entails any other on the anticlique
    assert!(e.equiv(&o("n1@2 | (n1@2 -> bot)"), &o("n2@2 | (n2@2 -> bot)")).unwrap());
    assert!(e.leq(&o("0@1 & (0@1 -> n3@2)"), &o("n3@2")).unwrap());
    assert!(!e.leq(&o("n1@2 -> bot"), &o("0@1 | 1@1")).unwrap());
    assert!(e.leq(&o("(n1@2 -> bot) & n1@2"), &o("bot")).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3000))]

    #[test]
    fn mixed_product_agrees_with_finite_stand_in(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let index: Arc<str> = Arc::from("2");
        let mut atoms = atoms_named(&["0@1", "1@1"]);
        for _ in 0..rng.gen_range(1..=3) {
            atoms.push(AnticliqueGraph::new("n").unwrap().atom(rng.gen_range(0..5)).lift(&index));
        }
        let s = random_term(&mut rng, &atoms, &Op::ALL, 11);
        let t = random_term(&mut rng, &atoms, &Op::ALL, 11);
        let g = mixed();
        let want = Oracle::new(&finite_stand_in(&s, &t)).unwrap().leq(&s, &t).unwrap();
        prop_assert_eq!(ProductEngine::new(&g).unwrap().leq(&s, &t).unwrap(), want);
    }
}

#[test]
fn random_representatives_print_in_index_order() {
    let mut rng = common::rng(3);
    let g = random_product(&mut rng, 3, 2, 0.5);
    let r = random_representative(&mut rng, &product_components(&g), 2, 3);
    for v in r.iter() {
        let indices: Vec<&str> = v.support().map(|i| &**i).collect();
        let shown: Vec<String> = indices.iter().map(|i| format!("{i}: ")).collect();
        let text = v.to_string();
        let positions: Vec<usize> = shown.iter().map(|p| text.find(p.as_str()).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");
    }
}
