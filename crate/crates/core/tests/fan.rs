mod common;

use common::o;
use obskit_core::testkit::{
    all_graphs, enumerate_ordered_terms, enumerate_terms, leaves, letters, random_graph, random_term, Op,
};
use obskit_core::{Atom, CoherenceGraph, FanEngine, FiniteGraph, LatTerm, ObsTerm, Oracle};
use proptest::prelude::*;
use rand::Rng;

/// Engine verdicts against the oracle on all pairs `left × right`; the
/// translation of each term is computed once.
fn compare(g: &CoherenceGraph, left: &[ObsTerm], right: &[ObsTerm]) -> usize {
    let fan = FanEngine::new(g).unwrap();
    let oracle = Oracle::new(g).unwrap();
    let tl: Vec<LatTerm> = left.iter().map(|s| fan.tau(s).unwrap()).collect();
    let tr: Vec<LatTerm> = right.iter().map(|s| fan.tau(s).unwrap()).collect();
    let sl: Vec<_> = left.iter().map(|s| oracle.eval(s).unwrap()).collect();
    let sr: Vec<_> = right.iter().map(|s| oracle.eval(s).unwrap()).collect();
    let mut disagreements = 0;
    for (i, x) in tl.iter().enumerate() {
        for (j, y) in tr.iter().enumerate() {
            if fan.lattice().leq(x, y).unwrap() != sl[i].is_subset(&sr[j]) {
                disagreements += 1;
            }
        }
    }
    disagreements
}

#[test]
fn exhaustive_depth_two_on_every_three_atom_graph() {
    let atoms = letters(3);
    let terms = enumerate_ordered_terms(&leaves(&atoms), &Op::ALL, 2);
    assert_eq!(terms.len(), 80);
    for g in all_graphs(&atoms) {
        assert_eq!(compare(&g, &terms, &terms), 0);
    }
}

#[test]
fn depth_three_against_depth_two_on_two_atom_graphs() {
    let atoms = letters(2);
    let deep = enumerate_terms(&leaves(&atoms), &Op::ALL, 3);
    let shallow = enumerate_terms(&leaves(&atoms), &Op::ALL, 2);
    for g in all_graphs(&atoms) {
        assert_eq!(compare(&g, &deep, &shallow), 0);
        assert_eq!(compare(&g, &shallow, &deep), 0);
    }
}

#[test]
fn depth_three_samples_on_five_atom_graphs() {
    let mut rng = common::rng(17);
    let atoms = letters(5);
    let all = enumerate_terms(&leaves(&atoms), &Op::ALL, 3);
    for _ in 0..10 {
        let g = random_graph(&mut rng, atoms.clone(), 0.5);
        let pick: Vec<ObsTerm> = (0..150).map(|_| all[rng.gen_range(0..all.len())].clone()).collect();
        assert_eq!(compare(&g, &pick, &pick), 0);
    }
}

fn random_instance(seed: u64) -> (CoherenceGraph, ObsTerm, ObsTerm, ObsTerm) {
    let mut rng = common::rng(seed);
    let n = rng.gen_range(1..=5);
    let g = random_graph(&mut rng, letters(n), 0.5);
    let atoms = g.atoms().unwrap();
    let [s, t, u] = std::array::from_fn(|_| random_term(&mut rng, &atoms, &Op::ALL, 12));
    (g, s, t, u)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn agrees_with_oracle(seed in any::<u64>()) {
        let (g, s, t, _) = random_instance(seed);
        let want = Oracle::new(&g).unwrap().leq(&s, &t).unwrap();
        prop_assert_eq!(FanEngine::new(&g).unwrap().leq(&s, &t).unwrap(), want);
    }

    #[test]
    fn translation_preserves_semantics(seed in any::<u64>()) {
        let (g, s, _, _) = random_instance(seed);
        let oracle = Oracle::new(&g).unwrap();
        let fan = FanEngine::new(&g).unwrap();
        prop_assert_eq!(oracle.eval_lat(&fan.tau(&s).unwrap()).unwrap(), oracle.eval(&s).unwrap());
        prop_assert_eq!(oracle.eval_lat(&fan.normalize(&s).unwrap()).unwrap(), oracle.eval(&s).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn heyting_adjunction(seed in any::<u64>()) {
        let (g, s, t, u) = random_instance(seed);
        let fan = FanEngine::new(&g).unwrap();
        prop_assert_eq!(
            fan.leq(&ObsTerm::and(s.clone(), u.clone()), &t).unwrap(),
            fan.leq(&u, &ObsTerm::imp(s, t)).unwrap()
        );
    }
}

#[test]
fn graph_dependent_identities() {
    let x = Atom::new("x").unwrap();
    let y = Atom::new("y").unwrap();
    let one: CoherenceGraph = FiniteGraph::discrete(vec![x.clone()]).unwrap().into();
    let two: CoherenceGraph = FiniteGraph::discrete(vec![x, y]).unwrap().into();
    let f1 = FanEngine::new(&one).unwrap();
    let f2 = FanEngine::new(&two).unwrap();
    assert!(f1.equiv(&o("x -> bot"), &o("bot")).unwrap());
    assert!(f2.equiv(&o("x -> bot"), &o("y")).unwrap());
    assert!(!f2.equiv(&o("x -> bot"), &o("bot")).unwrap());
}

#[test]
fn double_negation_over_g3() {
    let g = common::g3();
    let fan = FanEngine::new(&g).unwrap();
    let oracle = Oracle::new(&g).unwrap();
    let normal = fan.normalize(&o("(a -> bot) -> bot")).unwrap();
    assert_eq!(oracle.eval_lat(&normal).unwrap().to_string(), "{{a}, {a,b}}");
    assert!(!fan.leq(&o("top"), &o("a | (a -> bot)")).unwrap());
}
