mod common;

use obskit_core::lattice::{bracket, family_term, triangle_leq};
use obskit_core::testkit::{all_graphs, enumerate_lat_terms, letters, random_graph, random_lat_term};
use obskit_core::{AtomSet, CoherenceGraph, FiniteGraph, LatTerm, LatticeEngine, Oracle};
use proptest::prelude::*;
use rand::Rng;

/// Compares the engine with the oracle on every pair of `terms`, using the
/// two halves of the engine's decision separately so that each term is
/// prepared once.
fn exhaustive_pairs(g: &CoherenceGraph, terms: &[LatTerm]) -> usize {
    let engine = LatticeEngine::new(g);
    let oracle = Oracle::new(g).unwrap();
    let left: Vec<_> = terms.iter().map(|s| engine.clique_family(s).unwrap()).collect();
    let right: Vec<_> = terms.iter().map(bracket).collect();
    let sem: Vec<_> = terms.iter().map(|s| oracle.eval_lat(s).unwrap()).collect();
    let mut disagreements = 0;
    for i in 0..terms.len() {
        for j in 0..terms.len() {
            let got = triangle_leq(left[i].members(), right[j].members());
            if got != sem[i].is_subset(&sem[j]) {
                disagreements += 1;
            }
        }
    }
    disagreements
}

#[test]
fn exhaustive_depth_three_on_every_three_atom_graph() {
    let atoms = letters(3);
    let terms = enumerate_lat_terms(&atoms, 3);
    assert_eq!(terms.len(), 1265);
    for g in all_graphs(&atoms) {
        assert_eq!(exhaustive_pairs(&g, &terms), 0);
    }
}

#[test]
fn exhaustive_depth_two_on_five_atom_graphs() {
    let atoms = letters(5);
    let terms = enumerate_lat_terms(&atoms, 2);
    let mut rng = common::rng(5);
    for _ in 0..20 {
        let g = random_graph(&mut rng, atoms.clone(), 0.5);
        assert_eq!(exhaustive_pairs(&g, &terms), 0);
    }
}

#[test]
fn leq_composes_its_halves() {
    let mut rng = common::rng(11);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=5);
        let g = random_graph(&mut rng, letters(n), 0.5);
        let atoms = g.atoms().unwrap();
        let (s, t) = (random_lat_term(&mut rng, &atoms, 15), random_lat_term(&mut rng, &atoms, 15));
        let e = LatticeEngine::new(&g);
        let filtered = e.filter_cliques(&bracket(&s)).unwrap();
        assert_eq!(e.clique_family(&s).unwrap(), filtered);
        let expected = triangle_leq(filtered.members(), bracket(&t).members());
        assert_eq!(e.leq(&s, &t).unwrap(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn dnf_preserves_semantics(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=5);
        let g = random_graph(&mut rng, letters(n), 0.5);
        let s = random_lat_term(&mut rng, &g.atoms().unwrap(), 20);
        let oracle = Oracle::new(&g).unwrap();
        let normal = LatticeEngine::new(&g).dnf(&s).unwrap();
        prop_assert_eq!(oracle.eval_lat(&normal).unwrap(), oracle.eval_lat(&s).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn triangle_is_leq_on_a_complete_graph(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let atoms = letters(4);
        let complete: CoherenceGraph = FiniteGraph::from_fn(atoms.clone(), |_, _| true).unwrap().into();
        let family = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<AtomSet> {
            let k = rng.gen_range(0..4);
            (0..k).map(|_| atoms.iter().filter(|_| rng.gen_bool(0.4)).cloned().collect()).collect()
        };
        let (x, y) = (family(&mut rng), family(&mut rng));
        let engine = LatticeEngine::new(&complete);
        prop_assert_eq!(triangle_leq(&x, &y), engine.leq(&family_term(&x), &family_term(&y)).unwrap());
    }

    #[test]
    fn leq_implies_triangle_of_filtered_brackets(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=4);
        let g = random_graph(&mut rng, letters(n), 0.5);
        let atoms = g.atoms().unwrap();
        let (s, t) = (random_lat_term(&mut rng, &atoms, 12), random_lat_term(&mut rng, &atoms, 12));
        let e = LatticeEngine::new(&g);
        if e.leq(&s, &t).unwrap() {
            let left = e.filter_cliques(&bracket(&s)).unwrap();
            prop_assert!(triangle_leq(left.members(), bracket(&t).members()));
        }
    }
}
