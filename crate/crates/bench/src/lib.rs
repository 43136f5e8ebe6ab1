//! Seeded workloads shared by the benchmarks.

use obskit_core::testkit::{letters, product_components, random_graph, random_product, random_term, Op};
use obskit_core::{AnticliqueGraph, Atom, CoherenceGraph, ObsTerm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A graph with term pairs over its atoms.
pub struct Workload {
    pub graph: CoherenceGraph,
    pub pairs: Vec<(ObsTerm, ObsTerm)>,
}

fn pairs(rng: &mut ChaCha8Rng, atoms: &[Atom], ops: &[Op], size: usize, count: usize) -> Vec<(ObsTerm, ObsTerm)> {
    (0..count).map(|_| (random_term(rng, atoms, ops, size), random_term(rng, atoms, ops, size))).collect()
}

/// A random finite graph on `n` atoms with coherence probability one half.
pub fn finite(n: usize, ops: &[Op], size: usize, count: usize, seed: u64) -> Workload {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graph = random_graph(&mut rng, letters(n), 0.5);
    let atoms = graph.atoms().expect("finite");
    let pairs = pairs(&mut rng, &atoms, ops, size, count);
    Workload { graph, pairs }
}

/// The anticlique with terms over its first `n` atoms.
pub fn anticlique(n: u64, size: usize, count: usize, seed: u64) -> Workload {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let omega = AnticliqueGraph::new("n").expect("valid prefix");
    let atoms: Vec<Atom> = (0..n).map(|k| omega.atom(k)).collect();
    let pairs = pairs(&mut rng, &atoms, &Op::ALL, size, count);
    Workload { graph: omega.into(), pairs }
}

/// A product of `components` random finite graphs of up to three atoms.
pub fn product(components: usize, size: usize, count: usize, seed: u64) -> Workload {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = rng.gen_range(0.3..0.7);
    let graph = random_product(&mut rng, components, 3, p);
    let atoms: Vec<Atom> = product_components(&graph).iter().flat_map(|(i, a)| a.iter().map(|a| a.lift(i))).collect();
    let pairs = pairs(&mut rng, &atoms, &Op::ALL, size, count);
    Workload { graph, pairs }
}
