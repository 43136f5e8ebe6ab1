//! Generators for randomized and exhaustive testing.

pub mod axioms;

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Atom, CoherenceGraph, FiniteGraph, ProductGraph};
use crate::product::{Representative, TermVector};
use crate::term::{LatTerm, ObsTerm};

/// Binary connectives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    And,
    Or,
    Impl,
}

impl Op {
    pub const LATTICE: [Op; 2] = [Op::And, Op::Or];
    pub const ALL: [Op; 3] = [Op::And, Op::Or, Op::Impl];

    pub fn apply(self, l: ObsTerm, r: ObsTerm) -> ObsTerm {
        match self {
            Op::And => ObsTerm::and(l, r),
            Op::Or => ObsTerm::or(l, r),
            Op::Impl => ObsTerm::imp(l, r),
        }
    }

    fn commutative(self) -> bool {
        !matches!(self, Op::Impl)
    }
}

/// Atoms `names[0], names[1], ...`.
pub fn atoms(names: &[&str]) -> Vec<Atom> {
    names.iter().map(|n| Atom::new(n).expect("valid name")).collect()
}

/// `n` atoms named `a`, `b`, ... (then `a1`, `b1`, ... past 26).
pub fn letters(n: usize) -> Vec<Atom> {
    (0..n)
        .map(|k| {
            let c = (b'a' + (k % 26) as u8) as char;
            let name = if k < 26 { c.to_string() } else { format!("{c}{}", k / 26) };
            Atom::new(&name).expect("valid name")
        })
        .collect()
}

/// Every atom as a term, then `top` and `bot`.
pub fn leaves(atoms: &[Atom]) -> Vec<ObsTerm> {
    let mut out: Vec<ObsTerm> = atoms.iter().cloned().map(ObsTerm::Atom).collect();
    out.push(ObsTerm::Top);
    out.push(ObsTerm::Bot);
    out
}

/// All terms of depth at most `depth` (leaves have depth 1) built from
/// `leaves` with `ops`. Commutative connectives get one argument order only.
pub fn enumerate_terms(leaves: &[ObsTerm], ops: &[Op], depth: usize) -> Vec<ObsTerm> {
    enumerate(leaves, ops, depth, true)
}

/// All terms of depth at most `depth`, every argument order included.
pub fn enumerate_ordered_terms(leaves: &[ObsTerm], ops: &[Op], depth: usize) -> Vec<ObsTerm> {
    enumerate(leaves, ops, depth, false)
}

fn enumerate(leaves: &[ObsTerm], ops: &[Op], depth: usize, up_to_commutativity: bool) -> Vec<ObsTerm> {
    if depth == 0 {
        return Vec::new();
    }
    let mut all: Vec<ObsTerm> = leaves.to_vec();
    let mut previous_start = 0;
    for _ in 1..depth {
        let previous_end = all.len();
        let mut next = Vec::new();
        for &op in ops {
            for i in 0..previous_end {
                let start_j = if up_to_commutativity && op.commutative() { i } else { 0 };
                for j in start_j..previous_end {
                    // at least one argument of the previous depth
                    if i < previous_start && j < previous_start {
                        continue;
                    }
                    next.push(op.apply(all[i].clone(), all[j].clone()));
                }
            }
        }
        previous_start = previous_end;
        all.extend(next);
    }
    all
}

/// Implication-free terms of depth at most `depth`, commutative arguments
/// in one order only.
pub fn enumerate_lat_terms(atoms: &[Atom], depth: usize) -> Vec<LatTerm> {
    enumerate_terms(&leaves(atoms), &Op::LATTICE, depth)
        .into_iter()
        .map(|t| t.to_lat().expect("implication-free"))
        .collect()
}

/// A random term with exactly `size` nodes (rounded down to odd).
pub fn random_term_of_size<R: Rng + ?Sized>(rng: &mut R, atoms: &[Atom], ops: &[Op], size: usize) -> ObsTerm {
    if size <= 2 || ops.is_empty() {
        // constants one time in five
        return match (rng.gen_range(0..10), atoms.choose(rng)) {
            (0, _) => ObsTerm::Top,
            (1, _) => ObsTerm::Bot,
            (_, Some(a)) => ObsTerm::Atom(a.clone()),
            (k, None) if k % 2 == 0 => ObsTerm::Top,
            (_, None) => ObsTerm::Bot,
        };
    }
    let rest = size - 1;
    let left = rng.gen_range(1..rest);
    let op = *ops.choose(rng).expect("non-empty");
    op.apply(random_term_of_size(rng, atoms, ops, left), random_term_of_size(rng, atoms, ops, rest - left))
}

/// A random term with between 1 and `max_size` nodes.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, atoms: &[Atom], ops: &[Op], max_size: usize) -> ObsTerm {
    let size = rng.gen_range(1..=max_size.max(1));
    random_term_of_size(rng, atoms, ops, size)
}

pub fn random_lat_term<R: Rng + ?Sized>(rng: &mut R, atoms: &[Atom], max_size: usize) -> LatTerm {
    random_term(rng, atoms, &Op::LATTICE, max_size).to_lat().expect("implication-free")
}

/// Each pair of distinct atoms coherent with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, atoms: Vec<Atom>, p: f64) -> CoherenceGraph {
    FiniteGraph::from_fn(atoms, |_, _| rng.gen_bool(p)).expect("distinct atoms").into()
}

/// Every coherence relation on `atoms`, one graph per subset of the
/// unordered pairs.
pub fn all_graphs(atoms: &[Atom]) -> Vec<CoherenceGraph> {
    let n = atoms.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let on = |a: &Atom, b: &Atom| {
                let i = atoms.iter().position(|x| x == a).expect("atom");
                let j = atoms.iter().position(|x| x == b).expect("atom");
                let k = pairs.iter().position(|&p| p == (i.min(j), i.max(j))).expect("pair");
                mask >> k & 1 == 1
            };
            FiniteGraph::from_fn(atoms.to_vec(), on).expect("distinct atoms").into()
        })
        .collect()
}

/// A product of `components` random finite graphs indexed `1, 2, ...`, each
/// with between 1 and `max_atoms` atoms named `a, b, ...`.
pub fn random_product<R: Rng + ?Sized>(rng: &mut R, components: usize, max_atoms: usize, p: f64) -> CoherenceGraph {
    let parts: Vec<(String, CoherenceGraph)> = (1..=components)
        .map(|i| {
            let n = rng.gen_range(1..=max_atoms.max(1));
            (i.to_string(), random_graph(rng, letters(n), p))
        })
        .collect();
    ProductGraph::new(parts).expect("distinct indices").into()
}

/// Components of a product graph with their (finite) atom lists.
pub fn product_components(g: &CoherenceGraph) -> Vec<(Arc<str>, Vec<Atom>)> {
    match g {
        CoherenceGraph::Product(p) => {
            p.components().map(|(i, c)| (i.clone(), c.atoms().expect("finite component"))).collect()
        }
        _ => panic!("not a product graph"),
    }
}

/// A random term vector: each component enters the support with
/// probability one half, with a random term of at most `max_size` nodes.
pub fn random_vector<R: Rng + ?Sized>(
    rng: &mut R,
    components: &[(Arc<str>, Vec<Atom>)],
    ops: &[Op],
    max_size: usize,
) -> TermVector {
    let mut v = TermVector::zero();
    for (i, atoms) in components {
        if rng.gen_bool(0.5) {
            v.insert(i.clone(), random_term(rng, atoms, ops, max_size));
        }
    }
    v
}

/// A representative of up to `max_len` random vectors.
pub fn random_representative<R: Rng + ?Sized>(
    rng: &mut R,
    components: &[(Arc<str>, Vec<Atom>)],
    max_len: usize,
    max_size: usize,
) -> Representative {
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| random_vector(rng, components, &Op::ALL, max_size)).collect()
}
