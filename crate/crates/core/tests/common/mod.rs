#![allow(dead_code)]

use obskit_core::{CoherenceGraph, LatTerm, ObsTerm};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn g3() -> CoherenceGraph {
    CoherenceGraph::from_json(r#"{"kind":"finite","atoms":["a","b","c"],"coh":[["a","b"],["b","c"]]}"#).unwrap()
}

pub fn omega() -> CoherenceGraph {
    CoherenceGraph::from_json(r#"{"kind":"anticlique","prefix":"n"}"#).unwrap()
}

pub fn o(s: &str) -> ObsTerm {
    s.parse().unwrap()
}

pub fn l(s: &str) -> LatTerm {
    s.parse().unwrap()
}
