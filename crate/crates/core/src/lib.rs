//! Decision procedures for containment of observation terms over coherence
//! graphs.
//!
//! Observation terms are built from atoms with `&`, `|`, `->`, `top` and
//! `bot`. Over a coherence graph a term denotes a downclosed set of cliques,
//! and the question `s ≤ t` asks whether the denotation of `s` is contained
//! in that of `t`. Four engines answer it:
//!
//! - [`LatticeEngine`] for implication-free terms over any graph,
//! - [`FanEngine`] for arbitrary terms over graphs where every atom has
//!   finitely many incoherent partners,
//! - [`AnticliqueEngine`] for the infinite anticlique,
//! - [`ProductEngine`] for finite products, delegating to one engine per
//!   component.
//!
//! The [`Oracle`] evaluates terms by brute force over small finite graphs
//! and serves as ground truth.
//!
//! ```
//! use obskit_core::{CoherenceGraph, FanEngine, ObsTerm};
//!
//! let g = CoherenceGraph::from_json(
//!     r#"{"kind":"finite","atoms":["a","b","c"],"coh":[["a","b"],["b","c"]]}"#,
//! )?;
//! let fan = FanEngine::new(&g)?;
//! let s: ObsTerm = "a -> bot".parse()?;
//! assert!(fan.leq(&s, &"c".parse()?)?);
//! assert_eq!(fan.normalize(&s)?.to_string(), "c");
//! # Ok::<(), obskit_core::Error>(())
//! ```

pub mod anticlique;
pub mod clique;
pub mod error;
pub mod fan;
pub mod graph;
pub mod lattice;
pub mod oracle;
pub mod product;
pub mod term;
#[cfg(any(test, feature = "testkit"))]
pub mod testkit;

pub use anticlique::{AnticliqueEngine, AnticliqueRepr};
pub use clique::{AtomSet, Clique, CliqueFamily};
pub use error::{Error, Result};
pub use fan::FanEngine;
pub use graph::{AnticliqueGraph, Atom, CoherenceGraph, FiniteGraph, GraphKind, ProductGraph};
pub use lattice::{Bracket, LatticeEngine, DEFAULT_MAX_BRACKET};
pub use oracle::{Oracle, SemSet};
pub use product::{ComponentEngine, ProductEngine, Representative, TermVector, DEFAULT_MAX_VECTORS};
pub use term::{parse_lat, parse_term, LatTerm, ObsTerm};
