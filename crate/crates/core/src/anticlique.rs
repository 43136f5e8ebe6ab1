//! Decision procedure for the infinite anticlique.
//!
//! Every observation term over the anticlique denotes one of three shapes:
//! everything, the singletons drawn from a finite set, or the singletons
//! avoiding a finite set. The connectives act on these shapes by simple set
//! arithmetic, so containment is decided without ever touching a clique.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{AnticliqueGraph, Atom, CoherenceGraph};
use crate::term::{big_or, LatTerm, ObsTerm};

/// Canonical form of an anticlique observation.
///
/// `Top` is all cliques (including `∅`). `Fin(A)` is `{{a} | a ∈ A}`, so
/// `Fin(∅)` is the empty observation. `CoFin(A)` is `{{b} | b ∉ A}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnticliqueRepr {
    Top,
    Fin(BTreeSet<Atom>),
    CoFin(BTreeSet<Atom>),
}

use AnticliqueRepr::{CoFin, Fin, Top};

impl AnticliqueRepr {
    pub fn bot() -> AnticliqueRepr {
        Fin(BTreeSet::new())
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        match self {
            Top => BTreeSet::new(),
            Fin(a) | CoFin(a) => a.clone(),
        }
    }
}

impl fmt::Display for AnticliqueRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, set) = match self {
            Top => return f.write_str("TOP"),
            Fin(a) => ("FIN", a),
            CoFin(a) => ("COFIN", a),
        };
        write!(f, "{tag}{{")?;
        for (k, a) in set.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for AnticliqueRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn minus(a: &BTreeSet<Atom>, b: &BTreeSet<Atom>) -> BTreeSet<Atom> {
    a.difference(b).cloned().collect()
}

fn meet(a: &BTreeSet<Atom>, b: &BTreeSet<Atom>) -> BTreeSet<Atom> {
    a.intersection(b).cloned().collect()
}

fn join(a: &BTreeSet<Atom>, b: &BTreeSet<Atom>) -> BTreeSet<Atom> {
    a.union(b).cloned().collect()
}

/// Union of observations.
pub fn oplus(r: &AnticliqueRepr, s: &AnticliqueRepr) -> AnticliqueRepr {
    match (r, s) {
        (Top, _) | (_, Top) => Top,
        (Fin(a), Fin(b)) => Fin(join(a, b)),
        (CoFin(a), CoFin(b)) => CoFin(meet(a, b)),
        (Fin(a), CoFin(b)) => CoFin(minus(b, a)),
        (CoFin(a), Fin(b)) => CoFin(minus(a, b)),
    }
}

/// Intersection of observations.
pub fn otimes(r: &AnticliqueRepr, s: &AnticliqueRepr) -> AnticliqueRepr {
    match (r, s) {
        (Top, x) | (x, Top) => x.clone(),
        (Fin(a), Fin(b)) => Fin(meet(a, b)),
        (CoFin(a), CoFin(b)) => CoFin(join(a, b)),
        (Fin(a), CoFin(b)) => Fin(minus(a, b)),
        (CoFin(a), Fin(b)) => Fin(minus(b, a)),
    }
}

/// Heyting implication of observations. Yields `Top` exactly when `r ≤ s`.
///
/// A singleton `{c}` lies in `r → s` iff `{c} ∈ r` implies `{c} ∈ s`,
/// because `{c}` is coherent only with `∅` and itself; `∅` lies in it iff
/// `r ⊆ s`.
pub fn ominus(r: &AnticliqueRepr, s: &AnticliqueRepr) -> AnticliqueRepr {
    match (r, s) {
        (_, Top) => Top,
        (Top, x) => x.clone(),
        (Fin(a), Fin(b)) if a.is_subset(b) => Top,
        (Fin(a), Fin(b)) => CoFin(minus(a, b)),
        (Fin(a), CoFin(b)) if a.is_disjoint(b) => Top,
        (Fin(a), CoFin(b)) => CoFin(meet(a, b)),
        (CoFin(a), CoFin(b)) if b.is_subset(a) => Top,
        (CoFin(a), CoFin(b)) => CoFin(minus(b, a)),
        (CoFin(a), Fin(b)) => Fin(join(a, b)),
    }
}

/// Containment of the denoted observations.
pub fn repr_leq(r: &AnticliqueRepr, s: &AnticliqueRepr) -> bool {
    match (r, s) {
        (_, Top) => true,
        (Top, _) => false,
        (Fin(a), Fin(b)) => a.is_subset(b),
        (Fin(a), CoFin(b)) => a.is_disjoint(b),
        (CoFin(a), CoFin(b)) => b.is_subset(a),
        (CoFin(_), Fin(_)) => false,
    }
}

fn disjunction(a: &BTreeSet<Atom>) -> ObsTerm {
    big_or(&a.iter().cloned().map(LatTerm::Atom).collect()).to_obs()
}

pub struct AnticliqueEngine<'g> {
    graph: &'g AnticliqueGraph,
}

impl<'g> AnticliqueEngine<'g> {
    pub fn new(graph: &'g CoherenceGraph) -> Result<Self> {
        match graph {
            CoherenceGraph::Anticlique(g) => Ok(AnticliqueEngine { graph: g }),
            other => Err(Error::Unsupported(format!(
                "the anticlique engine needs an anticlique graph, got a {} graph",
                other.kind()
            ))),
        }
    }

    pub fn from_anticlique(graph: &'g AnticliqueGraph) -> Self {
        AnticliqueEngine { graph }
    }

    pub fn graph(&self) -> &'g AnticliqueGraph {
        self.graph
    }

    /// The representative of `s`.
    pub fn tau(&self, s: &ObsTerm) -> Result<AnticliqueRepr> {
        Ok(match s {
            ObsTerm::Atom(a) => {
                if !self.graph.contains(a) {
                    return Err(Error::ForeignAtom(a.clone()));
                }
                Fin(BTreeSet::from([a.clone()]))
            }
            ObsTerm::Top => Top,
            ObsTerm::Bot => AnticliqueRepr::bot(),
            ObsTerm::Or(l, r) => oplus(&self.tau(l)?, &self.tau(r)?),
            ObsTerm::And(l, r) => otimes(&self.tau(l)?, &self.tau(r)?),
            ObsTerm::Impl(l, r) => ominus(&self.tau(l)?, &self.tau(r)?),
        })
    }

    /// A term denoting `r`. `CoFin(∅)` needs some atom `a` to be written as
    /// `a ∨ (a → ⊥)`; it is `hint` when given, else the atom of index 0.
    pub fn phi(&self, r: &AnticliqueRepr, hint: Option<&Atom>) -> ObsTerm {
        match r {
            Top => ObsTerm::Top,
            Fin(a) => disjunction(a),
            CoFin(a) if a.is_empty() => {
                let a = hint.cloned().unwrap_or_else(|| self.graph.atom(0));
                ObsTerm::or(ObsTerm::Atom(a.clone()), ObsTerm::neg(ObsTerm::Atom(a)))
            }
            CoFin(a) => ObsTerm::neg(disjunction(a)),
        }
    }

    pub fn leq(&self, s: &ObsTerm, t: &ObsTerm) -> Result<bool> {
        Ok(repr_leq(&self.tau(s)?, &self.tau(t)?))
    }

    pub fn equiv(&self, s: &ObsTerm, t: &ObsTerm) -> Result<bool> {
        Ok(self.tau(s)? == self.tau(t)?)
    }
}
