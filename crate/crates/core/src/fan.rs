//! Implication elimination on graphs with finite anti-neighbourhoods.
//!
//! On such graphs the negation of a finite clique is the disjunction of the
//! atoms incoherent with one of its members. That is enough to rewrite any
//! implication between lattice terms into a lattice term, so every
//! observation term gets a semantically equal lattice term, and containment
//! reduces to the lattice engine.

use std::collections::BTreeSet;

use crate::clique::{Clique, CliqueFamily};
use crate::error::{Error, Result};
use crate::graph::CoherenceGraph;
use crate::lattice::LatticeEngine;
use crate::term::{big_and, big_or, LatTerm, ObsTerm};

pub struct FanEngine<'g> {
    lattice: LatticeEngine<'g>,
}

impl<'g> FanEngine<'g> {
    /// Fails unless the graph has finite anti-neighbourhoods.
    pub fn new(graph: &'g CoherenceGraph) -> Result<Self> {
        if !graph.has_fan() {
            return Err(Error::Unsupported(format!(
                "the implication engine needs finite anti-neighbourhoods; a {} graph without them was given",
                graph.kind()
            )));
        }
        Ok(FanEngine { lattice: LatticeEngine::new(graph) })
    }

    pub fn with_max_bracket(mut self, limit: usize) -> Self {
        self.lattice = self.lattice.with_max_bracket(limit);
        self
    }

    pub fn graph(&self) -> &'g CoherenceGraph {
        self.lattice.graph()
    }

    pub fn lattice(&self) -> &LatticeEngine<'g> {
        &self.lattice
    }

    /// `⋀α → ⊥` as the disjunction of every atom incoherent with a member of `α`.
    pub fn neg_clique(&self, alpha: &Clique) -> Result<LatTerm> {
        let mut witnesses = BTreeSet::new();
        for a in alpha.atoms() {
            for b in self.graph().anti_neighbourhood(a)? {
                witnesses.insert(LatTerm::Atom(b));
            }
        }
        Ok(big_or(&witnesses))
    }

    /// A lattice term equal to `s → t`.
    ///
    /// Both sides go to disjunctive normal form over cliques. The outer
    /// conjunction ranges over the cliques `α` of `s`; inside it, each
    /// clique `β` of `t` contributes `⋀{¬α ∨ a | a ∈ β ∖ α}`. When `t` has
    /// no cliques the whole thing collapses to `⋀{¬α}`. The result is put
    /// back in normal form.
    pub fn eliminate_implication(&self, s: &LatTerm, t: &LatTerm) -> Result<LatTerm> {
        let sources = self.lattice.clique_family(s)?;
        let targets = self.lattice.clique_family(t)?;
        let raw = self.implication_term(&sources, &targets)?;
        self.lattice.dnf(&raw)
    }

    fn implication_term(&self, sources: &CliqueFamily, targets: &CliqueFamily) -> Result<LatTerm> {
        let mut outer = BTreeSet::new();
        for alpha in sources {
            let negation = self.neg_clique(alpha)?;
            if targets.is_empty() {
                outer.insert(negation);
                continue;
            }
            let mut middle = BTreeSet::new();
            for beta in targets {
                let inner: BTreeSet<LatTerm> = beta
                    .atoms()
                    .difference(alpha.atoms())
                    .iter()
                    .map(|a| LatTerm::or(negation.clone(), LatTerm::Atom(a.clone())))
                    .collect();
                middle.insert(big_and(&inner));
            }
            outer.insert(big_or(&middle));
        }
        Ok(big_and(&outer))
    }

    /// Translates an observation term into a semantically equal lattice term.
    pub fn tau(&self, s: &ObsTerm) -> Result<LatTerm> {
        Ok(match s {
            ObsTerm::Atom(a) => {
                self.graph().check_atom(a)?;
                LatTerm::Atom(a.clone())
            }
            ObsTerm::Top => LatTerm::Top,
            ObsTerm::Bot => LatTerm::Bot,
            ObsTerm::And(l, r) => LatTerm::and(self.tau(l)?, self.tau(r)?),
            ObsTerm::Or(l, r) => LatTerm::or(self.tau(l)?, self.tau(r)?),
            ObsTerm::Impl(l, r) => self.eliminate_implication(&self.tau(l)?, &self.tau(r)?)?,
        })
    }

    /// Decides `⟦s⟧ ⊆ ⟦t⟧`.
    pub fn leq(&self, s: &ObsTerm, t: &ObsTerm) -> Result<bool> {
        self.lattice.leq(&self.tau(s)?, &self.tau(t)?)
    }

    pub fn equiv(&self, s: &ObsTerm, t: &ObsTerm) -> Result<bool> {
        let (x, y) = (self.tau(s)?, self.tau(t)?);
        Ok(self.lattice.leq(&x, &y)? && self.lattice.leq(&y, &x)?)
    }

    /// The disjunctive normal form of `tau(s)`.
    pub fn normalize(&self, s: &ObsTerm) -> Result<LatTerm> {
        self.lattice.dnf(&self.tau(s)?)
    }
}
