//! Containment of implication-free terms over any graph with decidable
//! coherence.
//!
//! A lattice term denotes the downclosure of the cliques in its bracket,
//! the finite set of atom sets read off its disjunctive normal form. So
//! `s ≤ t` holds iff every clique in the bracket of `s` contains some
//! member of the bracket of `t`.

use std::collections::BTreeSet;
use std::fmt;

use crate::clique::{minimal_generators, union_is_clique, AtomSet, Clique, CliqueFamily};
use crate::error::{Error, Result};
use crate::graph::CoherenceGraph;
use crate::term::{big_and, big_or, LatTerm};

/// Default cap on the number of members of any bracket the engine builds.
pub const DEFAULT_MAX_BRACKET: usize = 1_000_000;

/// A finite set of finite atom sets, sorted and deduplicated.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Bracket(Vec<AtomSet>);

impl Bracket {
    pub fn members(&self) -> &[AtomSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<AtomSet> for Bracket {
    fn from_iter<I: IntoIterator<Item = AtomSet>>(iter: I) -> Self {
        let set: BTreeSet<AtomSet> = iter.into_iter().collect();
        Bracket(set.into_iter().collect())
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The bracket of a term, failing once any intermediate result has more
/// than `limit` members.
pub fn bracket_within(s: &LatTerm, limit: usize) -> Result<Bracket> {
    fn go(s: &LatTerm, limit: usize) -> Result<BTreeSet<AtomSet>> {
        Ok(match s {
            LatTerm::Atom(a) => BTreeSet::from([AtomSet::singleton(a.clone())]),
            LatTerm::Top => BTreeSet::from([AtomSet::empty()]),
            LatTerm::Bot => BTreeSet::new(),
            LatTerm::Or(l, r) => {
                let mut x = go(l, limit)?;
                x.extend(go(r, limit)?);
                if x.len() > limit {
                    return Err(Error::BracketBudget { limit });
                }
                x
            }
            LatTerm::And(l, r) => {
                let (x, y) = (go(l, limit)?, go(r, limit)?);
                if x.len().saturating_mul(y.len()) > limit {
                    return Err(Error::BracketBudget { limit });
                }
                x.iter().flat_map(|u| y.iter().map(move |v| u.union(v))).collect()
            }
        })
    }
    Ok(Bracket(go(s, limit)?.into_iter().collect()))
}

/// The bracket of a term, with no size limit.
pub fn bracket(s: &LatTerm) -> Bracket {
    bracket_within(s, usize::MAX).expect("unbounded")
}

/// `X ◁ Y`: every member of `x` contains some member of `y`.
pub fn triangle_leq<X: AsRef<AtomSet>, Y: AsRef<AtomSet>>(x: &[X], y: &[Y]) -> bool {
    x.iter().all(|u| y.iter().any(|v| v.as_ref().is_subset(u.as_ref())))
}

/// `⋁{⋀x | x ∈ family}`.
pub fn family_term<'a, S: AsRef<AtomSet> + 'a>(family: impl IntoIterator<Item = &'a S>) -> LatTerm {
    let disjuncts: BTreeSet<LatTerm> =
        family.into_iter().map(|x| big_and(&x.as_ref().iter().cloned().map(LatTerm::Atom).collect())).collect();
    big_or(&disjuncts)
}

/// Decision procedure for lattice terms over a fixed graph.
#[derive(Clone, Copy)]
pub struct LatticeEngine<'g> {
    graph: &'g CoherenceGraph,
    max_bracket: usize,
}

impl<'g> LatticeEngine<'g> {
    pub fn new(graph: &'g CoherenceGraph) -> Self {
        LatticeEngine { graph, max_bracket: DEFAULT_MAX_BRACKET }
    }

    pub fn with_max_bracket(mut self, limit: usize) -> Self {
        self.max_bracket = limit;
        self
    }

    pub fn graph(&self) -> &'g CoherenceGraph {
        self.graph
    }

    pub fn max_bracket(&self) -> usize {
        self.max_bracket
    }

    fn check_atoms<'a>(&self, atoms: impl IntoIterator<Item = &'a AtomSet>) -> Result<()> {
        for x in atoms {
            for a in x {
                self.graph.check_atom(a)?;
            }
        }
        Ok(())
    }

    /// The members of `x` that are cliques, reduced to the minimal ones.
    pub fn filter_cliques(&self, x: &Bracket) -> Result<CliqueFamily> {
        self.check_atoms(x.members())?;
        let mut kept = Vec::new();
        for m in x.members() {
            if crate::clique::is_clique(self.graph, m)? {
                kept.push(Clique::trusted(m.clone()));
            }
        }
        Ok(minimal_generators(kept))
    }

    /// `filter_cliques(bracket(s))`, computed bottom-up: non-cliques and
    /// non-minimal members are discarded at every conjunction, so the
    /// intermediate families stay antichains of cliques.
    pub fn clique_family(&self, s: &LatTerm) -> Result<CliqueFamily> {
        Ok(match s {
            LatTerm::Atom(a) => {
                self.graph.check_atom(a)?;
                minimal_generators([Clique::trusted(AtomSet::singleton(a.clone()))])
            }
            LatTerm::Top => minimal_generators([Clique::empty()]),
            LatTerm::Bot => CliqueFamily::empty(),
            LatTerm::Or(l, r) => {
                let (x, y) = (self.clique_family(l)?, self.clique_family(r)?);
                minimal_generators(x.iter().chain(y.iter()).cloned())
            }
            LatTerm::And(l, r) => {
                let (x, y) = (self.clique_family(l)?, self.clique_family(r)?);
                if x.len().saturating_mul(y.len()) > self.max_bracket {
                    return Err(Error::BracketBudget { limit: self.max_bracket });
                }
                let mut out = Vec::with_capacity(x.len() * y.len());
                for u in &x {
                    for v in &y {
                        if union_is_clique(self.graph, u.atoms(), v.atoms())? {
                            out.push(Clique::trusted(u.atoms().union(v.atoms())));
                        }
                    }
                }
                minimal_generators(out)
            }
        })
    }

    /// Decides `⟦s⟧ ⊆ ⟦t⟧`, equivalently `s ≤ t` in the lattice theory with
    /// incoherent pairs collapsed to `bot`.
    pub fn leq(&self, s: &LatTerm, t: &LatTerm) -> Result<bool> {
        let x = self.clique_family(s)?;
        let y = bracket_within(t, self.max_bracket)?;
        self.check_atoms(y.members())?;
        Ok(triangle_leq(x.members(), y.members()))
    }

    pub fn equiv(&self, s: &LatTerm, t: &LatTerm) -> Result<bool> {
        Ok(self.leq(s, t)? && self.leq(t, s)?)
    }

    /// Disjunctive normal form over the minimal cliques of the bracket.
    pub fn dnf(&self, s: &LatTerm) -> Result<LatTerm> {
        Ok(family_term(self.clique_family(s)?.members()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Atom;
    use crate::term::parse_lat;

    fn g3() -> CoherenceGraph {
        CoherenceGraph::from_json(r#"{"kind":"finite","atoms":["a","b","c"],"coh":[["a","b"],["b","c"]]}"#).unwrap()
    }

    fn set(names: &[&str]) -> AtomSet {
        names.iter().map(|n| Atom::new(n).unwrap()).collect()
    }

    fn br(sets: &[&[&str]]) -> Bracket {
        sets.iter().map(|s| set(s)).collect()
    }

    fn t(s: &str) -> LatTerm {
        parse_lat(s).unwrap()
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(&LatTerm::Top), br(&[&[]]));
        assert_eq!(bracket(&LatTerm::Bot), br(&[]));
        assert_eq!(bracket(&t("a | b & c")), br(&[&["a"], &["b", "c"]]));
        // (a ∨ b) ∧ c expands to {a} ∪ {c} and {b} ∪ {c}.
        assert_eq!(bracket(&t("(a | b) & c")), br(&[&["a", "c"], &["b", "c"]]));
        assert_eq!(bracket(&t("a & a | a")), br(&[&["a"]]));
    }

    #[test]
    fn bracket_budget() {
        let wide = t("(a | b) & (c | d) & (e | f)");
        assert_eq!(bracket_within(&wide, 8).unwrap().len(), 8);
        assert_eq!(bracket_within(&wide, 7).unwrap_err(), Error::BracketBudget { limit: 7 });
    }

    #[test]
    fn triangle_examples() {
        assert!(triangle_leq(br(&[&["a", "b"]]).members(), br(&[&["a"]]).members()));
        assert!(!triangle_leq(br(&[&["a"]]).members(), br(&[&["a", "b"]]).members()));
        assert!(triangle_leq(br(&[]).members(), br(&[]).members()));
    }

    #[test]
    fn filter_examples() {
        let g = g3();
        let e = LatticeEngine::new(&g);
        assert_eq!(e.filter_cliques(&br(&[&["a", "c"], &["b", "c"]])).unwrap().to_string(), "{{b,c}}");
        assert_eq!(e.filter_cliques(&br(&[&[], &["a", "b"]])).unwrap().to_string(), "{{}}");
        assert!(e.filter_cliques(&br(&[])).unwrap().is_empty());
        assert!(matches!(e.filter_cliques(&br(&[&["z"]])), Err(Error::ForeignAtom(_))));
    }

    #[test]
    fn leq_examples() {
        let g = g3();
        let e = LatticeEngine::new(&g);
        assert!(e.leq(&t("a & c"), &LatTerm::Bot).unwrap());
        assert!(!e.leq(&t("b"), &t("a")).unwrap());
        assert!(e.leq(&t("(a | b) & c"), &t("(a | b) & c")).unwrap());
        assert!(e.leq(&t("a & b"), &t("a")).unwrap());
        assert!(matches!(e.leq(&t("a"), &t("q")), Err(Error::ForeignAtom(_))));
    }

    #[test]
    fn dnf_examples() {
        let g = g3();
        let e = LatticeEngine::new(&g);
        assert_eq!(e.dnf(&t("(a | b) & c")).unwrap(), t("b & c"));
        assert_eq!(e.dnf(&t("a & c")).unwrap(), LatTerm::Bot);
        assert_eq!(e.dnf(&LatTerm::Top).unwrap(), LatTerm::Top);
        assert_eq!(e.dnf(&t("c | b & a | a")).unwrap().to_string(), "a | c");
    }

    #[test]
    fn incremental_family_matches_filtered_bracket() {
        let g = g3();
        let e = LatticeEngine::new(&g);
        for s in ["(a | b | top) & (c | b) & (a | c)", "a & b & c | b", "(a | c) & (a | c)", "bot & a | top"] {
            let s = t(s);
            assert_eq!(e.clique_family(&s).unwrap(), e.filter_cliques(&bracket(&s)).unwrap(), "{s}");
        }
    }

    #[test]
    fn works_on_anticliques() {
        let omega = CoherenceGraph::from_json(r#"{"kind":"anticlique","prefix":"n"}"#).unwrap();
        let e = LatticeEngine::new(&omega);
        assert!(e.leq(&t("n1 & n2"), &LatTerm::Bot).unwrap());
        assert!(!e.leq(&t("n1"), &t("n2")).unwrap());
        assert!(e.equiv(&t("n1 & (n1 | n2)"), &t("n1")).unwrap());
    }
}
