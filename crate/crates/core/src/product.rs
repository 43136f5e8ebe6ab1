//! Decision procedure for finite products of graphs.
//!
//! A product term is flattened into finite sets of term vectors, each vector
//! assigning a component term to finitely many component indices. A
//! disjunctive representative `V` stands for `⋁{∏v | v ∈ V}` and a
//! conjunctive one for `⋀{∐v | v ∈ V}`, where `∏v` is the conjunction and
//! `∐v` the disjunction of the injected coordinates. Containment between a
//! conjunction and a disjunction of injections then splits into one query
//! per component.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::anticlique::AnticliqueEngine;
use crate::error::{Error, Result};
use crate::fan::FanEngine;
use crate::graph::{CoherenceGraph, GraphKind, ProductGraph};
use crate::lattice::DEFAULT_MAX_BRACKET;
use crate::term::{fold, ObsTerm};

/// Default cap on the number of vectors in any representative.
pub const DEFAULT_MAX_VECTORS: usize = 100_000;

/// A finitely supported map from component index to a term over that
/// component. Coordinates carry untagged component atoms.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermVector(BTreeMap<Arc<str>, ObsTerm>);

impl TermVector {
    /// The vector with empty support.
    pub fn zero() -> TermVector {
        TermVector(BTreeMap::new())
    }

    /// The vector with support `{index}`.
    pub fn single(index: impl Into<Arc<str>>, s: ObsTerm) -> TermVector {
        TermVector(BTreeMap::from([(index.into(), s)]))
    }

    pub fn get(&self, index: &str) -> Option<&ObsTerm> {
        self.0.get(index)
    }

    pub fn insert(&mut self, index: impl Into<Arc<str>>, s: ObsTerm) -> Option<ObsTerm> {
        self.0.insert(index.into(), s)
    }

    pub fn support(&self) -> impl Iterator<Item = &Arc<str>> {
        self.0.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Arc<str>, &ObsTerm)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn support_within(&self, other: &TermVector) -> bool {
        self.0.keys().all(|k| other.0.contains_key(k))
    }
}

impl FromIterator<(Arc<str>, ObsTerm)> for TermVector {
    fn from_iter<I: IntoIterator<Item = (Arc<str>, ObsTerm)>>(iter: I) -> Self {
        TermVector(iter.into_iter().collect())
    }
}

impl fmt::Display for TermVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, (i, s)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{i}: {s}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for TermVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn merge(u: &TermVector, v: &TermVector, both: impl Fn(&ObsTerm, &ObsTerm) -> ObsTerm) -> TermVector {
    let mut out = u.0.clone();
    for (i, t) in &v.0 {
        let combined = match u.0.get(i) {
            Some(s) => both(s, t),
            None => t.clone(),
        };
        out.insert(i.clone(), combined);
    }
    TermVector(out)
}

/// Coordinatewise `∨`; a coordinate missing on one side is copied from the other.
pub fn vec_or(u: &TermVector, v: &TermVector) -> TermVector {
    merge(u, v, |s, t| ObsTerm::or(s.clone(), t.clone()))
}

/// Coordinatewise `∧`; a coordinate missing on one side is copied from the other.
pub fn vec_and(u: &TermVector, v: &TermVector) -> TermVector {
    merge(u, v, |s, t| ObsTerm::and(s.clone(), t.clone()))
}

/// The vector `w` with `∏u → ∐v ≡ ∐w`: `uᵢ → vᵢ` on shared indices, `uᵢ → ⊥`
/// where only `u` is defined, `vᵢ` where only `v` is.
pub fn vec_impl(u: &TermVector, v: &TermVector) -> TermVector {
    let mut out = v.0.clone();
    for (i, s) in &u.0 {
        let target = v.0.get(i).cloned().unwrap_or(ObsTerm::Bot);
        out.insert(i.clone(), ObsTerm::imp(s.clone(), target));
    }
    TermVector(out)
}

/// Tags every atom of `s` with component `index`.
pub fn inject(index: &Arc<str>, s: &ObsTerm) -> ObsTerm {
    s.map_atoms(&mut |a| a.lift(index))
}

/// `∏v`: conjunction of the injected coordinates in index order; `⊤` on `0⃗`.
pub fn prod_term(v: &TermVector) -> ObsTerm {
    fold(v.0.iter().map(|(i, s)| inject(i, s)), ObsTerm::Top, ObsTerm::and)
}

/// `∐v`: disjunction of the injected coordinates in index order; `⊥` on `0⃗`.
pub fn coprod_term(v: &TermVector) -> ObsTerm {
    fold(v.0.iter().map(|(i, s)| inject(i, s)), ObsTerm::Bot, ObsTerm::or)
}

/// A finite set of term vectors.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representative(BTreeSet<TermVector>);

impl Representative {
    pub fn empty() -> Representative {
        Representative(BTreeSet::new())
    }

    /// `{0⃗}`.
    pub fn unit() -> Representative {
        Representative(BTreeSet::from([TermVector::zero()]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &TermVector> {
        self.0.iter()
    }

    pub fn union(&self, other: &Representative) -> Representative {
        Representative(self.0.union(&other.0).cloned().collect())
    }

    /// `⋁{∏v | v ∈ self}`.
    pub fn disjunctive_term(&self) -> ObsTerm {
        fold(self.0.iter().map(prod_term), ObsTerm::Bot, ObsTerm::or)
    }

    /// `⋀{∐v | v ∈ self}`.
    pub fn conjunctive_term(&self) -> ObsTerm {
        fold(self.0.iter().map(coprod_term), ObsTerm::Top, ObsTerm::and)
    }
}

impl FromIterator<TermVector> for Representative {
    fn from_iter<I: IntoIterator<Item = TermVector>>(iter: I) -> Self {
        Representative(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Representative {
    type Item = &'a TermVector;
    type IntoIter = std::collections::btree_set::Iter<'a, TermVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Representative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Representative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn convert(v: &Representative, combine: fn(&TermVector, &TermVector) -> TermVector) -> Representative {
    let mut acc = Representative::unit();
    for w in v.0.iter().rev() {
        let mut next = BTreeSet::new();
        for (i, s) in &w.0 {
            let head = TermVector::single(i.clone(), s.clone());
            for u in &acc.0 {
                next.insert(combine(&head, u));
            }
        }
        acc = Representative(next);
    }
    acc
}

/// Conjunctive to disjunctive: `c2d(∅) = {0⃗}` and
/// `c2d({v} ⊎ V) = {v⃗ᵢ ∧ u | i ∈ |v|, u ∈ c2d(V)}`.
pub fn c2d(v: &Representative) -> Representative {
    convert(v, vec_and)
}

/// Disjunctive to conjunctive, the dual of [`c2d`].
pub fn d2c(v: &Representative) -> Representative {
    convert(v, vec_or)
}

/// Decision capability for one component of a product.
pub trait ComponentEngine {
    fn kind(&self) -> GraphKind;

    /// Decides containment of component terms.
    fn leq(&self, s: &ObsTerm, t: &ObsTerm) -> Result<bool>;

    /// A term with the same meaning, ideally smaller.
    fn simplify(&self, s: &ObsTerm) -> Result<ObsTerm> {
        Ok(s.clone())
    }
}

pub struct FanComponent<'g>(pub FanEngine<'g>);

impl ComponentEngine for FanComponent<'_> {
    fn kind(&self) -> GraphKind {
        self.0.graph().kind()
    }

    fn leq(&self, s: &ObsTerm, t: &ObsTerm) -> Result<bool> {
        self.0.leq(s, t)
    }

    fn simplify(&self, s: &ObsTerm) -> Result<ObsTerm> {
        Ok(self.0.normalize(s)?.to_obs())
    }
}

pub struct AnticliqueComponent<'g>(pub AnticliqueEngine<'g>);

impl ComponentEngine for AnticliqueComponent<'_> {
    fn kind(&self) -> GraphKind {
        GraphKind::Anticlique
    }

    fn leq(&self, s: &ObsTerm, t: &ObsTerm) -> Result<bool> {
        self.0.leq(s, t)
    }

    fn simplify(&self, s: &ObsTerm) -> Result<ObsTerm> {
        Ok(self.0.phi(&self.0.tau(s)?, None))
    }
}

/// The engine a component gets by default.
pub fn default_component_engine<'g>(
    g: &'g CoherenceGraph,
    max_bracket: usize,
) -> Result<Box<dyn ComponentEngine + 'g>> {
    Ok(match g {
        CoherenceGraph::Anticlique(_) => Box::new(AnticliqueComponent(AnticliqueEngine::new(g)?)),
        _ => Box::new(FanComponent(FanEngine::new(g)?.with_max_bracket(max_bracket))),
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Reading {
    /// `⋁∏`: coordinates combine by `∧`, vectors by `∨`.
    Disjunctive,
    /// `⋀∐`: coordinates combine by `∨`, vectors by `∧`.
    Conjunctive,
}

enum Coord {
    Top,
    Bot,
    Other(ObsTerm),
}

pub struct ProductEngine<'g> {
    graph: &'g ProductGraph,
    engines: BTreeMap<Arc<str>, Box<dyn ComponentEngine + 'g>>,
    max_vectors: usize,
}

impl<'g> ProductEngine<'g> {
    /// Default engines for every component.
    pub fn new(graph: &'g CoherenceGraph) -> Result<Self> {
        Self::with_max_bracket(graph, DEFAULT_MAX_BRACKET)
    }

    /// Default engines, with `limit` passed to every lattice-based component.
    pub fn with_max_bracket(graph: &'g CoherenceGraph, limit: usize) -> Result<Self> {
        let p = as_product(graph)?;
        let mut engines = BTreeMap::new();
        for (i, g) in p.components() {
            engines.insert(i.clone(), default_component_engine(g, limit)?);
        }
        Self::with_engines(graph, engines)
    }

    /// Explicit engines; every component must have one.
    pub fn with_engines(
        graph: &'g CoherenceGraph,
        engines: BTreeMap<Arc<str>, Box<dyn ComponentEngine + 'g>>,
    ) -> Result<Self> {
        let p = as_product(graph)?;
        if let Some((i, _)) = p.components().find(|(i, _)| !engines.contains_key(*i)) {
            return Err(Error::MissingEngine(i.to_string()));
        }
        Ok(ProductEngine { graph: p, engines, max_vectors: DEFAULT_MAX_VECTORS })
    }

    pub fn with_max_vectors(mut self, limit: usize) -> Self {
        self.max_vectors = limit;
        self
    }

    pub fn graph(&self) -> &'g ProductGraph {
        self.graph
    }

    fn engine(&self, index: &str) -> Result<&(dyn ComponentEngine + 'g)> {
        self.engines.get(index).map(|e| e.as_ref()).ok_or_else(|| Error::MissingEngine(index.to_owned()))
    }

    fn budget(&self, n: usize) -> Result<()> {
        if n > self.max_vectors {
            Err(Error::VectorBudget { limit: self.max_vectors })
        } else {
            Ok(())
        }
    }

    fn coord(&self, index: &str, s: &ObsTerm) -> Result<Coord> {
        let e = self.engine(index)?;
        let s = e.simplify(s)?;
        Ok(if e.leq(&ObsTerm::Top, &s)? {
            Coord::Top
        } else if e.leq(&s, &ObsTerm::Bot)? {
            Coord::Bot
        } else {
            Coord::Other(s)
        })
    }

    /// `true` when `u` is redundant next to `v`: `|v| ⊆ |u|` and, on `|v|`,
    /// `uᵢ ≤ vᵢ` for `∏` (so `∏u ≤ ∏v`) or `vᵢ ≤ uᵢ` for `∐` (so `∐v ≤ ∐u`).
    fn subsumed(&self, reading: Reading, u: &TermVector, v: &TermVector) -> Result<bool> {
        if !v.support_within(u) {
            return Ok(false);
        }
        for (i, t) in &v.0 {
            let s = &u.0[i];
            let (lo, hi) = match reading {
                Reading::Disjunctive => (s, t),
                Reading::Conjunctive => (t, s),
            };
            if !self.engine(i)?.leq(lo, hi)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Simplifies coordinates, then drops vectors that are constant in the
    /// given reading or subsumed by another vector.
    fn canonical(&self, reading: Reading, vectors: impl IntoIterator<Item = TermVector>) -> Result<Representative> {
        // In ⋁∏ a ⊤ coordinate vanishes and a ⊥ coordinate kills the vector;
        // in ⋀∐ the roles swap.
        let disjunctive = reading == Reading::Disjunctive;
        let mut simplified = BTreeSet::new();
        'vectors: for v in vectors {
            let mut out = BTreeMap::new();
            for (i, s) in v.0 {
                match self.coord(&i, &s)? {
                    Coord::Other(t) => {
                        out.insert(i, t);
                    }
                    Coord::Top if disjunctive => {}
                    Coord::Bot if !disjunctive => {}
                    Coord::Top | Coord::Bot => continue 'vectors,
                }
            }
            if out.is_empty() {
                return Ok(Representative::unit());
            }
            simplified.insert(TermVector(out));
        }
        let mut kept: Vec<TermVector> = Vec::with_capacity(simplified.len());
        for u in simplified {
            let mut redundant = false;
            for v in &kept {
                if self.subsumed(reading, &u, v)? {
                    redundant = true;
                    break;
                }
            }
            if redundant {
                continue;
            }
            let mut retained = Vec::with_capacity(kept.len() + 1);
            for w in kept {
                if !self.subsumed(reading, &w, &u)? {
                    retained.push(w);
                }
            }
            retained.push(u);
            kept = retained;
        }
        Ok(kept.into_iter().collect())
    }

    /// [`c2d`] or [`d2c`] with canonicalization after every step.
    fn convert(&self, v: &Representative, from: Reading) -> Result<Representative> {
        let (to, combine): (Reading, fn(&TermVector, &TermVector) -> TermVector) = match from {
            Reading::Conjunctive => (Reading::Disjunctive, vec_and),
            Reading::Disjunctive => (Reading::Conjunctive, vec_or),
        };
        let mut acc = Representative::unit();
        for w in v.0.iter().rev() {
            self.budget(w.len().saturating_mul(acc.len()))?;
            let mut next = Vec::with_capacity(w.len() * acc.len());
            for (i, s) in &w.0 {
                let head = TermVector::single(i.clone(), s.clone());
                for u in &acc.0 {
                    next.push(combine(&head, u));
                }
            }
            acc = self.canonical(to, next)?;
        }
        Ok(acc)
    }

    /// A disjunctive representative `V` with `⋁{∏v | v ∈ V} ≡ s`.
    pub fn tau_vee(&self, s: &ObsTerm) -> Result<Representative> {
        match s {
            ObsTerm::Atom(a) => {
                let index = a
                    .component_arc()
                    .filter(|_| self.graph.contains(a))
                    .ok_or_else(|| Error::ForeignAtom(a.clone()))?;
                self.canonical(Reading::Disjunctive, [TermVector::single(index.clone(), ObsTerm::Atom(a.base()))])
            }
            ObsTerm::Top => Ok(Representative::unit()),
            ObsTerm::Bot => Ok(Representative::empty()),
            ObsTerm::Or(l, r) => {
                let (x, y) = (self.tau_vee(l)?, self.tau_vee(r)?);
                self.budget(x.len() + y.len())?;
                self.canonical(Reading::Disjunctive, x.union(&y).0)
            }
            ObsTerm::And(l, r) => {
                let x = self.convert(&self.tau_vee(l)?, Reading::Disjunctive)?;
                let y = self.convert(&self.tau_vee(r)?, Reading::Disjunctive)?;
                self.budget(x.len() + y.len())?;
                let both = self.canonical(Reading::Conjunctive, x.union(&y).0)?;
                self.convert(&both, Reading::Conjunctive)
            }
            ObsTerm::Impl(l, r) => {
                let x = self.tau_vee(l)?;
                let y = self.convert(&self.tau_vee(r)?, Reading::Disjunctive)?;
                self.budget(x.len().saturating_mul(y.len()))?;
                let mut clauses = Vec::with_capacity(x.len() * y.len());
                for u in &x {
                    for v in &y {
                        clauses.push(vec_impl(u, v));
                    }
                }
                let clauses = self.canonical(Reading::Conjunctive, clauses)?;
                self.convert(&clauses, Reading::Conjunctive)
            }
        }
    }

    /// A conjunctive representative `V` with `⋀{∐v | v ∈ V} ≡ s`.
    pub fn tau_wedge(&self, s: &ObsTerm) -> Result<Representative> {
        self.convert(&self.tau_vee(s)?, Reading::Disjunctive)
    }

    /// `∏u ≤ ∐v` iff some index of `|u| ∪ |v|` has `uᵢ ≤ vᵢ`, with `u` padded
    /// by `⊤` and `v` by `⊥`.
    fn pair_leq(&self, u: &TermVector, v: &TermVector) -> Result<bool> {
        let indices: BTreeSet<&Arc<str>> = u.support().chain(v.support()).collect();
        for i in indices {
            let s = u.0.get(i).unwrap_or(&ObsTerm::Top);
            let t = v.0.get(i).unwrap_or(&ObsTerm::Bot);
            if self.engine(i)?.leq(s, t)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Decides `⟦s⟧ ⊆ ⟦t⟧`.
    pub fn leq(&self, s: &ObsTerm, t: &ObsTerm) -> Result<bool> {
        let u = self.tau_vee(s)?;
        let v = self.tau_wedge(t)?;
        for x in &u {
            for y in &v {
                if !self.pair_leq(x, y)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn equiv(&self, s: &ObsTerm, t: &ObsTerm) -> Result<bool> {
        Ok(self.leq(s, t)? && self.leq(t, s)?)
    }

    /// Tags the atoms of a component term, checking they belong to the component.
    pub fn inject(&self, index: &str, s: &ObsTerm) -> Result<ObsTerm> {
        let (key, g) = self
            .graph
            .components()
            .find(|(i, _)| &***i == index)
            .ok_or_else(|| Error::UnknownAtom(format!("component `{index}`")))?;
        for a in s.atoms() {
            g.check_atom(&a)?;
        }
        Ok(inject(key, s))
    }
}

fn as_product(graph: &CoherenceGraph) -> Result<&ProductGraph> {
    match graph {
        CoherenceGraph::Product(p) => Ok(p),
        other => {
            Err(Error::Unsupported(format!("the product engine needs a product graph, got a {} graph", other.kind())))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse_term;

    fn bb() -> CoherenceGraph {
        CoherenceGraph::from_json(
            r#"{"kind":"product","components":{
                "1":{"kind":"finite","atoms":["0","1"]},
                "2":{"kind":"finite","atoms":["0","1"]}}}"#,
        )
        .unwrap()
    }

    fn o(s: &str) -> ObsTerm {
        parse_term(s).unwrap()
    }

    fn v(entries: &[(&str, &str)]) -> TermVector {
        entries.iter().map(|(i, s)| (Arc::from(*i), o(s))).collect()
    }

    #[test]
    fn inject_examples() {
        let g = bb();
        let e = ProductEngine::new(&g).unwrap();
        assert_eq!(e.inject("1", &o("0 & 1")).unwrap(), o("0@1 & 1@1"));
        assert_eq!(e.inject("2", &o("top")).unwrap(), o("top"));
        assert_eq!(e.inject("1", &o("0 -> bot")).unwrap(), o("0@1 -> bot"));
        assert!(e.inject("1", &o("7")).is_err());
    }

    #[test]
    fn vector_operations() {
        assert_eq!(vec_impl(&v(&[("1", "a")]), &v(&[("2", "b")])), v(&[("1", "a -> bot"), ("2", "b")]));
        assert_eq!(vec_and(&v(&[("1", "a")]), &v(&[("1", "b")])), v(&[("1", "a & b")]));
        assert_eq!(vec_or(&v(&[("1", "a")]), &TermVector::zero()), v(&[("1", "a")]));
        assert_eq!(prod_term(&TermVector::zero()), ObsTerm::Top);
        assert_eq!(coprod_term(&v(&[("1", "a"), ("2", "b")])), o("a@1 | b@2"));
        assert_eq!(prod_term(&v(&[("1", "a -> bot")])), o("a@1 -> bot"));
    }

    #[test]
    fn conversions() {
        assert_eq!(c2d(&Representative::empty()), Representative::unit());
        let one: Representative = [v(&[("1", "s"), ("2", "t")])].into_iter().collect();
        let split: Representative = [v(&[("1", "s")]), v(&[("2", "t")])].into_iter().collect();
        assert_eq!(c2d(&one), split);
        let single: Representative = [v(&[("1", "a")])].into_iter().collect();
        assert_eq!(d2c(&single), single);
    }

    #[test]
    fn tau_vee_examples() {
        let g = bb();
        let e = ProductEngine::new(&g).unwrap();
        assert_eq!(e.tau_vee(&o("0@1")).unwrap().to_string(), "{[1: 0]}");
        assert!(e.tau_vee(&o("bot")).unwrap().is_empty());
        assert_eq!(e.tau_vee(&o("0@1 | 1@2")).unwrap().to_string(), "{[1: 0], [2: 1]}");
        assert!(matches!(e.tau_vee(&o("0@3")), Err(Error::ForeignAtom(_))));
        assert!(matches!(e.tau_vee(&o("0")), Err(Error::ForeignAtom(_))));
    }

    #[test]
    fn leq_examples() {
        let g = bb();
        let e = ProductEngine::new(&g).unwrap();
        assert!(e.leq(&o("0@1 & (0@1 -> 0@2)"), &o("0@2")).unwrap());
        assert!(!e.leq(&o("top"), &o("0@1 | 1@1")).unwrap());
        assert!(e.leq(&o("0@1"), &o("0@1 | 1@2")).unwrap());
        assert!(e.equiv(&o("0@1 -> bot"), &o("1@1")).unwrap());
        // ¬0@1 is 1@1 on a two-atom boolean component.
        assert!(e.equiv(&o("0@1 -> 0@2"), &o("1@1 | 0@2")).unwrap());
    }

    #[test]
    fn mixed_components() {
        let g = CoherenceGraph::from_json(
            r#"{"kind":"product","components":{
                "b":{"kind":"finite","atoms":["t","f"]},
                "w":{"kind":"anticlique","prefix":"n"}}}"#,
        )
        .unwrap();
        let e = ProductEngine::new(&g).unwrap();
        assert!(e.leq(&o("n1@w -> bot"), &o("n2@w | (n2@w -> bot)")).unwrap());
        assert!(!e.leq(&o("top"), &o("n1@w | (n1@w -> bot)")).unwrap());
        assert!(e.leq(&o("t@b & (t@b -> n3@w)"), &o("n3@w")).unwrap());
        assert!(!e.leq(&o("t@b -> n3@w"), &o("n3@w")).unwrap());
        assert!(e.equiv(&o("(t@b | f@b) -> n1@w"), &o("(t@b -> n1@w) & (f@b -> n1@w)")).unwrap());
    }

    #[test]
    fn engines_must_cover_components() {
        let g = bb();
        let err = ProductEngine::with_engines(&g, BTreeMap::new()).err().unwrap();
        assert_eq!(err, Error::MissingEngine("1".into()));
    }

    #[test]
    fn vector_budget() {
        let g = bb();
        let e = ProductEngine::new(&g).unwrap().with_max_vectors(1);
        let err = e.leq(&o("(0@1 | 0@2) & (1@1 | 1@2)"), &o("bot")).unwrap_err();
        assert!(err.is_budget(), "{err}");
    }
}
