//! Reference semantics by brute force.
//!
//! Over a finite graph every observation is a finite set of cliques, so
//! terms can be evaluated by enumerating the cliques and applying the
//! semantic clauses literally, with implication computed point by point.
//! This module is the only place where observations are materialised; it
//! shares no code with the decision procedures it is used to check.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::clique::{is_clique, AtomSet, Clique};
use crate::error::{Error, Result};
use crate::graph::{AnticliqueGraph, Atom, CoherenceGraph, FiniteGraph};
use crate::term::{LatTerm, ObsTerm};

/// Default bound on the number of atoms the oracle accepts.
pub const DEFAULT_MAX_ATOMS: usize = 16;

const NOT_A_CLIQUE: u32 = u32::MAX;

struct Universe {
    atoms: Vec<Atom>,
    /// Bit `k` set iff `atoms[k]` is coherent with atom `i` (including `k = i`).
    coherence: Vec<u32>,
    /// All cliques, ordered by size then lexicographically.
    cliques: Vec<Clique>,
    masks: Vec<u32>,
    /// Clique index by atom mask, or `NOT_A_CLIQUE`.
    index_of: Vec<u32>,
}

/// An explicit set of cliques of a fixed finite graph.
#[derive(Clone)]
pub struct SemSet {
    universe: Arc<Universe>,
    bits: Vec<u64>,
}

impl SemSet {
    fn new(universe: Arc<Universe>) -> SemSet {
        let words = universe.cliques.len().div_ceil(64);
        SemSet { universe, bits: vec![0; words] }
    }

    fn full(universe: Arc<Universe>) -> SemSet {
        let mut s = SemSet::new(universe);
        for k in 0..s.universe.cliques.len() {
            s.insert(k);
        }
        s
    }

    fn insert(&mut self, k: usize) {
        self.bits[k / 64] |= 1 << (k % 64);
    }

    fn has(&self, k: usize) -> bool {
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe.cliques.len()).filter(|&k| self.has(k))
    }

    fn zip(&self, other: &SemSet, op: impl Fn(u64, u64) -> u64) -> SemSet {
        assert!(Arc::ptr_eq(&self.universe, &other.universe), "sets over different graphs");
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| op(*a, *b)).collect();
        SemSet { universe: self.universe.clone(), bits }
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|w| *w == 0)
    }

    pub fn contains(&self, c: &Clique) -> bool {
        let mut mask = 0u32;
        for a in c.atoms() {
            match self.universe.atoms.iter().position(|b| b == a) {
                Some(k) => mask |= 1 << k,
                None => return false,
            }
        }
        match self.universe.index_of[mask as usize] {
            NOT_A_CLIQUE => false,
            k => self.has(k as usize),
        }
    }

    /// Members in size-then-lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &Clique> + '_ {
        self.indices().map(|k| &self.universe.cliques[k])
    }

    pub fn cliques(&self) -> Vec<Clique> {
        self.iter().cloned().collect()
    }

    pub fn is_subset(&self, other: &SemSet) -> bool {
        assert!(Arc::ptr_eq(&self.universe, &other.universe), "sets over different graphs");
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &SemSet) -> SemSet {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &SemSet) -> SemSet {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &SemSet) -> SemSet {
        self.zip(other, |a, b| a & !b)
    }

    /// Every clique containing a member is a member.
    pub fn is_downclosed(&self) -> bool {
        let u = &self.universe;
        self.indices().all(|k| (0..u.cliques.len()).all(|j| u.masks[k] & !u.masks[j] != 0 || self.has(j)))
    }
}

impl PartialEq for SemSet {
    fn eq(&self, other: &SemSet) -> bool {
        Arc::ptr_eq(&self.universe, &other.universe) && self.bits == other.bits
    }
}

impl Eq for SemSet {}

impl fmt::Display for SemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, c) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Brute-force evaluator for one finite graph.
#[derive(Clone)]
pub struct Oracle {
    universe: Arc<Universe>,
    position: HashMap<Atom, usize>,
}

impl Oracle {
    pub fn new(g: &CoherenceGraph) -> Result<Oracle> {
        Oracle::with_max_atoms(g, DEFAULT_MAX_ATOMS)
    }

    /// Accepts finite graphs and products of finite graphs with at most
    /// `limit` atoms in total (never more than 31).
    pub fn with_max_atoms(g: &CoherenceGraph, limit: usize) -> Result<Oracle> {
        let limit = limit.min(31);
        let atoms = match g {
            CoherenceGraph::Anticlique(_) => None,
            _ => g.atoms(),
        }
        .ok_or_else(|| {
            Error::Unsupported(format!("the oracle needs a finite graph, got an infinite {} graph", g.kind()))
        })?;
        if atoms.len() > limit {
            return Err(Error::GraphTooLarge { atoms: atoms.len(), limit });
        }
        let n = atoms.len();
        let mut coherence = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                if i == j || g.coherent(&atoms[i], &atoms[j])? {
                    coherence[i] |= 1 << j;
                }
            }
        }
        let mut found: Vec<(Clique, u32)> = Vec::new();
        for mask in 0u32..(1 << n) {
            let pairwise = (0..n).filter(|i| mask >> i & 1 == 1).all(|i| mask & !coherence[i] == 0);
            if pairwise {
                let members: AtomSet = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| atoms[i].clone()).collect();
                found.push((Clique::trusted(members), mask));
            }
        }
        found.sort_by(|(x, _), (y, _)| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
        let mut index_of = vec![NOT_A_CLIQUE; 1 << n];
        for (k, (_, mask)) in found.iter().enumerate() {
            index_of[*mask as usize] = k as u32;
        }
        let position = atoms.iter().enumerate().map(|(k, a)| (a.clone(), k)).collect();
        let (cliques, masks) = found.into_iter().unzip();
        let universe = Universe { atoms, coherence, cliques, masks, index_of };
        Ok(Oracle { universe: Arc::new(universe), position })
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.universe.atoms
    }

    /// Every clique of the graph, `∅` included.
    pub fn all(&self) -> SemSet {
        SemSet::full(self.universe.clone())
    }

    pub fn empty(&self) -> SemSet {
        SemSet::new(self.universe.clone())
    }

    fn mask_of(&self, atoms: &AtomSet) -> Result<u32> {
        let mut mask = 0;
        for a in atoms {
            let k = self.position.get(a).ok_or_else(|| Error::ForeignAtom(a.clone()))?;
            mask |= 1 << k;
        }
        Ok(mask)
    }

    /// The set holding exactly the given cliques.
    pub fn set_of<'a>(&self, cliques: impl IntoIterator<Item = &'a Clique>) -> Result<SemSet> {
        let mut out = self.empty();
        for c in cliques {
            match self.universe.index_of[self.mask_of(c.atoms())? as usize] {
                NOT_A_CLIQUE => {
                    return Err(Error::Unsupported(format!("{c} is not a clique of the oracle's graph")));
                }
                k => out.insert(k as usize),
            }
        }
        Ok(out)
    }

    /// `x↓`: every clique containing a member of `x`.
    pub fn down_close(&self, x: &SemSet) -> SemSet {
        let u = &self.universe;
        let gens: Vec<u32> = x.indices().map(|k| u.masks[k]).collect();
        let mut out = self.empty();
        for (k, m) in u.masks.iter().enumerate() {
            if gens.iter().any(|g| g & !m == 0) {
                out.insert(k);
            }
        }
        out
    }

    /// `x → y`: the cliques `α` such that for every `β ∈ x`, if `α ∪ β` is a
    /// clique then it lies in `y`.
    pub fn implies(&self, x: &SemSet, y: &SemSet) -> SemSet {
        let u = &self.universe;
        let xs: Vec<u32> = x.indices().map(|k| u.masks[k]).collect();
        let mut out = self.empty();
        for (k, m) in u.masks.iter().enumerate() {
            let ok = xs.iter().all(|b| match u.index_of[(m | b) as usize] {
                NOT_A_CLIQUE => true,
                j => y.has(j as usize),
            });
            if ok {
                out.insert(k);
            }
        }
        out
    }

    fn atom_set(&self, a: &Atom) -> Result<SemSet> {
        let bit = 1u32 << self.position.get(a).ok_or_else(|| Error::ForeignAtom(a.clone()))?;
        let mut out = self.empty();
        for (k, m) in self.universe.masks.iter().enumerate() {
            if m & bit != 0 {
                out.insert(k);
            }
        }
        Ok(out)
    }

    /// `⟦s⟧`.
    pub fn eval(&self, s: &ObsTerm) -> Result<SemSet> {
        Ok(match s {
            ObsTerm::Atom(a) => self.atom_set(a)?,
            ObsTerm::Top => self.all(),
            ObsTerm::Bot => self.empty(),
            ObsTerm::And(l, r) => self.eval(l)?.intersection(&self.eval(r)?),
            ObsTerm::Or(l, r) => self.eval(l)?.union(&self.eval(r)?),
            ObsTerm::Impl(l, r) => self.implies(&self.eval(l)?, &self.eval(r)?),
        })
    }

    pub fn eval_lat(&self, s: &LatTerm) -> Result<SemSet> {
        self.eval(&s.to_obs())
    }

    pub fn leq(&self, s: &ObsTerm, t: &ObsTerm) -> Result<bool> {
        Ok(self.eval(s)?.is_subset(&self.eval(t)?))
    }

    /// A clique in `⟦s⟧ ∖ ⟦t⟧` of maximum size, the first such in clique
    /// order; `None` when `s ≤ t`.
    pub fn witness(&self, s: &ObsTerm, t: &ObsTerm) -> Result<Option<Clique>> {
        let bad = self.eval(s)?.difference(&self.eval(t)?);
        let best = bad.iter().map(|c| c.len()).max();
        Ok(best.and_then(|n| bad.iter().find(|c| c.len() == n).cloned()))
    }

    /// Pairwise coherence, read from the enumerated structure.
    pub fn coherent(&self, a: &Atom, b: &Atom) -> Result<bool> {
        let i = *self.position.get(a).ok_or_else(|| Error::ForeignAtom(a.clone()))?;
        let j = *self.position.get(b).ok_or_else(|| Error::ForeignAtom(b.clone()))?;
        Ok(self.universe.coherence[i] >> j & 1 == 1)
    }
}

/// All cliques of a finite graph.
pub fn enum_cliques(g: &CoherenceGraph) -> Result<SemSet> {
    Ok(Oracle::new(g)?.all())
}

/// `{α ∈ Coh | ∃β ∈ x. β ⊆ α}`.
pub fn down_close(g: &CoherenceGraph, x: &[Clique]) -> Result<SemSet> {
    let o = Oracle::new(g)?;
    Ok(o.down_close(&o.set_of(x)?))
}

pub fn eval_term(g: &CoherenceGraph, s: &ObsTerm) -> Result<SemSet> {
    Oracle::new(g)?.eval(s)
}

pub fn oracle_leq(g: &CoherenceGraph, s: &ObsTerm, t: &ObsTerm) -> Result<bool> {
    Oracle::new(g)?.leq(s, t)
}

/// The finite graph standing in for the anticlique when comparing `s` and
/// `t`: their atoms plus the two lowest-indexed unused atoms, pairwise
/// incoherent.
pub fn ac_oracle_graph(omega: &AnticliqueGraph, s: &ObsTerm, t: &ObsTerm) -> Result<CoherenceGraph> {
    let mut atoms: BTreeSet<Atom> = s.atoms();
    atoms.extend(t.atoms());
    if let Some(a) = atoms.iter().find(|a| !omega.contains(a)) {
        return Err(Error::ForeignAtom(a.clone()));
    }
    let fresh = omega.fresh_atoms(&atoms, 2);
    atoms.extend(fresh);
    Ok(FiniteGraph::discrete(atoms.into_iter().collect())?.into())
}

/// Containment over the anticlique, decided on [`ac_oracle_graph`].
pub fn ac_oracle_leq(omega: &AnticliqueGraph, s: &ObsTerm, t: &ObsTerm) -> Result<bool> {
    oracle_leq(&ac_oracle_graph(omega, s, t)?, s, t)
}

/// Implication over finite cliques computed on explicit clique sets:
/// `{α ∈ Coh_f | ∀β ∈ x. α ∪ β ∈ Coh_f ⟹ α ∪ β ∈ y}`.
pub fn implies_finitary(g: &CoherenceGraph, x: &BTreeSet<Clique>, y: &BTreeSet<Clique>) -> Result<BTreeSet<Clique>> {
    let atoms = g
        .atoms()
        .filter(|_| !matches!(g, CoherenceGraph::Anticlique(_)))
        .ok_or_else(|| Error::Unsupported("finitary implication needs a finite graph".into()))?;
    if atoms.len() > DEFAULT_MAX_ATOMS {
        return Err(Error::GraphTooLarge { atoms: atoms.len(), limit: DEFAULT_MAX_ATOMS });
    }
    let mut all = BTreeSet::new();
    for mask in 0u32..(1 << atoms.len()) {
        let set: AtomSet = (0..atoms.len()).filter(|i| mask >> i & 1 == 1).map(|i| atoms[i].clone()).collect();
        if is_clique(g, &set)? {
            all.insert(set);
        }
    }
    let y: BTreeSet<&AtomSet> = y.iter().map(|c| c.atoms()).collect();
    let mut out = BTreeSet::new();
    for alpha in &all {
        let ok = x.iter().all(|beta| {
            let joined = alpha.union(beta.atoms());
            !all.contains(&joined) || y.contains(&joined)
        });
        if ok {
            out.insert(Clique::trusted(alpha.clone()));
        }
    }
    Ok(out)
}
