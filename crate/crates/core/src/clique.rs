//! Finite atom sets, cliques, and finitely generated observations.
//!
//! An observation is never materialised here. It is carried by a
//! [`CliqueFamily`], the antichain of its ⊆-minimal generators; the
//! observation itself is the set of cliques containing some generator.

use std::fmt;

use crate::error::Result;
use crate::graph::{Atom, CoherenceGraph};

/// A finite set of atoms, kept sorted and without duplicates.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomSet(Vec<Atom>);

impl AtomSet {
    pub fn empty() -> AtomSet {
        AtomSet(Vec::new())
    }

    pub fn singleton(a: Atom) -> AtomSet {
        AtomSet(vec![a])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Atom> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Atom] {
        &self.0
    }

    pub fn contains(&self, a: &Atom) -> bool {
        self.0.binary_search(a).is_ok()
    }

    /// `self ⊆ other`, by a linear merge.
    pub fn is_subset(&self, other: &AtomSet) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut rest = other.0.iter();
        'outer: for a in &self.0 {
            for b in rest.by_ref() {
                match b.cmp(a) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &AtomSet) -> AtomSet {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        AtomSet(out)
    }

    /// Atoms of `self` that are not in `other`.
    pub fn difference(&self, other: &AtomSet) -> AtomSet {
        AtomSet(self.0.iter().filter(|a| !other.contains(a)).cloned().collect())
    }
}

impl FromIterator<Atom> for AtomSet {
    fn from_iter<I: IntoIterator<Item = Atom>>(iter: I) -> Self {
        let mut v: Vec<Atom> = iter.into_iter().collect();
        v.sort();
        v.dedup();
        AtomSet(v)
    }
}

impl<'a> IntoIterator for &'a AtomSet {
    type Item = &'a Atom;
    type IntoIter = std::slice::Iter<'a, Atom>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl AsRef<AtomSet> for AtomSet {
    fn as_ref(&self) -> &AtomSet {
        self
    }
}

fn write_atoms(f: &mut fmt::Formatter<'_>, atoms: &[Atom], sep: &str) -> fmt::Result {
    f.write_str("{")?;
    for (k, a) in atoms.iter().enumerate() {
        if k > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{a}")?;
    }
    f.write_str("}")
}

impl fmt::Display for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_atoms(f, &self.0, ",")
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// True iff the atoms of `s` are pairwise coherent in `g`.
pub fn is_clique(g: &CoherenceGraph, s: &AtomSet) -> Result<bool> {
    for a in s {
        g.check_atom(a)?;
    }
    let atoms = s.as_slice();
    for (k, a) in atoms.iter().enumerate() {
        for b in &atoms[k + 1..] {
            if !g.coherent(a, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff `x ∪ y` is a clique, given that `x` and `y` already are.
pub(crate) fn union_is_clique(g: &CoherenceGraph, x: &AtomSet, y: &AtomSet) -> Result<bool> {
    for a in x {
        if y.contains(a) {
            continue;
        }
        for b in y {
            if !x.contains(b) && !g.coherent(a, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A finite clique. Equality is structural on the sorted atom list.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clique(AtomSet);

impl Clique {
    pub fn new(g: &CoherenceGraph, atoms: impl IntoIterator<Item = Atom>) -> Result<Option<Clique>> {
        let set: AtomSet = atoms.into_iter().collect();
        Ok(is_clique(g, &set)?.then_some(Clique(set)))
    }

    pub fn empty() -> Clique {
        Clique(AtomSet::empty())
    }

    /// Wraps a set already known to be a clique.
    pub(crate) fn trusted(set: AtomSet) -> Clique {
        Clique(set)
    }

    pub fn atoms(&self) -> &AtomSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self ⊒ other`: every atom of `other` is in `self`.
    pub fn is_more_specific_than(&self, other: &Clique) -> bool {
        other.0.is_subset(&self.0)
    }
}

impl AsRef<AtomSet> for Clique {
    fn as_ref(&self) -> &AtomSet {
        &self.0
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// True iff `beta ⊆ alpha`, i.e. `alpha` refines `beta`.
pub fn more_specific(alpha: &Clique, beta: &Clique) -> bool {
    alpha.is_more_specific_than(beta)
}

/// Some member of `alpha` incoherent with `a`, if there is one. `None`
/// means `alpha ∪ {a}` is a clique.
pub fn find_incompatibility(g: &CoherenceGraph, alpha: &Clique, a: &Atom) -> Result<Option<Atom>> {
    g.check_atom(a)?;
    for b in alpha.atoms() {
        if !g.coherent(a, b)? {
            return Ok(Some(b.clone()));
        }
    }
    Ok(None)
}

/// An antichain of cliques under ⊆, sorted, standing for the downclosed
/// set it generates.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliqueFamily(Vec<Clique>);

impl CliqueFamily {
    pub fn empty() -> CliqueFamily {
        CliqueFamily(Vec::new())
    }

    pub fn members(&self) -> &[Clique] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Clique> {
        self.0.iter()
    }
}

impl<'a> IntoIterator for &'a CliqueFamily {
    type Item = &'a Clique;
    type IntoIter = std::slice::Iter<'a, Clique>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for CliqueFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for CliqueFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Drops every clique that strictly contains another one (and duplicates).
pub fn minimal_generators(f: impl IntoIterator<Item = Clique>) -> CliqueFamily {
    let mut all: Vec<Clique> = f.into_iter().collect();
    all.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    all.dedup();
    let mut kept: Vec<Clique> = Vec::with_capacity(all.len());
    for c in all {
        if !kept.iter().any(|k| k.0.is_subset(&c.0)) {
            kept.push(c);
        }
    }
    kept.sort();
    CliqueFamily(kept)
}

/// `X↓ ⊆ Y↓`: every generator of `x` refines some generator of `y`.
pub fn generator_leq(x: &CliqueFamily, y: &CliqueFamily) -> bool {
    x.iter().all(|alpha| y.iter().any(|beta| beta.0.is_subset(&alpha.0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g3() -> CoherenceGraph {
        CoherenceGraph::from_json(r#"{"kind":"finite","atoms":["a","b","c"],"coh":[["a","b"],["b","c"]]}"#).unwrap()
    }

    fn set(names: &[&str]) -> AtomSet {
        names.iter().map(|n| Atom::new(n).unwrap()).collect()
    }

    fn clique(names: &[&str]) -> Clique {
        Clique::trusted(set(names))
    }

    fn family(cs: &[&[&str]]) -> CliqueFamily {
        minimal_generators(cs.iter().map(|c| clique(c)))
    }

    #[test]
    fn is_clique_examples() {
        let g = g3();
        assert!(is_clique(&g, &set(&["a", "b"])).unwrap());
        assert!(!is_clique(&g, &set(&["a", "c"])).unwrap());
        assert!(is_clique(&g, &AtomSet::empty()).unwrap());
        assert!(is_clique(&g, &set(&["a", "z"])).is_err());
    }

    #[test]
    fn more_specific_examples() {
        assert!(more_specific(&clique(&["a", "b"]), &clique(&["a"])));
        assert!(!more_specific(&clique(&["a"]), &clique(&["a", "b"])));
        assert!(more_specific(&clique(&["a"]), &Clique::empty()));
        assert!(more_specific(&Clique::empty(), &Clique::empty()));
    }

    #[test]
    fn incompatibility_witness() {
        let g = g3();
        let a = Atom::new("a").unwrap();
        assert_eq!(find_incompatibility(&g, &clique(&["b", "c"]), &a).unwrap(), Some(Atom::new("c").unwrap()));
        assert_eq!(find_incompatibility(&g, &clique(&["b"]), &a).unwrap(), None);
        assert_eq!(find_incompatibility(&g, &Clique::empty(), &a).unwrap(), None);
        assert!(find_incompatibility(&g, &Clique::empty(), &Atom::new("q").unwrap()).is_err());
    }

    #[test]
    fn minimal_generators_examples() {
        assert_eq!(family(&[&["a"], &["a", "b"]]).members(), &[clique(&["a"])]);
        assert_eq!(family(&[&[], &["b"]]).members(), &[Clique::empty()]);
        assert!(minimal_generators(Vec::new()).is_empty());
    }

    #[test]
    fn generator_leq_examples() {
        assert!(generator_leq(&family(&[&["a", "b"]]), &family(&[&["a"]])));
        assert!(!generator_leq(&family(&[&["a"]]), &family(&[&["a", "b"]])));
        assert!(generator_leq(&CliqueFamily::empty(), &family(&[&["a"]])));
        assert!(generator_leq(&CliqueFamily::empty(), &CliqueFamily::empty()));
    }

    #[test]
    fn printing() {
        assert_eq!(clique(&["b", "a"]).to_string(), "{a,b}");
        assert_eq!(family(&[&["b", "c"], &["a"]]).to_string(), "{{a}, {b,c}}");
        assert_eq!(CliqueFamily::empty().to_string(), "{}");
    }

    #[test]
    fn atom_set_ops() {
        let x = set(&["a", "c"]);
        let y = set(&["b", "c", "d"]);
        assert_eq!(x.union(&y), set(&["a", "b", "c", "d"]));
        assert_eq!(y.difference(&x), set(&["b", "d"]));
        assert!(set(&["c"]).is_subset(&x));
        assert!(!x.is_subset(&y));
        assert!(AtomSet::empty().is_subset(&x));
    }

    #[test]
    fn union_clique_check() {
        let g = g3();
        assert!(union_is_clique(&g, &set(&["a"]), &set(&["b"])).unwrap());
        assert!(!union_is_clique(&g, &set(&["a", "b"]), &set(&["c"])).unwrap());
        assert!(union_is_clique(&g, &set(&["b", "c"]), &set(&["c"])).unwrap());
    }
}
