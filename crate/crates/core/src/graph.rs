//! Coherence graphs: finite explicit graphs, the infinite anticlique, and
//! finite products of base graphs.
//!
//! A graph is immutable once built. Coherence is always reflexive and
//! symmetric; for finite graphs the symmetric closure of the input pairs is
//! taken on load.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::Deserialize;

use crate::error::{Error, Result};

/// Identifier drawn from `[A-Za-z0-9_]+`, excluding the keywords `top` and `bot`.
pub(crate) fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_') && s != "top" && s != "bot"
}

fn identifier(s: &str) -> Result<Arc<str>> {
    if is_identifier(s) {
        Ok(Arc::from(s))
    } else {
        Err(Error::InvalidIdentifier(s.to_owned()))
    }
}

/// An atomic observation.
///
/// Base graphs use plain identifiers. Atoms of a product graph carry the
/// index of the component they come from and render as `a@i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    name: Arc<str>,
    component: Option<Arc<str>>,
}

impl Atom {
    pub fn new(name: &str) -> Result<Atom> {
        Ok(Atom { name: identifier(name)?, component: None })
    }

    /// The product atom `name@component`.
    pub fn tagged(name: &str, component: &str) -> Result<Atom> {
        Ok(Atom { name: identifier(name)?, component: Some(identifier(component)?) })
    }

    pub(crate) fn from_parts(name: Arc<str>, component: Option<Arc<str>>) -> Atom {
        Atom { name, component }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn component(&self) -> Option<&str> {
        self.component.as_deref()
    }

    pub(crate) fn component_arc(&self) -> Option<&Arc<str>> {
        self.component.as_ref()
    }

    /// The same atom moved into component `index`.
    pub fn lift(&self, index: &Arc<str>) -> Atom {
        Atom { name: self.name.clone(), component: Some(index.clone()) }
    }

    /// The component-local atom, with the index stripped.
    pub fn base(&self) -> Atom {
        Atom { name: self.name.clone(), component: None }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.component {
            None => f.write_str(&self.name),
            Some(i) => write!(f, "{}@{}", self.name, i),
        }
    }
}

/// Accepts `name` and `name@index`.
impl std::str::FromStr for Atom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Atom> {
        match s.split_once('@') {
            Some((name, index)) => Atom::tagged(name, index),
            None => Atom::new(s),
        }
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Finite,
    Anticlique,
    Product,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::Finite => "finite",
            GraphKind::Anticlique => "anticlique",
            GraphKind::Product => "product",
        })
    }
}

/// A finite graph given by its atoms and an explicit coherence matrix.
#[derive(Clone, Debug)]
pub struct FiniteGraph {
    atoms: Vec<Atom>,
    index: HashMap<Atom, usize>,
    coh: Vec<Vec<bool>>,
}

impl FiniteGraph {
    /// Builds a graph; pairs are symmetrised and reflexive pairs are implicit.
    pub fn new<S: AsRef<str>>(atoms: &[S], pairs: &[(S, S)]) -> Result<FiniteGraph> {
        let mut list = Vec::with_capacity(atoms.len());
        for a in atoms {
            list.push(Atom::new(a.as_ref())?);
        }
        let mut graph = FiniteGraph::from_atoms(list)?;
        for (a, b) in pairs {
            let i = graph.lookup(a.as_ref())?;
            let j = graph.lookup(b.as_ref())?;
            graph.coh[i][j] = true;
            graph.coh[j][i] = true;
        }
        Ok(graph)
    }

    /// Identity coherence (an anticlique) on the given atoms.
    pub fn discrete(atoms: Vec<Atom>) -> Result<FiniteGraph> {
        FiniteGraph::from_atoms(atoms)
    }

    /// Builds a graph from atoms and a coherence predicate, which is
    /// queried on unordered pairs of distinct atoms only.
    pub fn from_fn(atoms: Vec<Atom>, mut coherent: impl FnMut(&Atom, &Atom) -> bool) -> Result<FiniteGraph> {
        let mut graph = FiniteGraph::from_atoms(atoms)?;
        let n = graph.atoms.len();
        for i in 0..n {
            for j in i + 1..n {
                if coherent(&graph.atoms[i], &graph.atoms[j]) {
                    graph.coh[i][j] = true;
                    graph.coh[j][i] = true;
                }
            }
        }
        Ok(graph)
    }

    fn from_atoms(atoms: Vec<Atom>) -> Result<FiniteGraph> {
        let mut index = HashMap::with_capacity(atoms.len());
        for (i, a) in atoms.iter().enumerate() {
            if index.insert(a.clone(), i).is_some() {
                return Err(Error::DuplicateAtom(a.to_string()));
            }
        }
        let n = atoms.len();
        let mut coh = vec![vec![false; n]; n];
        for (i, row) in coh.iter_mut().enumerate() {
            row[i] = true;
        }
        Ok(FiniteGraph { atoms, index, coh })
    }

    fn lookup(&self, name: &str) -> Result<usize> {
        Atom::new(name)
            .ok()
            .and_then(|a| self.index.get(&a).copied())
            .ok_or_else(|| Error::UnknownAtom(name.to_owned()))
    }

    /// Atoms in declaration order.
    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn contains(&self, a: &Atom) -> bool {
        self.index.contains_key(a)
    }

    fn position(&self, a: &Atom) -> Result<usize> {
        self.index.get(a).copied().ok_or_else(|| Error::ForeignAtom(a.clone()))
    }

    pub fn coherent(&self, a: &Atom, b: &Atom) -> Result<bool> {
        Ok(self.coh[self.position(a)?][self.position(b)?])
    }

    pub fn anti_neighbourhood(&self, a: &Atom) -> Result<Vec<Atom>> {
        let row = &self.coh[self.position(a)?];
        let mut out: Vec<Atom> = self.atoms.iter().zip(row).filter(|(_, &c)| !c).map(|(b, _)| b.clone()).collect();
        out.sort();
        Ok(out)
    }
}

/// The infinite anticlique: atoms `p0, p1, ...` for a fixed prefix `p`,
/// coherent only with themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnticliqueGraph {
    prefix: Arc<str>,
}

impl AnticliqueGraph {
    pub fn new(prefix: &str) -> Result<AnticliqueGraph> {
        if !prefix.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_') {
            return Err(Error::InvalidIdentifier(prefix.to_owned()));
        }
        Ok(AnticliqueGraph { prefix: Arc::from(prefix) })
    }

    pub fn prefix(&self) -> &str {
        &self.prefix
    }

    /// Membership: the prefix followed by a natural number written without
    /// leading zeros.
    pub fn contains(&self, a: &Atom) -> bool {
        if a.component().is_some() {
            return false;
        }
        match a.name().strip_prefix(&*self.prefix) {
            Some(digits) => {
                !digits.is_empty()
                    && digits.bytes().all(|b| b.is_ascii_digit())
                    && (digits == "0" || !digits.starts_with('0'))
            }
            None => false,
        }
    }

    /// The atom with index `k`.
    pub fn atom(&self, k: u64) -> Atom {
        Atom::from_parts(Arc::from(format!("{}{}", self.prefix, k)), None)
    }

    /// The first `count` atoms of the universe (in index order) that are not in `used`.
    pub fn fresh_atoms<'a>(&self, used: impl IntoIterator<Item = &'a Atom> + Clone, count: usize) -> Vec<Atom> {
        let mut out = Vec::with_capacity(count);
        let mut k = 0;
        while out.len() < count {
            let candidate = self.atom(k);
            if !used.clone().into_iter().any(|u| *u == candidate) {
                out.push(candidate);
            }
            k += 1;
        }
        out
    }
}

/// A finite product of base graphs, keyed by component index.
#[derive(Clone, Debug)]
pub struct ProductGraph {
    components: BTreeMap<Arc<str>, CoherenceGraph>,
}

impl ProductGraph {
    pub fn new<S: AsRef<str>>(components: impl IntoIterator<Item = (S, CoherenceGraph)>) -> Result<ProductGraph> {
        let mut map = BTreeMap::new();
        for (index, graph) in components {
            let index = index.as_ref();
            let key = identifier(index)?;
            if matches!(graph, CoherenceGraph::Product(_)) {
                return Err(Error::NestedProduct(index.to_owned()));
            }
            if map.insert(key, graph).is_some() {
                return Err(Error::DuplicateComponent(index.to_owned()));
            }
        }
        Ok(ProductGraph { components: map })
    }

    /// Components in index order.
    pub fn components(&self) -> impl Iterator<Item = (&Arc<str>, &CoherenceGraph)> {
        self.components.iter()
    }

    pub fn component(&self, index: &str) -> Option<&CoherenceGraph> {
        self.components.get(index)
    }

    pub fn contains(&self, a: &Atom) -> bool {
        match a.component() {
            Some(i) => self.components.get(i).is_some_and(|g| g.contains(&a.base())),
            None => false,
        }
    }

    fn split<'a>(&'a self, a: &Atom) -> Result<(&'a CoherenceGraph, Atom)> {
        let base = a.base();
        a.component()
            .and_then(|i| self.components.get(i))
            .filter(|g| g.contains(&base))
            .map(|g| (g, base))
            .ok_or_else(|| Error::ForeignAtom(a.clone()))
    }

    pub fn coherent(&self, a: &Atom, b: &Atom) -> Result<bool> {
        let (ga, a0) = self.split(a)?;
        let (_, b0) = self.split(b)?;
        if a.component() != b.component() {
            return Ok(true);
        }
        ga.coherent(&a0, &b0)
    }
}

/// A coherence graph of one of the three supported kinds.
#[derive(Clone, Debug)]
pub enum CoherenceGraph {
    Finite(FiniteGraph),
    Anticlique(AnticliqueGraph),
    Product(ProductGraph),
}

impl CoherenceGraph {
    pub fn kind(&self) -> GraphKind {
        match self {
            CoherenceGraph::Finite(_) => GraphKind::Finite,
            CoherenceGraph::Anticlique(_) => GraphKind::Anticlique,
            CoherenceGraph::Product(_) => GraphKind::Product,
        }
    }

    pub fn contains(&self, a: &Atom) -> bool {
        match self {
            CoherenceGraph::Finite(g) => g.contains(a),
            CoherenceGraph::Anticlique(g) => g.contains(a),
            CoherenceGraph::Product(g) => g.contains(a),
        }
    }

    pub fn check_atom(&self, a: &Atom) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::ForeignAtom(a.clone()))
        }
    }

    pub fn coherent(&self, a: &Atom, b: &Atom) -> Result<bool> {
        match self {
            CoherenceGraph::Finite(g) => g.coherent(a, b),
            CoherenceGraph::Anticlique(_) => {
                self.check_atom(a)?;
                self.check_atom(b)?;
                Ok(a == b)
            }
            CoherenceGraph::Product(g) => g.coherent(a, b),
        }
    }

    /// Finite anti-neighbourhood property: finite graphs, and products
    /// whose components all have it.
    pub fn has_fan(&self) -> bool {
        match self {
            CoherenceGraph::Finite(_) => true,
            CoherenceGraph::Anticlique(_) => false,
            CoherenceGraph::Product(p) => p.components().all(|(_, g)| g.has_fan()),
        }
    }

    /// All atoms incoherent with `a`, sorted. Only defined on FAN graphs.
    pub fn anti_neighbourhood(&self, a: &Atom) -> Result<Vec<Atom>> {
        if !self.has_fan() {
            return Err(Error::Unsupported(format!(
                "anti-neighbourhood of `{a}`: {} graph does not have finite anti-neighbourhoods",
                self.kind()
            )));
        }
        match self {
            CoherenceGraph::Finite(g) => g.anti_neighbourhood(a),
            CoherenceGraph::Product(p) => {
                let (g, base) = p.split(a)?;
                let index = a.component_arc().expect("product atom");
                let mut out: Vec<Atom> = g.anti_neighbourhood(&base)?.iter().map(|b| b.lift(index)).collect();
                out.sort();
                Ok(out)
            }
            CoherenceGraph::Anticlique(_) => unreachable!(),
        }
    }

    /// Every atom, when the atom set is finite; product atoms are flattened
    /// in component order.
    pub fn atoms(&self) -> Option<Vec<Atom>> {
        match self {
            CoherenceGraph::Finite(g) => Some(g.atoms().to_vec()),
            CoherenceGraph::Anticlique(_) => None,
            CoherenceGraph::Product(p) => {
                let mut out = Vec::new();
                for (index, g) in p.components() {
                    out.extend(g.atoms()?.iter().map(|a| a.lift(index)));
                }
                Some(out)
            }
        }
    }

    /// Parses a graph-definition JSON document.
    pub fn from_json(text: &str) -> Result<CoherenceGraph> {
        let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::GraphFormat(e.to_string()))?;
        doc.build()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<CoherenceGraph> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::GraphFormat(format!("{}: {e}", path.display())))?;
        CoherenceGraph::from_json(&text)
    }
}

impl From<FiniteGraph> for CoherenceGraph {
    fn from(g: FiniteGraph) -> Self {
        CoherenceGraph::Finite(g)
    }
}

impl From<AnticliqueGraph> for CoherenceGraph {
    fn from(g: AnticliqueGraph) -> Self {
        CoherenceGraph::Anticlique(g)
    }
}

impl From<ProductGraph> for CoherenceGraph {
    fn from(g: ProductGraph) -> Self {
        CoherenceGraph::Product(g)
    }
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum GraphDoc {
    Finite {
        atoms: Vec<String>,
        #[serde(default)]
        coh: Vec<(String, String)>,
    },
    Anticlique {
        prefix: String,
    },
    Product {
        components: Components,
    },
}

impl GraphDoc {
    fn build(self) -> Result<CoherenceGraph> {
        match self {
            GraphDoc::Finite { atoms, coh } => FiniteGraph::new(&atoms, &coh).map(Into::into),
            GraphDoc::Anticlique { prefix } => AnticliqueGraph::new(&prefix).map(Into::into),
            GraphDoc::Product { components } => {
                let mut built = Vec::with_capacity(components.0.len());
                for (index, doc) in components.0 {
                    if matches!(doc, GraphDoc::Product { .. }) {
                        return Err(Error::NestedProduct(index));
                    }
                    built.push((index, doc.build()?));
                }
                ProductGraph::new(built).map(Into::into)
            }
        }
    }
}

/// Component map that keeps duplicate keys visible, so they can be rejected.
struct Components(Vec<(String, GraphDoc)>);

impl<'de> Deserialize<'de> for Components {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ComponentsVisitor;

        impl<'de> Visitor<'de> for ComponentsVisitor {
            type Value = Components;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from component index to graph")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Components, A::Error> {
                let mut entries: Vec<(String, GraphDoc)> = Vec::new();
                while let Some((key, value)) = map.next_entry::<String, GraphDoc>()? {
                    if entries.iter().any(|(k, _)| *k == key) {
                        return Err(de::Error::custom(format!("duplicate component index `{key}`")));
                    }
                    entries.push((key, value));
                }
                Ok(Components(entries))
            }
        }

        deserializer.deserialize_map(ComponentsVisitor)
    }
}
