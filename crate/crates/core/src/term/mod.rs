//! Term syntax: lattice terms (`&`, `|`, `top`, `bot`, atoms) and
//! observation terms, which add implication `->`.

mod parse;
mod print;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Atom;

pub use parse::{parse_lat, parse_term};

/// Implication-free terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatTerm {
    Atom(Atom),
    And(Box<LatTerm>, Box<LatTerm>),
    Or(Box<LatTerm>, Box<LatTerm>),
    Top,
    Bot,
}

/// Terms of the full signature.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObsTerm {
    Atom(Atom),
    And(Box<ObsTerm>, Box<ObsTerm>),
    Or(Box<ObsTerm>, Box<ObsTerm>),
    Impl(Box<ObsTerm>, Box<ObsTerm>),
    Top,
    Bot,
}

impl LatTerm {
    pub fn atom(a: Atom) -> LatTerm {
        LatTerm::Atom(a)
    }

    pub fn and(l: LatTerm, r: LatTerm) -> LatTerm {
        LatTerm::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: LatTerm, r: LatTerm) -> LatTerm {
        LatTerm::Or(Box::new(l), Box::new(r))
    }

    /// Atoms occurring in the term.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            LatTerm::Atom(a) => {
                out.insert(a.clone());
            }
            LatTerm::And(l, r) | LatTerm::Or(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            LatTerm::Top | LatTerm::Bot => {}
        }
    }

    pub fn to_obs(&self) -> ObsTerm {
        ObsTerm::from(self.clone())
    }
}

impl ObsTerm {
    pub fn atom(a: Atom) -> ObsTerm {
        ObsTerm::Atom(a)
    }

    pub fn and(l: ObsTerm, r: ObsTerm) -> ObsTerm {
        ObsTerm::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: ObsTerm, r: ObsTerm) -> ObsTerm {
        ObsTerm::Or(Box::new(l), Box::new(r))
    }

    pub fn imp(l: ObsTerm, r: ObsTerm) -> ObsTerm {
        ObsTerm::Impl(Box::new(l), Box::new(r))
    }

    /// `s -> bot`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(s: ObsTerm) -> ObsTerm {
        ObsTerm::imp(s, ObsTerm::Bot)
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            ObsTerm::Atom(a) => {
                out.insert(a.clone());
            }
            ObsTerm::And(l, r) | ObsTerm::Or(l, r) | ObsTerm::Impl(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            ObsTerm::Top | ObsTerm::Bot => {}
        }
    }

    /// The same term as a lattice term, if it has no implication.
    pub fn to_lat(&self) -> Option<LatTerm> {
        Some(match self {
            ObsTerm::Atom(a) => LatTerm::Atom(a.clone()),
            ObsTerm::And(l, r) => LatTerm::and(l.to_lat()?, r.to_lat()?),
            ObsTerm::Or(l, r) => LatTerm::or(l.to_lat()?, r.to_lat()?),
            ObsTerm::Impl(..) => return None,
            ObsTerm::Top => LatTerm::Top,
            ObsTerm::Bot => LatTerm::Bot,
        })
    }

    pub fn has_implication(&self) -> bool {
        match self {
            ObsTerm::Impl(..) => true,
            ObsTerm::And(l, r) | ObsTerm::Or(l, r) => l.has_implication() || r.has_implication(),
            _ => false,
        }
    }

    /// Height of the syntax tree; atoms and constants have depth 1.
    pub fn depth(&self) -> usize {
        match self {
            ObsTerm::And(l, r) | ObsTerm::Or(l, r) | ObsTerm::Impl(l, r) => 1 + l.depth().max(r.depth()),
            _ => 1,
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            ObsTerm::And(l, r) | ObsTerm::Or(l, r) | ObsTerm::Impl(l, r) => 1 + l.size() + r.size(),
            _ => 1,
        }
    }

    /// Applies `f` to every atom.
    pub fn map_atoms(&self, f: &mut impl FnMut(&Atom) -> Atom) -> ObsTerm {
        match self {
            ObsTerm::Atom(a) => ObsTerm::Atom(f(a)),
            ObsTerm::And(l, r) => ObsTerm::and(l.map_atoms(f), r.map_atoms(f)),
            ObsTerm::Or(l, r) => ObsTerm::or(l.map_atoms(f), r.map_atoms(f)),
            ObsTerm::Impl(l, r) => ObsTerm::imp(l.map_atoms(f), r.map_atoms(f)),
            ObsTerm::Top => ObsTerm::Top,
            ObsTerm::Bot => ObsTerm::Bot,
        }
    }
}

impl From<LatTerm> for ObsTerm {
    fn from(t: LatTerm) -> ObsTerm {
        match t {
            LatTerm::Atom(a) => ObsTerm::Atom(a),
            LatTerm::And(l, r) => ObsTerm::and((*l).into(), (*r).into()),
            LatTerm::Or(l, r) => ObsTerm::or((*l).into(), (*r).into()),
            LatTerm::Top => ObsTerm::Top,
            LatTerm::Bot => ObsTerm::Bot,
        }
    }
}

impl From<Atom> for LatTerm {
    fn from(a: Atom) -> LatTerm {
        LatTerm::Atom(a)
    }
}

impl From<Atom> for ObsTerm {
    fn from(a: Atom) -> ObsTerm {
        ObsTerm::Atom(a)
    }
}

/// `⋁S`, folded left in the set's order; `bot` when empty.
pub fn big_or(s: &BTreeSet<LatTerm>) -> LatTerm {
    fold(s.iter().cloned(), LatTerm::Bot, LatTerm::or)
}

/// `⋀S`, folded left in the set's order; `top` when empty.
pub fn big_and(s: &BTreeSet<LatTerm>) -> LatTerm {
    fold(s.iter().cloned(), LatTerm::Top, LatTerm::and)
}

/// Left fold of a sequence, `unit` when empty.
pub(crate) fn fold<T>(items: impl IntoIterator<Item = T>, unit: T, op: impl Fn(T, T) -> T) -> T {
    let mut it = items.into_iter();
    match it.next() {
        None => unit,
        Some(first) => it.fold(first, op),
    }
}

impl FromStr for ObsTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<ObsTerm> {
        parse_term(s)
    }
}

impl FromStr for LatTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<LatTerm> {
        parse_lat(s)
    }
}

impl fmt::Display for ObsTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        print::write_term(f, self)
    }
}

impl fmt::Debug for ObsTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

impl fmt::Display for LatTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        print::write_term(f, &self.to_obs())
    }
}

impl fmt::Debug for LatTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}
