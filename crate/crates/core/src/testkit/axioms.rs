//! Randomized instantiations of the equational axioms and of the closure,
//! implication and conversion identities.
//!
//! Every instance is checked semantically with the [`Oracle`] and, where a
//! decision procedure covers the graph, also as an equivalence proved by
//! that engine.

use rand::seq::SliceRandom;
use rand::{Rng, RngCore};

use super::{
    letters, product_components, random_graph, random_product, random_representative, random_term, random_vector, Op,
};
use crate::anticlique::AnticliqueEngine;
use crate::clique::Clique;
use crate::fan::FanEngine;
use crate::graph::{AnticliqueGraph, Atom, CoherenceGraph};
use crate::oracle::{ac_oracle_graph, Oracle, SemSet};
use crate::product::{
    c2d, coprod_term, d2c, inject, prod_term, vec_impl, ComponentEngine, FanComponent, ProductEngine,
};
use crate::term::ObsTerm;

/// One randomized instance; `Err` carries a description of the failure.
pub type Check = fn(&mut dyn RngCore) -> Result<(), String>;

/// Outcome of running one check repeatedly.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub fn run(name: &'static str, check: Check, rng: &mut dyn RngCore, cases: usize) -> SuiteReport {
    let mut report = SuiteReport { name, cases, failures: 0, first_failure: None };
    for _ in 0..cases {
        if let Err(e) = check(rng) {
            report.failures += 1;
            report.first_failure.get_or_insert(e);
        }
    }
    report
}

/// Every suite, in a fixed order.
pub const SUITES: &[(&str, Check)] = &[
    ("join associativity", join_assoc),
    ("join commutativity", join_comm),
    ("join unit", join_unit),
    ("meet associativity", meet_assoc),
    ("meet commutativity", meet_comm),
    ("meet unit", meet_unit),
    ("absorption of join", join_absorption),
    ("absorption of meet", meet_absorption),
    ("self implication", self_implication),
    ("modus ponens", modus_ponens),
    ("weakening", weakening),
    ("implication over meet", implication_over_meet),
    ("incoherent pair", incoherent_pair),
    ("clique implication over join", clique_implication_over_join),
    ("clique implication of an atom", clique_implication_of_atom),
    ("clique negation", clique_negation),
    ("excluded middle atoms", excluded_middle_atoms),
    ("double negation of finite joins", double_negation_finite_join),
    ("component lifting", component_lifting),
    ("vector implication", vector_implication),
    ("implication closure", impl_closure),
    ("closure of unions", closure_union),
    ("closure extensive", closure_extensive),
    ("closure of empty", closure_empty),
    ("closure idempotent", closure_idempotent),
    ("conjunctive/disjunctive conversion", c2d_d2c),
    ("heyting adjunction", adjunction),
];

const TERM_SIZE: usize = 7;

fn small_graph(rng: &mut dyn RngCore) -> CoherenceGraph {
    let n = rng.gen_range(1..=4);
    random_graph(rng, letters(n), 0.5)
}

fn term(rng: &mut dyn RngCore, g: &CoherenceGraph) -> ObsTerm {
    random_term(rng, &g.atoms().expect("finite"), &Op::ALL, TERM_SIZE)
}

fn conj(atoms: impl IntoIterator<Item = Atom>) -> ObsTerm {
    crate::term::fold(atoms.into_iter().map(ObsTerm::Atom), ObsTerm::Top, ObsTerm::and)
}

fn disj(atoms: impl IntoIterator<Item = Atom>) -> ObsTerm {
    crate::term::fold(atoms.into_iter().map(ObsTerm::Atom), ObsTerm::Bot, ObsTerm::or)
}

fn fail(what: impl std::fmt::Display) -> String {
    what.to_string()
}

/// `l ≡ r` over a finite graph: equal oracle semantics, and an equivalence
/// the implication engine proves.
fn finite_equiv(g: &CoherenceGraph, l: &ObsTerm, r: &ObsTerm) -> Result<(), String> {
    let oracle = Oracle::new(g).map_err(fail)?;
    let (x, y) = (oracle.eval(l).map_err(fail)?, oracle.eval(r).map_err(fail)?);
    if x != y {
        return Err(format!("semantics differ: ⟦{l}⟧ = {x}, ⟦{r}⟧ = {y}"));
    }
    let fan = FanEngine::new(g).map_err(fail)?;
    if !fan.equiv(l, r).map_err(fail)? {
        return Err(format!("engine does not prove {l} ≡ {r}"));
    }
    Ok(())
}

fn with_terms<const N: usize>(
    rng: &mut dyn RngCore,
    law: impl Fn([ObsTerm; N]) -> (ObsTerm, ObsTerm),
) -> Result<(), String> {
    let g = small_graph(rng);
    let ts: [ObsTerm; N] = std::array::from_fn(|_| term(rng, &g));
    let (l, r) = law(ts);
    finite_equiv(&g, &l, &r)
}

fn join_assoc(rng: &mut dyn RngCore) -> Result<(), String> {
    with_terms(rng, |[s, t, u]| {
        (ObsTerm::or(s.clone(), ObsTerm::or(t.clone(), u.clone())), ObsTerm::or(ObsTerm::or(s, t), u))
    })
}

fn join_comm(rng: &mut dyn RngCore) -> Result<(), String> {
    with_terms(rng, |[s, t]| (ObsTerm::or(s.clone(), t.clone()), ObsTerm::or(t, s)))
}

fn join_unit(rng: &mut dyn RngCore) -> Result<(), String> {
    with_terms(rng, |[s]| (ObsTerm::or(s.clone(), ObsTerm::Bot), s))
}

fn meet_assoc(rng: &mut dyn RngCore) -> Result<(), String> {
    with_terms(rng, |[s, t, u]| {
        (ObsTerm::and(s.clone(), ObsTerm::and(t.clone(), u.clone())), ObsTerm::and(ObsTerm::and(s, t), u))
    })
}

fn meet_comm(rng: &mut dyn RngCore) -> Result<(), String> {
    with_terms(rng, |[s, t]| (ObsTerm::and(s.clone(), t.clone()), ObsTerm::and(t, s)))
}

fn meet_unit(rng: &mut dyn RngCore) -> Result<(), String> {
    with_terms(rng, |[s]| (ObsTerm::and(s.clone(), ObsTerm::Top), s))
}

fn join_absorption(rng: &mut dyn RngCore) -> Result<(), String> {
    with_terms(rng, |[s, t]| (ObsTerm::and(s.clone(), ObsTerm::or(s.clone(), t)), s))
}

fn meet_absorption(rng: &mut dyn RngCore) -> Result<(), String> {
    with_terms(rng, |[s, t]| (ObsTerm::or(s.clone(), ObsTerm::and(s.clone(), t)), s))
}

fn self_implication(rng: &mut dyn RngCore) -> Result<(), String> {
    with_terms(rng, |[s]| (ObsTerm::imp(s.clone(), s), ObsTerm::Top))
}

fn modus_ponens(rng: &mut dyn RngCore) -> Result<(), String> {
    with_terms(rng, |[s, t]| (ObsTerm::and(s.clone(), ObsTerm::imp(s.clone(), t.clone())), ObsTerm::and(s, t)))
}

fn weakening(rng: &mut dyn RngCore) -> Result<(), String> {
    with_terms(rng, |[s, t]| (ObsTerm::and(t.clone(), ObsTerm::imp(s, t.clone())), t))
}

fn implication_over_meet(rng: &mut dyn RngCore) -> Result<(), String> {
    with_terms(rng, |[s, t, u]| {
        (
            ObsTerm::imp(s.clone(), ObsTerm::and(t.clone(), u.clone())),
            ObsTerm::and(ObsTerm::imp(s.clone(), t), ObsTerm::imp(s, u)),
        )
    })
}

/// A graph with at least two atoms and an incoherent pair, and that pair.
fn graph_with_conflict(rng: &mut dyn RngCore) -> (CoherenceGraph, Atom, Atom) {
    loop {
        let n = rng.gen_range(2..=4);
        let g = random_graph(rng, letters(n), 0.5);
        let atoms = g.atoms().expect("finite");
        let pairs: Vec<(Atom, Atom)> = atoms
            .iter()
            .flat_map(|a| atoms.iter().map(move |b| (a.clone(), b.clone())))
            .filter(|(a, b)| !g.coherent(a, b).expect("own atoms"))
            .collect();
        if let Some((a, b)) = pairs.choose(rng) {
            return (g, a.clone(), b.clone());
        }
    }
}

fn incoherent_pair(rng: &mut dyn RngCore) -> Result<(), String> {
    let (g, a, b) = graph_with_conflict(rng);
    finite_equiv(&g, &ObsTerm::and(ObsTerm::Atom(a), ObsTerm::Atom(b)), &ObsTerm::Bot)
}

fn random_clique(rng: &mut dyn RngCore, oracle: &Oracle) -> Clique {
    oracle.all().cliques().choose(rng).expect("∅ is a clique").clone()
}

fn clique_implication_over_join(rng: &mut dyn RngCore) -> Result<(), String> {
    let g = small_graph(rng);
    let alpha = random_clique(rng, &Oracle::new(&g).map_err(fail)?);
    let (s, t) = (term(rng, &g), term(rng, &g));
    let a = conj(alpha.atoms().iter().cloned());
    let l = ObsTerm::imp(a.clone(), ObsTerm::or(s.clone(), t.clone()));
    let r = ObsTerm::or(ObsTerm::imp(a.clone(), s), ObsTerm::imp(a, t));
    finite_equiv(&g, &l, &r)
}

fn clique_implication_of_atom(rng: &mut dyn RngCore) -> Result<(), String> {
    loop {
        let g = small_graph(rng);
        let alpha = random_clique(rng, &Oracle::new(&g).map_err(fail)?);
        let outside: Vec<Atom> =
            g.atoms().expect("finite").into_iter().filter(|a| !alpha.atoms().contains(a)).collect();
        let Some(x) = outside.choose(rng).cloned() else { continue };
        let a = conj(alpha.atoms().iter().cloned());
        let l = ObsTerm::imp(a.clone(), ObsTerm::Atom(x.clone()));
        let r = ObsTerm::or(ObsTerm::neg(a), ObsTerm::Atom(x));
        return finite_equiv(&g, &l, &r);
    }
}

fn clique_negation(rng: &mut dyn RngCore) -> Result<(), String> {
    let g = small_graph(rng);
    let oracle = Oracle::new(&g).map_err(fail)?;
    let alpha = random_clique(rng, &oracle);
    let mut conflicting = Vec::new();
    for a in oracle.atoms() {
        for b in alpha.atoms() {
            if !oracle.coherent(a, b).map_err(fail)? {
                conflicting.push(a.clone());
                break;
            }
        }
    }
    finite_equiv(&g, &ObsTerm::neg(conj(alpha.atoms().iter().cloned())), &disj(conflicting))
}

/// `l ≡ r` over the anticlique: the engine proves it and the finite-model
/// oracle agrees.
fn anticlique_equiv(l: &ObsTerm, r: &ObsTerm) -> Result<(), String> {
    let omega = AnticliqueGraph::new("n").map_err(fail)?;
    let g: CoherenceGraph = omega.clone().into();
    let engine = AnticliqueEngine::new(&g).map_err(fail)?;
    if !engine.equiv(l, r).map_err(fail)? {
        return Err(format!("engine does not prove {l} ≡ {r}"));
    }
    let model = ac_oracle_graph(&omega, l, r).map_err(fail)?;
    let oracle = Oracle::new(&model).map_err(fail)?;
    if oracle.eval(l).map_err(fail)? != oracle.eval(r).map_err(fail)? {
        return Err(format!("finite model separates {l} and {r}"));
    }
    Ok(())
}

fn omega_atom(rng: &mut dyn RngCore) -> Atom {
    Atom::new(&format!("n{}", rng.gen_range(0..10))).expect("valid name")
}

fn excluded_middle_atoms(rng: &mut dyn RngCore) -> Result<(), String> {
    let (a, b) = (ObsTerm::Atom(omega_atom(rng)), ObsTerm::Atom(omega_atom(rng)));
    anticlique_equiv(&ObsTerm::or(a.clone(), ObsTerm::neg(a)), &ObsTerm::or(b.clone(), ObsTerm::neg(b)))
}

fn double_negation_finite_join(rng: &mut dyn RngCore) -> Result<(), String> {
    let n = rng.gen_range(0..=4);
    let set: std::collections::BTreeSet<Atom> = (0..n).map(|_| omega_atom(rng)).collect();
    let a = disj(set);
    anticlique_equiv(&ObsTerm::neg(ObsTerm::neg(a.clone())), &a)
}

fn product(rng: &mut dyn RngCore) -> CoherenceGraph {
    let k = rng.gen_range(2..=3);
    random_product(rng, k, 3, 0.5)
}

/// `l ≡ r` over a finite product: equal semantics on the flattened graph
/// and an equivalence the product engine proves.
fn product_equiv(g: &CoherenceGraph, l: &ObsTerm, r: &ObsTerm) -> Result<(), String> {
    let oracle = Oracle::new(g).map_err(fail)?;
    let (x, y): (SemSet, SemSet) = (oracle.eval(l).map_err(fail)?, oracle.eval(r).map_err(fail)?);
    if x != y {
        return Err(format!("semantics differ: ⟦{l}⟧ = {x}, ⟦{r}⟧ = {y}"));
    }
    let engine = ProductEngine::new(g).map_err(fail)?;
    if !engine.equiv(l, r).map_err(fail)? {
        return Err(format!("engine does not prove {l} ≡ {r}"));
    }
    Ok(())
}

fn component_lifting(rng: &mut dyn RngCore) -> Result<(), String> {
    let g = product(rng);
    let components = product_components(&g);
    let (index, atoms) = components.choose(rng).expect("non-empty product").clone();
    let CoherenceGraph::Product(p) = &g else { unreachable!() };
    let component = p.component(&index).expect("own component");
    let s = random_term(rng, &atoms, &Op::ALL, TERM_SIZE);
    let local = FanComponent(FanEngine::new(component).map_err(fail)?);
    let t = local.simplify(&s).map_err(fail)?;
    if !(local.leq(&s, &t).map_err(fail)? && local.leq(&t, &s).map_err(fail)?) {
        return Err(format!("component engine does not prove {s} ≡ {t}"));
    }
    product_equiv(&g, &inject(&index, &s), &inject(&index, &t))
}

fn vector_implication(rng: &mut dyn RngCore) -> Result<(), String> {
    let g = product(rng);
    let components = product_components(&g);
    let u = random_vector(rng, &components, &Op::ALL, 5);
    let v = random_vector(rng, &components, &Op::ALL, 5);
    let l = ObsTerm::imp(prod_term(&u), coprod_term(&v));
    product_equiv(&g, &l, &coprod_term(&vec_impl(&u, &v)))
}

/// A random set of cliques, each clique included with probability `p`.
fn random_family(rng: &mut dyn RngCore, oracle: &Oracle, p: f64) -> Result<SemSet, String> {
    let picked: Vec<Clique> = oracle.all().cliques().into_iter().filter(|_| rng.gen_bool(p)).collect();
    oracle.set_of(&picked).map_err(fail)
}

fn with_families(
    rng: &mut dyn RngCore,
    law: impl Fn(&Oracle, &SemSet, &SemSet) -> Result<(), String>,
) -> Result<(), String> {
    let g = small_graph(rng);
    let oracle = Oracle::new(&g).map_err(fail)?;
    let x = random_family(rng, &oracle, 0.3)?;
    let y = random_family(rng, &oracle, 0.3)?;
    law(&oracle, &x, &y)
}

fn impl_closure(rng: &mut dyn RngCore) -> Result<(), String> {
    with_families(rng, |o, x, y| {
        let (xd, yd) = (o.down_close(x), o.down_close(y));
        let lhs = o.implies(&xd, &yd);
        if lhs != o.down_close(&lhs) || lhs != o.implies(x, &yd) {
            return Err(format!("x = {x}, y = {y}"));
        }
        Ok(())
    })
}

fn closure_union(rng: &mut dyn RngCore) -> Result<(), String> {
    with_families(rng, |o, x, y| {
        if o.down_close(&x.union(y)) != o.down_close(x).union(&o.down_close(y)) {
            return Err(format!("x = {x}, y = {y}"));
        }
        Ok(())
    })
}

fn closure_extensive(rng: &mut dyn RngCore) -> Result<(), String> {
    with_families(rng, |o, x, _| if x.is_subset(&o.down_close(x)) { Ok(()) } else { Err(format!("x = {x}")) })
}

fn closure_empty(rng: &mut dyn RngCore) -> Result<(), String> {
    with_families(rng, |o, _, _| if o.down_close(&o.empty()).is_empty() { Ok(()) } else { Err("∅↓ ≠ ∅".into()) })
}

fn closure_idempotent(rng: &mut dyn RngCore) -> Result<(), String> {
    with_families(rng, |o, x, _| {
        let once = o.down_close(x);
        if o.down_close(&once) == once {
            Ok(())
        } else {
            Err(format!("x = {x}"))
        }
    })
}

fn c2d_d2c(rng: &mut dyn RngCore) -> Result<(), String> {
    let g = product(rng);
    let components = product_components(&g);
    let v = random_representative(rng, &components, 3, 3);
    let oracle = Oracle::new(&g).map_err(fail)?;
    let sem = |s: &ObsTerm| oracle.eval(s).map_err(fail);
    if sem(&c2d(&v).disjunctive_term())? != sem(&v.conjunctive_term())? {
        return Err(format!("c2d: V = {v}"));
    }
    if sem(&d2c(&v).conjunctive_term())? != sem(&v.disjunctive_term())? {
        return Err(format!("d2c: V = {v}"));
    }
    Ok(())
}

fn adjunction(rng: &mut dyn RngCore) -> Result<(), String> {
    let g = small_graph(rng);
    let (x, y, z) = (term(rng, &g), term(rng, &g), term(rng, &g));
    let oracle = Oracle::new(&g).map_err(fail)?;
    let meet = ObsTerm::and(x.clone(), z.clone());
    let arrow = ObsTerm::imp(x.clone(), y.clone());
    let left = oracle.leq(&meet, &y).map_err(fail)?;
    if left != oracle.leq(&z, &arrow).map_err(fail)? {
        return Err(format!("semantic adjunction fails for x = {x}, y = {y}, z = {z}"));
    }
    let fan = FanEngine::new(&g).map_err(fail)?;
    if fan.leq(&meet, &y).map_err(fail)? != left || fan.leq(&z, &arrow).map_err(fail)? != left {
        return Err(format!("engine adjunction fails for x = {x}, y = {y}, z = {z}"));
    }
    Ok(())
}
