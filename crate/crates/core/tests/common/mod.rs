//! Random instance generation shared by the integration suites.
#![allow(dead_code)]

use std::sync::Arc;

use atomized::{Atom, Duple, IndexSet, Model, Signature, Term, TermRelation, DEFAULT_CAP};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Signature `c0 .. c{n-1}`.
pub fn sig(n: usize) -> Arc<Signature> {
    Arc::new(Signature::new((0..n).map(|i| format!("c{i}"))).unwrap())
}

pub fn named(names: &str) -> Arc<Signature> {
    Arc::new(Signature::new(names.split_whitespace()).unwrap())
}

pub fn model(sig: &Arc<Signature>, atoms: &[&str]) -> Model {
    Model::new(
        sig.clone(),
        atoms.iter().map(|a| Atom::from_names(sig, a.split_whitespace()).unwrap()),
    )
    .unwrap()
}

/// A random subset of `0..n` with between 1 and `max` members.
pub fn subset(rng: &mut impl Rng, n: usize, max: usize) -> IndexSet {
    let k = rng.gen_range(1..=max.min(n));
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all[..k].iter().copied().collect()
}

pub fn term(rng: &mut impl Rng, n: usize, max: usize) -> Term {
    Term::new(subset(rng, n, max)).unwrap()
}

pub fn duples(rng: &mut impl Rng, n: usize, count: usize, max_term: usize) -> Vec<Duple> {
    (0..count)
        .map(|_| Duple::new(term(rng, n, max_term), term(rng, n, max_term)))
        .collect()
}

/// A model over `n` constants built from `atoms` random non-empty subsets.
pub fn random_model(rng: &mut impl Rng, sig: &Arc<Signature>, atoms: usize) -> Model {
    let n = sig.len();
    let atoms: Vec<Atom> = (0..atoms).map(|_| Atom::new(subset(rng, n, n)).unwrap()).collect();
    Model::new(sig.clone(), atoms).unwrap()
}

pub fn theory(m: &Model) -> TermRelation {
    m.enumerate_theory(DEFAULT_CAP).unwrap().relation().clone()
}

/// Atoms as sorted name lists, for readable assertion failures.
pub fn atom_names(m: &Model) -> Vec<Vec<String>> {
    m.atoms()
        .iter()
        .map(|a| m.signature().names_of(a.upper()).map(str::to_string).collect())
        .collect()
}
