use std::sync::Arc;

use crate::atom::{Atom, Duple, Term};
use crate::bits::IndexSet;
use crate::crossing::full_crossing;
use crate::error::Result;
use crate::model::Model;
use crate::signature::{Signature, PRIME};

use super::restrict;

/// `M ⊕ N`: the freest model over the constants of both that satisfies the
/// positive theories of both. The result is reduced.
///
/// The merged signature lists `M`'s constants first, then those of `N` that
/// `M` lacks. Shared constants are first kept apart, as fresh primed copies
/// in `N`, and then identified by crossing `c' <= c` and `c <= c'`.
pub fn join(m: &Model, n: &Model) -> Result<Model> {
    let ms = m.signature();
    let ns = n.signature();
    let mut names: Vec<String> = ms.names().to_vec();
    let mut shared = Vec::new();
    for name in ns.names() {
        if ms.contains(name) {
            shared.push(name.clone());
        } else {
            names.push(name.clone());
        }
    }
    let merged = names.len();

    // Position of each of N's constants in the working signature.
    let mut fresh_of = Vec::with_capacity(shared.len());
    for name in &shared {
        let mut fresh = format!("{name}{PRIME}");
        while names.contains(&fresh) {
            fresh.push(PRIME);
        }
        fresh_of.push(names.len());
        names.push(fresh);
    }
    let work = Arc::new(Signature::from_generated(names)?);
    let place = |c: usize| -> usize {
        let name = ns.name(c);
        match shared.iter().position(|s| s == name) {
            Some(k) => fresh_of[k],
            None => work.index_of(name).expect("merged signature has every constant"),
        }
    };

    let mut atoms: Vec<Atom> = m.atoms().to_vec();
    for a in n.atoms() {
        atoms.push(Atom::new(a.upper().iter().map(place).collect())?);
    }
    let mut current = Model::from_covering(work.clone(), atoms);

    for (k, name) in shared.iter().enumerate() {
        let c = Term::constant(work.index_of(name).expect("shared constant"));
        let primed = Term::constant(fresh_of[k]);
        current = full_crossing(&current, &Duple::new(primed.clone(), c.clone()))?;
        current = full_crossing(&current, &Duple::new(c, primed))?.reduce();
    }
    Ok(restrict(&current, &IndexSet::full(merged))?.reduce())
}
