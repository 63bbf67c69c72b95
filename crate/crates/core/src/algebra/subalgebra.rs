use std::sync::Arc;

use crate::atom::{Atom, Duple, Term};
use crate::bits::IndexSet;
use crate::crossing::full_crossing;
use crate::error::{Error, Result};
use crate::model::Model;
use crate::signature::Signature;

use super::rename::rename_indices;
use super::restrict;

fn check(m: &Model, generators: &[Term], names: &[String]) -> Result<()> {
    if generators.len() != names.len() {
        return Err(Error::GeneratorCountMismatch {
            generators: generators.len(),
            names: names.len(),
        });
    }
    for name in names {
        if m.signature().contains(name) {
            return Err(Error::NameCollision(name.clone()));
        }
    }
    for g in generators {
        m.signature().check_set(g.comps()).map_err(|_| Error::SignatureMismatch)?;
    }
    Ok(())
}

/// The subalgebra of `m` generated by `generators`, with generator `i`
/// becoming the constant `names[i]`. Computed as the rename sending each
/// constant `c` to the generators that contain it.
pub fn subalgebra(m: &Model, generators: &[Term], names: &[String]) -> Result<Model> {
    check(m, generators, names)?;
    let target = Arc::new(Signature::new(names.iter().cloned())?);
    let mut images = vec![IndexSet::new(); m.signature().len()];
    for (i, g) in generators.iter().enumerate() {
        for c in g.comps() {
            images[c].insert(i);
        }
    }
    rename_indices(m, target, &images)
}

/// Same subalgebra as [`subalgebra`], computed by adding each generator as a
/// free constant, crossing it both ways against its term, and restricting
/// to the new constants. The result may carry redundant atoms.
pub fn subalgebra_by_crossing(m: &Model, generators: &[Term], names: &[String]) -> Result<Model> {
    check(m, generators, names)?;
    let target = Signature::new(names.iter().cloned())?;
    let base = m.signature().len();
    let mut all: Vec<String> = m.signature().names().to_vec();
    all.extend(target.names().iter().cloned());
    let work = Arc::new(Signature::from_generated(all)?);

    let mut atoms: Vec<Atom> = m.atoms().to_vec();
    atoms.extend((0..names.len()).map(|i| Atom::new(IndexSet::singleton(base + i)).unwrap()));
    let mut current = Model::from_covering(work, atoms);
    for (i, t) in generators.iter().enumerate() {
        let g = Term::constant(base + i);
        current = full_crossing(&current, &Duple::new(t.clone(), g.clone()))?;
        current = full_crossing(&current, &Duple::new(g, t.clone()))?;
    }
    let keep: IndexSet = (base..base + names.len()).collect();
    restrict(&current, &keep)
}
