//! Constructions that build new models from old ones.
//!
//! Every construction here works on atoms only: restriction intersects upper
//! segments, renaming maps them, and quotients, joins and subalgebras are
//! reached by combining renames with full crossing.

mod decompose;
mod join;
mod product;
mod rename;
mod subalgebra;

use std::sync::Arc;

pub use decompose::{embed_in_free, subdirect_decomposition, FreeEmbedding, SubdirectComponent, SubdirectDecomposition};
pub use join::join;
pub use product::{product, ProductModel};
pub use rename::{rename, RenameMap};
pub use subalgebra::{subalgebra, subalgebra_by_crossing};

use crate::atom::{Duple, Term};
use crate::bits::IndexSet;
use crate::crossing::full_crossing;
use crate::error::{Error, Result};
use crate::model::Model;
use crate::signature::Signature;

/// The subalgebra generated by the constants in `keep`, over a signature of
/// just those constants (in their original order).
pub fn restrict(m: &Model, keep: &IndexSet) -> Result<Model> {
    if keep.is_empty() {
        return Err(Error::EmptyRestrictionSet);
    }
    let sig = m.signature();
    sig.check_set(keep)?;
    if keep.len() == sig.len() {
        return Ok(m.clone());
    }
    let names: Vec<String> = sig.names_of(keep).map(str::to_string).collect();
    let target = Arc::new(Signature::from_generated(names)?);
    let mut images = vec![IndexSet::new(); sig.len()];
    for (pos, c) in keep.iter().enumerate() {
        images[c].insert(pos);
    }
    rename::rename_indices(m, target, &images)
}

/// [`restrict`] by constant names.
pub fn restrict_names<'a, I>(m: &Model, keep: I) -> Result<Model>
where
    I: IntoIterator<Item = &'a str>,
{
    restrict(m, &m.signature().resolve(keep)?)
}

/// The quotient by the least congruence identifying `a` and `b`.
pub fn quotient(m: &Model, a: &Term, b: &Term) -> Result<Model> {
    let once = full_crossing(m, &Duple::new(b.clone(), a.clone()))?;
    full_crossing(&once, &Duple::new(a.clone(), b.clone()))
}

/// Whether restricting to `keep` is also a homomorphism, which happens
/// exactly when some kept constant lies below every other kept constant.
pub fn restriction_homomorphism_exists(m: &Model, keep: &IndexSet) -> Result<bool> {
    let r = restrict(m, keep)?;
    let n = r.signature().len();
    Ok((0..n).any(|q| {
        let q = Term::constant(q);
        (0..n).all(|x| r.holds(&Duple::new(q.clone(), Term::constant(x))))
    }))
}
