use std::sync::Arc;

use crate::atom::{Atom, Term};
use crate::bits::IndexSet;
use crate::error::{Error, Result};
use crate::model::Model;
use crate::signature::Signature;

use super::{product, subalgebra};

/// The two-element factor contributed by one non-zero atom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdirectComponent {
    pub atom: Atom,
    /// Name of the top element `z_j`.
    pub top: String,
    /// Name of the bottom element `z̄_j`.
    pub bottom: String,
}

impl SubdirectComponent {
    /// `[ψ{z}, ψ{z, z̄}]` over the constants `(z, z̄)`, in which `z̄ < z`.
    pub fn model(&self) -> Model {
        let sig = Arc::new(
            Signature::from_generated(vec![self.top.clone(), self.bottom.clone()])
                .expect("distinct component names"),
        );
        let atoms = vec![
            Atom::new(IndexSet::singleton(0)).unwrap(),
            Atom::new(IndexSet::full(2)).unwrap(),
        ];
        Model::from_covering(sig, atoms)
    }
}

#[derive(Clone, Debug)]
pub struct SubdirectDecomposition {
    sig: Arc<Signature>,
    pub components: Vec<SubdirectComponent>,
    /// `tuples[c][j]` is true when constant `c` maps to the top of component `j`.
    pub tuples: Vec<Vec<bool>>,
}

impl SubdirectDecomposition {
    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    /// Builds the product of the components and returns the subalgebra
    /// generated by the constants' tuples, named after the original constants.
    pub fn rebuild_via_product(&self) -> Result<Model> {
        let mut parts = self.components.iter();
        let first = parts.next().expect("at least one component");
        let coordinate = |top: bool| if top { 0 } else { 1 };
        let mut acc = first.model();
        let mut at: Vec<usize> = self.tuples.iter().map(|t| coordinate(t[0])).collect();
        for (j, part) in parts.enumerate() {
            let p = product(&acc, &part.model(), false)?;
            for (c, pos) in at.iter_mut().enumerate() {
                *pos = p.grid[*pos][coordinate(self.tuples[c][j + 1])];
            }
            acc = p.model.reduce();
        }
        let generators: Vec<Term> = at.into_iter().map(Term::constant).collect();
        subalgebra(&acc, &generators, self.sig.names())
    }
}

/// Represents `m` inside a product of two-element semilattices, one per
/// non-zero atom of its reduced atomization.
pub fn subdirect_decomposition(m: &Model) -> Result<SubdirectDecomposition> {
    let sig = m.shared_signature().clone();
    let atoms: Vec<Atom> = m
        .reduce()
        .atoms()
        .iter()
        .filter(|a| !a.is_zero(&sig))
        .cloned()
        .collect();
    if atoms.is_empty() {
        return Err(Error::TrivialModel);
    }
    let tuples = (0..sig.len())
        .map(|c| atoms.iter().map(|a| a.upper().contains(c)).collect())
        .collect();
    let components = atoms
        .into_iter()
        .enumerate()
        .map(|(j, atom)| SubdirectComponent {
            atom,
            top: format!("z{}", j + 1),
            bottom: format!("z{}_bar", j + 1),
        })
        .collect();
    Ok(SubdirectDecomposition { sig, components, tuples })
}

/// `m` as a subalgebra of a free model: one free constant per atom.
#[derive(Clone, Debug)]
pub struct FreeEmbedding {
    pub free: Arc<Signature>,
    /// The generator standing for each constant of the embedded model.
    pub terms: Vec<Term>,
}

impl FreeEmbedding {
    /// The subalgebra of the free model generated by [`FreeEmbedding::terms`].
    pub fn rebuild(&self, names: &Signature) -> Result<Model> {
        subalgebra(&Model::free(self.free.clone()), &self.terms, names.names())
    }
}

pub fn embed_in_free(m: &Model) -> Result<FreeEmbedding> {
    let sig = m.signature();
    let mut prefix = String::from("z");
    while (1..=m.len()).any(|k| sig.contains(&format!("{prefix}{k}"))) {
        prefix.push('z');
    }
    let free = Arc::new(Signature::new((1..=m.len()).map(|k| format!("{prefix}{k}")))?);
    let terms = (0..sig.len())
        .map(|c| {
            let comps: IndexSet = m
                .atoms()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.upper().contains(c))
                .map(|(k, _)| k)
                .collect();
            Term::new(comps)
        })
        .collect::<Result<_>>()?;
    Ok(FreeEmbedding { free, terms })
}
