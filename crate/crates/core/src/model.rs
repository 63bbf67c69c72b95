//! Atomized models and the questions that can be asked of a single model.
//!
//! A [`Model`] is a signature plus a set of atoms; the atoms alone decide
//! every order relation between terms: `s <= t` holds exactly when no atom
//! lies below `s` without also lying below `t`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::atom::{Atom, Duple, Sign, SignedDuple, Term};
use crate::bits::IndexSet;
use crate::error::{Error, Result};
use crate::relation::{self, TermRelation};
use crate::signature::Signature;

/// Non-fatal findings raised while building a model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    /// Some constants had no atom below them; the zero atom was added.
    ZeroAtomInserted { uncovered: Vec<String> },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::ZeroAtomInserted { uncovered } => write!(
                f,
                "no atom lies below {}; inserted the zero atom",
                uncovered.join(", ")
            ),
        }
    }
}

#[derive(Clone)]
pub struct Model {
    sig: Arc<Signature>,
    atoms: Vec<Atom>,
}

impl Model {
    /// Builds a model, merging duplicate atoms and adding the zero atom when
    /// some constant would otherwise have no atom below it. Warnings are logged.
    pub fn new<I>(sig: impl Into<Arc<Signature>>, atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = Atom>,
    {
        let (model, warnings) = Self::with_warnings(sig, atoms)?;
        for w in &warnings {
            log::warn!("{w}");
        }
        Ok(model)
    }

    /// Like [`Model::new`], returning the warnings instead of logging them.
    pub fn with_warnings<I>(sig: impl Into<Arc<Signature>>, atoms: I) -> Result<(Self, Vec<Warning>)>
    where
        I: IntoIterator<Item = Atom>,
    {
        let sig = sig.into();
        let mut atoms: Vec<Atom> = atoms.into_iter().collect();
        for a in &atoms {
            sig.check_set(a.upper())?;
        }
        atoms.sort_unstable();
        atoms.dedup();

        let mut covered = IndexSet::new();
        for a in &atoms {
            covered.union_with(a.upper());
        }
        let missing = sig.all().difference(&covered);
        let mut warnings = Vec::new();
        if !missing.is_empty() {
            warnings.push(Warning::ZeroAtomInserted {
                uncovered: sig.names_of(&missing).map(str::to_string).collect(),
            });
            atoms.push(Atom::zero(&sig));
            atoms.sort_unstable();
            atoms.dedup();
        }
        Ok((Self { sig, atoms }, warnings))
    }

    /// Takes the atom list verbatim: no deduplication, ordering or zero-atom
    /// repair. Intended for probing the axiom checker with malformed input.
    pub fn from_raw_atoms(sig: impl Into<Arc<Signature>>, atoms: Vec<Atom>) -> Result<Self> {
        let sig = sig.into();
        for a in &atoms {
            sig.check_set(a.upper())?;
        }
        Ok(Self { sig, atoms })
    }

    /// Internal constructor for atom sets already known to cover the signature.
    pub(crate) fn from_covering(sig: Arc<Signature>, mut atoms: Vec<Atom>) -> Self {
        atoms.sort_unstable();
        atoms.dedup();
        Self { sig, atoms }
    }

    /// The free model: one singleton atom per constant.
    pub fn free(sig: impl Into<Arc<Signature>>) -> Self {
        let sig = sig.into();
        let atoms = (0..sig.len()).map(|c| Atom::new(IndexSet::singleton(c)).unwrap()).collect();
        Self { sig, atoms }
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn shared_signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    /// Atoms in canonical order.
    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.atoms.binary_search(atom).is_ok()
    }

    /// The atoms lying below `t`.
    pub fn lower_segment(&self, t: &Term) -> Vec<Atom> {
        self.atoms.iter().filter(|a| a.is_below(t)).cloned().collect()
    }

    /// Positions (into [`Model::atoms`]) of the atoms below `t`.
    pub(crate) fn segment_positions(&self, t: &Term) -> IndexSet {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_below(t))
            .map(|(i, _)| i)
            .collect()
    }

    /// Atoms below `a` that are not below `b`.
    pub fn discriminant(&self, a: &Term, b: &Term) -> Vec<Atom> {
        self.atoms
            .iter()
            .filter(|x| x.is_below(a) && !x.is_below(b))
            .cloned()
            .collect()
    }

    /// Whether `d.left <= d.right` holds.
    pub fn holds(&self, d: &Duple) -> bool {
        !self
            .atoms
            .iter()
            .any(|x| x.is_below(&d.left) && !x.is_below(&d.right))
    }

    pub fn satisfies(&self, d: &SignedDuple) -> bool {
        self.holds(&d.duple) == (d.sign == Sign::Positive)
    }

    /// Whether every upper constant of `atom` is witnessed by a strictly
    /// narrower atom of this model.
    pub fn is_redundant(&self, atom: &Atom) -> bool {
        let mut cover = IndexSet::new();
        for a in &self.atoms {
            if a.upper().is_strict_subset(atom.upper()) {
                cover.union_with(a.upper());
            }
        }
        &cover == atom.upper()
    }

    /// The unique atomization without redundant atoms.
    pub fn reduce(&self) -> Model {
        // Shortlex order puts every strict subset of an atom before it.
        let sorted;
        let atoms: &[Atom] = if self.atoms.windows(2).all(|w| w[0] < w[1]) {
            &self.atoms
        } else {
            let mut v = self.atoms.clone();
            v.sort_unstable();
            v.dedup();
            sorted = v;
            &sorted
        };
        let mut keep = Vec::with_capacity(atoms.len());
        for (i, phi) in atoms.iter().enumerate() {
            let mut cover = IndexSet::new();
            for eta in &atoms[..i] {
                if eta.upper().is_strict_subset(phi.upper()) {
                    cover.union_with(eta.upper());
                    if &cover == phi.upper() {
                        break;
                    }
                }
            }
            if &cover != phi.upper() {
                keep.push(phi.clone());
            }
        }
        Model {
            sig: self.sig.clone(),
            atoms: keep,
        }
    }

    /// Whether no atom is redundant.
    pub fn is_reduced(&self) -> bool {
        self.reduce().len() == self.len()
    }

    /// `A + B`, the model atomized by both atom sets.
    pub fn union(&self, other: &Model) -> Result<Model> {
        self.same_signature(other)?;
        let atoms = self.atoms.iter().chain(&other.atoms).cloned().collect();
        Ok(Model::from_covering(self.sig.clone(), atoms))
    }

    /// Whether `self` is freer than or as free as `other`, i.e. every atom of
    /// `other` is a union of atoms of `self`.
    pub fn is_freer(&self, other: &Model) -> Result<bool> {
        self.same_signature(other)?;
        Ok(other.atoms.iter().all(|phi| {
            let mut cover = IndexSet::new();
            for eta in &self.atoms {
                if eta.upper().is_subset(phi.upper()) {
                    cover.union_with(eta.upper());
                }
            }
            &cover == phi.upper()
        }))
    }

    /// Partitions every term into elements of the semilattice.
    pub fn enumerate_elements(&self, cap: usize) -> Result<Vec<ElementClass>> {
        let segments = self.all_segments(cap)?;
        let mut groups: HashMap<&IndexSet, Vec<u64>> = HashMap::new();
        for (i, seg) in segments.iter().enumerate() {
            groups.entry(seg).or_default().push(i as u64 + 1);
        }
        let mut classes: Vec<ElementClass> = groups
            .into_iter()
            .map(|(seg, masks)| {
                let top = masks.iter().fold(0, |acc, m| acc | m);
                let mut members: Vec<Term> = masks.into_iter().map(relation::term_of).collect();
                members.sort_unstable();
                ElementClass {
                    representative: relation::term_of(top),
                    members,
                    segment: seg.iter().map(|p| self.atoms[p].clone()).collect(),
                }
            })
            .collect();
        classes.sort_unstable_by(|a, b| a.representative.cmp(&b.representative));
        Ok(classes)
    }

    /// Classifies every ordered pair of terms as holding or not.
    pub fn enumerate_theory(&self, cap: usize) -> Result<TheorySlice> {
        let segments = self.all_segments(cap)?;
        let mut rel = TermRelation::empty(self.sig.len());
        let top = rel.top();
        for s in 1..=top {
            let ss = &segments[s as usize - 1];
            for t in 1..=top {
                if ss.is_subset(&segments[t as usize - 1]) {
                    rel.insert(s, t);
                }
            }
        }
        Ok(TheorySlice { relation: rel })
    }

    pub(crate) fn same_signature(&self, other: &Model) -> Result<()> {
        if Arc::ptr_eq(&self.sig, &other.sig) || self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    /// Lower segments (as atom positions) of every term, indexed by mask - 1.
    fn all_segments(&self, cap: usize) -> Result<Vec<IndexSet>> {
        let n = self.sig.len();
        relation::check_cap(n, cap)?;
        let per_constant: Vec<IndexSet> = (0..n)
            .map(|c| self.segment_positions(&Term::constant(c)))
            .collect();
        let top = (1u64 << n) - 1;
        let mut out: Vec<IndexSet> = Vec::with_capacity(top as usize);
        for m in 1..=top {
            let low = m.trailing_zeros() as usize;
            let rest = m & (m - 1);
            let seg = if rest == 0 {
                per_constant[low].clone()
            } else {
                out[rest as usize - 1].union(&per_constant[low])
            };
            out.push(seg);
        }
        Ok(out)
    }
}

impl PartialEq for Model {
    fn eq(&self, other: &Self) -> bool {
        self.sig == other.sig && self.atoms == other.atoms
    }
}

impl Eq for Model {}

impl fmt::Debug for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "φ{{{}}}", a.display(&self.sig))?;
        }
        write!(f, "] over {:?}", self.sig)
    }
}

/// One element of a model: the terms sharing a lower segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementClass {
    /// The largest member, the summation of every member's constants.
    pub representative: Term,
    pub members: Vec<Term>,
    /// The atoms below the element.
    pub segment: Vec<Atom>,
}

/// The atomic theory of a model restricted to enumerable terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheorySlice {
    relation: TermRelation,
}

impl TheorySlice {
    pub fn from_relation(relation: TermRelation) -> Self {
        Self { relation }
    }

    pub fn relation(&self) -> &TermRelation {
        &self.relation
    }

    pub fn is_positive(&self, d: &Duple) -> bool {
        self.relation.holds(d)
    }

    pub fn positives(&self) -> Vec<Duple> {
        self.relation
            .pairs()
            .map(|(l, r)| Duple::new(relation::term_of(l), relation::term_of(r)))
            .collect()
    }

    pub fn negatives(&self) -> Vec<Duple> {
        self.relation
            .complement_pairs()
            .map(|(l, r)| Duple::new(relation::term_of(l), relation::term_of(r)))
            .collect()
    }
}
