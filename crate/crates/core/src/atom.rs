//! Model-independent vocabulary: atoms, terms and duples.
//!
//! An atom is identified by its upper constant segment, the set of constants
//! it lies below. A term is an idempotent summation of constants and is
//! identified by its component constants. Both are non-empty index sets over
//! a [`Signature`], which is why the same atom or term can be compared across
//! every model over that signature.

use std::fmt;

use crate::bits::IndexSet;
use crate::error::{Error, Result};
use crate::signature::Signature;

/// An atom, identified by its upper constant segment.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(IndexSet);

impl Atom {
    pub fn new(upper: IndexSet) -> Result<Self> {
        if upper.is_empty() {
            return Err(Error::EmptyAtom);
        }
        Ok(Self(upper))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(upper: I) -> Result<Self> {
        Self::new(upper.into_iter().collect())
    }

    pub fn from_names<'a, I>(sig: &Signature, names: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        Self::new(sig.resolve(names)?)
    }

    /// The zero atom, which lies below every constant.
    pub fn zero(sig: &Signature) -> Self {
        Self(sig.all())
    }

    pub fn upper(&self) -> &IndexSet {
        &self.0
    }

    pub fn into_upper(self) -> IndexSet {
        self.0
    }

    pub fn is_zero(&self, sig: &Signature) -> bool {
        self.0.len() == sig.len()
    }

    /// `self ▽ other`: the atom below exactly the constants either one is below.
    pub fn union(&self, other: &Atom) -> Atom {
        Atom(self.0.union(&other.0))
    }

    /// True when `other`'s upper segment is a strict subset of `self`'s.
    pub fn is_wider(&self, other: &Atom) -> bool {
        other.0.is_strict_subset(&self.0)
    }

    /// Whether the atom lies below the term, i.e. below some component.
    pub fn is_below(&self, term: &Term) -> bool {
        self.0.intersects(&term.0)
    }

    /// The pinning term (the summation of every constant outside the upper
    /// segment) and the pinning duples `(c, T)⁻`, one per upper constant.
    pub fn pinning(&self, sig: &Signature) -> Result<(Term, Vec<SignedDuple>)> {
        let rest = sig.all().difference(&self.0);
        if rest.is_empty() {
            return Err(Error::ZeroAtomHasNoPinningTerm);
        }
        let pin = Term(rest);
        let duples = self
            .0
            .iter()
            .map(|c| Duple::new(Term::constant(c), pin.clone()).negative())
            .collect();
        Ok((pin, duples))
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        Names(sig, &self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "φ{:?}", self.0)
    }
}

/// A term of the free semilattice, identified by its component constants.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term(IndexSet);

impl Term {
    pub fn new(comps: IndexSet) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::EmptyTerm);
        }
        Ok(Self(comps))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(comps: I) -> Result<Self> {
        Self::new(comps.into_iter().collect())
    }

    pub fn from_names<'a, I>(sig: &Signature, names: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        Self::new(sig.resolve(names)?)
    }

    /// Parses a whitespace-separated summation such as `a c d`.
    pub fn parse(sig: &Signature, text: &str) -> Result<Self> {
        Self::from_names(sig, text.split_whitespace())
    }

    pub fn constant(index: usize) -> Self {
        Self(IndexSet::singleton(index))
    }

    pub fn comps(&self) -> &IndexSet {
        &self.0
    }

    /// `self ⊙ other`.
    pub fn join(&self, other: &Term) -> Term {
        Term(self.0.union(&other.0))
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        Names(sig, &self.0)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{:?}", self.0)
    }
}

/// An ordered pair of terms, read as the sentence `left <= right`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Duple {
    pub left: Term,
    pub right: Term,
}

impl Duple {
    pub fn new(left: Term, right: Term) -> Self {
        Self { left, right }
    }

    /// Parses `<term> <= <term>`.
    pub fn parse(sig: &Signature, text: &str) -> Result<Self> {
        let (l, r) = text
            .split_once("<=")
            .ok_or_else(|| Error::Parse {
                line: 1,
                message: format!("expected `<term> <= <term>`, found `{}`", text.trim()),
            })?;
        Ok(Self::new(Term::parse(sig, l)?, Term::parse(sig, r)?))
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.right.clone(), self.left.clone())
    }

    pub fn positive(self) -> SignedDuple {
        SignedDuple {
            duple: self,
            sign: Sign::Positive,
        }
    }

    pub fn negative(self) -> SignedDuple {
        SignedDuple {
            duple: self,
            sign: Sign::Negative,
        }
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        DupleDisplay(sig, self)
    }

    pub(crate) fn check(&self, sig: &Signature) -> Result<()> {
        sig.check_set(self.left.comps())
            .and_then(|_| sig.check_set(self.right.comps()))
            .map_err(|_| Error::SignatureMismatch)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

/// A duple with a polarity: `r⁺` asserts `left <= right`, `r⁻` its negation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedDuple {
    pub duple: Duple,
    pub sign: Sign,
}

struct Names<'a>(&'a Signature, &'a IndexSet);

impl fmt::Display for Names<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, name) in self.0.names_of(self.1).enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str(name)?;
        }
        Ok(())
    }
}

struct DupleDisplay<'a>(&'a Signature, &'a Duple);

impl fmt::Display for DupleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} <= {}",
            self.1.left.display(self.0),
            self.1.right.display(self.0)
        )
    }
}
