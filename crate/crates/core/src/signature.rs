use std::collections::HashMap;
use std::fmt;

use crate::bits::IndexSet;
use crate::error::{Error, Result};

/// Suffix appended to shared constants when a join needs guaranteed-fresh
/// copies. Never legal in user-supplied names.
pub const PRIME: char = '\'';

/// The ordered, named set of constants that generate a model.
///
/// All algebra works on constant indices; names only matter at the
/// serialization boundary. Index order is the canonical output order.
#[derive(Clone)]
pub struct Signature {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Signature {
    /// Builds a signature from user-facing names, rejecting empty lists,
    /// duplicates, and names that use reserved characters.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for name in &names {
            validate_name(name)?;
        }
        Self::from_generated(names)
    }

    /// Like [`Signature::new`] but allows reserved characters. Used for the
    /// intermediate signatures of joins, whose primed constants are internal.
    pub(crate) fn from_generated(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::EmptySignature);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateConstant(name.clone()));
            }
        }
        Ok(Self { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false: signatures are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// Resolves a list of names to an index set.
    pub fn resolve<'a, I>(&self, names: I) -> Result<IndexSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        names
            .into_iter()
            .map(|n| {
                self.index_of(n)
                    .ok_or_else(|| Error::UnknownConstant(n.to_string()))
            })
            .collect()
    }

    /// Every constant index.
    pub fn all(&self) -> IndexSet {
        IndexSet::full(self.len())
    }

    /// Names of the members of `set`, in index order.
    pub fn names_of<'a>(&'a self, set: &'a IndexSet) -> impl Iterator<Item = &'a str> + 'a {
        set.iter().map(move |i| self.name(i))
    }

    pub(crate) fn check_set(&self, set: &IndexSet) -> Result<()> {
        match set.last() {
            Some(i) if i >= self.len() => Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            }),
            _ => Ok(()),
        }
    }
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Signature {}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

/// Checks that a user-facing constant name can round-trip through the script
/// language and the JSON format.
pub fn validate_name(name: &str) -> Result<()> {
    let bad = name.is_empty()
        || name.chars().any(|c| c.is_whitespace() || c == PRIME || c == '#' || c == ',')
        || name.contains("<=");
    if bad {
        Err(Error::InvalidConstantName(name.to_string()))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_signatures() {
        assert!(matches!(
            Signature::new(Vec::<String>::new()),
            Err(Error::EmptySignature)
        ));
        assert!(matches!(
            Signature::new(["a", "b", "a"]),
            Err(Error::DuplicateConstant(n)) if n == "a"
        ));
        for bad in ["c'", "a#", "x y", "", "p<=q", "u,v"] {
            assert!(
                matches!(Signature::new([bad]), Err(Error::InvalidConstantName(_))),
                "{bad:?} accepted"
            );
        }
    }

    #[test]
    fn generated_names_may_carry_primes() {
        let sig = Signature::from_generated(vec!["c".into(), "c'".into()]).unwrap();
        assert_eq!(sig.index_of("c'"), Some(1));
    }

    #[test]
    fn resolves_names() {
        let sig = Signature::new(["a", "b", "c"]).unwrap();
        assert_eq!(sig.resolve(["c", "a"]).unwrap().iter().collect::<Vec<_>>(), vec![0, 2]);
        assert!(matches!(sig.resolve(["z"]), Err(Error::UnknownConstant(n)) if n == "z"));
        assert_eq!(sig.all().len(), 3);
    }
}
