use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::atom::Atom;
use crate::bits::IndexSet;
use crate::error::{Error, Result};
use crate::model::Model;
use crate::signature::Signature;

/// Replacement of each source constant by a set of target constants.
///
/// Sources absent from `map`, like sources mapped to `[]`, are deleted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenameMap {
    pub map: BTreeMap<String, Vec<String>>,
    pub targets: Vec<String>,
}

impl RenameMap {
    /// Maps every constant of `sig` to itself.
    pub fn identity(sig: &Signature) -> Self {
        Self {
            map: sig.names().iter().map(|n| (n.clone(), vec![n.clone()])).collect(),
            targets: sig.names().to_vec(),
        }
    }
}

/// Applies `map` to every atom. Atoms whose image is empty disappear; a
/// target left without atoms gets the zero atom (with a warning).
pub fn rename(m: &Model, map: &RenameMap) -> Result<Model> {
    let target = Arc::new(Signature::new(map.targets.iter().cloned())?);
    let mut images = vec![IndexSet::new(); m.signature().len()];
    for (source, targets) in &map.map {
        let c = m
            .signature()
            .index_of(source)
            .ok_or_else(|| Error::UnknownSourceConstant(source.clone()))?;
        for t in targets {
            let g = target
                .index_of(t)
                .ok_or_else(|| Error::UnknownTargetConstant(t.clone()))?;
            images[c].insert(g);
        }
    }
    rename_indices(m, target, &images)
}

/// Index-level rename: constant `c` of `m` becomes `images[c]` in `target`.
pub(crate) fn rename_indices(m: &Model, target: Arc<Signature>, images: &[IndexSet]) -> Result<Model> {
    debug_assert_eq!(images.len(), m.signature().len());
    let atoms: Vec<Atom> = m
        .atoms()
        .iter()
        .filter_map(|a| {
            let mut upper = IndexSet::new();
            for c in a.upper() {
                upper.union_with(&images[c]);
            }
            Atom::new(upper).ok()
        })
        .collect();
    Model::new(target, atoms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(names: &str) -> Arc<Signature> {
        Arc::new(Signature::new(names.split_whitespace()).unwrap())
    }

    fn model(sig: &Arc<Signature>, atoms: &[&str]) -> Model {
        Model::new(
            sig.clone(),
            atoms
                .iter()
                .map(|a| Atom::from_names(sig, a.split_whitespace()).unwrap()),
        )
        .unwrap()
    }

    fn map(pairs: &[(&str, &[&str])], targets: &str) -> RenameMap {
        RenameMap {
            map: pairs
                .iter()
                .map(|(k, v)| (k.to_string(), v.iter().map(|s| s.to_string()).collect()))
                .collect(),
            targets: targets.split_whitespace().map(str::to_string).collect(),
        }
    }

    #[test]
    fn spreads_constants_over_targets() {
        let c = sig("c1 c2 c3");
        let m = Model::free(c.clone());
        let r = map(
            &[("c1", &["g1", "g3"]), ("c2", &["g2", "g4"]), ("c3", &["g3", "g4"])],
            "g1 g2 g3 g4",
        );
        let g = sig("g1 g2 g3 g4");
        assert_eq!(rename(&m, &r).unwrap(), model(&g, &["g1 g3", "g2 g4", "g3 g4"]));
    }

    #[test]
    fn identity_is_neutral() {
        let s = sig("a b c");
        let m = model(&s, &["c", "a b c"]);
        assert_eq!(rename(&m, &RenameMap::identity(&s)).unwrap(), m);
    }

    #[test]
    fn deleting_everything_is_rejected() {
        let s = sig("a b");
        let r = map(&[("a", &[]), ("b", &[])], "");
        assert!(matches!(rename(&Model::free(s), &r), Err(Error::EmptySignature)));
    }

    #[test]
    fn unknown_names() {
        let s = sig("a b");
        let m = Model::free(s);
        assert!(matches!(
            rename(&m, &map(&[("a", &["x"])], "y")),
            Err(Error::UnknownTargetConstant(n)) if n == "x"
        ));
        assert!(matches!(
            rename(&m, &map(&[("q", &["y"])], "y")),
            Err(Error::UnknownSourceConstant(n)) if n == "q"
        ));
    }

    #[test]
    fn missing_sources_are_deleted() {
        let s = sig("a b");
        let m = Model::free(s);
        let out = rename(&m, &map(&[("a", &["x"])], "x")).unwrap();
        assert_eq!(out, Model::free(sig("x")));
    }

    #[test]
    fn json_shape() {
        let r: RenameMap =
            serde_json::from_str(r#"{"map": {"c1": ["g1","g3"], "c3": []}, "targets": ["g1","g2","g3","g4"]}"#)
                .unwrap();
        assert_eq!(r.map["c3"], Vec::<String>::new());
        assert_eq!(r.targets.len(), 4);
    }
}
