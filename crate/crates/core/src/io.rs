//! Serialization: the JSON model document, DOT Hasse diagrams, and the plain
//! text listings used by the script `show` statement.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::atom::Atom;
use crate::bits::IndexSet;
use crate::error::Result;
use crate::model::Model;
use crate::signature::Signature;

/// `{"constants": ["a","b"], "atoms": [["a"], ["a","b"]]}`; atoms are sorted
/// name lists in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelDocument {
    pub constants: Vec<String>,
    pub atoms: Vec<Vec<String>>,
}

impl ModelDocument {
    pub fn from_model(m: &Model) -> Self {
        let sig = m.signature();
        Self {
            constants: sig.names().to_vec(),
            atoms: m
                .atoms()
                .iter()
                .map(|a| sig.names_of(a.upper()).map(str::to_string).collect())
                .collect(),
        }
    }

    pub fn into_model(self) -> Result<Model> {
        let sig = Arc::new(Signature::new(self.constants)?);
        let atoms = self
            .atoms
            .iter()
            .map(|names| Atom::from_names(&sig, names.iter().map(String::as_str)))
            .collect::<Result<Vec<_>>>()?;
        Model::new(sig, atoms)
    }
}

pub fn model_to_json(m: &Model) -> String {
    serde_json::to_string(&ModelDocument::from_model(m)).expect("documents always serialize")
}

pub fn model_from_json(text: &str) -> Result<Model> {
    serde_json::from_str::<ModelDocument>(text)?.into_model()
}

/// One line per atom, in script syntax (`atom a b`).
pub fn atoms_text(m: &Model) -> String {
    let mut out = String::new();
    for a in m.atoms() {
        writeln!(out, "atom {}", a.display(m.signature())).unwrap();
    }
    out
}

/// One line per element: the representative, then every member term.
pub fn elements_text(m: &Model, cap: usize) -> Result<String> {
    let sig = m.signature();
    let mut out = String::new();
    for class in m.enumerate_elements(cap)? {
        let members: Vec<String> = class.members.iter().map(|t| t.display(sig).to_string()).collect();
        writeln!(out, "[{}] {}", class.representative.display(sig), members.join(" | ")).unwrap();
    }
    Ok(out)
}

/// The positive duples beyond plain term containment, one per line, after a
/// summary line.
pub fn theory_text(m: &Model, cap: usize) -> Result<String> {
    let sig = m.signature();
    let theory = m.enumerate_theory(cap)?;
    let positives = theory.positives();
    let extra: Vec<_> = positives
        .iter()
        .filter(|d| !d.left.comps().is_subset(d.right.comps()))
        .collect();
    let terms = (1usize << sig.len()) - 1;
    let mut out = String::new();
    writeln!(
        out,
        "# {} positive ({} beyond containment), {} negative",
        positives.len(),
        extra.len(),
        terms * terms - positives.len()
    )
    .unwrap();
    for d in extra {
        writeln!(out, "{}", d.display(sig)).unwrap();
    }
    Ok(out)
}

/// The Hasse diagram of the model's elements. Nodes are labelled by the
/// representative term; each node is annotated with the atoms that first
/// appear below it, i.e. those below it but below none of its lower covers.
pub fn to_dot(m: &Model, cap: usize) -> Result<String> {
    let sig = m.signature();
    let classes = m.enumerate_elements(cap)?;
    let segments: Vec<IndexSet> = classes
        .iter()
        .map(|c| m.segment_positions(&c.representative))
        .collect();
    let k = classes.len();

    let mut above: Vec<IndexSet> = vec![IndexSet::new(); k];
    let mut below: Vec<IndexSet> = vec![IndexSet::new(); k];
    for i in 0..k {
        for j in 0..k {
            if i != j && segments[i].is_strict_subset(&segments[j]) {
                above[i].insert(j);
                below[j].insert(i);
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in above[i].iter() {
            if !above[i].intersects(&below[j]) {
                edges.push((i, j));
            }
        }
    }

    let label = |i: usize| quote(&classes[i].representative.display(sig).to_string());
    let mut out = String::from("digraph {\n");
    for i in 0..k {
        let mut fresh = segments[i].clone();
        for &(lo, hi) in &edges {
            if hi == i {
                fresh.difference_with(&segments[lo]);
            }
        }
        if fresh.is_empty() {
            writeln!(out, "  {};", label(i)).unwrap();
        } else {
            let atoms: Vec<String> = fresh
                .iter()
                .map(|p| format!("{{{}}}", m.atoms()[p].display(sig)))
                .collect();
            writeln!(out, "  {} [xlabel={}];", label(i), quote(&atoms.join(" "))).unwrap();
        }
    }
    for (lo, hi) in edges {
        writeln!(out, "  {}->{};", label(lo), label(hi)).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::relation::DEFAULT_CAP;

    fn sig(names: &str) -> Arc<Signature> {
        Arc::new(Signature::new(names.split_whitespace()).unwrap())
    }

    #[test]
    fn json_round_trip() {
        let s = sig("a b c");
        let m = Model::new(
            s.clone(),
            [Atom::from_names(&s, ["c"]).unwrap(), Atom::zero(&s)],
        )
        .unwrap();
        let text = model_to_json(&m);
        assert_eq!(text, r#"{"constants":["a","b","c"],"atoms":[["c"],["a","b","c"]]}"#);
        assert_eq!(model_from_json(&text).unwrap(), m);
    }

    #[test]
    fn json_errors() {
        assert!(matches!(model_from_json("{"), Err(Error::Json(_))));
        assert!(matches!(
            model_from_json(r#"{"constants":["a"],"atoms":[["b"]]}"#),
            Err(Error::UnknownConstant(_))
        ));
        assert!(matches!(
            model_from_json(r#"{"constants":["a"],"atoms":[[]]}"#),
            Err(Error::EmptyAtom)
        ));
        assert!(matches!(
            model_from_json(r#"{"constants":[],"atoms":[]}"#),
            Err(Error::EmptySignature)
        ));
    }

    #[test]
    fn dot_of_free_model() {
        let m = Model::free(sig("a b"));
        let dot = to_dot(&m, DEFAULT_CAP).unwrap();
        assert_eq!(
            dot,
            "digraph {\n  \"a\" [xlabel=\"{a}\"];\n  \"b\" [xlabel=\"{b}\"];\n  \"a b\";\n  \"a\"->\"a b\";\n  \"b\"->\"a b\";\n}\n"
        );
    }

    #[test]
    fn dot_of_chain() {
        let s = sig("a b c");
        let m = Model::new(s.clone(), [Atom::from_names(&s, ["c"]).unwrap(), Atom::zero(&s)]).unwrap();
        let dot = to_dot(&m, DEFAULT_CAP).unwrap();
        assert!(dot.contains("\"a b\"->\"a b c\";"));
        assert_eq!(dot.matches("->").count(), 1);
    }

    #[test]
    fn listings() {
        let s = sig("a b");
        let m = Model::new(s.clone(), [Atom::from_names(&s, ["b"]).unwrap(), Atom::zero(&s)]).unwrap();
        assert_eq!(atoms_text(&m), "atom b\natom a b\n");
        assert_eq!(elements_text(&m, DEFAULT_CAP).unwrap(), "[a] a\n[a b] b | a b\n");
        let th = theory_text(&m, DEFAULT_CAP).unwrap();
        assert!(th.starts_with("# 7 positive (2 beyond containment), 2 negative\n"));
        assert!(th.contains("a <= b\n") && th.contains("a b <= b\n"));
    }
}
