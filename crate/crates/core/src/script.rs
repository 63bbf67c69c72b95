//! The line-oriented script language.
//!
//! ```text
//! # comment
//! constants a b c d e
//! atom b e
//! assert b <= a d
//! deny a <= c
//! show atoms | elements | theory
//! ```
//!
//! `constants` comes first and exactly once. A term is one or more constant
//! names; juxtaposition is summation. `atom` lines describe the starting
//! model (the free model when there are none) and must precede every
//! `assert`. Asserts are crossed in script order; denies are checked against
//! the final model.

use std::sync::Arc;

use crate::atom::{Atom, Duple, Term};
use crate::crossing::{full_crossing, ReducePolicy};
use crate::error::{Error, Result};
use crate::io;
use crate::model::Model;
use crate::signature::Signature;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Show {
    Atoms,
    Elements,
    Theory,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Atom(Atom),
    Assert(Duple),
    Deny(Duple),
    Show(Show),
}

#[derive(Clone, Debug)]
pub struct Script {
    pub sig: Arc<Signature>,
    /// Statements with their 1-based line numbers.
    pub statements: Vec<(usize, Statement)>,
}

impl Script {
    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.statements.iter().filter_map(|(_, s)| match s {
            Statement::Atom(a) => Some(a),
            _ => None,
        })
    }

    pub fn positives(&self) -> impl Iterator<Item = &Duple> {
        self.statements.iter().filter_map(|(_, s)| match s {
            Statement::Assert(d) => Some(d),
            _ => None,
        })
    }

    pub fn negatives(&self) -> impl Iterator<Item = &Duple> {
        self.statements.iter().filter_map(|(_, s)| match s {
            Statement::Deny(d) => Some(d),
            _ => None,
        })
    }

    /// The model described by the `atom` lines, or the free model.
    pub fn initial_model(&self) -> Result<Model> {
        let atoms: Vec<Atom> = self.atoms().cloned().collect();
        if atoms.is_empty() {
            Ok(Model::free(self.sig.clone()))
        } else {
            Model::new(self.sig.clone(), atoms)
        }
    }

    /// Runs the script: crosses every assert in order, renders each `show` at
    /// its position, and classifies the denies against the final model.
    pub fn evaluate(&self, policy: ReducePolicy, cap: usize) -> Result<Evaluation> {
        let mut model = self.initial_model()?;
        let mut output = String::new();
        for (_, statement) in &self.statements {
            match statement {
                Statement::Assert(d) => {
                    model = full_crossing(&model, d)?;
                    if policy == ReducePolicy::AfterEach {
                        model = model.reduce();
                    }
                }
                Statement::Show(what) => output.push_str(&match what {
                    Show::Atoms => io::atoms_text(&model),
                    Show::Elements => io::elements_text(&model, cap)?,
                    Show::Theory => io::theory_text(&model, cap)?,
                }),
                Statement::Atom(_) | Statement::Deny(_) => {}
            }
        }
        if policy == ReducePolicy::AtEnd {
            model = model.reduce();
        }
        let entailed = self
            .statements
            .iter()
            .filter_map(|(line, s)| match s {
                Statement::Deny(d) if model.holds(d) => Some((*line, d.clone())),
                _ => None,
            })
            .collect();
        Ok(Evaluation {
            model,
            output,
            entailed,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Evaluation {
    pub model: Model,
    /// Text produced by `show` statements.
    pub output: String,
    /// Denied duples that the asserts force to hold, with their lines.
    pub entailed: Vec<(usize, Duple)>,
}

pub fn parse_script(text: &str) -> Result<Script> {
    let mut sig: Option<Arc<Signature>> = None;
    let mut statements = Vec::new();
    let mut seen_assert = false;
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = match content.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (content, ""),
        };
        let parse_err = |message: String| Error::Parse { line, message };

        if keyword == "constants" {
            if sig.is_some() {
                return Err(parse_err("constants declared twice".into()));
            }
            if rest.is_empty() {
                return Err(parse_err("`constants` needs at least one name".into()));
            }
            let s = Signature::new(rest.split_whitespace()).map_err(|e| parse_err(e.to_string()))?;
            sig = Some(Arc::new(s));
            continue;
        }
        let Some(s) = sig.as_ref() else {
            return Err(parse_err(format!(
                "expected `constants` declaration before `{keyword}`"
            )));
        };

        let statement = match keyword {
            "atom" => {
                if seen_assert {
                    return Err(parse_err("`atom` lines must precede every `assert`".into()));
                }
                if rest.is_empty() {
                    return Err(parse_err("`atom` needs at least one constant".into()));
                }
                Statement::Atom(Atom::new(resolve(s, rest, line)?).expect("non-empty"))
            }
            "assert" => {
                seen_assert = true;
                Statement::Assert(duple(s, rest, line)?)
            }
            "deny" => Statement::Deny(duple(s, rest, line)?),
            "show" => Statement::Show(match rest {
                "atoms" => Show::Atoms,
                "elements" => Show::Elements,
                "theory" => Show::Theory,
                other => {
                    return Err(parse_err(format!(
                        "`show` expects atoms, elements or theory, found `{other}`"
                    )))
                }
            }),
            other => return Err(parse_err(format!("unknown statement `{other}`"))),
        };
        statements.push((line, statement));
    }

    match sig {
        Some(sig) => Ok(Script { sig, statements }),
        None => Err(Error::Parse {
            line: last_line.max(1),
            message: "missing `constants` declaration".into(),
        }),
    }
}

fn resolve(sig: &Signature, names: &str, line: usize) -> Result<crate::bits::IndexSet> {
    sig.resolve(names.split_whitespace()).map_err(|e| match e {
        Error::UnknownConstant(name) => Error::UndeclaredConstant { line, name },
        other => other,
    })
}

fn duple(sig: &Signature, text: &str, line: usize) -> Result<Duple> {
    let (l, r) = text.split_once("<=").ok_or_else(|| Error::Parse {
        line,
        message: format!("expected `<term> <= <term>`, found `{text}`"),
    })?;
    let side = |t: &str| -> Result<Term> {
        if t.trim().is_empty() {
            return Err(Error::Parse {
                line,
                message: "empty term".into(),
            });
        }
        Ok(Term::new(resolve(sig, t, line)?).expect("non-empty"))
    };
    Ok(Duple::new(side(l)?, side(r)?))
}
