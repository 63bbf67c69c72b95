//! Command-line front end. [`run`] is the whole program minus process setup,
//! so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 a check failed (an entailed `deny`, a failed
//! axiom, or an oracle disagreement), 2 usage, parse or operation error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::algebra::{self, RenameMap};
use crate::atom::{Duple, Term};
use crate::crossing::{check_consistency, ReducePolicy};
use crate::error::{Error, Result};
use crate::io::{self, ModelDocument};
use crate::model::Model;
use crate::oracle;
use crate::relation::DEFAULT_CAP;
use crate::script::{parse_script, Evaluation, Script};

#[derive(Debug, Parser)]
#[command(name = "atomized", version, about = "Build and transform atomized semilattice models")]
struct Cli {
    /// When to strip redundant atoms: after_each, at_end or never.
    #[arg(long, global = true, default_value = "after_each")]
    reduce: ReducePolicy,
    /// Largest signature whose terms may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Write the primary output here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a script and print the resulting model.
    Build { input: PathBuf },
    /// Drop redundant atoms.
    Reduce { input: PathBuf },
    /// Report whether `<term> <= <term>` holds: prints positive or negative.
    Query { input: PathBuf, duple: String },
    /// Restrict to a subset of the constants.
    Restrict {
        input: PathBuf,
        /// Constants to keep, comma- or space-separated.
        #[arg(long, required = true)]
        keep: String,
    },
    /// Rename constants by a JSON map (inline or a file path).
    Rename {
        input: PathBuf,
        #[arg(long)]
        map: String,
    },
    /// Identify two terms.
    Quotient { input: PathBuf, left: String, right: String },
    /// Freest model satisfying both models' positive theories.
    Join { left: PathBuf, right: PathBuf },
    /// Direct product over generator pairs `a:b`.
    Product {
        left: PathBuf,
        right: PathBuf,
        /// Name the generator (c, c) of a shared constant `c` just `c`.
        #[arg(long)]
        identify_diagonal: bool,
    },
    /// Subalgebra generated by terms.
    Subalgebra {
        input: PathBuf,
        /// Comma-separated generator terms, e.g. "c1,c2,c1 c3".
        #[arg(long)]
        gen: String,
        /// Names for the generators, comma- or space-separated.
        #[arg(long)]
        names: String,
    },
    /// Subdirect decomposition into two-element factors.
    Decompose { input: PathBuf },
    /// Embedding into a free model with one constant per atom.
    EmbedFree { input: PathBuf },
    /// Check denies and axioms, optionally against the brute-force oracles.
    Check {
        input: PathBuf,
        #[arg(long)]
        oracle: bool,
    },
    /// Serialize a model.
    Export {
        input: PathBuf,
        #[command(flatten)]
        format: ExportFormat,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ExportFormat {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    dot: bool,
}

/// A model file: either a JSON model document or a script.
struct Loaded {
    model: Model,
    script: Option<(Script, Evaluation)>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let finish = |m: Model| if cli.reduce == ReducePolicy::Never { m } else { m.reduce() };
    let mut primary: String;
    let mut code = 0;

    match &cli.command {
        Command::Build { input } => {
            let loaded = load(input, cli)?;
            if let Some((_, eval)) = &loaded.script {
                stdout.write_all(eval.output.as_bytes())?;
                code = report_entailed(eval, &loaded.model, stderr)?;
            }
            primary = io::model_to_json(&loaded.model);
        }
        Command::Reduce { input } => {
            primary = io::model_to_json(&load(input, cli)?.model.reduce());
        }
        Command::Query { input, duple } => {
            let m = load(input, cli)?.model;
            let d = Duple::parse(m.signature(), duple)?;
            primary = if m.holds(&d) { "positive" } else { "negative" }.to_string();
        }
        Command::Restrict { input, keep } => {
            let m = load(input, cli)?.model;
            primary = io::model_to_json(&finish(algebra::restrict_names(&m, split_names(keep))?));
        }
        Command::Rename { input, map } => {
            let m = load(input, cli)?.model;
            let text = if map.trim_start().starts_with('{') {
                map.clone()
            } else {
                fs::read_to_string(map)?
            };
            let map: RenameMap = serde_json::from_str(&text)?;
            primary = io::model_to_json(&finish(algebra::rename(&m, &map)?));
        }
        Command::Quotient { input, left, right } => {
            let m = load(input, cli)?.model;
            let (a, b) = (Term::parse(m.signature(), left)?, Term::parse(m.signature(), right)?);
            primary = io::model_to_json(&finish(algebra::quotient(&m, &a, &b)?));
        }
        Command::Join { left, right } => {
            let (m, n) = (load(left, cli)?.model, load(right, cli)?.model);
            primary = io::model_to_json(&algebra::join(&m, &n)?);
        }
        Command::Product {
            left,
            right,
            identify_diagonal,
        } => {
            let (m, n) = (load(left, cli)?.model, load(right, cli)?.model);
            primary = io::model_to_json(&finish(algebra::product(&m, &n, *identify_diagonal)?.model));
        }
        Command::Subalgebra { input, gen, names } => {
            let m = load(input, cli)?.model;
            let generators = gen
                .split(',')
                .map(|t| Term::parse(m.signature(), t))
                .collect::<Result<Vec<_>>>()?;
            let names: Vec<String> = split_names(names).map(str::to_string).collect();
            primary = io::model_to_json(&finish(algebra::subalgebra(&m, &generators, &names)?));
        }
        Command::Decompose { input } => {
            let m = load(input, cli)?.model;
            let d = algebra::subdirect_decomposition(&m)?;
            let sig = m.signature();
            let components: Vec<_> = d
                .components
                .iter()
                .map(|c| {
                    json!({
                        "atom": sig.names_of(c.atom.upper()).collect::<Vec<_>>(),
                        "top": c.top,
                        "bottom": c.bottom,
                    })
                })
                .collect();
            let tuples: Vec<_> = d
                .tuples
                .iter()
                .enumerate()
                .map(|(c, bits)| {
                    let coords: Vec<&str> = bits
                        .iter()
                        .zip(&d.components)
                        .map(|(top, comp)| if *top { comp.top.as_str() } else { comp.bottom.as_str() })
                        .collect();
                    json!({ "constant": sig.name(c), "coordinates": coords })
                })
                .collect();
            primary = json!({ "components": components, "tuples": tuples }).to_string();
        }
        Command::EmbedFree { input } => {
            let m = load(input, cli)?.model;
            let e = algebra::embed_in_free(&m)?;
            let generators: Vec<_> = e
                .terms
                .iter()
                .enumerate()
                .map(|(c, t)| {
                    json!({
                        "constant": m.signature().name(c),
                        "term": e.free.names_of(t.comps()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            primary = json!({ "free": e.free.names(), "generators": generators }).to_string();
        }
        Command::Check { input, oracle } => {
            let loaded = load(input, cli)?;
            let (text, failed) = check(&loaded, *oracle, cli.cap)?;
            primary = text;
            if failed {
                code = 1;
            }
        }
        Command::Export { input, format } => {
            let m = load(input, cli)?.model;
            primary = if format.dot {
                io::to_dot(&m, cli.cap)?
            } else {
                io::model_to_json(&m)
            };
        }
    }

    if !primary.ends_with('\n') {
        primary.push('\n');
    }
    match &cli.output {
        Some(path) => fs::write(path, primary)?,
        None => stdout.write_all(primary.as_bytes())?,
    }
    Ok(code)
}

fn load(path: &Path, cli: &Cli) -> Result<Loaded> {
    let text = fs::read_to_string(path)?;
    if let Ok(doc) = serde_json::from_str::<ModelDocument>(&text) {
        return Ok(Loaded {
            model: doc.into_model()?,
            script: None,
        });
    }
    if text.trim_start().starts_with('{') {
        // Looks like JSON but is not a model document: report the JSON error.
        serde_json::from_str::<ModelDocument>(&text)?;
    }
    let script = parse_script(&text)?;
    let eval = script.evaluate(cli.reduce, cli.cap)?;
    Ok(Loaded {
        model: eval.model.clone(),
        script: Some((script, eval)),
    })
}

fn report_entailed(eval: &Evaluation, m: &Model, stderr: &mut dyn Write) -> Result<i32> {
    for (line, d) in &eval.entailed {
        writeln!(
            stderr,
            "line {line}: deny {} is entailed by the asserts",
            d.display(m.signature())
        )?;
    }
    Ok(if eval.entailed.is_empty() { 0 } else { 1 })
}

/// Runs every available check; returns the report and whether anything failed.
fn check(loaded: &Loaded, with_oracle: bool, cap: usize) -> Result<(String, bool)> {
    let m = &loaded.model;
    let sig = m.signature();
    let mut out = String::new();
    let mut failed = false;

    if let Some((script, _)) = &loaded.script {
        let positives: Vec<Duple> = script.positives().cloned().collect();
        let negatives: Vec<Duple> = script.negatives().cloned().collect();
        if script.atoms().next().is_none() {
            let report = check_consistency(script.sig.clone(), &positives, &negatives)?;
            for (d, verdict) in &report.verdicts {
                out.push_str(&format!("deny {}: {verdict}\n", d.display(sig)));
            }
            failed |= !report.is_consistent();
        } else {
            for d in &negatives {
                let verdict = if m.holds(d) { "ENTAILED-POSITIVE" } else { "SATISFIABLE" };
                failed |= m.holds(d);
                out.push_str(&format!("deny {}: {verdict}\n", d.display(sig)));
            }
        }
    }

    match oracle::axiom_check(m, cap) {
        Ok(report) => {
            failed |= !report.passed();
            out.push_str(&report.to_string());
        }
        Err(Error::CapExceeded { .. }) => {
            out.push_str(&format!("axioms: skipped, {} constants exceed the cap of {cap}\n", sig.len()));
        }
        Err(e) => return Err(e),
    }

    if with_oracle {
        let theory = m.enumerate_theory(cap)?;
        // The oracle sees the starting model only through its positive duples.
        let mut positives: Vec<Duple> = match &loaded.script {
            Some((script, _)) if script.atoms().next().is_none() => Vec::new(),
            Some((script, _)) => script.initial_model()?.enumerate_theory(cap)?.positives(),
            None => theory.positives(),
        };
        if let Some((script, _)) = &loaded.script {
            positives.extend(script.positives().cloned());
        }
        let closure = oracle::closure_oracle(sig, &positives, cap)?;
        let agree = &closure == theory.relation();
        failed |= !agree;
        out.push_str(&format!("closure oracle: {}\n", if agree { "agree" } else { "DISAGREE" }));
        if sig.len() <= oracle::CONGRUENCE_CAP {
            let congruence = oracle::congruence_oracle(sig, &positives)?;
            let agree = &congruence == theory.relation();
            failed |= !agree;
            out.push_str(&format!("congruence oracle: {}\n", if agree { "agree" } else { "DISAGREE" }));
        }
    }
    Ok((out, failed))
}

fn split_names(text: &str) -> impl Iterator<Item = &str> {
    text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty())
}
