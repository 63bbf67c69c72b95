//! Full crossing: enforcing positive duples on a model.
//!
//! Crossing `r = (L, R)` replaces every atom that discriminates `r` (lies
//! below `L` but not below `R`) by its unions with each atom below `R`. The
//! result is the freest model of the old positive theory plus `L <= R`.

use std::collections::HashSet;
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::atom::{Atom, Duple};
use crate::bits::IndexSet;
use crate::error::Result;
use crate::model::Model;
use crate::signature::Signature;

/// When [`freest_model`] strips redundant atoms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ReducePolicy {
    /// After every crossing. Keeps atom counts near the minimum.
    #[default]
    AfterEach,
    /// Once, after the last crossing.
    AtEnd,
    /// Never; the result may carry redundant atoms.
    Never,
}

impl FromStr for ReducePolicy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "after_each" | "after-each" => Ok(Self::AfterEach),
            "at_end" | "at-end" => Ok(Self::AtEnd),
            "never" => Ok(Self::Never),
            other => Err(format!(
                "unknown reduce policy `{other}` (expected after_each, at_end or never)"
            )),
        }
    }
}

impl fmt::Display for ReducePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::AfterEach => "after_each",
            Self::AtEnd => "at_end",
            Self::Never => "never",
        })
    }
}

/// `□_r M`. Returns a clone of `m` when `r` already holds.
pub fn full_crossing(m: &Model, r: &Duple) -> Result<Model> {
    r.check(m.signature())?;
    let (hit, kept): (Vec<&Atom>, Vec<&Atom>) = m
        .atoms()
        .iter()
        .partition(|a| a.is_below(&r.left) && !a.is_below(&r.right));
    if hit.is_empty() {
        return Ok(m.clone());
    }
    let below_right: Vec<&Atom> = m.atoms().iter().filter(|a| a.is_below(&r.right)).collect();
    if m.signature().len() <= 64 {
        return Ok(cross_words(m, &kept, &hit, &below_right));
    }
    let mut atoms: Vec<Atom> = Vec::with_capacity(kept.len() + hit.len() * below_right.len());
    atoms.extend(kept.into_iter().cloned());
    for lambda in &hit {
        for rho in &below_right {
            atoms.push(lambda.union(rho));
        }
    }
    // Every constant below a discriminating atom stays covered by its unions,
    // and `below_right` is never empty because `r.right` has components.
    Ok(Model::from_covering(m.shared_signature().clone(), atoms))
}

/// [`full_crossing`] for signatures that fit in one word. The union grid
/// can be far larger than its set of distinct atoms, so unions are
/// deduplicated as they are produced.
fn cross_words(m: &Model, kept: &[&Atom], hit: &[&Atom], below_right: &[&Atom]) -> Model {
    let word = |a: &&Atom| a.upper().to_mask().expect("fits in a word");
    let right: Vec<u64> = below_right.iter().map(word).collect();
    let n = m.signature().len();
    let masks: Vec<u64> = if n <= DENSE_LIMIT {
        // One bit per possible atom.
        let mut seen = vec![0u64; (1usize << n).div_ceil(64)];
        let mut mark = |w: u64| seen[(w >> 6) as usize] |= 1 << (w & 63);
        kept.iter().map(word).for_each(&mut mark);
        for lambda in hit.iter().map(word) {
            for rho in &right {
                mark(lambda | rho);
            }
        }
        let mut out = Vec::new();
        for (i, &bits) in seen.iter().enumerate() {
            let mut bits = bits;
            while bits != 0 {
                out.push(((i as u64) << 6) | u64::from(bits.trailing_zeros()));
                bits &= bits - 1;
            }
        }
        out
    } else {
        let mut seen: HashSet<u64, BuildHasherDefault<MaskHasher>> = HashSet::default();
        seen.extend(kept.iter().map(word));
        for lambda in hit.iter().map(word) {
            seen.extend(right.iter().map(|rho| lambda | rho));
        }
        seen.into_iter().collect()
    };
    let atoms = masks
        .into_iter()
        .map(|w| Atom::new(IndexSet::from_mask(w)).expect("non-empty"))
        .collect();
    Model::from_covering(m.shared_signature().clone(), atoms)
}

/// Signatures up to this size deduplicate unions in a dense bitmap (2 MiB at most).
const DENSE_LIMIT: usize = 24;

/// Multiplicative hash for single-word atoms.
#[derive(Default)]
struct MaskHasher(u64);

impl Hasher for MaskHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for b in bytes {
            self.0 = (self.0.rotate_left(8) ^ u64::from(*b)).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        }
    }

    fn write_u64(&mut self, n: u64) {
        self.0 = (n ^ (n >> 29)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        self.0 ^= self.0 >> 32;
    }
}

/// Crosses every duple in order, reducing per `policy`.
pub fn cross_all<'a, I>(m: &Model, duples: I, policy: ReducePolicy) -> Result<Model>
where
    I: IntoIterator<Item = &'a Duple>,
{
    let mut current = m.clone();
    for r in duples {
        current = full_crossing(&current, r)?;
        if policy == ReducePolicy::AfterEach {
            current = current.reduce();
        }
        log::debug!("crossed {}: {} atoms", r.display(m.signature()), current.len());
    }
    if policy == ReducePolicy::AtEnd {
        current = current.reduce();
    }
    Ok(current)
}

/// The freest model over `sig` satisfying every duple in `positives`.
pub fn freest_model(
    sig: impl Into<Arc<Signature>>,
    positives: &[Duple],
    policy: ReducePolicy,
) -> Result<Model> {
    cross_all(&Model::free(sig), positives, policy)
}

/// How a negative sentence fares against a set of positives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// The freest model keeps the duple negative.
    Satisfiable,
    /// Every model of the positives satisfies the duple; denying it is inconsistent.
    EntailedPositive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Satisfiable => "SATISFIABLE",
            Self::EntailedPositive => "ENTAILED-POSITIVE",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ConsistencyReport {
    /// The freest model of the positives.
    pub model: Model,
    /// One verdict per negative, in input order.
    pub verdicts: Vec<(Duple, Verdict)>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| *v == Verdict::Satisfiable)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Duple> {
        self.verdicts
            .iter()
            .filter(|(_, v)| *v == Verdict::EntailedPositive)
            .map(|(d, _)| d)
    }
}

/// Decides which negatives survive the positives. A negative is satisfiable
/// iff it fails in the freest model, since every other model of the
/// positives satisfies at least the freest model's positive duples.
pub fn check_consistency(
    sig: impl Into<Arc<Signature>>,
    positives: &[Duple],
    negatives: &[Duple],
) -> Result<ConsistencyReport> {
    let sig = sig.into();
    for d in negatives {
        d.check(&sig)?;
    }
    let model = freest_model(sig, positives, ReducePolicy::AfterEach)?;
    let verdicts = negatives
        .iter()
        .map(|d| {
            let v = if model.holds(d) {
                Verdict::EntailedPositive
            } else {
                Verdict::Satisfiable
            };
            (d.clone(), v)
        })
        .collect();
    Ok(ConsistencyReport { model, verdicts })
}
