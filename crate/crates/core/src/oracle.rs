//! Brute-force reference semantics for small signatures.
//!
//! Nothing here uses atoms. [`closure_oracle`] derives the consequences of a
//! set of positive duples syntactically; [`congruence_oracle`] computes them
//! semantically, by intersecting every quotient of the free semilattice that
//! satisfies the duples. [`axiom_check`] tests a model's atom set directly
//! against the defining axioms.

use std::fmt;

use crate::atom::Duple;
use crate::bits::IndexSet;
use crate::error::Result;
use crate::model::Model;
use crate::relation::{self, check_cap, mask_of, TermRelation};
use crate::signature::Signature;

/// Largest signature the congruence oracle accepts: 3 constants, 7 terms.
pub const CONGRUENCE_CAP: usize = 3;

/// The least preorder on terms that contains term containment and the given
/// duples and is compatible with summation.
pub fn closure_oracle(sig: &Signature, positives: &[Duple], cap: usize) -> Result<TermRelation> {
    check_cap(sig.len(), cap)?;
    for d in positives {
        d.check(sig)?;
    }
    let n = sig.len();
    let mut rel = TermRelation::containment(n);
    for d in positives {
        rel.insert(mask_of(&d.left), mask_of(&d.right));
    }
    loop {
        let mut changed = rel.close_transitive();
        // Compatibility with summation: adding one constant at a time reaches
        // every `u` once iterated to a fixed point.
        let pairs: Vec<(u64, u64)> = rel.pairs().collect();
        for (s, t) in pairs {
            for c in 0..n {
                let u = 1u64 << c;
                changed |= rel.insert(s | u, t | u);
            }
        }
        if !changed {
            return Ok(rel);
        }
    }
}

/// `s <= t` iff `s ⊙ t` and `t` are identified by every congruence of the
/// free semilattice whose quotient satisfies `positives`.
pub fn congruence_oracle(sig: &Signature, positives: &[Duple]) -> Result<TermRelation> {
    check_cap(sig.len(), CONGRUENCE_CAP)?;
    for d in positives {
        d.check(sig)?;
    }
    let n = sig.len();
    let terms = (1usize << n) - 1;
    let required: Vec<(usize, usize)> = positives
        .iter()
        .map(|d| {
            let (l, r) = (mask_of(&d.left), mask_of(&d.right));
            ((l | r) as usize - 1, r as usize - 1)
        })
        .collect();

    // `together[s][t]` survives only while every admissible partition merges s and t.
    let mut together = vec![vec![true; terms]; terms];
    let mut block = vec![0usize; terms];
    let mut found = false;
    for_each_partition(&mut block, 0, 0, &mut |block| {
        if !is_congruence(block, n) || required.iter().any(|&(a, b)| block[a] != block[b]) {
            return;
        }
        found = true;
        for s in 0..terms {
            for t in 0..terms {
                if block[s] != block[t] {
                    together[s][t] = false;
                }
            }
        }
    });
    // The one-block partition always qualifies.
    debug_assert!(found);

    let mut rel = TermRelation::empty(n);
    for s in 1..=terms as u64 {
        for t in 1..=terms as u64 {
            if together[(s | t) as usize - 1][t as usize - 1] {
                rel.insert(s, t);
            }
        }
    }
    Ok(rel)
}

/// Visits every set partition as a restricted growth string.
fn for_each_partition(block: &mut [usize], at: usize, used: usize, visit: &mut impl FnMut(&[usize])) {
    if at == block.len() {
        visit(block);
        return;
    }
    for b in 0..=used {
        block[at] = b;
        for_each_partition(block, at + 1, used.max(b + 1), visit);
    }
}

fn is_congruence(block: &[usize], n: usize) -> bool {
    let terms = block.len();
    for s in 0..terms {
        for t in s + 1..terms {
            if block[s] != block[t] {
                continue;
            }
            for c in 0..n {
                let u = 1usize << c;
                let su = ((s + 1) | u) - 1;
                let tu = ((t + 1) | u) - 1;
                if block[su] != block[tu] {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// Every atom lies below some constant.
    AS1,
    /// Atoms are minimal; structural in this representation.
    AS2,
    /// The atom-defined order is the semilattice order of summation.
    AS3,
    /// An atom is below `s ⊙ t` iff it is below `s` or below `t`.
    AS4,
    /// No two atoms share an upper segment.
    AS5,
    /// Every constant has an atom below it.
    AS6,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomStatus {
    Pass,
    /// Guaranteed by the representation rather than checked.
    Structural,
    Fail(String),
}

impl AxiomStatus {
    pub fn is_ok(&self) -> bool {
        !matches!(self, AxiomStatus::Fail(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub results: Vec<(Axiom, AxiomStatus)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|(_, s)| s.is_ok())
    }

    pub fn status(&self, axiom: Axiom) -> &AxiomStatus {
        &self.results.iter().find(|(a, _)| *a == axiom).expect("all axioms reported").1
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (axiom, status) in &self.results {
            match status {
                AxiomStatus::Pass => writeln!(f, "{axiom:?} pass")?,
                AxiomStatus::Structural => writeln!(f, "{axiom:?} pass (structural)")?,
                AxiomStatus::Fail(why) => writeln!(f, "{axiom:?} FAIL: {why}")?,
            }
        }
        Ok(())
    }
}

/// Checks the atom set of `m` against each axiom, independently of how the
/// model was built.
pub fn axiom_check(m: &Model, cap: usize) -> Result<AxiomReport> {
    let sig = m.signature();
    let n = sig.len();
    check_cap(n, cap)?;
    let top = (1u64 << n) - 1;
    let all = sig.all();

    let as1 = match m.atoms().iter().position(|a| !a.upper().intersects(&all)) {
        None => AxiomStatus::Pass,
        Some(i) => AxiomStatus::Fail(format!("atom #{i} lies below no constant")),
    };

    // Segments computed directly from each term's components.
    let segment = |mask: u64| -> IndexSet {
        let comps = IndexSet::from_mask(mask);
        m.atoms()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.upper().intersects(&comps))
            .map(|(i, _)| i)
            .collect()
    };
    let segments: Vec<IndexSet> = (1..=top).map(segment).collect();
    let seg = |mask: u64| &segments[mask as usize - 1];
    let leq = |s: u64, t: u64| seg(s).is_subset(seg(t));

    // The atom order must be the order of summation: s <= t iff s ⊙ t = t,
    // where elements are equal when their segments are.
    let mut as3 = AxiomStatus::Pass;
    'order: for s in 1..=top {
        for t in 1..=top {
            if leq(s, t) != (seg(s | t) == seg(t)) {
                as3 = AxiomStatus::Fail(format!(
                    "atoms order {} against {} differently from their sum",
                    name(sig, s),
                    name(sig, t)
                ));
                break 'order;
            }
        }
    }

    let mut as4 = AxiomStatus::Pass;
    'linear: for s in 1..=top {
        for t in s..=top {
            if *seg(s | t) != seg(s).union(seg(t)) {
                as4 = AxiomStatus::Fail(format!(
                    "segment of {} is not the union of the segments of {} and {}",
                    name(sig, s | t),
                    name(sig, s),
                    name(sig, t)
                ));
                break 'linear;
            }
        }
    }

    let mut as5 = AxiomStatus::Pass;
    let mut seen = std::collections::HashSet::new();
    for a in m.atoms() {
        if !seen.insert(a.upper()) {
            as5 = AxiomStatus::Fail(format!("atom {{{}}} appears twice", a.display(sig)));
            break;
        }
    }

    let mut covered = IndexSet::new();
    for a in m.atoms() {
        covered.union_with(a.upper());
    }
    let missing = all.difference(&covered);
    let as6 = if missing.is_empty() {
        AxiomStatus::Pass
    } else {
        AxiomStatus::Fail(format!(
            "no atom below {}",
            sig.names_of(&missing).collect::<Vec<_>>().join(", ")
        ))
    };

    Ok(AxiomReport {
        results: vec![
            (Axiom::AS1, as1),
            (Axiom::AS2, AxiomStatus::Structural),
            (Axiom::AS3, as3),
            (Axiom::AS4, as4),
            (Axiom::AS5, as5),
            (Axiom::AS6, as6),
        ],
    })
}

fn name(sig: &Signature, mask: u64) -> String {
    relation::term_of(mask).display(sig).to_string()
}
