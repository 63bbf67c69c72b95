//! Binary relations over all terms of a small signature.
//!
//! Terms are addressed by bit mask: term `m` (a non-zero mask over the
//! constants) has row and column `m - 1`. With `n` constants there are
//! `2^n - 1` terms and the relation is stored as a dense bit matrix.

use crate::atom::{Duple, Term};
use crate::bits::IndexSet;
use crate::error::{Error, Result};

/// Hard ceiling on enumerable signatures regardless of the configured cap.
pub const MAX_ENUMERABLE: usize = 20;

/// Default enumeration cap for theory and element enumeration.
pub const DEFAULT_CAP: usize = 10;

pub(crate) fn check_cap(constants: usize, cap: usize) -> Result<()> {
    if constants > cap || constants > MAX_ENUMERABLE {
        Err(Error::CapExceeded {
            constants,
            cap: cap.min(MAX_ENUMERABLE),
        })
    } else {
        Ok(())
    }
}

/// Mask of a term; the caller guarantees the term fits in 64 constants.
pub(crate) fn mask_of(term: &Term) -> u64 {
    term.comps().to_mask().expect("enumerable terms fit in a word")
}

pub(crate) fn term_of(mask: u64) -> Term {
    Term::new(IndexSet::from_mask(mask)).expect("non-zero mask")
}

#[derive(Clone, PartialEq, Eq)]
pub struct TermRelation {
    constants: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl TermRelation {
    /// The empty relation over the terms of `constants` constants.
    pub fn empty(constants: usize) -> Self {
        assert!(constants <= MAX_ENUMERABLE, "signature too large to enumerate");
        let terms = (1usize << constants) - 1;
        let words_per_row = terms.div_ceil(64);
        Self {
            constants,
            words_per_row,
            bits: vec![0; terms * words_per_row],
        }
    }

    /// The containment order `C(s) ⊆ C(t)`, the order of the free semilattice.
    pub fn containment(constants: usize) -> Self {
        let mut rel = Self::empty(constants);
        for s in 1..=rel.top() {
            for t in 1..=rel.top() {
                if s & !t == 0 {
                    rel.insert(s, t);
                }
            }
        }
        rel
    }

    pub fn constants(&self) -> usize {
        self.constants
    }

    /// Number of terms.
    pub fn terms(&self) -> usize {
        (1usize << self.constants) - 1
    }

    /// Mask of the term containing every constant.
    pub fn top(&self) -> u64 {
        (1u64 << self.constants) - 1
    }

    pub fn contains(&self, left: u64, right: u64) -> bool {
        let (w, b) = self.slot(left, right);
        self.bits[w] & (1 << b) != 0
    }

    pub fn insert(&mut self, left: u64, right: u64) -> bool {
        let (w, b) = self.slot(left, right);
        let before = self.bits[w];
        self.bits[w] |= 1 << b;
        before != self.bits[w]
    }

    pub fn holds(&self, duple: &Duple) -> bool {
        self.contains(mask_of(&duple.left), mask_of(&duple.right))
    }

    /// Number of related pairs.
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|w| *w == 0)
    }

    /// Whether every pair of `self` is also in `other`.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.constants == other.constants
            && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Related pairs as term masks, row-major.
    pub fn pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let top = self.top();
        (1..=top).flat_map(move |l| (1..=top).filter(move |&r| self.contains(l, r)).map(move |r| (l, r)))
    }

    /// Pairs not in the relation.
    pub fn complement_pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let top = self.top();
        (1..=top).flat_map(move |l| (1..=top).filter(move |&r| !self.contains(l, r)).map(move |r| (l, r)))
    }

    /// Closes the relation under transitivity. Returns whether anything changed.
    pub(crate) fn close_transitive(&mut self) -> bool {
        let n = self.terms();
        let wpr = self.words_per_row;
        let mut changed = false;
        for k in 0..n {
            let (kw, kb) = (k / 64, k % 64);
            let row_k: Vec<u64> = self.bits[k * wpr..(k + 1) * wpr].to_vec();
            for i in 0..n {
                if self.bits[i * wpr + kw] & (1 << kb) != 0 {
                    let row_i = &mut self.bits[i * wpr..(i + 1) * wpr];
                    for (a, b) in row_i.iter_mut().zip(&row_k) {
                        let next = *a | *b;
                        changed |= next != *a;
                        *a = next;
                    }
                }
            }
        }
        changed
    }

    fn slot(&self, left: u64, right: u64) -> (usize, usize) {
        debug_assert!(left >= 1 && left <= self.top() && right >= 1 && right <= self.top());
        let row = (left - 1) as usize;
        let col = (right - 1) as usize;
        (row * self.words_per_row + col / 64, col % 64)
    }
}

impl std::fmt::Debug for TermRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TermRelation")
            .field("constants", &self.constants)
            .field("pairs", &self.len())
            .finish()
    }
}
