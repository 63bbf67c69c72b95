mod common;

use std::sync::Arc;

use atomized::{Atom, Duple, IndexSet, Model, Signature, Term, DEFAULT_CAP};
use proptest::prelude::*;

use common::*;

/// A signature of 1..=5 constants with 1..=7 random atoms.
fn arb_model() -> impl Strategy<Value = Model> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1 << n), 1..=7).prop_map(move |masks| {
            Model::new(sig(n), masks.into_iter().map(|w| Atom::new(IndexSet::from_mask(w)).unwrap())).unwrap()
        })
    })
}

fn arb_pair() -> impl Strategy<Value = (Model, Model)> {
    (1usize..=4).prop_flat_map(|n| {
        let atoms = || prop::collection::vec(1u64..(1 << n), 1..=6);
        (atoms(), atoms()).prop_map(move |(a, b)| {
            let s = sig(n);
            let build = |ms: Vec<u64>| {
                Model::new(s.clone(), ms.into_iter().map(|w| Atom::new(IndexSet::from_mask(w)).unwrap())).unwrap()
            };
            (build(a), build(b))
        })
    })
}

fn all_terms(n: usize) -> impl Iterator<Item = Term> {
    (1u64..(1 << n)).map(|w| Term::new(IndexSet::from_mask(w)).unwrap())
}

fn segment(m: &Model, t: &Term) -> Vec<Atom> {
    m.lower_segment(t)
}

proptest! {
    #[test]
    fn segments_are_linear(m in arb_model()) {
        let n = m.signature().len();
        for s in all_terms(n) {
            for t in all_terms(n) {
                let mut expected = segment(&m, &s);
                expected.extend(segment(&m, &t));
                expected.sort();
                expected.dedup();
                let mut got = segment(&m, &s.join(&t));
                got.sort();
                prop_assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn order_is_segment_inclusion(m in arb_model()) {
        let n = m.signature().len();
        for s in all_terms(n) {
            let ss = segment(&m, &s);
            for t in all_terms(n) {
                let ts = segment(&m, &t);
                let included = ss.iter().all(|a| ts.contains(a));
                prop_assert_eq!(m.holds(&Duple::new(s.clone(), t.clone())), included);
            }
        }
    }

    #[test]
    fn reduce_is_idempotent_and_keeps_the_theory(m in arb_model()) {
        let r = m.reduce();
        prop_assert!(r.is_reduced());
        prop_assert_eq!(r.reduce(), r.clone());
        prop_assert_eq!(theory(&r), theory(&m));
    }

    #[test]
    fn redundant_padding_reduces_to_the_same_atoms(m in arb_model(), picks in prop::collection::vec((0usize..7, 0usize..7), 1..5)) {
        let atoms = m.atoms();
        let mut padded = atoms.to_vec();
        for (i, j) in picks {
            padded.push(atoms[i % atoms.len()].union(&atoms[j % atoms.len()]));
        }
        let padded = Model::new(m.shared_signature().clone(), padded).unwrap();
        prop_assert_eq!(theory(&padded), theory(&m));
        prop_assert_eq!(padded.reduce(), m.reduce());
    }

    #[test]
    fn equal_theories_have_equal_reductions((a, b) in arb_pair()) {
        if theory(&a) == theory(&b) {
            prop_assert_eq!(a.reduce(), b.reduce());
        }
    }

    #[test]
    fn zero_atom_changes_nothing(m in arb_model()) {
        let mut atoms = m.atoms().to_vec();
        atoms.push(Atom::zero(m.signature()));
        let with_zero = Model::new(m.shared_signature().clone(), atoms).unwrap();
        prop_assert_eq!(theory(&with_zero), theory(&m));
    }

    #[test]
    fn freedom_is_inclusion_of_negatives((a, b) in arb_pair()) {
        let ta = a.enumerate_theory(DEFAULT_CAP).unwrap();
        let tb = b.enumerate_theory(DEFAULT_CAP).unwrap();
        let negatives_included = tb.negatives().iter().all(|d| !ta.is_positive(d));
        prop_assert_eq!(a.is_freer(&b).unwrap(), negatives_included);
    }

    #[test]
    fn non_redundant_atoms_are_pinned(m in arb_model()) {
        let r = m.reduce();
        let sig = r.signature();
        for phi in r.atoms().iter().filter(|a| !a.is_zero(sig)) {
            let (_, duples) = phi.pinning(sig).unwrap();
            let pinned = duples.iter().any(|d| {
                r.discriminant(&d.duple.left, &d.duple.right) == vec![phi.clone()]
            });
            prop_assert!(pinned, "{:?} in {:?}", phi, atom_names(&r));
        }
    }

    #[test]
    fn enumerated_theory_agrees_with_holds(m in arb_model()) {
        let th = m.enumerate_theory(DEFAULT_CAP).unwrap();
        for d in th.positives() {
            prop_assert!(m.holds(&d));
        }
        for d in th.negatives() {
            prop_assert!(!m.holds(&d));
        }
    }
}

#[test]
fn elements_partition_every_term() {
    let mut rng = rng(21);
    for _ in 0..50 {
        let s = sig(4);
        let m = random_model(&mut rng, &s, 4);
        let classes = m.enumerate_elements(DEFAULT_CAP).unwrap();
        let members: usize = classes.iter().map(|c| c.members.len()).sum();
        assert_eq!(members, 15);
        for c in &classes {
            for t in &c.members {
                let d = Duple::new(t.clone(), c.representative.clone());
                assert!(m.holds(&d) && m.holds(&d.reversed()));
            }
        }
    }
}

#[test]
fn enumeration_refuses_large_signatures() {
    let big: Arc<Signature> = sig(12);
    let m = Model::free(big);
    assert!(matches!(
        m.enumerate_theory(DEFAULT_CAP),
        Err(atomized::Error::CapExceeded { constants: 12, cap: 10 })
    ));
    assert!(m.enumerate_elements(12).is_ok());
    let huge = Model::free(sig(21));
    assert!(matches!(
        huge.enumerate_theory(64),
        Err(atomized::Error::CapExceeded { constants: 21, cap: 20 })
    ));
}
