mod common;

use atomized::crossing::cross_all;
use atomized::oracle::closure_oracle;
use atomized::{check_consistency, freest_model, full_crossing, Atom, Model, ReducePolicy, Verdict, DEFAULT_CAP};
use rand::seq::SliceRandom;
use rand::Rng;

use common::*;

const POLICIES: [ReducePolicy; 3] = [ReducePolicy::AfterEach, ReducePolicy::AtEnd, ReducePolicy::Never];

#[test]
fn crossing_a_negative_duple_makes_the_model_less_free() {
    let mut rng = rng(31);
    let mut crossed = 0;
    for _ in 0..300 {
        let n = rng.gen_range(2..=5);
        let s = sig(n);
        let count = rng.gen_range(1..=6);
        let m = random_model(&mut rng, &s, count);
        let r = duples(&mut rng, n, 1, n).remove(0);
        let c = full_crossing(&m, &r).unwrap();
        assert!(c.holds(&r));
        assert!(m.is_freer(&c).unwrap());
        if m.holds(&r) {
            assert_eq!(c, m);
        } else {
            crossed += 1;
            assert_ne!(theory(&c), theory(&m));
            assert!(theory(&m).is_subset(&theory(&c)));
        }
    }
    assert!(crossed >= 50, "only {crossed} negative duples drawn");
}

#[test]
fn crossing_order_does_not_matter() {
    let mut rng = rng(32);
    for _ in 0..200 {
        let n = rng.gen_range(2..=6);
        let k = rng.gen_range(2..=7);
        let mut ds = duples(&mut rng, n, k, 3);
        let first = freest_model(sig(n), &ds, ReducePolicy::AfterEach).unwrap();
        for _ in 0..3 {
            ds.shuffle(&mut rng);
            assert_eq!(freest_model(sig(n), &ds, ReducePolicy::AfterEach).unwrap(), first);
        }
    }
}

#[test]
fn atomizations_of_one_model_cross_alike() {
    let mut rng = rng(33);
    for _ in 0..200 {
        let n = rng.gen_range(2..=5);
        let s = sig(n);
        let count = rng.gen_range(1..=5);
        let m = random_model(&mut rng, &s, count);
        let mut padded = m.atoms().to_vec();
        for _ in 0..3 {
            let x = m.atoms().choose(&mut rng).unwrap();
            let y = m.atoms().choose(&mut rng).unwrap();
            padded.push(x.union(y));
        }
        let padded = Model::new(s.clone(), padded).unwrap();
        let r = duples(&mut rng, n, 1, n).remove(0);
        let a = full_crossing(&m.reduce(), &r).unwrap();
        let b = full_crossing(&padded, &r).unwrap();
        assert_eq!(theory(&a), theory(&b));
        assert_eq!(a.reduce(), b.reduce());
    }
}

#[test]
fn crossing_preserves_relative_freedom() {
    let mut rng = rng(34);
    let mut tested = 0;
    for _ in 0..300 {
        let n = rng.gen_range(2..=5);
        let s = sig(n);
        let count = rng.gen_range(1..=6);
        let m = random_model(&mut rng, &s, count);
        // A less free N: cross some extra duples into M.
        let k = rng.gen_range(0..=2);
        let extra = duples(&mut rng, n, k, n);
        let nm = cross_all(&m, &extra, ReducePolicy::AfterEach).unwrap();
        assert!(m.is_freer(&nm).unwrap());
        let r = duples(&mut rng, n, 1, n).remove(0);
        let (cm, cn) = (full_crossing(&m, &r).unwrap(), full_crossing(&nm, &r).unwrap());
        assert!(cm.is_freer(&cn).unwrap());
        tested += 1;
    }
    assert_eq!(tested, 300);
}

#[test]
fn freest_model_matches_the_closure_oracle() {
    let mut rng = rng(35);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let s = sig(n);
        let k = rng.gen_range(0..=6);
        let pos = duples(&mut rng, n, k, n);
        let m = freest_model(s.clone(), &pos, ReducePolicy::AfterEach).unwrap();
        assert_eq!(theory(&m), closure_oracle(&s, &pos, DEFAULT_CAP).unwrap());
    }
}

#[test]
fn reduce_policy_only_changes_the_atoms() {
    let mut rng = rng(36);
    for _ in 0..150 {
        let n = rng.gen_range(2..=6);
        let k = rng.gen_range(1..=6);
        let pos = duples(&mut rng, n, k, 3);
        let models: Vec<Model> = POLICIES
            .iter()
            .map(|&p| freest_model(sig(n), &pos, p).unwrap())
            .collect();
        let th = theory(&models[0]);
        for m in &models {
            assert_eq!(theory(m), th);
            assert_eq!(m.reduce(), models[0]);
        }
        assert_eq!(models[1], models[0]);
        assert!(models[2].len() >= models[0].len());
    }
}

#[test]
fn free_models_have_singleton_atoms() {
    for n in 1..=9 {
        let m = freest_model(sig(n), &[], ReducePolicy::AfterEach).unwrap();
        let singletons: Vec<Atom> = (0..n).map(|c| Atom::from_indices([c]).unwrap()).collect();
        assert_eq!(m.atoms(), singletons.as_slice());
    }
}

#[test]
fn consistency_report_classifies_negatives() {
    let s = named("a b c");
    let d = |t: &str| atomized::Duple::parse(&s, t).unwrap();
    let report = check_consistency(s.clone(), &[d("a <= b"), d("b <= c")], &[d("a <= c"), d("c <= a")]).unwrap();
    assert!(!report.is_consistent());
    assert_eq!(report.verdicts[0].1, Verdict::EntailedPositive);
    assert_eq!(report.verdicts[1].1, Verdict::Satisfiable);
    assert_eq!(report.failures().collect::<Vec<_>>(), vec![&d("a <= c")]);
}

#[test]
fn crossing_rejects_foreign_duples() {
    let m = Model::free(sig(2));
    let foreign = atomized::Duple::parse(&sig(3), "c2 <= c0").unwrap();
    assert!(matches!(full_crossing(&m, &foreign), Err(atomized::Error::SignatureMismatch)));
}

#[test]
fn twenty_constants_stay_fast_with_reduction() {
    let mut rng = rng(37);
    let pos = duples(&mut rng, 20, 60, 3);
    let started = std::time::Instant::now();
    let m = freest_model(sig(20), &pos, ReducePolicy::AfterEach).unwrap();
    assert!(started.elapsed() < std::time::Duration::from_secs(5));
    assert!(m.is_reduced());
    for d in &pos {
        assert!(m.holds(d));
    }
}
