mod common;

use common::*;
use rand::Rng;
use relprime_core::counting;
use relprime_core::{Count, ElementSet, MeetMode, Oracle, PredicateSpec, UniverseSpec};

fn profile_matches(formula: impl Fn(u64) -> Count, profile: &[u64], ctx: &str) {
    for (size, &expected) in profile.iter().enumerate().skip(1) {
        assert_eq!(formula(size as u64), expected, "{ctx} k={size}");
    }
}

#[test]
fn interval_families_match_oracle() {
    let oracle = Oracle::new();
    for m in 1..=14 {
        for l in 1..=m {
            let range = iv(l, m);
            let universe = UniverseSpec::interval(range);
            for nv in 1..=30 {
                let pred = PredicateSpec::coprime_to(n(nv));
                let ctx = format!("[{l},{m}] n={nv}");
                assert_eq!(
                    counting::phi_interval(range, n(nv)).unwrap(),
                    oracle.enumerate_count(&universe, &pred).unwrap(),
                    "{ctx}"
                );
                let profile = oracle.cardinality_profile(&universe, &pred).unwrap();
                profile_matches(
                    |kv| counting::phi_k_interval(range, k(kv), n(nv)).unwrap(),
                    &profile,
                    &ctx,
                );
            }
            let pred = PredicateSpec::gcd_one();
            assert_eq!(
                counting::f_interval(range).unwrap(),
                oracle.enumerate_count(&universe, &pred).unwrap()
            );
            let profile = oracle.cardinality_profile(&universe, &pred).unwrap();
            profile_matches(
                |kv| counting::f_k_interval(range, k(kv)).unwrap(),
                &profile,
                &format!("f [{l},{m}]"),
            );
        }
    }
}

#[test]
fn union_families_match_oracle() {
    let oracle = Oracle::new();
    for m2 in 2..=12 {
        for l2 in 2..=m2 {
            for m1 in 1..l2 {
                let u = su(m1, l2, m2);
                let universe = UniverseSpec::split_union(u);
                for nv in 1..=20 {
                    let ctx = format!("{u} n={nv}");
                    let pred = PredicateSpec::coprime_to(n(nv));
                    assert_eq!(
                        counting::phi_union(u, n(nv)).unwrap(),
                        oracle.enumerate_count(&universe, &pred).unwrap(),
                        "{ctx}"
                    );
                    let profile = oracle.cardinality_profile(&universe, &pred).unwrap();
                    profile_matches(
                        |kv| counting::phi_k_union(u, k(kv), n(nv)).unwrap(),
                        &profile,
                        &ctx,
                    );

                    let anchored = pred.containing(set(&[l2]));
                    assert_eq!(
                        counting::psi(u, n(nv)).unwrap(),
                        oracle.enumerate_count(&universe, &anchored).unwrap(),
                        "psi {ctx}"
                    );
                    let profile = oracle.cardinality_profile(&universe, &anchored).unwrap();
                    profile_matches(
                        |kv| counting::psi_k(u, k(kv), n(nv)).unwrap(),
                        &profile,
                        &format!("psi {ctx}"),
                    );
                }
            }
        }
    }
}

#[test]
fn epsilon_matches_oracle() {
    let oracle = Oracle::new();
    for nv in 2..=18 {
        let universe = UniverseSpec::interval(iv(1, nv));
        for m in 1..nv {
            for l in 1..=m {
                let avoid = iv(l, m);
                let pred = PredicateSpec::coprime_to(n(nv)).avoiding(ElementSet::from_interval(avoid));
                let ctx = format!("avoid {avoid} n={nv}");
                assert_eq!(
                    counting::epsilon_interval(avoid, n(nv)).unwrap(),
                    oracle.enumerate_count(&universe, &pred).unwrap(),
                    "{ctx}"
                );
                let profile = oracle.cardinality_profile(&universe, &pred).unwrap();
                profile_matches(
                    |kv| counting::epsilon_k_interval(avoid, k(kv), n(nv)).unwrap(),
                    &profile,
                    &ctx,
                );
            }
        }
    }
}

#[test]
fn superset_families_match_oracle() {
    let oracle = Oracle::new();
    let mut rng = rng(0x5eed_0004);
    for _ in 0..200 {
        let (range, base) = sample_range_and_subset(&mut rng, 14, 4);
        let nv = rng.random_range(1..=30);
        let universe = UniverseSpec::interval(range);
        let ctx = format!("base={base} range={range} n={nv}");

        let pred = PredicateSpec::coprime_to(n(nv)).containing(base.clone());
        assert_eq!(
            counting::superset_phi(&base, range, n(nv)).unwrap(),
            oracle.enumerate_count(&universe, &pred).unwrap(),
            "{ctx}"
        );
        let profile = oracle.cardinality_profile(&universe, &pred).unwrap();
        for kv in (base.len() as u64).max(1)..=range.len() {
            assert_eq!(
                counting::superset_phi_k(&base, range, k(kv), n(nv)).unwrap(),
                profile[kv as usize],
                "{ctx} k={kv}"
            );
        }

        let pred = PredicateSpec::gcd_one().containing(base.clone());
        assert_eq!(
            counting::superset_f(&base, range).unwrap(),
            oracle.enumerate_count(&universe, &pred).unwrap(),
            "f {ctx}"
        );
        let profile = oracle.cardinality_profile(&universe, &pred).unwrap();
        for kv in (base.len() as u64).max(1)..=range.len() {
            assert_eq!(
                counting::superset_f_k(&base, range, k(kv)).unwrap(),
                profile[kv as usize],
                "f {ctx} k={kv}"
            );
        }
    }
}

/// Number of nonempty subsets of `X ∩ A`, the multiplicity with which the
/// unsigned meet sum counts `X`.
fn literal_weight(x: &ElementSet, meet: &ElementSet) -> u64 {
    let shared = x.iter().filter(|&e| meet.contains(e)).count();
    (1u64 << shared) - 1
}

#[test]
fn meet_families_match_oracle() {
    let oracle = Oracle::new();
    let mut rng = rng(0x5eed_0005);
    let mut literal_differs = false;
    for _ in 0..200 {
        let (range, meet) = sample_range_and_subset(&mut rng, 12, 4);
        let nv = rng.random_range(1..=30);
        let universe = UniverseSpec::interval(range);
        let ctx = format!("meet={meet} range={range} n={nv}");

        for (pred, modulus) in [
            (PredicateSpec::coprime_to(n(nv)).meeting(meet.clone()), Some(n(nv))),
            (PredicateSpec::gcd_one().meeting(meet.clone()), None),
        ] {
            let count = |mode| match modulus {
                Some(nn) => counting::meet_phi(&meet, range, nn, mode).unwrap(),
                None => counting::meet_f(&meet, range, mode).unwrap(),
            };
            let count_k = |kv, mode| match modulus {
                Some(nn) => counting::meet_phi_k(&meet, range, k(kv), nn, mode).unwrap(),
                None => counting::meet_f_k(&meet, range, k(kv), mode).unwrap(),
            };

            let expected = oracle.enumerate_count(&universe, &pred).unwrap();
            assert_eq!(count(MeetMode::InclusionExclusion), expected, "{ctx}");
            let profile = oracle.cardinality_profile(&universe, &pred).unwrap();
            for kv in 1..=range.len() + 1 {
                let want = profile.get(kv as usize).copied().unwrap_or(0);
                assert_eq!(count_k(kv, MeetMode::InclusionExclusion), want, "{ctx} k={kv}");
            }

            // the unsigned sum counts each X once per nonempty subset of X ∩ A
            let witnesses = oracle.enumerate_witnesses(&universe, &pred, usize::MAX).unwrap();
            let weighted: u64 = witnesses.iter().map(|x| literal_weight(x, &meet)).sum();
            let literal = count(MeetMode::PaperLiteral);
            assert_eq!(literal, weighted, "literal {ctx}");
            for kv in 1..=range.len() {
                let weighted_k: u64 = witnesses
                    .iter()
                    .filter(|x| x.len() as u64 == kv)
                    .map(|x| literal_weight(x, &meet))
                    .sum();
                assert_eq!(count_k(kv, MeetMode::PaperLiteral), weighted_k, "literal {ctx} k={kv}");
            }
            if meet.len() >= 2 && literal != expected {
                assert!(literal > expected);
                literal_differs = true;
            }
        }
    }
    assert!(literal_differs, "the unsigned meet sum never over-counted");
}

#[test]
fn witness_list_length_equals_count() {
    let oracle = Oracle::new();
    let mut rng = rng(11);
    for _ in 0..60 {
        let (range, a) = sample_range_and_subset(&mut rng, 12, 3);
        let universe = UniverseSpec::interval(range);
        let nv = rng.random_range(1..=12);
        for pred in [
            PredicateSpec::coprime_to(n(nv)),
            PredicateSpec::gcd_one().meeting(a.clone()),
            PredicateSpec::coprime_to(n(nv)).avoiding(a.clone()),
            PredicateSpec::gcd_one().containing(a.clone()),
        ] {
            let all = oracle
                .enumerate_witnesses(&universe, &pred, 1 << universe.len())
                .unwrap();
            assert_eq!(oracle.enumerate_count(&universe, &pred).unwrap(), all.len() as u64);
        }
    }
}

#[test]
fn scaling_bijection() {
    // X ↦ cX maps subsets of U coprime to n onto the subsets of cU whose
    // gcd with cn is exactly c
    let oracle = Oracle::new();
    let mut rng = rng(23);
    for c in [2u64, 3] {
        for _ in 0..40 {
            let (_, u) = sample_range_and_subset(&mut rng, 20, 10);
            if u.is_empty() {
                continue;
            }
            let nv = rng.random_range(1..=20);
            let base = oracle
                .enumerate_count(&UniverseSpec::new(u.clone()), &PredicateSpec::coprime_to(n(nv)))
                .unwrap();
            let scaled = ElementSet::new(u.iter().map(|x| c * x).collect()).unwrap();
            let mut exact = 0u64;
            for mask in 1u64..(1 << scaled.len()) {
                let x = scaled.subset(mask);
                if x.iter().fold(c * nv, gcd) == c {
                    exact += 1;
                }
            }
            assert_eq!(base, exact, "c={c} U={u} n={nv}");
        }
    }
}

#[test]
fn oracle_is_deterministic_across_threads() {
    let universe = UniverseSpec::interval(iv(3, 20));
    let pred = PredicateSpec::coprime_to(n(30)).meeting(set(&[6, 7, 15]));
    let reference = Oracle::new().enumerate_witnesses(&universe, &pred, 500).unwrap();
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let (u, p) = (universe.clone(), pred.clone());
            std::thread::spawn(move || Oracle::new().enumerate_witnesses(&u, &p, 500).unwrap())
        })
        .collect();
    for h in handles {
        assert_eq!(h.join().unwrap(), reference);
    }
}
