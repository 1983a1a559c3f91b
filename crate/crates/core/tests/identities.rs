mod common;

use common::*;
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::Rng;
use relprime_core::counting::{self, MeetMode};
use relprime_core::numtheory::{binomial, binomial_range_sum, radical};
use relprime_core::{Count, ElementSet};

#[test]
fn binomial_range_identity_small_grid() {
    for end in 0..=60u64 {
        for start in 0..=end {
            for lower in 0..=start {
                let literal: BigUint = (start..=end).map(|j| binomial(j, lower as i64)).sum();
                assert_eq!(binomial_range_sum(lower, start, end).unwrap(), literal);
            }
        }
    }
}

#[test]
fn telescoping_union_decomposition() {
    // Φ([1,m1] ∪ [l2,m2]) + Σ_{i=m1+1}^{l2-1} Ψ(m1, i, m2) = Φ([1,m2])
    for m2 in 2..=12 {
        for l2 in 2..=m2 {
            for m1 in 1..l2 {
                for nv in 1..=20 {
                    let mut total = counting::phi_union(su(m1, l2, m2), n(nv))
                        .unwrap()
                        .into_inner();
                    for i in m1 + 1..l2 {
                        total += counting::psi(su(m1, i, m2), n(nv)).unwrap().into_inner();
                    }
                    assert_eq!(
                        Count::from(total),
                        counting::phi_interval(iv(1, m2), n(nv)).unwrap(),
                        "m1={m1} l2={l2} m2={m2} n={nv}"
                    );
                }
            }
        }
    }
}

#[test]
fn epsilon_equals_union_over_complement() {
    for nv in 3..=20 {
        for m in 2..nv {
            for l in 2..=m {
                let eps = counting::epsilon_interval(iv(l, m), n(nv)).unwrap();
                let union = counting::phi_union(su(l - 1, m + 1, nv), n(nv)).unwrap();
                assert_eq!(eps, union, "[{l},{m}] n={nv}");
                for kv in 1..=nv {
                    assert_eq!(
                        counting::epsilon_k_interval(iv(l, m), k(kv), n(nv)).unwrap(),
                        counting::phi_k_union(su(l - 1, m + 1, nv), k(kv), n(nv)).unwrap()
                    );
                }
            }
        }
        // l = 1 leaves the single piece [m+1, n]
        for m in 1..nv {
            assert_eq!(
                counting::epsilon_interval(iv(1, m), n(nv)).unwrap(),
                counting::phi_interval(iv(m + 1, nv), n(nv)).unwrap()
            );
        }
    }
}

fn sum_counts(counts: impl Iterator<Item = Count>) -> Count {
    counts.sum()
}

#[test]
fn cardinality_partitions() {
    for m in 1..=12 {
        for l in 1..=m {
            let r = iv(l, m);
            for nv in [1, 2, 6, 7, 12, 30] {
                assert_eq!(
                    sum_counts((1..=r.len()).map(|kv| counting::phi_k_interval(r, k(kv), n(nv)).unwrap())),
                    counting::phi_interval(r, n(nv)).unwrap()
                );
            }
            assert_eq!(
                sum_counts((1..=r.len()).map(|kv| counting::f_k_interval(r, k(kv)).unwrap())),
                counting::f_interval(r).unwrap()
            );
        }
    }
    for m2 in 2..=10 {
        for l2 in 2..=m2 {
            for m1 in 1..l2 {
                let u = su(m1, l2, m2);
                for nv in [1, 4, 6, 15] {
                    assert_eq!(
                        sum_counts((1..=u.len()).map(|kv| counting::phi_k_union(u, k(kv), n(nv)).unwrap())),
                        counting::phi_union(u, n(nv)).unwrap()
                    );
                    assert_eq!(
                        sum_counts((1..=u.len()).map(|kv| counting::psi_k(u, k(kv), n(nv)).unwrap())),
                        counting::psi(u, n(nv)).unwrap()
                    );
                }
            }
        }
    }
    for nv in 2..=14 {
        for m in 1..nv {
            for l in 1..=m {
                assert_eq!(
                    sum_counts((1..=nv).map(|kv| counting::epsilon_k_interval(iv(l, m), k(kv), n(nv)).unwrap())),
                    counting::epsilon_interval(iv(l, m), n(nv)).unwrap()
                );
            }
        }
    }
    let mut rng = rng(99);
    for _ in 0..150 {
        let (r, a) = sample_range_and_subset(&mut rng, 12, 3);
        let nv = rng.random_range(1..=20);
        let lo = (a.len() as u64).max(1);
        assert_eq!(
            sum_counts((lo..=r.len()).map(|kv| counting::superset_phi_k(&a, r, k(kv), n(nv)).unwrap())),
            counting::superset_phi(&a, r, n(nv)).unwrap()
        );
        assert_eq!(
            sum_counts((lo..=r.len()).map(|kv| counting::superset_f_k(&a, r, k(kv)).unwrap())),
            counting::superset_f(&a, r).unwrap()
        );
        for mode in [MeetMode::InclusionExclusion, MeetMode::PaperLiteral] {
            assert_eq!(
                sum_counts((1..=r.len()).map(|kv| counting::meet_phi_k(&a, r, k(kv), n(nv), mode).unwrap())),
                counting::meet_phi(&a, r, n(nv), mode).unwrap()
            );
            assert_eq!(
                sum_counts((1..=r.len()).map(|kv| counting::meet_f_k(&a, r, k(kv), mode).unwrap())),
                counting::meet_f(&a, r, mode).unwrap()
            );
        }
    }
}

#[test]
fn meet_complement_identity() {
    let mut rng = rng(7);
    for _ in 0..200 {
        let (r, a) = sample_range_and_subset(&mut rng, 12, 4);
        let nv = rng.random_range(1..=20);
        let avoiding = direct_count(r, |x| {
            x.iter().all(|e| !a.contains(*e)) && x.iter().fold(nv, |g, &e| gcd(g, e)) == 1
        });
        let total = counting::phi_interval(r, n(nv)).unwrap().into_inner();
        let meet = counting::meet_phi(&a, r, n(nv), MeetMode::InclusionExclusion)
            .unwrap()
            .into_inner();
        assert_eq!(meet, total - BigUint::from(avoiding), "A={a} {r} n={nv}");
    }
}

#[test]
fn superset_of_empty_base_is_interval_count() {
    for m in 1..=12 {
        for l in 1..=m {
            let r = iv(l, m);
            for nv in 1..=12 {
                assert_eq!(
                    counting::superset_phi(&ElementSet::empty(), r, n(nv)).unwrap(),
                    counting::phi_interval(r, n(nv)).unwrap()
                );
            }
            assert_eq!(
                counting::superset_f(&ElementSet::empty(), r).unwrap(),
                counting::f_interval(r).unwrap()
            );
        }
    }
}

#[test]
fn meet_singleton_modes_coincide() {
    for m in 1..=10 {
        for l in 1..=m {
            for e in l..=m {
                let a = set(&[e]);
                for nv in [1, 2, 3, 10] {
                    let ie = counting::meet_phi(&a, iv(l, m), n(nv), MeetMode::InclusionExclusion);
                    let lit = counting::meet_phi(&a, iv(l, m), n(nv), MeetMode::PaperLiteral);
                    assert_eq!(ie, lit);
                    assert_eq!(ie.unwrap(), counting::superset_phi(&a, iv(l, m), n(nv)).unwrap());
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn phi_is_bounded_by_all_nonempty_subsets(l in 1u64..200, len in 1u64..200, nv in 1u64..10_000) {
        let r = iv(l, l + len - 1);
        let bound = (BigUint::from(1u32) << len) - 1u32;
        prop_assert!(counting::phi_interval(r, n(nv)).unwrap().into_inner() <= bound);
    }

    #[test]
    fn modulus_power_invariance(l in 1u64..60, len in 1u64..60, nv in 1u64..=100) {
        let r = iv(l, l + len - 1);
        let lifted = radical(nv).unwrap() * nv;
        prop_assert_eq!(
            counting::phi_interval(r, n(nv)).unwrap(),
            counting::phi_interval(r, n(lifted)).unwrap()
        );
        prop_assert_eq!(
            counting::phi_interval(r, n(nv)).unwrap(),
            counting::phi_interval(r, n(nv * nv)).unwrap()
        );
    }

    #[test]
    fn binomial_range_identity(lower in 0u64..120, extra in 0u64..120, span in 0u64..120) {
        let start = lower + extra;
        let end = start + span;
        let literal: BigUint = (start..=end).map(|j| binomial(j, lower as i64)).sum();
        prop_assert_eq!(binomial_range_sum(lower, start, end).unwrap(), literal);
    }
}
