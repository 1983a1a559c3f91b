#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relprime_core::{Cardinality, ElementSet, Interval, Modulus, SplitUnion};

pub fn iv(l: u64, m: u64) -> Interval {
    Interval::new(l, m).unwrap()
}

pub fn su(m1: u64, l2: u64, m2: u64) -> SplitUnion {
    SplitUnion::new(m1, l2, m2).unwrap()
}

pub fn n(v: u64) -> Modulus {
    Modulus::new(v).unwrap()
}

pub fn k(v: u64) -> Cardinality {
    Cardinality::new(v).unwrap()
}

pub fn set(v: &[u64]) -> ElementSet {
    ElementSet::new(v.to_vec()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random interval inside `[1, max_m]` and a random subset of it with at
/// most `max_size` elements.
pub fn sample_range_and_subset(rng: &mut ChaCha8Rng, max_m: u64, max_size: usize) -> (Interval, ElementSet) {
    let m = rng.random_range(1..=max_m);
    let l = rng.random_range(1..=m);
    let range = iv(l, m);
    let size = rng.random_range(0..=max_size.min(range.len() as usize));
    let mut pool: Vec<u64> = range.iter().collect();
    let mut chosen = Vec::with_capacity(size);
    for _ in 0..size {
        let i = rng.random_range(0..pool.len());
        chosen.push(pool.swap_remove(i));
    }
    (range, ElementSet::new(chosen).unwrap())
}

/// Every subset of `[l, m]` as an element list, for identities that need
/// a direct count independent of the library oracle.
pub fn direct_count(range: Interval, pred: impl Fn(&[u64]) -> bool) -> u64 {
    let elems: Vec<u64> = range.iter().collect();
    let mut count = 0;
    for mask in 1u64..(1 << elems.len()) {
        let x: Vec<u64> = (0..elems.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| elems[i])
            .collect();
        if pred(&x) {
            count += 1;
        }
    }
    count
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
