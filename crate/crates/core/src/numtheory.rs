//! Exact integer primitives: Möbius function, divisor enumeration, gcd
//! folding and arbitrary-precision powers of two and binomial coefficients.

use std::fmt;
use std::ops::Index;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Natural = BigUint;

/// Largest modulus accepted by the factorization routines.
pub const MAX_MODULUS: u64 = (1 << 63) - 1;

/// Default memory cap for [`mobius_sieve`], in entries.
pub const DEFAULT_SIEVE_CAP: u64 = 1 << 28;

/// Value of the Möbius function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(i8)]
pub enum Mobius {
    MinusOne = -1,
    Zero = 0,
    One = 1,
}

impl Mobius {
    pub fn value(self) -> i8 {
        self as i8
    }

    pub fn is_zero(self) -> bool {
        self == Mobius::Zero
    }

    fn from_parity(odd: bool) -> Self {
        if odd {
            Mobius::MinusOne
        } else {
            Mobius::One
        }
    }

    fn negate(self) -> Self {
        match self {
            Mobius::MinusOne => Mobius::One,
            Mobius::Zero => Mobius::Zero,
            Mobius::One => Mobius::MinusOne,
        }
    }
}

impl fmt::Display for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

fn check_positive(n: u64, what: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::Zero { what });
    }
    if n > MAX_MODULUS {
        return Err(Error::ModulusTooLarge(n));
    }
    Ok(())
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing prime order.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    check_positive(n, "n")?;
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut exp = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                exp += 1;
            }
            factors.push((p, exp));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(factors)
}

pub fn mobius(n: u64) -> Result<Mobius> {
    let factors = factorize(n)?;
    if factors.iter().any(|&(_, e)| e > 1) {
        return Ok(Mobius::Zero);
    }
    Ok(Mobius::from_parity(factors.len() % 2 == 1))
}

/// Product of the distinct primes dividing `n`.
pub fn radical(n: u64) -> Result<u64> {
    Ok(factorize(n)?.iter().map(|&(p, _)| p).product())
}

/// Möbius values for `1..=limit`, indexed from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusTable {
    values: Vec<Mobius>,
}

impl MobiusTable {
    /// Number of entries, equal to the sieve limit.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `mobius(i)` for `1 <= i <= len()`.
    pub fn get(&self, i: u64) -> Option<Mobius> {
        let idx = usize::try_from(i).ok()?.checked_sub(1)?;
        self.values.get(idx).copied()
    }

    pub fn as_slice(&self) -> &[Mobius] {
        &self.values
    }

    /// `(i, mobius(i))` pairs for every `i` with nonzero Möbius value.
    pub fn squarefree(&self) -> impl Iterator<Item = (u64, Mobius)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, mu)| !mu.is_zero())
            .map(|(i, &mu)| (i as u64 + 1, mu))
    }
}

impl Index<usize> for MobiusTable {
    type Output = Mobius;

    /// 1-based indexing.
    fn index(&self, i: usize) -> &Mobius {
        &self.values[i - 1]
    }
}

pub fn mobius_sieve(limit: u64) -> Result<MobiusTable> {
    mobius_sieve_with_cap(limit, DEFAULT_SIEVE_CAP)
}

/// Linear sieve for μ over `1..=limit`.
pub fn mobius_sieve_with_cap(limit: u64, cap: u64) -> Result<MobiusTable> {
    if limit == 0 {
        return Err(Error::Zero { what: "sieve limit" });
    }
    if limit > cap {
        return Err(Error::SieveTooLarge { limit, cap });
    }
    let n = limit as usize;
    let mut mu = vec![Mobius::Zero; n + 1];
    let mut composite = vec![false; n + 1];
    let mut primes: Vec<usize> = Vec::new();
    mu[1] = Mobius::One;
    for i in 2..=n {
        if !composite[i] {
            primes.push(i);
            mu[i] = Mobius::MinusOne;
        }
        for &p in &primes {
            let Some(ip) = i.checked_mul(p).filter(|&ip| ip <= n) else {
                break;
            };
            composite[ip] = true;
            if i % p == 0 {
                mu[ip] = Mobius::Zero;
                break;
            }
            mu[ip] = mu[i].negate();
        }
    }
    mu.remove(0);
    Ok(MobiusTable { values: mu })
}

/// The positive divisors of a modulus in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorList {
    modulus: u64,
    divisors: Vec<u64>,
}

impl DivisorList {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.divisors
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.divisors.iter().copied()
    }
}

impl<'a> IntoIterator for &'a DivisorList {
    type Item = &'a u64;
    type IntoIter = std::slice::Iter<'a, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.divisors.iter()
    }
}

fn expand_divisors(factors: &[(u64, u32)]) -> Vec<u64> {
    let mut out = vec![1u64];
    for &(p, e) in factors {
        let len = out.len();
        let mut power = 1u64;
        for _ in 0..e {
            power *= p;
            for i in 0..len {
                out.push(out[i] * power);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn divisors(n: u64) -> Result<DivisorList> {
    let factors = factorize(n)?;
    Ok(DivisorList {
        modulus: n,
        divisors: expand_divisors(&factors),
    })
}

/// Divisors `d` of `n` with `mobius(d) != 0`, i.e. the divisors of the
/// radical of `n`.
pub fn squarefree_divisors(n: u64) -> Result<DivisorList> {
    let factors: Vec<_> = factorize(n)?.into_iter().map(|(p, _)| (p, 1)).collect();
    Ok(DivisorList {
        modulus: n,
        divisors: expand_divisors(&factors),
    })
}

/// Squarefree divisors of `n` paired with their Möbius values. Computed from
/// the factorization, so no per-divisor trial division is needed.
pub(crate) fn signed_squarefree_divisors(n: u64) -> Result<Vec<(u64, Mobius)>> {
    let primes: Vec<u64> = factorize(n)?.into_iter().map(|(p, _)| p).collect();
    let mut out = vec![(1u64, Mobius::One)];
    for p in primes {
        let len = out.len();
        for i in 0..len {
            let (d, mu) = out[i];
            out.push((d * p, mu.negate()));
        }
    }
    out.sort_unstable_by_key(|&(d, _)| d);
    Ok(out)
}

/// gcd of `values` together with `seed`; a zero seed contributes nothing.
pub fn gcd_fold<I>(values: I, seed: u64) -> Result<u64>
where
    I: IntoIterator<Item = u64>,
{
    let g = values.into_iter().fold(seed, |acc, v| acc.gcd(&v));
    if g == 0 {
        Err(Error::GcdUndefined)
    } else {
        Ok(g)
    }
}

pub fn floor_div(a: u64, d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::Zero { what: "divisor" });
    }
    Ok(a / d)
}

/// `2^e` as an arbitrary-precision integer.
pub fn pow2(e: u64) -> Natural {
    Natural::one() << e
}

/// Below this many factors the multiplicative recurrence beats factoring.
const BINOMIAL_FACTOR_THRESHOLD: u64 = 256;
/// Above this top argument the prime sieve for the factored form gets too big.
const BINOMIAL_SIEVE_LIMIT: u64 = 1 << 26;

/// Binomial coefficient, total: zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> Natural {
    if k < 0 || k as u64 > n {
        return Natural::zero();
    }
    let k = (k as u64).min(n - k as u64);
    if k == 0 {
        return Natural::one();
    }
    if k < BINOMIAL_FACTOR_THRESHOLD || n > BINOMIAL_SIEVE_LIMIT {
        binomial_multiplicative(n, k)
    } else {
        binomial_factored(n, k)
    }
}

fn binomial_multiplicative(n: u64, k: u64) -> Natural {
    let mut acc = Natural::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Exponent of each prime in C(n, k) by Legendre's formula, multiplied out
/// with a balanced product tree.
fn binomial_factored(n: u64, k: u64) -> Natural {
    let limit = n as usize;
    let mut composite = vec![false; limit + 1];
    let mut chunks: Vec<u64> = Vec::new();
    let mut chunk = 1u64;
    for p in 2..=limit {
        if composite[p] {
            continue;
        }
        let mut multiple = p * p;
        while multiple <= limit {
            composite[multiple] = true;
            multiple += p;
        }
        let p = p as u64;
        let mut exp = 0u64;
        let mut power = p;
        loop {
            exp += n / power - k / power - (n - k) / power;
            match power.checked_mul(p) {
                Some(next) if next <= n => power = next,
                _ => break,
            }
        }
        for _ in 0..exp {
            match chunk.checked_mul(p) {
                Some(c) => chunk = c,
                None => {
                    chunks.push(chunk);
                    chunk = p;
                }
            }
        }
    }
    chunks.push(chunk);
    product_tree(chunks.into_iter().map(Natural::from).collect())
}

fn product_tree(mut level: Vec<Natural>) -> Natural {
    if level.is_empty() {
        return Natural::one();
    }
    while level.len() > 1 {
        let mut next = Vec::with_capacity(level.len().div_ceil(2));
        let mut it = level.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a * b),
                None => next.push(a),
            }
        }
        level = next;
    }
    level.pop().unwrap_or_else(Natural::one)
}

/// `sum_{j=start..=end} C(j, lower)` via the closed form
/// `C(end+1, lower+1) - C(start, lower+1)`.
pub fn binomial_range_sum(lower: u64, start: u64, end: u64) -> Result<Natural> {
    if !(lower <= start && start <= end) {
        return Err(Error::BinomialRange { lower, start, end });
    }
    let top = binomial(end + 1, (lower + 1) as i64);
    let cut = binomial(start, (lower + 1) as i64);
    Ok(top - cut)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_mobius(n: u64) -> i8 {
        let mut rest = n;
        let mut sign = 1i8;
        let mut p = 2;
        while rest > 1 {
            if rest.is_multiple_of(p) {
                rest /= p;
                if rest.is_multiple_of(p) {
                    return 0;
                }
                sign = -sign;
            }
            p += 1;
        }
        sign
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1).unwrap(), Mobius::One);
        assert_eq!(mobius(6).unwrap(), Mobius::One);
        assert_eq!(mobius(12).unwrap(), Mobius::Zero);
        assert_eq!(mobius(0), Err(Error::Zero { what: "n" }));
        assert_eq!(mobius(1 << 63), Err(Error::ModulusTooLarge(1 << 63)));
    }

    #[test]
    fn mobius_large_prime() {
        // 2^61 - 1 is a Mersenne prime
        assert_eq!(mobius((1 << 61) - 1).unwrap(), Mobius::MinusOne);
        assert_eq!(radical(1 << 40).unwrap(), 2);
    }

    #[test]
    fn sieve_examples() {
        let t = mobius_sieve(1).unwrap();
        assert_eq!(t.as_slice(), &[Mobius::One]);
        let t = mobius_sieve(4).unwrap();
        let v: Vec<i8> = t.as_slice().iter().map(|m| m.value()).collect();
        assert_eq!(v, [1, -1, -1, 0]);
        assert_eq!(mobius_sieve(10).unwrap()[10], Mobius::One);
        assert!(mobius_sieve(0).is_err());
        assert_eq!(
            mobius_sieve_with_cap(100, 10),
            Err(Error::SieveTooLarge { limit: 100, cap: 10 })
        );
    }

    #[test]
    fn sieve_matches_trial_division() {
        let t = mobius_sieve(10_000).unwrap();
        for i in 1..=10_000u64 {
            assert_eq!(t.get(i).unwrap().value(), trial_mobius(i), "i={i}");
            assert_eq!(t.get(i).unwrap(), mobius(i).unwrap());
        }
        assert_eq!(t.get(0), None);
        assert_eq!(t.get(10_001), None);
    }

    #[test]
    fn mobius_multiplicative_and_divisor_sum() {
        let t = mobius_sieve(10_000).unwrap();
        for n in 1..=10_000u64 {
            let s: i64 = divisors(n)
                .unwrap()
                .iter()
                .map(|d| t.get(d).unwrap().value() as i64)
                .sum();
            assert_eq!(s, if n == 1 { 1 } else { 0 }, "n={n}");
        }
        let wide = mobius_sieve(300 * 300).unwrap();
        for a in 1..=300u64 {
            for b in 1..=300u64 {
                if a.gcd(&b) == 1 {
                    assert_eq!(
                        wide.get(a * b).unwrap().value(),
                        wide.get(a).unwrap().value() * wide.get(b).unwrap().value()
                    );
                }
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn mobius_is_multiplicative(a in 1u64..=10_000, b in 1u64..=10_000) {
            proptest::prop_assume!(a.gcd(&b) == 1);
            let lhs = mobius(a * b).unwrap().value();
            let rhs = mobius(a).unwrap().value() * mobius(b).unwrap().value();
            proptest::prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1).unwrap().as_slice(), &[1]);
        assert_eq!(divisors(12).unwrap().as_slice(), &[1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(7).unwrap().as_slice(), &[1, 7]);
        assert_eq!(squarefree_divisors(12).unwrap().as_slice(), &[1, 2, 3, 6]);
        assert_eq!(squarefree_divisors(1).unwrap().as_slice(), &[1]);
        assert_eq!(squarefree_divisors(9).unwrap().as_slice(), &[1, 3]);
        assert!(divisors(0).is_err());
        assert!(squarefree_divisors(0).is_err());
    }

    #[test]
    fn divisors_brute_force() {
        let t = mobius_sieve(10_000).unwrap();
        for n in 1..=10_000u64 {
            let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            let list = divisors(n).unwrap();
            assert_eq!(list.as_slice(), brute.as_slice());
            let sf: Vec<u64> = brute
                .iter()
                .copied()
                .filter(|&d| !t.get(d).unwrap().is_zero())
                .collect();
            assert_eq!(squarefree_divisors(n).unwrap().as_slice(), sf.as_slice());
            let signed: Vec<(u64, Mobius)> = sf.iter().map(|&d| (d, t.get(d).unwrap())).collect();
            assert_eq!(signed_squarefree_divisors(n).unwrap(), signed);
        }
    }

    #[test]
    fn gcd_fold_examples() {
        assert_eq!(gcd_fold([4, 6], 0), Ok(2));
        assert_eq!(gcd_fold([4, 6], 9), Ok(1));
        assert_eq!(gcd_fold([], 5), Ok(5));
        assert_eq!(gcd_fold([], 0), Err(Error::GcdUndefined));
    }

    #[test]
    fn floor_div_examples() {
        assert_eq!(floor_div(7, 2), Ok(3));
        assert_eq!(floor_div(0, 5), Ok(0));
        assert_eq!(floor_div(12, 4), Ok(3));
        assert!(floor_div(1, 0).is_err());
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), Natural::from(10u32));
        assert_eq!(binomial(3, 5), Natural::zero());
        assert_eq!(binomial(0, 0), Natural::one());
        assert_eq!(binomial(4, -1), Natural::zero());
    }

    #[test]
    fn binomial_paths_agree() {
        for n in [256u64, 300, 1000, 4097] {
            for k in [256u64, 257, 400, n / 2] {
                if k <= n {
                    assert_eq!(binomial_factored(n, k), binomial_multiplicative(n, k), "C({n},{k})");
                }
            }
        }
    }

    #[test]
    fn binomial_pascal_rows() {
        let mut row = vec![Natural::one()];
        for n in 1..=80u64 {
            let mut next = vec![Natural::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k as i64), v);
            }
        }
    }

    #[test]
    fn binomial_range_sum_examples() {
        assert_eq!(binomial_range_sum(1, 1, 3).unwrap(), Natural::from(6u32));
        assert_eq!(binomial_range_sum(0, 0, 4).unwrap(), Natural::from(5u32));
        assert_eq!(binomial_range_sum(2, 2, 2).unwrap(), Natural::one());
        assert!(binomial_range_sum(3, 2, 5).is_err());
        assert!(binomial_range_sum(1, 4, 3).is_err());
    }

    #[test]
    fn binomial_range_sum_matches_literal_sum() {
        for n in 0..=60u64 {
            for m in 0..=n {
                for l in 0..=m {
                    let literal: Natural = (m..=n).map(|j| binomial(j, l as i64)).sum();
                    assert_eq!(binomial_range_sum(l, m, n).unwrap(), literal);
                }
            }
        }
    }
}
