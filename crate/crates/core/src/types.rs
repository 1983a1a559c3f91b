use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{Natural, MAX_MODULUS};

/// The integer range `[l, m] = {l, l+1, ..., m}` with `1 <= l <= m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    l: u64,
    m: u64,
}

impl Interval {
    pub fn new(l: u64, m: u64) -> Result<Self> {
        if l == 0 || l > m {
            return Err(Error::InvalidInterval { l, m });
        }
        Ok(Self { l, m })
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn len(&self) -> u64 {
        self.m - self.l + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: u64) -> bool {
        self.l <= x && x <= self.m
    }

    /// Number of multiples of `d` in the interval: `floor(m/d) - floor((l-1)/d)`.
    pub fn multiples_of(&self, d: u64) -> u64 {
        self.m / d - (self.l - 1) / d
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<u64> {
        self.l..=self.m
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.l, self.m)
    }
}

/// The two-piece universe `[1, m1] ∪ [l2, m2]` with `1 <= m1 < l2 <= m2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplitUnion {
    m1: u64,
    l2: u64,
    m2: u64,
}

impl SplitUnion {
    pub fn new(m1: u64, l2: u64, m2: u64) -> Result<Self> {
        if !(1 <= m1 && m1 < l2 && l2 <= m2) {
            return Err(Error::InvalidSplitUnion { m1, l2, m2 });
        }
        Ok(Self { m1, l2, m2 })
    }

    pub fn m1(&self) -> u64 {
        self.m1
    }

    pub fn l2(&self) -> u64 {
        self.l2
    }

    pub fn m2(&self) -> u64 {
        self.m2
    }

    pub fn len(&self) -> u64 {
        self.m1 + self.m2 - self.l2 + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn multiples_of(&self, d: u64) -> u64 {
        self.m1 / d + self.m2 / d - (self.l2 - 1) / d
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> {
        (1..=self.m1).chain(self.l2..=self.m2)
    }
}

impl fmt::Display for SplitUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[1,{}]u[{},{}]", self.m1, self.l2, self.m2)
    }
}

/// A finite set of positive integers, kept sorted and duplicate-free.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    elements: Vec<u64>,
}

impl ElementSet {
    /// Sorts and deduplicates; rejects zero.
    pub fn new(mut elements: Vec<u64>) -> Result<Self> {
        if elements.contains(&0) {
            return Err(Error::NonPositiveElement);
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(Self { elements })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_interval(range: Interval) -> Self {
        Self {
            elements: range.iter().collect(),
        }
    }

    pub fn from_split_union(u: SplitUnion) -> Self {
        Self {
            elements: u.iter().collect(),
        }
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements.iter().copied()
    }

    pub fn is_within(&self, range: Interval) -> bool {
        self.elements.iter().all(|&x| range.contains(x))
    }

    /// The subset selected by the low bits of `mask` (bit i = i-th smallest).
    pub fn subset(&self, mask: u64) -> ElementSet {
        Self {
            elements: self
                .elements
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect(),
        }
    }

    pub(crate) fn ensure_within(&self, range: Interval) -> Result<()> {
        if self.is_within(range) {
            Ok(())
        } else {
            Err(Error::NotContained {
                set: self.joined(","),
                l: range.l(),
                m: range.m(),
            })
        }
    }

    pub fn joined(&self, sep: &str) -> String {
        self.elements
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.joined(","))
    }
}

impl TryFrom<Vec<u64>> for ElementSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl<const N: usize> TryFrom<[u64; N]> for ElementSet {
    type Error = Error;

    fn try_from(v: [u64; N]) -> Result<Self> {
        Self::new(v.to_vec())
    }
}

/// Exact result of a counting formula.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Count(Natural);

impl Count {
    pub fn zero() -> Self {
        Self(Natural::zero())
    }

    pub fn value(&self) -> &Natural {
        &self.0
    }

    pub fn into_inner(self) -> Natural {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<Natural> for Count {
    fn from(v: Natural) -> Self {
        Self(v)
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl PartialEq<u64> for Count {
    fn eq(&self, other: &u64) -> bool {
        self.0.to_u64() == Some(*other)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl std::iter::Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Self {
        Self(iter.map(|c| c.0).sum())
    }
}

/// The `n` of "relatively prime to n".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Zero { what: "modulus n" });
        }
        if n > MAX_MODULUS {
            return Err(Error::ModulusTooLarge(n));
        }
        Ok(Self(n))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<u64> for Modulus {
    type Error = Error;

    fn try_from(n: u64) -> Result<Self> {
        Self::new(n)
    }
}

/// A fixed subset size `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cardinality(u64);

impl Cardinality {
    pub fn new(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::Zero { what: "cardinality k" });
        }
        Ok(Self(k))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<u64> for Cardinality {
    type Error = Error;

    fn try_from(k: u64) -> Result<Self> {
        Self::new(k)
    }
}
