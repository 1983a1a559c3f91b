//! Closed-form counts of relatively prime subsets.
//!
//! Every count here is a Möbius-weighted divisor sum: for each `d` in the
//! relevant divisor set the number of candidate sets whose elements are all
//! multiples of `d` is a power of two or a binomial coefficient, and
//! `sum mu(d) * that` leaves the sets whose gcd with the modulus is 1.
//!
//! [`Evaluator`] exposes each family together with its divisor-by-divisor
//! terms; the free functions at the bottom of this module are the plain
//! `Count`-returning entry points with default settings.

mod interval;
mod meet;
mod superset;
mod union;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::{self, binomial, pow2, signed_squarefree_divisors, Mobius};
use crate::types::{Cardinality, Count, ElementSet, Interval, Modulus, SplitUnion};

/// Largest exponent or binomial top argument a single term may carry.
pub const MAX_EXPONENT: u64 = 1 << 32;

/// Default cap on `#meet` for the meet families (the outer sum has
/// `2^#meet - 1` terms).
pub const DEFAULT_MEET_CAP: usize = 20;

/// Which divisors a Möbius sum iterates.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum DivisorScope {
    /// Only squarefree divisors; the rest have `mu(d) = 0`.
    #[default]
    Squarefree,
    /// Every divisor, with `mu` computed per divisor. Debug route.
    All,
}

/// How the meet families combine their per-subset superset counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum MeetMode {
    /// Unsigned sum over nonempty `X ⊆ A`, as printed. Counts a set meeting
    /// `A` in `j` elements `2^j - 1` times.
    PaperLiteral,
    /// Signed sum with `(-1)^(#X+1)`.
    #[default]
    InclusionExclusion,
}

impl MeetMode {
    pub fn name(self) -> &'static str {
        match self {
            MeetMode::PaperLiteral => "paper-literal",
            MeetMode::InclusionExclusion => "inclusion-exclusion",
        }
    }
}

impl std::str::FromStr for MeetMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "paper-literal" => Ok(MeetMode::PaperLiteral),
            "inclusion-exclusion" => Ok(MeetMode::InclusionExclusion),
            other => Err(format!(
                "unknown mode '{other}' (expected paper-literal or inclusion-exclusion)"
            )),
        }
    }
}

/// The quantity a divisor term counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermShape {
    /// `2^exponent`
    Power { exponent: u64 },
    /// `2^exponent - 1`
    PowerLessOne { exponent: u64 },
    /// `C(top, bottom)`
    Binomial { top: u64, bottom: i64 },
}

impl TermShape {
    fn value(self) -> Result<BigUint> {
        let size = match self {
            TermShape::Power { exponent } | TermShape::PowerLessOne { exponent } => exponent,
            TermShape::Binomial { top, .. } => top,
        };
        if size > MAX_EXPONENT {
            return Err(Error::ExponentTooLarge(size));
        }
        Ok(match self {
            TermShape::Power { exponent } => pow2(exponent),
            TermShape::PowerLessOne { exponent } => pow2(exponent) - 1u32,
            TermShape::Binomial { top, bottom } => binomial(top, bottom),
        })
    }
}

/// One summand `mu(d) * shape` of a divisor sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTerm {
    pub d: u64,
    pub mu: Mobius,
    pub shape: TermShape,
    /// Signed contribution `mu(d) * shape`.
    pub value: BigInt,
}

/// One summand of a meet sum: the superset count of `subset`, with sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetTerm {
    pub subset: ElementSet,
    pub sign: i8,
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Divisor(DivisorTerm),
    Subset(SubsetTerm),
}

/// A count together with how it was assembled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub count: Count,
    /// The divisor (or subset) sum before the empty-set correction.
    pub raw_sum: BigInt,
    /// True when 1 was subtracted because the sum also counted `X = ∅`
    /// (modulus 1 with no required elements).
    pub empty_set_corrected: bool,
    /// Summands, populated only when the evaluator records terms.
    pub terms: Vec<Term>,
}

impl Evaluation {
    fn zero() -> Self {
        Self {
            count: Count::zero(),
            raw_sum: BigInt::zero(),
            empty_set_corrected: false,
            terms: Vec::new(),
        }
    }
}

/// Positive and negative parts accumulated separately, so large sums never
/// repeatedly cross zero.
#[derive(Default)]
struct SignedAccumulator {
    positive: BigUint,
    negative: BigUint,
    terms: Vec<Term>,
}

impl SignedAccumulator {
    fn add(&mut self, negative: bool, magnitude: BigUint) {
        if negative {
            self.negative += magnitude;
        } else {
            self.positive += magnitude;
        }
    }

    fn raw(&self) -> BigInt {
        BigInt::from(self.positive.clone()) - BigInt::from(self.negative.clone())
    }

    fn finish(self, subtract_empty: bool) -> Result<Evaluation> {
        let raw_sum = self.raw();
        let mut negative = self.negative;
        if subtract_empty {
            negative += 1u32;
        }
        if negative > self.positive {
            return Err(Error::Internal(format!(
                "divisor sum went negative ({raw_sum}{})",
                if subtract_empty { " - 1" } else { "" }
            )));
        }
        Ok(Evaluation {
            count: Count::from(self.positive - negative),
            raw_sum,
            empty_set_corrected: subtract_empty,
            terms: self.terms,
        })
    }
}

fn signed(negative: bool, magnitude: &BigUint) -> BigInt {
    let sign = if magnitude.is_zero() {
        Sign::NoSign
    } else if negative {
        Sign::Minus
    } else {
        Sign::Plus
    };
    BigInt::from_biguint(sign, magnitude.clone())
}

/// Evaluates closed-form counts, optionally recording the summands.
#[derive(Debug, Clone)]
pub struct Evaluator {
    scope: DivisorScope,
    meet_cap: usize,
    record_terms: bool,
}

impl Default for Evaluator {
    fn default() -> Self {
        Self {
            scope: DivisorScope::Squarefree,
            meet_cap: DEFAULT_MEET_CAP,
            record_terms: false,
        }
    }
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_scope(mut self, scope: DivisorScope) -> Self {
        self.scope = scope;
        self
    }

    pub fn with_meet_cap(mut self, cap: usize) -> Self {
        self.meet_cap = cap;
        self
    }

    pub fn recording_terms(mut self, record: bool) -> Self {
        self.record_terms = record;
        self
    }

    pub fn scope(&self) -> DivisorScope {
        self.scope
    }

    pub fn meet_cap(&self) -> usize {
        self.meet_cap
    }

    /// `(d, mu(d))` for the divisors of `g` the scope iterates.
    fn divisors_of(&self, g: u64) -> Result<Vec<(u64, Mobius)>> {
        match self.scope {
            DivisorScope::Squarefree => signed_squarefree_divisors(g),
            DivisorScope::All => numtheory::divisors(g)?
                .iter()
                .map(|d| Ok((d, numtheory::mobius(d)?)))
                .collect(),
        }
    }

    /// `sum_{d | g} mu(d) * shape(d)`.
    fn divisor_sum<F>(&self, g: u64, shape: F) -> Result<SignedAccumulator>
    where
        F: Fn(u64) -> Result<TermShape>,
    {
        let divisors = self.divisors_of(g)?;
        self.sum_over(divisors.into_iter(), shape)
    }

    fn sum_over<I, F>(&self, divisors: I, shape: F) -> Result<SignedAccumulator>
    where
        I: Iterator<Item = (u64, Mobius)>,
        F: Fn(u64) -> Result<TermShape>,
    {
        let mut acc = SignedAccumulator::default();
        for (d, mu) in divisors {
            if mu.is_zero() {
                continue;
            }
            let shape = shape(d)?;
            let magnitude = shape.value()?;
            let negative = mu == Mobius::MinusOne;
            if self.record_terms {
                acc.terms.push(Term::Divisor(DivisorTerm {
                    d,
                    mu,
                    shape,
                    value: signed(negative, &magnitude),
                }));
            }
            acc.add(negative, magnitude);
        }
        Ok(acc)
    }
}

fn check_cardinality(k: Cardinality, min: u64, max: u64) -> Result<()> {
    let k = k.get();
    if k < min || k > max {
        return Err(Error::CardinalityOutOfRange { k, min, max });
    }
    Ok(())
}

/// `count - required`, treating a negative result as a divisor-set bug.
fn exponent_after_required(count: u64, required: usize, d: u64) -> Result<u64> {
    count.checked_sub(required as u64).ok_or_else(|| {
        Error::Internal(format!(
            "divisor {d} leaves {count} multiples for {required} required elements"
        ))
    })
}

pub fn phi_interval(range: Interval, n: Modulus) -> Result<Count> {
    Ok(Evaluator::new().phi_interval(range, n)?.count)
}

pub fn phi_k_interval(range: Interval, k: Cardinality, n: Modulus) -> Result<Count> {
    Ok(Evaluator::new().phi_k_interval(range, k, n)?.count)
}

pub fn f_interval(range: Interval) -> Result<Count> {
    Ok(Evaluator::new().f_interval(range)?.count)
}

pub fn f_k_interval(range: Interval, k: Cardinality) -> Result<Count> {
    Ok(Evaluator::new().f_k_interval(range, k)?.count)
}

pub fn psi(u: SplitUnion, n: Modulus) -> Result<Count> {
    Ok(Evaluator::new().psi(u, n)?.count)
}

pub fn psi_k(u: SplitUnion, k: Cardinality, n: Modulus) -> Result<Count> {
    Ok(Evaluator::new().psi_k(u, k, n)?.count)
}

pub fn phi_union(u: SplitUnion, n: Modulus) -> Result<Count> {
    Ok(Evaluator::new().phi_union(u, n)?.count)
}

pub fn phi_k_union(u: SplitUnion, k: Cardinality, n: Modulus) -> Result<Count> {
    Ok(Evaluator::new().phi_k_union(u, k, n)?.count)
}

pub fn epsilon_interval(avoid: Interval, n: Modulus) -> Result<Count> {
    Ok(Evaluator::new().epsilon_interval(avoid, n)?.count)
}

pub fn epsilon_k_interval(avoid: Interval, k: Cardinality, n: Modulus) -> Result<Count> {
    Ok(Evaluator::new().epsilon_k_interval(avoid, k, n)?.count)
}

pub fn superset_phi(base: &ElementSet, range: Interval, n: Modulus) -> Result<Count> {
    Ok(Evaluator::new().superset_phi(base, range, n)?.count)
}

pub fn superset_phi_k(
    base: &ElementSet,
    range: Interval,
    k: Cardinality,
    n: Modulus,
) -> Result<Count> {
    Ok(Evaluator::new().superset_phi_k(base, range, k, n)?.count)
}

pub fn superset_f(base: &ElementSet, range: Interval) -> Result<Count> {
    Ok(Evaluator::new().superset_f(base, range)?.count)
}

pub fn superset_f_k(base: &ElementSet, range: Interval, k: Cardinality) -> Result<Count> {
    Ok(Evaluator::new().superset_f_k(base, range, k)?.count)
}

pub fn meet_phi(meet: &ElementSet, range: Interval, n: Modulus, mode: MeetMode) -> Result<Count> {
    Ok(Evaluator::new().meet_phi(meet, range, n, mode)?.count)
}

pub fn meet_phi_k(
    meet: &ElementSet,
    range: Interval,
    k: Cardinality,
    n: Modulus,
    mode: MeetMode,
) -> Result<Count> {
    Ok(Evaluator::new().meet_phi_k(meet, range, k, n, mode)?.count)
}

pub fn meet_f(meet: &ElementSet, range: Interval, mode: MeetMode) -> Result<Count> {
    Ok(Evaluator::new().meet_f(meet, range, mode)?.count)
}

pub fn meet_f_k(
    meet: &ElementSet,
    range: Interval,
    k: Cardinality,
    mode: MeetMode,
) -> Result<Count> {
    Ok(Evaluator::new().meet_f_k(meet, range, k, mode)?.count)
}
