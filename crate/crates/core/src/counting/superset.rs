//! Supersets of a fixed base `A` inside `[l, m]`.

use num_integer::Integer;

use super::{
    check_cardinality, exponent_after_required, Evaluation, Evaluator, SignedAccumulator,
    TermShape,
};
use crate::error::Result;
use crate::numtheory::gcd_fold;
use crate::types::{Cardinality, ElementSet, Interval, Modulus};

impl Evaluator {
    /// `X` with `base ⊆ X ⊆ [l,m]`, `X ≠ ∅` and `gcd(X, n) = 1`.
    pub fn superset_phi(&self, base: &ElementSet, range: Interval, n: Modulus) -> Result<Evaluation> {
        base.ensure_within(range)?;
        if base.is_empty() {
            return self.phi_interval(range, n);
        }
        self.superset_sum(base, range, Some(n), None)?.finish(false)
    }

    /// As [`Evaluator::superset_phi`] with `#X = k`, for `#base <= k <= m-l+1`.
    pub fn superset_phi_k(
        &self,
        base: &ElementSet,
        range: Interval,
        k: Cardinality,
        n: Modulus,
    ) -> Result<Evaluation> {
        base.ensure_within(range)?;
        check_cardinality(k, base.len() as u64, range.len())?;
        if base.is_empty() {
            return self.phi_k_interval(range, k, n);
        }
        self.superset_sum(base, range, Some(n), Some(k))?.finish(false)
    }

    /// `X` with `base ⊆ X ⊆ [l,m]`, `X ≠ ∅` and `gcd(X) = 1`.
    pub fn superset_f(&self, base: &ElementSet, range: Interval) -> Result<Evaluation> {
        base.ensure_within(range)?;
        if base.is_empty() {
            return self.f_interval(range);
        }
        self.superset_sum(base, range, None, None)?.finish(false)
    }

    pub fn superset_f_k(&self, base: &ElementSet, range: Interval, k: Cardinality) -> Result<Evaluation> {
        base.ensure_within(range)?;
        check_cardinality(k, base.len() as u64, range.len())?;
        if base.is_empty() {
            return self.f_k_interval(range, k);
        }
        self.superset_sum(base, range, None, Some(k))?.finish(false)
    }

    /// Divisor sum over `d | gcd(base ∪ {n})` (or `d | gcd(base)` without a
    /// modulus). `base` must be nonempty and inside `range`; `k` below
    /// `#base` or above the range size yields zero.
    pub(super) fn superset_sum(
        &self,
        base: &ElementSet,
        range: Interval,
        n: Option<Modulus>,
        k: Option<Cardinality>,
    ) -> Result<SignedAccumulator> {
        let mut g = gcd_fold(base.iter(), 0)?;
        if let Some(n) = n {
            g = g.gcd(&n.get());
        }
        let required = base.len();
        self.divisor_sum(g, |d| {
            let free = exponent_after_required(range.multiples_of(d), required, d)?;
            Ok(match k {
                None => TermShape::Power { exponent: free },
                Some(k) => TermShape::Binomial {
                    top: free,
                    bottom: k.get() as i64 - required as i64,
                },
            })
        })
    }
}
