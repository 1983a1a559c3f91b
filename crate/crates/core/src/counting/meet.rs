//! Sets meeting a fixed `A`, assembled from superset counts over the
//! nonempty subsets of `A`.

use num_bigint::BigInt;

use super::{Evaluation, Evaluator, MeetMode, SignedAccumulator, SubsetTerm, Term};
use crate::error::{Error, Result};
use crate::types::{Cardinality, ElementSet, Interval, Modulus};

impl Evaluator {
    /// `X ⊆ [l,m]` with `X ∩ meet ≠ ∅` and `gcd(X, n) = 1`.
    pub fn meet_phi(
        &self,
        meet: &ElementSet,
        range: Interval,
        n: Modulus,
        mode: MeetMode,
    ) -> Result<Evaluation> {
        self.meet_sum(meet, range, Some(n), None, mode)
    }

    /// As [`Evaluator::meet_phi`] with `#X = k`; only subsets of `meet` of
    /// size at most `k` contribute.
    pub fn meet_phi_k(
        &self,
        meet: &ElementSet,
        range: Interval,
        k: Cardinality,
        n: Modulus,
        mode: MeetMode,
    ) -> Result<Evaluation> {
        self.meet_sum(meet, range, Some(n), Some(k), mode)
    }

    /// `X ⊆ [l,m]` with `X ∩ meet ≠ ∅` and `gcd(X) = 1`.
    pub fn meet_f(&self, meet: &ElementSet, range: Interval, mode: MeetMode) -> Result<Evaluation> {
        self.meet_sum(meet, range, None, None, mode)
    }

    pub fn meet_f_k(
        &self,
        meet: &ElementSet,
        range: Interval,
        k: Cardinality,
        mode: MeetMode,
    ) -> Result<Evaluation> {
        self.meet_sum(meet, range, None, Some(k), mode)
    }

    fn meet_sum(
        &self,
        meet: &ElementSet,
        range: Interval,
        n: Option<Modulus>,
        k: Option<Cardinality>,
        mode: MeetMode,
    ) -> Result<Evaluation> {
        meet.ensure_within(range)?;
        if meet.len() > self.meet_cap {
            return Err(Error::MeetTooLarge {
                size: meet.len(),
                cap: self.meet_cap,
            });
        }
        if meet.is_empty() {
            return Ok(Evaluation::zero());
        }
        let quiet = self.clone().recording_terms(false);
        let mut acc = SignedAccumulator::default();
        for mask in 1u64..(1u64 << meet.len()) {
            let size = mask.count_ones() as u64;
            if k.is_some_and(|k| size > k.get()) {
                continue;
            }
            let subset = meet.subset(mask);
            let inner = quiet.superset_sum(&subset, range, n, k)?.finish(false)?;
            let magnitude = inner.count.into_inner();
            let negative = mode == MeetMode::InclusionExclusion && size.is_multiple_of(2);
            if self.record_terms {
                let value = BigInt::from(magnitude.clone());
                acc.terms.push(Term::Subset(SubsetTerm {
                    subset,
                    sign: if negative { -1 } else { 1 },
                    value: if negative { -value } else { value },
                }));
            }
            acc.add(negative, magnitude);
        }
        acc.finish(false)
    }
}
