//! Counts over the split union `[1, m1] ∪ [l2, m2]`, the anchored counts
//! Ψ that telescope into it, and the block-avoiding counts over `[1, n]`.

use num_integer::Integer;

use super::{Evaluation, Evaluator, TermShape};
use crate::error::{Error, Result};
use crate::types::{Cardinality, Interval, Modulus, SplitUnion};

impl Evaluator {
    /// `X ⊆ [1,m1] ∪ [l2,m2]` with `l2 ∈ X` and `gcd(X, n) = 1`.
    ///
    /// Only `d | gcd(l2, n)` can divide every element of such an `X`; the
    /// exponent counts the multiples of `d` other than `l2` itself.
    pub fn psi(&self, u: SplitUnion, n: Modulus) -> Result<Evaluation> {
        let acc = self.divisor_sum(u.l2().gcd(&n.get()), |d| {
            Ok(TermShape::Power {
                exponent: anchored_exponent(u, d),
            })
        })?;
        acc.finish(false)
    }

    pub fn psi_k(&self, u: SplitUnion, k: Cardinality, n: Modulus) -> Result<Evaluation> {
        let acc = self.divisor_sum(u.l2().gcd(&n.get()), |d| {
            Ok(TermShape::Binomial {
                top: anchored_exponent(u, d),
                bottom: k.get() as i64 - 1,
            })
        })?;
        acc.finish(false)
    }

    /// Nonempty `X ⊆ [1,m1] ∪ [l2,m2]` with `gcd(X, n) = 1`.
    pub fn phi_union(&self, u: SplitUnion, n: Modulus) -> Result<Evaluation> {
        let acc = self.divisor_sum(n.get(), |d| {
            Ok(TermShape::Power {
                exponent: u.multiples_of(d),
            })
        })?;
        acc.finish(n.get() == 1)
    }

    pub fn phi_k_union(&self, u: SplitUnion, k: Cardinality, n: Modulus) -> Result<Evaluation> {
        let acc = self.divisor_sum(n.get(), |d| {
            Ok(TermShape::Binomial {
                top: u.multiples_of(d),
                bottom: k.get() as i64,
            })
        })?;
        acc.finish(false)
    }

    /// Nonempty `X ⊆ [1,n]` with `X ∩ [l,m] = ∅` and `gcd(X, n) = 1`.
    /// Requires `m < n`, so `n >= 2` and the empty set never qualifies.
    pub fn epsilon_interval(&self, avoid: Interval, n: Modulus) -> Result<Evaluation> {
        check_below_modulus(avoid, n)?;
        let acc = self.divisor_sum(n.get(), |d| {
            Ok(TermShape::Power {
                exponent: avoiding_exponent(avoid, n, d),
            })
        })?;
        acc.finish(false)
    }

    pub fn epsilon_k_interval(
        &self,
        avoid: Interval,
        k: Cardinality,
        n: Modulus,
    ) -> Result<Evaluation> {
        check_below_modulus(avoid, n)?;
        let acc = self.divisor_sum(n.get(), |d| {
            Ok(TermShape::Binomial {
                top: avoiding_exponent(avoid, n, d),
                bottom: k.get() as i64,
            })
        })?;
        acc.finish(false)
    }
}

/// `floor(m1/d) + floor(m2/d) - l2/d` for `d | l2`.
fn anchored_exponent(u: SplitUnion, d: u64) -> u64 {
    debug_assert_eq!(u.l2() % d, 0);
    u.m1() / d + u.m2() / d - u.l2() / d
}

/// Multiples of `d | n` in `[1, l-1] ∪ [m+1, n]`.
fn avoiding_exponent(avoid: Interval, n: Modulus, d: u64) -> u64 {
    (avoid.l() - 1) / d + n.get() / d - avoid.m() / d
}

fn check_below_modulus(avoid: Interval, n: Modulus) -> Result<()> {
    if avoid.m() >= n.get() {
        return Err(Error::AvoidNotBelowModulus {
            l: avoid.l(),
            m: avoid.m(),
            n: n.get(),
        });
    }
    Ok(())
}
