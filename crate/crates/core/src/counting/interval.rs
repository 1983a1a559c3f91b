//! Counts over a single interval `[l, m]`.

use super::{DivisorScope, Evaluation, Evaluator, TermShape};
use crate::error::Result;
use crate::numtheory::{mobius_sieve, Mobius, MobiusTable};
use crate::types::{Cardinality, Interval, Modulus};

impl Evaluator {
    /// Nonempty `X ⊆ [l,m]` with `gcd(X, n) = 1`.
    pub fn phi_interval(&self, range: Interval, n: Modulus) -> Result<Evaluation> {
        let acc = self.divisor_sum(n.get(), |d| {
            Ok(TermShape::Power {
                exponent: range.multiples_of(d),
            })
        })?;
        // for n = 1 the lone divisor term 2^(m-l+1) includes the empty set
        acc.finish(n.get() == 1)
    }

    /// `X ⊆ [l,m]` with `#X = k` and `gcd(X, n) = 1`; zero when `k > m-l+1`.
    pub fn phi_k_interval(&self, range: Interval, k: Cardinality, n: Modulus) -> Result<Evaluation> {
        let acc = self.divisor_sum(n.get(), |d| {
            Ok(TermShape::Binomial {
                top: range.multiples_of(d),
                bottom: k.get() as i64,
            })
        })?;
        acc.finish(false)
    }

    /// Nonempty `X ⊆ [l,m]` with `gcd(X) = 1`, summing over every `d <= m`.
    pub fn f_interval(&self, range: Interval) -> Result<Evaluation> {
        let table = mobius_sieve(range.m())?;
        let terms = self.sieve_terms(&table, range);
        let acc = self.sum_over(terms, |d| {
            Ok(TermShape::PowerLessOne {
                exponent: range.multiples_of(d),
            })
        })?;
        acc.finish(false)
    }

    pub fn f_k_interval(&self, range: Interval, k: Cardinality) -> Result<Evaluation> {
        let table = mobius_sieve(range.m())?;
        let terms = self.sieve_terms(&table, range);
        let acc = self.sum_over(terms, |d| {
            Ok(TermShape::Binomial {
                top: range.multiples_of(d),
                bottom: k.get() as i64,
            })
        })?;
        acc.finish(false)
    }

    /// Every `d <= m` with a multiple inside the range; zero-μ entries are
    /// kept in the `All` scope and dropped by `sum_over`.
    fn sieve_terms<'a>(
        &self,
        table: &'a MobiusTable,
        range: Interval,
    ) -> Box<dyn Iterator<Item = (u64, Mobius)> + 'a> {
        let has_multiple = move |&(d, _): &(u64, _)| range.multiples_of(d) > 0;
        match self.scope {
            DivisorScope::Squarefree => Box::new(table.squarefree().filter(has_multiple)),
            DivisorScope::All => Box::new(
                table
                    .as_slice()
                    .iter()
                    .enumerate()
                    .map(|(i, &mu)| (i as u64 + 1, mu))
                    .filter(has_multiple),
            ),
        }
    }
}
