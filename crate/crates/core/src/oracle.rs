//! Brute-force ground truth: enumerate every subset of an explicit universe
//! and test the defining predicate directly.
//!
//! Subsets are visited in binary-counter order over the sorted universe
//! (bit `i` selects the `i`-th smallest element), carrying the running gcd
//! down the recursion. Nothing here shares code with [`crate::counting`].

use std::ops::ControlFlow;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::types::{Cardinality, Count, ElementSet, Interval, Modulus, SplitUnion};

pub const DEFAULT_ENUMERATION_CAP: usize = 24;

/// Hard ceiling for an explicit cap override; masks are `u64`.
pub const MAX_ENUMERATION_CAP: usize = 63;

/// An explicit universe to enumerate subsets of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniverseSpec {
    elements: ElementSet,
}

impl UniverseSpec {
    pub fn new(elements: ElementSet) -> Self {
        Self { elements }
    }

    pub fn interval(range: Interval) -> Self {
        Self::new(ElementSet::from_interval(range))
    }

    pub fn split_union(u: SplitUnion) -> Self {
        Self::new(ElementSet::from_split_union(u))
    }

    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn mask_of(&self, set: &ElementSet) -> u64 {
        self.elements
            .iter()
            .enumerate()
            .filter(|&(_, x)| set.contains(x))
            .fold(0, |mask, (i, _)| mask | 1 << i)
    }
}

/// The gcd condition a qualifying subset must meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coprimality {
    /// `gcd(X ∪ {n}) = 1`
    ToModulus(Modulus),
    /// `gcd(X) = 1`
    GcdOne,
}

/// A membership condition relative to a fixed set `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Unconstrained,
    /// `A ⊆ X`; `A` must lie inside the universe.
    Contains(ElementSet),
    /// `X ∩ A = ∅`
    Avoids(ElementSet),
    /// `X ∩ A ≠ ∅`
    Meets(ElementSet),
}

/// The defining predicate of a counting family. `X ≠ ∅` is always required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateSpec {
    pub coprimality: Coprimality,
    pub membership: Membership,
    pub cardinality: Option<Cardinality>,
}

impl PredicateSpec {
    pub fn coprime_to(n: Modulus) -> Self {
        Self {
            coprimality: Coprimality::ToModulus(n),
            membership: Membership::Unconstrained,
            cardinality: None,
        }
    }

    pub fn gcd_one() -> Self {
        Self {
            coprimality: Coprimality::GcdOne,
            membership: Membership::Unconstrained,
            cardinality: None,
        }
    }

    pub fn containing(mut self, required: ElementSet) -> Self {
        self.membership = Membership::Contains(required);
        self
    }

    pub fn avoiding(mut self, forbidden: ElementSet) -> Self {
        self.membership = Membership::Avoids(forbidden);
        self
    }

    pub fn meeting(mut self, required: ElementSet) -> Self {
        self.membership = Membership::Meets(required);
        self
    }

    pub fn with_cardinality(mut self, k: Cardinality) -> Self {
        self.cardinality = Some(k);
        self
    }

    pub fn with_optional_cardinality(mut self, k: Option<Cardinality>) -> Self {
        self.cardinality = k;
        self
    }
}

/// Compiled predicate over universe bitmasks.
struct Test {
    modulus: Option<u64>,
    cardinality: Option<u32>,
    membership: MaskTest,
}

enum MaskTest {
    Any,
    Superset(u64),
    Disjoint(u64),
    Intersects(u64),
}

impl Test {
    fn accepts(&self, mask: u64, gcd: u64) -> bool {
        if mask == 0 {
            return false;
        }
        if self.cardinality.is_some_and(|k| mask.count_ones() != k) {
            return false;
        }
        let member = match self.membership {
            MaskTest::Any => true,
            MaskTest::Superset(a) => mask & a == a,
            MaskTest::Disjoint(a) => mask & a == 0,
            MaskTest::Intersects(a) => mask & a != 0,
        };
        member
            && match self.modulus {
                Some(n) => gcd.gcd(&n) == 1,
                None => gcd == 1,
            }
    }
}

/// Exhaustive subset enumerator with a size cap.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Explicit cap override, clamped to [`MAX_ENUMERATION_CAP`].
    pub fn with_cap(cap: usize) -> Self {
        Self {
            cap: cap.min(MAX_ENUMERATION_CAP),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn fits(&self, universe: &UniverseSpec) -> bool {
        universe.len() <= self.cap
    }

    fn compile(&self, universe: &UniverseSpec, predicate: &PredicateSpec) -> Result<Test> {
        if universe.len() > self.cap {
            return Err(Error::UniverseTooLarge {
                size: universe.len(),
                cap: self.cap,
            });
        }
        let membership = match &predicate.membership {
            Membership::Unconstrained => MaskTest::Any,
            Membership::Contains(a) => {
                if !a.iter().all(|x| universe.elements.contains(x)) {
                    return Err(Error::MalformedPredicate(
                        "required elements must belong to the universe",
                    ));
                }
                MaskTest::Superset(universe.mask_of(a))
            }
            Membership::Avoids(a) => MaskTest::Disjoint(universe.mask_of(a)),
            Membership::Meets(a) => MaskTest::Intersects(universe.mask_of(a)),
        };
        let cardinality = predicate.cardinality.map(|k| u32::try_from(k.get()).unwrap_or(u32::MAX));
        Ok(Test {
            modulus: match predicate.coprimality {
                Coprimality::ToModulus(n) => Some(n.get()),
                Coprimality::GcdOne => None,
            },
            cardinality,
            membership,
        })
    }

    pub fn enumerate_count(&self, universe: &UniverseSpec, predicate: &PredicateSpec) -> Result<Count> {
        let test = self.compile(universe, predicate)?;
        let mut count = 0u64;
        visit(universe.elements.as_slice(), &mut |mask, gcd| {
            if test.accepts(mask, gcd) {
                count += 1;
            }
            ControlFlow::Continue(())
        });
        Ok(Count::from(count))
    }

    /// Up to `limit` qualifying subsets, in binary-counter order.
    pub fn enumerate_witnesses(
        &self,
        universe: &UniverseSpec,
        predicate: &PredicateSpec,
        limit: usize,
    ) -> Result<Vec<ElementSet>> {
        let test = self.compile(universe, predicate)?;
        let mut found = Vec::new();
        if limit == 0 {
            return Ok(found);
        }
        visit(universe.elements.as_slice(), &mut |mask, gcd| {
            if test.accepts(mask, gcd) {
                found.push(universe.elements.subset(mask));
                if found.len() >= limit {
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        });
        Ok(found)
    }

    /// Qualifying subsets bucketed by size: entry `k` counts those with
    /// `#X = k`. A cardinality in the predicate is ignored.
    pub fn cardinality_profile(
        &self,
        universe: &UniverseSpec,
        predicate: &PredicateSpec,
    ) -> Result<Vec<u64>> {
        let mut free = predicate.clone();
        free.cardinality = None;
        let test = self.compile(universe, &free)?;
        let mut profile = vec![0u64; universe.len() + 1];
        visit(universe.elements.as_slice(), &mut |mask, gcd| {
            if test.accepts(mask, gcd) {
                profile[mask.count_ones() as usize] += 1;
            }
            ControlFlow::Continue(())
        });
        Ok(profile)
    }
}

/// Calls `leaf(mask, gcd(subset))` for every subset in increasing mask
/// order; the empty subset has gcd 0.
fn visit<F>(elements: &[u64], leaf: &mut F)
where
    F: FnMut(u64, u64) -> ControlFlow<()>,
{
    fn go<F>(elements: &[u64], level: usize, mask: u64, gcd: u64, leaf: &mut F) -> ControlFlow<()>
    where
        F: FnMut(u64, u64) -> ControlFlow<()>,
    {
        if level == 0 {
            return leaf(mask, gcd);
        }
        let i = level - 1;
        // the highest undecided bit dominates the mask order: leave it out first
        go(elements, i, mask, gcd, leaf)?;
        go(elements, i, mask | 1 << i, gcd.gcd(&elements[i]), leaf)
    }
    let _ = go(elements, elements.len(), 0, 0, leaf);
}

pub fn enumerate_count(universe: &UniverseSpec, predicate: &PredicateSpec) -> Result<Count> {
    Oracle::new().enumerate_count(universe, predicate)
}

pub fn enumerate_witnesses(
    universe: &UniverseSpec,
    predicate: &PredicateSpec,
    limit: usize,
) -> Result<Vec<ElementSet>> {
    Oracle::new().enumerate_witnesses(universe, predicate, limit)
}
