//! Fixtures shared by the criterion benchmarks.

use relprime_core::{
    counting, Count, ElementSet, Interval, MeetMode, Modulus, PredicateSpec, UniverseSpec,
};

/// Interval lengths at which both legs are timed.
pub const ENUMERATION_SIZES: [u64; 5] = [8, 11, 14, 17, 20];

/// Moduli with many small prime factors, the worst case for the divisor sums.
pub const PRIMORIALS: [u64; 4] = [30, 210, 2310, 30030];

/// A counting question answerable both by a closed form and by the oracle.
pub struct Case {
    pub name: &'static str,
    pub universe: UniverseSpec,
    pub predicate: PredicateSpec,
    closed_form: Box<dyn Fn() -> Count>,
}

impl Case {
    pub fn closed_form(&self) -> Count {
        (self.closed_form)()
    }
}

fn modulus(n: u64) -> Modulus {
    Modulus::new(n).expect("positive modulus")
}

/// `[1, len]` with modulus 30030.
pub fn phi_case(len: u64) -> Case {
    let range = Interval::new(1, len).expect("len >= 1");
    let n = modulus(30030);
    Case {
        name: "phi",
        universe: UniverseSpec::interval(range),
        predicate: PredicateSpec::coprime_to(n),
        closed_form: Box::new(move || counting::phi_interval(range, n).unwrap()),
    }
}

/// `[2, len+1]` with no modulus, so gcd 1 is the whole condition.
pub fn f_case(len: u64) -> Case {
    let range = Interval::new(2, len + 1).expect("len >= 1");
    Case {
        name: "f",
        universe: UniverseSpec::interval(range),
        predicate: PredicateSpec::gcd_one(),
        closed_form: Box::new(move || counting::f_interval(range).unwrap()),
    }
}

/// Sets of `[1, len]` meeting its first four even numbers, modulus 210.
pub fn meet_case(len: u64) -> Case {
    let range = Interval::new(1, len).expect("len >= 1");
    let meet = ElementSet::new((1..=len.min(8)).filter(|x| x % 2 == 0).collect())
        .expect("positive elements");
    let n = modulus(210);
    Case {
        name: "meet-phi",
        universe: UniverseSpec::interval(range),
        predicate: PredicateSpec::coprime_to(n).meeting(meet.clone()),
        closed_form: Box::new(move || {
            counting::meet_phi(&meet, range, n, MeetMode::InclusionExclusion).unwrap()
        }),
    }
}

pub fn cases(len: u64) -> Vec<Case> {
    vec![phi_case(len), f_case(len), meet_case(len)]
}
