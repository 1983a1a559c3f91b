use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must be at least 1, got 0")]
    Zero { what: &'static str },

    #[error("interval [{l},{m}] requires 1 <= l <= m")]
    InvalidInterval { l: u64, m: u64 },

    #[error("split union [1,{m1}] u [{l2},{m2}] requires 1 <= m1 < l2 <= m2")]
    InvalidSplitUnion { m1: u64, l2: u64, m2: u64 },

    #[error("modulus {0} exceeds the supported maximum 2^63 - 1")]
    ModulusTooLarge(u64),

    #[error("element set contains 0; elements must be positive")]
    NonPositiveElement,

    #[error("gcd of the empty set with no seed is undefined")]
    GcdUndefined,

    #[error("binomial range sum requires L <= M <= N, got L={lower}, M={start}, N={end}")]
    BinomialRange { lower: u64, start: u64, end: u64 },

    #[error("sieve limit {limit} exceeds the memory cap {cap}")]
    SieveTooLarge { limit: u64, cap: u64 },

    #[error("set {{{set}}} is not contained in [{l},{m}]")]
    NotContained { set: String, l: u64, m: u64 },

    #[error("cardinality k={k} must satisfy {min} <= k <= {max}")]
    CardinalityOutOfRange { k: u64, min: u64, max: u64 },

    #[error("avoided block [{l},{m}] must satisfy m < n (got n={n})")]
    AvoidNotBelowModulus { l: u64, m: u64, n: u64 },

    #[error("meet set has {size} elements, above the cap of {cap}")]
    MeetTooLarge { size: usize, cap: usize },

    #[error("universe has {size} elements, above the enumeration cap of {cap}")]
    UniverseTooLarge { size: usize, cap: usize },

    #[error("malformed predicate: {0}")]
    MalformedPredicate(&'static str),

    #[error("exponent {0} exceeds the supported maximum")]
    ExponentTooLarge(u64),

    #[error("internal error: {0}")]
    Internal(String),
}
