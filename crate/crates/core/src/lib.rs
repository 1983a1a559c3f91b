//! Exact counts of relatively prime subsets and supersets of integer
//! intervals and two-piece unions.
//!
//! [`counting`] evaluates the closed-form Möbius divisor sums, [`oracle`]
//! enumerates subsets directly to check them, and [`numtheory`] holds the
//! integer primitives both sides share.

pub mod counting;
pub mod error;
pub mod numtheory;
pub mod oracle;
pub mod types;

pub use counting::{
    epsilon_interval, epsilon_k_interval, f_interval, f_k_interval, meet_f, meet_f_k, meet_phi,
    meet_phi_k, phi_interval, phi_k_interval, phi_union, phi_k_union, psi, psi_k, superset_f,
    superset_f_k, superset_phi, superset_phi_k, DivisorScope, DivisorTerm, Evaluation, Evaluator,
    MeetMode, SubsetTerm, Term, TermShape,
};
pub use error::{Error, Result};
pub use numtheory::{Mobius, Natural};
pub use oracle::{Coprimality, Membership, Oracle, PredicateSpec, UniverseSpec};
pub use types::{Cardinality, Count, ElementSet, Interval, Modulus, SplitUnion};
