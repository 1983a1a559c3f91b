//! The eighteen counting families addressable from the command line, their
//! parameters, and how each maps onto a closed form and onto the oracle.

use std::fmt;
use std::str::FromStr;

use relprime_core::{
    Cardinality, ElementSet, Evaluation, Evaluator, Interval, MeetMode, Modulus, PredicateSpec,
    SplitUnion, UniverseSpec,
};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Phi,
    PhiK,
    F,
    FK,
    Psi,
    PsiK,
    PhiUnion,
    PhiKUnion,
    Eps,
    EpsK,
    SupersetPhi,
    SupersetPhiK,
    SupersetF,
    SupersetFK,
    MeetPhi,
    MeetPhiK,
    MeetF,
    MeetFK,
}

/// How `check` covers a family: exhaustive grids or seeded samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Interval,
    Union,
    Avoid,
    Superset,
    Meet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    L,
    M,
    N,
    K,
    M1,
    L2,
    M2,
    Base,
    Meet,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::L => "l",
            Param::M => "m",
            Param::N => "n",
            Param::K => "k",
            Param::M1 => "m1",
            Param::L2 => "l2",
            Param::M2 => "m2",
            Param::Base => "base",
            Param::Meet => "meet",
        }
    }

    pub fn is_set(self) -> bool {
        matches!(self, Param::Base | Param::Meet)
    }
}

use Param::*;

impl Family {
    pub const ALL: [Family; 18] = [
        Family::Phi,
        Family::PhiK,
        Family::F,
        Family::FK,
        Family::Psi,
        Family::PsiK,
        Family::PhiUnion,
        Family::PhiKUnion,
        Family::Eps,
        Family::EpsK,
        Family::SupersetPhi,
        Family::SupersetPhiK,
        Family::SupersetF,
        Family::SupersetFK,
        Family::MeetPhi,
        Family::MeetPhiK,
        Family::MeetF,
        Family::MeetFK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Phi => "phi",
            Family::PhiK => "phi-k",
            Family::F => "f",
            Family::FK => "f-k",
            Family::Psi => "psi",
            Family::PsiK => "psi-k",
            Family::PhiUnion => "phi-union",
            Family::PhiKUnion => "phi-k-union",
            Family::Eps => "eps",
            Family::EpsK => "eps-k",
            Family::SupersetPhi => "superset-phi",
            Family::SupersetPhiK => "superset-phi-k",
            Family::SupersetF => "superset-f",
            Family::SupersetFK => "superset-f-k",
            Family::MeetPhi => "meet-phi",
            Family::MeetPhiK => "meet-phi-k",
            Family::MeetF => "meet-f",
            Family::MeetFK => "meet-f-k",
        }
    }

    /// Parameters in column order.
    pub fn params(self) -> &'static [Param] {
        match self {
            Family::Phi | Family::Eps => &[L, M, N],
            Family::PhiK | Family::EpsK => &[L, M, K, N],
            Family::F => &[L, M],
            Family::FK => &[L, M, K],
            Family::Psi | Family::PhiUnion => &[M1, L2, M2, N],
            Family::PsiK | Family::PhiKUnion => &[M1, L2, M2, K, N],
            Family::SupersetPhi => &[Base, L, M, N],
            Family::SupersetPhiK => &[Base, L, M, K, N],
            Family::SupersetF => &[Base, L, M],
            Family::SupersetFK => &[Base, L, M, K],
            Family::MeetPhi => &[Meet, L, M, N],
            Family::MeetPhiK => &[Meet, L, M, K, N],
            Family::MeetF => &[Meet, L, M],
            Family::MeetFK => &[Meet, L, M, K],
        }
    }

    pub fn group(self) -> Group {
        match self {
            Family::Phi | Family::PhiK | Family::F | Family::FK => Group::Interval,
            Family::Psi | Family::PsiK | Family::PhiUnion | Family::PhiKUnion => Group::Union,
            Family::Eps | Family::EpsK => Group::Avoid,
            Family::SupersetPhi | Family::SupersetPhiK | Family::SupersetF | Family::SupersetFK => {
                Group::Superset
            }
            Family::MeetPhi | Family::MeetPhiK | Family::MeetF | Family::MeetFK => Group::Meet,
        }
    }

    pub fn has_k(self) -> bool {
        self.params().contains(&K)
    }

    pub fn has_modulus(self) -> bool {
        self.params().contains(&N)
    }

    pub fn uses_mode(self) -> bool {
        self.group() == Group::Meet
    }

    /// Evaluates the closed form for `params`.
    pub fn evaluate(self, ev: &Evaluator, p: &Params) -> Result<Evaluation, CliError> {
        let out = match self {
            Family::Phi => ev.phi_interval(p.interval()?, p.modulus()?),
            Family::PhiK => ev.phi_k_interval(p.interval()?, p.cardinality()?, p.modulus()?),
            Family::F => ev.f_interval(p.interval()?),
            Family::FK => ev.f_k_interval(p.interval()?, p.cardinality()?),
            Family::Psi => ev.psi(p.split_union()?, p.modulus()?),
            Family::PsiK => ev.psi_k(p.split_union()?, p.cardinality()?, p.modulus()?),
            Family::PhiUnion => ev.phi_union(p.split_union()?, p.modulus()?),
            Family::PhiKUnion => ev.phi_k_union(p.split_union()?, p.cardinality()?, p.modulus()?),
            Family::Eps => ev.epsilon_interval(p.interval()?, p.modulus()?),
            Family::EpsK => ev.epsilon_k_interval(p.interval()?, p.cardinality()?, p.modulus()?),
            Family::SupersetPhi => ev.superset_phi(&p.base(), p.interval()?, p.modulus()?),
            Family::SupersetPhiK => {
                ev.superset_phi_k(&p.base(), p.interval()?, p.cardinality()?, p.modulus()?)
            }
            Family::SupersetF => ev.superset_f(&p.base(), p.interval()?),
            Family::SupersetFK => ev.superset_f_k(&p.base(), p.interval()?, p.cardinality()?),
            Family::MeetPhi => ev.meet_phi(p.meet()?, p.interval()?, p.modulus()?, p.mode),
            Family::MeetPhiK => ev.meet_phi_k(
                p.meet()?,
                p.interval()?,
                p.cardinality()?,
                p.modulus()?,
                p.mode,
            ),
            Family::MeetF => ev.meet_f(p.meet()?, p.interval()?, p.mode),
            Family::MeetFK => ev.meet_f_k(p.meet()?, p.interval()?, p.cardinality()?, p.mode),
        };
        Ok(out?)
    }

    /// Size of the universe the oracle would enumerate, without building it.
    pub fn universe_size(self, p: &Params) -> Result<u64, CliError> {
        Ok(match self.group() {
            Group::Union => p.split_union()?.len(),
            Group::Avoid => p.modulus()?.get(),
            _ => p.interval()?.len(),
        })
    }

    /// The universe and defining predicate that the oracle enumerates for
    /// this family.
    pub fn oracle_query(self, p: &Params) -> Result<(UniverseSpec, PredicateSpec), CliError> {
        let coprimality = || -> Result<PredicateSpec, CliError> {
            Ok(if self.has_modulus() {
                PredicateSpec::coprime_to(p.modulus()?)
            } else {
                PredicateSpec::gcd_one()
            })
        };
        let k = if self.has_k() {
            Some(p.cardinality()?)
        } else {
            None
        };
        let (universe, pred) = match self.group() {
            Group::Interval => (UniverseSpec::interval(p.interval()?), coprimality()?),
            Group::Union => {
                let u = p.split_union()?;
                let pred = coprimality()?;
                let pred = match self {
                    Family::Psi | Family::PsiK => pred.containing(ElementSet::new(vec![u.l2()])?),
                    _ => pred,
                };
                (UniverseSpec::split_union(u), pred)
            }
            Group::Avoid => {
                let n = p.modulus()?.get();
                let avoid = p.interval()?;
                let whole = Interval::new(1, n)?;
                (
                    UniverseSpec::interval(whole),
                    coprimality()?.avoiding(ElementSet::from_interval(avoid)),
                )
            }
            Group::Superset => (
                UniverseSpec::interval(p.interval()?),
                coprimality()?.containing(p.base()),
            ),
            Group::Meet => (
                UniverseSpec::interval(p.interval()?),
                coprimality()?.meeting(p.meet()?.clone()),
            ),
        };
        Ok((universe, pred.with_optional_cardinality(k)))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
                format!("unknown family '{s}' (expected one of: {})", names.join(", "))
            })
    }
}

/// Concrete parameter values for one evaluation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params {
    pub l: Option<u64>,
    pub m: Option<u64>,
    pub n: Option<u64>,
    pub k: Option<u64>,
    pub m1: Option<u64>,
    pub l2: Option<u64>,
    pub m2: Option<u64>,
    pub base: Option<ElementSet>,
    pub meet: Option<ElementSet>,
    pub mode: MeetMode,
}

fn require(v: Option<u64>, flag: &'static str) -> Result<u64, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing required --{flag}")))
}

impl Params {
    pub fn interval(&self) -> Result<Interval, CliError> {
        Ok(Interval::new(require(self.l, "l")?, require(self.m, "m")?)?)
    }

    pub fn split_union(&self) -> Result<SplitUnion, CliError> {
        Ok(SplitUnion::new(
            require(self.m1, "m1")?,
            require(self.l2, "l2")?,
            require(self.m2, "m2")?,
        )?)
    }

    pub fn modulus(&self) -> Result<Modulus, CliError> {
        Ok(Modulus::new(require(self.n, "n")?)?)
    }

    pub fn cardinality(&self) -> Result<Cardinality, CliError> {
        Ok(Cardinality::new(require(self.k, "k")?)?)
    }

    /// The superset base; absent means the empty set.
    pub fn base(&self) -> ElementSet {
        self.base.clone().unwrap_or_default()
    }

    pub fn meet(&self) -> Result<&ElementSet, CliError> {
        self.meet
            .as_ref()
            .ok_or_else(|| CliError::Usage("missing required --meet".into()))
    }

    pub fn numeric(&self, p: Param) -> Option<u64> {
        match p {
            L => self.l,
            M => self.m,
            N => self.n,
            K => self.k,
            M1 => self.m1,
            L2 => self.l2,
            M2 => self.m2,
            Base | Meet => None,
        }
    }

    pub fn set_numeric(&mut self, p: Param, v: u64) {
        match p {
            L => self.l = Some(v),
            M => self.m = Some(v),
            N => self.n = Some(v),
            K => self.k = Some(v),
            M1 => self.m1 = Some(v),
            L2 => self.l2 = Some(v),
            M2 => self.m2 = Some(v),
            Base | Meet => {}
        }
    }

    pub fn set_param(&self, p: Param) -> Option<&ElementSet> {
        match p {
            Base => self.base.as_ref(),
            Meet => self.meet.as_ref(),
            _ => None,
        }
    }

    /// `name=value` pairs in the family's column order.
    pub fn describe(&self, family: Family) -> String {
        let mut parts: Vec<String> = family
            .params()
            .iter()
            .map(|&p| match p {
                Base => format!("base={{{}}}", self.base().joined(",")),
                Meet => format!(
                    "meet={{{}}}",
                    self.meet.as_ref().map(|s| s.joined(",")).unwrap_or_default()
                ),
                _ => format!(
                    "{}={}",
                    p.name(),
                    self.numeric(p).map(|v| v.to_string()).unwrap_or_default()
                ),
            })
            .collect();
        if family.uses_mode() {
            parts.push(format!("mode={}", self.mode.name()));
        }
        parts.join(" ")
    }
}
