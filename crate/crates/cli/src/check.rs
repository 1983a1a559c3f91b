//! Formula-versus-oracle verification grids.
//!
//! Interval, union and avoidance families are checked exhaustively over
//! their grid; superset and meet families over seeded random samples. The
//! report is a pure function of the arguments and seed, so two runs print
//! identical bytes. Wall time goes to stderr.

use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relprime_core::{Count, ElementSet, Evaluator, Interval, MeetMode, Oracle};
use serde_json::{json, Map, Value};

use crate::args::{CheckArgs, Format};
use crate::error::CliError;
use crate::family::{Family, Group, Params};
use crate::Context;

/// A qualifying set the oracle found for a mismatching case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub set: ElementSet,
    /// How many times the unsigned meet sum counts `set`, when above 1.
    pub multiplicity: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub params: Params,
    pub formula: Count,
    pub oracle: Count,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub family: Family,
    pub grid: String,
    pub cases: usize,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub families: Vec<FamilyReport>,
}

impl CheckReport {
    pub fn cases(&self) -> usize {
        self.families.iter().map(|f| f.cases).sum()
    }

    pub fn mismatch_count(&self) -> usize {
        self.families.iter().map(|f| f.mismatches.len()).sum()
    }
}

fn grid_description(family: Family, args: &CheckArgs, seed: u64) -> String {
    let k = if family.has_k() { ", every k" } else { "" };
    let n = if family.has_modulus() {
        format!(", 1<=n<={}", args.max_n)
    } else {
        String::new()
    };
    let mode = if family.uses_mode() {
        format!(", mode {}", args.mode.name())
    } else {
        String::new()
    };
    match family.group() {
        Group::Interval => format!("exhaustive 1<=l<=m<={}{n}{k}", args.max_m),
        Group::Union => format!("exhaustive 1<=m1<l2<=m2<={}{n}{k}", args.max_m),
        Group::Avoid => format!("exhaustive 1<=l<=m<n<={}{k}", args.max_n),
        Group::Superset => format!(
            "{} samples, seed {seed}, m<={}{n}",
            args.samples, args.max_m
        ),
        Group::Meet => format!(
            "{} samples, seed {seed}, m<={}, #meet<={}{n}{mode}",
            args.samples, args.max_m, args.max_meet
        ),
    }
}

fn validate(ctx: &Context, args: &CheckArgs, families: &[Family]) -> Result<(), CliError> {
    if args.max_m == 0 || args.max_n == 0 {
        return Err(CliError::Usage("--max-m and --max-n must be at least 1".into()));
    }
    let cap = ctx.oracle_cap as u64;
    for f in families {
        let (bound, flag) = match f.group() {
            Group::Avoid => (args.max_n, "--max-n"),
            _ => (args.max_m, "--max-m"),
        };
        if bound > cap {
            return Err(CliError::Usage(format!(
                "{flag} {bound} exceeds the oracle cap {cap} needed by {f}"
            )));
        }
    }
    Ok(())
}

fn with_ks(family: Family, base: Params, max_k: u64) -> Vec<Params> {
    if !family.has_k() {
        return vec![base];
    }
    (1..=max_k)
        .map(|k| Params {
            k: Some(k),
            ..base.clone()
        })
        .collect()
}

fn moduli(family: Family, max_n: u64) -> Vec<Option<u64>> {
    if family.has_modulus() {
        (1..=max_n).map(Some).collect()
    } else {
        vec![None]
    }
}

fn random_subset(rng: &mut ChaCha8Rng, range: Interval, size: usize) -> ElementSet {
    let mut pool: Vec<u64> = range.iter().collect();
    let mut chosen = Vec::with_capacity(size);
    for _ in 0..size.min(pool.len()) {
        let i = rng.random_range(0..pool.len());
        chosen.push(pool.swap_remove(i));
    }
    ElementSet::new(chosen).unwrap_or_default()
}

/// Parameter tuples the family is checked on, in a fixed order.
pub fn cases(family: Family, args: &CheckArgs, seed: u64) -> Vec<Params> {
    let mut out = Vec::new();
    match family.group() {
        Group::Interval => {
            for m in 1..=args.max_m {
                for l in 1..=m {
                    for n in moduli(family, args.max_n) {
                        let p = Params {
                            l: Some(l),
                            m: Some(m),
                            n,
                            ..Params::default()
                        };
                        out.extend(with_ks(family, p, m - l + 1));
                    }
                }
            }
        }
        Group::Union => {
            for m2 in 2..=args.max_m {
                for l2 in 2..=m2 {
                    for m1 in 1..l2 {
                        for n in moduli(family, args.max_n) {
                            let p = Params {
                                m1: Some(m1),
                                l2: Some(l2),
                                m2: Some(m2),
                                n,
                                ..Params::default()
                            };
                            out.extend(with_ks(family, p, m1 + m2 - l2 + 1));
                        }
                    }
                }
            }
        }
        Group::Avoid => {
            for n in 2..=args.max_n {
                for m in 1..n {
                    for l in 1..=m {
                        let p = Params {
                            l: Some(l),
                            m: Some(m),
                            n: Some(n),
                            ..Params::default()
                        };
                        out.extend(with_ks(family, p, n));
                    }
                }
            }
        }
        Group::Superset | Group::Meet => {
            let stream = Family::ALL.iter().position(|&f| f == family).unwrap_or(0) as u64;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream);
            for _ in 0..args.samples {
                let m = rng.random_range(1..=args.max_m);
                let l = rng.random_range(1..=m);
                let range = Interval::new(l, m).unwrap_or_else(|_| unreachable!());
                let len = range.len();
                let n = family
                    .has_modulus()
                    .then(|| rng.random_range(1..=args.max_n));
                let mut p = Params {
                    l: Some(l),
                    m: Some(m),
                    n,
                    mode: args.mode,
                    ..Params::default()
                };
                let required = if family.group() == Group::Superset {
                    let size = rng.random_range(0..=len.min(6) as usize);
                    let base = random_subset(&mut rng, range, size);
                    let size = base.len() as u64;
                    p.base = Some(base);
                    size
                } else {
                    let hi = (args.max_meet as u64).min(len).max(1);
                    let size = rng.random_range(1..=hi) as usize;
                    p.meet = Some(random_subset(&mut rng, range, size));
                    1
                };
                if family.has_k() {
                    p.k = Some(rng.random_range(required.max(1)..=len));
                }
                out.push(p);
            }
        }
    }
    out
}

fn witness_for(
    family: Family,
    params: &Params,
    oracle: &Oracle,
    formula: &Count,
    expected: &Count,
) -> Result<Option<Witness>, CliError> {
    let (universe, pred) = family.oracle_query(params)?;
    let over_counting_meet =
        family.uses_mode() && params.mode == MeetMode::PaperLiteral && formula > expected;
    if over_counting_meet {
        let meet = params.meet()?;
        let all = oracle.enumerate_witnesses(&universe, &pred, usize::MAX)?;
        let found = all.into_iter().find_map(|x| {
            let shared = x.iter().filter(|&e| meet.contains(e)).count();
            (shared >= 2).then(|| Witness {
                set: x,
                multiplicity: Some((1u64 << shared) - 1),
            })
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(oracle
        .enumerate_witnesses(&universe, &pred, 1)?
        .into_iter()
        .next()
        .map(|set| Witness {
            set,
            multiplicity: None,
        }))
}

pub fn run_check(ctx: &Context, args: &CheckArgs) -> Result<CheckReport, CliError> {
    let families: Vec<Family> = if args.families.is_empty() {
        Family::ALL.to_vec()
    } else {
        args.families.clone()
    };
    validate(ctx, args, &families)?;
    let ev = Evaluator::new();
    let oracle = Oracle::with_cap(ctx.oracle_cap);
    let mut reports = Vec::new();
    for family in families {
        let cases = cases(family, args, ctx.seed);
        let mut mismatches = Vec::new();
        for params in &cases {
            let formula = family.evaluate(&ev, params)?.count;
            let (universe, pred) = family.oracle_query(params)?;
            let expected = oracle.enumerate_count(&universe, &pred)?;
            if formula != expected {
                let witness = witness_for(family, params, &oracle, &formula, &expected)?;
                mismatches.push(Mismatch {
                    params: params.clone(),
                    formula,
                    oracle: expected,
                    witness,
                });
            }
        }
        reports.push(FamilyReport {
            family,
            grid: grid_description(family, args, ctx.seed),
            cases: cases.len(),
            mismatches,
        });
    }
    Ok(CheckReport { families: reports })
}

fn witness_text(w: &Option<Witness>) -> String {
    match w {
        None => "no qualifying set".into(),
        Some(Witness {
            set,
            multiplicity: Some(times),
        }) => format!("witness {set} counted {times} times"),
        Some(Witness { set, .. }) => format!("witness {set}"),
    }
}

pub fn write_report(out: &mut dyn Write, format: Format, report: &CheckReport) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let families: Vec<Value> = report
                .families
                .iter()
                .map(|f| {
                    let mismatches: Vec<Value> = f
                        .mismatches
                        .iter()
                        .map(|m| {
                            let mut obj = Map::new();
                            obj.insert("params".into(), json!(m.params.describe(f.family)));
                            obj.insert("formula".into(), json!(m.formula.to_string()));
                            obj.insert("oracle".into(), json!(m.oracle.to_string()));
                            if let Some(w) = &m.witness {
                                obj.insert("witness".into(), json!(w.set.as_slice()));
                                if let Some(times) = w.multiplicity {
                                    obj.insert("multiplicity".into(), json!(times));
                                }
                            }
                            Value::Object(obj)
                        })
                        .collect();
                    json!({
                        "family": f.family.name(),
                        "grid": f.grid,
                        "cases": f.cases,
                        "mismatch_count": f.mismatches.len(),
                        "mismatches": mismatches,
                    })
                })
                .collect();
            let doc = json!({
                "families": families,
                "cases": report.cases(),
                "mismatch_count": report.mismatch_count(),
            });
            writeln!(out, "{doc}")?;
        }
        Format::Plain | Format::Csv => {
            for f in &report.families {
                writeln!(
                    out,
                    "{}: {} | cases {} | mismatches {}",
                    f.family,
                    f.grid,
                    f.cases,
                    f.mismatches.len()
                )?;
                for m in &f.mismatches {
                    writeln!(
                        out,
                        "  MISMATCH {}: formula {} oracle {}; {}",
                        m.params.describe(f.family),
                        m.formula,
                        m.oracle,
                        witness_text(&m.witness)
                    )?;
                }
            }
            writeln!(
                out,
                "total: cases {} | mismatches {}",
                report.cases(),
                report.mismatch_count()
            )?;
        }
    }
    Ok(())
}

pub fn cmd_check(
    ctx: &Context,
    args: &CheckArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let started = Instant::now();
    let report = run_check(ctx, args)?;
    write_report(out, ctx.format, &report)?;
    writeln!(err, "elapsed {:.3}s", started.elapsed().as_secs_f64())?;
    match report.mismatch_count() {
        0 => Ok(()),
        n => Err(CliError::Mismatch(n)),
    }
}
