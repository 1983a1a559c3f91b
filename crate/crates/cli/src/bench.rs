use std::io::Write;
use std::time::{Duration, Instant};

use relprime_core::{Count, Evaluator, Oracle};
use serde_json::{json, Value};

use crate::args::BenchArgs;
use crate::error::CliError;
use crate::family::{Family, Param, Params};
use crate::render::row_json;
use crate::Context;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Timing {
    pub min: Duration,
    pub median: Duration,
}

impl Timing {
    fn from_samples(mut samples: Vec<Duration>) -> Self {
        samples.sort();
        Timing {
            min: samples[0],
            median: samples[samples.len() / 2],
        }
    }

    fn to_json(self) -> Value {
        json!({
            "min_ns": self.min.as_nanos() as u64,
            "median_ns": self.median.as_nanos() as u64,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleLeg {
    Timed { count: Count, timing: Timing },
    Infeasible { universe: u64, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub family: Family,
    pub params: Params,
    pub reps: u32,
    pub count: Count,
    pub closed_form: Timing,
    pub oracle: OracleLeg,
}

impl BenchReport {
    /// Oracle median time over closed-form median time.
    pub fn speedup(&self) -> Option<f64> {
        match &self.oracle {
            OracleLeg::Timed { timing, .. } => {
                let closed = self.closed_form.median.as_nanos().max(1) as f64;
                Some(timing.median.as_nanos() as f64 / closed)
            }
            OracleLeg::Infeasible { .. } => None,
        }
    }

    pub fn counts_agree(&self) -> bool {
        match &self.oracle {
            OracleLeg::Timed { count, .. } => *count == self.count,
            OracleLeg::Infeasible { .. } => true,
        }
    }

    pub fn to_json(&self) -> Value {
        let oracle = match &self.oracle {
            OracleLeg::Timed { count, timing } => {
                let mut v = timing.to_json();
                v["count"] = json!(count.to_string());
                v
            }
            OracleLeg::Infeasible { universe, cap } => json!({
                "infeasible": true,
                "note": format!("universe of {universe} elements exceeds the oracle cap {cap}"),
            }),
        };
        let mut params = row_json(self.family, &self.params, &self.count);
        params.remove("count");
        json!({
            "family": self.family.name(),
            "params": params,
            "reps": self.reps,
            "count": self.count.to_string(),
            "closed_form": self.closed_form.to_json(),
            "oracle": oracle,
            "speedup": self.speedup(),
            "counts_agree": self.counts_agree(),
        })
    }
}

fn time_reps<T>(reps: u32, mut f: impl FnMut() -> Result<T, CliError>) -> Result<(T, Timing), CliError> {
    let mut samples = Vec::with_capacity(reps as usize);
    let mut last = None;
    for _ in 0..reps {
        let start = Instant::now();
        let value = std::hint::black_box(f()?);
        samples.push(start.elapsed());
        last = Some(value);
    }
    let value = last.ok_or_else(|| CliError::Usage("--reps must be at least 1".into()))?;
    Ok((value, Timing::from_samples(samples)))
}

pub fn run_bench(ctx: &Context, args: &BenchArgs) -> Result<BenchReport, CliError> {
    let family = args.family;
    if args.reps == 0 {
        return Err(CliError::Usage("--reps must be at least 1".into()));
    }
    for &p in family.params() {
        if args.params.range(p).is_some_and(|r| !r.is_point()) {
            return Err(CliError::Usage(format!(
                "bench takes a single value for --{}",
                p.name()
            )));
        }
    }
    if family.params().contains(&Param::Meet) && args.params.meet.is_none() {
        return Err(CliError::Usage("missing required --meet".into()));
    }
    let params = args.params.base_params();
    let ev = Evaluator::new();
    let (count, closed_form) = time_reps(args.reps, || Ok(family.evaluate(&ev, &params)?.count))?;

    let universe = family.universe_size(&params)?;
    let oracle = Oracle::with_cap(ctx.oracle_cap);
    let oracle_leg = if universe > oracle.cap() as u64 {
        OracleLeg::Infeasible {
            universe,
            cap: oracle.cap(),
        }
    } else {
        let (u, pred) = family.oracle_query(&params)?;
        let (count, timing) = time_reps(args.reps, || Ok(oracle.enumerate_count(&u, &pred)?))?;
        OracleLeg::Timed { count, timing }
    };
    Ok(BenchReport {
        family,
        params,
        reps: args.reps,
        count,
        closed_form,
        oracle: oracle_leg,
    })
}

pub fn cmd_bench(ctx: &Context, args: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let report = run_bench(ctx, args)?;
    writeln!(out, "{}", report.to_json())?;
    if report.counts_agree() {
        Ok(())
    } else {
        Err(CliError::Mismatch(1))
    }
}
