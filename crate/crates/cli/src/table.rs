use std::io::Write;

use relprime_core::{Count, Evaluator};
use serde_json::Value;

use crate::args::{Format, TableArgs};
use crate::error::CliError;
use crate::family::{Family, Param, Params};
use crate::render::{header, row_cells, row_json};
use crate::Context;

/// Largest number of rows a single table may produce.
pub const MAX_TABLE_ROWS: u64 = 100_000;

/// Every parameter tuple of the table, first parameter varying slowest.
pub fn table_rows(family: Family, args: &TableArgs) -> Result<Vec<Params>, CliError> {
    let numeric: Vec<Param> = family.params().iter().copied().filter(|p| !p.is_set()).collect();
    let mut ranges = Vec::with_capacity(numeric.len());
    let mut total: u64 = 1;
    for &p in &numeric {
        let r = args
            .params
            .range(p)
            .ok_or_else(|| CliError::Usage(format!("missing required --{}", p.name())))?;
        total = total.saturating_mul(r.len());
        ranges.push(r);
    }
    if total > MAX_TABLE_ROWS {
        return Err(CliError::Usage(format!(
            "table would have {total} rows, above the limit of {MAX_TABLE_ROWS}"
        )));
    }
    let mut rows = vec![args.params.base_params()];
    for (&p, r) in numeric.iter().zip(&ranges) {
        rows = rows
            .into_iter()
            .flat_map(|row| {
                (r.start..=r.end).map(move |v| {
                    let mut next = row.clone();
                    next.set_numeric(p, v);
                    next
                })
            })
            .collect();
    }
    Ok(rows)
}

pub fn cmd_table(ctx: &Context, args: &TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let family = args.family;
    if family.params().contains(&Param::Meet) && args.params.meet.is_none() {
        return Err(CliError::Usage("missing required --meet".into()));
    }
    let ev = Evaluator::new();
    let mut results: Vec<(Params, Count)> = Vec::new();
    for params in table_rows(family, args)? {
        let count = family.evaluate(&ev, &params).map_err(|e| match e {
            CliError::Precondition(inner) => {
                CliError::Usage(format!("{} ({})", inner, params.describe(family)))
            }
            other => other,
        })?;
        results.push((params, count.count));
    }
    match ctx.format {
        Format::Plain => {
            writeln!(out, "{}", header(family).join(" "))?;
            for (p, c) in &results {
                writeln!(out, "{}", row_cells(family, p, c).join(" "))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(header(family))?;
            for (p, c) in &results {
                w.write_record(row_cells(family, p, c))?;
            }
            w.flush()?;
        }
        Format::Json => {
            let rows: Vec<Value> = results
                .iter()
                .map(|(p, c)| Value::Object(row_json(family, p, c)))
                .collect();
            writeln!(out, "{}", Value::Array(rows))?;
        }
    }
    Ok(())
}
