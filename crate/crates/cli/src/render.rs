//! Row and term rendering shared by `eval` and `table`.

use std::io::Write;

use relprime_core::{Count, Evaluation, Term, TermShape};
use serde_json::{json, Map, Value};

use crate::args::Format;
use crate::error::CliError;
use crate::family::{Family, Param, Params};

/// Column names: the family's parameters, `mode` for meet families, then
/// `count`.
pub fn header(family: Family) -> Vec<&'static str> {
    let mut cols: Vec<&'static str> = family.params().iter().map(|p| p.name()).collect();
    if family.uses_mode() {
        cols.push("mode");
    }
    cols.push("count");
    cols
}

fn param_text(params: &Params, p: Param) -> String {
    if p.is_set() {
        params.set_param(p).map(|s| s.joined(",")).unwrap_or_default()
    } else {
        params.numeric(p).map(|v| v.to_string()).unwrap_or_default()
    }
}

/// Cell texts in [`header`] order.
pub fn row_cells(family: Family, params: &Params, count: &Count) -> Vec<String> {
    let mut cells: Vec<String> = family.params().iter().map(|&p| param_text(params, p)).collect();
    if family.uses_mode() {
        cells.push(params.mode.name().to_string());
    }
    cells.push(count.to_string());
    cells
}

/// A flat JSON object: numeric parameters as numbers, sets as
/// comma-separated strings, the count as a decimal string.
pub fn row_json(family: Family, params: &Params, count: &Count) -> Map<String, Value> {
    let mut obj = Map::new();
    for &p in family.params() {
        let v = match params.numeric(p) {
            Some(x) if !p.is_set() => json!(x),
            _ => json!(param_text(params, p)),
        };
        obj.insert(p.name().to_string(), v);
    }
    if family.uses_mode() {
        obj.insert("mode".into(), json!(params.mode.name()));
    }
    obj.insert("count".into(), json!(count.to_string()));
    obj
}

fn shape_text(shape: TermShape) -> String {
    match shape {
        TermShape::Power { exponent } => format!("2^{exponent}"),
        TermShape::PowerLessOne { exponent } => format!("2^{exponent}-1"),
        TermShape::Binomial { top, bottom } => format!("C({top},{bottom})"),
    }
}

pub fn terms_json(terms: &[Term]) -> Value {
    let items: Vec<Value> = terms
        .iter()
        .map(|t| match t {
            Term::Divisor(t) => {
                let mut obj = Map::new();
                obj.insert("d".into(), json!(t.d));
                obj.insert("mu".into(), json!(t.mu.value()));
                match t.shape {
                    TermShape::Power { exponent } | TermShape::PowerLessOne { exponent } => {
                        obj.insert("exponent".into(), json!(exponent));
                    }
                    TermShape::Binomial { top, bottom } => {
                        obj.insert("binomial".into(), json!([top, bottom]));
                    }
                }
                obj.insert("form".into(), json!(shape_text(t.shape)));
                obj.insert("term".into(), json!(t.value.to_string()));
                Value::Object(obj)
            }
            Term::Subset(t) => json!({
                "subset": t.subset.joined(","),
                "sign": t.sign,
                "term": t.value.to_string(),
            }),
        })
        .collect();
    Value::Array(items)
}

fn term_line(t: &Term) -> String {
    match t {
        Term::Divisor(t) => format!(
            "  d={} mu={:+} {} -> {}",
            t.d,
            t.mu.value(),
            shape_text(t.shape),
            t.value
        ),
        Term::Subset(t) => format!("  X={} sign={:+} -> {}", t.subset, t.sign, t.value),
    }
}

/// Writes a single evaluation in the requested format.
pub fn write_evaluation(
    out: &mut dyn Write,
    format: Format,
    verbose: bool,
    family: Family,
    params: &Params,
    eval: &Evaluation,
) -> Result<(), CliError> {
    match format {
        Format::Plain => {
            writeln!(out, "{}", eval.count)?;
            if verbose {
                for t in &eval.terms {
                    writeln!(out, "{}", term_line(t))?;
                }
                if eval.empty_set_corrected {
                    writeln!(out, "  raw sum {} minus 1 for the empty set (n = 1)", eval.raw_sum)?;
                } else {
                    writeln!(out, "  raw sum {}", eval.raw_sum)?;
                }
            }
        }
        Format::Json => {
            let mut obj = row_json(family, params, &eval.count);
            if verbose {
                obj.insert("raw_sum".into(), json!(eval.raw_sum.to_string()));
                obj.insert("empty_set_corrected".into(), json!(eval.empty_set_corrected));
                obj.insert("terms".into(), terms_json(&eval.terms));
            }
            writeln!(out, "{}", Value::Object(obj))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(header(family))?;
            w.write_record(row_cells(family, params, &eval.count))?;
            w.flush()?;
        }
    }
    Ok(())
}
