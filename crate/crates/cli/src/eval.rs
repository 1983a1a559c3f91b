use std::io::Write;

use relprime_core::Evaluator;

use crate::args::EvalArgs;
use crate::error::CliError;
use crate::family::Param;
use crate::render::write_evaluation;
use crate::Context;

pub fn cmd_eval(ctx: &Context, args: &EvalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    for &p in args.family.params() {
        if let Some(r) = args.params.range(p) {
            if !r.is_point() {
                return Err(CliError::Usage(format!(
                    "eval takes a single value for --{}; use table for ranges",
                    p.name()
                )));
            }
        }
    }
    if args.family.params().contains(&Param::Meet) && args.params.meet.is_none() {
        return Err(CliError::Usage("missing required --meet".into()));
    }
    let params = args.params.base_params();
    let ev = Evaluator::new().recording_terms(ctx.verbose);
    let eval = args.family.evaluate(&ev, &params)?;
    write_evaluation(out, ctx.format, ctx.verbose, args.family, &params, &eval)
}
