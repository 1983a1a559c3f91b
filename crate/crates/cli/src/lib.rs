//! Command-line front end for `relprime-core`: evaluate a family, tabulate
//! it over ranges, verify closed forms against enumeration, and time both.

pub mod args;
pub mod bench;
pub mod check;
pub mod error;
pub mod eval;
pub mod family;
pub mod render;
pub mod table;

use std::io::Write;

pub use args::{Cli, Command, Format};
pub use error::CliError;
pub use family::{Family, Params};

/// Global settings shared by every subcommand.
#[derive(Debug, Clone, Copy)]
pub struct Context {
    pub format: Format,
    pub verbose: bool,
    pub oracle_cap: usize,
    pub seed: u64,
}

impl Context {
    pub fn from_cli(cli: &Cli) -> Self {
        Context {
            format: cli.format,
            verbose: cli.verbose,
            oracle_cap: cli.oracle_cap,
            seed: cli.seed,
        }
    }
}

impl Default for Context {
    fn default() -> Self {
        Context {
            format: Format::Plain,
            verbose: false,
            oracle_cap: relprime_core::oracle::DEFAULT_ENUMERATION_CAP,
            seed: 0,
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let ctx = Context::from_cli(cli);
    match &cli.command {
        Command::Eval(a) => eval::cmd_eval(&ctx, a, out),
        Command::Table(a) => table::cmd_table(&ctx, a, out),
        Command::Check(a) => check::cmd_check(&ctx, a, out, err),
        Command::Bench(a) => bench::cmd_bench(&ctx, a, out),
    }
}
