//! File formats and the `sparse-sketch` command line on top of
//! `sparse-sketch-core`.
//!
//! Every command is a pure function of its input files, flags and seed. Work
//! is spread over rayon threads, but results are always collected in input
//! order, so outputs are byte-identical for any `--threads`.

pub mod cli;
mod commands;
pub mod error;
pub mod io;
pub mod report;

pub use error::{CliError, Result};

use cli::{Cli, Command};

pub fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Gen(a) => commands::run_gen(a),
        Command::Embed(a) => commands::run_embed(a),
        Command::Distort(a) => commands::run_distort(a),
        Command::Apps(c) => commands::run_apps(c),
        Command::Probe(c) => commands::run_probe(c),
    }
}
