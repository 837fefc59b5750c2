mod apps;
mod embed;
mod gen;
mod probe;

pub use apps::run_apps;
pub use embed::{run_distort, run_embed};
pub use gen::run_gen;
pub use probe::run_probe;

use serde::Serialize;
use sparse_sketch_core::{Dataset, Norm};

use crate::error::{CliError, Result};
use crate::report::{fmt_f64, Report};

/// The `# config:` payload: command name plus its arguments.
#[derive(Serialize)]
struct Config<'a, A: Serialize> {
    command: &'a str,
    #[serde(flatten)]
    args: &'a A,
}

fn report<A: Serialize>(command: &str, args: &A) -> Report {
    Report::with_config(&Config { command, args })
}

fn parse_norm(s: &str) -> Result<Norm> {
    s.parse::<Norm>().map_err(|_| CliError::Input(format!("bad norm {s:?}: expected a number >= 1 or `inf`")))
}

fn require_nonneg(ds: &Dataset) -> Result<()> {
    ds.require_nonneg()
        .map_err(|e| CliError::Input(format!("{e}; this command needs non-negative input")))
}

/// `sketch / truth`, with `0 / 0` counted as a perfect 1.
fn ratio(sketch: f64, truth: f64) -> f64 {
    if truth == 0.0 && sketch == 0.0 {
        1.0
    } else {
        sketch / truth
    }
}

fn app_row(r: &mut Report, seed: u64, truth: f64, sketch: f64) {
    r.row([seed.to_string(), fmt_f64(truth), fmt_f64(sketch), fmt_f64(ratio(sketch, truth))]);
}

/// Non-expansion must hold for every seed; a violation is a bug, not bad luck.
fn check_not_above(what: &str, truth: f64, sketch: f64) -> Result<()> {
    if sketch > truth * (1.0 + 1e-9) + 1e-12 {
        return Err(CliError::Invariant(format!(
            "sketched {what} {} exceeds the exact value {}",
            fmt_f64(sketch),
            fmt_f64(truth)
        )));
    }
    Ok(())
}
