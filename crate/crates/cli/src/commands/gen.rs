use sparse_sketch_core::hash::derive_seed;
use sparse_sketch_core::synth::{random_discrete, random_nonneg};
use sparse_sketch_core::Dataset;

use super::report;
use crate::cli::GenArgs;
use crate::error::{CliError, Result};
use crate::io::format_dataset;

pub fn run_gen(args: &GenArgs) -> Result<()> {
    let seed = derive_seed(args.seed, "gen", 0);
    let vectors = match args.kind.as_str() {
        "nonneg" => random_nonneg(args.n, args.s, args.dim, seed)?,
        "discrete" => random_discrete(args.n, args.s, args.dim, args.delta, seed)?,
        other => return Err(CliError::Input(format!("unknown kind {other:?}: expected nonneg or discrete"))),
    };
    let mut ds = Dataset::new(args.dim);
    for (i, v) in vectors.into_iter().enumerate() {
        ds.push(format!("x{i}"), v)?;
    }
    let mut r = report("gen", args);
    r.line(format_dataset(&ds).trim_end());
    r.finish(args.output.as_deref())
}
