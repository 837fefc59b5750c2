use std::collections::HashSet;

use sparse_sketch_core::hash::derive_seed;
use sparse_sketch_core::probes::{find_linf_violation, preservation_trials, DenseLinearMap, UnifSampler, UnifSpec};
use sparse_sketch_core::{BirthdayMap, HashSpec, Norm};

use super::{parse_norm, report};
use crate::cli::{MapArgs, ProbeCommand, RateArgs, UnifArgs, ViolationArgs};
use crate::error::{CliError, Result};
use crate::io::{format_dense_map, read_dense_map};
use crate::report::fmt_f64;

pub fn run_probe(cmd: &ProbeCommand) -> Result<()> {
    match cmd {
        ProbeCommand::Rate(a) => rate(a),
        ProbeCommand::Violation(a) => violation(a),
        ProbeCommand::UnifStats(a) => unif_stats(a),
    }
}

fn build_map(args: &MapArgs, seed: u64) -> Result<DenseLinearMap> {
    let a = match &args.map {
        Some(path) => read_dense_map(path)?,
        None => {
            let seed = derive_seed(seed, "probe-map", 0);
            let (rows, d) = (args.rows, args.d);
            match args.map_kind.as_str() {
                "identity" => DenseLinearMap::identity(d)?,
                "zero" => DenseLinearMap::zeros(rows, d)?,
                "birthday" => DenseLinearMap::from_birthday(&BirthdayMap::new(HashSpec::new(seed, 0, rows as u64)), d)?,
                "gaussian" => DenseLinearMap::gaussian(rows, d, seed, true)?,
                "random-sign" => DenseLinearMap::random_sign(rows, d, seed)?,
                "ones-row" => {
                    let mut data = vec![0.0; rows * d];
                    data[..d].fill(1.0);
                    DenseLinearMap::new(rows, d, data)?
                }
                other => {
                    return Err(CliError::Input(format!(
                        "unknown map kind {other:?}: expected identity, zero, birthday, gaussian, random-sign or ones-row"
                    )))
                }
            }
        }
    };
    if let Some(path) = &args.map_out {
        std::fs::write(path, format_dense_map(&a)).map_err(|e| CliError::io(path, e))?;
    }
    Ok(a)
}

fn rate(args: &RateArgs) -> Result<()> {
    let a = build_map(&args.map, args.seed)?;
    let norm = parse_norm(&args.p)?;
    let spec = UnifSpec { t: args.t, r: args.r, d: a.cols() as u64, seed: derive_seed(args.seed, "unif", 0) };
    let trials = preservation_trials(&a, &spec, norm, args.gamma, args.trials)?;
    let mut r = report("probe rate", args);
    r.row(["trial", "stat", "pass"]);
    for (i, t) in trials.iter().enumerate() {
        r.row([i.to_string(), fmt_f64(t.deviation), u8::from(t.pass).to_string()]);
    }
    let passed = trials.iter().filter(|t| t.pass).count();
    r.comment(&format!("rate: {}", fmt_f64(passed as f64 / trials.len() as f64)));
    r.finish(args.output.as_deref())
}

fn violation(args: &ViolationArgs) -> Result<()> {
    let a = build_map(&args.map, args.seed)?;
    let v = find_linf_violation(&a)?;
    let image = a.apply(&v.witness)?;
    let rechecked = Norm::Inf.reduce(image);
    if rechecked < 5.0 {
        return Err(CliError::Invariant(format!("witness gives ||Ax||_inf = {rechecked} < 5")));
    }
    let support: Vec<String> = v.witness.iter().map(|(i, x)| format!("{i}:{}", fmt_f64(x))).collect();
    let mut r = report("probe violation", args);
    r.row(["row", "value", "linf_image", "support"]);
    r.row([v.row.to_string(), fmt_f64(v.value), fmt_f64(rechecked), support.join(" ")]);
    r.finish(args.output.as_deref())
}

fn unif_stats(args: &UnifArgs) -> Result<()> {
    if args.trials == 0 {
        return Err(CliError::Input("--trials must be at least 1".into()));
    }
    let spec = UnifSpec { t: args.t, r: args.r, d: args.d, seed: derive_seed(args.seed, "unif", 0) };
    let mut sampler = UnifSampler::new(spec)?;
    let mut hit = HashSet::new();
    let mut total = 0.0;
    let mut r = report("probe unif-stats", args);
    r.row(["trial", "stat", "pass"]);
    for i in 0..args.trials {
        let u = sampler.sample();
        let sq: f64 = u.values().iter().map(|v| v * v).sum();
        total += sq;
        hit.extend(u.indices().iter().copied());
        r.row([i.to_string(), fmt_f64(sq), u8::from(u.nnz() == args.t).to_string()]);
    }
    r.comment(&format!("coverage: {}", fmt_f64(hit.len() as f64 / args.d as f64)));
    r.comment(&format!("mean_sq_norm: {}", fmt_f64(total / args.trials as f64)));
    r.comment(&format!("expected_sq_norm: {}", fmt_f64(args.t as f64 * args.r)));
    r.finish(args.output.as_deref())
}
