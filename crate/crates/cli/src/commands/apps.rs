use rayon::prelude::*;
use sparse_sketch_core::apps::{
    basic_cost_with, clustering_cost, diameter_exact, diameter_l1, diameter_linf_stream, diameter_projected,
    maxcut_brute, maxcut_sketched, projected_buckets, random_clustering, Centers, DistanceEstimator, Objective,
};
use sparse_sketch_core::embed::SparseImage;
use sparse_sketch_core::hash::derive_seed;
use sparse_sketch_core::{plan_params, Mode, Norm, StackedEmbedding};

use super::{app_row, check_not_above, parse_norm, ratio, report, require_nonneg};
use crate::cli::{AppsCommand, ClusterArgs, DiameterArgs, DistEstArgs, MaxcutArgs};
use crate::error::{CliError, Result};
use crate::io::{read_dataset, EstimatorFile};
use crate::report::{csv_cell, fmt_f64};

const HEADER: [&str; 4] = ["seed", "true_value", "sketch_value", "ratio"];

pub fn run_apps(cmd: &AppsCommand) -> Result<()> {
    match cmd {
        AppsCommand::Diameter(a) => diameter(a),
        AppsCommand::Maxcut(a) => maxcut(a),
        AppsCommand::ClusterCost(a) => cluster_cost(a),
        AppsCommand::DistEst(a) => dist_est(a),
    }
}

fn trial_seeds(seed: u64, tag: &str, trials: usize) -> Result<Vec<u64>> {
    if trials == 0 {
        return Err(CliError::Input("--trials must be at least 1".into()));
    }
    Ok((0..trials as u64).map(|j| derive_seed(seed, tag, j)).collect())
}

fn diameter(args: &DiameterArgs) -> Result<()> {
    let ds = read_dataset(&args.input, args.dim)?;
    require_nonneg(&ds)?;
    let norm = parse_norm(&args.p)?;
    let s = args.s.unwrap_or(ds.max_sparsity()).max(1);
    let xs = ds.vectors();
    let truth = diameter_exact(xs, norm)?;
    let seeds = trial_seeds(args.seed, "diameter", args.trials)?;
    let sketches: Vec<Result<f64>> = seeds
        .par_iter()
        .map(|&seed| {
            Ok(match norm {
                Norm::Inf => diameter_linf_stream(xs, s, seed)?,
                n if n == Norm::L1 => diameter_l1(xs, args.k, seed)?,
                _ => diameter_projected(xs, norm, projected_buckets(s), seed)?,
            })
        })
        .collect();
    let mut r = report("apps diameter", args);
    r.row(HEADER);
    for (seed, sketch) in seeds.iter().zip(sketches) {
        let sketch = sketch?;
        check_not_above("diameter", truth, sketch)?;
        app_row(&mut r, *seed, truth, sketch);
    }
    r.finish(args.output.as_deref())
}

fn maxcut(args: &MaxcutArgs) -> Result<()> {
    let ds = read_dataset(&args.input, args.dim)?;
    require_nonneg(&ds)?;
    let norm = parse_norm(&args.p)?;
    let xs = ds.vectors();
    let best = maxcut_brute(xs, norm)?;
    let seeds = trial_seeds(args.seed, "maxcut", args.trials)?;
    let sketches: Vec<Result<f64>> =
        seeds.par_iter().map(|&seed| Ok(maxcut_sketched(xs, norm, args.eps, seed)?.cut.value)).collect();
    let mut r = report("apps maxcut", args);
    let side: String = best.side.iter().map(|&b| if b { '1' } else { '0' }).collect();
    r.comment(&format!("exact cut sides: {side}"));
    r.row(HEADER);
    for (seed, sketch) in seeds.iter().zip(sketches) {
        let sketch = sketch?;
        check_not_above("max-cut", best.value, sketch)?;
        app_row(&mut r, *seed, best.value, sketch);
    }
    r.finish(args.output.as_deref())
}

fn cluster_cost(args: &ClusterArgs) -> Result<()> {
    let ds = read_dataset(&args.input, args.dim)?;
    require_nonneg(&ds)?;
    let objective: Objective = args.objective.parse()?;
    let default_p = match objective {
        Objective::Median => "1",
        Objective::Means => "2",
        Objective::Center => "inf",
    };
    let norm = parse_norm(args.p.as_deref().unwrap_or(default_p))?;
    let xs = ds.vectors();
    let s = ds.max_sparsity().max(1);
    let params = plan_params(Mode::AllP, s, xs.len().max(2), args.eps, None, None)?;
    let seeds = trial_seeds(args.seed, "cluster", args.trials)?;
    let rows: Vec<Result<(f64, f64)>> = seeds
        .par_iter()
        .map(|&seed| {
            let c = random_clustering(xs.len(), args.k, derive_seed(seed, "labels", 0))?;
            let truth = clustering_cost(xs, &c, objective, norm, Centers::Basic)?;
            let f = StackedEmbedding::new(params, derive_seed(seed, "embedding", 0));
            let images: Vec<Vec<SparseImage>> = xs.iter().map(|x| f.images(x)).collect();
            let sketch = basic_cost_with(&c, objective, |i, j| f.distance_from_images(&images[i], &images[j], norm));
            Ok((truth, sketch))
        })
        .collect();
    let mut r = report("apps cluster-cost", args);
    r.row(HEADER);
    for (seed, row) in seeds.iter().zip(rows) {
        let (truth, sketch) = row?;
        app_row(&mut r, *seed, truth, sketch);
    }
    r.finish(args.output.as_deref())
}

fn dist_est(args: &DistEstArgs) -> Result<()> {
    let data = args.input.as_ref().map(|p| read_dataset(p, args.dim)).transpose()?;
    if let Some(ds) = &data {
        require_nonneg(ds)?;
    }
    let est = match (&args.estimator, &data) {
        (Some(path), _) => EstimatorFile::read(path)?.estimator()?,
        (None, Some(ds)) => DistanceEstimator::build(ds.vectors(), args.p, args.eps, args.seed)?,
        (None, None) => return Err(CliError::Input("dist-est needs --input or --estimator".into())),
    };
    let dim = args.dim.or(est.dim()).or(data.as_ref().map(|d| d.dim()));
    let queries = read_dataset(&args.queries, dim)?;
    require_nonneg(&queries)?;
    if let Some(path) = &args.estimator_out {
        let json = serde_json::to_string(&EstimatorFile::new(&est)).expect("estimator serializes");
        std::fs::write(path, json + "\n").map_err(|e| CliError::io(path, e))?;
    }
    let p = f64::from(est.p());
    let norm = Norm::p(p)?;
    let rows: Vec<Result<(f64, Option<f64>)>> = queries
        .vectors()
        .par_iter()
        .map(|y| {
            let sketch = est.query(y)?;
            let truth = match &data {
                Some(ds) => {
                    let mut total = 0.0;
                    for x in ds.vectors() {
                        total += norm.pow_abs(x.distance(y, norm)?);
                    }
                    Some(total)
                }
                None => None,
            };
            Ok((sketch, truth))
        })
        .collect();
    let mut r = report("apps dist-est", args);
    r.comment(&format!("R={} m={} p={}", est.reps(), est.m(), est.p()));
    r.row(["id", "seed", "true_value", "sketch_value", "ratio"]);
    for (id, row) in queries.ids().iter().zip(rows) {
        let (sketch, truth) = row?;
        let (t, q) = match truth {
            Some(t) => (fmt_f64(t), fmt_f64(ratio(sketch, t))),
            None => (String::new(), String::new()),
        };
        r.row([csv_cell(id), est.seed().to_string(), t, fmt_f64(sketch), q]);
    }
    r.finish(args.output.as_deref())
}
