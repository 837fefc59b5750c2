use std::path::{Path, PathBuf};

use rayon::prelude::*;
use sparse_sketch_core::embed::SparseImage;
use sparse_sketch_core::hash::derive_seed;
use sparse_sketch_core::synth::random_nonneg;
use sparse_sketch_core::{
    plan_params, BirthdayMap, Dataset, EmbedParams, HashSpec, Mode, SparseVector, StackedEmbedding,
};

use super::{parse_norm, ratio, report};
use crate::cli::{DistortArgs, EmbedArgs, PlanArgs};
use crate::error::{CliError, Result};
use crate::io::{read_dataset, ParamsFile};
use crate::report::{csv_cell, fmt_f64, Report};

/// Widest dense embedding `embed` will write out.
const MAX_OUTPUT_DIM: u64 = 50_000_000;

/// Params and seed from `--params`, or planned from the flags and `ds`.
fn resolve_plan(plan: &PlanArgs, ds: &Dataset, p: Option<f64>, seed: u64) -> Result<(EmbedParams, u64)> {
    if let Some(path) = &plan.params {
        let file = ParamsFile::read(path)?;
        return Ok((file.params()?, file.seed));
    }
    let mode: Mode = plan.mode.parse().map_err(|_| {
        CliError::Input(format!(
            "unknown mode {:?}: expected all-p, linf-exact, sum-linf, sum-lp, discrete or custom",
            plan.mode
        ))
    })?;
    if mode == Mode::Custom {
        let (Some(m), Some(t)) = (plan.m, plan.copies) else {
            return Err(CliError::Input("custom mode needs --m and --copies".into()));
        };
        return Ok((EmbedParams::custom(m, t)?, seed));
    }
    let s = plan.s.unwrap_or(ds.max_sparsity()).max(1);
    let n = plan.n.unwrap_or(ds.len()).max(2);
    Ok((plan_params(mode, s, n, plan.eps, plan.delta, p)?, seed))
}

fn check_input(params: &EmbedParams, ds: &Dataset) -> Result<()> {
    if params.mode.requires_nonneg() {
        ds.require_nonneg().map_err(|e| {
            CliError::Input(format!("{e}; mode {} needs non-negative input", params.mode))
        })?;
    }
    Ok(())
}

fn default_params_path(output: &Path) -> PathBuf {
    let stem = output.file_stem().and_then(|s| s.to_str()).unwrap_or("embedding");
    output.with_file_name(format!("{stem}.params.json"))
}

pub fn run_embed(args: &EmbedArgs) -> Result<()> {
    let ds = read_dataset(&args.input, args.dim)?;
    let (params, seed) = resolve_plan(&args.plan, &ds, args.p, args.seed)?;
    check_input(&params, &ds)?;
    let width = params.output_dim();
    if width > MAX_OUTPUT_DIM {
        return Err(CliError::Precondition(format!(
            "embedding has {width} coordinates per vector, above the {MAX_OUTPUT_DIM} this command writes"
        )));
    }
    let f = StackedEmbedding::new(params, seed);
    let rows: Vec<String> = ds
        .vectors()
        .par_iter()
        .zip(ds.ids().par_iter())
        .map(|(x, id)| {
            let mut line = csv_cell(id);
            for v in f.embed(x) {
                line.push(',');
                line.push_str(&fmt_f64(v));
            }
            line
        })
        .collect();

    let mut r = report("embed", args);
    r.row(std::iter::once("id".to_owned()).chain((0..width).map(|i| format!("v{i}"))));
    for row in &rows {
        r.line(row);
    }
    let params_path = args.params_out.clone().or_else(|| args.output.as_deref().map(default_params_path));
    if let Some(path) = params_path {
        std::fs::write(&path, ParamsFile::new(&params, seed).to_json()).map_err(|e| CliError::io(&path, e))?;
    }
    r.finish(args.output.as_deref())
}

struct Summary {
    rows: usize,
    min: f64,
    max: f64,
    sum: f64,
}

impl Summary {
    fn new() -> Self {
        Summary { rows: 0, min: f64::INFINITY, max: f64::NEG_INFINITY, sum: 0.0 }
    }

    fn add(&mut self, r: f64) {
        self.rows += 1;
        self.min = self.min.min(r);
        self.max = self.max.max(r);
        self.sum += r;
    }

    fn write(&self, r: &mut Report, label: &str) {
        if self.rows == 0 {
            r.comment(&format!("summary{label}: rows=0"));
            return;
        }
        r.comment(&format!(
            "summary{label}: rows={} min_ratio={} max_ratio={} mean_ratio={}",
            self.rows,
            fmt_f64(self.min),
            fmt_f64(self.max),
            fmt_f64(self.sum / self.rows as f64)
        ));
    }
}

pub fn run_distort(args: &DistortArgs) -> Result<()> {
    if args.figure1 {
        return run_figure1(args);
    }
    let input = args.input.as_ref().ok_or_else(|| CliError::Input("distort needs --input (or --figure1)".into()))?;
    let norm = parse_norm(args.p.as_deref().unwrap_or("2"))?;
    let ds = read_dataset(input, args.dim)?;
    let (params, seed) = resolve_plan(&args.plan, &ds, norm.exponent(), args.seed)?;
    check_input(&params, &ds)?;
    let f = StackedEmbedding::new(params, seed);
    let images: Vec<Vec<SparseImage>> = ds.vectors().par_iter().map(|x| f.images(x)).collect();
    let p_label = norm.to_string();
    let mut r = report("distort", args);
    let mut summary = Summary::new();

    if args.vs_zero {
        let zero = f.images(&SparseVector::zeros(ds.dim()));
        r.row(["id", "p", "true", "embedded", "ratio"]);
        for (k, (id, x)) in ds.iter().enumerate() {
            let truth = x.norm(norm);
            let emb = f.distance_from_images(&images[k], &zero, norm);
            summary.add(ratio(emb, truth));
            r.row([csv_cell(id), p_label.clone(), fmt_f64(truth), fmt_f64(emb), fmt_f64(ratio(emb, truth))]);
        }
    } else {
        r.row(["pair", "p", "true", "embedded", "ratio"]);
        let xs = ds.vectors();
        let ids = ds.ids();
        let blocks: Vec<Vec<(String, f64, f64)>> = (0..xs.len())
            .into_par_iter()
            .map(|i| {
                (i + 1..xs.len())
                    .map(|j| {
                        let truth = xs[i].distance(&xs[j], norm).expect("dataset dims agree");
                        let emb = f.distance_from_images(&images[i], &images[j], norm);
                        (csv_cell(&format!("{}|{}", ids[i], ids[j])), truth, emb)
                    })
                    .collect()
            })
            .collect();
        for (pair, truth, emb) in blocks.into_iter().flatten() {
            summary.add(ratio(emb, truth));
            r.row([pair, p_label.clone(), fmt_f64(truth), fmt_f64(emb), fmt_f64(ratio(emb, truth))]);
        }
    }
    summary.write(&mut r, "");
    r.finish(args.output.as_deref())
}

const FIG_S: usize = 10;
const FIG_DIM: u64 = 1000;
const FIG_M: u64 = 50;

/// Per-vector norms under max-hash (m = 50, T = 1) and under the sum-hash
/// baseline with the same 50 buckets.
fn run_figure1(args: &DistortArgs) -> Result<()> {
    let norm = parse_norm(args.p.as_deref().unwrap_or("inf"))?;
    let ds = match &args.input {
        Some(path) => read_dataset(path, args.dim)?,
        None => {
            let xs = random_nonneg(args.trials, FIG_S, FIG_DIM, derive_seed(args.seed, "figure1-data", 0))?;
            let mut ds = Dataset::new(FIG_DIM);
            for (i, x) in xs.into_iter().enumerate() {
                ds.push(format!("x{i}"), x)?;
            }
            ds
        }
    };
    ds.require_nonneg()?;
    let max_map = StackedEmbedding::new(EmbedParams::custom(FIG_M, 1)?, derive_seed(args.seed, "figure1-maxhash", 0));
    let sum_map = BirthdayMap::new(HashSpec::new(derive_seed(args.seed, "figure1-sumhash", 0), 0, FIG_M));
    let zero = SparseVector::zeros(ds.dim());

    let mut r = report("distort", args);
    r.comment("baseline: sum-hash is the linear birthday map (same 50 buckets, values summed)");
    r.row(["map", "id", "p", "true", "embedded", "ratio"]);
    let p_label = norm.to_string();
    let mut max_sum = Summary::new();
    let mut sum_sum = Summary::new();
    let rows: Vec<(f64, f64, f64)> = ds
        .vectors()
        .par_iter()
        .map(|x| {
            let truth = x.norm(norm);
            let mh = max_map.estimate_distance(x, &zero, norm).expect("dims agree");
            let sh = norm.reduce(sum_map.embed(x));
            (truth, mh, sh)
        })
        .collect();
    for ((truth, mh, _), id) in rows.iter().zip(ds.ids()) {
        max_sum.add(ratio(*mh, *truth));
        r.row(["max-hash".to_owned(), csv_cell(id), p_label.clone(), fmt_f64(*truth), fmt_f64(*mh), fmt_f64(ratio(*mh, *truth))]);
    }
    for ((truth, _, sh), id) in rows.iter().zip(ds.ids()) {
        sum_sum.add(ratio(*sh, *truth));
        r.row(["sum-hash".to_owned(), csv_cell(id), p_label.clone(), fmt_f64(*truth), fmt_f64(*sh), fmt_f64(ratio(*sh, *truth))]);
    }
    max_sum.write(&mut r, " max-hash");
    sum_sum.write(&mut r, " sum-hash");
    r.finish(args.output.as_deref())
}
