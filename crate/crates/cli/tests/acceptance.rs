//! Acceptance run: one PASS/FAIL line per criterion, each with its pinned
//! tolerance and measured runtime. Failures are reported, not fatal, so the
//! rest of a workspace test run still executes; set `ACCEPTANCE_STRICT=1` to
//! exit non-zero when any criterion fails.
//!
//! Every random draw comes from `derive_seed(ROOT, tag, index)`, so the whole
//! run is reproducible.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use sparse_sketch_core::apps::{
    basic_cost_with, clustering_cost, diameter_exact, diameter_l1, diameter_linf_stream,
    enumerate_clusterings, maxcut_brute, maxcut_sketched, Centers, DistanceEstimator, Objective,
};
use sparse_sketch_core::embed::MaxHashMap;
use sparse_sketch_core::probes::{find_linf_violation, preservation_rate, DenseLinearMap, UnifSpec};
use sparse_sketch_core::synth::{random_discrete, random_nonneg};
use sparse_sketch_core::{
    derive_seed, plan_params, BirthdayMap, HashSpec, Mode, Norm, SparseVector, StackedEmbedding,
};

const ROOT: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn seed(tag: &str, i: u64) -> u64 {
    derive_seed(ROOT, tag, i)
}

fn norms() -> [Norm; 4] {
    [Norm::L1, Norm::L2, Norm::p(4.0).unwrap(), Norm::Inf]
}

/// `|a - b| <= tol * max(|a|, |b|)`.
fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn c1_non_expansion() -> Outcome {
    let cases = 10_000u64;
    let mut worst = f64::NEG_INFINITY;
    let mut bad = 0;
    for c in 0..cases {
        let dim = 20 + c % 60;
        let sx = 1 + (c % 20) as usize;
        let sy = 1 + (c / 20 % 20) as usize;
        let x = random_nonneg(1, sx, dim, seed("c1-x", c)).unwrap().remove(0);
        let y = random_nonneg(1, sy, dim, seed("c1-y", c)).unwrap().remove(0);
        for m in [1, 7, 100] {
            let f = MaxHashMap::new(HashSpec::new(seed("c1-map", c), 0, m));
            for norm in norms() {
                let got = f.embedded_distance(&x, &y, norm).unwrap();
                let truth = x.distance(&y, norm).unwrap();
                worst = worst.max(got - truth);
                if got > truth + 1e-9 {
                    bad += 1;
                }
            }
        }
    }
    outcome(
        bad == 0,
        format!("{cases} pairs x m in {{1,7,100}} x p in {{1,2,4,inf}}: {bad} expansions beyond 1e-9, max excess {worst:e}"),
    )
}

fn c2_exactness_rate() -> Outcome {
    let (s, delta, trials) = (8usize, 0.05, 10_000u64);
    let m = (100.0 * (s * s) as f64 / delta).ceil() as u64;
    let mut exact = 0;
    for t in 0..trials {
        let xs = random_nonneg(2, s, 1 << 40, seed("c2-data", t)).unwrap();
        let f = MaxHashMap::new(HashSpec::new(seed("c2-map", t), 0, m));
        let all = norms().into_iter().all(|norm| {
            close(f.embedded_distance(&xs[0], &xs[1], norm).unwrap(), xs[0].distance(&xs[1], norm).unwrap(), 1e-12)
        });
        exact += usize::from(all);
    }
    let rate = exact as f64 / trials as f64;
    let sigma = (delta * (1.0 - delta) / trials as f64).sqrt();
    let floor = 1.0 - delta - 3.0 * sigma;
    outcome(
        rate >= floor,
        format!("m={m}, {trials} hash seeds: all-p exact rate {rate:.4} (need >= {floor:.4}; equality to 1e-12 relative)"),
    )
}

fn c3_all_p() -> Outcome {
    let (n, s, eps, runs) = (100, 10, 0.2, 100u64);
    let xs = random_nonneg(n, s, 10_000, seed("c3-data", 0)).unwrap();
    let params = plan_params(Mode::AllP, s, n, eps, None, None).unwrap();
    let (m, t) = (params.m, params.copies);
    let mut good = 0;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for r in 0..runs {
        let f = StackedEmbedding::new(params, seed("c3-map", r));
        let sums = f.pairwise(&xs, &[1.0, 2.0, 4.0]).unwrap();
        let ok = (0..3).all(|e| {
            let (a, b) = sums.ratio_range(e);
            lo = lo.min(a);
            hi = hi.max(b);
            a >= 1.0 - eps && b <= 1.0 + eps
        });
        good += usize::from(ok);
    }
    outcome(
        good >= 99,
        format!("m={m}, T={t}: {good}/{runs} runs with every pair's p-th power ratio in [0.8, 1.2] for p=1,2,4 (need >= 99); ratios seen in [{lo:.4}, {hi:.4}]"),
    )
}

fn c4_linf_exact() -> Outcome {
    let (n, s, runs) = (100, 10, 100u64);
    let xs = random_nonneg(n, s, 10_000, seed("c3-data", 0)).unwrap();
    let params = plan_params(Mode::LinfExact, s, n, 0.2, None, None).unwrap();
    let (m, t) = (params.m, params.copies);
    let truth: Vec<f64> = pairs(n).map(|(i, j)| xs[i].distance(&xs[j], Norm::Inf).unwrap()).collect();
    let mut good = 0;
    for r in 0..runs {
        let f = StackedEmbedding::new(params, seed("c4-map", r));
        let images: Vec<_> = xs.iter().map(|x| f.images(x)).collect();
        let ok = pairs(n)
            .zip(&truth)
            .all(|((i, j), &d)| f.distance_from_images(&images[i], &images[j], Norm::Inf) == d);
        good += usize::from(ok);
    }
    outcome(good >= 99, format!("m={m}, T={t}: {good}/{runs} runs exact on all pairs, tolerance 0 (need >= 99)"))
}

fn c5_sum_sandwich() -> Outcome {
    let params = plan_params(Mode::SumLinf, 1, 2, 0.5, None, None).unwrap();
    let cases = 10_000u64;
    let mut bad = 0;
    for c in 0..cases {
        let s = 1 + (c % 20) as usize;
        let xs = random_nonneg(2, s, 50, seed("c5-data", c)).unwrap();
        let f = StackedEmbedding::new(params, seed("c5-map", c));
        let truth = xs[0].add(&xs[1]).unwrap().norm(Norm::Inf);
        let r = f.estimate_sum_norm(&xs[0], &xs[1], Norm::Inf).unwrap() / truth;
        if !(1.0..=2.0).contains(&r) {
            bad += 1;
        }
    }
    let e0 = SparseVector::new(2, [(0, 1.0)]).unwrap();
    let e1 = SparseVector::new(2, [(1, 1.0)]).unwrap();
    let tight = StackedEmbedding::new(params, 0).estimate_sum_norm(&e0, &e1, Norm::Inf).unwrap()
        / e0.add(&e1).unwrap().norm(Norm::Inf);
    outcome(
        bad == 0 && tight == 2.0,
        format!("m=T=1, {cases} pairs: {bad} ratios outside [1, 2]; (e0, e1) ratio {tight}"),
    )
}

fn c6_discrete() -> Outcome {
    let (n, s, eps, delta, runs) = (50, 5, 0.3, 3u32, 100u64);
    let xs = random_discrete(n, s, 10_000, delta, seed("c6-data", 0)).unwrap();
    let params = plan_params(Mode::Discrete, s, n, eps, Some(delta), Some(2.0)).unwrap();
    let (m, t) = (params.m, params.copies);
    let (mut good, mut good_two_sided) = (0, 0);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for r in 0..runs {
        let f = StackedEmbedding::new(params, seed("c6-map", r));
        let (a, b) = f.pairwise(&xs, &[2.0]).unwrap().ratio_range(0);
        lo = lo.min(a);
        hi = hi.max(b);
        good += usize::from(a >= 1.0 - eps && b <= 1.0 + 1e-9);
        good_two_sided += usize::from(a >= 1.0 - eps && b <= 1.0 + eps);
    }
    outcome(
        good >= 95,
        format!(
            "delta=3, p=2, m={m}, T={t}: {good}/{runs} runs with all sums in [(1-eps)T, T] (need >= 95); \
             sum/T ratios seen in [{lo:.4}, {hi:.4}]; {good_two_sided}/{runs} within [(1-eps)T, (1+eps)T]"
        ),
    )
}

fn c7_birthday_rate() -> Outcome {
    let (s, d, trials) = (10usize, 1000usize, 10_000);
    let m = 100 * (s * s) as u64;
    let a = DenseLinearMap::from_birthday(&BirthdayMap::new(HashSpec::new(seed("c7-map", 0), 0, m)), d).unwrap();
    let spec = UnifSpec { t: s, r: 1.0, d: d as u64, seed: seed("c7-unif", 0) };
    let rate = preservation_rate(&a, &spec, Norm::L2, 0.0, trials).unwrap();
    outcome(rate >= 0.98, format!("m={m}, d={d}, t={s}, {trials} draws, p=2, gamma=0: rate {rate:.4} (need >= 0.98)"))
}

fn c8_witness() -> Outcome {
    let (rows, d, mats) = (9usize, 1000usize, 100u64);
    let mut ok = 0;
    let mut least = f64::INFINITY;
    for i in 0..mats {
        let a = DenseLinearMap::random_sign(rows, d, seed("c8-map", i)).unwrap();
        let Ok(v) = find_linf_violation(&a) else { continue };
        let image = a.apply(&v.witness).unwrap();
        let value = image.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
        least = least.min(value);
        let binary = v.witness.values().iter().all(|&x| x == 1.0);
        ok += usize::from(value >= 5.0 && binary && v.witness.norm(Norm::Inf) == 1.0);
    }
    outcome(ok == mats as usize, format!("{mats} random ±1 maps {rows}x{d}: {ok} confirmed witnesses, smallest ||Ax||_inf = {least}"))
}

fn c9_gaussian_vs_birthday() -> Outcome {
    let (s, d, trials) = (16usize, 256usize, 10_000);
    let gamma = 0.01 / s as f64;
    let rows = s * s / 20;
    let g = DenseLinearMap::gaussian(rows, d, seed("c9-gauss", 0), true).unwrap();
    let spec = UnifSpec { t: s, r: 1.0, d: d as u64, seed: seed("c9-unif", 0) };
    let g_rate = preservation_rate(&g, &spec, Norm::L2, gamma, trials).unwrap();
    let m = 100 * (s * s) as u64;
    let b = DenseLinearMap::from_birthday(&BirthdayMap::new(HashSpec::new(seed("c9-birthday", 0), 0, m)), d).unwrap();
    let b_rate = preservation_rate(&b, &spec, Norm::L2, gamma, trials).unwrap();
    outcome(
        g_rate < 0.99 && b_rate >= 0.99,
        format!(
            "s=t={s}, d={d}, gamma={gamma}, {trials} draws: gaussian {rows} rows rate {g_rate:.4} (need < 0.99), \
             birthday m={m} rate {b_rate:.4} (need >= 0.99)"
        ),
    )
}

/// (never above, equal) counts for the l_inf stream and the l_1 sketch.
fn diameter_counts(seeds: u64, l1_dims: u32) -> ([usize; 2], [usize; 2]) {
    let (n, s) = (50, 5);
    let (mut linf, mut l1) = ([0; 2], [0; 2]);
    for i in 0..seeds {
        let xs = random_nonneg(n, s, 10_000, seed("c10-data", i)).unwrap();
        let map_seed = seed("c10-map", i);
        for (norm, counts) in [(Norm::Inf, &mut linf), (Norm::L1, &mut l1)] {
            let truth = diameter_exact(&xs, norm).unwrap();
            let got = match norm {
                Norm::Inf => diameter_linf_stream(&xs, s, map_seed).unwrap(),
                _ => diameter_l1(&xs, l1_dims, map_seed).unwrap(),
            };
            counts[0] += usize::from(got <= truth * (1.0 + 1e-9));
            counts[1] += usize::from(close(got, truth, 1e-9));
        }
    }
    (linf, l1)
}

fn c10_diameter() -> (Outcome, Outcome) {
    let seeds = 200;
    let (linf, l1) = diameter_counts(seeds, 20);
    let line = |name: &str, c: [usize; 2], extra: &str| {
        outcome(
            c[0] == seeds as usize && c[1] * 10 >= 9 * seeds as usize,
            format!("{name}, n=50, s=5{extra}: never above exact in {}/{seeds} seeds (need all), equal in {}/{seeds} (need >= 180)", c[0], c[1]),
        )
    };
    (line("l_inf stream, m=100s", linf, ""), line("l_1 sketch", l1, ", k=20 buckets"))
}

fn c11_maxcut() -> Outcome {
    let (n, s, eps, seeds) = (10, 4, 0.25, 100u64);
    let (mut never_above, mut deficit) = (0, 0.0);
    let mut m = 0;
    for i in 0..seeds {
        let xs = random_nonneg(n, s, 10_000, seed("c11-data", i)).unwrap();
        let truth = maxcut_brute(&xs, Norm::L2).unwrap().value;
        let sk = maxcut_sketched(&xs, Norm::L2, eps, seed("c11-map", i)).unwrap();
        m = sk.m;
        never_above += usize::from(sk.cut.value <= truth * (1.0 + 1e-9));
        deficit += (truth - sk.cut.value) / truth;
    }
    let mean = deficit / seeds as f64;
    outcome(
        never_above == seeds as usize && mean <= eps,
        format!("m={m}, p=2: sketched <= true (1e-9 relative) in {never_above}/{seeds} seeds; mean relative deficit {mean:.2e} (need <= 0.25)"),
    )
}

fn c12_clustering() -> Outcome {
    let (n, s, k, eps, seeds) = (9, 4, 2, 0.2, 100u64);
    let parts = enumerate_clusterings(n, k).unwrap();
    let params = plan_params(Mode::AllP, s, n, eps, None, None).unwrap();
    let objectives = [(Objective::Median, Norm::L1, 2.0), (Objective::Means, Norm::L2, 4.0), (Objective::Center, Norm::Inf, 2.0)];
    let (mut preserved, mut factor_ok, mut cases) = (0, 0, 0);
    let (mut lo, mut hi, mut worst_factor) = (f64::INFINITY, f64::NEG_INFINITY, 0.0f64);
    for i in 0..seeds {
        let xs = random_nonneg(n, s, 10_000, seed("c12-data", i)).unwrap();
        let f = StackedEmbedding::new(params, seed("c12-map", i));
        let images: Vec<_> = xs.iter().map(|x| f.images(x)).collect();
        let mut seed_ok = true;
        for &(obj, norm, bound) in &objectives {
            let exact: Vec<Vec<f64>> =
                (0..n).map(|a| (0..n).map(|b| xs[a].distance(&xs[b], norm).unwrap()).collect()).collect();
            let sketch: Vec<Vec<f64>> = (0..n)
                .map(|a| (0..n).map(|b| f.distance_from_images(&images[a], &images[b], norm)).collect())
                .collect();
            for c in &parts {
                let truth = basic_cost_with(c, obj, |a, b| exact[a][b]);
                let got = basic_cost_with(c, obj, |a, b| sketch[a][b]);
                let r = if truth == 0.0 { 1.0 } else { got / truth };
                lo = lo.min(r);
                hi = hi.max(r);
                seed_ok &= (1.0 - eps..=1.0 + eps).contains(&r);
                let cont = clustering_cost(&xs, c, obj, norm, Centers::Continuous).unwrap();
                let factor = truth / cont;
                worst_factor = worst_factor.max(factor / bound);
                cases += 1;
                factor_ok += usize::from(truth >= cont * (1.0 - 1e-9) && factor <= bound * (1.0 + 1e-9));
            }
        }
        preserved += usize::from(seed_ok);
    }
    outcome(
        preserved >= 95 && factor_ok == cases,
        format!(
            "m={}, T={}, {} partitions x 3 objectives: {preserved}/{seeds} seeds with every basic cost within 1±0.2 (need >= 95), ratios in [{lo:.4}, {hi:.4}]; \
             basic/continuous within [1, bound] in {factor_ok}/{cases} (need all), worst factor/bound {worst_factor:.3}",
            params.m,
            params.copies,
            parts.len()
        ),
    )
}

fn c13_estimator() -> Outcome {
    let (n, s, p, eps, queries) = (200, 5, 4u32, 0.25, 100);
    let dim = 2_000;
    let xs = random_nonneg(n, s, dim, seed("c13-data", 0)).unwrap();
    let qs = random_nonneg(queries, s, dim, seed("c13-queries", 0)).unwrap();
    let est = DistanceEstimator::build(&xs, p, eps, seed("c13-map", 0)).unwrap();
    let norm = Norm::p(f64::from(p)).unwrap();
    let expected_ops = est.reps() as u64 * est.m() * u64::from(p + 1);
    let (mut within, mut ops_ok) = (0, true);
    for q in &qs {
        let truth: f64 = xs.iter().map(|x| x.distance(q, norm).unwrap().powi(p as i32)).sum();
        let (got, ops) = est.query_counted(q).unwrap();
        ops_ok &= ops == expected_ops;
        within += usize::from((1.0 - eps..=1.0 + eps).contains(&(got / truth)));
    }
    // work must scale with R, m and p: a smaller shape counts proportionally fewer operations
    let small = DistanceEstimator::with_shape(&xs[..10], 2, eps, 500, 3, 1).unwrap();
    let (_, small_ops) = small.query_counted(&qs[0]).unwrap();
    ops_ok &= small_ops == 3 * 500 * 3;
    outcome(
        within >= 95 && ops_ok,
        format!(
            "R={}, m={}, p={p}: {within}/{queries} median estimates within 1±0.25 (need >= 95); ops per query {} = R·m·(p+1): {ops_ok}",
            est.reps(),
            est.m(),
            expected_ops
        ),
    )
}

fn cli(args: &[&str], threads: &str) -> Result<(), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_sparse-sketch"))
        .arg("--threads")
        .arg(threads)
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.success() {
        Ok(())
    } else {
        Err(format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr).trim()))
    }
}

fn c14_determinism() -> Outcome {
    let tmp = tempfile::TempDir::new().unwrap();
    let dir = tmp.path();
    let p = |name: &str| dir.join(name).to_str().unwrap().to_owned();
    let (data, queries, signed) = (p("data.txt"), p("queries.txt"), p("signed.txt"));
    let setup = [
        vec!["gen", "--n", "40", "--s", "5", "--dim", "5000", "--seed", "3", "--output", &data],
        vec!["gen", "--n", "10", "--s", "5", "--dim", "5000", "--seed", "4", "--output", &queries],
        vec!["gen", "--n", "3", "--s", "2", "--dim", "5000", "--kind", "discrete", "--delta", "1", "--seed", "5", "--output", &signed],
    ];
    for args in &setup {
        if let Err(e) = cli(args, "1") {
            return outcome(false, e);
        }
    }
    // each command writes `out.*` files in the run directory
    let commands: Vec<Vec<&str>> = vec![
        vec!["gen", "--n", "20", "--s", "3", "--seed", "8", "--output", "OUT.txt"],
        vec!["embed", "--input", &queries, "--mode", "all-p", "--eps", "0.9", "--seed", "8", "--output", "OUT.csv"],
        vec!["embed", "--input", &data, "--mode", "linf-exact", "--output", "OUT.csv", "--params-out", "OUT.json"],
        vec!["embed", "--input", &signed, "--mode", "discrete", "--delta", "1", "--p", "1", "--eps", "0.9", "--output", "OUT.csv"],
        vec!["distort", "--input", &data, "--mode", "linf-exact", "--p", "inf", "--output", "OUT.csv"],
        vec!["distort", "--figure1", "--trials", "200", "--seed", "8", "--output", "OUT.csv"],
        vec!["apps", "diameter", "--input", &data, "--p", "1", "--trials", "5", "--output", "OUT.csv"],
        vec!["apps", "maxcut", "--input", &queries, "--trials", "3", "--output", "OUT.csv"],
        vec!["apps", "cluster-cost", "--input", &queries, "--objective", "means", "--trials", "3", "--output", "OUT.csv"],
        vec!["apps", "dist-est", "--input", &data, "--queries", &queries, "--estimator-out", "OUT.json", "--output", "OUT.csv"],
        vec!["probe", "rate", "--map-kind", "gaussian", "--rows", "20", "--d", "200", "--t", "5", "--gamma", "0.1", "--output", "OUT.csv"],
        vec!["probe", "violation", "--map-kind", "random-sign", "--rows", "9", "--d", "1000", "--output", "OUT.csv", "--map-out", "OUT.map"],
        vec!["probe", "unif-stats", "--t", "5", "--d", "50", "--output", "OUT.csv"],
    ];
    let mut differing = Vec::new();
    for (c, args) in commands.iter().enumerate() {
        let mut outputs: Vec<Vec<Vec<u8>>> = Vec::new();
        for (run, threads) in ["1", "1", "2"].iter().enumerate() {
            let run_dir = dir.join(format!("c{c}-r{run}"));
            std::fs::create_dir(&run_dir).unwrap();
            let args: Vec<String> = args
                .iter()
                .map(|a| match a.strip_prefix("OUT") {
                    Some(ext) => run_dir.join(format!("out{ext}")).to_str().unwrap().to_owned(),
                    None => (*a).to_owned(),
                })
                .collect();
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            if let Err(e) = cli(&args, threads) {
                return outcome(false, e);
            }
            outputs.push(read_sorted(&run_dir));
        }
        if outputs.iter().any(|o| o != &outputs[0]) || outputs[0].is_empty() {
            differing.push(format!("{} {}", args[0], args[1]));
        }
    }
    outcome(
        differing.is_empty(),
        format!(
            "{} commands, each run twice with --threads 1 and once with --threads 2: {} produced differing files {differing:?}",
            commands.len(),
            differing.len()
        ),
    )
}

fn read_sorted(dir: &Path) -> Vec<Vec<u8>> {
    let mut names: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    names.sort();
    names.iter().map(|p| std::fs::read(p).unwrap()).collect()
}

fn report(id: &str, limit: Duration, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = run();
    let took = start.elapsed();
    finish(id, limit, took, o)
}

fn finish(id: &str, limit: Duration, took: Duration, o: Outcome) -> bool {
    let in_time = took <= limit;
    let pass = o.pass && in_time;
    let verdict = if pass { "PASS" } else { "FAIL" };
    let late = if in_time { "" } else { " OVER BUDGET" };
    println!(
        "{verdict} criterion {id}: {} [{:.2} s, budget {} s{late}]",
        o.detail,
        took.as_secs_f64(),
        limit.as_secs()
    );
    pass
}

fn main() {
    let secs = Duration::from_secs;
    let mut all = vec![
        report("1", secs(10), c1_non_expansion),
        report("2", secs(30), c2_exactness_rate),
        report("3", secs(120), c3_all_p),
        report("4", secs(60), c4_linf_exact),
        report("5", secs(5), c5_sum_sandwich),
        report("6", secs(60), c6_discrete),
        report("7", secs(30), c7_birthday_rate),
        report("8", secs(5), c8_witness),
        report("9", secs(60), c9_gaussian_vs_birthday),
    ];
    // both diameter lines share one run and its runtime budget
    let start = Instant::now();
    let (linf, l1) = c10_diameter();
    let took = start.elapsed();
    all.push(finish("10a", secs(60), took, linf));
    all.push(finish("10b", secs(60), took, l1));
    all.push(report("11", secs(120), c11_maxcut));
    all.push(report("12", secs(120), c12_clustering));
    all.push(report("13", secs(60), c13_estimator));
    // no runtime budget is pinned for determinism
    all.push(report("14", secs(600), c14_determinism));
    let failed = all.iter().filter(|&&p| !p).count();
    println!("acceptance: {} passed, {failed} failed", all.len() - failed);
    if failed > 0 && std::env::var_os("ACCEPTANCE_STRICT").is_some_and(|v| v == "1") {
        std::process::exit(1);
    }
}
