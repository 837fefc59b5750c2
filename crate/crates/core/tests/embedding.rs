//! Monte-Carlo checks of the planned embeddings against brute-force distances.

use sparse_sketch_core::synth::{random_discrete, random_nonneg};
use sparse_sketch_core::{
    plan_params, BirthdayMap, HashSpec, Mode, Norm, SparseVector, StackedEmbedding,
};

#[test]
fn linf_exact_mode_is_exact_for_every_pair() {
    let xs = random_nonneg(40, 4, 10_000, 1).unwrap();
    let params = plan_params(Mode::LinfExact, 4, 40, 0.5, None, None).unwrap();
    for seed in 0..5 {
        let f = StackedEmbedding::new(params, seed);
        for (i, x) in xs.iter().enumerate() {
            for y in &xs[i + 1..] {
                let truth = x.distance(y, Norm::Inf).unwrap();
                assert_eq!(f.estimate_distance(x, y, Norm::Inf).unwrap(), truth);
            }
        }
    }
}

#[test]
fn all_p_mode_within_eps() {
    let (n, s, eps) = (20, 3, 0.3);
    let xs = random_nonneg(n, s, 1 << 40, 2).unwrap();
    let params = plan_params(Mode::AllP, s, n, eps, None, None).unwrap();
    let f = StackedEmbedding::new(params, 11);
    let sums = f.pairwise(&xs, &[1.0, 2.0, 4.0]).unwrap();
    for e in 0..3 {
        let (lo, hi) = sums.ratio_range(e);
        assert!(lo >= 1.0 - eps && hi <= 1.0 + 1e-9, "exponent #{e}: [{lo}, {hi}]");
    }
}

#[test]
fn discrete_mode_ratio_band() {
    let (n, s, eps, delta) = (10, 2, 0.5, 1);
    let xs = random_discrete(n, s, 1 << 30, delta, 3).unwrap();
    let params = plan_params(Mode::Discrete, s, n, eps, Some(delta), Some(1.0)).unwrap();
    let f = StackedEmbedding::new(params, 4);
    let sums = f.pairwise(&xs, &[1.0]).unwrap();
    let (lo, hi) = sums.ratio_range(0);
    assert!(lo >= 1.0 - eps && hi <= 1.0 + 1e-9, "[{lo}, {hi}]");
}

#[test]
fn sum_linf_sandwich() {
    let xs = random_nonneg(30, 5, 100, 5).unwrap();
    let params = plan_params(Mode::SumLinf, 5, 30, 0.5, None, None).unwrap();
    let f = StackedEmbedding::new(params, 0);
    for (i, x) in xs.iter().enumerate() {
        for y in &xs[i + 1..] {
            let truth = x.add(y).unwrap().norm(Norm::Inf);
            let got = f.estimate_sum_norm(x, y, Norm::Inf).unwrap();
            assert!(got >= truth && got <= 2.0 * truth, "{got} vs {truth}");
        }
    }
}

#[test]
fn birthday_collision_rate() {
    // m = ceil(100 s^2 / delta): a fixed support collides under a fresh hash
    // with probability at most C(s,2)/m < delta/200.
    let (s, delta) = (5usize, 0.1);
    let m = (100.0 * (s * s) as f64 / delta).ceil() as u64;
    let x = SparseVector::new(1 << 30, (0..s as u64).map(|i| (i * 7_654_321, 1.0 + i as f64))).unwrap();
    let trials = 10_000;
    let preserved = (0..trials)
        .filter(|&seed| {
            let map = BirthdayMap::new(HashSpec::new(seed, 0, m));
            let y = map.embed(&x);
            (y.iter().map(|v| v * v).sum::<f64>() - x.norm(Norm::L2).powi(2)).abs() <= 1e-9
        })
        .count();
    let rate = preserved as f64 / trials as f64;
    let sigma = (delta * (1.0 - delta) / trials as f64).sqrt();
    assert!(rate >= 1.0 - delta - 3.0 * sigma, "{rate}");
}
