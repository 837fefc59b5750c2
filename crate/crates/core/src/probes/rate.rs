use alloc::vec;
use alloc::vec::Vec;

use crate::probes::{DenseLinearMap, UnifSampler, UnifSpec};
use crate::{Error, Norm, Result};

/// Relative tolerance standing in for exact equality (`gamma = 0`).
pub const EXACT_TOL: f64 = 1e-9;

/// Outcome of one sampled vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trial {
    /// `| ||Au||^p - ||u||^p | / ||u||^p` (plain norms for `Inf`).
    pub deviation: f64,
    pub pass: bool,
}

/// Per-trial outcomes of the test `| ||Au||_p^p - ||u||_p^p | <= gamma ||u||_p^p`
/// on draws from `spec`. `gamma` below [`EXACT_TOL`] is raised to it.
pub fn preservation_trials(
    a: &DenseLinearMap,
    spec: &UnifSpec,
    norm: Norm,
    gamma: f64,
    trials: usize,
) -> Result<Vec<Trial>> {
    if a.cols() as u64 != spec.d {
        return Err(Error::DimensionMismatch { left: a.cols() as u64, right: spec.d });
    }
    if trials == 0 {
        return Err(Error::param("trials must be at least 1"));
    }
    if gamma.is_nan() || gamma < 0.0 {
        return Err(Error::param("gamma must be non-negative"));
    }
    let tol = gamma.max(EXACT_TOL);
    let power = |v: f64| match norm {
        Norm::P(_) => norm.pow_abs(v),
        Norm::Inf => libm::fabs(v),
    };
    let combine = |acc: f64, v: f64| match norm {
        Norm::P(_) => acc + v,
        Norm::Inf => acc.max(v),
    };
    let mut sampler = UnifSampler::new(*spec)?;
    let mut acc = vec![0.0; a.rows()];
    let mut touched = Vec::new();
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let u = sampler.sample();
        a.apply_touched(&u, &mut acc, &mut touched);
        let mut image = 0.0;
        for &r in &touched {
            image = combine(image, power(acc[r as usize]));
            acc[r as usize] = 0.0;
        }
        let orig = u.values().iter().fold(0.0, |s, &v| combine(s, power(v)));
        let deviation = if orig > 0.0 { libm::fabs(image - orig) / orig } else { image };
        out.push(Trial { deviation, pass: deviation <= tol });
    }
    Ok(out)
}

/// Fraction of `trials` draws whose norm `A` preserves to relative `gamma`.
pub fn preservation_rate(
    a: &DenseLinearMap,
    spec: &UnifSpec,
    norm: Norm,
    gamma: f64,
    trials: usize,
) -> Result<f64> {
    let t = preservation_trials(a, spec, norm, gamma, trials)?;
    Ok(t.iter().filter(|t| t.pass).count() as f64 / trials as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::BirthdayMap;
    use crate::hash::HashSpec;
    use proptest::prelude::*;

    fn spec(t: usize, d: u64, seed: u64) -> UnifSpec {
        UnifSpec { t, r: 1.0, d, seed }
    }

    #[test]
    fn identity_preserves_everything() {
        let a = DenseLinearMap::identity(30).unwrap();
        for gamma in [0.0, 0.1] {
            for norm in [Norm::L2, Norm::Inf, Norm::p(3.0).unwrap()] {
                assert_eq!(preservation_rate(&a, &spec(5, 30, 1), norm, gamma, 200).unwrap(), 1.0);
            }
        }
    }

    #[test]
    fn zero_map_preserves_nothing() {
        let a = DenseLinearMap::zeros(4, 30).unwrap();
        for gamma in [0.0, 0.5, 0.99] {
            assert_eq!(preservation_rate(&a, &spec(5, 30, 1), Norm::L2, gamma, 100).unwrap(), 0.0);
        }
    }

    #[test]
    fn birthday_map_rate() {
        // A draw fails only if its support holds both ends of a colliding
        // column pair; each pair lands in an 8-of-64 support w.p. 56/4032.
        let (s, d) = (8usize, 64u64);
        let map = BirthdayMap::new(HashSpec::new(77, 0, 100 * (s * s) as u64));
        let a = DenseLinearMap::from_birthday(&map, d as usize).unwrap();
        let colliding = (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .filter(|&(i, j)| map.bucket(i) == map.bucket(j))
            .count();
        let floor = 1.0 - colliding as f64 * 56.0 / 4032.0 - 0.006;
        let rate = preservation_rate(&a, &spec(s, d, 3), Norm::L2, 0.0, 10_000).unwrap();
        assert!(rate >= floor, "{rate} < {floor}");
        if colliding == 0 {
            assert_eq!(rate, 1.0);
        }
    }

    #[test]
    fn errors() {
        let a = DenseLinearMap::identity(10).unwrap();
        assert!(preservation_rate(&a, &spec(3, 11, 0), Norm::L2, 0.0, 10).is_err());
        assert!(preservation_rate(&a, &spec(3, 10, 0), Norm::L2, 0.0, 0).is_err());
        assert!(preservation_rate(&a, &spec(3, 10, 0), Norm::L2, -1.0, 10).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn monotone_in_gamma(seed in any::<u64>(), g1 in 0.0f64..2.0, g2 in 0.0f64..2.0) {
            let a = DenseLinearMap::gaussian(6, 20, seed, true).unwrap();
            let sp = spec(3, 20, seed ^ 1);
            let (lo, hi) = if g1 < g2 { (g1, g2) } else { (g2, g1) };
            let r_lo = preservation_rate(&a, &sp, Norm::L2, lo, 300).unwrap();
            let r_hi = preservation_rate(&a, &sp, Norm::L2, hi, 300).unwrap();
            prop_assert!(r_lo <= r_hi);
        }
    }
}
