use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Which guarantee the planned `(m, T)` targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `||F(x)-F(y)||_p^p / T` within `1 ± eps` of `||x-y||_p^p`, every `p`.
    AllP,
    /// Exact `l_inf` distances.
    LinfExact,
    /// `||F(x)+F(y)||_inf` within `[1, 2]` of `||x+y||_inf`; `m = T = 1`.
    SumLinf,
    /// `||F(x)+F(y)||_p^p / T` within `1 ± eps` of `||x+y||_p^p`.
    SumLp,
    /// Signed vectors with integer entries in `[-delta, delta]`.
    Discrete,
    /// `(m, T)` given directly.
    Custom,
}

impl Mode {
    pub const ALL: [Mode; 6] =
        [Mode::AllP, Mode::LinfExact, Mode::SumLinf, Mode::SumLp, Mode::Discrete, Mode::Custom];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::AllP => "all-p",
            Mode::LinfExact => "linf-exact",
            Mode::SumLinf => "sum-linf",
            Mode::SumLp => "sum-lp",
            Mode::Discrete => "discrete",
            Mode::Custom => "custom",
        }
    }

    /// Modes whose guarantees need non-negative input.
    pub fn requires_nonneg(self) -> bool {
        !matches!(self, Mode::Discrete | Mode::Custom)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        Mode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::param(alloc::format!("unknown mode `{s}`")))
    }
}

/// Constants standing in for the asymptotic `O(.)` terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanConstants {
    /// all-p: `m = ceil(all_p_m * s / eps)`.
    pub all_p_m: f64,
    /// all-p: `T = ceil(all_p_t * ln(n s) / eps)`.
    pub all_p_t: f64,
    /// linf-exact: `m = linf_m * s`.
    pub linf_m: u64,
    /// linf-exact: `T = ceil(linf_t * ln n) + 1`.
    pub linf_t: f64,
    /// sum-lp and discrete: `m = ceil(sq_m * s^2 * base^p / eps)`.
    pub sq_m: f64,
    /// sum-lp and discrete: `T = ceil(sq_t * ln n * base^p / eps)`.
    pub sq_t: f64,
    /// Exponent base for sum-lp; discrete uses `2 * delta`.
    pub sum_lp_base: f64,
}

impl Default for PlanConstants {
    fn default() -> Self {
        PlanConstants {
            all_p_m: 200.0,
            all_p_t: 50.0,
            linf_m: 20,
            linf_t: 3.0,
            sq_m: 100.0,
            sq_t: 50.0,
            sum_lp_base: 2.0,
        }
    }
}

/// A planned `(m, T)` together with the inputs that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmbedParams {
    pub mode: Mode,
    pub s: usize,
    pub n: usize,
    pub eps: f64,
    pub delta: Option<u32>,
    pub p: Option<f64>,
    /// Buckets per copy.
    pub m: u64,
    /// Number of stacked copies `T`.
    pub copies: u64,
}

impl EmbedParams {
    /// Explicit shape, no planning.
    pub fn custom(m: u64, copies: u64) -> Result<Self> {
        if m == 0 || copies == 0 {
            return Err(Error::param("m and T must be at least 1"));
        }
        Ok(EmbedParams { mode: Mode::Custom, s: 0, n: 0, eps: 0.0, delta: None, p: None, m, copies })
    }

    /// `m * T`.
    pub fn output_dim(&self) -> u64 {
        self.m * self.copies
    }
}

pub fn plan_params(
    mode: Mode,
    s: usize,
    n: usize,
    eps: f64,
    delta: Option<u32>,
    p: Option<f64>,
) -> Result<EmbedParams> {
    plan_params_with(&PlanConstants::default(), mode, s, n, eps, delta, p)
}

fn ceil_u64(v: f64) -> Result<u64> {
    let c = libm::ceil(v);
    if !(c.is_finite() && c <= u64::MAX as f64 / 2.0) {
        return Err(Error::param("planned size overflows"));
    }
    Ok((c as u64).max(1))
}

pub fn plan_params_with(
    k: &PlanConstants,
    mode: Mode,
    s: usize,
    n: usize,
    eps: f64,
    delta: Option<u32>,
    p: Option<f64>,
) -> Result<EmbedParams> {
    if mode == Mode::Custom {
        return Err(Error::param("custom mode has no plan; use EmbedParams::custom"));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::param("eps must lie in (0, 1)"));
    }
    if s == 0 {
        return Err(Error::param("s must be at least 1"));
    }
    if n < 2 {
        return Err(Error::param("n must be at least 2"));
    }
    let sf = s as f64;
    let ln_n = libm::log(n as f64);
    let need_p = || match p {
        Some(p) if p >= 1.0 && p.is_finite() => Ok(p),
        _ => Err(Error::param("this mode needs a finite p >= 1")),
    };
    let (m, copies, delta, p) = match mode {
        Mode::AllP => (
            ceil_u64(k.all_p_m * sf / eps)?,
            ceil_u64(k.all_p_t * libm::log(n as f64 * sf) / eps)?,
            None,
            None,
        ),
        Mode::LinfExact => (k.linf_m * s as u64, ceil_u64(k.linf_t * ln_n)? + 1, None, None),
        Mode::SumLinf => (1, 1, None, None),
        Mode::SumLp => {
            let p = need_p()?;
            let blow = libm::pow(k.sum_lp_base, p);
            (ceil_u64(k.sq_m * sf * sf * blow / eps)?, ceil_u64(k.sq_t * ln_n * blow / eps)?, None, Some(p))
        }
        Mode::Discrete => {
            let p = need_p()?;
            let d = match delta {
                Some(d) if d >= 1 => d,
                _ => return Err(Error::param("discrete mode needs an integer delta >= 1")),
            };
            let blow = libm::pow(2.0 * f64::from(d), p);
            (
                ceil_u64(k.sq_m * sf * sf * blow / eps)?,
                ceil_u64(k.sq_t * ln_n * blow / eps)?,
                Some(d),
                Some(p),
            )
        }
        Mode::Custom => unreachable!(),
    };
    Ok(EmbedParams { mode, s, n, eps, delta, p, m, copies })
}
