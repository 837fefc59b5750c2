use core::fmt;

use crate::{Error, Result};

/// An `l_p` norm with `p >= 1`, or the `l_inf` norm.
///
/// `Inf` is its own variant rather than a large exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Norm {
    P(Exponent),
    Inf,
}

/// A validated finite norm exponent (`p >= 1`).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Exponent(f64);

impl Exponent {
    pub fn get(self) -> f64 {
        self.0
    }
}

impl Norm {
    pub const L1: Norm = Norm::P(Exponent(1.0));
    pub const L2: Norm = Norm::P(Exponent(2.0));

    pub fn p(p: f64) -> Result<Norm> {
        if p.is_infinite() && p > 0.0 {
            return Ok(Norm::Inf);
        }
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidNorm(p));
        }
        Ok(Norm::P(Exponent(p)))
    }

    /// The finite exponent, `None` for `Inf`.
    pub fn exponent(self) -> Option<f64> {
        match self {
            Norm::P(e) => Some(e.0),
            Norm::Inf => None,
        }
    }

    /// `|v|^p`.
    #[inline]
    pub fn pow_abs(self, v: f64) -> f64 {
        match self {
            Norm::P(Exponent(p)) => pow_abs(v, p),
            Norm::Inf => libm::fabs(v),
        }
    }

    /// Combine per-coordinate magnitudes into the norm value: the sum of
    /// `|v|^p` raised to `1/p`, or the maximum for `Inf`. Large exponents are
    /// evaluated relative to the largest magnitude so the sum cannot
    /// overflow or vanish.
    pub fn reduce<I>(self, values: I) -> f64
    where
        I: IntoIterator<Item = f64>,
        I::IntoIter: Clone,
    {
        let values = values.into_iter();
        match self {
            Norm::Inf => values.fold(0.0, |acc, v| acc.max(libm::fabs(v))),
            Norm::P(Exponent(p)) => {
                let sum: f64 = values.clone().map(|v| pow_abs(v, p)).sum();
                if sum.is_finite() && (sum > f64::MIN_POSITIVE || p <= 4.0) {
                    return root(sum, p);
                }
                let top = values.clone().fold(0.0f64, |acc, v| acc.max(libm::fabs(v)));
                if top == 0.0 || !top.is_finite() {
                    return top;
                }
                let scaled: f64 = values.map(|v| pow_abs(v / top, p)).sum();
                top * root(scaled, p)
            }
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Norm::P(e) => write!(f, "{}", e.0),
            Norm::Inf => f.write_str("inf"),
        }
    }
}

impl core::str::FromStr for Norm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Norm> {
        match s.trim() {
            "inf" | "Inf" | "INF" | "infinity" => Ok(Norm::Inf),
            other => {
                let p: f64 = other.parse().map_err(|_| Error::InvalidNorm(f64::NAN))?;
                Norm::p(p)
            }
        }
    }
}

#[inline]
pub(crate) fn pow_abs(v: f64, p: f64) -> f64 {
    let a = libm::fabs(v);
    if p == 1.0 {
        a
    } else if p == 2.0 {
        a * a
    } else if p == 4.0 {
        let sq = a * a;
        sq * sq
    } else {
        libm::pow(a, p)
    }
}

#[inline]
pub(crate) fn root(sum: f64, p: f64) -> f64 {
    if p == 1.0 {
        sum
    } else if p == 2.0 {
        libm::sqrt(sum)
    } else {
        libm::pow(sum, 1.0 / p)
    }
}
