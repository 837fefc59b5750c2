use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::seq::SliceRandom;

use super::check_same_dim;
use crate::{Error, Norm, Result, SparseVector};

/// Largest point count accepted by [`enumerate_clusterings`].
const ENUM_MAX_POINTS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// Sum of distances to the center.
    Median,
    /// Sum of squared distances to the center.
    Means,
    /// Largest distance to the center.
    Center,
}

impl Objective {
    pub fn as_str(self) -> &'static str {
        match self {
            Objective::Median => "median",
            Objective::Means => "means",
            Objective::Center => "center",
        }
    }

    fn point_cost(self, d: f64) -> f64 {
        match self {
            Objective::Means => d * d,
            _ => d,
        }
    }

    fn combine(self, acc: f64, c: f64) -> f64 {
        match self {
            Objective::Center => acc.max(c),
            _ => acc + c,
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "median" => Ok(Objective::Median),
            "means" => Ok(Objective::Means),
            "center" => Ok(Objective::Center),
            _ => Err(Error::param(alloc::format!("unknown objective {s:?}"))),
        }
    }
}

/// Where cluster centers may sit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Centers {
    /// Centers restricted to cluster members.
    Basic,
    /// Unrestricted centers; closed forms exist only for median/`l_1`,
    /// means/`l_2` and center/`l_inf`.
    Continuous,
}

impl FromStr for Centers {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "basic" => Ok(Centers::Basic),
            "continuous" => Ok(Centers::Continuous),
            _ => Err(Error::param(alloc::format!("unknown centers mode {s:?}"))),
        }
    }
}

/// Assignment of point indices to `k` non-empty clusters `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clustering {
    labels: Vec<usize>,
    k: usize,
}

impl Clustering {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::TooFewPoints { needed: 1, got: 0 });
        }
        let k = labels.iter().max().map_or(0, |&m| m + 1);
        let mut used = vec![false; k];
        labels.iter().for_each(|&l| used[l] = true);
        if let Some(empty) = used.iter().position(|&u| !u) {
            return Err(Error::param(alloc::format!("cluster {empty} is empty")));
        }
        Ok(Clustering { labels, k })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Member indices of each cluster, in index order.
    pub fn clusters(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        self.labels.iter().enumerate().for_each(|(i, &l)| out[l].push(i));
        out
    }
}

/// Every partition of `0..n` into exactly `k` non-empty clusters, as
/// restricted growth strings (`S(n, k)` of them).
pub fn enumerate_clusterings(n: usize, k: usize) -> Result<Vec<Clustering>> {
    if n > ENUM_MAX_POINTS {
        return Err(Error::TooLarge { what: "enumerated points", value: n as u64, limit: ENUM_MAX_POINTS as u64 });
    }
    if k == 0 || k > n {
        return Err(Error::param("need 1 <= k <= n"));
    }
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    grow(&mut labels, 1, 1, k, &mut out);
    Ok(out)
}

fn grow(labels: &mut [usize], pos: usize, used: usize, k: usize, out: &mut Vec<Clustering>) {
    let n = labels.len();
    if pos == n {
        if used == k {
            out.push(Clustering { labels: labels.to_vec(), k });
        }
        return;
    }
    // not enough positions left to open the missing clusters
    if k - used > n - pos {
        return;
    }
    for l in 0..=used.min(k - 1) {
        labels[pos] = l;
        grow(labels, pos + 1, used.max(l + 1), k, out);
    }
}

/// A uniformly shuffled clustering of `0..n` with cluster sizes as equal as
/// possible, so every cluster is non-empty.
pub fn random_clustering(n: usize, k: usize, seed: u64) -> Result<Clustering> {
    if k == 0 || k > n {
        return Err(Error::param("need 1 <= k <= n"));
    }
    let mut labels: Vec<usize> = (0..n).map(|i| i % k).collect();
    labels.shuffle(&mut crate::hash::rng(seed));
    Clustering::new(labels)
}

/// Basic cost from a distance oracle: each cluster's center is its best
/// member.
pub fn basic_cost_with<F>(c: &Clustering, objective: Objective, mut dist: F) -> f64
where
    F: FnMut(usize, usize) -> f64,
{
    c.clusters()
        .iter()
        .map(|members| {
            members
                .iter()
                .map(|&u| {
                    members
                        .iter()
                        .map(|&j| objective.point_cost(dist(u, j)))
                        .fold(0.0, |a, b| objective.combine(a, b))
                })
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, |a, b| objective.combine(a, b))
}

/// Clustering cost of `xs` under `c`.
pub fn clustering_cost(
    xs: &[SparseVector],
    c: &Clustering,
    objective: Objective,
    norm: Norm,
    centers: Centers,
) -> Result<f64> {
    check_same_dim(xs)?;
    if c.len() != xs.len() {
        return Err(Error::param(alloc::format!(
            "clustering covers {} points, dataset has {}",
            c.len(),
            xs.len()
        )));
    }
    match centers {
        Centers::Basic => {
            Ok(basic_cost_with(c, objective, |i, j| xs[i].distance(&xs[j], norm).unwrap_or(0.0)))
        }
        Centers::Continuous => {
            let per = match (objective, norm) {
                (Objective::Median, Norm::P(e)) if e.get() == 1.0 => median_l1,
                (Objective::Means, Norm::P(e)) if e.get() == 2.0 => means_l2,
                (Objective::Center, Norm::Inf) => center_linf,
                _ => return Err(unsupported(objective, norm)),
            };
            Ok(c.clusters()
                .iter()
                .map(|members| per(&columns(xs, members), members.len()))
                .fold(0.0, |a, b| objective.combine(a, b)))
        }
    }
}

fn unsupported(objective: Objective, norm: Norm) -> Error {
    let mut msg = String::from("no closed-form continuous center for ");
    msg.push_str(objective.as_str());
    msg.push('/');
    msg.push_str(&alloc::format!("{norm}"));
    Error::param(msg)
}

/// Non-zero values of each coordinate in the union support of `members`;
/// members absent from a column hold an implicit zero.
fn columns(xs: &[SparseVector], members: &[usize]) -> Vec<Vec<f64>> {
    let mut entries: Vec<(u64, f64)> = members.iter().flat_map(|&i| xs[i].iter()).collect();
    entries.sort_by_key(|&(idx, _)| idx);
    let mut out: Vec<Vec<f64>> = Vec::new();
    let mut last = None;
    for (idx, v) in entries {
        if last != Some(idx) {
            out.push(Vec::new());
            last = Some(idx);
        }
        out.last_mut().unwrap().push(v);
    }
    out
}

fn with_zeros(col: &[f64], size: usize) -> Vec<f64> {
    let mut full = col.to_vec();
    full.resize(size, 0.0);
    full
}

fn median_l1(cols: &[Vec<f64>], size: usize) -> f64 {
    cols.iter()
        .map(|col| {
            let mut full = with_zeros(col, size);
            full.sort_by(f64::total_cmp);
            let med = full[size / 2];
            full.iter().map(|v| libm::fabs(v - med)).sum::<f64>()
        })
        .sum()
}

fn means_l2(cols: &[Vec<f64>], size: usize) -> f64 {
    cols.iter()
        .map(|col| {
            let mean = col.iter().sum::<f64>() / size as f64;
            let present: f64 = col.iter().map(|v| (v - mean) * (v - mean)).sum();
            present + (size - col.len()) as f64 * mean * mean
        })
        .sum()
}

fn center_linf(cols: &[Vec<f64>], size: usize) -> f64 {
    cols.iter()
        .map(|col| {
            let full = with_zeros(col, size);
            let hi = full.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let lo = full.iter().copied().fold(f64::INFINITY, f64::min);
            (hi - lo) / 2.0
        })
        .fold(0.0, f64::max)
}
