//! Dataset, dense-map, parameter and estimator files.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sparse_sketch_core::apps::DistanceEstimator;
use sparse_sketch_core::probes::DenseLinearMap;
use sparse_sketch_core::{Dataset, EmbedParams, Mode, SparseVector};

use crate::error::{CliError, Result};
use crate::report::fmt_f64;

/// Ambient dimension when neither the file nor the caller gives one.
pub const DEFAULT_DIM: u64 = 1 << 62;

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Read a dataset, picking JSON Lines for `.jsonl`/`.json` and the tab
/// format otherwise. `dim` overrides any `# dim:` line in the file.
pub fn read_dataset(path: &Path, dim: Option<u64>) -> Result<Dataset> {
    let text = read_text(path)?;
    let jsonl = matches!(path.extension().and_then(|e| e.to_str()), Some("jsonl" | "json"));
    if jsonl {
        parse_jsonl(&text, path, dim)
    } else {
        parse_text(&text, path, dim)
    }
}

/// `id<TAB>idx:value idx:value ...` per line; `#` lines are comments, and a
/// `# dim: N` comment fixes the ambient dimension.
pub fn parse_text(text: &str, path: &Path, dim: Option<u64>) -> Result<Dataset> {
    let mut rows = Vec::new();
    let mut file_dim = None;
    for (no, line) in text.lines().enumerate() {
        let no = no + 1;
        let line = line.trim_end_matches('\r');
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(v) = comment.trim().strip_prefix("dim:") {
                let d = v.trim().parse::<u64>().map_err(|_| CliError::parse(path, no, "bad dim directive"))?;
                file_dim = Some(d);
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let (id, coords) = line.split_once('\t').unwrap_or((line, ""));
        let id = id.trim();
        if id.is_empty() {
            return Err(CliError::parse(path, no, "missing id"));
        }
        let mut entries = Vec::new();
        for tok in coords.split_whitespace() {
            let (i, v) = tok
                .split_once(':')
                .ok_or_else(|| CliError::parse(path, no, format!("expected idx:value, got {tok:?}")))?;
            let i = i.parse::<u64>().map_err(|_| CliError::parse(path, no, format!("bad index {i:?}")))?;
            let v = v.parse::<f64>().map_err(|_| CliError::parse(path, no, format!("bad value {v:?}")))?;
            entries.push((i, v));
        }
        rows.push((no, id.to_owned(), entries));
    }
    build(rows, path, dim.or(file_dim).unwrap_or(DEFAULT_DIM))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonVector {
    id: String,
    coords: BTreeMap<String, f64>,
}

/// One `{"id": "...", "coords": {"idx": value}}` object per line.
pub fn parse_jsonl(text: &str, path: &Path, dim: Option<u64>) -> Result<Dataset> {
    let mut rows = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let no = no + 1;
        if line.trim().is_empty() {
            continue;
        }
        let v: JsonVector = serde_json::from_str(line).map_err(|e| CliError::parse(path, no, e.to_string()))?;
        let mut entries = Vec::with_capacity(v.coords.len());
        for (k, val) in v.coords {
            let i = k.parse::<u64>().map_err(|_| CliError::parse(path, no, format!("bad index {k:?}")))?;
            entries.push((i, val));
        }
        rows.push((no, v.id, entries));
    }
    build(rows, path, dim.unwrap_or(DEFAULT_DIM))
}

/// Parsed record: source line, id, entries.
type Row = (usize, String, Vec<(u64, f64)>);

fn build(rows: Vec<Row>, path: &Path, dim: u64) -> Result<Dataset> {
    if dim == 0 {
        return Err(CliError::Input("dimension must be positive".into()));
    }
    let mut ds = Dataset::new(dim);
    for (no, id, entries) in rows {
        let v = SparseVector::new(dim, entries).map_err(|e| CliError::parse(path, no, e.to_string()))?;
        ds.push(id, v).map_err(|e| CliError::parse(path, no, e.to_string()))?;
    }
    Ok(ds)
}

/// Tab format with a `# dim:` line, readable by [`parse_text`].
pub fn format_dataset(ds: &Dataset) -> String {
    let mut out = format!("# dim: {}\n", ds.dim());
    for (id, v) in ds.iter() {
        out.push_str(id);
        out.push('\t');
        for (k, (i, x)) in v.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{i}:{}", fmt_f64(x));
        }
        out.push('\n');
    }
    out
}

/// Dense map CSV: a `rows,cols` line, then one line of `cols` values per row.
pub fn read_dense_map(path: &Path) -> Result<DenseLinearMap> {
    let text = read_text(path)?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (no, head) = lines.next().ok_or_else(|| CliError::parse(path, 1, "empty map file"))?;
    let (r, c) = head.split_once(',').ok_or_else(|| CliError::parse(path, no, "expected rows,cols"))?;
    let rows: usize = r.trim().parse().map_err(|_| CliError::parse(path, no, "bad row count"))?;
    let cols: usize = c.trim().parse().map_err(|_| CliError::parse(path, no, "bad column count"))?;
    let mut data = Vec::with_capacity(rows.saturating_mul(cols));
    let mut seen = 0;
    for (no, line) in lines {
        let before = data.len();
        for cell in line.split(',') {
            let v: f64 = cell.trim().parse().map_err(|_| CliError::parse(path, no, format!("bad value {cell:?}")))?;
            data.push(v);
        }
        if data.len() - before != cols {
            return Err(CliError::parse(path, no, format!("expected {cols} values")));
        }
        seen += 1;
    }
    if seen != rows {
        return Err(CliError::parse(path, 1, format!("header promises {rows} rows, found {seen}")));
    }
    DenseLinearMap::new(rows, cols, data).map_err(|e| CliError::parse(path, 1, e.to_string()))
}

pub fn format_dense_map(a: &DenseLinearMap) -> String {
    let mut out = format!("{},{}\n", a.rows(), a.cols());
    for r in 0..a.rows() {
        let cells: Vec<String> = a.row(r).iter().map(|&v| fmt_f64(v)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// On-disk form of [`EmbedParams`] plus the seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamsFile {
    pub mode: String,
    pub s: usize,
    pub n: usize,
    pub eps: f64,
    pub delta: Option<u32>,
    pub p: Option<f64>,
    pub m: u64,
    #[serde(rename = "T")]
    pub t: u64,
    pub seed: u64,
}

impl ParamsFile {
    pub fn new(params: &EmbedParams, seed: u64) -> Self {
        ParamsFile {
            mode: params.mode.as_str().to_owned(),
            s: params.s,
            n: params.n,
            eps: params.eps,
            delta: params.delta,
            p: params.p,
            m: params.m,
            t: params.copies,
            seed,
        }
    }

    pub fn params(&self) -> Result<EmbedParams> {
        let mode: Mode = self.mode.parse()?;
        let mut params = EmbedParams::custom(self.m, self.t)?;
        params.mode = mode;
        params.s = self.s;
        params.n = self.n;
        params.eps = self.eps;
        params.delta = self.delta;
        params.p = self.p;
        Ok(params)
    }

    pub fn read(path: &Path) -> Result<Self> {
        serde_json::from_str(&read_text(path)?).map_err(|e| CliError::parse(path, e.line(), e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("params serialize");
        s.push('\n');
        s
    }
}

/// On-disk estimator: `tables[rep][bucket][k]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimatorFile {
    pub p: u32,
    pub eps: f64,
    #[serde(rename = "R")]
    pub r: usize,
    pub seed: u64,
    pub m: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<u64>,
    pub tables: Vec<Vec<Vec<f64>>>,
}

impl EstimatorFile {
    pub fn new(est: &DistanceEstimator) -> Self {
        let width = est.p() as usize + 1;
        let per_rep = est.m() as usize * width;
        let tables = est
            .tables()
            .chunks(per_rep)
            .map(|rep| rep.chunks(width).map(<[f64]>::to_vec).collect())
            .collect();
        EstimatorFile {
            p: est.p(),
            eps: est.eps(),
            r: est.reps(),
            seed: est.seed(),
            m: est.m(),
            dim: est.dim(),
            tables,
        }
    }

    pub fn estimator(self) -> Result<DistanceEstimator> {
        if self.tables.len() != self.r {
            return Err(CliError::Input(format!("estimator has {} tables, R = {}", self.tables.len(), self.r)));
        }
        let flat: Vec<f64> = self.tables.into_iter().flatten().flatten().collect();
        let est = DistanceEstimator::from_parts(self.p, self.eps, self.seed, self.m, self.r, flat)?;
        Ok(match self.dim {
            Some(d) => est.with_dim(d),
            None => est,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        serde_json::from_str(&read_text(path)?).map_err(|e| CliError::parse(path, e.line(), e.to_string()))
    }
}
