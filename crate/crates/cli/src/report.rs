//! Output assembly: a `# config:` echo line, then CSV rows.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::error::{CliError, Result};

/// Shortest decimal that parses back to the same `f64`. Plain notation
/// for moderate magnitudes, exponent notation otherwise.
pub fn fmt_f64(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 {
        "0".to_owned()
    } else if !v.is_finite() || (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// Text being built for one output file.
#[derive(Debug, Default)]
pub struct Report {
    buf: String,
}

impl Report {
    /// Start with `# config: {...}`.
    pub fn with_config<C: Serialize>(config: &C) -> Self {
        let json = serde_json::to_string(config).expect("config serializes");
        Report { buf: format!("# config: {json}\n") }
    }

    pub fn comment(&mut self, text: &str) {
        let _ = writeln!(self.buf, "# {text}");
    }

    pub fn line(&mut self, text: &str) {
        self.buf.push_str(text);
        self.buf.push('\n');
    }

    /// A CSV row of pre-formatted cells.
    pub fn row<I, S>(&mut self, cells: I)
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut first = true;
        for c in cells {
            if !first {
                self.buf.push(',');
            }
            first = false;
            self.buf.push_str(c.as_ref());
        }
        self.buf.push('\n');
    }

    pub fn as_str(&self) -> &str {
        &self.buf
    }

    /// Write to `path`, or stdout when absent.
    pub fn finish(self, path: Option<&Path>) -> Result<()> {
        match path {
            Some(p) => std::fs::write(p, self.buf).map_err(|e| CliError::io(p, e)),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(self.buf.as_bytes())
                    .and_then(|_| out.flush())
                    .map_err(|e| CliError::io(Path::new("<stdout>"), e))
            }
        }
    }
}

/// CSV cell escaping for free-text ids.
pub fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}
