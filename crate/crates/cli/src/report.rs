//! Run reports and their JSON/text rendering.

use std::io::Write;
use std::time::Duration;

use hardy_cover_core::Check;
use serde::{Serialize, Serializer};

use crate::config::Tolerances;
use crate::formats::InducedJson;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    #[serde(serialize_with = "finite_or_string")]
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// JSON has no infinities or NaN; those are written as strings.
fn finite_or_string<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(*x)
    } else {
        s.serialize_str(&x.to_string())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub mode: String,
    pub config: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<CheckRecord>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub data: serde_json::Value,
    pub versions: serde_json::Value,
    /// Wall-clock time; shown in text output only so JSON stays reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub induced: Option<InducedJson>,
}

impl Report {
    pub fn new(mode: &str, config: serde_json::Value) -> Self {
        Report {
            mode: mode.to_string(),
            config,
            seed: None,
            checks: Vec::new(),
            passed: false,
            error: None,
            data: serde_json::Value::Null,
            versions: serde_json::json!({
                "hardy-cover": env!("CARGO_PKG_VERSION"),
                "hardy-cover-core": hardy_cover_core::VERSION,
            }),
            elapsed: Duration::ZERO,
            induced: None,
        }
    }

    pub fn push(&mut self, check: &Check, tol: &Tolerances) {
        let tolerance = tol.resolve(check.tolerance);
        self.checks.push(CheckRecord {
            name: check.name.clone(),
            residual: check.residual,
            tolerance,
            passed: check.residual < tolerance,
        });
    }

    pub fn extend<'a>(&mut self, checks: impl IntoIterator<Item = &'a Check>, tol: &Tolerances) {
        for c in checks {
            self.push(c, tol);
        }
    }

    /// Overall pass iff no error occurred and every check passed.
    pub fn finish(&mut self) {
        self.passed = self.error.is_none() && self.checks.iter().all(|c| c.passed);
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

pub fn emit_report<W: Write>(report: &Report, format: Format, out: &mut W) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        Format::Text => {
            writeln!(out, "mode: {}", report.mode)?;
            if let Some(seed) = report.seed {
                writeln!(out, "seed: {seed}")?;
            }
            for c in &report.checks {
                let flag = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{flag}  {:<60} residual {:.3e}  tol {:.1e}", c.name, c.residual, c.tolerance)?;
            }
            if let Some(e) = &report.error {
                writeln!(out, "error: {e}")?;
            }
            let passed = report.checks.iter().filter(|c| c.passed).count();
            writeln!(
                out,
                "{}: {passed}/{} checks passed in {:.3} s",
                if report.passed { "PASS" } else { "FAIL" },
                report.checks.len(),
                report.elapsed.as_secs_f64()
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_flag_and_exit_code() {
        let tol = Tolerances::default();
        let mut r = Report::new("group", serde_json::Value::Null);
        r.push(&Check::new("ok", 0.0, 1e-12), &tol);
        r.finish();
        assert_eq!(r.exit_code(), 0);
        r.push(&Check::new("bad", f64::INFINITY, 1e-12), &tol);
        r.finish();
        assert_eq!(r.exit_code(), 1);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["checks"][1]["residual"], "inf");
    }

    #[test]
    fn tolerance_override_applies_by_class() {
        let tol = Tolerances { exact: 1e-6, ..Tolerances::default() };
        let mut r = Report::new("verify", serde_json::Value::Null);
        r.push(&Check::new("loose", 1e-8, hardy_cover_core::EXACT_TOL), &tol);
        r.finish();
        assert!(r.passed);
    }
}
