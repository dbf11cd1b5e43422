//! Named residuals with tolerances.

use alloc::string::String;
use alloc::vec::Vec;

/// Identities that hold by construction.
pub const EXACT_TOL: f64 = 1e-12;
/// Products of long random words.
pub const LONG_WORD_TOL: f64 = 1e-10;
/// Boundary-quadrature comparisons.
pub const ISOMETRY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Check { name: name.into(), residual, tolerance }
    }

    /// NaN residuals fail.
    pub fn passed(&self) -> bool {
        self.residual < self.tolerance
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}

pub fn worst(checks: &[Check]) -> Option<&Check> {
    checks.iter().max_by(|a, b| {
        let ra = if a.residual.is_nan() { f64::INFINITY } else { a.residual };
        let rb = if b.residual.is_nan() { f64::INFINITY } else { b.residual };
        ra.total_cmp(&rb)
    })
}

pub fn first_failure(checks: &[Check]) -> Option<&Check> {
    checks.iter().find(|c| !c.passed())
}

pub(crate) fn push(checks: &mut Vec<Check>, name: impl Into<String>, residual: f64, tolerance: f64) {
    checks.push(Check::new(name, residual, tolerance));
}
