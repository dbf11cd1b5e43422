//! Run configurations.

use std::path::{Path, PathBuf};

use hardy_cover_core::{EXACT_TOL, ISOMETRY_TOL, LONG_WORD_TOL};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::formats::{CoveringJson, MatrixJson, RepresentationJson, WordJson};

pub const DEFAULT_SAMPLES: usize = 1024;
pub const DEFAULT_DEGREE: usize = 8;
pub const DEFAULT_RHO1: f64 = 0.6;
pub const DEFAULT_TRIALS: usize = 20;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum RunConfig {
    Group(GroupConfig),
    Induce(InduceConfig),
    Verify(VerifyConfig),
    Isometry(IsometryConfig),
}

impl RunConfig {
    pub fn mode(&self) -> &'static str {
        match self {
            RunConfig::Group(_) => "group",
            RunConfig::Induce(_) => "induce",
            RunConfig::Verify(_) => "verify",
            RunConfig::Isometry(_) => "isometry",
        }
    }

    pub fn tolerances(&self) -> Tolerances {
        match self {
            RunConfig::Group(_) => Tolerances::default(),
            RunConfig::Induce(c) => c.tolerances.clone(),
            RunConfig::Verify(c) => c.tolerances.clone(),
            RunConfig::Isometry(c) => c.tolerances.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupConfig {
    pub genus: i64,
    pub boundary: i64,
    #[serde(default)]
    pub double: bool,
}

/// Either a path to a JSON file (relative to the config file) or the object inline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Source<T> {
    Path(PathBuf),
    Inline(T),
}

impl<T: DeserializeOwned + Clone> Source<T> {
    pub fn load(&self, base: &Path) -> Result<T> {
        match self {
            Source::Inline(t) => Ok(t.clone()),
            Source::Path(p) => {
                let path = base.join(p);
                let text =
                    std::fs::read_to_string(&path).map_err(|source| CliError::Io { path: path.clone(), source })?;
                serde_json::from_str(&text)
                    .map_err(|source| CliError::Json { context: path.display().to_string(), source })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InduceConfig {
    pub genus: i64,
    pub boundary: i64,
    pub covering: Source<CoveringJson>,
    pub representation: Source<RepresentationJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub tolerances: Tolerances,
}

/// Boundary signatures of the covering surface: signs `ε_i` (giving
/// `J_i = ε_i I`) or explicit matrices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SignatureJson {
    Signs(Vec<f64>),
    Matrices(Vec<MatrixJson>),
}

/// Where the lift of boundary circle `i` through sheet `k` sits: on the
/// translate by `transport` of the base lift of circle `component`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LiftJson {
    pub component: usize,
    #[serde(default)]
    pub transport: WordJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyConfig {
    pub genus: i64,
    pub boundary: i64,
    pub covering: Source<CoveringJson>,
    pub representation: Source<RepresentationJson>,
    pub signatures: SignatureJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lifts: Option<Vec<Vec<LiftJson>>>,
    #[serde(default)]
    pub tolerances: Tolerances,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsometryConfig {
    #[serde(default = "default_rho1")]
    pub rho1: f64,
    pub n: i64,
    #[serde(default = "default_m")]
    pub m: usize,
    pub alpha: f64,
    pub signs: [f64; 2],
    #[serde(default = "default_degree")]
    pub degree: usize,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub tolerances: Tolerances,
}

fn default_rho1() -> f64 {
    DEFAULT_RHO1
}
fn default_m() -> usize {
    1
}
fn default_degree() -> usize {
    DEFAULT_DEGREE
}
fn default_samples() -> usize {
    DEFAULT_SAMPLES
}
fn default_trials() -> usize {
    DEFAULT_TRIALS
}

/// Overrides for the three tolerance classes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    #[serde(default = "exact")]
    pub exact: f64,
    #[serde(default = "long_word")]
    pub long_word: f64,
    #[serde(default = "isometry")]
    pub isometry: f64,
}

fn exact() -> f64 {
    EXACT_TOL
}
fn long_word() -> f64 {
    LONG_WORD_TOL
}
fn isometry() -> f64 {
    ISOMETRY_TOL
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { exact: EXACT_TOL, long_word: LONG_WORD_TOL, isometry: ISOMETRY_TOL }
    }
}

impl Tolerances {
    /// Maps a default tolerance to its configured override.
    pub fn resolve(&self, default: f64) -> f64 {
        if default == EXACT_TOL {
            self.exact
        } else if default == LONG_WORD_TOL {
            self.long_word
        } else if default == ISOMETRY_TOL {
            self.isometry
        } else {
            default
        }
    }

    fn validate(&self) -> Result<()> {
        for (name, v) in [("exact", self.exact), ("long_word", self.long_word), ("isometry", self.isometry)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(CliError::Config(format!("tolerance `{name}` must be positive, got {v}")));
            }
        }
        Ok(())
    }
}

fn validate_signs(signs: &[f64]) -> Result<()> {
    match signs.iter().find(|&&e| e != 1.0 && e != -1.0) {
        Some(e) => Err(CliError::Config(format!("signs must be +1 or -1, got {e}"))),
        None => Ok(()),
    }
}

/// Parses and validates a configuration, filling defaults.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let cfg: RunConfig =
        serde_json::from_str(text).map_err(|source| CliError::Json { context: "config".into(), source })?;
    cfg.tolerances().validate()?;
    match &cfg {
        RunConfig::Isometry(c) => {
            validate_signs(&c.signs)?;
            if c.m == 0 {
                return Err(CliError::Config("m must be at least 1".into()));
            }
            if c.trials == 0 {
                return Err(CliError::Config("trials must be at least 1".into()));
            }
        }
        RunConfig::Verify(c) => {
            if let SignatureJson::Signs(s) = &c.signatures {
                validate_signs(s)?;
            }
        }
        _ => {}
    }
    Ok(cfg)
}

pub fn read_config(path: &Path) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    parse_config(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_isometry_config_gets_defaults() {
        let cfg = parse_config(r#"{"mode":"isometry","rho1":0.6,"n":3,"alpha":0.7,"signs":[1,-1]}"#).unwrap();
        let RunConfig::Isometry(c) = cfg else { panic!("wrong mode") };
        assert_eq!((c.samples, c.degree, c.trials, c.seed, c.m), (1024, 8, 20, 0, 1));
        assert_eq!(c.tolerances, Tolerances::default());
    }

    #[test]
    fn bogus_mode_is_rejected() {
        let err = parse_config(r#"{"mode":"bogus"}"#).unwrap_err().to_string();
        assert!(err.contains("unknown variant `bogus`"), "{err}");
    }

    #[test]
    fn duplicate_keys_are_rejected() {
        let err = parse_config(r#"{"mode":"isometry","n":3,"n":4,"alpha":0.7,"signs":[1,-1]}"#).unwrap_err();
        assert!(err.to_string().contains("duplicate field `n`"), "{err}");
    }

    #[test]
    fn unknown_and_missing_fields_are_named() {
        let err = parse_config(r#"{"mode":"isometry","n":3,"alpha":0.7,"signs":[1,-1],"colour":1}"#).unwrap_err();
        assert!(err.to_string().contains("colour"), "{err}");
        let err = parse_config(r#"{"mode":"isometry","n":3,"signs":[1,-1]}"#).unwrap_err();
        assert!(err.to_string().contains("missing field `alpha`"), "{err}");
        let err = parse_config(
            r#"{"mode":"verify","genus":0,"boundary":2,"covering":"c.json","representation":"r.json","signatures":[1,1],"extra":0}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("extra"), "{err}");
    }

    #[test]
    fn tolerances_must_be_positive() {
        let err =
            parse_config(r#"{"mode":"isometry","n":3,"alpha":0.7,"signs":[1,-1],"tolerances":{"isometry":-1e-9}}"#)
                .unwrap_err();
        assert!(err.to_string().contains("isometry"), "{err}");
        let err = parse_config(r#"{"mode":"isometry","n":3,"alpha":0.7,"signs":[1,0.5]}"#).unwrap_err();
        assert!(err.to_string().contains("signs"), "{err}");
    }
}
