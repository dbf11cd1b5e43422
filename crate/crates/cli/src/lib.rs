//! File formats, run configurations, seeded inputs and reports for
//! `hardy-cover-core`.

pub mod config;
pub mod error;
pub mod formats;
pub mod pipeline;
pub mod random;
pub mod report;

pub use config::{parse_config, read_config, RunConfig};
pub use error::{CliError, Result};
pub use pipeline::run_pipeline;
pub use report::{emit_report, Format, Report};
