use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hardy_cover::config::GroupConfig;
use hardy_cover::{emit_report, read_config, run_pipeline, CliError, Format, Report, RunConfig};

#[derive(Parser)]
#[command(
    name = "hardy-cover",
    version,
    about = "Coverings of bordered surfaces: presentations, induced bundles and boundary isometries"
)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the presentation of π₁(S), or of its double with --double.
    Group {
        /// Number of handles of S.
        #[arg(long)]
        genus: i64,
        /// Number of boundary circles of S.
        #[arg(long)]
        boundary: i64,
        /// Present the double of S instead.
        #[arg(long)]
        double: bool,
    },
    /// Induce a representation along a covering and write it to --out.
    Induce {
        /// JSON run configuration.
        #[arg(long)]
        config: PathBuf,
        /// Where to write the induced representation.
        #[arg(long)]
        out: PathBuf,
    },
    /// Induce, then build and check the pairing and boundary signatures.
    Verify {
        /// JSON run configuration.
        #[arg(long)]
        config: PathBuf,
    },
    /// Compare boundary inner products across the annulus covering z ↦ zⁿ.
    Isometry {
        /// JSON run configuration.
        #[arg(long)]
        config: PathBuf,
        /// Override the number of boundary samples (a power of two).
        #[arg(long)]
        samples: Option<usize>,
        /// Override the Laurent truncation degree.
        #[arg(long)]
        degree: Option<usize>,
        /// Override the random seed.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn load(path: &Path, mode: &str) -> Result<RunConfig, CliError> {
    let cfg = read_config(path)?;
    if cfg.mode() != mode {
        return Err(CliError::Config(format!("config mode is `{}`, expected `{mode}`", cfg.mode())));
    }
    Ok(cfg)
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let io_err = |source| CliError::Io { path: path.to_path_buf(), source };
    let mut w = BufWriter::new(File::create(path).map_err(io_err)?);
    serde_json::to_writer_pretty(&mut w, value)
        .map_err(|source| CliError::Json { context: path.display().to_string(), source })?;
    writeln!(w).and_then(|_| w.flush()).map_err(io_err)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    Ok(match &cli.command {
        Command::Group { genus, boundary, double } => {
            let cfg = RunConfig::Group(GroupConfig { genus: *genus, boundary: *boundary, double: *double });
            run_pipeline(&cfg, Path::new("."))
        }
        Command::Induce { config, out } => {
            let report = run_pipeline(&load(config, "induce")?, &base_dir(config));
            if let Some(induced) = &report.induced {
                write_json(out, induced)?;
            }
            report
        }
        Command::Verify { config } => run_pipeline(&load(config, "verify")?, &base_dir(config)),
        Command::Isometry { config, samples, degree, seed } => {
            let RunConfig::Isometry(mut c) = load(config, "isometry")? else { unreachable!("mode checked") };
            c.samples = samples.unwrap_or(c.samples);
            c.degree = degree.unwrap_or(c.degree);
            c.seed = seed.unwrap_or(c.seed);
            run_pipeline(&RunConfig::Isometry(c), &base_dir(config))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.report {
        Some(path) => File::create(path)
            .and_then(|f| {
                let mut w = BufWriter::new(f);
                emit_report(&report, cli.format, &mut w)?;
                w.flush()
            })
            .map_err(|source| CliError::Io { path: path.clone(), source }),
        None => emit_report(&report, cli.format, &mut io::stdout().lock())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.exit_code() as u8)
}
