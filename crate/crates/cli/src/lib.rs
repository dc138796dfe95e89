//! Command-line front end for `lorentz-harmonics`: every subcommand evaluates
//! one family of library quantities on a grid and writes a deterministic
//! CSV or JSON table, with a JSON sidecar describing how it was produced.

pub mod commands;
pub mod config;
pub mod table;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::parser::ValueSource;
use clap::{CommandFactory, FromArgMatches};
use serde::Serialize;
use serde_json::{Map, Value as Json};

pub use commands::{run, Report};
pub use config::{Command, Format, GridSpec, ModeRange, RunConfig};
pub use table::{Table, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numerical(#[from] lorentz_harmonics::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Parse arguments; the flag reports whether the quadrature order came from
/// `OSC_QUAD_ORDER` rather than the command line.
pub fn parse_args<I, T>(args: I) -> Result<(RunConfig, bool), clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let matches = RunConfig::command().try_get_matches_from(args)?;
    let from_env = matches.value_source("quad_order") == Some(ValueSource::EnvVariable);
    Ok((RunConfig::from_arg_matches(&matches)?, from_env))
}

#[derive(Serialize)]
struct Sidecar<'a> {
    version: &'a str,
    config: &'a RunConfig,
    settings: &'a Map<String, Json>,
    quad_order: Option<usize>,
    max_truncation_tail: Option<f64>,
    columns: &'a [String],
    rows: usize,
}

pub fn sidecar_path(output: &Path) -> PathBuf {
    let mut name = output.as_os_str().to_owned();
    name.push(".meta.json");
    PathBuf::from(name)
}

fn encode(table: &Table, format: Format) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    match format {
        Format::Csv => table.write_csv(&mut buf)?,
        Format::Json => table.write_json(&mut buf)?,
    }
    Ok(buf)
}

/// Validate, compute and write. Without `--output` the table goes to
/// `stdout` and no sidecar is written.
pub fn execute(cfg: &RunConfig, env_quad_order: bool, stdout: &mut dyn Write) -> Result<Report, CliError> {
    cfg.validate(env_quad_order)?;
    let report = run(cfg)?;
    let bytes = encode(&report.table, cfg.format)?;
    match &cfg.output {
        None => stdout.write_all(&bytes)?,
        Some(path) => {
            fs::write(path, &bytes)?;
            let meta = Sidecar {
                version: lorentz_harmonics::VERSION,
                config: cfg,
                settings: &report.settings,
                quad_order: report.quad_order,
                max_truncation_tail: report.max_tail,
                columns: &report.table.columns,
                rows: report.table.rows.len(),
            };
            let mut text = serde_json::to_vec_pretty(&meta).map_err(std::io::Error::from)?;
            text.push(b'\n');
            fs::write(sidecar_path(path), text)?;
        }
    }
    Ok(report)
}
