//! Configuration-driven front end for the signature engines.

pub mod config;
pub mod error;
pub mod report;
pub mod run;

use std::path::Path;

pub use config::{parse_config, Check, Emit, Mode, RunConfig};
pub use error::CliError;
pub use report::emit_report;
pub use run::{run, weyl_cap_from_env, Outcome, RunOptions, RunReport};

/// Loads a configuration, runs it and renders the result.
///
/// The rendered report is returned alongside the run so callers can print it
/// before acting on failed checks.
pub fn execute(path: &Path, options: &RunOptions) -> Result<(String, RunReport), CliError> {
    let document = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let config = parse_config(&document)?;
    let report = run(&config, options)?;
    let format = options.emit.unwrap_or(config.emit);
    Ok((emit_report(&report, format), report))
}
