use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use sigcalc::{execute, weyl_cap_from_env, CliError, Emit, Mode, RunOptions};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Homogeneous,
    Biquotient,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EmitArg {
    Text,
    Json,
}

/// Signatures of equal-rank homogeneous spaces and biquotients.
#[derive(Debug, Parser)]
#[command(name = "sigcalc", version)]
struct Args {
    /// Run configuration (JSON).
    config: PathBuf,
    /// Override the configured mode.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Override the configured output format.
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
    /// Run every cross-check; exit with status 6 if any fails.
    #[arg(long)]
    check: bool,
    /// Expected Euler characteristic (number of fixed points).
    #[arg(long, value_name = "N")]
    expected_chi: Option<usize>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sigcalc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(args: &Args) -> Result<(), CliError> {
    let options = RunOptions {
        mode: args.mode.map(|m| match m {
            ModeArg::Homogeneous => Mode::Homogeneous,
            ModeArg::Biquotient => Mode::Biquotient,
        }),
        emit: args.emit.map(|e| match e {
            EmitArg::Text => Emit::Text,
            EmitArg::Json => Emit::Json,
        }),
        check: args.check,
        expected_chi: args.expected_chi,
        weyl_cap: weyl_cap_from_env()?,
    };
    let (rendered, report) = execute(&args.config, &options)?;
    print!("{rendered}");
    let failed = report.failed_checks();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::ChecksFailed(failed))
    }
}
