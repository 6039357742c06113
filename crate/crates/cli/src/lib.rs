//! Command-line front end for `ltd-core`.

pub mod args;
pub mod commands;
pub mod error;
pub mod format;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Cli;
pub use error::{CliError, Result};

use args::Command;

/// Parses `argv`, runs the command and returns the process exit code.
/// Reports go to `out`, single-line diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "{first}");
            return 1;
        }
    };

    let outcome = match &cli.command {
        Command::Gen(a) => commands::cmd_gen(a),
        Command::Denoise(a) => commands::cmd_denoise(a),
        Command::Bench(a) => commands::cmd_bench(a),
        Command::Profile(a) => commands::cmd_profile(a),
    };
    match outcome {
        Ok(report) => {
            let _ = writeln!(out, "{report}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
