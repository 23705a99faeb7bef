//! The `tenfold` command line: argument parsing, dispatch and output
//! formatting. [`run`] is the whole program and returns what would be
//! printed, so it can be driven from tests.

mod args;
mod commands;
mod render;
pub mod verify;

use std::ffi::OsString;

use clap::Parser;
use serde_json::{json, Value};

pub use args::{Cli, Command, Format};
pub use render::parse_table;
pub use commands::{
    chessboard_payload, index_table_payload, ko_table_payload, periodic_table_payload, GOLDEN_CHESSBOARD,
    GOLDEN_INDEX_COMPLEX, GOLDEN_INDEX_REAL, GOLDEN_KO_GRID, GOLDEN_PERIODIC_TABLE,
};

/// Version of the JSON envelope schema.
pub const FORMAT_VERSION: &str = "1";

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Failure of a command after argument parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad or inconsistent arguments; exit status 2.
    Usage(String),
    /// A computation or verification failed; exit status 1.
    Failure(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => m,
        }
    }
}

/// What a command produced, before formatting.
pub struct Report {
    pub command: &'static str,
    pub params: Value,
    pub payload: Value,
    pub text: String,
    pub csv: Option<String>,
    /// Set when the command ran but its check did not hold.
    pub failure: Option<String>,
}

/// Parses `argv` (including the program name), runs the command and formats
/// its output.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    let format = cli.format;
    let bare = cli.bare;
    match commands::dispatch(cli.command) {
        Ok(report) => emit(report, format, bare),
        Err(e) => Outcome { code: e.code(), stdout: String::new(), stderr: format!("error: {}\n", e.message()) },
    }
}

fn emit(report: Report, format: Format, bare: bool) -> Outcome {
    let stdout = match format {
        Format::Text => report.text.clone(),
        Format::Json => {
            let doc = if bare {
                report.payload.clone()
            } else {
                json!({
                    "command": report.command,
                    "params": report.params,
                    "result": report.payload,
                    "format_version": FORMAT_VERSION,
                })
            };
            pretty(&doc)
        }
        Format::Csv => match &report.csv {
            Some(csv) => csv.clone(),
            None => {
                return Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("error: `{}` has no CSV output\n", report.command),
                }
            }
        },
    };
    match report.failure {
        Some(msg) => Outcome { code: 1, stdout, stderr: format!("error: {msg}\n") },
        None => Outcome { code: 0, stdout, stderr: String::new() },
    }
}

/// Two-space indented JSON with a trailing newline.
pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}
