mod args;
mod commands;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use args::Cli;
use csf_core::error::CsfError;

/// Exit codes: 0 success, 1 verification failure, 2 usage or input error, 3 resource cap.
#[derive(Debug)]
pub enum CliError {
    Core(CsfError),
    Usage(String),
}

impl From<CsfError> for CliError {
    fn from(e: CsfError) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_cap() => 3,
            _ => 2,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) if e.is_cap() => "cap_exceeded",
            CliError::Core(_) => "invalid_input",
            CliError::Usage(_) => "usage",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Usage(m) => m.clone(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return report(&CliError::Usage(e.to_string().trim().to_string())),
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => report(&e),
    }
}

fn report(e: &CliError) -> ExitCode {
    let body = json!({ "error": { "kind": e.kind(), "message": e.message() } });
    eprintln!("{body}");
    ExitCode::from(e.code())
}
