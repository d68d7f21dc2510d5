use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Common;

/// Failure of a run. Usage errors exit with 2, data errors with 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Data(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<ropebound_core::Error> for CliError {
    fn from(e: ropebound_core::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))
}

pub fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display())))
}

/// What a subcommand produced: a structured result and its text rendering.
pub struct Outcome {
    pub result: Value,
    pub text: String,
}

impl Outcome {
    pub fn new(result: impl Serialize, text: String) -> Outcome {
        Outcome {
            result: serde_json::to_value(result).expect("results serialize"),
            text,
        }
    }
}

/// Renders the outcome with the tool version, the configuration and the
/// seed, then writes it to `--out` or standard output.
pub fn emit(command: &str, config: impl Serialize, common: &Common, outcome: Outcome) -> CliResult<()> {
    let config = serde_json::to_value(config).expect("configs serialize");
    let version = env!("CARGO_PKG_VERSION");
    let rendered = if common.json {
        let doc = json!({
            "tool": "ropebound",
            "version": version,
            "command": command,
            "config": config,
            "seed": common.seed,
            "result": outcome.result,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("json");
        s.push('\n');
        s
    } else {
        let mut s = format!(
            "# ropebound {version} {command}\n# config: {}\n# seed: {}\n",
            serde_json::to_string(&config).expect("json"),
            common.seed
        );
        s.push_str(&outcome.text);
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    };
    match &common.out {
        Some(path) => write_file(path, &rendered),
        None => std::io::stdout()
            .lock()
            .write_all(rendered.as_bytes())
            .map_err(|e| CliError::Data(format!("cannot write output: {e}"))),
    }
}
