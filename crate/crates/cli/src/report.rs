use serde::Serialize;
use serde_json::Value;

use meb_kit_core::MebError;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Value,
    pub result: Value,
    pub seed: u64,
    pub timing_ms: f64,
    pub tool_version: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ErrorKind {
    Usage,
    Input,
    Computation,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Usage => 1,
            ErrorKind::Input => 2,
            ErrorKind::Computation => 3,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<u64>,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::Usage,
            message: message.into(),
            line: None,
        }
    }

    pub fn input(message: String, line: Option<u64>) -> Self {
        CliError {
            kind: ErrorKind::Input,
            message: match line {
                Some(l) => format!("line {l}: {message}"),
                None => message,
            },
            line,
        }
    }
}

impl From<MebError> for CliError {
    fn from(e: MebError) -> Self {
        let kind = if e.is_computational() {
            ErrorKind::Computation
        } else if matches!(e, MebError::InvalidParameter { .. } | MebError::InvalidCombination(_)) {
            ErrorKind::Usage
        } else {
            ErrorKind::Input
        };
        CliError {
            kind,
            message: e.to_string(),
            line: None,
        }
    }
}

#[derive(Serialize)]
pub struct ErrorReport<'a> {
    pub command: &'a str,
    pub error: &'a CliError,
    pub tool_version: &'static str,
}
