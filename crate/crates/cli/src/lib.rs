//! Command-line reports, the terminal game loop and the HTTP session service
//! behind the `bmgl` binary.

pub mod game;
pub mod report;
pub mod service;

use thiserror::Error;

/// Failures that map to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input, bad options: exit 2.
    #[error("{0}")]
    Input(String),
    /// A checked invariant failed: exit 1.
    #[error("{0}")]
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Violation(_) => 1,
        }
    }
}

pub fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

/// Text for humans, JSON for machines.
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
    /// Set when a checked invariant failed; the output is still printed.
    pub violation: Option<String>,
}

impl Output {
    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("reports serialize");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}
