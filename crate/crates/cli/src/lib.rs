//! Library behind the `lexrev` binary. Every command renders into a
//! [`Report`] so that output can be tested without spawning a process.

pub mod commands;
pub mod session;

use std::path::PathBuf;

pub use commands::{conjecture, partition, query, verify, Engine, Options};
pub use session::{parse_script, run_script, Directive, Session};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] lexrev_core::Error),

    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("line {line}: {message}")]
    Script { line: usize, message: String },

    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

/// Process exit status. `Yes`/`Pass` map to 0, `No`/`Fail` to 1, errors to 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Yes,
    No,
    Pass,
    Fail,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Yes | Status::Pass => 0,
            Status::No | Status::Fail => 1,
        }
    }
}

pub const ERROR_CODE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub status: Status,
}

impl Report {
    fn new(text: String, status: Status) -> Self {
        Self { text, status }
    }
}

pub(crate) fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}
