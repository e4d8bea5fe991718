//! Library side of the `rooke` command-line tool: each subcommand is a
//! function returning result records plus an exit status.

pub mod approx;
pub mod commands;
pub mod parallel;
pub mod probe;
pub mod record;
pub mod reproduce;

use thiserror::Error;

pub use record::ResultRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    Mismatch,
    Counterexample,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 2,
            Status::Counterexample => 3,
        }
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub records: Vec<ResultRecord>,
    pub status: Status,
}

impl Outcome {
    pub fn ok(records: Vec<ResultRecord>) -> Self {
        Self {
            records,
            status: Status::Ok,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] rook_eulerian::Error),
    #[error("{0}")]
    Usage(String),
    #[error("internal mismatch: {0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(_) | CliError::Usage(_) => 1,
            CliError::Mismatch(_) => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Runs `f`, stamping the elapsed time on every record it returns.
pub fn timed(f: impl FnOnce() -> CliResult<Outcome>) -> CliResult<Outcome> {
    let start = std::time::Instant::now();
    let mut out = f()?;
    let ms = start.elapsed().as_millis() as u64;
    for r in &mut out.records {
        if r.elapsed_ms == 0 {
            r.elapsed_ms = ms;
        }
    }
    Ok(out)
}
