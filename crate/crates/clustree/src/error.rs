//! Error type shared by the whole crate.

use std::io;

/// Errors produced by solvers, generators, and the I/O layer.
///
/// The CLI maps these onto process exit codes: validation, format, and usage
/// problems exit 1; [`Error::Infeasible`] exits 2; [`Error::Budget`] exits 3.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The instance fails structural validation (partition axioms, malformed
    /// edges, out-of-range ids). The message lists every violation found.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// A claimed solution fails verification: malformed structure, wrong
    /// stored values, or a violated cluster constraint.
    #[error("invalid solution: {0}")]
    InvalidSolution(String),

    /// The instance admits no solution of the requested kind (disconnected
    /// cluster or quotient for the tree problems, no root vector reaching
    /// all vertices, empty feasible set under enumeration).
    #[error("infeasible instance: {0}")]
    Infeasible(String),

    /// A configured resource budget was exceeded (oracle edge-subset budget,
    /// path-search state budget, cluster bit budget).
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// The requested operation does not apply to this input (for example the
    /// unweighted-only approximation on a weighted instance).
    #[error("{0}")]
    Usage(String),

    /// A file or stream could not be parsed; the message carries the field
    /// or line context.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code the command-line tool uses for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Infeasible(_) => 2,
            Error::Budget(_) => 3,
            _ => 1,
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
