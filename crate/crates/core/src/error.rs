use thiserror::Error;

/// Errors produced by the library.
///
/// `Precondition` covers rejected inputs (degenerate search regime,
/// non-additive codes fed to stabilizer routines, malformed partitions);
/// `Parse` carries a line number for file diagnostics.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("dense dimension {dim} exceeds cap {cap}")]
    DenseCap { dim: usize, cap: usize },

    #[error("{0}")]
    Precondition(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("code verification failed: {}", failures.join("; "))]
    CodeInvalid { failures: Vec<String> },
}

pub type Result<T> = std::result::Result<T, Error>;
