use thiserror::Error;

/// Errors produced by the library. Certificate verification failures are
/// results, not errors; see [`crate::certify::CertificateViolation`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("oracle limit exceeded: matrix has {n} columns, cap is {cap}")]
    OracleLimitExceeded { n: usize, cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("duplicate index: {0}")]
    DuplicateIndex(String),

    #[error("invalid pattern parameter: kind {kind} requires k >= {min}, got {got}")]
    PatternParameter {
        kind: &'static str,
        min: usize,
        got: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("matrix is C1P: {0}")]
    MatrixIsC1p(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error(
        "internal consistency error: minimal non-C1P submatrix did not match any Tucker pattern \
         ({rows}x{cols}); this contradicts Tucker's theorem and indicates a bug"
    )]
    ClassificationFailure { rows: usize, cols: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
