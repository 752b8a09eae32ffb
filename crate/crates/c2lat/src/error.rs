//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by construction, search, and verification routines.
#[derive(Error, Debug)]
pub enum Error {
    /// An image vector did not describe a bijection on `0..degree`.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// Two objects that must act on the same point set do not.
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    /// A claimed subgroup relation failed a membership test.
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    /// A search or enumeration exceeded its configured size bound.
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    /// Coset enumeration ran out of table space before closing.
    #[error("coset enumeration overflow: limit {0} cosets")]
    CosetOverflow(usize),

    /// A presentation data file (or triangle spec file) failed to parse.
    #[error("parse error in {file} line {line}: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },

    /// An internal consistency check of the quadrangle construction failed.
    #[error("geometry check failed: {0}")]
    Geometry(String),

    /// A library verification step failed.
    #[error("library check failed: {0}")]
    Library(String),

    /// An internal cross-check of the classification machinery failed.
    #[error("classification check failed: {0}")]
    Classification(String),

    /// Triangle assembly rejected its inputs.
    #[error("triangle construction: {0}")]
    Triangle(String),

    /// Cache directory could not be used.
    #[error("cache: {0}")]
    Cache(String),

    /// Underlying I/O failure.
    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    /// JSON (de)serialization failure.
    #[error("serialization: {0}")]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
