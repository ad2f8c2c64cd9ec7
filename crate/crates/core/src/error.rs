use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("residue {a} is outside [0, {n})")]
    ResidueOutOfRange { a: u64, n: u64 },

    /// A brute-force computation was refused because `n` exceeds a configured limit.
    #[error("{what} refused: n = {n} exceeds the configured limit {limit}")]
    Capacity { what: &'static str, n: u64, limit: u64 },

    #[error("invalid range [{lo}, {hi}]: need 2 <= lo <= hi")]
    InvalidRange { lo: u64, hi: u64 },

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}
