use thiserror::Error;

/// A polynomial quotient that was required to be exact left a remainder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("polynomial division is not exact")]
pub struct DivisionFails;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Division(#[from] DivisionFails),

    #[error("binomial factor (1 - z^{a} t^{b})^{m} is malformed")]
    InvalidFactor { a: u32, b: u32, m: u32 },

    #[error("residue index k = {k} is out of range for d = {d} (need 2k < d)")]
    ResidueIndex { d: u32, k: u32 },

    #[error("form degree must be positive")]
    ZeroDegree,

    #[error("malformed series document: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
