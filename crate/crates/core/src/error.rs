use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two truncated series with different orders were combined.
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// Exact division left a nonzero remainder.
    #[error("polynomial is not exactly divisible")]
    Indivisible,

    /// `Ψ_{1,n}` of `R/(1 - t z^k)` with `k == n` would need the undefined section `φ_0`.
    #[error("diagonal extraction with equal exponents (k = n = {0})")]
    EqualExponent(u32),

    #[error("form degree {d} out of range (expected 1..={})", max.map_or("".to_string(), |m| m.to_string()))]
    DegreeOutOfRange { d: u32, max: Option<u32> },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid JSON: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
