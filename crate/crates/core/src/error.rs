use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The generating side must be even.
    #[error("side must be an even number, got {0}")]
    OddInput(BigUint),

    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: BigUint },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid primitive triple: {0}")]
    InvalidTriple(String),

    /// The drawing would exceed the canvas bound on either axis.
    #[error("drawing extent {extent} exceeds the canvas bound of {bound} units")]
    ScaleOverflow { extent: String, bound: u64 },
}
