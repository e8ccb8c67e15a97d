use thiserror::Error;

use crate::reduction::StallReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported ring parameter d = {0} (expected 3, 7 or 11)")]
    UnsupportedRing(i64),

    #[error("ring tag mismatch: d = {left} vs d = {right}")]
    TagMismatch { left: u32, right: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is singular")]
    Singular,

    #[error("matrix does not preserve the Hermitian form")]
    NotUnitary,

    #[error("rotation parameter is not unimodular")]
    NotUnimodular,

    #[error("dilation parameter must be positive")]
    NonPositiveDilation,

    #[error("boundary point is the point at infinity")]
    PointAtInfinity,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal verification failed: {0}")]
    Verification(String),

    #[error("reduction stalled: no candidate decreases |g31|^2 = {}", .0.before_norm)]
    Stalled(Box<StallReport>),
}

pub type Result<T> = std::result::Result<T, Error>;
