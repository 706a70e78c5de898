use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Arithmetic is carried out on `u64` values with checked operations; any
/// intermediate that does not fit surfaces as [`FareyError::Overflow`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FareyError {
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("numerator must be non-negative, got {0}")]
    NegativeNumerator(i128),
    #[error("{num}/{den} lies outside [0, 1]")]
    OutOfRange { num: i128, den: i128 },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("Farey order must be at least 1")]
    ZeroOrder,
    #[error("{num}/{den} not irreducible")]
    NotIrreducible { num: u64, den: u64 },
    #[error("center {num}/{den} must satisfy 1 <= n < N with N >= 2")]
    InvalidCenter { num: u64, den: u64 },
    #[error("terminal {0} must be at least 2")]
    InvalidTerminal(u64),
    #[error("rho must be a positive integer")]
    InvalidRho,
    #[error("{left} is not smaller than {right}")]
    NotIncreasing { left: String, right: String },
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("F_{order} has more than {cap} terms")]
    CapExceeded { order: u64, cap: u64 },
    #[error("{fraction} has denominator above the order {order}")]
    NotInSequence { fraction: String, order: u64 },
    #[error("1/1 has no right neighbor")]
    NoRightNeighbor,
    #[error("0/1 has no left neighbor")]
    NoLeftNeighbor,
    #[error("continued fraction has no coefficients")]
    EmptyContinuedFraction,
    #[error("continued fraction coefficient at position {index} must be positive")]
    InvalidCoefficient { index: usize },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
}

pub type Result<T> = std::result::Result<T, FareyError>;
