use thiserror::Error;

use crate::poly::Degree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^61")]
    NotPrime(u64),
    #[error("operands belong to different fields (p={0} and p={1})")]
    ModulusMismatch(u64, u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("no points to interpolate")]
    EmptyInput,
    #[error("x-coordinate {0} appears more than once")]
    DuplicateX(u64),
    #[error("k={k} nodes do not fit in a field of size {p}")]
    KTooLargeForField { k: usize, p: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("secret set is degenerate: interpolation has degree {degree}, a ({threshold}, n) scheme needs degree {}", threshold - 1)]
    DegenerateSecretSet { degree: Degree, threshold: usize },
    #[error("the highest-degree secret is zero; threshold would drop below m")]
    LeadingSecretZero,
    #[error("all secrets are zero")]
    AllZeroSecrets,
    #[error("shares are inconsistent: {0}")]
    MixedShares(String),
    #[error("need {needed} shares, got {got}")]
    QuorumTooSmall { needed: usize, got: usize },
    #[error("shares do not lie on a single polynomial of degree < {0}")]
    InconsistentShares(usize),
    #[error("chunk {index} does not fit below p={p}; use a larger p or more chunks")]
    ChunkExceedsModulus { index: usize, p: u64 },
    #[error("p^k = {p}^{k} exceeds the exhaustive enumeration bound {bound}")]
    TooLarge { p: u64, k: usize, bound: u64 },
    #[error("evaluation at u={u} may wrap around p={p}; divisibility inference is unsound")]
    WraparoundRisk { u: u64, p: u64 },
    #[error("operation needs a {expected} share, got {got}")]
    WrongScheme {
        expected: &'static str,
        got: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
