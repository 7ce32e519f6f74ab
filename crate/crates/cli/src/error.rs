use std::path::PathBuf;

use crate::share_file::ParseError;

/// Process exit codes. `2` is left to clap for usage errors.
pub mod code {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const IO: i32 = 4;
    pub const INVALID_PARAMS: i32 = 5;
    pub const DEGENERATE_SECRET_SET: i32 = 6;
    pub const LEADING_SECRET_ZERO: i32 = 7;
    pub const ALL_ZERO_SECRETS: i32 = 8;
    pub const MIXED_SHARES: i32 = 9;
    pub const QUORUM_TOO_SMALL: i32 = 10;
    pub const DUPLICATE_X: i32 = 11;
    pub const INCONSISTENT_SHARES: i32 = 12;
    pub const CHUNK_EXCEEDS_MODULUS: i32 = 13;
    pub const TOO_LARGE: i32 = 14;
    pub const WRAPAROUND_RISK: i32 = 15;
    pub const CHECK_FAILED: i32 = 16;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] mss_core::Error),
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        use mss_core::Error as E;
        match self {
            CliError::Parse { .. } => code::PARSE,
            CliError::Io { .. } => code::IO,
            CliError::Usage(_) => code::USAGE,
            CliError::CheckFailed(_) => code::CHECK_FAILED,
            CliError::Core(e) => match e {
                E::DegenerateSecretSet { .. } => code::DEGENERATE_SECRET_SET,
                E::LeadingSecretZero => code::LEADING_SECRET_ZERO,
                E::AllZeroSecrets => code::ALL_ZERO_SECRETS,
                E::MixedShares(_) | E::ModulusMismatch(..) | E::WrongScheme { .. } => {
                    code::MIXED_SHARES
                }
                E::QuorumTooSmall { .. } => code::QUORUM_TOO_SMALL,
                E::DuplicateX(_) => code::DUPLICATE_X,
                E::InconsistentShares(_) => code::INCONSISTENT_SHARES,
                E::ChunkExceedsModulus { .. } => code::CHUNK_EXCEEDS_MODULUS,
                E::TooLarge { .. } => code::TOO_LARGE,
                E::WraparoundRisk { .. } => code::WRAPAROUND_RISK,
                E::NotPrime(_)
                | E::ZeroInverse
                | E::EmptyInput
                | E::KTooLargeForField { .. }
                | E::InvalidParams(_) => code::INVALID_PARAMS,
            },
        }
    }
}
