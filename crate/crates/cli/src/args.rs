use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "mss", version, about = "Threshold sharing of sets of secrets over prime fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Split secrets into one file per share plus a manifest.
    Split(SplitArgs),
    /// Recombine share files and print the secrets.
    Reconstruct(ReconstructArgs),
    /// Count degenerate points-scheme tuples over all of Z_p^k.
    Census(CensusArgs),
    /// Storage blow-up of a scheme.
    Blowup(BlowupArgs),
    /// Run one of the single-share attacks.
    Attack(AttackArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    Shamir,
    Points,
    Coeff,
}

impl From<SchemeArg> for mss_core::Scheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Shamir => mss_core::Scheme::Shamir,
            SchemeArg::Points => mss_core::Scheme::Points,
            SchemeArg::Coeff => mss_core::Scheme::Coeff,
        }
    }
}

#[derive(Debug, Args)]
pub struct SplitArgs {
    #[arg(long, value_enum)]
    pub scheme: SchemeArg,
    /// Prime modulus.
    #[arg(long)]
    pub p: u64,
    /// Shares needed to reconstruct (must equal the number of secrets for `points`).
    #[arg(long)]
    pub threshold: usize,
    /// Number of shares to issue.
    #[arg(long)]
    pub n: usize,
    /// Comma-separated decimal secrets.
    #[arg(long, value_delimiter = ',', conflicts_with = "secret_file", required_unless_present = "secret_file")]
    pub secrets: Vec<u64>,
    /// Raw bytes to chunk into field-sized secrets (coeff only).
    #[arg(long)]
    pub secret_file: Option<PathBuf>,
    /// Number of chunks for --secret-file; defaults to the threshold.
    #[arg(long)]
    pub k_secrets: Option<usize>,
    /// Seed for the random coefficients.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    #[arg(long, num_args = 1.., required = true)]
    pub shares: Vec<PathBuf>,
    /// Number of true secrets among the coefficients (coeff only); defaults to the header value.
    #[arg(long)]
    pub k_secrets: Option<usize>,
    /// Write the unchunked byte secret here (coeff shares made from --secret-file).
    #[arg(long)]
    pub secret_file_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Interpolate,
    Vandermonde,
    Both,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "both")]
    pub method: MethodArg,
}

#[derive(Debug, Args)]
pub struct BlowupArgs {
    #[arg(long, value_enum)]
    pub scheme: SchemeArg,
    #[arg(long)]
    pub n: u64,
    /// Defaults to k-secrets for the multi-secret schemes and 2 for Shamir.
    #[arg(long)]
    pub threshold: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub k_secrets: u64,
    /// Size of one secret, in any unit.
    #[arg(long, default_value_t = 1)]
    pub d: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AttackMode {
    /// Divisibility of a_0 from one coefficient-scheme share.
    Div,
    /// Forge a share for a group holding d times the secrets.
    Related,
}

#[derive(Debug, Args)]
pub struct AttackArgs {
    #[arg(long, value_enum)]
    pub mode: AttackMode,
    /// Share file; the first share line is used.
    #[arg(long)]
    pub share: PathBuf,
    /// Public bound on every coefficient (div).
    #[arg(long)]
    pub r: Option<u64>,
    /// Known multiplier between the two groups' secrets (related).
    #[arg(long)]
    pub d: Option<u64>,
    /// Where to write the forged share file (related).
    #[arg(long)]
    pub out: Option<PathBuf>,
}
