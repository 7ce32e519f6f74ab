//! The three sharing schemes: single-secret Shamir, the points scheme that
//! places secrets at `x = 0..k-1`, and coefficient packing.

mod chunk;
mod coeff;
mod points;
mod shamir;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeModulus};
use crate::poly::{interpolate, PointSet, Polynomial};

pub use chunk::{chunk_secret, unchunk_secret};
pub use coeff::{coeff_polynomial, coeff_reconstruct, coeff_split};
pub use points::{points_polynomial, points_reconstruct, points_split, points_split_unchecked};
pub use shamir::{shamir_reconstruct, shamir_split};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Shamir,
    Points,
    Coeff,
}

impl Scheme {
    pub fn tag(self) -> &'static str {
        match self {
            Scheme::Shamir => "shamir",
            Scheme::Points => "points",
            Scheme::Coeff => "coeff",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shamir" => Ok(Scheme::Shamir),
            "points" => Ok(Scheme::Points),
            "coeff" => Ok(Scheme::Coeff),
            other => Err(Error::InvalidParams(format!("unknown scheme `{other}`"))),
        }
    }
}

/// An ordered tuple of secrets. Order is significant: `(0,1,1,2)` and
/// `(0,1,2,1)` are different sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecretSet {
    secrets: Vec<FieldElement>,
    modulus: PrimeModulus,
}

impl SecretSet {
    pub fn new(secrets: Vec<FieldElement>) -> Result<Self> {
        let Some(first) = secrets.first() else {
            return Err(Error::InvalidParams("a secret set needs at least one secret".into()));
        };
        let modulus = first.modulus();
        if let Some(bad) = secrets.iter().find(|s| s.modulus() != modulus) {
            return Err(Error::ModulusMismatch(modulus.get(), bad.modulus().get()));
        }
        Ok(SecretSet { secrets, modulus })
    }

    /// Rejects values that are not already canonical residues.
    pub fn from_values(values: &[u64], modulus: PrimeModulus) -> Result<Self> {
        if let Some(&v) = values.iter().find(|&&v| v >= modulus.get()) {
            return Err(Error::InvalidParams(format!(
                "secret {v} is not below p={modulus}"
            )));
        }
        Self::new(values.iter().map(|&v| modulus.element(v)).collect())
    }

    pub fn k(&self) -> usize {
        self.secrets.len()
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn secrets(&self) -> &[FieldElement] {
        &self.secrets
    }

    pub fn values(&self) -> Vec<u64> {
        self.secrets.iter().map(|s| s.value()).collect()
    }
}

/// One shareholder's piece: a point `(x, y)` on the sharing polynomial plus
/// the public parameters needed to validate a reconstruction quorum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Share {
    pub scheme: Scheme,
    pub modulus: PrimeModulus,
    pub threshold: usize,
    pub x: FieldElement,
    pub y: FieldElement,
}

/// Seedable generator of uniform residues.
#[derive(Debug, Clone)]
pub struct RandomSource(ChaCha20Rng);

impl RandomSource {
    pub fn from_seed(seed: u64) -> Self {
        RandomSource(ChaCha20Rng::seed_from_u64(seed))
    }

    pub fn from_entropy() -> Self {
        RandomSource(ChaCha20Rng::from_entropy())
    }

    /// Uniform residue in `[0, p)`.
    pub fn residue(&mut self, p: PrimeModulus) -> u64 {
        self.0.gen_range(0..p.get())
    }

    /// Uniform nonzero residue, drawn by rejection.
    pub fn nonzero_residue(&mut self, p: PrimeModulus) -> u64 {
        loop {
            let v = self.residue(p);
            if v != 0 {
                return v;
            }
        }
    }

    pub fn element(&mut self, p: PrimeModulus) -> FieldElement {
        p.element(self.residue(p))
    }
}

fn evaluate_shares(
    q: &Polynomial,
    scheme: Scheme,
    threshold: usize,
    xs: impl Iterator<Item = u64>,
) -> Vec<Share> {
    let p = q.modulus();
    xs.map(|x| Share {
        scheme,
        modulus: p,
        threshold,
        x: p.element(x),
        y: p.element(q.eval_raw(x)),
    })
    .collect()
}

/// Validates a quorum and interpolates the first `threshold` shares. Any
/// extra shares must lie on the same polynomial.
fn interpolate_quorum(shares: &[Share], scheme: Scheme) -> Result<Polynomial> {
    let first = shares.first().ok_or(Error::QuorumTooSmall { needed: 2, got: 0 })?;
    for s in shares {
        if s.scheme != scheme {
            return Err(Error::MixedShares(format!(
                "expected {scheme} shares, found a {} share",
                s.scheme
            )));
        }
        if s.modulus != first.modulus {
            return Err(Error::MixedShares(format!(
                "shares use different primes ({} and {})",
                first.modulus, s.modulus
            )));
        }
        if s.threshold != first.threshold {
            return Err(Error::MixedShares(format!(
                "shares disagree on the threshold ({} and {})",
                first.threshold, s.threshold
            )));
        }
        if s.x.modulus() != s.modulus || s.y.modulus() != s.modulus {
            return Err(Error::MixedShares("share coordinates belong to another field".into()));
        }
    }
    let threshold = first.threshold;
    if shares.len() < threshold {
        return Err(Error::QuorumTooSmall {
            needed: threshold,
            got: shares.len(),
        });
    }
    let mut seen = HashSet::new();
    if let Some(dup) = shares.iter().find(|s| !seen.insert(s.x.value())) {
        return Err(Error::DuplicateX(dup.x.value()));
    }
    let points: Vec<_> = shares[..threshold].iter().map(|s| (s.x, s.y)).collect();
    let q = interpolate(&PointSet::new(&points)?)?;
    if shares[threshold..]
        .iter()
        .any(|s| q.eval_raw(s.x.value()) != s.y.value())
    {
        return Err(Error::InconsistentShares(threshold));
    }
    Ok(q)
}

fn check_share_count(k: usize, n: usize, p: PrimeModulus) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("threshold {k} is below 2")));
    }
    if k > n {
        return Err(Error::InvalidParams(format!(
            "threshold {k} exceeds share count {n}"
        )));
    }
    if n as u64 >= p.get() {
        return Err(Error::InvalidParams(format!(
            "{n} shares need n <= p-1 = {}",
            p.get() - 1
        )));
    }
    Ok(())
}
