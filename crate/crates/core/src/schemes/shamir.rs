use super::{check_share_count, evaluate_shares, interpolate_quorum, RandomSource, Scheme, Share};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::Polynomial;

/// Classic (k, n) sharing of one secret. The top coefficient is redrawn
/// until nonzero so the polynomial has degree exactly `k - 1`. Shares sit at
/// `x = 1..=n`.
pub fn shamir_split(
    secret: FieldElement,
    k: usize,
    n: usize,
    rng: &mut RandomSource,
) -> Result<Vec<Share>> {
    let p = secret.modulus();
    check_share_count(k, n, p)?;
    let mut coeffs = Vec::with_capacity(k);
    coeffs.push(secret.value());
    for _ in 1..k - 1 {
        coeffs.push(rng.residue(p));
    }
    coeffs.push(rng.nonzero_residue(p));
    let q = Polynomial::from_raw(coeffs, p);
    Ok(evaluate_shares(&q, Scheme::Shamir, k, 1..=n as u64))
}

pub fn shamir_reconstruct(shares: &[Share]) -> Result<FieldElement> {
    let q = interpolate_quorum(shares, Scheme::Shamir)?;
    if shares.iter().any(|s| s.x.is_zero()) {
        return Err(Error::InvalidParams("shamir share at x=0".into()));
    }
    Ok(q.coefficient(0))
}
