use super::{
    check_share_count, evaluate_shares, interpolate_quorum, RandomSource, SecretSet, Share, Scheme,
};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Sharing polynomial `s_0 + s_1 x + .. + s_{k-1} x^{k-1}`, padded with
/// random coefficients at degrees `k..m-1` when the threshold `m` exceeds k.
/// The degree `m - 1` coefficient is always nonzero.
pub fn coeff_polynomial(secrets: &SecretSet, m: usize, rng: &mut RandomSource) -> Result<Polynomial> {
    let k = secrets.k();
    let p = secrets.modulus();
    if m < k {
        return Err(Error::InvalidParams(format!(
            "threshold {m} is below the number of secrets {k}"
        )));
    }
    let mut coeffs = secrets.values();
    if coeffs.iter().all(|&s| s == 0) {
        return Err(Error::AllZeroSecrets);
    }
    if m == k {
        if coeffs[k - 1] == 0 {
            return Err(Error::LeadingSecretZero);
        }
    } else {
        for _ in k..m - 1 {
            coeffs.push(rng.residue(p));
        }
        coeffs.push(rng.nonzero_residue(p));
    }
    Ok(Polynomial::from_raw(coeffs, p))
}

/// Packs k secrets into the low coefficients of a degree `m - 1` polynomial
/// and hands out its values at `x = 1..=n`. Threshold is `m`.
pub fn coeff_split(
    secrets: &SecretSet,
    m: usize,
    n: usize,
    rng: &mut RandomSource,
) -> Result<Vec<Share>> {
    check_share_count(m, n, secrets.modulus())?;
    let q = coeff_polynomial(secrets, m, rng)?;
    Ok(evaluate_shares(&q, Scheme::Coeff, m, 1..=n as u64))
}

/// Recovers the first `k` coefficients; padding coefficients are dropped.
pub fn coeff_reconstruct(shares: &[Share], k: usize) -> Result<SecretSet> {
    let q = interpolate_quorum(shares, Scheme::Coeff)?;
    let m = shares[0].threshold;
    if k == 0 || k > m {
        return Err(Error::InvalidParams(format!(
            "k={k} secrets cannot come from a threshold-{m} polynomial"
        )));
    }
    if shares.iter().any(|s| s.x.is_zero()) {
        return Err(Error::InvalidParams("coefficient share at x=0".into()));
    }
    SecretSet::new(q.coefficients()[..k].to_vec())
}
