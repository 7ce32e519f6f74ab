use super::{evaluate_shares, interpolate_quorum, SecretSet, Share, Scheme};
use crate::error::{Error, Result};
use crate::poly::{LagrangeBasis, Polynomial};

/// Interpolant through `(i, s_i)` for `i = 0..k`, without any degree check.
pub fn points_polynomial(secrets: &SecretSet) -> Result<Polynomial> {
    let k = secrets.k();
    let p = secrets.modulus();
    if k as u64 > p.get() {
        return Err(Error::KTooLargeForField { k, p: p.get() });
    }
    let nodes: Vec<u64> = (0..k as u64).collect();
    Ok(LagrangeBasis::new(&nodes, p)?.combine(&secrets.values()))
}

fn check_points_params(secrets: &SecretSet, n: usize) -> Result<()> {
    let k = secrets.k();
    let p = secrets.modulus();
    if k < 2 {
        return Err(Error::InvalidParams(format!("points scheme needs k >= 2, got {k}")));
    }
    if n < k {
        return Err(Error::InvalidParams(format!(
            "threshold {k} exceeds share count {n}"
        )));
    }
    if (k + n) as u64 > p.get() {
        return Err(Error::InvalidParams(format!(
            "k + n = {} exceeds p = {p}; share abscissae would collide",
            k + n
        )));
    }
    Ok(())
}

/// Shares k secrets by treating them as values at `x = 0..k-1`. Refuses
/// tuples whose interpolant has degree below `k - 1`, since their shares
/// would reconstruct with fewer than k holders. Shares sit at `x = k..k+n-1`.
///
/// Degeneracy depends on the secrets alone and is reported before the share
/// count is validated.
pub fn points_split(secrets: &SecretSet, n: usize) -> Result<Vec<Share>> {
    let k = secrets.k();
    if k >= 2 {
        let degree = points_polynomial(secrets)?.true_degree();
        if degree.is_below(k - 1) {
            return Err(Error::DegenerateSecretSet { degree, threshold: k });
        }
    }
    check_points_params(secrets, n)?;
    let q = points_polynomial(secrets)?;
    Ok(evaluate_shares(&q, Scheme::Points, k, (k..k + n).map(|x| x as u64)))
}

/// The points scheme exactly as originally published: no degree check, so
/// a degenerate tuple silently yields shares with a lower effective
/// threshold. Kept for demonstrating attacks on such shares.
pub fn points_split_unchecked(secrets: &SecretSet, n: usize) -> Result<Vec<Share>> {
    check_points_params(secrets, n)?;
    let k = secrets.k();
    let q = points_polynomial(secrets)?;
    Ok(evaluate_shares(&q, Scheme::Points, k, (k..k + n).map(|x| x as u64)))
}

/// Interpolates a quorum and reads the secrets back at `x = 0..k-1`.
pub fn points_reconstruct(shares: &[Share]) -> Result<SecretSet> {
    let q = interpolate_quorum(shares, Scheme::Points)?;
    let k = shares[0].threshold;
    if let Some(s) = shares.iter().find(|s| s.x.value() < k as u64) {
        return Err(Error::InvalidParams(format!(
            "points share at reserved x={}",
            s.x.value()
        )));
    }
    let p = q.modulus();
    SecretSet::new((0..k as u64).map(|x| p.element(q.eval_raw(x))).collect())
}
