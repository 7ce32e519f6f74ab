//! Attacks on the deterministic multi-secret schemes, which use no random
//! coefficients when the threshold equals the number of secrets.
//!
//! * Divisibility: when every coefficient is at most `r` and the
//!   evaluation `q(u)` never wraps around p, `u | q(u)` exactly when
//!   `u | a_0`, so one share leaks the residue class of `a_0` mod u.
//! * Related secrets: the points-scheme polynomial is linear in the
//!   secrets, so a share `(u, q(u))` for secrets `s` yields the valid share
//!   `(u, d q(u))` for secrets `d s`.

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeModulus};
use crate::schemes::{shamir_split, RandomSource, Scheme, Share};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisibilityInference {
    pub u: FieldElement,
    pub q_u: FieldElement,
    pub r: u64,
    pub divisible: bool,
    pub search_space_size: u64,
}

/// Largest unreduced value `sum_{i < threshold} r u^i`, or `None` on overflow.
pub fn max_unreduced_value(r: u64, u: u64, threshold: usize) -> Option<u128> {
    let mut power = 1u128;
    let mut total = 0u128;
    for i in 0..threshold {
        if i > 0 {
            power = power.checked_mul(u as u128)?;
        }
        total = total.checked_add(power.checked_mul(r as u128)?)?;
    }
    Some(total)
}

/// `true` when evaluating any polynomial with coefficients in `[0, r]` and
/// `threshold` terms at `u` stays below p.
pub fn no_wraparound(r: u64, u: u64, threshold: usize, p: PrimeModulus) -> bool {
    max_unreduced_value(r, u, threshold).is_some_and(|m| m < p.get() as u128)
}

/// Search-space sizes for `a_0` after observing whether `u | q(u)`:
/// `floor(r/u) + 1` when it does, `r - floor(r/u) - 1` when it does not.
pub fn search_space(r: u64, u: u64, divisible: bool) -> u64 {
    if divisible {
        r / u + 1
    } else {
        r.saturating_sub(r / u + 1)
    }
}

/// Infers the divisibility of `a_0` by the share's abscissa from one
/// coefficient-scheme share, given a public bound `r` on all coefficients.
pub fn divisibility_attack(share: &Share, r: u64) -> Result<DivisibilityInference> {
    if share.scheme != Scheme::Coeff {
        return Err(Error::WrongScheme {
            expected: Scheme::Coeff.tag(),
            got: share.scheme.tag(),
        });
    }
    let p = share.modulus;
    let u = share.x.value();
    if u < 2 {
        return Err(Error::InvalidParams(format!(
            "divisibility by u={u} carries no information"
        )));
    }
    if !no_wraparound(r, u, share.threshold, p) {
        return Err(Error::WraparoundRisk { u, p: p.get() });
    }
    let divisible = share.y.value().is_multiple_of(u);
    Ok(DivisibilityInference {
        u: share.x,
        q_u: share.y,
        r,
        divisible,
        search_space_size: search_space(r, u, divisible),
    })
}

/// Outcome of running the divisibility test against Shamir shares, where
/// the random coefficients should make it useless.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisibilityControl {
    pub trials: u64,
    /// Trials where `u | q(u)`.
    pub share_divisible: u64,
    /// Trials where `u | a_0`.
    pub secret_divisible: u64,
    /// Trials where the two agreed, i.e. the inference was right.
    pub agreements: u64,
}

impl DivisibilityControl {
    pub fn share_divisible_fraction(&self) -> f64 {
        self.share_divisible as f64 / self.trials as f64
    }

    pub fn accuracy(&self) -> f64 {
        self.agreements as f64 / self.trials as f64
    }
}

/// Shares a uniformly drawn secret in `[0, r]` with Shamir (threshold k) on
/// each trial and records whether the share at `x = u` predicts `u | a_0`.
pub fn shamir_divisibility_control(
    p: PrimeModulus,
    k: usize,
    u: u64,
    r: u64,
    trials: u64,
    rng: &mut RandomSource,
) -> Result<DivisibilityControl> {
    if u < 2 || r >= p.get() {
        return Err(Error::InvalidParams("need u >= 2 and r < p".into()));
    }
    let n = k.max(u as usize);
    let mut out = DivisibilityControl {
        trials,
        share_divisible: 0,
        secret_divisible: 0,
        agreements: 0,
    };
    for _ in 0..trials {
        let secret = rng.residue(p) % (r + 1);
        let shares = shamir_split(p.element(secret), k, n, rng)?;
        let share = shares[u as usize - 1];
        debug_assert_eq!(share.x.value(), u);
        let q_div = share.y.value() % u == 0;
        let a_div = secret.is_multiple_of(u);
        out.share_divisible += u64::from(q_div);
        out.secret_divisible += u64::from(a_div);
        out.agreements += u64::from(q_div == a_div);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelatedShareForgery {
    pub d: FieldElement,
    pub source_share: Share,
    pub forged_share: Share,
}

/// Turns a points-scheme share for secrets `s` into a share for `d * s`.
pub fn related_share_forgery(source: &Share, d: FieldElement, k: usize) -> Result<RelatedShareForgery> {
    if source.scheme != Scheme::Points {
        return Err(Error::WrongScheme {
            expected: Scheme::Points.tag(),
            got: source.scheme.tag(),
        });
    }
    if source.threshold != k {
        return Err(Error::InvalidParams(format!(
            "share has threshold {}, expected k={k}",
            source.threshold
        )));
    }
    let y = source.y.try_mul(d)?;
    Ok(RelatedShareForgery {
        d,
        source_share: *source,
        forged_share: Share { y, ..*source },
    })
}
