//! Exhaustive census of degenerate secret tuples for the points scheme, and
//! blow-up factors of the sharing schemes.

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::poly::{dot, vandermonde_first_row_inverse, LagrangeBasis};
use crate::schemes::{Scheme, SecretSet};

/// Largest `p^k` the census will enumerate.
pub const CENSUS_BOUND: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusMethod {
    /// Interpolate each tuple and inspect the true degree.
    Interpolate,
    /// Dot each tuple with the inverse-Vandermonde row.
    Vandermonde,
    /// Run both tests on every tuple and count disagreements.
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub p: PrimeModulus,
    pub k: usize,
    pub total_tuples: u64,
    pub degenerate_count: u64,
    pub closed_form: u64,
    pub failure_percent: Ratio<u64>,
    /// Tuples the two tests classified differently; only set for [`CensusMethod::Both`].
    pub disagreements: Option<u64>,
}

impl CensusReport {
    pub fn closed_form_ok(&self) -> bool {
        self.degenerate_count == self.closed_form
    }
}

/// Degeneracy tests for a single tuple placed at `x = 0..k-1`.
#[derive(Debug, Clone)]
pub struct DegeneracyTest {
    basis: LagrangeBasis,
    row: Vec<u64>,
    p: PrimeModulus,
    k: usize,
}

impl DegeneracyTest {
    pub fn new(k: usize, p: PrimeModulus) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParams("k must be at least 1".into()));
        }
        let row = vandermonde_first_row_inverse(k, p)?
            .into_iter()
            .map(|e| e.value())
            .collect();
        let nodes: Vec<u64> = (0..k as u64).collect();
        let basis = LagrangeBasis::new(&nodes, p)?;
        Ok(DegeneracyTest { basis, row, p, k })
    }

    fn by_interpolation_raw(&self, secrets: &[u64], scratch: &mut [u64]) -> bool {
        self.basis.combine_into(secrets, scratch);
        // true degree < k-1 ⇔ every coefficient from k-1 up is zero
        scratch[self.k - 1..].iter().all(|&c| c == 0)
    }

    fn by_vandermonde_raw(&self, secrets: &[u64]) -> bool {
        dot(&self.row, secrets, self.p) == 0
    }

    fn check(&self, secrets: &SecretSet) -> Result<()> {
        if secrets.modulus() != self.p || secrets.k() != self.k {
            return Err(Error::InvalidParams(format!(
                "test is for k={} over p={}",
                self.k, self.p
            )));
        }
        Ok(())
    }

    pub fn by_interpolation(&self, secrets: &SecretSet) -> Result<bool> {
        self.check(secrets)?;
        let mut scratch = vec![0; self.k];
        Ok(self.by_interpolation_raw(&secrets.values(), &mut scratch))
    }

    pub fn by_vandermonde(&self, secrets: &SecretSet) -> Result<bool> {
        self.check(secrets)?;
        Ok(self.by_vandermonde_raw(&secrets.values()))
    }
}

#[derive(Default, Clone, Copy)]
struct Tally {
    degenerate: u64,
    disagreements: u64,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            degenerate: self.degenerate + o.degenerate,
            disagreements: self.disagreements + o.disagreements,
        }
    }
}

fn checked_power(p: u64, k: usize) -> Option<u64> {
    (0..k).try_fold(1u64, |acc, _| acc.checked_mul(p))
}

/// Enumerates every ordered k-tuple over Z_p and counts the tuples whose
/// points-scheme interpolant has degree below `k - 1`.
pub fn degeneracy_census(p: PrimeModulus, k: usize, method: CensusMethod) -> Result<CensusReport> {
    let too_large = Error::TooLarge {
        p: p.get(),
        k,
        bound: CENSUS_BOUND,
    };
    let total = match checked_power(p.get(), k) {
        Some(t) if t <= CENSUS_BOUND => t,
        _ => return Err(too_large),
    };
    if k < 1 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    let test = DegeneracyTest::new(k, p)?;
    let base = p.get();

    const BLOCK: u64 = 4096;
    let blocks = total.div_ceil(BLOCK);
    let tally = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut tuple = vec![0u64; k];
            let mut scratch = vec![0u64; k];
            let mut t = Tally::default();
            for idx in b * BLOCK..((b + 1) * BLOCK).min(total) {
                let mut rest = idx;
                for s in tuple.iter_mut() {
                    *s = rest % base;
                    rest /= base;
                }
                let degenerate = match method {
                    CensusMethod::Interpolate => test.by_interpolation_raw(&tuple, &mut scratch),
                    CensusMethod::Vandermonde => test.by_vandermonde_raw(&tuple),
                    CensusMethod::Both => {
                        let a = test.by_interpolation_raw(&tuple, &mut scratch);
                        let v = test.by_vandermonde_raw(&tuple);
                        if a != v {
                            t.disagreements += 1;
                        }
                        a
                    }
                };
                if degenerate {
                    t.degenerate += 1;
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);

    Ok(CensusReport {
        p,
        k,
        total_tuples: total,
        degenerate_count: tally.degenerate,
        closed_form: total / base,
        failure_percent: Ratio::new(100 * tally.degenerate, total),
        disagreements: (method == CensusMethod::Both).then_some(tally.disagreements),
    })
}

/// Checks that the failure percentage is exactly `100 / p`, recomputing it
/// from the raw counts.
pub fn eq1_check(report: &CensusReport) -> bool {
    let p = report.p.get();
    if report.total_tuples == 0 || checked_power(p, report.k) != Some(report.total_tuples) {
        return false;
    }
    let observed = Ratio::new(100 * report.degenerate_count, report.total_tuples);
    observed == report.failure_percent && observed == Ratio::new(100, p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupReport {
    pub scheme: Scheme,
    pub n: u64,
    pub threshold: u64,
    pub k_secrets: u64,
    /// Size of one secret, in arbitrary units.
    pub secret_size: u64,
    /// Size of the material one shareholder stores, in the same units.
    pub share_size: u64,
    pub blowup: Ratio<u64>,
}

/// Total share storage over total secret storage. A Shamir shareholder
/// keeps one field element per secret; the multi-secret schemes give each
/// holder a single element for the whole set.
pub fn blowup_factor(
    scheme: Scheme,
    n: u64,
    threshold: u64,
    k_secrets: u64,
    d: u64,
) -> Result<BlowupReport> {
    if n == 0 || threshold == 0 || k_secrets == 0 || d == 0 {
        return Err(Error::InvalidParams("all blow-up parameters must be positive".into()));
    }
    if threshold > n {
        return Err(Error::InvalidParams(format!(
            "threshold {threshold} exceeds share count {n}"
        )));
    }
    let share_size = match scheme {
        Scheme::Shamir => k_secrets * d,
        Scheme::Points => {
            if threshold != k_secrets {
                return Err(Error::InvalidParams(
                    "the points scheme fixes the threshold to the number of secrets".into(),
                ));
            }
            d
        }
        Scheme::Coeff => {
            if threshold < k_secrets {
                return Err(Error::InvalidParams(format!(
                    "threshold {threshold} is below the number of secrets {k_secrets}"
                )));
            }
            d
        }
    };
    Ok(BlowupReport {
        scheme,
        n,
        threshold,
        k_secrets,
        secret_size: d,
        share_size,
        blowup: Ratio::new(n * share_size, k_secrets * d),
    })
}
