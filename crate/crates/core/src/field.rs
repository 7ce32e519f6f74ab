//! Arithmetic in the prime field Z_p for word-sized primes.
//!
//! Every value is kept as its canonical representative in `[0, p)`. Products
//! are formed in `u128` before reduction, which is exact because `p < 2^61`.

use std::fmt;

use crate::error::{Error, Result};

/// Exclusive upper bound on supported moduli.
pub const MODULUS_BOUND: u64 = 1 << 61;

/// Miller-Rabin witnesses that are deterministic for every n < 3.3 * 10^24.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// A validated prime `p` with `2 <= p < 2^61`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p < MODULUS_BOUND && is_prime(p) {
            Ok(PrimeModulus(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Builds the element `value mod p`.
    pub fn element(self, value: u64) -> FieldElement {
        FieldElement {
            value: value % self.0,
            modulus: self,
        }
    }

    /// Builds the element `value mod p` from a possibly negative integer.
    pub fn element_from_i128(self, value: i128) -> FieldElement {
        let v = value.rem_euclid(self.0 as i128) as u64;
        FieldElement {
            value: v,
            modulus: self,
        }
    }

    pub fn zero(self) -> FieldElement {
        self.element(0)
    }

    pub fn one(self) -> FieldElement {
        self.element(1)
    }

    // Raw residue arithmetic. Callers guarantee both inputs are already < p.

    #[inline]
    pub(crate) fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub(crate) fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub(crate) fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    pub(crate) fn pow(self, base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        let mut b = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by the extended Euclidean algorithm.
    pub(crate) fn inv(self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let (mut old_r, mut r) = (a as i128, self.0 as i128);
        let (mut old_s, mut s) = (1i128, 0i128);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1);
        Ok(old_s.rem_euclid(self.0 as i128) as u64)
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Deterministic Miller-Rabin primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n == w {
            return true;
        }
        if n.is_multiple_of(w) {
            return false;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A residue of Z_p tagged with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    modulus: PrimeModulus,
}

impl FieldElement {
    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: FieldElement) -> Result<PrimeModulus> {
        if self.modulus == other.modulus {
            Ok(self.modulus)
        } else {
            Err(Error::ModulusMismatch(self.modulus.0, other.modulus.0))
        }
    }

    fn with(self, value: u64) -> FieldElement {
        FieldElement {
            value,
            modulus: self.modulus,
        }
    }

    pub fn try_add(self, rhs: FieldElement) -> Result<FieldElement> {
        let p = self.same_field(rhs)?;
        Ok(self.with(p.add(self.value, rhs.value)))
    }

    pub fn try_sub(self, rhs: FieldElement) -> Result<FieldElement> {
        let p = self.same_field(rhs)?;
        Ok(self.with(p.sub(self.value, rhs.value)))
    }

    pub fn try_mul(self, rhs: FieldElement) -> Result<FieldElement> {
        let p = self.same_field(rhs)?;
        Ok(self.with(p.mul(self.value, rhs.value)))
    }

    pub fn pow(self, exp: u64) -> FieldElement {
        self.with(self.modulus.pow(self.value, exp))
    }

    /// Multiplicative inverse via extended Euclid.
    pub fn inv(self) -> Result<FieldElement> {
        Ok(self.with(self.modulus.inv(self.value)?))
    }

    /// Multiplicative inverse via Fermat's little theorem, `a^(p-2)`.
    pub fn inv_fermat(self) -> Result<FieldElement> {
        if self.value == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(self.modulus.0 - 2))
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        self.with(self.modulus.neg(self.value))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}
