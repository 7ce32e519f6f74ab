//! Polynomials over Z_p, Lagrange interpolation, and the Vandermonde test
//! for secret tuples whose interpolant has lower degree than expected.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeModulus};

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    /// `true` when the degree is finite and strictly below `d`, or is `NegInfinity`.
    pub fn is_below(self, d: usize) -> bool {
        match self {
            Degree::NegInfinity => true,
            Degree::Finite(n) => n < d,
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInfinity, Degree::NegInfinity) => Ordering::Equal,
            (Degree::NegInfinity, _) => Ordering::Less,
            (_, Degree::NegInfinity) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(n) => n.fmt(f),
        }
    }
}

/// Polynomial with coefficients stored lowest power first. Trailing zero
/// coefficients are kept: the storage length is meaningful to callers that
/// work with a fixed threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<u64>,
    modulus: PrimeModulus,
}

impl Polynomial {
    pub fn new(coefficients: &[FieldElement], modulus: PrimeModulus) -> Result<Self> {
        let coeffs = coefficients
            .iter()
            .map(|c| {
                if c.modulus() == modulus {
                    Ok(c.value())
                } else {
                    Err(Error::ModulusMismatch(modulus.get(), c.modulus().get()))
                }
            })
            .collect::<Result<_>>()?;
        Ok(Polynomial { coeffs, modulus })
    }

    /// Builds a polynomial from raw integers, reducing each mod p.
    pub fn from_values(values: &[u64], modulus: PrimeModulus) -> Self {
        Polynomial {
            coeffs: values.iter().map(|&v| v % modulus.get()).collect(),
            modulus,
        }
    }

    pub(crate) fn from_raw(coeffs: Vec<u64>, modulus: PrimeModulus) -> Self {
        Polynomial { coeffs, modulus }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    /// Number of stored coefficients, including trailing zeros.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, i: usize) -> FieldElement {
        self.modulus.element(self.coeffs.get(i).copied().unwrap_or(0))
    }

    pub fn coefficients(&self) -> Vec<FieldElement> {
        self.coeffs.iter().map(|&c| self.modulus.element(c)).collect()
    }

    pub fn values(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn true_degree(&self) -> Degree {
        match self.coeffs.iter().rposition(|&c| c != 0) {
            Some(i) => Degree::Finite(i),
            None => Degree::NegInfinity,
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: FieldElement) -> Result<FieldElement> {
        if x.modulus() != self.modulus {
            return Err(Error::ModulusMismatch(self.modulus.get(), x.modulus().get()));
        }
        Ok(self.modulus.element(self.eval_raw(x.value())))
    }

    pub(crate) fn eval_raw(&self, x: u64) -> u64 {
        let p = self.modulus;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| p.add(p.mul(acc, x), c))
    }

    /// Multiplies every coefficient by `d`.
    pub fn scale(&self, d: FieldElement) -> Result<Polynomial> {
        if d.modulus() != self.modulus {
            return Err(Error::ModulusMismatch(self.modulus.get(), d.modulus().get()));
        }
        let p = self.modulus;
        Ok(Polynomial::from_raw(
            self.coeffs.iter().map(|&c| p.mul(c, d.value())).collect(),
            p,
        ))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match i {
                0 => c.to_string(),
                1 if c == 1 => "x".to_string(),
                1 => format!("{c}x"),
                _ if c == 1 => format!("x^{i}"),
                _ => format!("{c}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            write!(f, "{} (mod {})", terms.join(" + "), self.modulus)
        }
    }
}

/// Points with pairwise distinct x-coordinates over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    xs: Vec<u64>,
    ys: Vec<u64>,
    modulus: PrimeModulus,
}

impl PointSet {
    pub fn new(points: &[(FieldElement, FieldElement)]) -> Result<Self> {
        let Some(&(x0, _)) = points.first() else {
            return Err(Error::EmptyInput);
        };
        let modulus = x0.modulus();
        let mut seen = HashSet::with_capacity(points.len());
        let mut xs = Vec::with_capacity(points.len());
        let mut ys = Vec::with_capacity(points.len());
        for &(x, y) in points {
            for e in [x, y] {
                if e.modulus() != modulus {
                    return Err(Error::ModulusMismatch(modulus.get(), e.modulus().get()));
                }
            }
            if !seen.insert(x.value()) {
                return Err(Error::DuplicateX(x.value()));
            }
            xs.push(x.value());
            ys.push(y.value());
        }
        Ok(PointSet { xs, ys, modulus })
    }

    /// Convenience constructor from raw `(x, y)` integers, reduced mod p.
    pub fn from_values(points: &[(u64, u64)], modulus: PrimeModulus) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        let pts: Vec<_> = points
            .iter()
            .map(|&(x, y)| (modulus.element(x), modulus.element(y)))
            .collect();
        Self::new(&pts)
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn points(&self) -> impl Iterator<Item = (FieldElement, FieldElement)> + '_ {
        self.xs
            .iter()
            .zip(&self.ys)
            .map(|(&x, &y)| (self.modulus.element(x), self.modulus.element(y)))
    }
}

/// Lagrange basis polynomials for a fixed set of distinct nodes. Each basis
/// polynomial `L_i` is 1 at node `i` and 0 at every other node.
#[derive(Debug, Clone)]
pub struct LagrangeBasis {
    basis: Vec<Vec<u64>>,
    modulus: PrimeModulus,
}

impl LagrangeBasis {
    pub fn new(nodes: &[u64], modulus: PrimeModulus) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::EmptyInput);
        }
        let p = modulus;
        let mut seen = HashSet::with_capacity(nodes.len());
        for &x in nodes {
            if !seen.insert(x % p.get()) {
                return Err(Error::DuplicateX(x % p.get()));
            }
        }
        let nodes: Vec<u64> = nodes.iter().map(|&x| x % p.get()).collect();
        let k = nodes.len();
        let mut basis = Vec::with_capacity(k);
        for (i, &xi) in nodes.iter().enumerate() {
            // numerator: prod_{j != i} (x - x_j), built one linear factor at a time
            let mut num = vec![0u64; k];
            num[0] = 1;
            let mut len = 1;
            let mut denom = 1u64;
            for (j, &xj) in nodes.iter().enumerate() {
                if j == i {
                    continue;
                }
                let neg_xj = p.neg(xj);
                for t in (0..=len).rev() {
                    let shifted = if t > 0 { num[t - 1] } else { 0 };
                    let kept = if t < len { p.mul(num[t], neg_xj) } else { 0 };
                    num[t] = p.add(shifted, kept);
                }
                len += 1;
                denom = p.mul(denom, p.sub(xi, xj));
            }
            let scale = p.inv(denom)?;
            basis.push(num.into_iter().map(|c| p.mul(c, scale)).collect());
        }
        Ok(LagrangeBasis { basis, modulus })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis_polynomial(&self, i: usize) -> Polynomial {
        Polynomial::from_raw(self.basis[i].clone(), self.modulus)
    }

    /// Coefficients of `sum_i ys[i] * L_i`, written into `out`.
    pub(crate) fn combine_into(&self, ys: &[u64], out: &mut [u64]) {
        let p = self.modulus;
        out.iter_mut().for_each(|c| *c = 0);
        for (l, &y) in self.basis.iter().zip(ys) {
            if y == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(l) {
                *o = p.add(*o, p.mul(b, y));
            }
        }
    }

    pub fn combine(&self, ys: &[u64]) -> Polynomial {
        let mut out = vec![0u64; self.basis.len()];
        self.combine_into(ys, &mut out);
        Polynomial::from_raw(out, self.modulus)
    }
}

pub fn true_degree(q: &Polynomial) -> Degree {
    q.true_degree()
}

/// Unique polynomial of degree `< points.len()` through every point, stored
/// with exactly `points.len()` coefficients.
pub fn interpolate(points: &PointSet) -> Result<Polynomial> {
    let basis = LagrangeBasis::new(&points.xs, points.modulus)?;
    Ok(basis.combine(&points.ys))
}

/// Row of the inverse Vandermonde matrix on nodes `0..k` that yields the
/// coefficient of `x^(k-1)` from the values at those nodes. A tuple
/// `(s_0, .., s_{k-1})` interpolates to degree below `k-1` exactly when its
/// dot product with this row is zero.
///
/// Computed by Gauss-Jordan elimination of `[V | I]`, independently of the
/// Lagrange construction used by [`interpolate`].
pub fn vandermonde_first_row_inverse(k: usize, modulus: PrimeModulus) -> Result<Vec<FieldElement>> {
    let p = modulus;
    if k == 0 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    if k as u64 > p.get() {
        return Err(Error::KTooLargeForField { k, p: p.get() });
    }
    // Augmented matrix: V[i][j] = i^j, so V * (a_0..a_{k-1}) = (s_0..s_{k-1}).
    let mut m: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            let mut row: Vec<u64> = (0..k).map(|j| p.pow(i as u64 % p.get(), j as u64)).collect();
            row.extend((0..k).map(|j| u64::from(i == j)));
            row
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| m[r][col] != 0)
            .expect("Vandermonde matrix on distinct nodes is invertible");
        m.swap(col, pivot);
        let inv = p.inv(m[col][col])?;
        for v in m[col].iter_mut() {
            *v = p.mul(*v, inv);
        }
        for r in 0..k {
            if r == col || m[r][col] == 0 {
                continue;
            }
            let factor = m[r][col];
            let pivot = m[col].clone();
            for (v, &pv) in m[r].iter_mut().zip(&pivot) {
                *v = p.sub(*v, p.mul(factor, pv));
            }
        }
    }
    Ok(m[k - 1][k..].iter().map(|&v| p.element(v)).collect())
}

/// `sum_i row[i] * secrets[i]`, on raw residues.
pub(crate) fn dot(row: &[u64], secrets: &[u64], p: PrimeModulus) -> u64 {
    row.iter()
        .zip(secrets)
        .fold(0, |acc, (&m, &s)| p.add(acc, p.mul(m, s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn on_nodes(ys: &[u64], p: u64) -> Polynomial {
        let pts: Vec<(u64, u64)> = ys.iter().enumerate().map(|(i, &y)| (i as u64, y)).collect();
        interpolate(&PointSet::from_values(&pts, fp(p)).unwrap()).unwrap()
    }

    #[test]
    fn horner_evaluation() {
        let p = fp(999_961);
        let q = Polynomial::from_values(&[15, 2, 3, 4], p);
        assert_eq!(q.eval(p.element(3)).unwrap().value(), 156);
        let q = Polynomial::from_values(&[14, 2, 3, 4], p);
        assert_eq!(q.eval(p.element(3)).unwrap().value(), 155);
        let c = Polynomial::from_values(&[42], p);
        for x in [0, 1, 7, 999_960] {
            assert_eq!(c.eval(p.element(x)).unwrap().value(), 42);
        }
    }

    #[test]
    fn eval_rejects_foreign_point() {
        let q = Polynomial::from_values(&[1, 2], fp(7));
        assert_eq!(
            q.eval(fp(11).element(3)),
            Err(Error::ModulusMismatch(7, 11))
        );
    }

    #[test]
    fn quadratic_hidden_in_four_secrets() {
        let q = on_nodes(&[2, 6, 12, 20], 31);
        assert_eq!(q.values(), &[2, 3, 1, 0]);
        assert_eq!(q.true_degree(), Degree::Finite(2));
    }

    #[test]
    fn equal_secrets_interpolate_to_constant() {
        let q = on_nodes(&[2, 2, 2], 3);
        assert_eq!(q.values(), &[2, 0, 0]);
        assert_eq!(q.true_degree(), Degree::Finite(0));
    }

    #[test]
    fn basis_polynomials_mod_3() {
        // L_0 = 2x^2 + 1, L_1 = 2x^2 + 2x, L_2 = 2x^2 + x over Z_3
        let b = LagrangeBasis::new(&[0, 1, 2], fp(3)).unwrap();
        assert_eq!(b.basis_polynomial(0).values(), &[1, 0, 2]);
        assert_eq!(b.basis_polynomial(1).values(), &[0, 2, 2]);
        assert_eq!(b.basis_polynomial(2).values(), &[0, 1, 2]);
    }

    #[test]
    fn single_point_is_constant() {
        let q = interpolate(&PointSet::from_values(&[(0, 9)], fp(11)).unwrap()).unwrap();
        assert_eq!(q.values(), &[9]);
        let q = interpolate(&PointSet::from_values(&[(5, 9)], fp(11)).unwrap()).unwrap();
        assert_eq!(q.values(), &[9]);
    }

    #[test]
    fn interpolation_errors() {
        assert_eq!(PointSet::new(&[]), Err(Error::EmptyInput));
        assert_eq!(
            PointSet::from_values(&[(1, 2), (3, 4), (1, 5)], fp(7)),
            Err(Error::DuplicateX(1))
        );
        // 8 = 1 mod 7
        assert_eq!(
            PointSet::from_values(&[(1, 2), (8, 4)], fp(7)),
            Err(Error::DuplicateX(1))
        );
        let a = (fp(7).element(1), fp(7).element(2));
        let b = (fp(11).element(2), fp(11).element(2));
        assert!(matches!(
            PointSet::new(&[a, b]),
            Err(Error::ModulusMismatch(7, 11))
        ));
    }

    #[test]
    fn degrees() {
        let p = fp(31);
        assert_eq!(Polynomial::from_values(&[2, 3, 1, 0], p).true_degree(), Degree::Finite(2));
        assert_eq!(Polynomial::from_values(&[2, 0, 0], p).true_degree(), Degree::Finite(0));
        assert_eq!(Polynomial::from_values(&[0, 0, 0], p).true_degree(), Degree::NegInfinity);
        assert_eq!(Polynomial::from_values(&[], p).true_degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert!(Degree::NegInfinity.is_below(0));
        assert!(!Degree::Finite(2).is_below(2));
    }

    #[test]
    fn vandermonde_row_k2() {
        for p in [3, 7, 31, 999_961] {
            let row: Vec<u64> = vandermonde_first_row_inverse(2, fp(p))
                .unwrap()
                .iter()
                .map(|e| e.value())
                .collect();
            assert_eq!(row, vec![p - 1, 1]);
        }
    }

    #[test]
    fn vandermonde_row_flags_known_degenerate_tuples() {
        let row: Vec<u64> = vandermonde_first_row_inverse(3, fp(5))
            .unwrap()
            .iter()
            .map(|e| e.value())
            .collect();
        assert_eq!(dot(&row, &[2, 2, 2], fp(5)), 0);
        let row: Vec<u64> = vandermonde_first_row_inverse(4, fp(31))
            .unwrap()
            .iter()
            .map(|e| e.value())
            .collect();
        assert_eq!(dot(&row, &[2, 6, 12, 20], fp(31)), 0);
        assert_ne!(dot(&row, &[2, 6, 12, 21], fp(31)), 0);
    }

    #[test]
    fn vandermonde_k_too_large() {
        assert_eq!(
            vandermonde_first_row_inverse(4, fp(3)),
            Err(Error::KTooLargeForField { k: 4, p: 3 })
        );
        assert!(vandermonde_first_row_inverse(3, fp(3)).is_ok());
    }

    #[test]
    fn vandermonde_and_lagrange_agree_exhaustively() {
        for p in [2u64, 3, 5, 7, 11] {
            for k in 1..=4usize {
                if k as u64 > p {
                    continue;
                }
                let row: Vec<u64> = vandermonde_first_row_inverse(k, fp(p))
                    .unwrap()
                    .iter()
                    .map(|e| e.value())
                    .collect();
                let total = p.pow(k as u32);
                for idx in 0..total {
                    let mut t = idx;
                    let secrets: Vec<u64> = (0..k)
                        .map(|_| {
                            let d = t % p;
                            t /= p;
                            d
                        })
                        .collect();
                    let via_row = dot(&row, &secrets, fp(p)) == 0;
                    let via_interp = on_nodes(&secrets, p).true_degree().is_below(k - 1);
                    assert_eq!(via_row, via_interp, "p={p} secrets={secrets:?}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn interpolation_round_trip(
            p in prop::sample::select(vec![7u64, 31, 101]),
            coeffs in prop::collection::vec(any::<u64>(), 1..6),
            seed_xs in prop::collection::vec(any::<u64>(), 6),
        ) {
            let f = fp(p);
            let q = Polynomial::from_values(&coeffs, f);
            let k = q.len();
            let mut xs: Vec<u64> = Vec::new();
            for s in seed_xs.iter().copied().chain(0..p) {
                let x = s % p;
                if !xs.contains(&x) {
                    xs.push(x);
                }
                if xs.len() == k {
                    break;
                }
            }
            let pts: Vec<(u64, u64)> = xs.iter().map(|&x| (x, q.eval_raw(x))).collect();
            let back = interpolate(&PointSet::from_values(&pts, f).unwrap()).unwrap();
            prop_assert_eq!(back.values(), q.values());
            for (x, y) in pts {
                prop_assert_eq!(back.eval_raw(x), y);
            }
        }
    }
}
