//! Finitely truncated formal power series with complex coefficients.
//!
//! A [`CoefficientSeries`] stores `a_0, a_1, …, a_m`; every index past the
//! stored vector is an implicit zero. Equality ignores trailing zeros.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Degree of a series. The zero series has no degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    Zero,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::Zero => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

#[derive(Clone, Default)]
pub struct CoefficientSeries {
    coeffs: Vec<Complex64>,
}

impl CoefficientSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Complex64) -> Self {
        Self { coeffs: vec![c] }
    }

    /// `c · z^k`.
    pub fn monomial(k: usize, c: Complex64) -> Self {
        let mut coeffs = vec![ZERO; k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self {
            coeffs: coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    /// Rejects NaN or infinite coefficients.
    pub fn checked(coeffs: Vec<Complex64>) -> Result<Self> {
        if let Some(k) = coeffs.iter().position(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(domain(format!("coefficient {k} is not finite")));
        }
        Ok(Self { coeffs })
    }

    /// Coefficient of `z^k`; zero beyond the stored range.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Number of stored coefficients, including explicit trailing zeros.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.iter().rposition(|c| *c != ZERO) {
            Some(d) => Degree::Finite(d),
            None => Degree::Zero,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.degree() == Degree::Zero
    }

    pub fn is_constant(&self) -> bool {
        matches!(self.degree(), Degree::Zero | Degree::Finite(0))
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Copy with trailing zeros removed.
    pub fn trimmed(&self) -> Self {
        let len = self.degree().finite().map_or(0, |d| d + 1);
        Self {
            coeffs: self.coeffs[..len].to_vec(),
        }
    }

    /// Horner evaluation at `z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        }
    }

    /// `Σ |a_k|²`, the squared `H²` norm.
    pub fn h2_norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| c * s).collect(),
        }
    }

    /// Largest coefficientwise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.len().max(other.len());
        (0..n)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max)
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        let n = self.len().max(other.len());
        Self {
            coeffs: (0..n).map(|k| op(self.coeff(k), other.coeff(k))).collect(),
        }
    }

    /// Hadamard (coefficientwise) product.
    pub fn hadamard(&self, other: &Self) -> Self {
        hadamard(self, other)
    }
}

/// `(f * g)(z) = Σ a_k b_k z^k`. The result has `min(len f, len g)` stored
/// coefficients.
pub fn hadamard(f: &CoefficientSeries, g: &CoefficientSeries) -> CoefficientSeries {
    CoefficientSeries {
        coeffs: f
            .coeffs
            .iter()
            .zip(&g.coeffs)
            .map(|(&a, &b)| a * b)
            .collect(),
    }
}

/// `s_n(f) = Σ_{k≤n} a_k z^k`.
pub fn partial_sum(f: &CoefficientSeries, n: usize) -> CoefficientSeries {
    let len = f.len().min(n + 1);
    CoefficientSeries {
        coeffs: f.coeffs[..len].to_vec(),
    }
}

/// `σ_n(f) = (s_0 + … + s_n)/(n+1)`.
///
/// `a_k` occurs in exactly `n+1−k` of the partial sums, so the average is
/// formed from that count; this keeps the result bit-identical to the
/// Hadamard product with the Fejér kernel.
pub fn cesaro_mean(f: &CoefficientSeries, n: usize) -> CoefficientSeries {
    let len = f.len().min(n + 1);
    let denom = (n + 1) as f64;
    CoefficientSeries {
        coeffs: f.coeffs[..len]
            .iter()
            .enumerate()
            .map(|(k, &a)| a * ((n + 1 - k) as f64 / denom))
            .collect(),
    }
}

/// Radial dilate `f_r(z) = f(rz)`.
pub fn dilate(f: &CoefficientSeries, r: f64) -> Result<CoefficientSeries> {
    if !(0.0..1.0).contains(&r) {
        return Err(domain(format!("dilation radius {r} outside [0, 1)")));
    }
    Ok(CoefficientSeries {
        coeffs: f
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &a)| a * r.powi(k as i32))
            .collect(),
    })
}

impl PartialEq for CoefficientSeries {
    fn eq(&self, other: &Self) -> bool {
        let n = self.len().max(other.len());
        (0..n).all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl fmt::Debug for CoefficientSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl fmt::Display for CoefficientSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c == ZERO {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl From<Vec<Complex64>> for CoefficientSeries {
    fn from(coeffs: Vec<Complex64>) -> Self {
        Self::new(coeffs)
    }
}

impl FromIterator<Complex64> for CoefficientSeries {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl Add for &CoefficientSeries {
    type Output = CoefficientSeries;
    fn add(self, rhs: Self) -> CoefficientSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &CoefficientSeries {
    type Output = CoefficientSeries;
    fn sub(self, rhs: Self) -> CoefficientSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &CoefficientSeries {
    type Output = CoefficientSeries;
    fn neg(self) -> CoefficientSeries {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul<Complex64> for &CoefficientSeries {
    type Output = CoefficientSeries;
    fn mul(self, rhs: Complex64) -> CoefficientSeries {
        self.scale(rhs)
    }
}

// JSON form: `[[re, im], [re, im], …]` indexed from 0.
impl Serialize for CoefficientSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.coeffs.iter().map(|c| [c.re, c.im]).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CoefficientSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[f64; 2]>::deserialize(deserializer)?;
        CoefficientSeries::checked(pairs.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
            .map_err(serde::de::Error::custom)
    }
}
