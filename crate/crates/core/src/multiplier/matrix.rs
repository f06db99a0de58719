//! Structured upper-triangular operators.
//!
//! Indexing: series index `k` of a [`CoefficientSeries`] is matrix index `k`
//! (1-based). `c_0` never enters `T_c`. Internally row/column `k` lives at
//! zero-based position `k − 1`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::series::CoefficientSeries;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// A square matrix known through its action and the action of its adjoint.
pub trait LinearOperator: Send + Sync {
    fn dim(&self) -> usize;

    /// 1-based entry `(j, k)`.
    fn entry(&self, j: usize, k: usize) -> Complex64;

    fn apply(&self, x: &[Complex64]) -> Vec<Complex64>;

    fn apply_adjoint(&self, y: &[Complex64]) -> Vec<Complex64>;

    fn to_dense(&self) -> DMatrix<Complex64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |i, j| self.entry(i + 1, j + 1))
    }
}

/// `N × N` top-left section of `T_c`:
/// entry `(j, k)` is `c_k` on the diagonal, `c_k − c_{k−1}` above it, 0 below.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplierMatrix {
    /// `diag[k−1] = c_k`.
    diag: Vec<Complex64>,
    /// `jump[k−1] = c_k − c_{k−1}`; the entry for `k = 1` is never used.
    jump: Vec<Complex64>,
}

impl MultiplierMatrix {
    pub fn from_fn(size: usize, c: impl Fn(usize) -> Complex64) -> Result<Self> {
        if size < 1 {
            return Err(domain("truncation size must be >= 1"));
        }
        let diag: Vec<Complex64> = (1..=size).map(&c).collect();
        let jump = (1..=size)
            .map(|k| if k == 1 { ZERO } else { diag[k - 1] - diag[k - 2] })
            .collect();
        Ok(Self { diag, jump })
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    /// `c_1, …, c_N`.
    pub fn diagonal(&self) -> &[Complex64] {
        &self.diag
    }

    /// Euclidean norm of column `k` (1-based).
    pub fn column_norm(&self, k: usize) -> f64 {
        (self.diag[k - 1].norm_sqr() + (k - 1) as f64 * self.jump[k - 1].norm_sqr()).sqrt()
    }

    pub fn scaled(&self, s: Complex64) -> Self {
        Self {
            diag: self.diag.iter().map(|&x| x * s).collect(),
            jump: self.jump.iter().map(|&x| x * s).collect(),
        }
    }
}

/// Builds the `N × N` section of `T_c` from a series (`c_0` dropped).
pub fn tc_truncation(c: &CoefficientSeries, size: usize) -> Result<MultiplierMatrix> {
    MultiplierMatrix::from_fn(size, |k| c.coeff(k))
}

impl LinearOperator for MultiplierMatrix {
    fn dim(&self) -> usize {
        self.size()
    }

    fn entry(&self, j: usize, k: usize) -> Complex64 {
        if j == k {
            self.diag[k - 1]
        } else if j < k {
            self.jump[k - 1]
        } else {
            ZERO
        }
    }

    // (Tξ)_j = c_j ξ_j + Σ_{k>j} (c_k − c_{k−1}) ξ_k
    fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.size();
        let mut out = vec![ZERO; n];
        let mut suffix = ZERO;
        for i in (0..n).rev() {
            out[i] = self.diag[i] * x[i] + suffix;
            suffix += self.jump[i] * x[i];
        }
        out
    }

    // (T*η)_k = conj(c_k) η_k + conj(c_k − c_{k−1}) Σ_{j<k} η_j
    fn apply_adjoint(&self, y: &[Complex64]) -> Vec<Complex64> {
        let n = self.size();
        let mut out = vec![ZERO; n];
        let mut prefix = ZERO;
        for i in 0..n {
            out[i] = self.diag[i].conj() * y[i] + self.jump[i].conj() * prefix;
            prefix += y[i];
        }
        out
    }
}

/// Finite section of the Cesàro matrix, entry `(j, k) = 1/k` for `j ≤ k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CesaroMatrix {
    size: usize,
}

pub fn cesaro_matrix(size: usize) -> Result<CesaroMatrix> {
    if size < 1 {
        return Err(domain("Cesàro section size must be >= 1"));
    }
    Ok(CesaroMatrix { size })
}

impl LinearOperator for CesaroMatrix {
    fn dim(&self) -> usize {
        self.size
    }

    fn entry(&self, j: usize, k: usize) -> Complex64 {
        if j <= k {
            Complex64::new(1.0 / k as f64, 0.0)
        } else {
            ZERO
        }
    }

    fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![ZERO; self.size];
        let mut suffix = ZERO;
        for i in (0..self.size).rev() {
            suffix += x[i] / (i + 1) as f64;
            out[i] = suffix;
        }
        out
    }

    fn apply_adjoint(&self, y: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![ZERO; self.size];
        let mut prefix = ZERO;
        for i in 0..self.size {
            prefix += y[i];
            out[i] = prefix / (i + 1) as f64;
        }
        out
    }
}

/// Symmetric matrix with entry `(j, k) = a_{max(j,k)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LShapedMatrix {
    a: Vec<f64>,
}

/// `a[0]` holds `a_1`.
pub fn l_shaped_matrix(a: &[f64], size: usize) -> Result<LShapedMatrix> {
    if size < 1 {
        return Err(domain("L-shaped section size must be >= 1"));
    }
    if a.len() < size {
        return Err(domain(format!("need {size} entries, got {}", a.len())));
    }
    Ok(LShapedMatrix {
        a: a[..size].to_vec(),
    })
}

impl LinearOperator for LShapedMatrix {
    fn dim(&self) -> usize {
        self.a.len()
    }

    fn entry(&self, j: usize, k: usize) -> Complex64 {
        Complex64::new(self.a[j.max(k) - 1], 0.0)
    }

    // (Lx)_j = a_j Σ_{k≤j} x_k + Σ_{k>j} a_k x_k
    fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.a.len();
        let mut suffix = vec![ZERO; n + 1];
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1] + x[i] * self.a[i];
        }
        let mut prefix = ZERO;
        (0..n)
            .map(|i| {
                prefix += x[i];
                prefix * self.a[i] + suffix[i + 1]
            })
            .collect()
    }

    fn apply_adjoint(&self, y: &[Complex64]) -> Vec<Complex64> {
        self.apply(y)
    }
}
