//! Largest singular value of a finite section.
//!
//! Two interchangeable estimators sit behind [`NormMethod`]: a full SVD and a
//! power iteration on `T*T`. [`NormMethodRegistry`] resolves them by name;
//! [`operator_norm`] picks the dense method up to [`DENSE_LIMIT`].

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::LinearOperator;
use crate::error::{Error, Result};

/// Largest size for which [`operator_norm`] uses a full decomposition.
pub const DENSE_LIMIT: usize = 512;

pub trait NormMethod: Send + Sync {
    fn name(&self) -> &'static str;

    fn largest_singular_value(&self, op: &dyn LinearOperator) -> f64;
}

/// Singular values of the dense matrix.
#[derive(Debug, Clone, Copy, Default)]
pub struct DenseSvd;

impl NormMethod for DenseSvd {
    fn name(&self) -> &'static str {
        "dense"
    }

    fn largest_singular_value(&self, op: &dyn LinearOperator) -> f64 {
        op.to_dense()
            .singular_values()
            .iter()
            .copied()
            .fold(0.0, f64::max)
    }
}

/// Power iteration on `T*T` from a seeded random complex start.
///
/// Every iterate `x` is a unit vector, so `‖Tx‖` is a certified lower bound
/// for `‖T‖`; the reported value is the largest one seen.
#[derive(Debug, Clone, Copy)]
pub struct PowerIteration {
    pub rel_tol: f64,
    pub max_iter: usize,
    pub seed: u64,
}

impl Default for PowerIteration {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            max_iter: 200_000,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerOutcome {
    pub value: f64,
    pub iterations: usize,
    /// `‖T*T x − σ² x‖` at the final unit iterate.
    pub residual: f64,
    pub converged: bool,
}

fn norm2(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

impl PowerIteration {
    pub fn run(&self, op: &dyn LinearOperator) -> PowerOutcome {
        let n = op.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut x: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
            .collect();
        let nx = norm2(&x);
        x.iter_mut().for_each(|z| *z /= nx);

        let mut best = 0.0f64;
        let mut prev = f64::NAN;
        for it in 1..=self.max_iter {
            let y = op.apply(&x);
            let sigma = norm2(&y);
            best = best.max(sigma);
            let mut next = op.apply_adjoint(&y);
            let nn = norm2(&next);
            let residual = next
                .iter()
                .zip(&x)
                .map(|(a, b)| (a - b * (sigma * sigma)).norm_sqr())
                .sum::<f64>()
                .sqrt();
            if nn == 0.0 {
                return PowerOutcome {
                    value: best,
                    iterations: it,
                    residual,
                    converged: true,
                };
            }
            if (sigma - prev).abs() <= self.rel_tol * sigma {
                return PowerOutcome {
                    value: best,
                    iterations: it,
                    residual,
                    converged: true,
                };
            }
            prev = sigma;
            next.iter_mut().for_each(|z| *z /= nn);
            x = next;
        }
        PowerOutcome {
            value: best,
            iterations: self.max_iter,
            residual: f64::NAN,
            converged: false,
        }
    }
}

impl NormMethod for PowerIteration {
    fn name(&self) -> &'static str {
        "power"
    }

    fn largest_singular_value(&self, op: &dyn LinearOperator) -> f64 {
        self.run(op).value
    }
}

/// Dense up to [`DENSE_LIMIT`], power iteration above.
#[derive(Debug, Clone, Copy, Default)]
pub struct Auto;

impl NormMethod for Auto {
    fn name(&self) -> &'static str {
        "auto"
    }

    fn largest_singular_value(&self, op: &dyn LinearOperator) -> f64 {
        if op.dim() <= DENSE_LIMIT {
            DenseSvd.largest_singular_value(op)
        } else {
            PowerIteration::default().largest_singular_value(op)
        }
    }
}

pub struct NormMethodRegistry {
    methods: BTreeMap<&'static str, Box<dyn NormMethod>>,
}

impl NormMethodRegistry {
    pub fn empty() -> Self {
        Self {
            methods: BTreeMap::new(),
        }
    }

    pub fn builtin() -> Self {
        Self::empty()
            .register(Box::new(Auto))
            .register(Box::new(DenseSvd))
            .register(Box::new(PowerIteration::default()))
    }

    pub fn register(mut self, method: Box<dyn NormMethod>) -> Self {
        self.methods.insert(method.name(), method);
        self
    }

    pub fn get(&self, name: &str) -> Result<&dyn NormMethod> {
        self.methods
            .get(name)
            .map(|m| m.as_ref())
            .ok_or_else(|| Error::UnknownMethod(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.methods.keys().copied()
    }
}

impl Default for NormMethodRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

/// `‖M‖₂` of a finite section. A lower bound for the infinite operator; exact
/// for `T_c` with polynomial `c` once the section covers the support.
pub fn operator_norm(op: &dyn LinearOperator) -> f64 {
    Auto.largest_singular_value(op)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplier::matrix::{cesaro_matrix, l_shaped_matrix, tc_truncation};
    use crate::series::CoefficientSeries;

    fn real(v: &[f64]) -> CoefficientSeries {
        CoefficientSeries::from_real(v)
    }

    #[test]
    fn norm_examples() {
        let m = tc_truncation(&real(&[1.0, 1.0]), 2).unwrap();
        assert!((operator_norm(&m) - 2f64.sqrt()).abs() < 1e-14);
        let m = tc_truncation(&real(&[1.0, 0.5]), 2).unwrap();
        assert!((operator_norm(&m) - 0.5f64.sqrt()).abs() < 1e-14);
        let m = tc_truncation(&CoefficientSeries::zero(), 4).unwrap();
        assert_eq!(operator_norm(&m), 0.0);
        assert_eq!(PowerIteration::default().largest_singular_value(&m), 0.0);
    }

    #[test]
    fn power_matches_dense() {
        let s = CoefficientSeries::new(
            (0..40)
                .map(|k| Complex64::new(((k * 7 % 11) as f64) / 11.0, ((k * 3 % 5) as f64) / 5.0))
                .collect(),
        );
        let m = tc_truncation(&s, 41).unwrap();
        let dense = DenseSvd.largest_singular_value(&m);
        let out = PowerIteration::default().run(&m);
        assert!(out.converged);
        assert!((out.value - dense).abs() <= 1e-10 * dense, "{} vs {dense}", out.value);
        assert!(out.value <= dense * (1.0 + 1e-14));
    }

    #[test]
    fn l_shaped_all_ones_has_norm_n() {
        let m = l_shaped_matrix(&[1.0; 3], 3).unwrap();
        assert!((operator_norm(&m) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn cesaro_small_sections() {
        // numpy.linalg.norm(C, 2) for N = 2 and N = 64
        let m = cesaro_matrix(2).unwrap();
        assert!((operator_norm(&m) - 1.1441228056353687).abs() < 1e-12);
        let m = cesaro_matrix(64).unwrap();
        assert!((operator_norm(&m) - 1.5978545967061848).abs() < 1e-12);
        let p = PowerIteration::default().largest_singular_value(&m);
        assert!((p - 1.5978545967061848).abs() < 1e-10);
    }

    #[test]
    fn registry_lookup() {
        let reg = NormMethodRegistry::builtin();
        assert_eq!(reg.names().collect::<Vec<_>>(), vec!["auto", "dense", "power"]);
        assert!(reg.get("dense").is_ok());
        assert!(matches!(reg.get("lanczos"), Err(Error::UnknownMethod(_))));
    }
}
