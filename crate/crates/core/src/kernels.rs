//! Classical summability kernels acting by Hadamard product.
//!
//! `D_n`, `K_n` and `V_n` have rational coefficients and are available both
//! exactly ([`make_kernel_exact`]) and in floating point ([`make_kernel`]).
//! The Poisson kernel `P_r` is truncated at a caller-chosen degree.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::series::CoefficientSeries;

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelSpec {
    Dirichlet(usize),
    Fejer(usize),
    ValleePoussin(usize),
    Poisson { r: f64, degree: usize },
}

impl KernelSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            KernelSpec::ValleePoussin(0) => {
                Err(domain("de la Vallée Poussin kernel needs n >= 1"))
            }
            KernelSpec::Poisson { r, degree } => {
                if !(0.0..1.0).contains(&r) {
                    Err(domain(format!("Poisson radius {r} outside [0, 1)")))
                } else if degree < 1 {
                    Err(domain("Poisson truncation degree must be >= 1"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Index of the last nonzero coefficient.
    pub fn degree(&self) -> usize {
        match *self {
            KernelSpec::Dirichlet(n) => n,
            KernelSpec::Fejer(n) => n,
            KernelSpec::ValleePoussin(n) => 2 * n - 1,
            KernelSpec::Poisson { degree, .. } => degree,
        }
    }
}

impl fmt::Display for KernelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelSpec::Dirichlet(n) => write!(f, "dirichlet:{n}"),
            KernelSpec::Fejer(n) => write!(f, "fejer:{n}"),
            KernelSpec::ValleePoussin(n) => write!(f, "vallee-poussin:{n}"),
            KernelSpec::Poisson { r, degree } => write!(f, "poisson:{r}:{degree}"),
        }
    }
}

impl FromStr for KernelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::KernelSyntax(s.to_string());
        let parts: Vec<&str> = s.trim().split(':').collect();
        let order = |p: &str| p.parse::<usize>().map_err(|_| bad());
        let spec = match parts.as_slice() {
            ["dirichlet", n] => KernelSpec::Dirichlet(order(n)?),
            ["fejer", n] => KernelSpec::Fejer(order(n)?),
            ["vallee-poussin", n] | ["vallee_poussin", n] => KernelSpec::ValleePoussin(order(n)?),
            ["poisson", r, d] => KernelSpec::Poisson {
                r: r.parse().map_err(|_| bad())?,
                degree: order(d)?,
            },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Exact rational coefficients of `D_n`, `K_n` or `V_n`.
pub fn make_kernel_exact(spec: KernelSpec) -> Result<Vec<Rational>> {
    spec.validate()?;
    let coeffs = match spec {
        KernelSpec::Dirichlet(n) => vec![Rational::one(); n + 1],
        KernelSpec::Fejer(n) => {
            let m = (n + 1) as i128;
            (0..=n as i128).map(|k| Rational::new(m - k, m)).collect()
        }
        KernelSpec::ValleePoussin(n) => {
            let n = n as i128;
            (0..2 * n)
                .map(|k| {
                    if k < n {
                        Rational::one()
                    } else {
                        Rational::new(2 * n - k, n)
                    }
                })
                .collect()
        }
        KernelSpec::Poisson { .. } => {
            return Err(domain("Poisson kernel coefficients are not rational in general"))
        }
    };
    Ok(coeffs)
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    // i128 -> f64 is exact for the small numerators used here, so the
    // division is correctly rounded.
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

pub fn make_kernel(spec: KernelSpec) -> Result<CoefficientSeries> {
    spec.validate()?;
    match spec {
        KernelSpec::Poisson { r, degree } => Ok((0..=degree)
            .map(|k| Complex64::new(r.powi(k as i32), 0.0))
            .collect()),
        _ => Ok(make_kernel_exact(spec)?
            .iter()
            .map(|q| Complex64::new(rational_to_f64(q), 0.0))
            .collect()),
    }
}

/// Closed-form bound on `Σ_{k>N} √(k(k+1)) (1−r)² r^k`, namely `(N+2) r^{N+1}`.
pub fn poisson_tail_bound(r: f64, degree: usize) -> f64 {
    (degree as f64 + 2.0) * r.powi(degree as i32 + 1)
}

/// Smallest truncation degree whose certified tail is below `tol`.
pub fn poisson_truncation_degree(r: f64, tol: f64) -> Result<usize> {
    if !(0.0..1.0).contains(&r) {
        return Err(domain(format!("Poisson radius {r} outside [0, 1)")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(domain("tail tolerance must be positive"));
    }
    let mut degree = 1usize;
    while poisson_tail_bound(r, degree) >= tol {
        degree += 1;
        if degree > 1 << 24 {
            return Err(domain("Poisson truncation degree exceeds 2^24"));
        }
    }
    Ok(degree)
}
