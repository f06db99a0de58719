//! Convergence of Fejér means in `D_ω`.

use crate::error::{domain, Result};
use crate::local::{dirichlet_omega_atomic, AtomicWeightMeasure};
use crate::series::{cesaro_mean, CoefficientSeries};

use super::{ExperimentReport, Relation};

/// Threshold for the last row of a Fejér run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FejerTail {
    Absolute(f64),
    /// A fraction of the `n = 1` row.
    RelativeToRow1(f64),
}

/// `‖σ_n f − f‖²_{D_ω} = D_ω(σ_n f − f) + |σ_n f(0) − f(0)|²`.
pub fn fejer_error(f: &CoefficientSeries, mu: &AtomicWeightMeasure, n: usize) -> Result<f64> {
    let diff = &cesaro_mean(f, n) - f;
    Ok(dirichlet_omega_atomic(&diff, mu)? + diff.coeff(0).norm_sqr())
}

/// Rows `(n, ‖σ_n f − f‖²_{D_ω})` for `n = 0..=nmax`, then two checks: the
/// last row is below the `n = 1` row, and below the tail threshold.
pub fn fejer_convergence(
    f: &CoefficientSeries,
    mu: &AtomicWeightMeasure,
    nmax: usize,
    tail: FejerTail,
) -> Result<ExperimentReport> {
    if nmax < 1 {
        return Err(domain("nmax must be at least 1"));
    }
    let mut report = ExperimentReport::new("fejer-convergence");
    report.param("nmax", nmax).param("degree", f.trimmed().len().saturating_sub(1));
    let mut values = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let v = fejer_error(f, mu, n)?;
        report.row("fejer", n.to_string(), &[("n", n as f64), ("error", v)]);
        values.push(v);
    }
    let first = values[1];
    let last = values[nmax];
    if first == 0.0 {
        report.check(None, "final <= n=1 (zero)", last, Relation::Le, 0.0, 0.0);
    } else {
        report.check(None, "final < n=1", last, Relation::Lt, first, 0.0);
    }
    let (label, limit) = match tail {
        FejerTail::Absolute(x) => ("tail absolute", x),
        FejerTail::RelativeToRow1(x) => ("tail relative to n=1", x * first),
    };
    report.check(None, label, last, Relation::Le, limit, 0.0);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn delta_one() -> AtomicWeightMeasure {
        AtomicWeightMeasure::point_mass(Complex64::new(1.0, 0.0), 1.0).unwrap()
    }

    #[test]
    fn monomial_rows() {
        let f = CoefficientSeries::from_real(&[0.0, 1.0]);
        let r = fejer_convergence(&f, &delta_one(), 10, FejerTail::Absolute(0.01)).unwrap();
        for (n, row) in r.rows.iter().enumerate() {
            let expected = 1.0 / ((n + 1) * (n + 1)) as f64;
            assert!((row.values[1] - expected).abs() < 1e-15);
        }
        assert!(r.passed());
    }

    #[test]
    fn constant_rows_vanish() {
        let f = CoefficientSeries::from_real(&[3.0]);
        let r = fejer_convergence(&f, &delta_one(), 5, FejerTail::Absolute(0.0)).unwrap();
        assert!(r.rows.iter().all(|row| row.values[1] == 0.0));
        assert!(r.passed());
    }

    #[test]
    fn log_truncation_decreases() {
        let coeffs: Vec<f64> = (0..=64).map(|k| if k == 0 { 0.0 } else { 1.0 / k as f64 }).collect();
        let f = CoefficientSeries::from_real(&coeffs);
        let r = fejer_convergence(&f, &delta_one(), 64, FejerTail::RelativeToRow1(1.0)).unwrap();
        assert!(r.checks[0].passed);
        assert!(r.rows[64].values[1] > 0.0);
        assert!(fejer_convergence(&f, &delta_one(), 0, FejerTail::Absolute(1.0)).is_err());
    }
}
