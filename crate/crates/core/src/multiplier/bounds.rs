//! Closed-form bounds on `‖T_c‖` and the growth diagnostics behind the
//! necessary/sufficient multiplier conditions.

use num_complex::Complex64;
use serde::Serialize;

use super::sequence::{last_index, MultiplierSequence, Support};
use crate::error::{Error, Result};
use crate::series::CoefficientSeries;

fn diff(c: &CoefficientSeries, k: usize) -> Complex64 {
    c.coeff(k) - c.coeff(k - 1)
}

/// `sup_k |c_k| + 2 sup_{k≥2} k |c_k − c_{k−1}|`.
pub fn bound_upper_i(c: &CoefficientSeries) -> f64 {
    let n = last_index(c);
    let sup_c = (1..=n).map(|k| c.coeff(k).norm()).fold(0.0, f64::max);
    let sup_d = (2..=n + 1)
        .map(|k| k as f64 * diff(c, k).norm())
        .fold(0.0, f64::max);
    sup_c + 2.0 * sup_d
}

/// `sup_k (|c_k|² + (k−1)|c_k − c_{k−1}|²)^{1/2}`, the largest column norm.
pub fn bound_lower_i(c: &CoefficientSeries) -> f64 {
    let n = last_index(c);
    (1..=n + 1)
        .map(|k| {
            let d = if k == 1 { 0.0 } else { diff(c, k).norm_sqr() };
            c.coeff(k).norm_sqr() + (k - 1) as f64 * d
        })
        .fold(0.0, f64::max)
        .sqrt()
}

/// `√((n+1) Σ_{k=1}^{n} |c_{k+1} − c_k|²)` where `n` is the last nonzero index.
pub fn bound_ii(c: &CoefficientSeries) -> Result<f64> {
    let n = last_index(c);
    if n == 0 {
        return Ok(0.0);
    }
    let s: f64 = (1..=n).map(|k| (c.coeff(k + 1) - c.coeff(k)).norm_sqr()).sum();
    Ok(((n + 1) as f64 * s).sqrt())
}

/// `Σ_{k≥1} √(k(k+1)) |c_{k+2} − 2c_{k+1} + c_k|` for finitely supported `c`.
pub fn bound_iii(c: &CoefficientSeries) -> Result<f64> {
    let n = last_index(c);
    Ok((1..=n)
        .map(|k| {
            let kf = k as f64;
            let second = c.coeff(k + 2) - c.coeff(k + 1) * 2.0 + c.coeff(k);
            (kf * (kf + 1.0)).sqrt() * second.norm()
        })
        .sum())
}

/// `bound_ii` for a sequence source; only finite supports qualify.
pub fn bound_ii_for(seq: &dyn MultiplierSequence) -> Result<f64> {
    match seq.support() {
        Support::Finite { len } => bound_ii(&prefix(seq, len + 1)),
        Support::Infinite => Err(Error::Inapplicable(format!(
            "{} has infinite support",
            seq.label()
        ))),
    }
}

/// `bound_iii` for a sequence source; needs `c_k → 0` and a certified tail.
pub fn bound_iii_for(seq: &dyn MultiplierSequence) -> Result<f64> {
    if !seq.decays() {
        return Err(Error::Inapplicable(format!("{} does not tend to 0", seq.label())));
    }
    match seq.support() {
        Support::Finite { len } => bound_iii(&prefix(seq, len + 2)),
        Support::Infinite => seq.second_difference_bound().ok_or_else(|| {
            Error::Inapplicable(format!("{} has no certified tail", seq.label()))
        }),
    }
}

/// `c_0, …, c_{len−1}` as a series.
pub fn prefix(seq: &dyn MultiplierSequence, len: usize) -> CoefficientSeries {
    (0..len).map(|k| seq.coeff(k)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NecsuffProfile {
    /// `sup_{k≤K} |c_k|`
    pub sup_abs: f64,
    /// `sup_{2≤k≤K} √k |c_k − c_{k−1}|`
    pub sup_sqrt_k_diff: f64,
    /// `sup_{2≤k≤K} k |c_k − c_{k−1}|`
    pub sup_k_diff: f64,
    pub horizon: usize,
}

/// Prefix statistics for `c_k = O(1)`, `Δc_k = O(1/√k)` and `Δc_k = O(1/k)`.
/// Diagnostic only: no verdict is drawn from a finite prefix.
pub fn necsuff_profile(seq: &dyn MultiplierSequence, horizon: usize) -> NecsuffProfile {
    let mut p = NecsuffProfile {
        sup_abs: 0.0,
        sup_sqrt_k_diff: 0.0,
        sup_k_diff: 0.0,
        horizon,
    };
    for k in 1..=horizon {
        p.sup_abs = p.sup_abs.max(seq.coeff(k).norm());
        if k >= 2 {
            let d = (seq.coeff(k) - seq.coeff(k - 1)).norm();
            let kf = k as f64;
            p.sup_sqrt_k_diff = p.sup_sqrt_k_diff.max(kf.sqrt() * d);
            p.sup_k_diff = p.sup_k_diff.max(kf * d);
        }
    }
    p
}
