//! Multiplier sequences `(c_k)_{k≥1}`, finite or given by a rule.

use num_complex::Complex64;

use super::bounds::{bound_ii, bound_iii, bound_upper_i};
use crate::kernels::poisson_tail_bound;
use crate::series::CoefficientSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    /// `c_k = 0` for every `k ≥ len`.
    Finite { len: usize },
    Infinite,
}

pub trait MultiplierSequence: Send + Sync {
    fn label(&self) -> String;

    fn coeff(&self, k: usize) -> Complex64;

    fn support(&self) -> Support;

    /// Whether `c_k → 0`.
    fn decays(&self) -> bool;

    /// `Σ_{k≥1} √(k(k+1)) |c_{k+2} − 2c_{k+1} + c_k|` including a certified
    /// tail, when the sequence knows one.
    fn second_difference_bound(&self) -> Option<f64> {
        None
    }

    /// A proven upper bound on `‖T_c‖`, if one is available.
    fn certified_upper(&self) -> Option<f64> {
        self.second_difference_bound()
    }
}

/// Index of the last nonzero `c_k` with `k ≥ 1`, or 0 when there is none.
pub fn last_index(c: &CoefficientSeries) -> usize {
    (1..c.len()).rev().find(|&k| c.coeff(k) != Complex64::new(0.0, 0.0)).unwrap_or(0)
}

impl MultiplierSequence for CoefficientSeries {
    fn label(&self) -> String {
        format!("series(deg {})", last_index(self))
    }

    fn coeff(&self, k: usize) -> Complex64 {
        CoefficientSeries::coeff(self, k)
    }

    fn support(&self) -> Support {
        Support::Finite {
            len: last_index(self) + 1,
        }
    }

    fn decays(&self) -> bool {
        true
    }

    fn second_difference_bound(&self) -> Option<f64> {
        bound_iii(self).ok()
    }

    fn certified_upper(&self) -> Option<f64> {
        let mut best = bound_upper_i(self);
        if let Ok(b) = bound_ii(self) {
            best = best.min(b);
        }
        if let Ok(b) = bound_iii(self) {
            best = best.min(b);
        }
        Some(best)
    }
}

/// `c_k = a` for every `k`; `T_c = a·I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constant(pub Complex64);

impl MultiplierSequence for Constant {
    fn label(&self) -> String {
        format!("constant({})", self.0)
    }

    fn coeff(&self, _k: usize) -> Complex64 {
        self.0
    }

    fn support(&self) -> Support {
        if self.0 == Complex64::new(0.0, 0.0) {
            Support::Finite { len: 1 }
        } else {
            Support::Infinite
        }
    }

    fn decays(&self) -> bool {
        self.0 == Complex64::new(0.0, 0.0)
    }

    fn certified_upper(&self) -> Option<f64> {
        Some(self.0.norm())
    }
}

/// `c_k = 1` for odd `k`, 0 for even `k`: `z + z³ + z⁵ + …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Alternating;

impl MultiplierSequence for Alternating {
    fn label(&self) -> String {
        "alternating".into()
    }

    fn coeff(&self, k: usize) -> Complex64 {
        Complex64::new((k % 2) as f64, 0.0)
    }

    fn support(&self) -> Support {
        Support::Infinite
    }

    fn decays(&self) -> bool {
        false
    }
}

/// Poisson kernel coefficients `c_k = r^k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoissonSequence {
    pub r: f64,
}

/// Second-difference sum for `P_r` split into an explicit part and a
/// certified remainder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailedBound {
    pub partial: f64,
    pub tail: f64,
    pub truncation: usize,
}

impl TailedBound {
    pub fn value(&self) -> f64 {
        self.partial + self.tail
    }
}

/// `(1−r)² Σ_{k=1}^{N} √(k(k+1)) r^k + (N+2) r^{N+1}`.
pub fn bound_iii_poisson(r: f64, truncation: usize) -> TailedBound {
    let mut partial = 0.0;
    let mut rk = 1.0;
    for k in 1..=truncation {
        rk *= r;
        let kf = k as f64;
        partial += (kf * (kf + 1.0)).sqrt() * rk;
    }
    TailedBound {
        partial: (1.0 - r) * (1.0 - r) * partial,
        tail: poisson_tail_bound(r, truncation),
        truncation,
    }
}

impl MultiplierSequence for PoissonSequence {
    fn label(&self) -> String {
        format!("poisson({})", self.r)
    }

    fn coeff(&self, k: usize) -> Complex64 {
        Complex64::new(self.r.powi(k as i32), 0.0)
    }

    fn support(&self) -> Support {
        if self.r == 0.0 {
            Support::Finite { len: 1 }
        } else {
            Support::Infinite
        }
    }

    fn decays(&self) -> bool {
        true
    }

    fn second_difference_bound(&self) -> Option<f64> {
        let degree = crate::kernels::poisson_truncation_degree(self.r, 1e-15).ok()?;
        Some(bound_iii_poisson(self.r, degree).value())
    }
}

/// `c_k = 1/k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Harmonic;

impl Harmonic {
    const TERMS: usize = 1 << 20;
}

impl MultiplierSequence for Harmonic {
    fn label(&self) -> String {
        "harmonic".into()
    }

    fn coeff(&self, k: usize) -> Complex64 {
        if k == 0 {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(1.0 / k as f64, 0.0)
        }
    }

    fn support(&self) -> Support {
        Support::Infinite
    }

    fn decays(&self) -> bool {
        true
    }

    // Δ²(1/k) = 2/(k(k+1)(k+2)); each term is below 2/k², so the tail past M
    // is below 2/M.
    fn second_difference_bound(&self) -> Option<f64> {
        let m = Self::TERMS;
        let partial: f64 = (1..=m)
            .map(|k| {
                let k = k as f64;
                2.0 / ((k * (k + 1.0)).sqrt() * (k + 2.0))
            })
            .sum();
        Some(partial + 2.0 / m as f64)
    }

    fn certified_upper(&self) -> Option<f64> {
        // sup|c_k| + 2 sup k|c_k − c_{k−1}| = 1 + 2·1
        Some(self.second_difference_bound().map_or(3.0, |b| b.min(3.0)))
    }
}
