use serde::Serialize;

use super::matrix::MultiplierMatrix;
use super::norm::{Auto, NormMethod};
use super::sequence::{MultiplierSequence, Support};
use crate::error::{domain, Result};

/// A bracket `lower ≤ ‖T_c‖ ≤ upper`. `upper = None` means no finite
/// certificate (serialized as `null`, read as `+∞`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormEstimate {
    pub lower: f64,
    pub upper: Option<f64>,
    pub exact: bool,
    pub truncation: usize,
    pub method: String,
}

impl NormEstimate {
    pub fn is_unbounded(&self) -> bool {
        self.upper.is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimateOptions {
    pub tol: f64,
    pub start: usize,
    pub max_truncation: usize,
    /// A lower bound above this is reported as divergent.
    pub cap: f64,
}

impl Default for EstimateOptions {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            start: 16,
            max_truncation: 4096,
            cap: 1e6,
        }
    }
}

fn section_norm(seq: &dyn MultiplierSequence, size: usize, method: &dyn NormMethod) -> Result<f64> {
    let m = MultiplierMatrix::from_fn(size, |k| seq.coeff(k))?;
    Ok(method.largest_singular_value(&m))
}

/// Truncation driver. Finite supports give the exact norm from one section
/// covering the support. Otherwise the section size doubles until successive
/// norms differ by less than `tol`; failing that the sequence is reported
/// as unbounded.
pub fn norm_estimate(seq: &dyn MultiplierSequence, tol: f64) -> Result<NormEstimate> {
    norm_estimate_with(seq, &EstimateOptions { tol, ..Default::default() }, &Auto)
}

pub fn norm_estimate_with(
    seq: &dyn MultiplierSequence,
    opts: &EstimateOptions,
    method: &dyn NormMethod,
) -> Result<NormEstimate> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(domain("tolerance must be positive"));
    }
    if let Support::Finite { len } = seq.support() {
        let size = len.max(1);
        let value = section_norm(seq, size, method)?;
        return Ok(NormEstimate {
            lower: value,
            upper: Some(value),
            exact: true,
            truncation: size,
            method: method.name().to_string(),
        });
    }

    let mut size = opts.start.max(1);
    let mut lower = section_norm(seq, size, method)?;
    loop {
        if lower > opts.cap || size * 2 > opts.max_truncation {
            return Ok(NormEstimate {
                lower,
                upper: None,
                exact: false,
                truncation: size,
                method: method.name().to_string(),
            });
        }
        size *= 2;
        let next = section_norm(seq, size, method)?.max(lower);
        let settled = next - lower < opts.tol;
        lower = next;
        if settled {
            let upper = seq.certified_upper();
            return Ok(NormEstimate {
                lower,
                upper,
                exact: false,
                truncation: size,
                method: method.name().to_string(),
            });
        }
    }
}
