//! Seeded random polynomials for property checks.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::local::LocalPoint;
use crate::series::CoefficientSeries;

pub struct PolynomialSource {
    rng: ChaCha8Rng,
}

impl PolynomialSource {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Degree uniform in `[1, max_degree]`, coefficients uniform on
    /// `[0,1) × [0,1)`.
    pub fn polynomial(&mut self, max_degree: usize) -> CoefficientSeries {
        let degree = self.rng.random_range(1..=max_degree.max(1));
        (0..=degree)
            .map(|_| Complex64::new(self.rng.random::<f64>(), self.rng.random::<f64>()))
            .collect()
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.random_range(0..len)
    }
}

/// `1, −1, i, 0, 0.5`: two boundary directions, a third boundary point and
/// two interior points.
pub fn test_points() -> [LocalPoint; 5] {
    [
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.5, 0.0),
    ]
    .map(|z| LocalPoint::new(z).expect("test points lie in the closed disk"))
}
