//! Superharmonic weights generated by atomic measures, and an area-quadrature
//! oracle for `D_ω(f) = ∫ |f'|² ω dA`.
//!
//! The quadrature is a cross-check only. The coefficient formulas in
//! [`crate::local`] are the primary route.
//!
//! Grid layout: a polar tensor grid split into dyadic shells
//! `[0, ½], [½, ¾], …, [1 − 2^{-J}, ρ_max]`. Each shell carries `levels`
//! radial midpoints and a midpoint rule in angle whose node count doubles
//! from one shell to the next, so the angular spacing tracks the width
//! `1 − r` of the Poisson kernel. Shells close to the radius of an interior
//! atom get extra angular and radial nodes. The truncated annulus
//! `[ρ_max, 1)` is restored by one Richardson step that is linear in `1 − ρ`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::local::{AtomicWeightMeasure, Region};
use crate::series::CoefficientSeries;

/// Nodes closer than this to an interior atom are dropped.
pub const SINGULAR_SKIP_RADIUS: f64 = 1e-6;

fn kernel_term(zeta: Complex64, region: Region, z: Complex64) -> f64 {
    match region {
        Region::Boundary => (1.0 - z.norm_sqr()) / (zeta - z).norm_sqr(),
        Region::Interior => {
            let num = (Complex64::new(1.0, 0.0) - zeta.conj() * z).norm_sqr();
            let den = (zeta - z).norm_sqr();
            (num / den).ln() / (1.0 - zeta.norm_sqr())
        }
    }
}

/// `ω(z)` for the weight generated by `mu`: the log kernel
/// `2/(1−|ζ|²) log|(1−ζ̄z)/(ζ−z)|` for interior atoms and the Poisson kernel
/// `(1−|z|²)/|ζ−z|²` for atoms on the circle.
pub fn weight_eval(mu: &AtomicWeightMeasure, z: Complex64) -> Result<f64> {
    if z.norm().is_nan() || z.norm() >= 1.0 {
        return Err(domain(format!("weight evaluated at {z}, outside the open disk")));
    }
    let mut total = 0.0;
    for atom in mu.atoms() {
        let zeta = atom.point.zeta();
        if atom.point.region() == Region::Interior && (z - zeta).norm() < 1e-15 {
            return Err(domain(format!("weight evaluated at interior atom {zeta}")));
        }
        total += atom.mass * kernel_term(zeta, atom.point.region(), z);
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureGrid {
    /// Radial midpoints per dyadic shell.
    pub levels: usize,
    /// Angular nodes in the innermost shell.
    pub angular: usize,
    /// Outer radius of the explicit grid.
    pub rho_max: f64,
    /// Extra angular and radial factor for shells within 1/8 of an interior
    /// atom's radius.
    pub atom_refinement: usize,
}

impl Default for QuadratureGrid {
    fn default() -> Self {
        Self {
            levels: 16,
            angular: 64,
            rho_max: 1.0 - 2f64.powi(-10),
            atom_refinement: 8,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Shell {
    inner: f64,
    outer: f64,
    radial: usize,
    angular: usize,
}

impl QuadratureGrid {
    pub fn with_levels(levels: usize) -> Self {
        Self {
            levels,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.levels < 1 {
            return Err(Error::InvalidGrid("levels must be >= 1".into()));
        }
        if self.angular < 4 {
            return Err(Error::InvalidGrid("angular count must be >= 4".into()));
        }
        if !(self.rho_max > 0.0 && self.rho_max < 1.0) {
            return Err(Error::InvalidGrid(format!("rho_max {} outside (0, 1)", self.rho_max)));
        }
        if self.atom_refinement < 1 {
            return Err(Error::InvalidGrid("atom refinement must be >= 1".into()));
        }
        Ok(())
    }

    /// Same grid with twice the radial levels.
    pub fn refined(&self) -> Self {
        Self {
            levels: self.levels * 2,
            ..self.clone()
        }
    }

    fn radii(&self) -> Vec<f64> {
        let mut edges = vec![0.0];
        let mut gap = 0.5;
        while 1.0 - gap < self.rho_max {
            edges.push(1.0 - gap);
            gap *= 0.5;
        }
        edges.push(self.rho_max);
        edges
    }

    fn shells(&self, interior_radii: &[f64]) -> Vec<Shell> {
        self.radii()
            .windows(2)
            .enumerate()
            .map(|(j, w)| {
                let near_atom = interior_radii
                    .iter()
                    .any(|&rho| rho > 0.0 && rho > w[0] - 0.125 && rho < w[1] + 0.125);
                let boost = if near_atom { self.atom_refinement } else { 1 };
                Shell {
                    inner: w[0],
                    outer: w[1],
                    radial: self.levels * boost,
                    angular: (self.angular << j) * boost,
                }
            })
            .collect()
    }

    /// Total normalized area carried by the nodes; equals `ρ_max²` up to
    /// rounding.
    pub fn weight_sum(&self) -> f64 {
        let mut sum = Neumaier::default();
        for shell in self.shells(&[]) {
            let dr = (shell.outer - shell.inner) / shell.radial as f64;
            for i in 0..shell.radial {
                let r = shell.inner + (i as f64 + 0.5) * dr;
                let w = 2.0 * r * dr / shell.angular as f64;
                for _ in 0..shell.angular {
                    sum.add(w);
                }
            }
        }
        sum.total()
    }

    fn integrate(&self, fprime: &CoefficientSeries, mu: &AtomicWeightMeasure) -> f64 {
        let interior: Vec<f64> = mu
            .atoms()
            .iter()
            .filter(|a| a.point.region() == Region::Interior)
            .map(|a| a.point.zeta().norm())
            .collect();
        let shells = self.shells(&interior);
        let mut shell_values = Vec::with_capacity(shells.len());
        for shell in &shells {
            let unit: Vec<Complex64> = (0..shell.angular)
                .map(|m| Complex64::from_polar(1.0, 2.0 * PI * (m as f64 + 0.5) / shell.angular as f64))
                .collect();
            let dr = (shell.outer - shell.inner) / shell.radial as f64;
            let mut acc = Neumaier::default();
            for i in 0..shell.radial {
                let r = shell.inner + (i as f64 + 0.5) * dr;
                let w = 2.0 * r * dr / shell.angular as f64;
                let mut ring = Neumaier::default();
                'node: for &u in &unit {
                    let z = u * r;
                    let mut omega = 0.0;
                    for atom in mu.atoms() {
                        let zeta = atom.point.zeta();
                        let region = atom.point.region();
                        if region == Region::Interior && (z - zeta).norm() < SINGULAR_SKIP_RADIUS {
                            continue 'node;
                        }
                        omega += atom.mass * kernel_term(zeta, region, z);
                    }
                    ring.add(fprime.eval(z).norm_sqr() * omega);
                }
                acc.add(w * ring.total());
            }
            shell_values.push(acc.total());
        }
        let mut total = Neumaier::default();
        for v in &shell_values {
            total.add(*v);
        }
        let full = total.total();
        // Richardson: the missing annulus is linear in (1 − ρ) to leading order.
        match (shells.last(), shell_values.last()) {
            (Some(last), Some(&v)) if shells.len() > 1 => {
                let factor = (1.0 - last.outer) / (last.outer - last.inner);
                full + factor * v
            }
            _ => full,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult {
    /// Value on the refined grid.
    pub value: f64,
    /// Value on the caller's grid.
    pub coarse: f64,
    /// `|value − coarse|`.
    pub refinement_gap: f64,
}

/// Area-quadrature approximation of `D_ω(f)` with a convergence estimate
/// from doubling the radial levels.
pub fn quadrature_dirichlet(
    f: &CoefficientSeries,
    mu: &AtomicWeightMeasure,
    grid: &QuadratureGrid,
) -> Result<QuadratureResult> {
    grid.validate()?;
    if !f.is_finite() {
        return Err(domain("series has non-finite coefficients"));
    }
    let fprime = f.trimmed().derivative();
    if fprime.is_zero() {
        return Ok(QuadratureResult {
            value: 0.0,
            coarse: 0.0,
            refinement_gap: 0.0,
        });
    }
    let coarse = grid.integrate(&fprime, mu);
    let value = grid.refined().integrate(&fprime, mu);
    Ok(QuadratureResult {
        value,
        coarse,
        refinement_gap: (value - coarse).abs(),
    })
}

/// Compensated summation with a fixed order.
#[derive(Debug, Default, Clone, Copy)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::dirichlet_omega_atomic;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn delta(re: f64, im: f64) -> AtomicWeightMeasure {
        AtomicWeightMeasure::point_mass(c(re, im), 1.0).unwrap()
    }

    #[test]
    fn weight_examples() {
        let w = weight_eval(&delta(0.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!((w - 2.0 * 2f64.ln()).abs() < 1e-14);
        assert_eq!(weight_eval(&delta(1.0, 0.0), c(0.0, 0.0)).unwrap(), 1.0);
        assert!((weight_eval(&delta(1.0, 0.0), c(0.5, 0.0)).unwrap() - 3.0).abs() < 1e-14);
    }

    #[test]
    fn weight_domain_errors() {
        assert!(weight_eval(&delta(1.0, 0.0), c(1.0, 0.0)).is_err());
        assert!(weight_eval(&delta(0.0, 0.0), c(1.2, 0.0)).is_err());
        assert!(weight_eval(&delta(0.5, 0.0), c(0.5, 0.0)).is_err());
    }

    #[test]
    fn weight_is_positive_inside() {
        let mu = AtomicWeightMeasure::new([(c(0.5, 0.0), 1.0), (c(0.0, -1.0), 0.3)]).unwrap();
        for k in 0..50 {
            let z = Complex64::from_polar(0.98 * (k as f64 / 50.0), 0.7 * k as f64);
            assert!(weight_eval(&mu, z).unwrap() > 0.0, "{z}");
        }
    }

    #[test]
    fn grid_weights_sum_to_rho_max_squared() {
        let grid = QuadratureGrid::with_levels(3);
        let rho = grid.rho_max;
        assert!((grid.weight_sum() - rho * rho).abs() < 1e-12);
    }

    #[test]
    fn grid_validation() {
        for grid in [
            QuadratureGrid { levels: 0, ..Default::default() },
            QuadratureGrid { rho_max: 1.0, ..Default::default() },
            QuadratureGrid { rho_max: 0.0, ..Default::default() },
            QuadratureGrid { angular: 2, ..Default::default() },
        ] {
            let f = CoefficientSeries::from_real(&[0.0, 1.0]);
            assert!(matches!(
                quadrature_dirichlet(&f, &delta(1.0, 0.0), &grid),
                Err(Error::InvalidGrid(_))
            ));
        }
    }

    #[test]
    fn quadrature_examples() {
        let z = CoefficientSeries::from_real(&[0.0, 1.0]);
        let grid = QuadratureGrid::default();
        let q = quadrature_dirichlet(&z, &delta(1.0, 0.0), &grid).unwrap();
        assert!((q.value - 1.0).abs() < 1e-2, "{q:?}");
        let q = quadrature_dirichlet(&z, &delta(0.0, 0.0), &grid).unwrap();
        assert!((q.value - 1.0).abs() < 1e-2, "{q:?}");
        let q = quadrature_dirichlet(&CoefficientSeries::from_real(&[3.0]), &delta(0.5, 0.0), &grid).unwrap();
        assert_eq!(q.value, 0.0);
    }

    #[test]
    fn quadrature_matches_coefficient_route_off_center() {
        let f = CoefficientSeries::new(vec![c(0.2, 0.1), c(1.0, -0.5), c(0.0, 0.8), c(-0.3, 0.0)]);
        let grid = QuadratureGrid::with_levels(8);
        for mu in [delta(0.5, 0.0), delta(0.0, 0.7), delta(-1.0, 0.0)] {
            let exact = dirichlet_omega_atomic(&f, &mu).unwrap();
            let q = quadrature_dirichlet(&f, &mu, &grid).unwrap();
            assert!((q.value - exact).abs() <= 1e-2 * exact.max(1.0), "{exact} vs {q:?}");
        }
    }
}
