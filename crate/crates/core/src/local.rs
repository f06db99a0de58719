//! Local Dirichlet integrals.
//!
//! For `ζ` in the closed disk every polynomial factors as
//! `f(z) = a + (z − ζ) g(z)` and `D_ζ(f) = ‖g‖²_{H²}`. Two factorizers are
//! registered, one per [`Region`]; both are exact for polynomials.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::series::CoefficientSeries;

/// `||ζ| − 1|` at or below this is treated as the unit circle.
pub const BOUNDARY_TOL: f64 = 1e-12;
/// Interior points this close to the circle are flagged.
pub const NEAR_BOUNDARY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    Interior,
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocalPoint {
    zeta: Complex64,
    region: Region,
    near_boundary: bool,
}

impl LocalPoint {
    pub fn new(zeta: Complex64) -> Result<Self> {
        let m = zeta.norm();
        if !m.is_finite() || m > 1.0 + BOUNDARY_TOL {
            return Err(domain(format!("point {zeta} lies outside the closed unit disk")));
        }
        let region = if (m - 1.0).abs() <= BOUNDARY_TOL {
            Region::Boundary
        } else {
            Region::Interior
        };
        Ok(Self {
            zeta,
            region,
            near_boundary: region == Region::Interior && 1.0 - m < NEAR_BOUNDARY_TOL,
        })
    }

    pub fn real(x: f64) -> Result<Self> {
        Self::new(Complex64::new(x, 0.0))
    }

    pub fn zeta(&self) -> Complex64 {
        self.zeta
    }

    pub fn region(&self) -> Region {
        self.region
    }

    pub fn is_boundary(&self) -> bool {
        self.region == Region::Boundary
    }

    pub fn near_boundary(&self) -> bool {
        self.near_boundary
    }
}

/// `f(z) = a + (z − ζ) g(z)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocalFactorization {
    pub a: Complex64,
    pub g: CoefficientSeries,
    pub zeta: LocalPoint,
}

impl LocalFactorization {
    /// Expands `a + (z − ζ) g(z)` back into coefficients.
    pub fn reconstruct(&self) -> CoefficientSeries {
        let zeta = self.zeta.zeta();
        let g = &self.g;
        if g.is_empty() {
            return CoefficientSeries::constant(self.a);
        }
        let mut out = Vec::with_capacity(g.len() + 1);
        out.push(self.a - zeta * g.coeff(0));
        for k in 1..=g.len() {
            out.push(g.coeff(k - 1) - zeta * g.coeff(k));
        }
        CoefficientSeries::new(out)
    }

    /// `D_ζ = ‖g‖²`.
    pub fn local_dirichlet(&self) -> f64 {
        self.g.h2_norm_sqr()
    }
}

/// A factorization algorithm for `f = a + (z − ζ) g`.
pub trait Factorizer: Send + Sync {
    fn name(&self) -> &'static str;

    /// Returns `(a, g)`. `f` has trailing zeros removed.
    fn factor(&self, f: &CoefficientSeries, zeta: Complex64) -> (Complex64, CoefficientSeries);
}

/// Interior points: `a = f(ζ)` by Horner, then `(f − a)/(z − ζ)` by
/// synthetic division.
pub struct SyntheticDivision;

impl Factorizer for SyntheticDivision {
    fn name(&self) -> &'static str {
        "synthetic-division"
    }

    fn factor(&self, f: &CoefficientSeries, zeta: Complex64) -> (Complex64, CoefficientSeries) {
        let a = f.eval(zeta);
        let c = f.coeffs();
        if c.len() <= 1 {
            return (a, CoefficientSeries::zero());
        }
        let m = c.len() - 1;
        let mut q = vec![Complex64::new(0.0, 0.0); m];
        let mut carry = Complex64::new(0.0, 0.0);
        for k in (1..=m).rev() {
            carry = c[k] + zeta * carry;
            q[k - 1] = carry;
        }
        (a, CoefficientSeries::new(q))
    }
}

/// Boundary points: top-down recursion `b_{k−1} = a_k + ζ b_k` from
/// `b_{m−1} = a_m`, then `a = a_0 + ζ b_0`. Never divides by `ζ`.
pub struct BackwardRecursion;

impl Factorizer for BackwardRecursion {
    fn name(&self) -> &'static str {
        "backward-recursion"
    }

    fn factor(&self, f: &CoefficientSeries, zeta: Complex64) -> (Complex64, CoefficientSeries) {
        let c = f.coeffs();
        if c.len() <= 1 {
            return (f.coeff(0), CoefficientSeries::zero());
        }
        let m = c.len() - 1;
        let mut b = vec![Complex64::new(0.0, 0.0); m];
        b[m - 1] = c[m];
        for k in (1..m).rev() {
            b[k - 1] = c[k] + zeta * b[k];
        }
        (c[0] + zeta * b[0], CoefficientSeries::new(b))
    }
}

static SYNTHETIC_DIVISION: SyntheticDivision = SyntheticDivision;
static BACKWARD_RECURSION: BackwardRecursion = BackwardRecursion;

pub fn factorizer_for(region: Region) -> &'static dyn Factorizer {
    match region {
        Region::Interior => &SYNTHETIC_DIVISION,
        Region::Boundary => &BACKWARD_RECURSION,
    }
}

pub fn factorize_local(f: &CoefficientSeries, zeta: LocalPoint) -> Result<LocalFactorization> {
    if !f.is_finite() {
        return Err(domain("series has non-finite coefficients"));
    }
    let (a, g) = factorizer_for(zeta.region()).factor(&f.trimmed(), zeta.zeta());
    Ok(LocalFactorization { a, g, zeta })
}

/// `D_ζ(f)`.
pub fn local_dirichlet_norm(f: &CoefficientSeries, zeta: LocalPoint) -> Result<f64> {
    Ok(factorize_local(f, zeta)?.local_dirichlet())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Atom {
    pub point: LocalPoint,
    pub mass: f64,
}

/// A finite positive measure `Σ m_i δ_{ζ_i}` on the closed disk.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AtomicWeightMeasure {
    atoms: Vec<Atom>,
}

impl AtomicWeightMeasure {
    pub fn new(atoms: impl IntoIterator<Item = (Complex64, f64)>) -> Result<Self> {
        let atoms = atoms
            .into_iter()
            .map(|(zeta, mass)| {
                if !(mass > 0.0 && mass.is_finite()) {
                    return Err(domain(format!("atom mass {mass} must be positive and finite")));
                }
                Ok(Atom {
                    point: LocalPoint::new(zeta)?,
                    mass,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if atoms.is_empty() {
            return Err(domain("measure needs at least one atom"));
        }
        Ok(Self { atoms })
    }

    /// `m δ_ζ`.
    pub fn point_mass(zeta: Complex64, mass: f64) -> Result<Self> {
        Self::new([(zeta, mass)])
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.mass).sum()
    }

    /// Parses `[{"zeta": [re, im], "mass": m}, …]`.
    pub fn from_json(s: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct AtomJson {
            zeta: [f64; 2],
            mass: f64,
        }
        let raw: Vec<AtomJson> =
            serde_json::from_str(s).map_err(|e| domain(format!("bad atoms JSON: {e}")))?;
        Self::new(raw.into_iter().map(|a| (Complex64::new(a.zeta[0], a.zeta[1]), a.mass)))
    }
}

/// `D_ω(f) = Σ m_i D_{ζ_i}(f)` for an atomic measure.
pub fn dirichlet_omega_atomic(f: &CoefficientSeries, mu: &AtomicWeightMeasure) -> Result<f64> {
    mu.atoms()
        .iter()
        .map(|atom| Ok(atom.mass * local_dirichlet_norm(f, atom.point)?))
        .sum()
}

/// Factorization of `h * f` built directly from `h` and the factorization of
/// `f`:
///
/// `F_j = c_{j+1} b_j + Σ_{k>j} (c_{k+1} − c_k) b_k ζ^{k−j}`,
/// `A = c_0 a_0 + ζ F_0`.
pub fn f_series(
    h: &CoefficientSeries,
    f: &CoefficientSeries,
    zeta: LocalPoint,
) -> Result<LocalFactorization> {
    if !h.is_finite() {
        return Err(domain("multiplier has non-finite coefficients"));
    }
    let LocalFactorization { g, .. } = factorize_local(f, zeta)?;
    let z = zeta.zeta();
    let c = |k: usize| h.coeff(k);
    let b = g.coeffs();
    let m = b.len();
    let big_f: Vec<Complex64> = (0..m)
        .map(|j| {
            let mut acc = c(j + 1) * b[j];
            let mut power = Complex64::new(1.0, 0.0);
            for (k, &bk) in b.iter().enumerate().skip(j + 1) {
                power *= z;
                acc += (c(k + 1) - c(k)) * bk * power;
            }
            acc
        })
        .collect();
    let f0 = big_f.first().copied().unwrap_or_default();
    let a = c(0) * f.coeff(0) + z * f0;
    Ok(LocalFactorization {
        a,
        g: CoefficientSeries::new(big_f),
        zeta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::{make_kernel, KernelSpec};
    use crate::series::hadamard;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real(v: &[f64]) -> CoefficientSeries {
        CoefficientSeries::from_real(v)
    }

    fn one() -> LocalPoint {
        LocalPoint::real(1.0).unwrap()
    }

    #[test]
    fn local_point_regions() {
        assert_eq!(LocalPoint::real(1.0).unwrap().region(), Region::Boundary);
        assert_eq!(LocalPoint::new(c(0.0, -1.0)).unwrap().region(), Region::Boundary);
        assert_eq!(LocalPoint::real(1.0 + 5e-13).unwrap().region(), Region::Boundary);
        assert_eq!(LocalPoint::real(0.5).unwrap().region(), Region::Interior);
        assert!(LocalPoint::real(1.0 - 1e-10).unwrap().near_boundary());
        assert!(!LocalPoint::real(0.9).unwrap().near_boundary());
        assert!(LocalPoint::real(1.01).is_err());
        assert!(LocalPoint::new(c(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn factorize_examples() {
        let fac = factorize_local(&real(&[0.0, 0.0, 0.0, 1.0]), LocalPoint::real(0.0).unwrap()).unwrap();
        assert_eq!(fac.a, c(0.0, 0.0));
        assert_eq!(fac.g, real(&[0.0, 0.0, 1.0]));

        // 3z^4 - 4z^3 + 1 = (z - 1)(3z^3 - z^2 - z - 1)
        let fac = factorize_local(&real(&[1.0, 0.0, 0.0, -4.0, 3.0]), one()).unwrap();
        assert_eq!(fac.a, c(0.0, 0.0));
        assert_eq!(fac.g, real(&[-1.0, -1.0, -1.0, 3.0]));

        for zeta in [0.0, 0.5, 1.0] {
            let fac = factorize_local(&real(&[7.0]), LocalPoint::real(zeta).unwrap()).unwrap();
            assert_eq!(fac.a, c(7.0, 0.0));
            assert!(fac.g.is_zero());
        }
    }

    #[test]
    fn factorizers_are_registered_by_region() {
        assert_eq!(factorizer_for(Region::Interior).name(), "synthetic-division");
        assert_eq!(factorizer_for(Region::Boundary).name(), "backward-recursion");
    }

    #[test]
    fn local_dirichlet_examples() {
        assert_eq!(local_dirichlet_norm(&real(&[1.0, 0.0, 0.0, -4.0, 3.0]), one()).unwrap(), 12.0);
        assert_eq!(local_dirichlet_norm(&real(&[2.5]), one()).unwrap(), 0.0);
        // z^n = 1 + (z - 1)(1 + z + ... + z^{n-1}), so D_1(z^n) = n.
        for n in 1..=4 {
            let f = CoefficientSeries::monomial(n, c(1.0, 0.0));
            assert_eq!(local_dirichlet_norm(&f, one()).unwrap(), n as f64);
        }
    }

    #[test]
    fn atomic_examples() {
        let mu = AtomicWeightMeasure::point_mass(c(1.0, 0.0), 1.0).unwrap();
        assert_eq!(dirichlet_omega_atomic(&real(&[1.0, 0.0, 0.0, -4.0, 3.0]), &mu).unwrap(), 12.0);

        let mu = AtomicWeightMeasure::new([(c(1.0, 0.0), 0.5), (c(-1.0, 0.0), 0.5)]).unwrap();
        assert_eq!(dirichlet_omega_atomic(&real(&[0.0, 1.0]), &mu).unwrap(), 1.0);

        let mu = AtomicWeightMeasure::point_mass(c(0.0, 0.0), 2.0).unwrap();
        assert_eq!(dirichlet_omega_atomic(&real(&[0.0, 0.0, 1.0]), &mu).unwrap(), 2.0);
    }

    #[test]
    fn measure_validation() {
        assert!(AtomicWeightMeasure::point_mass(c(0.0, 0.0), 0.0).is_err());
        assert!(AtomicWeightMeasure::point_mass(c(0.0, 0.0), -1.0).is_err());
        assert!(AtomicWeightMeasure::point_mass(c(2.0, 0.0), 1.0).is_err());
        assert!(AtomicWeightMeasure::new(Vec::new()).is_err());
        let mu = AtomicWeightMeasure::from_json(r#"[{"zeta":[1,0],"mass":1.5},{"zeta":[0,0.7],"mass":2}]"#).unwrap();
        assert_eq!(mu.atoms().len(), 2);
        assert_eq!(mu.total_mass(), 3.5);
        assert!(AtomicWeightMeasure::from_json("[1,2]").is_err());
    }

    #[test]
    fn non_finite_input_is_rejected() {
        let f = CoefficientSeries::new(vec![c(1.0, 0.0), c(f64::INFINITY, 0.0)]);
        assert!(factorize_local(&f, one()).is_err());
    }

    #[test]
    fn f_series_examples() {
        // h = z, f = z at ζ = 1: h*f = z = 1 + (z - 1)·1.
        let z = real(&[0.0, 1.0]);
        let fac = f_series(&z, &z, one()).unwrap();
        assert_eq!(fac.a, c(1.0, 0.0));
        assert_eq!(fac.g, real(&[1.0]));

        // All-ones multiplier leaves g unchanged.
        let f = real(&[0.3, -2.0, 1.5, 4.0]);
        let d = make_kernel(KernelSpec::Dirichlet(5)).unwrap();
        for zeta in [0.0, 0.5, 1.0] {
            let p = LocalPoint::real(zeta).unwrap();
            let via_f = f_series(&d, &f, p).unwrap();
            let direct = factorize_local(&f, p).unwrap();
            assert!(via_f.g.max_abs_diff(&direct.g) < 1e-12);
        }

        // K_1 against a quadratic cross-checked by direct factorization.
        let k1 = make_kernel(KernelSpec::Fejer(1)).unwrap();
        let q = real(&[1.0, -3.0, 2.0]);
        let fac = f_series(&k1, &q, one()).unwrap();
        let direct = factorize_local(&hadamard(&k1, &q), one()).unwrap();
        assert!(fac.g.max_abs_diff(&direct.g) < 1e-10);
        assert!((fac.a - direct.a).norm() < 1e-10);
        assert!(fac.reconstruct().max_abs_diff(&hadamard(&k1, &q)) < 1e-10);
    }

    #[test]
    fn reconstruct_interior_complex_point() {
        let f = CoefficientSeries::new(vec![c(1.0, 2.0), c(-0.5, 0.0), c(0.0, 3.0), c(2.0, -1.0)]);
        let p = LocalPoint::new(c(0.3, -0.6)).unwrap();
        let fac = factorize_local(&f, p).unwrap();
        assert!(fac.reconstruct().max_abs_diff(&f) < 1e-13);
        assert!((fac.a - f.eval(p.zeta())).norm() < 1e-15);
    }
}
