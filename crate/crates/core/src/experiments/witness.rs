//! Extremal functions showing the kernel constants are attained.
//!
//! Each witness is evaluated twice: in floating point through
//! [`local_dirichlet_norm`], and exactly over the rationals.

use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::kernels::{make_kernel, make_kernel_exact, rational_to_f64, KernelSpec, Rational};
use crate::local::{local_dirichlet_norm, LocalPoint};
use crate::series::{hadamard, partial_sum, CoefficientSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Dirichlet,
    Fejer,
    ValleePoussin,
}

impl WitnessKind {
    pub fn kernel(self, n: usize) -> KernelSpec {
        match self {
            WitnessKind::Dirichlet => KernelSpec::Dirichlet(n),
            WitnessKind::Fejer => KernelSpec::Fejer(n),
            WitnessKind::ValleePoussin => KernelSpec::ValleePoussin(n),
        }
    }

    /// The sharp constant `‖T_h‖²`.
    pub fn constant(self, n: usize) -> f64 {
        match self {
            WitnessKind::Dirichlet => (n + 1) as f64,
            WitnessKind::Fejer => n as f64 / (n + 1) as f64,
            WitnessKind::ValleePoussin => 2.0,
        }
    }

    /// Integer coefficients of the extremal `f`.
    fn extremal(self, n: usize) -> Vec<i128> {
        let ni = n as i128;
        match self {
            // n z^{n+1} − (n+1) z^n + 1
            WitnessKind::Dirichlet => {
                let mut c = vec![0; n + 2];
                c[0] += 1;
                c[n] -= ni + 1;
                c[n + 1] += ni;
                c
            }
            // z^{n+1} − (n+1) z + n
            WitnessKind::Fejer => {
                let mut c = vec![0; n + 2];
                c[0] += ni;
                c[1] -= ni + 1;
                c[n + 1] += 1;
                c
            }
            // z^{2n} − 2 z^n + 1
            WitnessKind::ValleePoussin => {
                let mut c = vec![0; 2 * n + 1];
                c[0] += 1;
                c[n] -= 2;
                c[2 * n] += 1;
                c
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub n: usize,
    pub f: CoefficientSeries,
    /// `D_1(f)` in floating point.
    pub d_f: f64,
    /// `D_1(h * f)` in floating point.
    pub d_hf: f64,
    pub ratio: f64,
    /// `D_1(f)` over the rationals.
    #[serde(serialize_with = "ser_rational")]
    pub exact_d_f: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub exact_d_hf: Rational,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// `D_1` of a polynomial with rational coefficients: `Σ b_j²` where
/// `b_{k−1} = a_k + b_k`.
pub fn exact_boundary_dirichlet(coeffs: &[Rational]) -> Rational {
    let mut carry = Rational::zero();
    let mut total = Rational::zero();
    for a in coeffs.iter().skip(1).rev() {
        carry += *a;
        total += carry * carry;
    }
    total
}

pub fn sharpness_witness(kind: WitnessKind, n: usize) -> Result<Witness> {
    if kind == WitnessKind::ValleePoussin && n == 0 {
        return Err(domain("de la Vallée Poussin witness needs n >= 1"));
    }
    if kind == WitnessKind::Dirichlet && n == 0 {
        return Err(domain("Dirichlet witness degenerates to f = 0 at n = 0"));
    }
    let ints = kind.extremal(n);
    let exact_f: Vec<Rational> = ints.iter().map(|&a| Rational::from_integer(a)).collect();
    let kernel_exact = make_kernel_exact(kind.kernel(n))?;
    let exact_hf: Vec<Rational> = exact_f
        .iter()
        .zip(&kernel_exact)
        .map(|(a, b)| a * b)
        .collect();
    let exact_d_f = exact_boundary_dirichlet(&exact_f);
    let exact_d_hf = exact_boundary_dirichlet(&exact_hf);

    let f: CoefficientSeries = ints.iter().map(|&a| Complex64::new(a as f64, 0.0)).collect();
    let h = make_kernel(kind.kernel(n))?;
    let one = LocalPoint::real(1.0)?;
    let d_f = local_dirichlet_norm(&f, one)?;
    let d_hf = local_dirichlet_norm(&hadamard(&h, &f), one)?;
    Ok(Witness {
        kind,
        n,
        f,
        d_f,
        d_hf,
        ratio: d_hf / d_f,
        exact_d_f,
        exact_d_hf,
    })
}

impl Witness {
    pub fn exact_ratio(&self) -> f64 {
        rational_to_f64(&(self.exact_d_hf / self.exact_d_f))
    }
}

/// `√(‖s_n f_n‖²_{D_1} / ‖f_n‖²_{D_1})` with `f_n = n z^{n+1} − (n+1) z^n`.
pub fn partial_sum_operator_lower(n: usize) -> Result<f64> {
    if n < 1 {
        return Err(domain("partial-sum witness needs n >= 1"));
    }
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 2];
    coeffs[n] = Complex64::new(-((n + 1) as f64), 0.0);
    coeffs[n + 1] = Complex64::new(n as f64, 0.0);
    let f = CoefficientSeries::new(coeffs);
    let sn = partial_sum(&f, n);
    let one = LocalPoint::real(1.0)?;
    let norm_sqr = |p: &CoefficientSeries| -> Result<f64> {
        Ok(p.coeff(0).norm_sqr() + local_dirichlet_norm(p, one)?)
    };
    Ok((norm_sqr(&sn)? / norm_sqr(&f)?).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(x: i128) -> Rational {
        Rational::from_integer(x)
    }

    #[test]
    fn witness_examples() {
        let w = sharpness_witness(WitnessKind::Dirichlet, 3).unwrap();
        assert_eq!((w.exact_d_f, w.exact_d_hf), (int(12), int(48)));
        assert_eq!((w.d_f, w.d_hf, w.ratio), (12.0, 48.0, 4.0));

        let w = sharpness_witness(WitnessKind::Fejer, 3).unwrap();
        assert_eq!((w.exact_d_f, w.exact_d_hf), (int(12), int(9)));
        assert!((w.ratio - 0.75).abs() < 1e-15);

        let w = sharpness_witness(WitnessKind::ValleePoussin, 3).unwrap();
        assert_eq!((w.exact_d_f, w.exact_d_hf), (int(6), int(12)));
        assert_eq!(w.ratio, 2.0);
    }

    #[test]
    fn invalid_orders() {
        assert!(sharpness_witness(WitnessKind::ValleePoussin, 0).is_err());
        assert!(sharpness_witness(WitnessKind::Dirichlet, 0).is_err());
        assert!(partial_sum_operator_lower(0).is_err());
        // K_0 kills every nonconstant term.
        let w = sharpness_witness(WitnessKind::Fejer, 0).unwrap();
        assert_eq!(w.exact_d_hf, int(0));
    }

    #[test]
    fn partial_sum_lower_examples() {
        for (n, expected) in [(1usize, 2f64), (4, 5.0), (9, 10.0)] {
            assert!((partial_sum_operator_lower(n).unwrap() - expected.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn exact_dirichlet_matches_hand_values() {
        // 3z^4 − 4z^3 + 1
        let f = [1, 0, 0, -4, 3].map(int);
        assert_eq!(exact_boundary_dirichlet(&f), int(12));
        assert_eq!(exact_boundary_dirichlet(&[int(5)]), int(0));
    }
}
