use approx::assert_relative_eq;
use proptest::prelude::*;

use hadamard_core::kernels::{make_kernel, KernelSpec};
use hadamard_core::local::{factorize_local, local_dirichlet_norm, LocalPoint};
use hadamard_core::multiplier::{
    bound_ii, bound_iii, bound_lower_i, bound_upper_i, operator_norm, tc_truncation,
};
use hadamard_core::series::{cesaro_mean, dilate, hadamard, CoefficientSeries};
use hadamard_core::Complex64;

fn complex() -> impl Strategy<Value = Complex64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn series(max_len: usize) -> impl Strategy<Value = CoefficientSeries> {
    prop::collection::vec(complex(), 1..=max_len).prop_map(CoefficientSeries::new)
}

fn point() -> impl Strategy<Value = LocalPoint> {
    (prop::sample::select(vec![0.0, 0.5, 1.0]), 0.0f64..std::f64::consts::TAU)
        .prop_map(|(r, t)| LocalPoint::new(Complex64::from_polar(r, t)).unwrap())
}

fn scale(f: &CoefficientSeries) -> f64 {
    f.max_abs().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hadamard_is_commutative_and_associative(a in series(20), b in series(20), c in series(20)) {
        prop_assert_eq!(hadamard(&a, &b), hadamard(&b, &a));
        let left = hadamard(&hadamard(&a, &b), &c);
        let right = hadamard(&a, &hadamard(&b, &c));
        prop_assert!(left.max_abs_diff(&right) <= 1e-12 * scale(&left));
    }

    #[test]
    fn hadamard_is_bilinear(a in series(20), b in series(20), c in series(20), s in complex()) {
        let lhs = hadamard(&a, &(&b.scale(s) + &c));
        let rhs = &hadamard(&a, &b).scale(s) + &hadamard(&a, &c);
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12 * scale(&lhs));
    }

    #[test]
    fn cesaro_mean_is_fejer_product(f in series(70), n in 0usize..=64) {
        let k = make_kernel(KernelSpec::Fejer(n)).unwrap();
        prop_assert_eq!(cesaro_mean(&f, n), hadamard(&k, &f));
    }

    #[test]
    fn dilation_is_poisson_product(f in series(40), r in 0.0f64..0.99) {
        let p = make_kernel(KernelSpec::Poisson { r, degree: 64 }).unwrap();
        let d = dilate(&f, r).unwrap();
        prop_assert!(d.max_abs_diff(&hadamard(&p, &f)) <= 1e-14 * scale(&f));
    }

    #[test]
    fn factorization_reconstructs(f in series(40), zeta in point()) {
        let fac = factorize_local(&f, zeta).unwrap();
        prop_assert!(fac.reconstruct().max_abs_diff(&f) <= 1e-10 * scale(&f) * 40.0);
        prop_assert!(fac.local_dirichlet() >= 0.0);
    }

    #[test]
    fn local_dirichlet_parallelogram(f in series(30), g in series(30), zeta in point()) {
        let d = |h: &CoefficientSeries| local_dirichlet_norm(h, zeta).unwrap();
        let lhs = d(&(&f + &g)) + d(&(&f - &g));
        let rhs = 2.0 * (d(&f) + d(&g));
        prop_assert!((lhs - rhs).abs() <= 1e-9 * rhs.max(1.0));
    }

    #[test]
    fn local_dirichlet_scales_quadratically(f in series(30), s in complex(), zeta in point()) {
        let d = local_dirichlet_norm(&f, zeta).unwrap();
        let ds = local_dirichlet_norm(&f.scale(s), zeta).unwrap();
        prop_assert!((ds - s.norm_sqr() * d).abs() <= 1e-9 * ds.max(1.0));
    }

    #[test]
    fn local_dirichlet_vanishes_only_on_constants(f in series(20), zeta in point()) {
        let d = local_dirichlet_norm(&f, zeta).unwrap();
        prop_assert_eq!(d == 0.0, f.trimmed().len() <= 1);
        let constant = CoefficientSeries::constant(f.coeff(0));
        prop_assert_eq!(local_dirichlet_norm(&constant, zeta).unwrap(), 0.0);
    }

    #[test]
    fn bounds_sandwich_the_norm(c in series(40)) {
        let n = c.len() + 1;
        let norm = operator_norm(&tc_truncation(&c, n).unwrap());
        prop_assert!(bound_lower_i(&c) <= norm + 1e-9);
        prop_assert!(norm <= bound_upper_i(&c) + 1e-9);
        prop_assert!(norm <= bound_ii(&c).unwrap() + 1e-9);
        prop_assert!(norm <= bound_iii(&c).unwrap() + 1e-9);
    }

    #[test]
    fn section_norms_are_monotone(c in series(24)) {
        let mut prev = 0.0;
        for size in 1..=c.len() + 2 {
            let v = operator_norm(&tc_truncation(&c, size).unwrap());
            prop_assert!(v >= prev - 1e-12);
            prev = v;
        }
    }

    #[test]
    fn norm_scales_linearly(c in series(24), s in complex()) {
        let n = c.len() + 1;
        let a = operator_norm(&tc_truncation(&c, n).unwrap());
        let b = operator_norm(&tc_truncation(&c.scale(s), n).unwrap());
        prop_assert!((b - s.norm() * a).abs() <= 1e-10 * b.max(1.0));
    }

    #[test]
    fn multiplier_inequality(h in series(24), f in series(24), zeta in point()) {
        let t = operator_norm(&tc_truncation(&h, h.len() + 1).unwrap());
        let lhs = local_dirichlet_norm(&hadamard(&h, &f), zeta).unwrap();
        let rhs = t * t * local_dirichlet_norm(&f, zeta).unwrap();
        prop_assert!(lhs <= rhs + 1e-9 * rhs.max(1.0));
    }
}

#[test]
fn kernel_norms_match_constants() {
    for n in 1..=16usize {
        let d = make_kernel(KernelSpec::Dirichlet(n)).unwrap();
        let v = operator_norm(&tc_truncation(&d, n + 1).unwrap());
        assert_relative_eq!(v * v, (n + 1) as f64, epsilon = 1e-9);
        let k = make_kernel(KernelSpec::Fejer(n)).unwrap();
        let v = operator_norm(&tc_truncation(&k, n + 1).unwrap());
        assert_relative_eq!(v * v, n as f64 / (n + 1) as f64, epsilon = 1e-9);
        let vp = make_kernel(KernelSpec::ValleePoussin(n)).unwrap();
        let v = operator_norm(&tc_truncation(&vp, 2 * n).unwrap());
        assert_relative_eq!(v * v, 2.0, epsilon = 1e-9);
    }
}
