//! Named verification suites.
//!
//! Each suite is a [`Suite`] trait object in a [`SuiteRegistry`]. Suites are
//! assembled from per-criterion runs (`criterion_1` … `criterion_11`), which
//! the acceptance tests also call one at a time.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernels::{make_kernel, KernelSpec};
use crate::local::{
    dirichlet_omega_atomic, f_series, factorize_local, local_dirichlet_norm, AtomicWeightMeasure,
    LocalPoint,
};
use crate::multiplier::sequence::{bound_iii_poisson, Alternating, MultiplierSequence, PoissonSequence};
use crate::multiplier::{
    bound_ii, bound_iii, bound_lower_i, bound_upper_i, cesaro_matrix, norm_estimate, operator_norm,
    MultiplierMatrix,
};
use crate::quadrature::{quadrature_dirichlet, QuadratureGrid};
use crate::series::{hadamard, CoefficientSeries};

use super::fejer::fejer_error;
use super::random::{test_points, PolynomialSource};
use super::witness::{partial_sum_operator_lower, sharpness_witness, WitnessKind};
use super::{dilation_experiment, fejer_convergence, ExperimentReport, FejerTail, Relation, Tolerances};

/// Largest degree of generated polynomials.
pub const RANDOM_DEGREE: usize = 64;
/// `r = 0.1, 0.2, …, 0.9`.
pub const R_GRID: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;

    /// Acceptance criteria covered, in report order.
    fn criteria(&self) -> &'static [u32];

    fn run(&self, seed: u64, tol: &Tolerances) -> Result<ExperimentReport> {
        let mut report = ExperimentReport::new(self.name());
        report.param("seed", seed).param("tolerances", tol);
        for &id in self.criteria() {
            report.merge(run_criterion(id, seed, tol)?);
        }
        Ok(report)
    }
}

struct Named {
    name: &'static str,
    criteria: &'static [u32],
}

impl Suite for Named {
    fn name(&self) -> &'static str {
        self.name
    }

    fn criteria(&self) -> &'static [u32] {
        self.criteria
    }
}

pub struct SuiteRegistry {
    suites: BTreeMap<&'static str, Box<dyn Suite>>,
}

impl SuiteRegistry {
    pub fn empty() -> Self {
        Self {
            suites: BTreeMap::new(),
        }
    }

    pub fn builtin() -> Self {
        [
            ("sharpness", &[1, 2][..]),
            ("bounds-sandwich", &[3, 9]),
            ("cross-factorization", &[4, 11]),
            ("dilation", &[5, 6]),
            ("fejer", &[7]),
            ("divergence", &[8]),
            ("quadrature-oracle", &[10]),
        ]
        .into_iter()
        .fold(Self::empty(), |reg, (name, criteria)| {
            reg.register(Box::new(Named { name, criteria }))
        })
    }

    pub fn register(mut self, suite: Box<dyn Suite>) -> Self {
        self.suites.insert(suite.name(), suite);
        self
    }

    pub fn get(&self, name: &str) -> Result<&dyn Suite> {
        self.suites
            .get(name)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::UnknownSuite(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.suites.keys().copied()
    }
}

impl Default for SuiteRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

pub fn run_suite(name: &str, seed: u64) -> Result<ExperimentReport> {
    run_suite_with(name, seed, &Tolerances::default())
}

pub fn run_suite_with(name: &str, seed: u64, tol: &Tolerances) -> Result<ExperimentReport> {
    SuiteRegistry::builtin().get(name)?.run(seed, tol)
}

/// One acceptance criterion as a standalone report.
pub fn run_criterion(id: u32, seed: u64, tol: &Tolerances) -> Result<ExperimentReport> {
    let report = match id {
        1 => criterion_1(tol)?,
        2 => criterion_2(tol)?,
        3 => criterion_3(seed, tol)?,
        4 => criterion_4(seed, tol)?,
        5 => criterion_5(seed, tol)?,
        6 => criterion_6(tol)?,
        7 => criterion_7(tol)?,
        8 => criterion_8(tol)?,
        9 => criterion_9(tol)?,
        10 => criterion_10(seed, tol)?,
        11 => criterion_11(seed, tol)?,
        _ => return Err(Error::UnknownSuite(format!("criterion {id}"))),
    };
    Ok(report.tag(id))
}

fn sqr_norm(spec: KernelSpec) -> Result<f64> {
    let h = make_kernel(spec)?;
    let e = norm_estimate(&h, 1e-12)?;
    Ok(e.lower * e.lower)
}

/// Exact-section norms of the Dirichlet, Fejér and de la Vallée Poussin
/// multipliers against their sharp constants.
pub fn criterion_1(tol: &Tolerances) -> Result<ExperimentReport> {
    let mut r = ExperimentReport::new("kernel-norms");
    for n in 0..=16usize {
        for kind in [WitnessKind::Dirichlet, WitnessKind::Fejer] {
            let spec = kind.kernel(n);
            let v = sqr_norm(spec)?;
            let expected = kind.constant(n);
            r.row("kernel-norm", spec.to_string(), &[("norm_sqr", v), ("expected", expected)]);
            r.check(None, format!("||T_{spec}||^2"), v, Relation::Eq, expected, tol.exact);
        }
    }
    for n in 1..=8usize {
        let spec = WitnessKind::ValleePoussin.kernel(n);
        let v = sqr_norm(spec)?;
        r.row("kernel-norm", spec.to_string(), &[("norm_sqr", v), ("expected", 2.0)]);
        r.check(None, format!("||T_{spec}||^2"), v, Relation::Eq, 2.0, tol.exact);
    }
    Ok(r)
}

/// Extremal functions: exact integer values and floating-point ratios.
pub fn criterion_2(tol: &Tolerances) -> Result<ExperimentReport> {
    let mut r = ExperimentReport::new("extremal-ratios");
    for n in 1..=32usize {
        let nf = n as f64;
        let cases = [
            (WitnessKind::Dirichlet, nf * (nf + 1.0), (nf + 1.0) * (nf + 1.0) * nf),
            (WitnessKind::Fejer, nf * (nf + 1.0), nf * nf),
            (WitnessKind::ValleePoussin, 2.0 * nf, 4.0 * nf),
        ];
        for (kind, d_f, d_hf) in cases {
            let w = sharpness_witness(kind, n)?;
            let label = kind.kernel(n).to_string();
            r.row(
                "witness",
                label.clone(),
                &[("d_f", w.d_f), ("d_hf", w.d_hf), ("ratio", w.ratio)],
            );
            let exact_f = crate::kernels::rational_to_f64(&w.exact_d_f);
            let exact_hf = crate::kernels::rational_to_f64(&w.exact_d_hf);
            r.check(None, format!("{label} exact D(f)"), exact_f, Relation::Eq, d_f, 0.0);
            r.check(None, format!("{label} exact D(h*f)"), exact_hf, Relation::Eq, d_hf, 0.0);
            r.check(None, format!("{label} D(f)"), w.d_f, Relation::Eq, d_f, tol.exact * d_f);
            r.check(None, format!("{label} D(h*f)"), w.d_hf, Relation::Eq, d_hf, tol.exact * d_hf);
            r.check(None, format!("{label} ratio"), w.ratio, Relation::Eq, kind.constant(n), tol.exact);
        }
    }
    Ok(r)
}

/// `lower_i ≤ ‖T_c‖ ≤ min(upper_i, ii, iii)` on random polynomial multipliers.
pub fn criterion_3(seed: u64, tol: &Tolerances) -> Result<ExperimentReport> {
    let mut r = ExperimentReport::new("bounds-sandwich");
    let mut src = PolynomialSource::new(seed);
    for i in 0..200 {
        let c = src.polynomial(RANDOM_DEGREE);
        let norm = norm_estimate(&c, 1e-12)?.lower;
        let lower = bound_lower_i(&c);
        let upper = bound_upper_i(&c).min(bound_ii(&c)?).min(bound_iii(&c)?);
        r.row("sandwich", format!("case {i}"), &[("lower", lower), ("norm", norm), ("upper", upper)]);
        r.check(None, format!("case {i} lower slack"), norm - lower, Relation::Ge, 0.0, tol.exact);
        r.check(None, format!("case {i} upper slack"), upper - norm, Relation::Ge, 0.0, tol.exact);
    }
    Ok(r)
}

/// `D_ζ(h*f) ≤ ‖T_h‖² D_ζ(f)` on random triples.
pub fn criterion_4(seed: u64, tol: &Tolerances) -> Result<ExperimentReport> {
    let mut r = ExperimentReport::new("multiplier-inequality");
    let mut src = PolynomialSource::new(seed ^ 0x4);
    let points = test_points();
    for i in 0..200 {
        let h = src.polynomial(RANDOM_DEGREE);
        let f = src.polynomial(RANDOM_DEGREE);
        let zeta = points[src.index(points.len())];
        let t = norm_estimate(&h, 1e-12)?.lower;
        let lhs = local_dirichlet_norm(&hadamard(&h, &f), zeta)?;
        let rhs = t * t * local_dirichlet_norm(&f, zeta)?;
        r.row("multiplier", format!("case {i}"), &[("lhs", lhs), ("rhs", rhs)]);
        r.check(None, format!("case {i}"), lhs, Relation::Le, rhs, tol.exact);
    }
    Ok(r)
}

/// Dilation inequality at `ζ = 1` for random `f` on [`R_GRID`].
pub fn criterion_5(seed: u64, tol: &Tolerances) -> Result<ExperimentReport> {
    let mut r = ExperimentReport::new("dilation");
    let mut src = PolynomialSource::new(seed ^ 0x5);
    let one = LocalPoint::real(1.0)?;
    for _ in 0..50 {
        let f = src.polynomial(RANDOM_DEGREE);
        r.merge(dilation_experiment(&f, &R_GRID, one, tol.exact)?);
    }
    Ok(r)
}

/// Section of `T_{P_r}` at `N = 512` against `r√(2−r)` plus the certified tail.
pub fn criterion_6(tol: &Tolerances) -> Result<ExperimentReport> {
    const N: usize = 512;
    let mut r = ExperimentReport::new("poisson-bound");
    for rr in R_GRID {
        let seq = PoissonSequence { r: rr };
        let m = MultiplierMatrix::from_fn(N, |k| seq.coeff(k))?;
        let norm = operator_norm(&m);
        let closed = rr * (2.0 - rr).sqrt();
        let series = bound_iii_poisson(rr, N);
        r.row(
            "poisson",
            format!("r={rr}"),
            &[("norm", norm), ("closed", closed), ("tail", series.tail), ("iii", series.value())],
        );
        r.check(None, format!("||T_P||, r={rr}"), norm, Relation::Le, closed + series.tail, tol.exact);
        r.check(None, format!("iii bound, r={rr}"), series.value(), Relation::Le, closed, tol.exact);
    }
    Ok(r)
}

/// Fejér means at `δ_1` for `Σ z^k/k` and for `z`.
pub fn criterion_7(tol: &Tolerances) -> Result<ExperimentReport> {
    let delta = AtomicWeightMeasure::point_mass(Complex64::new(1.0, 0.0), 1.0)?;
    let log: CoefficientSeries = (0..=64usize)
        .map(|k| Complex64::new(if k == 0 { 0.0 } else { 1.0 / k as f64 }, 0.0))
        .collect();
    let mut r = fejer_convergence(&log, &delta, 64, FejerTail::RelativeToRow1(0.1))?;
    r.name = "fejer".into();
    let z = CoefficientSeries::from_real(&[0.0, 1.0]);
    for n in 0..=64usize {
        let v = fejer_error(&z, &delta, n)?;
        let expected = 1.0 / ((n + 1) * (n + 1)) as f64;
        r.row("fejer-z", n.to_string(), &[("n", n as f64), ("error", v)]);
        r.check(None, format!("f=z, n={n}"), v, Relation::Eq, expected, tol.exact);
    }
    Ok(r)
}

/// Partial sums are not uniformly bounded; neither is the alternating multiplier.
pub fn criterion_8(tol: &Tolerances) -> Result<ExperimentReport> {
    let mut r = ExperimentReport::new("divergence");
    for n in 1..=32usize {
        let v = partial_sum_operator_lower(n)?;
        let expected = ((n + 1) as f64).sqrt();
        r.row("partial-sum", n.to_string(), &[("lower", v), ("expected", expected)]);
        r.check(None, format!("||s_{n}|| lower"), v, Relation::Eq, expected, tol.exact);
    }
    for size in [64usize, 256, 1024] {
        let m = MultiplierMatrix::from_fn(size, |k| Alternating.coeff(k))?;
        let v = operator_norm(&m);
        let floor = ((size - 1) as f64).sqrt();
        r.row("alternating", size.to_string(), &[("norm", v), ("floor", floor)]);
        r.check(None, format!("alternating N={size}"), v, Relation::Ge, floor, tol.exact);
    }
    Ok(r)
}

/// Cesàro sections at `N = 1, 2, 4, …, 4096`.
pub fn criterion_9(tol: &Tolerances) -> Result<ExperimentReport> {
    let mut r = ExperimentReport::new("cesaro");
    let mut prev = 0.0;
    for p in 0..=12u32 {
        let size = 1usize << p;
        let v = operator_norm(&cesaro_matrix(size)?);
        r.row("cesaro", size.to_string(), &[("size", size as f64), ("norm", v)]);
        r.check(None, format!("monotone N={size}"), v, Relation::Ge, prev, tol.exact);
        r.check(None, format!("<= 2, N={size}"), v, Relation::Le, 2.0, tol.exact);
        prev = v;
    }
    r.check(None, "N=4096 >= 1.8", prev, Relation::Ge, 1.8, 0.0);
    Ok(r)
}

/// The fixed measures of the quadrature battery.
pub fn oracle_measures() -> Vec<(&'static str, AtomicWeightMeasure)> {
    let c = Complex64::new;
    let single = |z| AtomicWeightMeasure::point_mass(z, 1.0).expect("valid atom");
    vec![
        ("delta_0", single(c(0.0, 0.0))),
        ("delta_0.5", single(c(0.5, 0.0))),
        ("delta_0.7i", single(c(0.0, 0.7))),
        ("delta_1", single(c(1.0, 0.0))),
        ("delta_-1", single(c(-1.0, 0.0))),
        (
            "mixed",
            AtomicWeightMeasure::new([(c(0.5, 0.0), 0.5), (c(0.0, 0.7), 0.25), (c(-1.0, 0.0), 0.25)])
                .expect("valid atoms"),
        ),
    ]
}

/// Area quadrature against the coefficient formula.
pub fn criterion_10(seed: u64, tol: &Tolerances) -> Result<ExperimentReport> {
    const PER_MEASURE: usize = 3;
    let mut r = ExperimentReport::new("quadrature-oracle");
    let mut src = PolynomialSource::new(seed ^ 0xa);
    let grid = QuadratureGrid::default();
    r.param("levels", grid.levels).param("angular", grid.angular);
    for (name, mu) in oracle_measures() {
        let mut cases = vec![("z".to_string(), CoefficientSeries::from_real(&[0.0, 1.0]))];
        for i in 0..PER_MEASURE {
            cases.push((format!("random {i}"), src.polynomial(8)));
        }
        for (label, f) in cases {
            let exact = dirichlet_omega_atomic(&f, &mu)?;
            let q = quadrature_dirichlet(&f, &mu, &grid)?;
            let rel = (q.value - exact).abs() / exact;
            let gap = q.refinement_gap / exact;
            let tag = format!("{name}, {label}");
            r.row(
                "oracle",
                tag.clone(),
                &[("exact", exact), ("quadrature", q.value), ("gap", q.refinement_gap)],
            );
            r.check(None, format!("{tag} relative error"), rel, Relation::Le, tol.oracle, 0.0);
            r.check(None, format!("{tag} relative gap"), gap, Relation::Le, tol.oracle, 0.0);
        }
    }
    Ok(r)
}

/// `h*f = A + (z−ζ)F` and `‖F‖² ≤ ‖T_h‖² ‖g‖²`.
pub fn criterion_11(seed: u64, tol: &Tolerances) -> Result<ExperimentReport> {
    let mut r = ExperimentReport::new("cross-factorization");
    let mut src = PolynomialSource::new(seed ^ 0xb);
    let points = test_points();
    for i in 0..100 {
        let h = src.polynomial(RANDOM_DEGREE);
        let f = src.polynomial(RANDOM_DEGREE);
        let zeta = points[src.index(points.len())];
        let fac = f_series(&h, &f, zeta)?;
        let g = factorize_local(&f, zeta)?.g;
        let residual = fac.reconstruct().max_abs_diff(&hadamard(&h, &f));
        let t = norm_estimate(&h, 1e-12)?.lower;
        let lhs = fac.g.h2_norm_sqr();
        let rhs = t * t * g.h2_norm_sqr();
        r.row("cross", format!("case {i}"), &[("residual", residual), ("lhs", lhs), ("rhs", rhs)]);
        r.check(None, format!("case {i} reconstruction"), residual, Relation::Le, 0.0, tol.factorization);
        r.check(None, format!("case {i} ||F||^2"), lhs, Relation::Le, rhs, tol.exact);
    }
    Ok(r)
}
