//! Hadamard coefficient multipliers on weighted Dirichlet spaces.
//!
//! The crate is organised around four layers:
//!
//! * [`series`] and [`kernels`]: truncated power series, Hadamard products and
//!   the classical summability kernels.
//! * [`local`]: local Dirichlet integrals `D_ζ(f)` computed exactly from the
//!   factorization `f = a + (z − ζ) g`, and weighted integrals for finite
//!   atomic measures.
//! * [`quadrature`]: the weight `ω` generated by an atomic measure and an
//!   independent area-integral oracle for `D_ω(f)`.
//! * [`multiplier`]: the upper-triangular matrix `T_c`, its operator norm and
//!   the closed-form bounds on it.
//!
//! [`experiments`] ties these together into named verification suites.

pub mod error;
pub mod experiments;
pub mod kernels;
pub mod local;
pub mod multiplier;
pub mod quadrature;
pub mod series;

pub use error::{Error, Result};
pub use kernels::{make_kernel, make_kernel_exact, KernelSpec};
pub use local::{
    dirichlet_omega_atomic, f_series, factorize_local, local_dirichlet_norm, AtomicWeightMeasure,
    LocalFactorization, LocalPoint, Region,
};
pub use multiplier::{
    bound_ii, bound_iii, bound_lower_i, bound_upper_i, cesaro_matrix, l_shaped_matrix,
    necsuff_profile, norm_estimate, operator_norm, tc_truncation, MultiplierMatrix, NormEstimate,
};
pub use quadrature::{quadrature_dirichlet, weight_eval, QuadratureGrid, QuadratureResult};
pub use series::{CoefficientSeries, Degree};

pub use num_complex::Complex64;
