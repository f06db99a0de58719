//! The multiplier matrix `T_c`, its operator norm and the bounds on it.

pub mod bounds;
pub mod estimate;
pub mod matrix;
pub mod norm;
pub mod sequence;

pub use bounds::{
    bound_ii, bound_ii_for, bound_iii, bound_iii_for, bound_lower_i, bound_upper_i,
    necsuff_profile, NecsuffProfile,
};
pub use estimate::{norm_estimate, norm_estimate_with, EstimateOptions, NormEstimate};
pub use matrix::{
    cesaro_matrix, l_shaped_matrix, tc_truncation, CesaroMatrix, LShapedMatrix, LinearOperator,
    MultiplierMatrix,
};
pub use norm::{operator_norm, DenseSvd, NormMethod, NormMethodRegistry, PowerIteration};
pub use sequence::{
    bound_iii_poisson, Alternating, Constant, Harmonic, MultiplierSequence, PoissonSequence,
    Support, TailedBound,
};
