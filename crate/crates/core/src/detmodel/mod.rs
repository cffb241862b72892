//! Degree data, closed-form invariants and homogeneous matrices.

mod degree;
mod invariants;
mod matrix;

pub use degree::DegreeData;
pub use invariants::{
    binom_nonneg, dim_w_formula, ell, exception_family, h, k_term, lambda2_general, lambda_c,
    nonempty, HypothesisReport, InvariantSet,
};
pub use matrix::{random_matrix, HomogeneousMatrix, Minor};
