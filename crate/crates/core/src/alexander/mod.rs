//! Seifert matrices, Alexander-module presentations, the square-knot
//! module over `F`, the Blanchfield pairing and satellite sums.

mod blanchfield;
mod kernels;
mod module;
mod seifert;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use blanchfield::{blanchfield_pair, BlanchfieldForm};
pub use kernels::{
    compact_over_denominator, f_monotone, kernel_grid, kernels_distinct, kernels_distinct_with,
    KernelGridSummary, KernelsCertificate, KernelsRecord,
};
pub use module::{
    f_coefficient, g_coefficient, gamma_k, module_from_int_vector, w_denominator, w_k, w_scalar,
    IntersectionVector, ModuleVector,
};
pub use seifert::{litherland_sum, presentation_matrix, ModulePresentation, SeifertData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error("Seifert matrix must be square of even size, got {rows}x{cols}")]
    BadSeifertShape { rows: usize, cols: usize },
    #[error("A - A^T must have determinant 1, got {0}")]
    NotUnimodular(String),
    #[error("winding number must be nonzero")]
    ZeroWinding,
    #[error("vector length {found} does not match rank {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
