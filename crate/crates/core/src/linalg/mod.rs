//! Exact linear algebra: scalar fields (Q and F_p) and dense matrices with
//! rank, kernel and span-solving, used by every cohomology computation.

mod field;
mod matrix;

pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
