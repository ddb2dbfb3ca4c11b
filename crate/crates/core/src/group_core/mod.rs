//! Exact rational linear algebra in dimension seven and finite matrix
//! group enumeration.

mod enumerate;
mod form;
mod matrix;
mod rational;

pub use enumerate::{enumerate_group, MatrixGroup, DEFAULT_MAX_ORDER};
pub use form::{substitute_form, AffineLinearForm, VARIABLES};
pub use matrix::{mat_inverse, mat_mul, s_matrix, ExactMatrix7, MatrixKey, DIM};
pub use rational::Rational;
