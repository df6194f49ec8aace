//! Exact arithmetic: rational scalars, matrices, and resolution accounting.

mod matrix;
mod rational;

pub use matrix::{dot, RationalMatrix};
pub use rational::Rational;

/// Resolution of a single rational, see [`Rational::resolution`].
pub fn resolution_scalar(q: &Rational) -> u64 {
    q.resolution()
}

/// Maximum entry resolution of a matrix; 0 for a matrix without entries.
pub fn resolution_matrix(a: &RationalMatrix) -> u64 {
    a.resolution()
}
