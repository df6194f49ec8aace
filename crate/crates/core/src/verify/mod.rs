//! Exhaustive checking of anchor sets over the Boolean cube.

mod exhaustive;
mod oracle;
mod report;

pub use exhaustive::{
    nearest_anchor, verify_exhaustive, verify_exhaustive_with, VerifyOptions, DEFAULT_MAX_BITS,
    DEFAULT_MAX_FAILURES,
};
pub use oracle::{FnOracle, Oracle};
pub use report::{Failure, VerificationReport};
pub use crate::repr::size_and_resolution;
