use serde::{Deserialize, Serialize};

use crate::numerics::Rational;

/// One input the anchor set gets wrong or cannot decide strictly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// Input bits, `x_1` first.
    pub x: String,
    pub expected: u8,
    pub got: u8,
    /// Index of the nearest anchor (lowest index among ties).
    pub anchor: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub total: u64,
    /// Counterexamples in input order, truncated to the configured cap.
    pub failures: Vec<Failure>,
    /// Smallest `d²(nearest wrong label) - d²(nearest right label)` over all
    /// inputs; `None` if one label class is empty.
    pub min_margin: Option<Rational>,
    /// Inputs equidistant from anchors of both labels.
    pub ties: u64,
    /// Whether the nearest anchor's type matched the interval claim on every
    /// input; `None` when the set carries no types to check.
    pub type_trace_ok: Option<bool>,
    #[serde(default)]
    pub failure_count: u64,
    #[serde(default)]
    pub type_mismatches: u64,
}
