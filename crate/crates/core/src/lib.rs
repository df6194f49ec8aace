//! Exact nearest-neighbor representations of depth-2 threshold circuits and
//! threshold decision lists.
//!
//! Anchors are rational points; a Boolean function `f` is represented when
//! every `X ∈ {0,1}^n` is strictly closer to some anchor labelled `f(X)`
//! than to every anchor with the other label. The [`repr`] constructions
//! produce such anchor sets, and [`verify`] checks them over the whole cube
//! with integer arithmetic.

pub mod boolean;
pub mod catalog;
mod error;
pub mod io;
pub mod numerics;
pub mod repr;
pub mod verify;

pub use boolean::{
    DecisionList, Depth2Circuit, DomCircuit, GateKind, ListKind, SymmetricProfile, ThresholdGate,
};
pub use catalog::{Family, TableRow};
pub use error::{Error, Result};
pub use io::{AnchorSetFile, Circuit, CircuitFile};
pub use numerics::{Rational, RationalMatrix};
pub use repr::{AnchorMeta, AnchorSet, Construction, RegularityReport};
pub use verify::{Oracle, VerificationReport, VerifyOptions};
