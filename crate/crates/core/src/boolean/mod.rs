//! Gates, depth-2 circuits, decision lists, and reference evaluators.

mod circuit;
pub mod families;
mod gate;
mod profile;

pub use circuit::{
    dl_to_dom_circuit, eval_decision_list, eval_depth2, DecisionList, Depth2Circuit, DomCircuit,
    ListKind,
};
pub use gate::{eval_gate, GateKind, ThresholdGate};
pub use profile::{intervals, SymmetricProfile};

/// Binary input for cube index `v`: `x_1` is the most significant of `n` bits.
pub fn input_from_index(v: usize, n: usize) -> Vec<bool> {
    (0..n).map(|i| (v >> (n - 1 - i)) & 1 == 1).collect()
}

/// Inverse of [`input_from_index`].
pub fn index_from_input(x: &[bool]) -> usize {
    x.iter().fold(0, |acc, &b| (acc << 1) | usize::from(b))
}
