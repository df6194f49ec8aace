//! Builders for the named function families.
//!
//! Composed circuits place gate `i` on the variable block `[i·k, (i+1)·k)`
//! where `k` is the template gate's arity.

use super::{DecisionList, Depth2Circuit, GateKind, SymmetricProfile, ThresholdGate};
use crate::numerics::Rational;

/// Place-value weights `(2^{n-1}, …, 1, -2^{n-1}, …, -1)` over `(X, Y)`.
fn place_values(n: usize) -> Vec<i64> {
    assert!((1..=31).contains(&n), "bit width must be in 1..=31");
    let pos: Vec<i64> = (0..n).map(|i| 1i64 << (n - 1 - i)).collect();
    pos.iter().copied().chain(pos.iter().map(|w| -w)).collect()
}

/// `EQ_2n(X, Y) = 1{X = Y}` for `n`-bit unsigned integers.
pub fn build_eq(n: usize) -> ThresholdGate {
    ThresholdGate::new(place_values(n), Rational::zero(), GateKind::Exact).expect("n ≥ 1")
}

/// `COMP_2n(X, Y) = 1{X ≥ Y}`.
pub fn build_comp(n: usize) -> ThresholdGate {
    ThresholdGate::new(place_values(n), Rational::zero(), GateKind::Linear).expect("n ≥ 1")
}

/// `1{x + y ≥ 2}`
pub fn build_and2() -> ThresholdGate {
    ThresholdGate::linear(vec![1, 1], 2).expect("nonempty")
}

pub fn build_parity(m: usize) -> SymmetricProfile {
    SymmetricProfile::parity(m)
}

pub fn build_or(m: usize) -> SymmetricProfile {
    SymmetricProfile::or(m)
}

pub fn build_and(m: usize) -> SymmetricProfile {
    SymmetricProfile::and(m)
}

/// `m` copies of `template`, each on its own block of variables.
pub fn disjoint_gates(template: &ThresholdGate, m: usize) -> Vec<ThresholdGate> {
    let k = template.arity();
    (0..m)
        .map(|i| {
            let mut w = vec![0; m * k];
            w[i * k..(i + 1) * k].copy_from_slice(template.weights());
            ThresholdGate::new(w, template.bias().clone(), template.kind()).expect("nonempty")
        })
        .collect()
}

/// A symmetric top over `m` disjoint copies of `template`.
pub fn compose_disjoint(top: SymmetricProfile, template: &ThresholdGate, m: usize) -> Depth2Circuit {
    Depth2Circuit::new(disjoint_gates(template, m), top).expect("profile arity matches m")
}

/// Labels of `OMB_m` as a decision list: `1, 0, 1, …` with default 0.
pub fn omb_labels(m: usize) -> (Vec<bool>, bool) {
    ((0..m).map(|i| i % 2 == 0).collect(), false)
}

/// `OMB_m` over `m` input bits as a list of `1{z_i ≥ 1}` tests.
pub fn build_omb_list(m: usize) -> DecisionList {
    let (outputs, default) = omb_labels(m);
    let gates = disjoint_gates(&ThresholdGate::linear(vec![1], 1).expect("nonempty"), m);
    DecisionList::new(gates, outputs, default).expect("consistent list")
}

/// A decision list with the given labels over `m` disjoint copies of `template`.
pub fn compose_disjoint_list(
    outputs: Vec<bool>,
    default: bool,
    template: &ThresholdGate,
    m: usize,
) -> DecisionList {
    DecisionList::new(disjoint_gates(template, m), outputs, default).expect("consistent list")
}

pub fn and_eq(m: usize, n: usize) -> Depth2Circuit {
    compose_disjoint(build_and(m), &build_eq(n), m)
}

pub fn or_eq(m: usize, n: usize) -> Depth2Circuit {
    compose_disjoint(build_or(m), &build_eq(n), m)
}

pub fn parity_eq(m: usize, n: usize) -> Depth2Circuit {
    compose_disjoint(build_parity(m), &build_eq(n), m)
}

pub fn parity_comp(m: usize, n: usize) -> Depth2Circuit {
    compose_disjoint(build_parity(m), &build_comp(n), m)
}

/// `IP2_2n = PARITY_n ∘ AND_2`, inputs ordered `(x_1, y_1, x_2, y_2, …)`.
pub fn ip2(n: usize) -> Depth2Circuit {
    compose_disjoint(build_parity(n), &build_and2(), n)
}

/// `OMB_m ∘ EQ_2n` as an exact decision list.
pub fn omb_eq(m: usize, n: usize) -> DecisionList {
    let (outputs, default) = omb_labels(m);
    compose_disjoint_list(outputs, default, &build_eq(n), m)
}

/// A depth-3 linear decision list over five inputs:
/// `x1+x2 ≥ 1 → 1`, `2x1+x3+x4 ≥ 2 → 0`, `x2-x5 ≥ 0 → 0`, otherwise 1.
pub fn five_input_ldl() -> DecisionList {
    let gates = vec![
        ThresholdGate::linear(vec![1, 1, 0, 0, 0], 1),
        ThresholdGate::linear(vec![2, 0, 1, 1, 0], 2),
        ThresholdGate::linear(vec![0, 1, 0, 0, -1], 0),
    ]
    .into_iter()
    .collect::<Result<Vec<_>, _>>()
    .expect("nonempty");
    DecisionList::new(gates, vec![true, false, false], true).expect("consistent list")
}

/// Linear decision list computing a symmetric function over `profile.arity()`
/// inputs: one test `1{|X| ≤ I_j}` per interval except the last, labelled
/// with that interval's value; the last interval's value is the default.
///
/// The depth is `I(f) - 1`. A constant profile has no interval boundary to
/// test and yields `None`.
pub fn symmetric_ldl(profile: &SymmetricProfile) -> Option<DecisionList> {
    let n = profile.arity();
    let bounds = profile.intervals();
    if bounds.len() < 2 || n == 0 {
        return None;
    }
    let (last, rest) = bounds.split_last().expect("nonempty");
    let gates = rest
        .iter()
        .map(|&b| ThresholdGate::linear(vec![-1; n], -(b as i64)).expect("n ≥ 1"))
        .collect();
    let outputs = rest.iter().map(|&b| profile.value(b)).collect();
    Some(DecisionList::new(gates, outputs, profile.value(*last)).expect("consistent list"))
}

/// The 8-input symmetric function with profile `1,0,1,1,1,1,1,0,1`.
pub fn eight_input_symmetric() -> SymmetricProfile {
    SymmetricProfile::from_bits(&[1, 0, 1, 1, 1, 1, 1, 0, 1]).expect("bits")
}
