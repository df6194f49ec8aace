use serde::{Deserialize, Serialize};

use super::{GateKind, SymmetricProfile, ThresholdGate};
use crate::error::{Error, Result};

fn check_shared_arity(gates: &[ThresholdGate]) -> Result<usize> {
    let n = gates
        .first()
        .map(ThresholdGate::arity)
        .ok_or_else(|| Error::InvalidCircuit("no first-layer gates".into()))?;
    if let Some(g) = gates.iter().find(|g| g.arity() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g.arity(),
        });
    }
    Ok(n)
}

fn check_input(n: usize, x: &[bool]) -> Result<()> {
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    Ok(())
}

/// A symmetric top gate over `m` threshold gates sharing `n` inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Depth2Circuit {
    gates: Vec<ThresholdGate>,
    top: SymmetricProfile,
}

impl Depth2Circuit {
    pub fn new(gates: Vec<ThresholdGate>, top: SymmetricProfile) -> Result<Self> {
        check_shared_arity(&gates)?;
        if top.arity() != gates.len() {
            return Err(Error::InvalidCircuit(format!(
                "top profile covers {} gates, first layer has {}",
                top.arity(),
                gates.len()
            )));
        }
        Ok(Depth2Circuit { gates, top })
    }

    pub fn gates(&self) -> &[ThresholdGate] {
        &self.gates
    }

    pub fn top(&self) -> &SymmetricProfile {
        &self.top
    }

    /// Input arity `n`.
    pub fn arity(&self) -> usize {
        self.gates[0].arity()
    }

    /// Number of first-layer gates `m`.
    pub fn depth(&self) -> usize {
        self.gates.len()
    }

    /// Uniform gate kind, if all gates agree.
    pub fn gate_kind(&self) -> Option<GateKind> {
        let k = self.gates[0].kind();
        self.gates.iter().all(|g| g.kind() == k).then_some(k)
    }

    /// `|Z|`, the number of firing first-layer gates.
    pub fn active_count(&self, x: &[bool]) -> Result<usize> {
        check_input(self.arity(), x)?;
        Ok(self.gates.iter().filter(|g| g.eval_unchecked(x)).count())
    }

    pub fn eval(&self, x: &[bool]) -> Result<bool> {
        Ok(self.top.value(self.active_count(x)?))
    }
}

pub fn eval_depth2(c: &Depth2Circuit, x: &[bool]) -> Result<bool> {
    c.eval(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ListKind {
    Ldl,
    Edl,
}

/// Ordered cascade of threshold gates; the first firing gate picks the label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionList {
    gates: Vec<ThresholdGate>,
    outputs: Vec<bool>,
    default: bool,
    kind: ListKind,
}

impl DecisionList {
    /// Builds a list; all gates must share one arity and one kind.
    pub fn new(gates: Vec<ThresholdGate>, outputs: Vec<bool>, default: bool) -> Result<Self> {
        check_shared_arity(&gates)?;
        if outputs.len() != gates.len() {
            return Err(Error::InvalidCircuit(format!(
                "{} outputs for {} gates",
                outputs.len(),
                gates.len()
            )));
        }
        let kind = match gates[0].kind() {
            GateKind::Linear => ListKind::Ldl,
            GateKind::Exact => ListKind::Edl,
        };
        if gates.iter().any(|g| g.kind() != gates[0].kind()) {
            return Err(Error::InvalidCircuit("decision list mixes linear and exact gates".into()));
        }
        Ok(DecisionList {
            gates,
            outputs,
            default,
            kind,
        })
    }

    pub fn gates(&self) -> &[ThresholdGate] {
        &self.gates
    }

    pub fn outputs(&self) -> &[bool] {
        &self.outputs
    }

    pub fn default_output(&self) -> bool {
        self.default
    }

    pub fn kind(&self) -> ListKind {
        self.kind
    }

    pub fn arity(&self) -> usize {
        self.gates[0].arity()
    }

    pub fn depth(&self) -> usize {
        self.gates.len()
    }

    /// Labels `z_1..z_{m+1}` with the default label last.
    pub fn labels(&self) -> Vec<bool> {
        let mut z = self.outputs.clone();
        z.push(self.default);
        z
    }

    /// Index of the first firing gate, if any.
    pub fn first_firing(&self, x: &[bool]) -> Result<Option<usize>> {
        check_input(self.arity(), x)?;
        Ok(self.gates.iter().position(|g| g.eval_unchecked(x)))
    }

    pub fn eval(&self, x: &[bool]) -> Result<bool> {
        Ok(match self.first_firing(x)? {
            Some(k) => self.outputs[k],
            None => self.default,
        })
    }
}

pub fn eval_decision_list(l: &DecisionList, x: &[bool]) -> Result<bool> {
    l.eval(x)
}

/// A depth-2 circuit with a domination gate on top:
/// `1{Σ top_weights[i]·f_i(X) ≥ threshold}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomCircuit {
    gates: Vec<ThresholdGate>,
    top_weights: Vec<i64>,
    threshold: i64,
}

impl DomCircuit {
    pub fn gates(&self) -> &[ThresholdGate] {
        &self.gates
    }

    pub fn top_weights(&self) -> &[i64] {
        &self.top_weights
    }

    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    pub fn arity(&self) -> usize {
        self.gates[0].arity()
    }

    pub fn eval(&self, x: &[bool]) -> Result<bool> {
        check_input(self.arity(), x)?;
        let s: i64 = self
            .gates
            .iter()
            .zip(&self.top_weights)
            .filter(|(g, _)| g.eval_unchecked(x))
            .map(|(_, w)| *w)
            .sum();
        Ok(s >= self.threshold)
    }
}

/// Compiles a decision list into a first layer feeding a domination gate with
/// weights `(-1)^{z_i - 1}·2^{m-i}` and threshold `1 - z_{m+1}`.
pub fn dl_to_dom_circuit(l: &DecisionList) -> DomCircuit {
    let m = l.depth();
    let top_weights = l
        .outputs()
        .iter()
        .enumerate()
        .map(|(i, &z)| {
            let mag = 1i64 << (m - 1 - i);
            if z {
                mag
            } else {
                -mag
            }
        })
        .collect();
    DomCircuit {
        gates: l.gates().to_vec(),
        top_weights,
        threshold: 1 - i64::from(l.default_output()),
    }
}
