use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GateKind {
    /// `1{wᵀX ≥ b}`
    Linear,
    /// `1{wᵀX = b}`
    Exact,
}

/// A first-layer threshold gate over `n` binary inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdGate {
    weights: Vec<i64>,
    bias: Rational,
    kind: GateKind,
}

impl ThresholdGate {
    pub fn new(weights: Vec<i64>, bias: Rational, kind: GateKind) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidCircuit("gate with no weights".into()));
        }
        Ok(ThresholdGate { weights, bias, kind })
    }

    pub fn linear(weights: Vec<i64>, bias: i64) -> Result<Self> {
        Self::new(weights, Rational::from(bias), GateKind::Linear)
    }

    pub fn exact(weights: Vec<i64>, bias: i64) -> Result<Self> {
        Self::new(weights, Rational::from(bias), GateKind::Exact)
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn bias(&self) -> &Rational {
        &self.bias
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn arity(&self) -> usize {
        self.weights.len()
    }

    /// `‖w‖²`
    pub fn norm_sq(&self) -> i64 {
        self.weights.iter().map(|w| w * w).sum()
    }

    /// `wᵀX` for a binary input.
    pub fn dot(&self, x: &[bool]) -> i64 {
        self.weights
            .iter()
            .zip(x)
            .filter(|(_, &b)| b)
            .map(|(w, _)| *w)
            .sum()
    }

    pub fn eval(&self, x: &[bool]) -> Result<bool> {
        if x.len() != self.weights.len() {
            return Err(Error::DimensionMismatch {
                expected: self.weights.len(),
                found: x.len(),
            });
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &[bool]) -> bool {
        let s = Rational::from(self.dot(x));
        match self.kind {
            GateKind::Linear => s >= self.bias,
            GateKind::Exact => s == self.bias,
        }
    }

    /// The integer threshold equivalent over binary inputs.
    ///
    /// A linear gate with rational bias `b` fires iff `wᵀX ≥ ⌈b⌉`. An exact
    /// gate with a non-integer bias never fires and yields `None`.
    pub fn integer_bias(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        match self.kind {
            GateKind::Linear => self.bias.ceil().to_i64(),
            GateKind::Exact if self.bias.is_integer() => self.bias.numer().to_i64(),
            GateKind::Exact => None,
        }
    }
}

/// Evaluate a gate over its weights dotted with the given binary input.
pub fn eval_gate(gate: &ThresholdGate, x: &[bool]) -> Result<bool> {
    gate.eval(x)
}
