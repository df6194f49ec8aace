use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Output of a symmetric function for each Hamming weight `0..=m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct SymmetricProfile {
    values: Vec<bool>,
}

impl SymmetricProfile {
    pub fn new(values: Vec<bool>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidCircuit("empty symmetric profile".into()));
        }
        Ok(SymmetricProfile { values })
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        bits.iter()
            .map(|&b| match b {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(Error::InvalidCircuit(format!("profile entry {other} is not a bit"))),
            })
            .collect::<Result<Vec<_>>>()
            .and_then(Self::new)
    }

    /// Number of inputs `m` of the symmetric function.
    pub fn arity(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn value(&self, weight: usize) -> bool {
        self.values[weight]
    }

    /// Right endpoints `I_1 < … < I_{I(g)} = m` of the maximal constant runs.
    pub fn intervals(&self) -> Vec<usize> {
        let v = &self.values;
        (0..v.len())
            .filter(|&i| i + 1 == v.len() || v[i] != v[i + 1])
            .collect()
    }

    /// `I(g)`, the number of constant runs.
    pub fn interval_count(&self) -> usize {
        self.intervals().len()
    }

    /// Index `l` (1-based) of the interval holding `weight`, with its
    /// boundaries `(I_{l-1}, I_l)` where `I_0 = -1`.
    pub fn interval_of(&self, weight: usize) -> (usize, Option<usize>, usize) {
        let bounds = self.intervals();
        let l = bounds.iter().position(|&b| weight <= b).expect("weight within 0..=m");
        let left = if l == 0 { None } else { Some(bounds[l - 1]) };
        (l + 1, left, bounds[l])
    }

    /// Expands right endpoints and per-interval values back into a profile.
    pub fn from_intervals(bounds: &[usize], values: &[bool]) -> Result<Self> {
        if bounds.len() != values.len() || bounds.is_empty() {
            return Err(Error::InvalidCircuit("interval/value length mismatch".into()));
        }
        let mut out = Vec::new();
        for (&b, &v) in bounds.iter().zip(values) {
            if b < out.len() {
                return Err(Error::InvalidCircuit("interval boundaries must increase".into()));
            }
            out.resize(b + 1, v);
        }
        Self::new(out)
    }

    pub fn parity(m: usize) -> Self {
        SymmetricProfile {
            values: (0..=m).map(|k| k % 2 == 1).collect(),
        }
    }

    pub fn or(m: usize) -> Self {
        SymmetricProfile {
            values: (0..=m).map(|k| k > 0).collect(),
        }
    }

    pub fn and(m: usize) -> Self {
        SymmetricProfile {
            values: (0..=m).map(|k| k == m).collect(),
        }
    }
}

impl TryFrom<Vec<u8>> for SymmetricProfile {
    type Error = Error;
    fn try_from(v: Vec<u8>) -> Result<Self> {
        Self::from_bits(&v)
    }
}

impl From<SymmetricProfile> for Vec<u8> {
    fn from(p: SymmetricProfile) -> Vec<u8> {
        p.values.into_iter().map(u8::from).collect()
    }
}

/// Interval right endpoints of a profile.
pub fn intervals(p: &SymmetricProfile) -> Vec<usize> {
    p.intervals()
}
