//! File formats for circuits, anchor sets, and reports.
//!
//! Rationals are written as `"p"` or `"p/q"` strings, bits as `0`/`1`, and
//! struct fields in a fixed order so output bytes are reproducible.

use serde::{Deserialize, Serialize};

use crate::boolean::{DecisionList, Depth2Circuit, SymmetricProfile, ThresholdGate};
use crate::error::{Error, Result};
use crate::numerics::{Rational, RationalMatrix};
use crate::repr::{AnchorMeta, AnchorSet, Construction};
use crate::verify::Oracle;

/// A circuit in either supported shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Circuit {
    Depth2(Depth2Circuit),
    List(DecisionList),
}

impl Circuit {
    pub fn arity(&self) -> usize {
        match self {
            Circuit::Depth2(c) => c.arity(),
            Circuit::List(l) => l.arity(),
        }
    }

    pub fn gates(&self) -> &[ThresholdGate] {
        match self {
            Circuit::Depth2(c) => c.gates(),
            Circuit::List(l) => l.gates(),
        }
    }

    pub fn eval(&self, x: &[bool]) -> Result<bool> {
        match self {
            Circuit::Depth2(c) => c.eval(x),
            Circuit::List(l) => l.eval(x),
        }
    }
}

impl Oracle for Circuit {
    fn arity(&self) -> usize {
        Circuit::arity(self)
    }

    fn eval(&self, x: &[bool]) -> bool {
        Circuit::eval(self, x).expect("verifier passes full-width inputs")
    }

    fn top_profile(&self) -> Option<&SymmetricProfile> {
        match self {
            Circuit::Depth2(c) => Some(c.top()),
            Circuit::List(_) => None,
        }
    }

    fn active_count(&self, x: &[bool]) -> Option<usize> {
        match self {
            Circuit::Depth2(c) => c.active_count(x).ok(),
            Circuit::List(_) => None,
        }
    }
}

fn bit(v: u8) -> Result<bool> {
    match v {
        0 => Ok(false),
        1 => Ok(true),
        other => Err(Error::InvalidCircuit(format!("{other} is not a bit"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ListTop {
    pub outputs: Vec<u8>,
    pub default: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum TopLayer {
    Profile(SymmetricProfile),
    List(ListTop),
}

/// `{ "n", "gates": [{ "weights", "bias", "kind" }], "top": {...} }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitFile {
    pub n: usize,
    pub gates: Vec<ThresholdGate>,
    pub top: TopLayer,
}

impl CircuitFile {
    pub fn from_circuit(c: &Circuit) -> Self {
        let top = match c {
            Circuit::Depth2(d) => TopLayer::Profile(d.top().clone()),
            Circuit::List(l) => TopLayer::List(ListTop {
                outputs: l.outputs().iter().map(|&b| u8::from(b)).collect(),
                default: u8::from(l.default_output()),
            }),
        };
        CircuitFile {
            n: c.arity(),
            gates: c.gates().to_vec(),
            top,
        }
    }

    pub fn into_circuit(self) -> Result<Circuit> {
        for g in &self.gates {
            if g.arity() == 0 {
                return Err(Error::InvalidCircuit("gate with no weights".into()));
            }
            if g.arity() != self.n {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    found: g.arity(),
                });
            }
        }
        match self.top {
            TopLayer::Profile(p) => Ok(Circuit::Depth2(Depth2Circuit::new(self.gates, p)?)),
            TopLayer::List(list) => {
                let outputs = list.outputs.into_iter().map(bit).collect::<Result<_>>()?;
                Ok(Circuit::List(DecisionList::new(self.gates, outputs, bit(list.default)?)?))
            }
        }
    }
}

/// `{ "n", "anchors": [["p/q"]], "labels": [0|1], "types", "meta" }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnchorSetFile {
    pub n: usize,
    pub anchors: Vec<Vec<Rational>>,
    pub labels: Vec<u8>,
    pub types: Option<Vec<usize>>,
    pub meta: AnchorMeta,
}

impl AnchorSetFile {
    pub fn from_set(s: &AnchorSet) -> Self {
        AnchorSetFile {
            n: s.dim(),
            anchors: s.anchors().to_rows(),
            labels: s.labels().iter().map(|&b| u8::from(b)).collect(),
            types: s.types().map(<[usize]>::to_vec),
            meta: s.meta().clone(),
        }
    }

    pub fn into_set(self) -> Result<AnchorSet> {
        if self.anchors.is_empty() {
            return Err(Error::EmptyAnchorSet);
        }
        if let Some(row) = self.anchors.iter().find(|r| r.len() != self.n) {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: row.len(),
            });
        }
        let labels = self
            .labels
            .into_iter()
            .map(|v| bit(v).map_err(|_| Error::InvalidAnchorSet(format!("label {v} is not a bit"))))
            .collect::<Result<_>>()?;
        AnchorSet::new(RationalMatrix::from_rows(self.anchors)?, labels, self.types, self.meta)
    }
}

/// Parses the CSV layout written by [`AnchorSet::to_csv`]: a header, then
/// one anchor per line with the label last.
pub fn anchor_set_from_csv(text: &str) -> Result<AnchorSet> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidAnchorSet("empty CSV".into()))?;
    let cols = header.split(',').count();
    if cols < 2 {
        return Err(Error::InvalidAnchorSet("CSV needs coordinates and a label".into()));
    }
    let (mut points, mut labels) = (Vec::new(), Vec::new());
    for (i, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != cols {
            return Err(Error::InvalidAnchorSet(format!(
                "row {} has {} fields, header has {cols}",
                i + 1,
                fields.len()
            )));
        }
        let (label, coords) = fields.split_last().expect("cols ≥ 2");
        points.push(coords.iter().map(|f| f.parse()).collect::<Result<Vec<Rational>>>()?);
        labels.push(match *label {
            "0" => false,
            "1" => true,
            other => return Err(Error::InvalidAnchorSet(format!("label {other:?} is not a bit"))),
        });
    }
    if points.is_empty() {
        return Err(Error::EmptyAnchorSet);
    }
    AnchorSet::new(
        RationalMatrix::from_rows(points)?,
        labels,
        None,
        AnchorMeta::new(Construction::Manual),
    )
}
