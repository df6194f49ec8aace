use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolean::{input_from_index, Depth2Circuit, GateKind, ThresholdGate};
use crate::error::{Error, Result};

/// Largest input width searched exhaustively for a base point.
pub const XSTAR_SEARCH_CAP: usize = 24;

/// Outcome of checking the three regularity conditions on a first layer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub equal_norms: bool,
    pub mutually_orthogonal: bool,
    /// Binary `X*` with `WX* = b`, if one exists.
    pub xstar: Option<Vec<bool>>,
    /// `‖w‖²` shared by every gate, when the norms agree.
    pub shared_norm: Option<i64>,
}

impl RegularityReport {
    pub fn holds(&self) -> bool {
        self.equal_norms && self.mutually_orthogonal && self.xstar.is_some()
    }

    /// `(X*, ‖w‖²)` when all three conditions hold.
    pub fn require(self) -> Result<(Vec<bool>, i64)> {
        if !self.equal_norms {
            return Err(Error::RegularityViolated("gate weight norms differ".into()));
        }
        if !self.mutually_orthogonal {
            return Err(Error::RegularityViolated("gate weights are not mutually orthogonal".into()));
        }
        let norm = self.shared_norm.expect("set with equal_norms");
        if norm == 0 {
            return Err(Error::RegularityViolated("gate weights are zero".into()));
        }
        let x = self.xstar.ok_or(Error::XStarNotFound)?;
        Ok((x, norm))
    }
}

/// Integer right-hand side used for the base-point condition.
///
/// A linear gate `wᵀX ≥ b` is taken at `⌈b⌉`; an exact gate needs an
/// integer bias or it never fires.
fn target(g: &ThresholdGate) -> Option<i64> {
    match g.kind() {
        GateKind::Linear => g.bias().ceil().to_i64(),
        GateKind::Exact => g.integer_bias(),
    }
}

fn satisfies(gates: &[ThresholdGate], targets: &[Option<i64>], x: &[bool]) -> bool {
    gates.iter().zip(targets).all(|(g, t)| Some(g.dot(x)) == *t)
}

fn dot_i64(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Checks equal norms, pairwise orthogonality, and the existence of a binary
/// `X*` with `WX* = b`.
///
/// A supplied `hint` is checked and used instead of searching. Without a
/// hint the cube is searched in index order, which is only allowed up to
/// [`XSTAR_SEARCH_CAP`] inputs.
pub fn check_gate_regularity(gates: &[ThresholdGate], hint: Option<&[bool]>) -> Result<RegularityReport> {
    let first = gates
        .first()
        .ok_or_else(|| Error::InvalidCircuit("no first-layer gates".into()))?;
    let n = first.arity();
    if let Some(g) = gates.iter().find(|g| g.arity() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g.arity(),
        });
    }
    let norm = first.norm_sq();
    let equal_norms = gates.iter().all(|g| g.norm_sq() == norm);
    let mutually_orthogonal = gates.iter().enumerate().all(|(i, gi)| {
        gates[i + 1..]
            .iter()
            .all(|gj| dot_i64(gi.weights(), gj.weights()) == 0)
    });

    let targets: Vec<Option<i64>> = gates.iter().map(target).collect();
    let xstar = match hint {
        Some(h) => {
            if h.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: h.len(),
                });
            }
            if !satisfies(gates, &targets, h) {
                return Err(Error::RegularityViolated("supplied base point does not satisfy WX = b".into()));
            }
            Some(h.to_vec())
        }
        None if targets.iter().any(Option::is_none) => None,
        None => {
            if n > XSTAR_SEARCH_CAP {
                return Err(Error::InputSpaceTooLarge {
                    bits: n,
                    cap: XSTAR_SEARCH_CAP,
                });
            }
            (0..1usize << n)
                .into_par_iter()
                .find_first(|&v| satisfies(gates, &targets, &input_from_index(v, n)))
                .map(|v| input_from_index(v, n))
        }
    };

    Ok(RegularityReport {
        equal_norms,
        mutually_orthogonal,
        xstar,
        shared_norm: equal_norms.then_some(norm),
    })
}

/// Regularity of a depth-2 circuit's first layer, searching for `X*`.
pub fn check_regularity(c: &Depth2Circuit) -> Result<RegularityReport> {
    check_gate_regularity(c.gates(), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::families;

    #[test]
    fn parity_of_eq_is_regular() {
        let r = check_regularity(&families::parity_eq(2, 2)).unwrap();
        assert!(r.equal_norms && r.mutually_orthogonal);
        assert_eq!(r.shared_norm, Some(10));
        assert_eq!(r.xstar, Some(vec![false; 8]));
    }

    #[test]
    fn ip2_base_point_is_all_ones() {
        let r = check_regularity(&families::ip2(2)).unwrap();
        assert!(r.holds());
        assert_eq!(r.xstar, Some(vec![true; 4]));
    }

    #[test]
    fn shared_variable_not_orthogonal() {
        let g = ThresholdGate::linear(vec![1, 1, 0], 1).unwrap();
        let h = ThresholdGate::linear(vec![0, 1, 1], 1).unwrap();
        let r = check_gate_regularity(&[g, h], None).unwrap();
        assert!(r.equal_norms);
        assert!(!r.mutually_orthogonal);
        assert!(matches!(r.require(), Err(Error::RegularityViolated(_))));
    }

    #[test]
    fn missing_base_point() {
        // x1 + x2 = 3 has no binary solution.
        let g = ThresholdGate::exact(vec![1, 1], 3).unwrap();
        let r = check_gate_regularity(&[g], None).unwrap();
        assert_eq!(r.xstar, None);
        assert!(matches!(r.require(), Err(Error::XStarNotFound)));
    }

    #[test]
    fn bad_hint_rejected() {
        let g = families::build_eq(1);
        assert!(check_gate_regularity(std::slice::from_ref(&g), Some(&[true, false])).is_err());
        assert!(check_gate_regularity(&[g], Some(&[true, true])).is_ok());
    }
}
