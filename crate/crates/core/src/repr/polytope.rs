use rayon::prelude::*;

use super::anchor_set::{AnchorMeta, AnchorSet, Construction};
use crate::boolean::input_from_index;
use crate::error::{Error, Result};
use crate::numerics::Rational;

use super::regularity::XSTAR_SEARCH_CAP;

fn check_system(a: &[Vec<i64>], b: &[i64]) -> Result<usize> {
    let first = a
        .first()
        .ok_or_else(|| Error::InvalidCircuit("empty constraint system".into()))?;
    let n = first.len();
    if n == 0 {
        return Err(Error::InvalidCircuit("constraints over zero variables".into()));
    }
    if b.len() != a.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        if row.iter().all(|&v| v == 0) {
            return Err(Error::ZeroRow(i));
        }
    }
    if n > XSTAR_SEARCH_CAP {
        return Err(Error::InputSpaceTooLarge {
            bits: n,
            cap: XSTAR_SEARCH_CAP,
        });
    }
    Ok(n)
}

fn row_dot(row: &[i64], x: &[bool]) -> i64 {
    row.iter().zip(x).filter(|(_, &b)| b).map(|(w, _)| *w).sum()
}

/// First binary point (in index order) with `AX ≤ b`.
pub fn find_binary_feasible(a: &[Vec<i64>], b: &[i64]) -> Result<Option<Vec<bool>>> {
    let n = check_system(a, b)?;
    Ok((0..1usize << n)
        .into_par_iter()
        .find_first(|&v| {
            let x = input_from_index(v, n);
            a.iter().zip(b).all(|(row, &bi)| row_dot(row, &x) <= bi)
        })
        .map(|v| input_from_index(v, n)))
}

fn reflect(a: &[Vec<i64>], b: &[i64], a0: &[bool], construction: Construction) -> AnchorSet {
    let base: Vec<Rational> = a0.iter().map(|&v| Rational::from(i64::from(v))).collect();
    let half = Rational::half();
    let mut points = vec![base.clone()];
    let mut cs = Vec::with_capacity(a.len());
    for (row, &bi) in a.iter().zip(b) {
        let norm: i64 = row.iter().map(|v| v * v).sum();
        let c = (Rational::from(bi - row_dot(row, a0)) + &half) / Rational::from(norm);
        let two_c = &c + &c;
        points.push(
            base.iter()
                .zip(row)
                .map(|(x, &r)| x + &two_c * Rational::from(r))
                .collect(),
        );
        cs.push(c);
    }
    let mut labels = vec![false; points.len()];
    labels[0] = true;
    let mut meta = AnchorMeta::new(construction);
    meta.c = cs;
    meta.xstar = Some(base);
    AnchorSet::from_points(points, labels, None, meta).expect("one label per anchor")
}

/// Anchors for the indicator of the polytope `AX ≤ b` on the cube.
///
/// A binary feasible point `a_0` is the positive anchor. Each facet
/// contributes its mirror image `a_0 + 2c_i A_i` across the shifted
/// hyperplane `A_iᵀX = b_i + 1/2`, labelled negative. With no binary
/// feasible point the function is constant 0.
pub fn construct_polytope(a: &[Vec<i64>], b: &[i64]) -> Result<AnchorSet> {
    match find_binary_feasible(a, b)? {
        Some(a0) => Ok(reflect(a, b, &a0, Construction::Polytope)),
        None => Ok(AnchorSet::constant(a[0].len(), false)),
    }
}

/// Anchors for the indicator of `AX = b` on the cube: the system is split
/// into `AX ≤ b` and `-AX ≤ -b`, giving `2m + 1` anchors.
pub fn construct_equality_system(a: &[Vec<i64>], b: &[i64]) -> Result<AnchorSet> {
    check_system(a, b)?;
    let rows: Vec<Vec<i64>> = a
        .iter()
        .cloned()
        .chain(a.iter().map(|r| r.iter().map(|v| -v).collect()))
        .collect();
    let rhs: Vec<i64> = b.iter().copied().chain(b.iter().map(|v| -v)).collect();
    match find_binary_feasible(&rows, &rhs)? {
        Some(a0) => Ok(reflect(&rows, &rhs, &a0, Construction::EqualitySystem)),
        None => Ok(AnchorSet::constant(a[0].len(), false)),
    }
}
