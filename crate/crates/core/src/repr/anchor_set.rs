use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{Rational, RationalMatrix};

/// Which construction produced an anchor set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// Reflections of one interior point across each facet of `AX ≤ b`.
    Polytope,
    /// Polytope reflections for a system of equalities.
    EqualitySystem,
    /// Symmetric top over exact gates; types are left interval boundaries.
    SymElt,
    /// Symmetric top over linear gates; types are all interval boundaries.
    SymLt,
    /// Linear decision list under the regularity conditions.
    LdlRegular,
    /// Linear decision list through the pseudo-inverse, `m ≤ n`.
    LdlGeneral,
    /// Exact decision list under the regularity conditions.
    Edl,
    /// Two-anchor representation of a constant function.
    Constant,
    /// Anchors supplied by hand.
    Manual,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::Polytope => "polytope",
            Construction::EqualitySystem => "equality_system",
            Construction::SymElt => "sym_elt",
            Construction::SymLt => "sym_lt",
            Construction::LdlRegular => "ldl_regular",
            Construction::LdlGeneral => "ldl_general",
            Construction::Edl => "edl",
            Construction::Constant => "constant",
            Construction::Manual => "manual",
        }
    }
}

/// Construction parameters recorded alongside the anchors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnchorMeta {
    pub construction: Construction,
    pub d: Option<Rational>,
    #[serde(default)]
    pub c: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xstar: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<Rational>,
}

impl AnchorMeta {
    pub fn new(construction: Construction) -> Self {
        AnchorMeta {
            construction,
            d: None,
            c: Vec::new(),
            xstar: None,
            epsilon: None,
        }
    }
}

/// A labelled set of rational anchors: a candidate nearest-neighbor
/// representation of a Boolean function on `{0,1}^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchorSet {
    anchors: RationalMatrix,
    labels: Vec<bool>,
    types: Option<Vec<usize>>,
    meta: AnchorMeta,
}

impl AnchorSet {
    pub fn new(
        anchors: RationalMatrix,
        labels: Vec<bool>,
        types: Option<Vec<usize>>,
        meta: AnchorMeta,
    ) -> Result<Self> {
        if labels.len() != anchors.rows() {
            return Err(Error::InvalidAnchorSet(format!(
                "{} labels for {} anchors",
                labels.len(),
                anchors.rows()
            )));
        }
        if let Some(t) = &types {
            if t.len() != anchors.rows() {
                return Err(Error::InvalidAnchorSet(format!(
                    "{} types for {} anchors",
                    t.len(),
                    anchors.rows()
                )));
            }
        }
        Ok(AnchorSet {
            anchors,
            labels,
            types,
            meta,
        })
    }

    pub(crate) fn from_points(
        points: Vec<Vec<Rational>>,
        labels: Vec<bool>,
        types: Option<Vec<usize>>,
        meta: AnchorMeta,
    ) -> Result<Self> {
        Self::new(RationalMatrix::from_rows(points)?, labels, types, meta)
    }

    /// Hand-written anchors with no construction metadata.
    pub fn manual(points: Vec<Vec<Rational>>, labels: Vec<bool>) -> Result<Self> {
        Self::from_points(points, labels, None, AnchorMeta::new(Construction::Manual))
    }

    /// Two anchors for a constant function on `{0,1}^n`: one at the cube
    /// centre carrying `value`, one at `(-1, …, -1)` with the other label.
    /// Every binary point is strictly closer to the centre.
    pub fn constant(n: usize, value: bool) -> Self {
        let centre = vec![Rational::half(); n];
        let far = vec![Rational::from(-1); n];
        Self::from_points(
            vec![centre, far],
            vec![value, !value],
            None,
            AnchorMeta::new(Construction::Constant),
        )
        .expect("two rows, two labels")
    }

    pub fn anchors(&self) -> &RationalMatrix {
        &self.anchors
    }

    pub fn labels(&self) -> &[bool] {
        &self.labels
    }

    pub fn types(&self) -> Option<&[usize]> {
        self.types.as_deref()
    }

    pub fn meta(&self) -> &AnchorMeta {
        &self.meta
    }

    pub fn construction(&self) -> Construction {
        self.meta.construction
    }

    /// Dimension `n` of the anchor space.
    pub fn dim(&self) -> usize {
        self.anchors.cols()
    }

    pub fn len(&self) -> usize {
        self.anchors.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.anchors.rows() == 0
    }

    /// Indices of the positive (`P`) anchors.
    pub fn positive(&self) -> impl Iterator<Item = usize> + '_ {
        self.labels.iter().enumerate().filter(|(_, &l)| l).map(|(i, _)| i)
    }

    /// Indices of the negative (`N`) anchors.
    pub fn negative(&self) -> impl Iterator<Item = usize> + '_ {
        self.labels.iter().enumerate().filter(|(_, &l)| !l).map(|(i, _)| i)
    }

    pub fn resolution(&self) -> u64 {
        self.anchors.resolution()
    }

    /// The same anchors with every label flipped.
    pub fn complement(&self) -> Self {
        AnchorSet {
            labels: self.labels.iter().map(|l| !l).collect(),
            ..self.clone()
        }
    }

    /// Reorders anchors by `perm` (`new[i] = old[perm[i]]`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.len()];
        if perm.len() != self.len() || perm.iter().any(|&p| p >= seen.len() || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidAnchorSet("not a permutation".into()));
        }
        let rows = perm.iter().map(|&p| self.anchors.row(p).to_vec()).collect();
        Ok(AnchorSet {
            anchors: RationalMatrix::from_rows(rows)?,
            labels: perm.iter().map(|&p| self.labels[p]).collect(),
            types: self.types.as_ref().map(|t| perm.iter().map(|&p| t[p]).collect()),
            meta: self.meta.clone(),
        })
    }

    /// One anchor per line, coordinates then label.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = (1..=self.dim()).map(|i| format!("x{i}")).collect();
        let _ = writeln!(out, "{},label", header.join(","));
        for (row, &label) in self.anchors.row_iter().zip(&self.labels) {
            for v in row {
                let _ = write!(out, "{v},");
            }
            let _ = writeln!(out, "{}", u8::from(label));
        }
        out
    }
}

/// `(size, resolution)` of an anchor set.
pub fn size_and_resolution(a: &AnchorSet) -> (usize, u64) {
    (a.len(), a.resolution())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn label_count_checked() {
        let pts = vec![vec![q("0"), q("0")]];
        assert!(AnchorSet::manual(pts.clone(), vec![true, false]).is_err());
        assert!(AnchorSet::manual(pts, vec![true]).is_ok());
    }

    #[test]
    fn and_anchor_size_and_resolution() {
        let a = AnchorSet::manual(
            vec![vec![q("1/2"), q("1/2")], vec![q("1"), q("1")]],
            vec![false, true],
        )
        .unwrap();
        assert_eq!(size_and_resolution(&a), (2, 2));
        assert_eq!(a.positive().collect::<Vec<_>>(), vec![1]);
        assert_eq!(a.negative().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn constant_set_has_two_anchors() {
        let a = AnchorSet::constant(3, false);
        assert_eq!(a.len(), 2);
        assert_eq!(a.labels(), &[false, true]);
    }

    #[test]
    fn csv_layout() {
        let a = AnchorSet::manual(vec![vec![q("1/2"), q("-1")]], vec![true]).unwrap();
        assert_eq!(a.to_csv(), "x1,x2,label\n1/2,-1,1\n");
    }

    #[test]
    fn permutation_validated() {
        let a = AnchorSet::constant(1, true);
        assert!(a.permuted(&[0, 0]).is_err());
        let p = a.permuted(&[1, 0]).unwrap();
        assert_eq!(p.labels(), &[false, true]);
    }
}
