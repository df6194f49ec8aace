//! Dense row-major rational matrices and exact linear algebra.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// The `rows × cols` leading block of the identity (`I_{m,n}`).
    pub fn sub_identity(rows: usize, cols: usize) -> Self {
        let mut m = RationalMatrix::zeros(rows, cols);
        for i in 0..rows.min(cols) {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.row_iter().map(<[Rational]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = RationalMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let v: Rational = (0..self.cols).map(|k| self.get(r, k) * rhs.get(k, c)).sum();
                out.set(r, c, v);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self.row_iter().map(|row| dot(row, v)).collect())
    }

    /// Entrywise `self + k·other`.
    pub fn add_scaled(&self, k: &Rational, other: &RationalMatrix) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + k * b)
                .collect(),
        })
    }

    /// Gram matrix `A·Aᵀ`.
    pub fn gram(&self) -> Self {
        let mut g = RationalMatrix::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                let v = dot(self.row(i), self.row(j));
                if i != j {
                    g.set(j, i, v.clone());
                }
                g.set(i, j, v);
            }
        }
        g
    }

    /// Largest entry resolution; an empty matrix has resolution 0.
    pub fn resolution(&self) -> u64 {
        self.entries.iter().map(Rational::resolution).max().unwrap_or(0)
    }

    fn require_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Exact determinant by Gaussian elimination.
    ///
    /// Pivoting takes the first nonzero entry of each column, so results and
    /// intermediate values are reproducible.
    pub fn det(&self) -> Result<Rational> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot_row = a[col].clone();
            let pivot = &pivot_row[col];
            det *= pivot;
            for row in &mut a[col + 1..] {
                if row[col].is_zero() {
                    continue;
                }
                let f = &row[col] / pivot;
                for (dst, src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *dst -= &(&f * src);
                }
            }
        }
        Ok(det)
    }

    /// Solves `A·x = b` exactly for square nonsingular `A`.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        self.require_square()?;
        let n = self.rows;
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: b.len(),
            });
        }
        let mut a: Vec<Vec<Rational>> = self
            .row_iter()
            .zip(b)
            .map(|(row, bi)| {
                let mut r = row.to_vec();
                r.push(bi.clone());
                r
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(p, col);
            let pivot_row = a[col].clone();
            let pivot = &pivot_row[col];
            for (r, row) in a.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let f = &row[col] / pivot;
                for (dst, src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *dst -= &(&f * src);
                }
            }
        }
        Ok((0..n).map(|i| &a[i][n] / &a[i][i]).collect())
    }

    /// Inverse of a square nonsingular matrix, column by column.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let mut inv = RationalMatrix::zeros(n, n);
        for c in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[c] = Rational::one();
            let x = self.solve(&e)?;
            for (r, v) in x.into_iter().enumerate() {
                inv.set(r, c, v);
            }
        }
        Ok(inv)
    }

    /// Moore–Penrose inverse of a full-row-rank matrix, `Wᵀ(WWᵀ)⁻¹`.
    ///
    /// Requires `rows ≤ cols`; the result satisfies `W·W⁺ = I` exactly.
    pub fn pseudo_inverse(&self) -> Result<Self> {
        if self.rows > self.cols {
            return Err(Error::RankDeficient);
        }
        let gram = self.gram();
        if gram.det()?.is_zero() {
            return Err(Error::RankDeficient);
        }
        self.transpose().mul(&gram.inverse()?)
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        self.get(r, c)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_iter()).finish()
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> RationalMatrix {
        RationalMatrix::from_integer_rows(rows).unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(RationalMatrix::identity(3).det().unwrap(), Rational::one());
        assert_eq!(m(&[vec![1, 2], vec![2, 4]]).det().unwrap(), Rational::zero());
        assert_eq!(m(&[vec![0, 1], vec![1, 0]]).det().unwrap(), Rational::from(-1));
        assert_eq!(
            m(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).det().unwrap(),
            Rational::from(4)
        );
    }

    #[test]
    fn solve_examples() {
        let x = m(&[vec![2, 0], vec![0, 2]])
            .solve(&[Rational::one(), Rational::one()])
            .unwrap();
        assert_eq!(x, vec![q("1/2"), q("1/2")]);
        let err = m(&[vec![1, 2], vec![2, 4]]).solve(&[Rational::one(), Rational::one()]);
        assert!(matches!(err, Err(Error::Singular)));
    }

    #[test]
    fn pseudo_inverse_examples() {
        let id = RationalMatrix::identity(2);
        assert_eq!(id.pseudo_inverse().unwrap(), id);

        let row = m(&[vec![1, 1]]);
        let p = row.pseudo_inverse().unwrap();
        assert_eq!(p.rows(), 2);
        assert_eq!(p.cols(), 1);
        assert_eq!(p.entries(), &[q("1/2"), q("1/2")]);

        let w = m(&[vec![1, 2, 0], vec![0, -1, 3]]);
        let p = w.pseudo_inverse().unwrap();
        assert_eq!(w.mul(&p).unwrap(), RationalMatrix::identity(2));

        assert!(matches!(
            m(&[vec![1, 1], vec![2, 2]]).pseudo_inverse(),
            Err(Error::RankDeficient)
        ));
        assert!(matches!(
            m(&[vec![1], vec![2]]).pseudo_inverse(),
            Err(Error::RankDeficient)
        ));
    }

    #[test]
    fn matrix_resolution() {
        let a = RationalMatrix::from_rows(vec![vec![q("1/2"), q("1/2")], vec![q("1"), q("1")]]).unwrap();
        assert_eq!(a.resolution(), 2);
        assert_eq!(RationalMatrix::identity(2).resolution(), 1);
        assert_eq!(RationalMatrix::from_rows(vec![vec![q("-3/4")]]).unwrap().resolution(), 3);
        assert_eq!(RationalMatrix::zeros(0, 3).resolution(), 0);
    }

    #[test]
    fn ragged_rows_rejected() {
        let err = RationalMatrix::from_integer_rows(&[vec![1, 2], vec![3]]);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }
}
