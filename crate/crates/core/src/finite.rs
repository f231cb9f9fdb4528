//! Finite square nonnegative matrices, used as truncations and as the
//! ground truth for the brute-force oracles.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::operator::OperatorSpec;
use crate::scalar::Scalar;
use crate::sequence::WeightSequence;

/// `rows[i][j]` is the entry in row `i + 1`, column `j + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteMatrix<S> {
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> FiniteMatrix<S> {
    pub fn new(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidOperator(format!("row {} has {} entries, expected {n}", i + 1, rows[i].len())));
        }
        for (i, row) in rows.iter().enumerate() {
            if let Some(j) = row.iter().position(Scalar::is_negative) {
                return Err(Error::InvalidOperator(format!("negative entry at ({}, {})", i + 1, j + 1)));
            }
        }
        Ok(FiniteMatrix { rows })
    }

    /// Leading `n × n` block of an infinite spec.
    pub fn leading_block(spec: &OperatorSpec<S>, n: usize) -> Self {
        let mut rows = vec![vec![S::zero(); n]; n];
        for m in 1..=n {
            for (r, v) in spec.column(m) {
                if r <= n {
                    rows[r - 1][m - 1] = v;
                }
            }
        }
        FiniteMatrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    /// Entry `a_{row, col}`, 1-based.
    pub fn entry(&self, row: usize, col: usize) -> &S {
        &self.rows[row - 1][col - 1]
    }

    pub fn is_nonzero(&self, row: usize, col: usize) -> bool {
        !self.entry(row, col).is_zero()
    }

    /// The matrix as an infinite operator: this block in the top-left corner,
    /// zero everywhere else.
    pub fn embed(&self) -> OperatorSpec<S> {
        let n = self.size() as i64;
        let mut diagonals = BTreeMap::new();
        for o in -(n - 1)..=(n - 1) {
            let len = (n - o.abs()) as usize;
            let values: Vec<S> = (1..=len)
                .map(|t| {
                    let (row, col) = if o >= 0 { (t + o as usize, t) } else { (t, t + o.unsigned_abs() as usize) };
                    self.entry(row, col).clone()
                })
                .collect();
            let seq = WeightSequence::periodic(values, vec![S::zero()]).expect("entries are nonnegative");
            diagonals.insert(o, seq);
        }
        let band = (n - 1).max(0) as usize;
        OperatorSpec::banded(band, band, diagonals).expect("offsets fit the band")
    }

    /// Exact entry `(A^power)_{row, col}`.
    pub fn power_entry(&self, power: usize, row: usize, col: usize) -> S {
        assert!(power >= 1, "power starts at 1");
        let n = self.size();
        // column vector A^k e_col
        let mut v: Vec<S> = (1..=n).map(|i| if i == col { S::one() } else { S::zero() }).collect();
        for _ in 0..power {
            v = (0..n)
                .map(|i| {
                    (0..n).fold(S::zero(), |acc, j| {
                        if v[j].is_zero() || self.rows[i][j].is_zero() {
                            acc
                        } else {
                            acc + self.rows[i][j].clone() * v[j].clone()
                        }
                    })
                })
                .collect();
        }
        v[row - 1].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn m(rows: &[&[i64]]) -> FiniteMatrix<Rational> {
        FiniteMatrix::new(rows.iter().map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect()).collect()).unwrap()
    }

    #[test]
    fn embedding_agrees_with_block() {
        let a = m(&[&[0, 1, 0], &[2, 0, 3], &[0, 4, 5]]);
        let spec = a.embed();
        for i in 1..=5 {
            for j in 1..=5 {
                let expected = if i <= 3 && j <= 3 { a.entry(i, j).clone() } else { Rational::from_integer(0.into()) };
                assert_eq!(spec.entry(i, j), expected, "({i}, {j})");
            }
        }
        assert_eq!(FiniteMatrix::leading_block(&spec, 3), a);
    }

    #[test]
    fn powers_agree_with_embedded_operator() {
        let a = m(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        let spec = a.embed();
        for k in 1..=4 {
            for i in 1..=3 {
                for j in 1..=3 {
                    // (A^k)_{j,i} = (T^k e_i)_j
                    assert_eq!(a.power_entry(k, j, i), spec.matrix_power_entry(k, i, j));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(FiniteMatrix::new(vec![vec![Rational::from_integer(1.into())], vec![]]).is_err());
        assert!(FiniteMatrix::new(vec![vec![Rational::from_integer((-1).into())]]).is_err());
    }
}
