//! Dense exact matrices indexed by ordered basis lists.

use crate::keys::BasisKey;
use crate::rational::Rational;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// A dense matrix of exact rationals, with row and column index labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    pub row_basis: Vec<BasisKey>,
    pub col_basis: Vec<BasisKey>,
    entries: Vec<Rational>, // row-major
}

impl ExactMatrix {
    pub fn zero(row_basis: Vec<BasisKey>, col_basis: Vec<BasisKey>) -> Self {
        let entries = vec![Rational::zero(); row_basis.len() * col_basis.len()];
        ExactMatrix { row_basis, col_basis, entries }
    }

    pub fn identity(basis: Vec<BasisKey>) -> Self {
        let mut m = Self::zero(basis.clone(), basis);
        for i in 0..m.row_basis.len() {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.row_basis.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_basis.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.ncols() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        let n = self.ncols();
        self.entries[i * n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        let n = self.ncols();
        &self.entries[i * n..(i + 1) * n]
    }

    pub fn row_index(&self, key: &BasisKey) -> Option<usize> {
        self.row_basis.iter().position(|k| k == key)
    }

    pub fn col_index(&self, key: &BasisKey) -> Option<usize> {
        self.col_basis.iter().position(|k| k == key)
    }

    pub fn entry(&self, row: &BasisKey, col: &BasisKey) -> Option<&Rational> {
        Some(self.get(self.row_index(row)?, self.col_index(col)?))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.col_basis.clone(), self.row_basis.clone());
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Exact matrix-vector product; `v` is indexed by the column basis.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, MatrixError> {
        if v.len() != self.ncols() {
            return Err(MatrixError::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.ncols()
            )));
        }
        Ok((0..self.nrows())
            .map(|i| {
                let mut acc = Rational::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc += self.get(i, j) * x;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        if self.ncols() != other.nrows() {
            return Err(MatrixError::Dimension(format!(
                "{}x{} times {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        let mut out = ExactMatrix::zero(self.row_basis.clone(), other.col_basis.clone());
        for i in 0..self.nrows() {
            for k in 0..self.ncols() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols() {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, m: usize) -> Result<ExactMatrix, MatrixError> {
        if self.nrows() != self.ncols() {
            return Err(MatrixError::Dimension("power of a non-square matrix".into()));
        }
        let mut acc = ExactMatrix::identity(self.row_basis.clone());
        for _ in 0..m {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        (0..self.nrows()).map(|i| self.row(i).iter().cloned().sum()).collect()
    }
}

/// Rank of a rational matrix (rows as vectors), by exact Gaussian elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][c].recip();
        for j in c..ncols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let sub = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::keys::BasisKey;
    use crate::words::Word;

    fn key(n: u32) -> BasisKey {
        BasisKey::Word(Word::new(vec![n]))
    }

    #[test]
    fn identity_applies() {
        let basis = vec![key(1), key(2), key(3)];
        let id = ExactMatrix::identity(basis);
        let v = vec![Rational::from_int(5), Rational::new(1, 2), Rational::zero()];
        assert_eq!(id.apply(&v).unwrap(), v);
    }

    #[test]
    fn zero_matrix_and_dimension_error() {
        let basis = vec![key(1), key(2)];
        let z = ExactMatrix::zero(basis.clone(), basis);
        let v = vec![Rational::one(), Rational::one()];
        assert!(z.apply(&v).unwrap().iter().all(|x| x.is_zero()));
        assert!(z.apply(&[Rational::one()]).is_err());
    }

    #[test]
    fn apply_to_unit_vectors_gives_columns() {
        let basis = vec![key(1), key(2)];
        let mut m = ExactMatrix::zero(basis.clone(), basis);
        m.set(0, 0, Rational::new(1, 2));
        m.set(0, 1, Rational::new(1, 3));
        m.set(1, 0, Rational::new(-2, 1));
        m.set(1, 1, Rational::new(5, 7));
        for j in 0..2 {
            let mut e = vec![Rational::zero(), Rational::zero()];
            e[j] = Rational::one();
            let col = m.apply(&e).unwrap();
            for i in 0..2 {
                assert_eq!(&col[i], m.get(i, j));
            }
        }
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            vec![Rational::one(), Rational::from_int(2)],
            vec![Rational::from_int(2), Rational::from_int(4)],
            vec![Rational::zero(), Rational::one()],
        ];
        assert_eq!(rank(&rows), 2);
    }
}
