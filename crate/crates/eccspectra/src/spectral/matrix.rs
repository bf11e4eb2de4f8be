//! Dense square matrix container, generic over the scalar type.

use crate::{Error, Result};

/// Row-major dense square matrix. Indices are 0-based; graph-facing code
/// converts from 1-based vertex labels at the boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Clone> SquareMatrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        SquareMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("matrix must be square".into()));
        }
        Ok(SquareMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Principal submatrix on the given (0-based, strictly increasing) indices.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        SquareMatrix::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            n: self.n,
            data: self.data.iter().map(|x| f(x)).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool
    where
        T: PartialEq,
    {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}
