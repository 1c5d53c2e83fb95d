//! Dense exact matrices and the classical generalized inverses.

mod echelon;
mod inverses;
mod ring;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::Scalar;

pub use echelon::{determinant, inverse, rank, rref, solve, solve_left, Rref};
pub use inverses::{
    bc_inverse, core_inverse, drazin_inverse, factor_through, full_rank_factorize, group_inverse,
    mp_inverse, one_inverse, reflexive_inverse, DrazinResult, FactorSide, Factors,
    FullRankFactorization, InverseError,
};
pub use ring::MatrixRing;

/// Input errors for matrix operations. Nonexistence of an inverse is not an
/// error of this kind; see [`InverseError`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("expected a square matrix, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("rank computations need a field, but Z/{0} is not one")]
    NotAField(u64),
    #[error("{rows}x{cols} matrix needs {expected} entries, got {got}")]
    EntryCount {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },
    #[error("enumeration over {0} candidates exceeds the search budget")]
    Budget(u128),
}

/// A dense row-major matrix with explicit shape. Zero-row and zero-column
/// matrices are valid values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::EntryCount {
                rows,
                cols,
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| T::from_i64(rows[i][j]))
    }

    /// Builds a matrix from rows of scalars. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Self {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                T::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| s.clone() * x.clone()).collect(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.same_shape("add", rhs)?;
        Ok(self.zip(rhs, |a, b| a.clone() + b.clone()))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.same_shape("sub", rhs)?;
        Ok(self.zip(rhs, |a, b| a.clone() - b.clone()))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::Shape {
                op: "mul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * rhs.get(k, j).clone();
                }
                out.push(acc);
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: rhs.cols,
            data: out,
        })
    }

    /// `self^k` for square matrices; `self^0` is the identity.
    pub fn pow(&self, k: usize) -> Result<Self, MatrixError> {
        self.require_square()?;
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        Ok(acc)
    }

    pub fn require_square(&self) -> Result<(), MatrixError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(MatrixError::NotSquare(self.rows, self.cols))
        }
    }

    /// Top-left `rows x cols` block.
    pub fn crop(&self, rows: usize, cols: usize) -> Self {
        assert!(
            rows <= self.rows && cols <= self.cols,
            "crop larger than matrix"
        );
        Self::from_fn(rows, cols, |i, j| self.get(i, j).clone())
    }

    /// Embeds `self` in the top-left corner of a `rows x cols` zero matrix.
    pub fn pad(&self, rows: usize, cols: usize) -> Self {
        assert!(
            rows >= self.rows && cols >= self.cols,
            "pad smaller than matrix"
        );
        Self::from_fn(rows, cols, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else {
                T::zero()
            }
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.rows != rhs.rows {
            return Err(MatrixError::Shape {
                op: "hstack",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        }))
    }

    /// `[self; rhs]`.
    pub fn vstack(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.cols {
            return Err(MatrixError::Shape {
                op: "vstack",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Ok(Self {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        })
    }

    /// Sub-block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Column-major vectorization, so that `vec(AXB) = (Bᵀ ⊗ A) vec(X)`.
    pub fn vectorize(&self) -> Self {
        Self::from_fn(self.rows * self.cols, 1, |k, _| {
            self.get(k % self.rows, k / self.rows).clone()
        })
    }

    /// Inverse of [`Matrix::vectorize`].
    pub fn unvectorize(v: &Self, rows: usize, cols: usize) -> Self {
        assert_eq!(v.rows, rows * cols, "vector length mismatch");
        Self::from_fn(rows, cols, |i, j| v.get(j * rows + i, 0).clone())
    }

    pub fn kronecker(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols).clone()
                * rhs.get(i % rhs.rows, j % rhs.cols).clone()
        })
    }

    fn same_shape(&self, op: &'static str, rhs: &Self) -> Result<(), MatrixError> {
        if self.shape() == rhs.shape() {
            Ok(())
        } else {
            Err(MatrixError::Shape {
                op,
                left: self.shape(),
                right: rhs.shape(),
            })
        }
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")?;
        if self.rows == 0 || self.cols == 0 {
            write!(f, "<{}x{}>", self.rows, self.cols)?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// Operator impls panic on shape mismatch, like slice indexing; the
// `checked_*` methods are the fallible forms.

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: Self) -> Matrix<T> {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: Self) -> Matrix<T> {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Self) -> Matrix<T> {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x.clone()).collect(),
        }
    }
}

impl<T: Scalar> Add for Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: Self) -> Matrix<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: Self) -> Matrix<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Self) -> Matrix<T> {
        &self * &rhs
    }
}

impl<T: Scalar> Neg for Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::QMatrix;

    #[test]
    fn vectorize_kronecker_identity() {
        let a = QMatrix::from_i64(&[&[1, 2], &[3, 4], &[0, -1]]);
        let x = QMatrix::from_i64(&[&[1, 0, 2], &[-1, 1, 1]]);
        let b = QMatrix::from_i64(&[&[2, 1], &[0, 1], &[1, 1]]);
        let lhs = (&(&a * &x) * &b).vectorize();
        let rhs = &b.transpose().kronecker(&a) * &x.vectorize();
        assert_eq!(lhs, rhs);
        assert_eq!(QMatrix::unvectorize(&x.vectorize(), 2, 3), x);
    }

    #[test]
    fn empty_shapes_multiply() {
        let g = QMatrix::zeros(3, 0);
        let h = QMatrix::zeros(0, 2);
        assert_eq!(&g * &h, QMatrix::zeros(3, 2));
        assert_eq!(&h * &QMatrix::zeros(2, 0), QMatrix::zeros(0, 0));
    }

    #[test]
    fn shape_errors_are_reported() {
        let a = QMatrix::identity(2);
        let b = QMatrix::zeros(3, 1);
        assert!(matches!(a.checked_mul(&b), Err(MatrixError::Shape { .. })));
        assert!(Matrix::new(2, 2, vec![q(1, 1)]).is_err());
    }

    #[test]
    fn pad_then_crop_round_trips() {
        let a = QMatrix::from_i64(&[&[1, 2, 3]]);
        assert_eq!(a.pad(3, 3).crop(1, 3), a);
    }
}
