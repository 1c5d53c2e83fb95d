//! Dual matrices `A + εA₀` with `ε² = 0`.

mod clean;
mod closed;
mod engine;
mod regular;
mod ring;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::matrix::{solve, Matrix, MatrixError};
use crate::ring::RingError;
use crate::scalar::Scalar;

pub use clean::{
    clean_facts, group_invertible_reflexive, CleanFacts, SpecialCleanVerdict, StronglyCleanVerdict,
};
pub use closed::{
    closed_along, closed_bc, closed_core, closed_drazin, closed_form_inverse, closed_group,
    closed_mp, BcClosedForm,
};
pub use engine::{
    dual_drazin, dual_generalized_inverse, dual_generalized_inverse_with, outer_inverse_prescribed,
    verify_certificate, CertificateCheck, DualInverseCertificate, DualKind, DualOptions,
    NamedMatrix, Nonexistence, OuterInverse, ResidualReport, SubspaceCheck,
};
pub use regular::{
    radical_split, radical_split_with, regularity_certificate, RadicalSplit, RegularityCertificate,
};
pub use ring::DualMatrixRing;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{0}")]
    Input(String),
}

/// `A + εA₀`, both parts of one shape.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DualMatrix<T> {
    real: Matrix<T>,
    dual: Matrix<T>,
}

impl<T: Scalar> DualMatrix<T> {
    pub fn new(real: Matrix<T>, dual: Matrix<T>) -> Result<Self, MatrixError> {
        if real.shape() != dual.shape() {
            return Err(MatrixError::Shape {
                op: "dual matrix",
                left: real.shape(),
                right: dual.shape(),
            });
        }
        Ok(Self { real, dual })
    }

    pub fn from_real(real: Matrix<T>) -> Self {
        let dual = Matrix::zeros(real.rows(), real.cols());
        Self { real, dual }
    }

    /// `εA₀`
    pub fn epsilon(dual: Matrix<T>) -> Self {
        let real = Matrix::zeros(dual.rows(), dual.cols());
        Self { real, dual }
    }

    pub fn from_i64(real: &[&[i64]], dual: &[&[i64]]) -> Self {
        Self::new(Matrix::from_i64(real), Matrix::from_i64(dual)).expect("parts of one shape")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_real(Matrix::zeros(rows, cols))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_real(Matrix::identity(n))
    }

    pub fn real(&self) -> &Matrix<T> {
        &self.real
    }

    pub fn dual(&self) -> &Matrix<T> {
        &self.dual
    }

    pub fn into_parts(self) -> (Matrix<T>, Matrix<T>) {
        (self.real, self.dual)
    }

    pub fn shape(&self) -> (usize, usize) {
        self.real.shape()
    }

    pub fn rows(&self) -> usize {
        self.real.rows()
    }

    pub fn cols(&self) -> usize {
        self.real.cols()
    }

    pub fn is_square(&self) -> bool {
        self.real.is_square()
    }

    pub fn is_zero(&self) -> bool {
        self.real.is_zero() && self.dual.is_zero()
    }

    pub fn require_square(&self) -> Result<(), MatrixError> {
        self.real.require_square()
    }

    /// `Aᵀ + εA₀ᵀ`
    pub fn transpose(&self) -> Self {
        Self {
            real: self.real.transpose(),
            dual: self.dual.transpose(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        Self {
            real: self.real.scale(s),
            dual: self.dual.scale(s),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, MatrixError> {
        Ok(Self {
            real: self.real.checked_add(&rhs.real)?,
            dual: self.dual.checked_add(&rhs.dual)?,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, MatrixError> {
        Ok(Self {
            real: self.real.checked_sub(&rhs.real)?,
            dual: self.dual.checked_sub(&rhs.dual)?,
        })
    }

    /// `AB + ε(A₀B + AB₀)`
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        let real = self.real.checked_mul(&rhs.real)?;
        let dual = self.dual.checked_mul(&rhs.real)? + self.real.checked_mul(&rhs.dual)?;
        Ok(Self { real, dual })
    }

    /// `Â^s = A^s + ε Σ_{i<s} A^i A₀ A^{s-1-i}`
    pub fn pow(&self, s: usize) -> Result<Self, MatrixError> {
        self.require_square()?;
        let n = self.rows();
        let powers: Vec<Matrix<T>> =
            std::iter::successors(Some(Matrix::identity(n)), |p| Some(p * &self.real))
                .take(s + 1)
                .collect();
        let mut dual = Matrix::zeros(n, n);
        for i in 0..s {
            dual = &dual + &(&(&powers[i] * &self.dual) * &powers[s - 1 - i]);
        }
        Ok(Self {
            real: powers[s].clone(),
            dual,
        })
    }

    pub fn pad(&self, rows: usize, cols: usize) -> Self {
        Self {
            real: self.real.pad(rows, cols),
            dual: self.dual.pad(rows, cols),
        }
    }

    pub fn crop(&self, rows: usize, cols: usize) -> Self {
        Self {
            real: self.real.crop(rows, cols),
            dual: self.dual.crop(rows, cols),
        }
    }

    /// The real block form `[[A, 0], [A₀, A]]`, acting on stacked
    /// `[x; x₀]`.
    pub fn block_form(&self) -> Matrix<T> {
        let (m, n) = self.shape();
        Matrix::from_fn(2 * m, 2 * n, |i, j| match (i < m, j < n) {
            (true, true) => self.real.get(i, j).clone(),
            (true, false) => T::zero(),
            (false, true) => self.dual.get(i - m, j).clone(),
            (false, false) => self.real.get(i - m, j - n).clone(),
        })
    }

    fn stacked(&self) -> Matrix<T> {
        self.real.vstack(&self.dual).expect("parts of one shape")
    }

    fn unstack(v: &Matrix<T>) -> Self {
        let n = v.rows() / 2;
        Self {
            real: v.block(0, 0, n, v.cols()),
            dual: v.block(n, 0, n, v.cols()),
        }
    }
}

/// `M⁻¹ - εM⁻¹M₀M⁻¹`, when the real part is invertible.
pub fn dual_unit_inverse<T: Scalar>(
    m: &DualMatrix<T>,
) -> Result<Option<DualMatrix<T>>, MatrixError> {
    m.require_square()?;
    let Some(inv) = crate::matrix::inverse(m.real())? else {
        return Ok(None);
    };
    let dual = -&(&(&inv * m.dual()) * &inv);
    Ok(Some(DualMatrix { real: inv, dual }))
}

/// Some `X̂` with `ÂX̂ = B̂`, through the block system
/// `[[A, 0], [A₀, A]]·[X; X₀] = [B; B₀]`.
pub fn dual_solve<T: Scalar>(
    a: &DualMatrix<T>,
    b: &DualMatrix<T>,
) -> Result<Option<DualMatrix<T>>, MatrixError> {
    if a.rows() != b.rows() {
        return Err(MatrixError::Shape {
            op: "dual solve",
            left: a.shape(),
            right: b.shape(),
        });
    }
    Ok(solve(&a.block_form(), &b.stacked())?.map(|x| DualMatrix::unstack(&x)))
}

/// Some `Ŝ` with `ŜĈ = Ŷ`.
pub fn dual_solve_left<T: Scalar>(
    c: &DualMatrix<T>,
    y: &DualMatrix<T>,
) -> Result<Option<DualMatrix<T>>, MatrixError> {
    Ok(dual_solve(&c.transpose(), &y.transpose())?.map(|s| s.transpose()))
}

impl<T: fmt::Display> fmt::Debug for DualMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + ε{:?}", self.real, self.dual)
    }
}

impl<T: fmt::Display> fmt::Display for DualMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ε{}", self.real, self.dual)
    }
}

impl<T: Scalar> Add for &DualMatrix<T> {
    type Output = DualMatrix<T>;

    fn add(self, rhs: Self) -> DualMatrix<T> {
        self.checked_add(rhs).expect("dual matrix shapes")
    }
}

impl<T: Scalar> Sub for &DualMatrix<T> {
    type Output = DualMatrix<T>;

    fn sub(self, rhs: Self) -> DualMatrix<T> {
        self.checked_sub(rhs).expect("dual matrix shapes")
    }
}

impl<T: Scalar> Mul for &DualMatrix<T> {
    type Output = DualMatrix<T>;

    fn mul(self, rhs: Self) -> DualMatrix<T> {
        self.checked_mul(rhs).expect("dual matrix shapes")
    }
}

impl<T: Scalar> Neg for &DualMatrix<T> {
    type Output = DualMatrix<T>;

    fn neg(self) -> DualMatrix<T> {
        DualMatrix {
            real: -&self.real,
            dual: -&self.dual,
        }
    }
}
