use std::marker::PhantomData;

use super::{bc_inverse, echelon, reflexive_inverse, InverseError, Matrix};
use crate::ring::{LinearAlgebra, RingError, RingSpace};
use crate::scalar::Scalar;

/// The ring of `n x n` matrices over an exact field, with transpose as
/// involution. Its Jacobson radical is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixRing<T> {
    n: usize,
    _scalar: PhantomData<T>,
}

impl<T> MatrixRing<T> {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            _scalar: PhantomData,
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

fn lift<T: Scalar>(e: InverseError<T>) -> Result<(), RingError> {
    match e {
        InverseError::Input(m) => Err(RingError::Matrix(m)),
        _ => Ok(()),
    }
}

impl<T: Scalar> RingSpace for MatrixRing<T> {
    type Elem = Matrix<T>;

    fn name(&self) -> String {
        match T::modulus() {
            Some(p) => format!("M{}(Z{})", self.n, p),
            None => format!("M{}(Q)", self.n),
        }
    }

    fn contains(&self, x: &Matrix<T>) -> bool {
        x.shape() == (self.n, self.n)
    }

    fn zero(&self) -> Matrix<T> {
        Matrix::zeros(self.n, self.n)
    }

    fn one(&self) -> Matrix<T> {
        Matrix::identity(self.n)
    }

    fn add(&self, x: &Matrix<T>, y: &Matrix<T>) -> Matrix<T> {
        x + y
    }

    fn neg(&self, x: &Matrix<T>) -> Matrix<T> {
        -x
    }

    fn mul(&self, x: &Matrix<T>, y: &Matrix<T>) -> Matrix<T> {
        x * y
    }

    fn sub(&self, x: &Matrix<T>, y: &Matrix<T>) -> Matrix<T> {
        x - y
    }

    fn is_zero(&self, x: &Matrix<T>) -> bool {
        x.is_zero()
    }

    fn nilpotency_bound(&self) -> usize {
        self.n.max(1)
    }

    fn is_radical(&self, x: &Matrix<T>) -> bool {
        x.is_zero()
    }

    fn involution(&self, x: &Matrix<T>) -> Option<Matrix<T>> {
        Some(x.transpose())
    }

    fn right_factor(&self, b: &Matrix<T>, y: &Matrix<T>) -> Result<Option<Matrix<T>>, RingError> {
        Ok(echelon::solve(b, y)?)
    }

    fn left_factor(&self, c: &Matrix<T>, y: &Matrix<T>) -> Result<Option<Matrix<T>>, RingError> {
        Ok(echelon::solve_left(c, y)?)
    }

    fn unit_inverse(&self, x: &Matrix<T>) -> Result<Option<Matrix<T>>, RingError> {
        Ok(echelon::inverse(x)?)
    }

    fn inner_inverse(&self, x: &Matrix<T>) -> Result<Option<Matrix<T>>, RingError> {
        self.reflexive_inverse(x)
    }

    fn reflexive_inverse(&self, x: &Matrix<T>) -> Result<Option<Matrix<T>>, RingError> {
        match reflexive_inverse(x) {
            Ok(g) => Ok(Some(g)),
            Err(e) => lift(e).map(|_| None),
        }
    }

    fn bc_inverse(
        &self,
        a: &Matrix<T>,
        b: &Matrix<T>,
        c: &Matrix<T>,
    ) -> Result<Option<Matrix<T>>, RingError> {
        match bc_inverse(a, b, c) {
            Ok(y) => Ok(Some(y)),
            Err(e) => lift(e).map(|_| None),
        }
    }
}

impl<T: Scalar> LinearAlgebra for MatrixRing<T> {
    type Field = T;

    fn dim(&self) -> usize {
        self.n * self.n
    }

    fn coords(&self, x: &Matrix<T>) -> Vec<T> {
        x.entries().to_vec()
    }

    fn assemble(&self, v: &[T]) -> Matrix<T> {
        Matrix::new(self.n, self.n, v.to_vec()).expect("coordinate length")
    }
}
