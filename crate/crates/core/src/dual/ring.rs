use std::marker::PhantomData;

use super::{dual_solve, dual_solve_left, dual_unit_inverse, DualMatrix};
use crate::matrix::Matrix;
use crate::ring::{linear_bc_inverse, linear_inner_inverse, LinearAlgebra, RingError, RingSpace};
use crate::scalar::Scalar;

/// `n x n` dual matrices as a ring. The radical is `εM_n`, so radical
/// elements square to zero; transpose is the involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualMatrixRing<T> {
    n: usize,
    _scalar: PhantomData<T>,
}

impl<T> DualMatrixRing<T> {
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

impl<T: Scalar> RingSpace for DualMatrixRing<T> {
    type Elem = DualMatrix<T>;

    fn name(&self) -> String {
        match T::modulus() {
            Some(p) => format!("M{}(D(Z{}))", self.n, p),
            None => format!("M{}(D(Q))", self.n),
        }
    }

    fn contains(&self, x: &DualMatrix<T>) -> bool {
        x.shape() == (self.n, self.n)
    }

    fn zero(&self) -> DualMatrix<T> {
        DualMatrix::zeros(self.n, self.n)
    }

    fn one(&self) -> DualMatrix<T> {
        DualMatrix::identity(self.n)
    }

    fn add(&self, x: &DualMatrix<T>, y: &DualMatrix<T>) -> DualMatrix<T> {
        x + y
    }

    fn neg(&self, x: &DualMatrix<T>) -> DualMatrix<T> {
        -x
    }

    fn mul(&self, x: &DualMatrix<T>, y: &DualMatrix<T>) -> DualMatrix<T> {
        x * y
    }

    fn sub(&self, x: &DualMatrix<T>, y: &DualMatrix<T>) -> DualMatrix<T> {
        x - y
    }

    fn is_zero(&self, x: &DualMatrix<T>) -> bool {
        x.is_zero()
    }

    fn nilpotency_bound(&self) -> usize {
        2
    }

    fn is_radical(&self, x: &DualMatrix<T>) -> bool {
        x.real().is_zero()
    }

    fn involution(&self, x: &DualMatrix<T>) -> Option<DualMatrix<T>> {
        Some(x.transpose())
    }

    fn right_factor(
        &self,
        b: &DualMatrix<T>,
        y: &DualMatrix<T>,
    ) -> Result<Option<DualMatrix<T>>, RingError> {
        Ok(dual_solve(b, y)?)
    }

    fn left_factor(
        &self,
        c: &DualMatrix<T>,
        y: &DualMatrix<T>,
    ) -> Result<Option<DualMatrix<T>>, RingError> {
        Ok(dual_solve_left(c, y)?)
    }

    fn unit_inverse(&self, x: &DualMatrix<T>) -> Result<Option<DualMatrix<T>>, RingError> {
        Ok(dual_unit_inverse(x)?)
    }

    fn inner_inverse(&self, x: &DualMatrix<T>) -> Result<Option<DualMatrix<T>>, RingError> {
        linear_inner_inverse(self, x)
    }

    fn bc_inverse(
        &self,
        a: &DualMatrix<T>,
        b: &DualMatrix<T>,
        c: &DualMatrix<T>,
    ) -> Result<Option<DualMatrix<T>>, RingError> {
        linear_bc_inverse(self, a, b, c)
    }
}

impl<T: Scalar> LinearAlgebra for DualMatrixRing<T> {
    type Field = T;

    fn dim(&self) -> usize {
        2 * self.n * self.n
    }

    fn coords(&self, x: &DualMatrix<T>) -> Vec<T> {
        x.real()
            .entries()
            .iter()
            .chain(x.dual().entries())
            .cloned()
            .collect()
    }

    fn assemble(&self, v: &[T]) -> DualMatrix<T> {
        let k = self.n * self.n;
        DualMatrix::new(
            Matrix::new(self.n, self.n, v[..k].to_vec()).expect("coordinate length"),
            Matrix::new(self.n, self.n, v[k..].to_vec()).expect("coordinate length"),
        )
        .expect("parts of one shape")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{verify_inverse, InverseKind};
    use crate::QDualMatrix;

    #[test]
    fn linear_bc_route_on_the_idempotent_example() {
        let ring = DualMatrixRing::<crate::Rational>::new(2);
        let a = QDualMatrix::from_i64(&[&[1, 0], &[0, 0]], &[&[0, 1], &[1, 0]]);
        let p = QDualMatrix::from_i64(&[&[1, 0], &[0, 0]], &[&[0, 0], &[0, 0]]);
        let y = ring.bc_inverse(&a, &p, &p).unwrap().unwrap();
        assert_eq!(y, p);
        assert!(
            verify_inverse(&ring, &InverseKind::Bc(p.clone(), p), &a, &y, None)
                .unwrap()
                .passed
        );
    }

    #[test]
    fn radical_and_units() {
        let ring = DualMatrixRing::<crate::Rational>::new(2);
        let j = QDualMatrix::epsilon(Matrix::from_i64(&[&[1, 2], &[3, 4]]));
        assert!(ring.is_radical(&j));
        assert!(ring.is_zero(&ring.mul(&j, &j)));
        let u = ring.add(&ring.one(), &j);
        let v = ring.unit_inverse(&u).unwrap().unwrap();
        assert_eq!(ring.mul(&u, &v), ring.one());
        assert_eq!(ring.assemble(&ring.coords(&u)), u);
    }
}
