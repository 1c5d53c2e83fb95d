//! Truncated power series `R[x]/(x^N)` with square-matrix coefficients.

use std::marker::PhantomData;

use serde::Serialize;

use super::{perturb_bc, BcPerturbation, PerturbationInput};
use crate::matrix::{Matrix, MatrixError, MatrixRing};
use crate::ring::{
    inverse_one_plus, linear_bc_inverse, linear_inner_inverse, solve_linear, LinearAlgebra,
    RingError, RingSpace,
};
use crate::scalar::Scalar;

/// `Σ_{i<N} a_i x^i`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<T: Scalar> {
    coefficients: Vec<Matrix<T>>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// All coefficients must be square of one size; the order is their count.
    pub fn new(coefficients: Vec<Matrix<T>>) -> Result<Self, MatrixError> {
        let Some(first) = coefficients.first() else {
            return Ok(Self { coefficients });
        };
        first.require_square()?;
        for c in &coefficients[1..] {
            if c.shape() != first.shape() {
                return Err(MatrixError::Shape {
                    op: "series",
                    left: first.shape(),
                    right: c.shape(),
                });
            }
        }
        Ok(Self { coefficients })
    }

    /// `a` as a constant series of the given order.
    pub fn constant(a: Matrix<T>, order: usize) -> Self {
        let n = a.rows();
        let mut coefficients = vec![Matrix::zeros(n, n); order];
        if order > 0 {
            coefficients[0] = a;
        }
        Self { coefficients }
    }

    /// A series of 1x1 coefficients.
    pub fn scalar(coefficients: &[i64]) -> Self {
        Self {
            coefficients: coefficients
                .iter()
                .map(|&c| Matrix::from_i64(&[&[c]]))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn size(&self) -> usize {
        self.coefficients.first().map_or(0, |c| c.rows())
    }

    pub fn coefficients(&self) -> &[Matrix<T>] {
        &self.coefficients
    }

    pub fn constant_term(&self) -> Option<&Matrix<T>> {
        self.coefficients.first()
    }

    /// The series minus its constant term.
    pub fn tail(&self) -> Self {
        let mut coefficients = self.coefficients.clone();
        if let Some(c) = coefficients.first_mut() {
            *c = Matrix::zeros(c.rows(), c.cols());
        }
        Self { coefficients }
    }
}

/// The ring `M_n(F)[x]/(x^N)`. Its radical is the set of series with
/// vanishing constant term, and `x^N = 0` bounds nilpotency.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesRing<T> {
    n: usize,
    order: usize,
    _scalar: PhantomData<T>,
}

impl<T: Scalar> SeriesRing<T> {
    pub fn new(n: usize, order: usize) -> Self {
        Self {
            n,
            order,
            _scalar: PhantomData,
        }
    }

    fn zip(
        &self,
        x: &TruncatedSeries<T>,
        y: &TruncatedSeries<T>,
        f: impl Fn(&Matrix<T>, &Matrix<T>) -> Matrix<T>,
    ) -> TruncatedSeries<T> {
        TruncatedSeries {
            coefficients: x
                .coefficients
                .iter()
                .zip(&y.coefficients)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    fn map(
        &self,
        x: &TruncatedSeries<T>,
        f: impl Fn(&Matrix<T>) -> Matrix<T>,
    ) -> TruncatedSeries<T> {
        TruncatedSeries {
            coefficients: x.coefficients.iter().map(f).collect(),
        }
    }
}

impl<T: Scalar> RingSpace for SeriesRing<T> {
    type Elem = TruncatedSeries<T>;

    fn name(&self) -> String {
        format!("M{}(F)[x]/(x^{})", self.n, self.order)
    }

    fn contains(&self, x: &TruncatedSeries<T>) -> bool {
        x.order() == self.order && x.coefficients.iter().all(|c| c.shape() == (self.n, self.n))
    }

    fn zero(&self) -> TruncatedSeries<T> {
        TruncatedSeries::constant(Matrix::zeros(self.n, self.n), self.order)
    }

    fn one(&self) -> TruncatedSeries<T> {
        TruncatedSeries::constant(Matrix::identity(self.n), self.order)
    }

    fn add(&self, x: &TruncatedSeries<T>, y: &TruncatedSeries<T>) -> TruncatedSeries<T> {
        self.zip(x, y, |a, b| a + b)
    }

    fn neg(&self, x: &TruncatedSeries<T>) -> TruncatedSeries<T> {
        self.map(x, |a| -a)
    }

    fn sub(&self, x: &TruncatedSeries<T>, y: &TruncatedSeries<T>) -> TruncatedSeries<T> {
        self.zip(x, y, |a, b| a - b)
    }

    fn mul(&self, x: &TruncatedSeries<T>, y: &TruncatedSeries<T>) -> TruncatedSeries<T> {
        let mut out = self.zero();
        for (i, a) in x.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coefficients.iter().enumerate().take(self.order - i) {
                out.coefficients[i + j] = &out.coefficients[i + j] + &(a * b);
            }
        }
        out
    }

    fn is_zero(&self, x: &TruncatedSeries<T>) -> bool {
        x.coefficients.iter().all(Matrix::is_zero)
    }

    fn nilpotency_bound(&self) -> usize {
        self.order.max(1)
    }

    fn is_radical(&self, x: &TruncatedSeries<T>) -> bool {
        x.constant_term().is_none_or(Matrix::is_zero)
    }

    fn involution(&self, x: &TruncatedSeries<T>) -> Option<TruncatedSeries<T>> {
        Some(self.map(x, Matrix::transpose))
    }

    fn right_factor(
        &self,
        b: &TruncatedSeries<T>,
        y: &TruncatedSeries<T>,
    ) -> Result<Option<TruncatedSeries<T>>, RingError> {
        solve_linear(self, |r| self.mul(b, r), y)
    }

    fn left_factor(
        &self,
        c: &TruncatedSeries<T>,
        y: &TruncatedSeries<T>,
    ) -> Result<Option<TruncatedSeries<T>>, RingError> {
        solve_linear(self, |s| self.mul(s, c), y)
    }

    fn unit_inverse(
        &self,
        x: &TruncatedSeries<T>,
    ) -> Result<Option<TruncatedSeries<T>>, RingError> {
        let Some(a0) = x.constant_term() else {
            return Ok(Some(x.clone()));
        };
        let Some(inv0) = crate::matrix::inverse(a0)? else {
            return Ok(None);
        };
        let inv0 = TruncatedSeries::constant(inv0, self.order);
        let n = self.mul(&inv0, &x.tail());
        Ok(Some(self.mul(&inverse_one_plus(self, &n)?, &inv0)))
    }

    fn inner_inverse(
        &self,
        x: &TruncatedSeries<T>,
    ) -> Result<Option<TruncatedSeries<T>>, RingError> {
        linear_inner_inverse(self, x)
    }

    fn bc_inverse(
        &self,
        a: &TruncatedSeries<T>,
        b: &TruncatedSeries<T>,
        c: &TruncatedSeries<T>,
    ) -> Result<Option<TruncatedSeries<T>>, RingError> {
        linear_bc_inverse(self, a, b, c)
    }
}

impl<T: Scalar> LinearAlgebra for SeriesRing<T> {
    type Field = T;

    fn dim(&self) -> usize {
        self.order * self.n * self.n
    }

    fn coords(&self, x: &TruncatedSeries<T>) -> Vec<T> {
        x.coefficients
            .iter()
            .flat_map(|c| c.entries().to_vec())
            .collect()
    }

    fn assemble(&self, v: &[T]) -> TruncatedSeries<T> {
        let block = self.n * self.n;
        TruncatedSeries {
            coefficients: (0..self.order)
                .map(|i| {
                    Matrix::new(self.n, self.n, v[i * block..(i + 1) * block].to_vec())
                        .expect("block length")
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct SeriesBcReport<T: Scalar> {
    /// `a_0^{‖(b_0,c_0)}`; its absence alone rules the inverse out.
    pub constant_inverse: Option<Matrix<T>>,
    /// Perturbation report with `j_a, j_b, j_c` the tails of `a, b, c`.
    pub perturbation: Option<BcPerturbation<TruncatedSeries<T>>>,
    pub inverse: Option<TruncatedSeries<T>>,
}

/// `(Σ a_i x^i)^{‖(Σ b_i x^i, Σ c_i x^i)}` from the constant terms and the
/// tails.
pub fn series_bc_inverse<T: Scalar>(
    a: &TruncatedSeries<T>,
    b: &TruncatedSeries<T>,
    c: &TruncatedSeries<T>,
) -> Result<SeriesBcReport<T>, RingError> {
    let space = SeriesRing::<T>::new(a.size(), a.order());
    for s in [a, b, c] {
        crate::ring::require_member(&space, s)?;
    }
    if a.order() == 0 {
        return Err(RingError::Precondition("series of order 0".into()));
    }
    let base = MatrixRing::<T>::new(a.size());
    let (a0, b0, c0) = (&a.coefficients[0], &b.coefficients[0], &c.coefficients[0]);
    let Some(x0) = base.bc_inverse(a0, b0, c0)? else {
        return Ok(SeriesBcReport {
            constant_inverse: None,
            perturbation: None,
            inverse: None,
        });
    };
    let (Some(bp), Some(cp)) = (base.reflexive_inverse(b0)?, base.reflexive_inverse(c0)?) else {
        unreachable!("b_0 and c_0 are regular once a_0^{{‖(b_0,c_0)}} exists")
    };
    let order = a.order();
    let lift = |m: &Matrix<T>| TruncatedSeries::constant(m.clone(), order);
    let input = PerturbationInput {
        a: lift(a0),
        b: lift(b0),
        c: lift(c0),
        a_bc: lift(&x0),
        b_plus: lift(&bp),
        c_plus: lift(&cp),
        j_a: a.tail(),
        j_b: b.tail(),
        j_c: c.tail(),
    };
    let rep = perturb_bc(&space, &input)?;
    Ok(SeriesBcReport {
        constant_inverse: Some(x0),
        inverse: rep.perturbed_inverse.clone(),
        perturbation: Some(rep),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{verify_inverse, InverseKind};
    use crate::Rational;

    type S = TruncatedSeries<Rational>;

    #[test]
    fn one_plus_x_inverts_to_alternating_series() {
        let a = S::scalar(&[1, 1, 0]);
        let one = S::scalar(&[1, 0, 0]);
        let rep = series_bc_inverse(&a, &one, &one).unwrap();
        assert_eq!(rep.inverse, Some(S::scalar(&[1, -1, 1])));
    }

    #[test]
    fn zero_constant_term_has_no_unit_prescribed_inverse() {
        let a = S::scalar(&[0, 1, 0]);
        let one = S::scalar(&[1, 0, 0]);
        let rep = series_bc_inverse(&a, &one, &one).unwrap();
        assert!(rep.constant_inverse.is_none());
        assert!(rep.inverse.is_none());
        let ring = SeriesRing::<Rational>::new(1, 3);
        assert_eq!(ring.bc_inverse(&a, &one, &one).unwrap(), None);
    }

    #[test]
    fn truncation_kills_high_powers() {
        let ring = SeriesRing::<Rational>::new(1, 3);
        let x = S::scalar(&[0, 1, 0]);
        assert_eq!(ring.pow(&x, 2), S::scalar(&[0, 0, 1]));
        assert!(ring.is_zero(&ring.pow(&x, 3)));
    }

    #[test]
    fn zero_tails_reduce_to_matrices() {
        let a = Matrix::from_i64(&[&[1, 1], &[0, 0]]);
        let p = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let rep = series_bc_inverse(
            &S::constant(a.clone(), 2),
            &S::constant(p.clone(), 2),
            &S::constant(p.clone(), 2),
        )
        .unwrap();
        let want = crate::matrix::bc_inverse(&a, &p, &p).unwrap();
        assert_eq!(rep.inverse, Some(S::constant(want, 2)));
    }

    #[test]
    fn linear_route_agrees_on_a_matrix_instance() {
        let ring = SeriesRing::<Rational>::new(2, 2);
        let a = S::new(vec![
            Matrix::from_i64(&[&[1, 0], &[0, 0]]),
            Matrix::from_i64(&[&[0, 1], &[1, 0]]),
        ])
        .unwrap();
        let b = S::new(vec![
            Matrix::from_i64(&[&[1, 0], &[0, 0]]),
            Matrix::from_i64(&[&[0, 0], &[2, 0]]),
        ])
        .unwrap();
        let rep = series_bc_inverse(&a, &b, &b).unwrap();
        let direct = ring.bc_inverse(&a, &b, &b).unwrap();
        assert_eq!(rep.inverse, direct);
        let y = rep.inverse.unwrap();
        assert!(
            verify_inverse(&ring, &InverseKind::Bc(b.clone(), b), &a, &y, None)
                .unwrap()
                .passed
        );
    }
}
