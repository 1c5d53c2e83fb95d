use super::{Matrix, MatrixError};
use crate::scalar::Scalar;

/// Reduced row echelon form together with the row operations that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref<T: Scalar> {
    pub reduced: Matrix<T>,
    pub pivots: Vec<usize>,
    pub rank: usize,
    /// Invertible `m x m` matrix with `transform · A = reduced`.
    pub transform: Matrix<T>,
}

fn require_field<T: Scalar>() -> Result<(), MatrixError> {
    if T::is_field() {
        Ok(())
    } else {
        Err(MatrixError::NotAField(T::modulus().unwrap_or(0)))
    }
}

/// Gauss-Jordan elimination over an exact field.
pub fn rref<T: Scalar>(a: &Matrix<T>) -> Result<Rref<T>, MatrixError> {
    require_field::<T>()?;
    let (m, n) = a.shape();
    let mut r = a.clone();
    let mut e = Matrix::identity(m);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        let Some(p) = (row..m).find(|&i| !r.get(i, col).is_zero()) else {
            continue;
        };
        swap_rows(&mut r, row, p);
        swap_rows(&mut e, row, p);
        let inv = r.get(row, col).inverse().expect("nonzero pivot in a field");
        scale_row(&mut r, row, &inv);
        scale_row(&mut e, row, &inv);
        for i in 0..m {
            if i == row {
                continue;
            }
            let factor = r.get(i, col).clone();
            if factor.is_zero() {
                continue;
            }
            add_row_multiple(&mut r, i, row, &factor);
            add_row_multiple(&mut e, i, row, &factor);
        }
        pivots.push(col);
        row += 1;
    }
    Ok(Rref {
        rank: pivots.len(),
        reduced: r,
        pivots,
        transform: e,
    })
}

fn swap_rows<T: Scalar>(m: &mut Matrix<T>, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..m.cols() {
        let a = m.get(i, c).clone();
        let b = m.get(j, c).clone();
        m.set(i, c, b);
        m.set(j, c, a);
    }
}

fn scale_row<T: Scalar>(m: &mut Matrix<T>, i: usize, s: &T) {
    for c in 0..m.cols() {
        let v = s.clone() * m.get(i, c).clone();
        m.set(i, c, v);
    }
}

/// row_i -= factor · row_src
fn add_row_multiple<T: Scalar>(m: &mut Matrix<T>, i: usize, src: usize, factor: &T) {
    for c in 0..m.cols() {
        let v = m.get(i, c).clone() - factor.clone() * m.get(src, c).clone();
        m.set(i, c, v);
    }
}

pub fn rank<T: Scalar>(a: &Matrix<T>) -> Result<usize, MatrixError> {
    Ok(rref(a)?.rank)
}

/// Some `X` with `A·X = B`, free variables set to zero; `None` when the
/// system is inconsistent.
pub fn solve<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Option<Matrix<T>>, MatrixError> {
    if a.rows() != b.rows() {
        return Err(MatrixError::Shape {
            op: "solve",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let n = a.cols();
    let aug = rref(&a.hstack(b)?)?;
    if aug.pivots.iter().any(|&p| p >= n) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(n, b.cols());
    for (row, &p) in aug.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(p, j, aug.reduced.get(row, n + j).clone());
        }
    }
    Ok(Some(x))
}

/// Some `S` with `S·C = Y`.
pub fn solve_left<T: Scalar>(
    c: &Matrix<T>,
    y: &Matrix<T>,
) -> Result<Option<Matrix<T>>, MatrixError> {
    Ok(solve(&c.transpose(), &y.transpose())?.map(|s| s.transpose()))
}

pub fn inverse<T: Scalar>(a: &Matrix<T>) -> Result<Option<Matrix<T>>, MatrixError> {
    a.require_square()?;
    let r = rref(a)?;
    Ok((r.rank == a.rows()).then_some(r.transform))
}

pub fn determinant<T: Scalar>(a: &Matrix<T>) -> Result<T, MatrixError> {
    a.require_square()?;
    require_field::<T>()?;
    let n = a.rows();
    let mut m = a.clone();
    let mut det = T::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m.get(i, col).is_zero()) else {
            return Ok(T::zero());
        };
        if p != col {
            swap_rows(&mut m, p, col);
            det = -det;
        }
        let pivot = m.get(col, col).clone();
        det = det * pivot.clone();
        let inv = pivot.inverse().expect("nonzero pivot in a field");
        for i in col + 1..n {
            let factor = m.get(i, col).clone() * inv.clone();
            if !factor.is_zero() {
                add_row_multiple(&mut m, i, col, &factor);
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, ModInt};
    use crate::QMatrix;

    #[test]
    fn rref_of_identity() {
        let r = rref(&QMatrix::identity(2)).unwrap();
        assert_eq!(r.reduced, QMatrix::identity(2));
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);
        assert_eq!(r.transform, QMatrix::identity(2));
    }

    #[test]
    fn rref_of_ones() {
        let a = QMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        let r = rref(&a).unwrap();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(&r.transform * &a, r.reduced);
        assert_eq!(r.reduced, QMatrix::from_i64(&[&[1, 1], &[0, 0]]));
    }

    #[test]
    fn rref_of_zero() {
        let r = rref(&QMatrix::zeros(2, 2)).unwrap();
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn composite_modulus_is_rejected() {
        let a = Matrix::<ModInt<4>>::from_i64(&[&[2]]);
        assert_eq!(rank(&a), Err(MatrixError::NotAField(4)));
    }

    #[test]
    fn solve_and_inconsistency() {
        let a = QMatrix::from_i64(&[&[1, 0], &[0, 0]]);
        assert_eq!(solve(&a, &QMatrix::from_i64(&[&[0], &[1]])).unwrap(), None);
        let x = solve(&a, &QMatrix::from_i64(&[&[3], &[0]]))
            .unwrap()
            .unwrap();
        assert_eq!(&a * &x, QMatrix::from_i64(&[&[3], &[0]]));
    }

    #[test]
    fn determinant_and_inverse() {
        let a = QMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        assert_eq!(determinant(&a).unwrap(), q(1, 1));
        let inv = inverse(&a).unwrap().unwrap();
        assert_eq!(&a * &inv, QMatrix::identity(2));
        assert_eq!(
            determinant(&QMatrix::from_i64(&[&[0, 1], &[0, 0]])).unwrap(),
            q(0, 1)
        );
        assert_eq!(
            determinant(&QMatrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap(),
            q(-1, 1)
        );
        assert_eq!(
            inverse(&QMatrix::from_i64(&[&[1, 1], &[1, 1]])).unwrap(),
            None
        );
    }
}
