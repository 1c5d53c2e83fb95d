use thiserror::Error;

use super::echelon::{determinant, inverse, rank, rref, solve, solve_left};
use super::{Matrix, MatrixError};
use crate::scalar::Scalar;

/// Why a generalized inverse could not be produced. Everything except
/// [`InverseError::Input`] is a certified nonexistence.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InverseError<T: Scalar> {
    #[error(transparent)]
    Input(#[from] MatrixError),
    #[error("no group inverse: HG = {hg} is singular (det = {det})")]
    NoGroupInverse { hg: Matrix<T>, det: T },
    #[error("no (B,C)-inverse: rank(CAB) = {rank_cab}, rank(B) = {rank_b}, rank(C) = {rank_c}")]
    NoBcInverse {
        rank_cab: usize,
        rank_b: usize,
        rank_c: usize,
    },
    #[error("no Moore-Penrose inverse: {0} is singular")]
    NoMoorePenrose(&'static str),
    #[error("no core inverse: {0}")]
    NoCoreInverse(&'static str),
    #[error("matrix is not regular (no X with AXA = A)")]
    NotRegular,
}

/// `A = G·H` with `G` of full column rank and `H` of full row rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullRankFactorization<T: Scalar> {
    pub g: Matrix<T>,
    pub h: Matrix<T>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrazinResult<T: Scalar> {
    pub inverse: Matrix<T>,
    /// Minimal `k` with `rank(A^k) = rank(A^{k+1})`.
    pub index: usize,
}

/// Which side of `Y ∈ B·R ∩ R·C` has no solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorSide {
    /// No `R` with `Y = B·R`.
    Left,
    /// No `S` with `Y = S·C`.
    Right,
    Both,
}

/// `G` = pivot columns of `A`, `H` = nonzero rows of its reduced echelon form.
/// Rank 0 gives genuinely empty `m x 0` and `0 x n` factors.
pub fn full_rank_factorize<T: Scalar>(
    a: &Matrix<T>,
) -> Result<FullRankFactorization<T>, MatrixError> {
    let r = rref(a)?;
    let rows: Vec<usize> = (0..r.rank).collect();
    Ok(FullRankFactorization {
        g: a.select_columns(&r.pivots),
        h: r.reduced.select_rows(&rows),
        rank: r.rank,
    })
}

/// `A† = Hᵀ(HHᵀ)⁻¹(GᵀG)⁻¹Gᵀ` with respect to the transpose. Always exists
/// over ℚ; over a finite field the Gram factors may be singular.
pub fn mp_inverse<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>, InverseError<T>> {
    let FullRankFactorization { g, h, .. } = full_rank_factorize(a)?;
    let ht = h.transpose();
    let gt = g.transpose();
    let hh = inverse(&(&h * &ht))?.ok_or(InverseError::NoMoorePenrose("HHᵀ"))?;
    let gg = inverse(&(&gt * &g))?.ok_or(InverseError::NoMoorePenrose("GᵀG"))?;
    Ok(&(&(&ht * &hh) * &gg) * &gt)
}

/// A `{1,2}`-inverse. The canonical choice is the Moore-Penrose inverse when
/// it exists; otherwise `H_r⁻¹·G_l⁻¹` built from one-sided inverses of the
/// full-rank factors. Over a non-field modulus, falls back to enumeration.
pub fn reflexive_inverse<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>, InverseError<T>> {
    if !T::is_field() {
        let x = enumerate_one_inverse(a)?.ok_or(InverseError::NotRegular)?;
        return Ok(&(&x * a) * &x);
    }
    match mp_inverse(a) {
        Ok(x) => Ok(x),
        Err(InverseError::NoMoorePenrose(_)) => {
            let f = full_rank_factorize(a)?;
            let id = Matrix::identity(f.rank);
            let g_left = solve_left(&f.g, &id)?.expect("full column rank has a left inverse");
            let h_right = solve(&f.h, &id)?.expect("full row rank has a right inverse");
            Ok(&h_right * &g_left)
        }
        Err(e) => Err(e),
    }
}

/// A `{1}`-inverse: the reflexive inverse over a field, the first solution of
/// `AXA = A` in enumeration order otherwise.
pub fn one_inverse<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>, InverseError<T>> {
    if T::is_field() {
        reflexive_inverse(a)
    } else {
        enumerate_one_inverse(a)?.ok_or(InverseError::NotRegular)
    }
}

const ENUMERATION_BUDGET: u128 = 1_000_000;

fn enumerate_one_inverse<T: Scalar>(a: &Matrix<T>) -> Result<Option<Matrix<T>>, MatrixError> {
    let Some(elems) = T::elements() else {
        return Err(MatrixError::NotAField(0));
    };
    let (m, n) = a.shape();
    let cells = n * m;
    let total = (elems.len() as u128)
        .checked_pow(cells as u32)
        .unwrap_or(u128::MAX);
    if total > ENUMERATION_BUDGET {
        return Err(MatrixError::Budget(total));
    }
    let mut digits = vec![0usize; cells];
    loop {
        let x = Matrix::from_fn(n, m, |i, j| elems[digits[i * m + j]].clone());
        if &(a * &x) * a == *a {
            return Ok(Some(x));
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == cells {
                return Ok(None);
            }
            digits[pos] += 1;
            if digits[pos] < elems.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// `A# = G(HG)⁻²H`; exists iff `HG` is invertible.
pub fn group_inverse<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>, InverseError<T>> {
    a.require_square()?;
    let FullRankFactorization { g, h, .. } = full_rank_factorize(a)?;
    let hg = &h * &g;
    match inverse(&hg)? {
        Some(inv) => Ok(&(&(&g * &inv) * &inv) * &h),
        None => {
            let det = determinant(&hg)?;
            Err(InverseError::NoGroupInverse { hg, det })
        }
    }
}

/// `A^⊛ = G(HG)⁻¹(GᵀG)⁻¹Gᵀ`, i.e. `A# A A†`.
pub fn core_inverse<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>, InverseError<T>> {
    a.require_square()?;
    let FullRankFactorization { g, h, .. } = full_rank_factorize(a)?;
    let hg = inverse(&(&h * &g))?.ok_or(InverseError::NoCoreInverse("HG is singular"))?;
    let gt = g.transpose();
    let gg = inverse(&(&gt * &g))?.ok_or(InverseError::NoCoreInverse("GᵀG is singular"))?;
    Ok(&(&(&g * &hg) * &gg) * &gt)
}

/// Drazin inverse with minimal index, via `A^D = A^k (A^{2k+1})# A^k`.
pub fn drazin_inverse<T: Scalar>(a: &Matrix<T>) -> Result<DrazinResult<T>, InverseError<T>> {
    a.require_square()?;
    let n = a.rows();
    let mut k = 0;
    let mut power = Matrix::identity(n);
    let mut power_rank = n;
    loop {
        let next = &power * a;
        let next_rank = rank(&next)?;
        if next_rank == power_rank {
            break;
        }
        power = next;
        power_rank = next_rank;
        k += 1;
    }
    let big = a.pow(2 * k + 1)?;
    let big_group = group_inverse(&big)?;
    Ok(DrazinResult {
        inverse: &(&power * &big_group) * &power,
        index: k,
    })
}

/// `A^{‖(B,C)} = B(CAB)⁻C`, existing iff `rank(CAB) = rank(B) = rank(C)`.
/// Shapes: `C` is `t x m`, `A` is `m x n`, `B` is `n x s`.
pub fn bc_inverse<T: Scalar>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    c: &Matrix<T>,
) -> Result<Matrix<T>, InverseError<T>> {
    let cab = c.checked_mul(a)?.checked_mul(b)?;
    let rank_cab = rank(&cab)?;
    let rank_b = rank(b)?;
    let rank_c = rank(c)?;
    if rank_cab != rank_b || rank_b != rank_c {
        return Err(InverseError::NoBcInverse {
            rank_cab,
            rank_b,
            rank_c,
        });
    }
    let inner = reflexive_inverse(&cab)?;
    Ok(&(b * &inner) * c)
}

/// `(R, S)` with `Y = B·R` and `Y = S·C`, or the side that has none.
pub type Factors<T> = Result<(Matrix<T>, Matrix<T>), FactorSide>;

/// Witnesses `R`, `S` with `Y = B·R` and `Y = S·C`.
pub fn factor_through<T: Scalar>(
    y: &Matrix<T>,
    b: &Matrix<T>,
    c: &Matrix<T>,
) -> Result<Factors<T>, MatrixError> {
    let r = solve(b, y)?;
    let s = solve_left(c, y)?;
    Ok(match (r, s) {
        (Some(r), Some(s)) => Ok((r, s)),
        (None, Some(_)) => Err(FactorSide::Left),
        (Some(_), None) => Err(FactorSide::Right),
        (None, None) => Err(FactorSide::Both),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, ModInt};
    use crate::QMatrix;

    fn quarter_ones() -> QMatrix {
        QMatrix::from_i64(&[&[1, 1], &[1, 1]]).scale(&q(1, 4))
    }

    #[test]
    fn full_rank_examples() {
        let a = QMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        let f = full_rank_factorize(&a).unwrap();
        assert_eq!(f.g, QMatrix::from_i64(&[&[1], &[1]]));
        assert_eq!(f.h, QMatrix::from_i64(&[&[1, 1]]));
        let i = full_rank_factorize(&QMatrix::identity(3)).unwrap();
        assert_eq!((i.g, i.h), (QMatrix::identity(3), QMatrix::identity(3)));
        let z = full_rank_factorize(&QMatrix::zeros(2, 3)).unwrap();
        assert_eq!((z.g.shape(), z.h.shape(), z.rank), ((2, 0), (0, 3), 0));
        assert_eq!(&z.g * &z.h, QMatrix::zeros(2, 3));
    }

    #[test]
    fn mp_examples() {
        let a = QMatrix::from_i64(&[&[1, 1], &[0, 0]]);
        let expected = QMatrix::from_rows(vec![vec![q(1, 2), q(0, 1)], vec![q(1, 2), q(0, 1)]]);
        assert_eq!(mp_inverse(&a).unwrap(), expected);
        assert_eq!(
            mp_inverse(&QMatrix::identity(2)).unwrap(),
            QMatrix::identity(2)
        );
        assert_eq!(
            mp_inverse(&QMatrix::zeros(2, 3)).unwrap(),
            QMatrix::zeros(3, 2)
        );
    }

    #[test]
    fn reflexive_examples() {
        let p = QMatrix::from_i64(&[&[1, 0], &[0, 0]]);
        assert_eq!(reflexive_inverse(&p).unwrap(), p);
        let ones = QMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(reflexive_inverse(&ones).unwrap(), quarter_ones());
        let two = Matrix::<ModInt<4>>::from_i64(&[&[2]]);
        assert_eq!(reflexive_inverse(&two), Err(InverseError::NotRegular));
        assert_eq!(one_inverse(&two), Err(InverseError::NotRegular));
    }

    #[test]
    fn reflexive_over_finite_field_without_mp() {
        // [1 1] over Z2: HHᵀ = [2] = 0, so no MP inverse, but reflexive ones exist.
        let a = Matrix::<ModInt<2>>::from_i64(&[&[1, 1]]);
        assert!(matches!(
            mp_inverse(&a),
            Err(InverseError::NoMoorePenrose(_))
        ));
        let x = reflexive_inverse(&a).unwrap();
        assert_eq!(&(&a * &x) * &a, a);
        assert_eq!(&(&x * &a) * &x, x);
    }

    #[test]
    fn group_examples() {
        let ones = QMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(group_inverse(&ones).unwrap(), quarter_ones());
        let n = QMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        match group_inverse(&n) {
            Err(InverseError::NoGroupInverse { hg, det }) => {
                assert_eq!(hg, QMatrix::from_i64(&[&[0]]));
                assert_eq!(det, q(0, 1));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            group_inverse(&QMatrix::identity(2)).unwrap(),
            QMatrix::identity(2)
        );
    }

    #[test]
    fn drazin_examples() {
        let n = QMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        let d = drazin_inverse(&n).unwrap();
        assert_eq!((d.inverse, d.index), (QMatrix::zeros(2, 2), 2));
        let a = QMatrix::from_i64(&[&[2, 0], &[0, 0]]);
        let d = drazin_inverse(&a).unwrap();
        assert_eq!(d.index, 1);
        assert_eq!(d.inverse, QMatrix::diagonal(&[q(1, 2), q(0, 1)]));
        let d = drazin_inverse(&QMatrix::identity(2)).unwrap();
        assert_eq!((d.inverse, d.index), (QMatrix::identity(2), 0));
    }

    #[test]
    fn bc_examples() {
        let i = QMatrix::identity(2);
        let p = QMatrix::from_i64(&[&[1, 0], &[0, 0]]);
        let p2 = QMatrix::from_i64(&[&[0, 0], &[0, 1]]);
        assert_eq!(bc_inverse(&i, &p, &p).unwrap(), p);
        assert_eq!(
            bc_inverse(&i, &p, &p2),
            Err(InverseError::NoBcInverse {
                rank_cab: 0,
                rank_b: 1,
                rank_c: 1
            })
        );
        assert_eq!(bc_inverse(&i, &i, &i).unwrap(), i);
    }

    #[test]
    fn factor_through_examples() {
        let p = QMatrix::from_i64(&[&[1, 0], &[0, 0]]);
        let (r, s) = factor_through(&p, &p, &p).unwrap().unwrap();
        assert_eq!(&p * &r, p);
        assert_eq!(&s * &p, p);
        let y = QMatrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert_eq!(factor_through(&y, &p, &p).unwrap(), Err(FactorSide::Left));
        let z = QMatrix::zeros(2, 2);
        let (r, s) = factor_through(&z, &p, &p).unwrap().unwrap();
        assert!(r.is_zero() && s.is_zero());
    }
}
