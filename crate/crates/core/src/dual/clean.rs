//! Clean decompositions of square dual matrices.

use serde::Serialize;

use super::{
    dual_drazin, dual_generalized_inverse, dual_unit_inverse, regularity_certificate, DualError,
    DualKind, DualMatrix, DualMatrixRing,
};
use crate::matrix::{inverse, rank, rref, Matrix};
use crate::perturb::special_clean_transfer;
use crate::scalar::Scalar;

/// `Ê = I - ÂÂ^D`, `Û = Â - Ê`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct StronglyCleanVerdict<T: Scalar> {
    pub drazin: DualMatrix<T>,
    pub index: usize,
    pub idempotent: DualMatrix<T>,
    pub unit: DualMatrix<T>,
    pub idempotent_ok: bool,
    pub commutes: bool,
    pub unit_ok: bool,
}

impl<T: Scalar> StronglyCleanVerdict<T> {
    pub fn holds(&self) -> bool {
        self.idempotent_ok && self.commutes && self.unit_ok
    }
}

/// `Ê = I - ẐẐ#`, `Û = Â - Ê` for a group invertible reflexive inverse `Ẑ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct SpecialCleanVerdict<T: Scalar> {
    pub regular: bool,
    /// `(I - AA⁺)A₀(I - A⁺A)`
    pub residual: Matrix<T>,
    /// Group invertible reflexive inverse of `A`.
    pub z0: Option<Matrix<T>>,
    pub reflexive_inverse: Option<DualMatrix<T>>,
    pub group_inverse: Option<DualMatrix<T>>,
    pub idempotent: Option<DualMatrix<T>>,
    pub unit: Option<DualMatrix<T>>,
    pub idempotent_ok: Option<bool>,
    pub unit_ok: Option<bool>,
    /// `ÂR ∩ ÊR = 0`
    pub trivial_intersection: Option<bool>,
}

impl<T: Scalar> SpecialCleanVerdict<T> {
    pub fn holds(&self) -> bool {
        self.regular
            && self.idempotent_ok == Some(true)
            && self.unit_ok == Some(true)
            && self.trivial_intersection == Some(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct CleanFacts<T: Scalar> {
    pub strongly: StronglyCleanVerdict<T>,
    pub special: SpecialCleanVerdict<T>,
}

fn first_independent<T: Scalar>(
    basis: &Matrix<T>,
    candidates: impl Iterator<Item = Matrix<T>>,
    also: &[&Matrix<T>],
) -> Result<Option<Matrix<T>>, DualError> {
    let base = rank(basis)?;
    let others: Vec<usize> = also.iter().map(|m| rank(m)).collect::<Result<_, _>>()?;
    for v in candidates {
        if rank(&basis.hstack(&v)?)? != base + 1 {
            continue;
        }
        let mut ok = true;
        for (m, r) in also.iter().zip(&others) {
            if rank(&m.hstack(&v)?)? != r + 1 {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

fn null_space<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>, DualError> {
    let r = rref(a)?;
    let n = a.cols();
    let free: Vec<usize> = (0..n).filter(|j| !r.pivots.contains(j)).collect();
    Ok(Matrix::from_fn(n, free.len(), |i, k| {
        let f = free[k];
        if i == f {
            T::one()
        } else if let Some(p) = r.pivots.iter().position(|&c| c == i) {
            -r.reduced.get(p, f).clone()
        } else {
            T::zero()
        }
    }))
}

/// A reflexive inverse of a square `A` with a group inverse: `z₀` maps `AW`
/// back onto `W` and kills `K`, where `K` complements `R(A)` and `W` is a
/// common complement of `N(A)` and `K`.
pub fn group_invertible_reflexive<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>, DualError> {
    a.require_square()?;
    let n = a.rows();
    let unit = |i: usize| Matrix::from_fn(n, 1, |r, _| if r == i { T::one() } else { T::zero() });
    let mut k = Matrix::zeros(n, 0);
    let mut span = a.clone();
    let r = rank(a)?;
    while k.cols() < n - r {
        let v = first_independent(&span, (0..n).map(unit), &[])?.expect("standard basis spans");
        span = span.hstack(&v)?;
        k = k.hstack(&v)?;
    }
    let kernel = null_space(a)?;
    let mut w = Matrix::zeros(n, 0);
    let moment = |t: i64| {
        let mut x = T::one();
        let t = T::from_i64(t);
        Matrix::from_fn(n, 1, |_, _| {
            let cur = x.clone();
            x = x.clone() * t.clone();
            cur
        })
    };
    while w.cols() < r {
        // A proper subspace holds at most n - 1 points of the moment curve.
        let limit = 2 * n as i64 * (w.cols() as i64 + 1) + 1;
        let v = first_independent(
            &kernel.hstack(&w)?,
            (0..limit).map(moment),
            &[&k.hstack(&w)?],
        )?
        .ok_or_else(|| DualError::Input("no common complement found".into()))?;
        w = w.hstack(&v)?;
    }
    let basis = (a * &w).hstack(&k)?;
    let inv = inverse(&basis)?.expect("AW and K are complementary");
    Ok(&w.hstack(&Matrix::zeros(n, k.cols()))? * &inv)
}

fn strongly_clean<T: Scalar>(a: &DualMatrix<T>) -> Result<StronglyCleanVerdict<T>, DualError> {
    let (drazin, index) = dual_drazin(a)?
        .ok_or_else(|| DualError::Input("no Drazin inverse found within the index bound".into()))?;
    let n = a.rows();
    let e = &DualMatrix::identity(n) - &(a * &drazin);
    let u = a - &e;
    Ok(StronglyCleanVerdict {
        idempotent_ok: &e * &e == e,
        commutes: &e * a == a * &e,
        unit_ok: dual_unit_inverse(&u)?.is_some(),
        drazin,
        index,
        idempotent: e,
        unit: u,
    })
}

/// Trivial intersection of the column modules, via ranks of the block forms.
fn trivially_meet<T: Scalar>(x: &DualMatrix<T>, y: &DualMatrix<T>) -> Result<bool, DualError> {
    let (bx, by) = (x.block_form(), y.block_form());
    Ok(rank(&bx.hstack(&by)?)? == rank(&bx)? + rank(&by)?)
}

fn special_clean<T: Scalar>(a: &DualMatrix<T>) -> Result<SpecialCleanVerdict<T>, DualError> {
    let cert = regularity_certificate(a, None)?;
    let mut out = SpecialCleanVerdict {
        regular: cert.regular,
        residual: cert.residual,
        z0: None,
        reflexive_inverse: None,
        group_inverse: None,
        idempotent: None,
        unit: None,
        idempotent_ok: None,
        unit_ok: None,
        trivial_intersection: None,
    };
    if !out.regular {
        return Ok(out);
    }
    let n = a.rows();
    let z0 = group_invertible_reflexive(a.real())?;
    let ring = DualMatrixRing::<T>::new(n);
    let rep = special_clean_transfer(
        &ring,
        &DualMatrix::from_real(a.real().clone()),
        &DualMatrix::from_real(z0.clone()),
        &DualMatrix::epsilon(a.dual().clone()),
    )?;
    out.z0 = Some(z0);
    let Some(z) = rep.inverse else {
        return Ok(out);
    };
    let group = dual_generalized_inverse(&DualKind::Group, &z)?.witness;
    if let Some(zg) = &group {
        let e = &DualMatrix::identity(n) - &(&z * zg);
        let u = a - &e;
        out.idempotent_ok = Some(&e * &e == e);
        out.unit_ok = Some(dual_unit_inverse(&u)?.is_some());
        out.trivial_intersection = Some(trivially_meet(a, &e)?);
        out.idempotent = Some(e);
        out.unit = Some(u);
    }
    out.reflexive_inverse = Some(z);
    out.group_inverse = group;
    Ok(out)
}

pub fn clean_facts<T: Scalar>(a: &DualMatrix<T>) -> Result<CleanFacts<T>, DualError> {
    a.require_square()?;
    Ok(CleanFacts {
        strongly: strongly_clean(a)?,
        special: special_clean(a)?,
    })
}
