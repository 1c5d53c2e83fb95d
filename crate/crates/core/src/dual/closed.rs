//! Closed forms through full-rank factorizations `A = GH` and radical
//! splits `Â = (I + εA₁)A(I + εA₂)`.

use serde::Serialize;

use super::regular::resolve_reflexive;
use super::{dual_unit_inverse, radical_split, DualError, DualKind, DualMatrix};
use crate::matrix::{
    bc_inverse, drazin_inverse, full_rank_factorize, FullRankFactorization, InverseError, Matrix,
};
use crate::scalar::Scalar;

/// `Ĝ = (I + εA₁)G` and `Ĥ = H(I + εA₂)`, so that `Â = ĜĤ`.
struct DualFactors<T: Scalar> {
    g: DualMatrix<T>,
    h: DualMatrix<T>,
}

fn dual_factors<T: Scalar>(a: &DualMatrix<T>) -> Result<Option<DualFactors<T>>, DualError> {
    let Some(split) = radical_split(a)? else {
        return Ok(None);
    };
    let FullRankFactorization { g, h, .. } = full_rank_factorize(a.real())?;
    let left = &DualMatrix::identity(a.rows()) + &DualMatrix::epsilon(split.a1);
    let right = &DualMatrix::identity(a.cols()) + &DualMatrix::epsilon(split.a2);
    let g = &left * &DualMatrix::from_real(g);
    let h = &DualMatrix::from_real(h) * &right;
    debug_assert_eq!(&(&g * &h), a);
    Ok(Some(DualFactors { g, h }))
}

fn unit_inverse<T: Scalar>(m: &DualMatrix<T>) -> Result<Option<DualMatrix<T>>, DualError> {
    Ok(dual_unit_inverse(m)?)
}

/// `Â^{‖D̂} = (I + εD₁)G·Ẑ⁻¹·H(I + εD₂)` with `Ẑ = H(I + εD₂)Â(I + εD₁)G`.
pub fn closed_along<T: Scalar>(
    a: &DualMatrix<T>,
    d: &DualMatrix<T>,
) -> Result<Option<DualMatrix<T>>, DualError> {
    if d.shape() != (a.cols(), a.rows()) {
        return Err(DualError::Input(format!(
            "D̂ is {:?}, expected {:?} for Â of shape {:?}",
            d.shape(),
            (a.cols(), a.rows()),
            a.shape()
        )));
    }
    let Some(DualFactors { g, h }) = dual_factors(d)? else {
        return Ok(None);
    };
    let z = &(&h * a) * &g;
    Ok(unit_inverse(&z)?.map(|zi| &(&g * &zi) * &h))
}

/// `Â† = (I + εA₂ᵀ)Hᵀ(HHᵀ + εHA₂Hᵀ + εHA₂ᵀHᵀ)⁻¹(GᵀG + εGᵀA₁ᵀG + εGᵀA₁G)⁻¹Gᵀ(I + εA₁ᵀ)`
pub fn closed_mp<T: Scalar>(a: &DualMatrix<T>) -> Result<Option<DualMatrix<T>>, DualError> {
    let Some(DualFactors { g, h }) = dual_factors(a)? else {
        return Ok(None);
    };
    let (gt, ht) = (g.transpose(), h.transpose());
    let (Some(hh), Some(gg)) = (unit_inverse(&(&h * &ht))?, unit_inverse(&(&gt * &g))?) else {
        return Ok(None);
    };
    Ok(Some(&(&(&ht * &hh) * &gg) * &gt))
}

/// `Â# = (I + εA₁)G·Ŵ⁻²·H(I + εA₂)` with `Ŵ = H(I + εA₂)(I + εA₁)G`.
pub fn closed_group<T: Scalar>(a: &DualMatrix<T>) -> Result<Option<DualMatrix<T>>, DualError> {
    a.require_square()?;
    let Some(DualFactors { g, h }) = dual_factors(a)? else {
        return Ok(None);
    };
    let Some(wi) = unit_inverse(&(&h * &g))? else {
        return Ok(None);
    };
    Ok(Some(&(&(&g * &wi) * &wi) * &h))
}

/// `Â^⊛ = (I + εA₁)G·Ŵ⁻¹·(GᵀG + εGᵀA₁ᵀG + εGᵀA₁G)⁻¹·Gᵀ(I + εA₁ᵀ)`
pub fn closed_core<T: Scalar>(a: &DualMatrix<T>) -> Result<Option<DualMatrix<T>>, DualError> {
    a.require_square()?;
    let Some(DualFactors { g, h }) = dual_factors(a)? else {
        return Ok(None);
    };
    let gt = g.transpose();
    let (Some(wi), Some(gg)) = (unit_inverse(&(&h * &g))?, unit_inverse(&(&gt * &g))?) else {
        return Ok(None);
    };
    Ok(Some(&(&(&g * &wi) * &gg) * &gt))
}

/// `Â^D = Â^{‖Â^{2k}}` with `k` the index of the real part.
pub fn closed_drazin<T: Scalar>(a: &DualMatrix<T>) -> Result<Option<DualMatrix<T>>, DualError> {
    a.require_square()?;
    let k = match drazin_inverse(a.real()) {
        Ok(d) => d.index,
        Err(InverseError::Input(e)) => return Err(e.into()),
        Err(_) => return Ok(None),
    };
    closed_along(a, &a.pow(2 * k)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct BcClosedForm<T: Scalar> {
    /// `X = A^{‖(B,C)}`
    pub real_inverse: Matrix<T>,
    /// `(I - BB⁺)B₀(I - B⁺B)`
    pub cond_b: Matrix<T>,
    /// `(I - CC⁺)C₀(I - C⁺C)`
    pub cond_c: Matrix<T>,
    /// `X - εXA₀X + ε(I - XA)B₀B⁺X + εXC⁺C₀(I - AX)`, when both conditions vanish.
    pub value: Option<DualMatrix<T>>,
    /// `(I - XA)B₀B⁺X = (I - XA)B₁X` with `B₁ = (I - BB⁺)B₀B⁺`.
    pub simplified_agrees: Option<bool>,
}

fn regularity_residual<T: Scalar>(m: &Matrix<T>, m0: &Matrix<T>, mp: &Matrix<T>) -> Matrix<T> {
    let left = &Matrix::identity(m.rows()) - &(m * mp);
    let right = &Matrix::identity(m.cols()) - &(mp * m);
    &(&left * m0) * &right
}

/// `Â^{‖(B̂,Ĉ)}` from `A^{‖(B,C)}`; `Ok(None)` when the real inverse does not
/// exist. `B⁺`, `C⁺` default to the Moore-Penrose inverses.
pub fn closed_bc<T: Scalar>(
    a: &DualMatrix<T>,
    b: &DualMatrix<T>,
    c: &DualMatrix<T>,
    b_plus: Option<&Matrix<T>>,
    c_plus: Option<&Matrix<T>>,
) -> Result<Option<BcClosedForm<T>>, DualError> {
    let (ar, br, cr) = (a.real(), b.real(), c.real());
    let x = match bc_inverse(ar, br, cr) {
        Ok(x) => x,
        Err(InverseError::Input(e)) => return Err(e.into()),
        Err(_) => return Ok(None),
    };
    let bp = resolve_reflexive(br, b_plus, "B⁺")?;
    let cp = resolve_reflexive(cr, c_plus, "C⁺")?;
    let cond_b = regularity_residual(br, b.dual(), &bp);
    let cond_c = regularity_residual(cr, c.dual(), &cp);
    let mut out = BcClosedForm {
        real_inverse: x.clone(),
        cond_b,
        cond_c,
        value: None,
        simplified_agrees: None,
    };
    if !out.cond_b.is_zero() || !out.cond_c.is_zero() {
        return Ok(Some(out));
    }
    let (n, m) = x.shape();
    let i_xa = &Matrix::identity(n) - &(&x * ar);
    let i_ax = &Matrix::identity(m) - &(ar * &x);
    let from_b = &(&(&i_xa * b.dual()) * &bp) * &x;
    let from_c = &(&(&x * &cp) * c.dual()) * &i_ax;
    let dual = &(&from_b + &from_c) - &(&(&x * a.dual()) * &x);
    let b1 = &(&(&Matrix::identity(br.rows()) - &(br * &bp)) * b.dual()) * &bp;
    out.simplified_agrees = Some(from_b == &(&i_xa * &b1) * &x);
    out.value = Some(DualMatrix::new(x, dual)?);
    Ok(Some(out))
}

/// Closed-form route for every kind.
pub fn closed_form_inverse<T: Scalar>(
    kind: &DualKind<T>,
    a: &DualMatrix<T>,
) -> Result<Option<DualMatrix<T>>, DualError> {
    match kind {
        DualKind::MoorePenrose => closed_mp(a),
        DualKind::Group => closed_group(a),
        DualKind::Core => closed_core(a),
        DualKind::Drazin => closed_drazin(a),
        DualKind::Along(d) => closed_along(a, d),
        DualKind::Bc(b, c) | DualKind::Outer(b, c) => {
            Ok(closed_bc(a, b, c, None, None)?.and_then(|f| f.value))
        }
    }
}
