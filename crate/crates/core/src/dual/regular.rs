use serde::Serialize;

use super::{DualError, DualMatrix};
use crate::matrix::{mp_inverse, reflexive_inverse, InverseError, Matrix};
use crate::scalar::Scalar;

/// Regularity of `A + εA₀` decided from a reflexive inverse `A⁺` of `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct RegularityCertificate<T: Scalar> {
    pub a_plus: Matrix<T>,
    /// `(I - AA⁺)A₀(I - A⁺A)`
    pub residual: Matrix<T>,
    pub regular: bool,
    /// `(I - εA⁺A₀)A⁺`, a reflexive inverse of `Â`.
    pub witness: Option<DualMatrix<T>>,
    pub verified: Option<bool>,
}

/// `A = (I + εA₁)·A·(I + εA₂)` factors of `Â`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct RadicalSplit<T: Scalar> {
    pub a1: Matrix<T>,
    pub core: Matrix<T>,
    pub a2: Matrix<T>,
}

impl<T: Scalar> RadicalSplit<T> {
    /// `(I + εA₁)A(I + εA₂)`
    pub fn recompose(&self) -> DualMatrix<T> {
        let left = &DualMatrix::identity(self.a1.rows()) + &DualMatrix::epsilon(self.a1.clone());
        let right = &DualMatrix::identity(self.a2.rows()) + &DualMatrix::epsilon(self.a2.clone());
        &(&left * &DualMatrix::from_real(self.core.clone())) * &right
    }
}

/// The Moore-Penrose inverse when it exists, otherwise some reflexive
/// inverse.
pub(crate) fn canonical_reflexive<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>, DualError> {
    match mp_inverse(a) {
        Ok(x) => Ok(x),
        Err(InverseError::Input(e)) => Err(e.into()),
        Err(_) => match reflexive_inverse(a) {
            Ok(x) => Ok(x),
            Err(InverseError::Input(e)) => Err(e.into()),
            Err(e) => Err(DualError::Input(e.to_string())),
        },
    }
}

pub(crate) fn is_reflexive_of<T: Scalar>(a: &Matrix<T>, x: &Matrix<T>) -> bool {
    x.shape() == (a.cols(), a.rows()) && &(&(a * x) * a) == a && &(&(x * a) * x) == x
}

pub(crate) fn resolve_reflexive<T: Scalar>(
    a: &Matrix<T>,
    a_plus: Option<&Matrix<T>>,
    what: &str,
) -> Result<Matrix<T>, DualError> {
    match a_plus {
        Some(x) if is_reflexive_of(a, x) => Ok(x.clone()),
        Some(_) => Err(DualError::Input(format!(
            "the supplied {what} is not a reflexive inverse"
        ))),
        None => canonical_reflexive(a),
    }
}

pub fn regularity_certificate<T: Scalar>(
    a: &DualMatrix<T>,
    a_plus: Option<&Matrix<T>>,
) -> Result<RegularityCertificate<T>, DualError> {
    let (m, n) = a.shape();
    let ap = resolve_reflexive(a.real(), a_plus, "A⁺")?;
    let left = &Matrix::identity(m) - &(a.real() * &ap);
    let right = &Matrix::identity(n) - &(&ap * a.real());
    let residual = &(&left * a.dual()) * &right;
    let regular = residual.is_zero();
    let (witness, verified) = if regular {
        let x = DualMatrix::new(ap.clone(), -&(&(&ap * a.dual()) * &ap))?;
        let ok = &(&(a * &x) * a) == a && (&(&x * a) * &x) == x;
        (Some(x), Some(ok))
    } else {
        (None, None)
    };
    Ok(RegularityCertificate {
        a_plus: ap,
        residual,
        regular,
        witness,
        verified,
    })
}

/// Canonical split `A₁ = (I - AA⁺)A₀A⁺`, `A₂ = A⁺A₀`; `None` when `Â` is
/// not regular.
pub fn radical_split<T: Scalar>(a: &DualMatrix<T>) -> Result<Option<RadicalSplit<T>>, DualError> {
    radical_split_with(a, None)
}

pub fn radical_split_with<T: Scalar>(
    a: &DualMatrix<T>,
    a_plus: Option<&Matrix<T>>,
) -> Result<Option<RadicalSplit<T>>, DualError> {
    let ap = resolve_reflexive(a.real(), a_plus, "A⁺")?;
    let real = a.real();
    let a1 = &(&(&Matrix::identity(a.rows()) - &(real * &ap)) * a.dual()) * &ap;
    let a2 = &ap * a.dual();
    if &(&(&a1 * real) + &(real * &a2)) != a.dual() {
        return Ok(None);
    }
    Ok(Some(RadicalSplit {
        a1,
        core: real.clone(),
        a2,
    }))
}
