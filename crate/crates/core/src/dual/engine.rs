//! Generalized inverses of dual matrices through the radical perturbation
//! engine, with `A + εA₀` read as `a + j_a`, `j_a = εA₀`.

use serde::{Deserialize, Serialize};

use super::regular::resolve_reflexive;
use super::{
    closed_bc, closed_form_inverse, dual_solve, dual_solve_left, DualError, DualMatrix,
    DualMatrixRing,
};
use crate::matrix::{
    bc_inverse, core_inverse, drazin_inverse, group_inverse, mp_inverse, InverseError, Matrix,
};
use crate::perturb::{drazin_perturb, mgc_perturb, perturb_bc, Mgc, PerturbationInput};
use crate::ring::{verify_inverse, InverseKind, Involution, RingSpace};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualKind<T: Scalar> {
    MoorePenrose,
    Group,
    Core,
    Drazin,
    Bc(DualMatrix<T>, DualMatrix<T>),
    /// Inverse along `D̂`.
    Along(DualMatrix<T>),
    /// Outer inverse with range `R(B̂)` and null space `N(Ĉ)`.
    Outer(DualMatrix<T>, DualMatrix<T>),
}

impl<T: Scalar> DualKind<T> {
    pub fn label(&self) -> &'static str {
        match self {
            Self::MoorePenrose => "mp",
            Self::Group => "group",
            Self::Core => "core",
            Self::Drazin => "drazin",
            Self::Bc(..) => "bc",
            Self::Along(_) => "along",
            Self::Outer(..) => "outer",
        }
    }

    /// Rebuilds a kind from its label and the prescribing matrices.
    pub fn from_parts(
        label: &str,
        b: Option<DualMatrix<T>>,
        c: Option<DualMatrix<T>>,
    ) -> Result<Self, DualError> {
        let missing = |what: &str| DualError::Input(format!("kind {label} needs {what}"));
        Ok(match label {
            "mp" => Self::MoorePenrose,
            "group" => Self::Group,
            "core" => Self::Core,
            "drazin" => Self::Drazin,
            "bc" => Self::Bc(
                b.ok_or_else(|| missing("B"))?,
                c.ok_or_else(|| missing("C"))?,
            ),
            "outer" => Self::Outer(
                b.ok_or_else(|| missing("B"))?,
                c.ok_or_else(|| missing("C"))?,
            ),
            "along" => Self::Along(b.or(c).ok_or_else(|| missing("D"))?),
            other => return Err(DualError::Input(format!("unknown kind {other:?}"))),
        })
    }

    /// `(B̂, Ĉ)` prescribing the inverse, when the kind is of that form.
    fn prescription(&self) -> Option<(&DualMatrix<T>, &DualMatrix<T>)> {
        match self {
            Self::Bc(b, c) | Self::Outer(b, c) => Some((b, c)),
            Self::Along(d) => Some((d, d)),
            _ => None,
        }
    }
}

/// Overrides for the reflexive inverses used by the engine and for the
/// Drazin exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualOptions<T: Scalar> {
    pub a_plus: Option<Matrix<T>>,
    pub b_plus: Option<Matrix<T>>,
    pub c_plus: Option<Matrix<T>>,
    pub drazin_l: Option<usize>,
}

impl<T: Scalar> Default for DualOptions<T> {
    fn default() -> Self {
        Self {
            a_plus: None,
            b_plus: None,
            c_plus: None,
            drazin_l: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "", deny_unknown_fields)]
pub struct NamedMatrix<T: Scalar> {
    pub name: String,
    pub value: DualMatrix<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "", deny_unknown_fields)]
pub struct Nonexistence<T: Scalar> {
    pub reason: String,
    /// Nonzero criterion residuals, cropped to the input shapes.
    pub residuals: Vec<NamedMatrix<T>>,
}

/// Defining equations evaluated on the witness, in the padded ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "", deny_unknown_fields)]
pub struct ResidualReport<T: Scalar> {
    pub passed: bool,
    pub residuals: Vec<NamedMatrix<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub membership_failure: Option<String>,
}

/// `R(X̂) = R(B̂)` and `N(X̂) = N(Ĉ)`, each as solvability both ways.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceCheck {
    pub outer: bool,
    pub range_equal: bool,
    pub null_space_equal: bool,
}

impl SubspaceCheck {
    pub fn holds(&self) -> bool {
        self.outer && self.range_equal && self.null_space_equal
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "", deny_unknown_fields)]
pub struct DualInverseCertificate<T: Scalar> {
    pub kind: String,
    pub input: DualMatrix<T>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<DualMatrix<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<DualMatrix<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<DualMatrix<T>>,
    #[serde(default)]
    pub witness: Option<DualMatrix<T>>,
    #[serde(default)]
    pub nonexistence: Option<Nonexistence<T>>,
    #[serde(default)]
    pub engine_path: Option<DualMatrix<T>>,
    #[serde(default)]
    pub closed_form_path: Option<DualMatrix<T>>,
    #[serde(default)]
    pub paths_agree: Option<bool>,
    /// The real part of the witness is the classical inverse of `A`.
    #[serde(default)]
    pub real_part_consistent: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub drazin_index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub padded_to: Option<usize>,
    #[serde(default)]
    pub residual_report: Option<ResidualReport<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subspaces: Option<SubspaceCheck>,
}

impl<T: Scalar> DualInverseCertificate<T> {
    pub fn exists(&self) -> bool {
        self.witness.is_some()
    }

    pub fn dual_kind(&self) -> Result<DualKind<T>, DualError> {
        DualKind::from_parts(
            &self.kind,
            self.b.clone().or_else(|| self.d.clone()),
            self.c.clone(),
        )
    }
}

fn named<T: Scalar>(name: &str, value: DualMatrix<T>) -> NamedMatrix<T> {
    NamedMatrix {
        name: name.to_string(),
        value,
    }
}

/// Nonexistence of the real inverse, or an input error.
fn real_failure<T: Scalar>(e: InverseError<T>) -> Result<Nonexistence<T>, DualError> {
    let reason = format!("real part: {e}");
    let residuals = match e {
        InverseError::Input(m) => return Err(m.into()),
        InverseError::NoGroupInverse { hg, .. } => vec![named("HG", DualMatrix::from_real(hg))],
        _ => Vec::new(),
    };
    Ok(Nonexistence { reason, residuals })
}

fn check_shapes<T: Scalar>(kind: &DualKind<T>, a: &DualMatrix<T>) -> Result<(), DualError> {
    let (m, n) = a.shape();
    match kind {
        DualKind::Group | DualKind::Core | DualKind::Drazin => a.require_square()?,
        DualKind::Along(d) if d.shape() != (n, m) => {
            return Err(DualError::Input(format!(
                "D̂ is {:?}, expected {:?}",
                d.shape(),
                (n, m)
            )));
        }
        DualKind::Bc(b, c) | DualKind::Outer(b, c) => {
            if b.rows() != n {
                return Err(DualError::Input(format!(
                    "B̂ has {} rows, expected {n}",
                    b.rows()
                )));
            }
            if c.cols() != m {
                return Err(DualError::Input(format!(
                    "Ĉ has {} columns, expected {m}",
                    c.cols()
                )));
            }
        }
        _ => {}
    }
    Ok(())
}

/// Side length of the square ring the inputs are padded into.
fn ring_size<T: Scalar>(kind: &DualKind<T>, a: &DualMatrix<T>) -> usize {
    let (m, n) = a.shape();
    let mut size = m.max(n);
    if let Some((b, c)) = kind.prescription() {
        size = size.max(b.rows()).max(b.cols()).max(c.rows()).max(c.cols());
    }
    size
}

fn real_inverse<T: Scalar>(
    kind: &DualKind<T>,
    a: &Matrix<T>,
) -> Result<Matrix<T>, InverseError<T>> {
    match kind {
        DualKind::MoorePenrose => mp_inverse(a),
        DualKind::Group => group_inverse(a),
        DualKind::Core => core_inverse(a),
        DualKind::Drazin => drazin_inverse(a).map(|d| d.inverse),
        DualKind::Bc(b, c) | DualKind::Outer(b, c) => bc_inverse(a, b.real(), c.real()),
        DualKind::Along(d) => bc_inverse(a, d.real(), d.real()),
    }
}

fn ring_kind<T: Scalar>(
    kind: &DualKind<T>,
    size: usize,
    index: Option<usize>,
) -> InverseKind<DualMatrix<T>> {
    match kind {
        DualKind::MoorePenrose => InverseKind::MoorePenrose,
        DualKind::Group => InverseKind::Group,
        DualKind::Core => InverseKind::Core,
        DualKind::Drazin => InverseKind::Drazin(index.unwrap_or(0)),
        DualKind::Bc(b, c) | DualKind::Outer(b, c) => {
            InverseKind::Bc(b.pad(size, size), c.pad(size, size))
        }
        DualKind::Along(d) => InverseKind::Along(d.pad(size, size)),
    }
}

/// Defining equations of `kind` for the witness `x` of `a`, in the padded
/// ring.
fn residual_report<T: Scalar>(
    kind: &DualKind<T>,
    a: &DualMatrix<T>,
    x: &DualMatrix<T>,
    index: Option<usize>,
) -> Result<ResidualReport<T>, DualError> {
    let size = ring_size(kind, a);
    let ring = DualMatrixRing::<T>::new(size);
    let star = |y: &DualMatrix<T>| y.transpose();
    let rk = ring_kind(kind, size, index);
    let involution: Option<Involution<'_, DualMatrix<T>>> =
        rk.needs_involution().then_some(&star as _);
    if x.shape() != (a.cols(), a.rows()) {
        return Err(DualError::Input(format!(
            "witness is {:?}, expected {:?}",
            x.shape(),
            (a.cols(), a.rows())
        )));
    }
    let verdict = verify_inverse(
        &ring,
        &rk,
        &a.pad(size, size),
        &x.pad(size, size),
        involution,
    )?;
    Ok(ResidualReport {
        passed: verdict.passed,
        residuals: verdict
            .residuals
            .into_iter()
            .map(|r| named(&r.label, r.value))
            .collect(),
        membership_failure: verdict.membership_failure,
    })
}

/// Dual range and null space comparison for an outer inverse `x`.
fn subspace_check<T: Scalar>(
    a: &DualMatrix<T>,
    x: &DualMatrix<T>,
    b: &DualMatrix<T>,
    c: &DualMatrix<T>,
) -> Result<SubspaceCheck, DualError> {
    let outer = &(&(x * a) * x) == x;
    let range_equal = dual_solve(b, x)?.is_some() && dual_solve(x, b)?.is_some();
    let null_space_equal = dual_solve_left(c, x)?.is_some() && dual_solve_left(x, c)?.is_some();
    Ok(SubspaceCheck {
        outer,
        range_equal,
        null_space_equal,
    })
}

struct EnginePath<T: Scalar> {
    value: Result<DualMatrix<T>, Nonexistence<T>>,
    index: Option<usize>,
}

fn engine_path<T: Scalar>(
    kind: &DualKind<T>,
    a: &DualMatrix<T>,
    opts: &DualOptions<T>,
) -> Result<EnginePath<T>, DualError> {
    let (m, n) = a.shape();
    let size = ring_size(kind, a);
    let ring = DualMatrixRing::<T>::new(size);
    let pad = |x: &Matrix<T>| DualMatrix::from_real(x.pad(size, size));
    let ap = a.pad(size, size);
    let real = DualMatrix::from_real(ap.real().clone());
    let j_a = DualMatrix::epsilon(ap.dual().clone());
    let inverse = match real_inverse(kind, ap.real()) {
        Ok(x) => x,
        Err(e) => {
            return Ok(EnginePath {
                value: Err(real_failure(e)?),
                index: None,
            })
        }
    };
    match kind {
        DualKind::MoorePenrose | DualKind::Group | DualKind::Core => {
            let mgc = match kind {
                DualKind::MoorePenrose => Mgc::MoorePenrose,
                DualKind::Group => Mgc::Group,
                _ => Mgc::Core,
            };
            let a_plus = resolve_reflexive(a.real(), opts.a_plus.as_ref(), "A⁺")?;
            let rep = mgc_perturb(
                &ring,
                mgc,
                &real,
                &DualMatrix::from_real(inverse),
                &pad(&a_plus),
                &j_a,
            )?;
            let value = match rep.result {
                Some(x) => Ok(x.crop(n, m)),
                None => Err(Nonexistence {
                    reason: "(I - AA⁺)A₀(I - A⁺A) is nonzero".into(),
                    residuals: vec![named("(I-AA+)A0(I-A+A)", rep.residual.crop(m, n))],
                }),
            };
            Ok(EnginePath { value, index: None })
        }
        DualKind::Drazin => {
            let k = drazin_inverse(a.real())
                .map_err(|e| DualError::Input(e.to_string()))?
                .index;
            let candidates: Vec<usize> = match opts.drazin_l {
                Some(l) if l < k => {
                    return Err(DualError::Input(format!(
                        "l = {l} is below the index {k} of A"
                    )));
                }
                Some(l) => vec![l],
                None => (k..=2 * k).collect(),
            };
            let a_d = DualMatrix::from_real(inverse);
            let mut last = None;
            for l in candidates {
                let rep = drazin_perturb(&ring, &real, &a_d, k, &j_a, Some(l))?;
                if let Some(x) = rep.result {
                    return Ok(EnginePath {
                        value: Ok(x),
                        index: Some(l),
                    });
                }
                last = Some((l, rep.residual));
            }
            let (l, residual) = last.expect("at least one exponent");
            if opts.drazin_l.is_some() {
                return Err(DualError::Input(format!("l = {l} is below the index of Â")));
            }
            Ok(EnginePath {
                value: Err(Nonexistence {
                    reason: format!("no Drazin inverse with exponent up to {l}"),
                    residuals: vec![named("residual", residual)],
                }),
                index: None,
            })
        }
        DualKind::Bc(..) | DualKind::Along(_) | DualKind::Outer(..) => {
            let (b, c) = kind.prescription().expect("prescribed kind");
            let b_plus = resolve_reflexive(b.real(), opts.b_plus.as_ref(), "B⁺")?;
            let c_plus = resolve_reflexive(c.real(), opts.c_plus.as_ref(), "C⁺")?;
            let (bp, cp) = (b.pad(size, size), c.pad(size, size));
            let input = PerturbationInput {
                a: real,
                b: DualMatrix::from_real(bp.real().clone()),
                c: DualMatrix::from_real(cp.real().clone()),
                a_bc: DualMatrix::from_real(inverse),
                b_plus: pad(&b_plus),
                c_plus: pad(&c_plus),
                j_a,
                j_b: DualMatrix::epsilon(bp.dual().clone()),
                j_c: DualMatrix::epsilon(cp.dual().clone()),
            };
            let rep = perturb_bc(&ring, &input)?;
            let value = match rep.perturbed_inverse {
                Some(x) => Ok(x.crop(n, m)),
                None => {
                    let mut residuals = Vec::new();
                    if !rep.cond_b.is_zero() {
                        residuals.push(named(
                            "(I-BB+)B0(I-B+B)",
                            rep.cond_b.crop(b.rows(), b.cols()),
                        ));
                    }
                    if !rep.cond_c.is_zero() {
                        residuals.push(named(
                            "(I-CC+)C0(I-C+C)",
                            rep.cond_c.crop(c.rows(), c.cols()),
                        ));
                    }
                    Err(Nonexistence {
                        reason: "B̂ or Ĉ is not regular".into(),
                        residuals,
                    })
                }
            };
            Ok(EnginePath { value, index: None })
        }
    }
}

fn real_part_consistent<T: Scalar>(
    kind: &DualKind<T>,
    a: &DualMatrix<T>,
    x: &DualMatrix<T>,
) -> bool {
    real_inverse(kind, a.real()).is_ok_and(|r| &r == x.real())
}

fn closed_path<T: Scalar>(
    kind: &DualKind<T>,
    a: &DualMatrix<T>,
    opts: &DualOptions<T>,
) -> Result<Option<DualMatrix<T>>, DualError> {
    match kind {
        DualKind::Bc(b, c) | DualKind::Outer(b, c) => {
            Ok(
                closed_bc(a, b, c, opts.b_plus.as_ref(), opts.c_plus.as_ref())?
                    .and_then(|f| f.value),
            )
        }
        _ => closed_form_inverse(kind, a),
    }
}

pub fn dual_generalized_inverse<T: Scalar>(
    kind: &DualKind<T>,
    a: &DualMatrix<T>,
) -> Result<DualInverseCertificate<T>, DualError> {
    dual_generalized_inverse_with(kind, a, &DualOptions::default())
}

/// Both routes, the defining equations on the witness, and for outer
/// inverses the range and null space comparison.
pub fn dual_generalized_inverse_with<T: Scalar>(
    kind: &DualKind<T>,
    a: &DualMatrix<T>,
    opts: &DualOptions<T>,
) -> Result<DualInverseCertificate<T>, DualError> {
    check_shapes(kind, a)?;
    let size = ring_size(kind, a);
    let engine = engine_path(kind, a, opts)?;
    let closed = closed_path(kind, a, opts)?;
    let (b, c, d) = match kind {
        DualKind::Bc(b, c) | DualKind::Outer(b, c) => (Some(b.clone()), Some(c.clone()), None),
        DualKind::Along(d) => (None, None, Some(d.clone())),
        _ => (None, None, None),
    };
    let mut cert = DualInverseCertificate {
        kind: kind.label().to_string(),
        input: a.clone(),
        b,
        c,
        d,
        witness: None,
        nonexistence: None,
        engine_path: None,
        closed_form_path: closed,
        paths_agree: None,
        real_part_consistent: None,
        drazin_index: engine.index,
        padded_to: (size != a.rows() || size != a.cols()).then_some(size),
        residual_report: None,
        subspaces: None,
    };
    match engine.value {
        Ok(x) => {
            cert.paths_agree = Some(cert.closed_form_path.as_ref() == Some(&x));
            cert.real_part_consistent = Some(real_part_consistent(kind, a, &x));
            cert.residual_report = Some(residual_report(kind, a, &x, engine.index)?);
            if let DualKind::Outer(b, c) = kind {
                cert.subspaces = Some(subspace_check(a, &x, b, c)?);
            }
            cert.engine_path = Some(x.clone());
            cert.witness = Some(x);
        }
        Err(reason) => {
            cert.paths_agree = Some(cert.closed_form_path.is_none());
            cert.nonexistence = Some(reason);
        }
    }
    Ok(cert)
}

/// `(value, index)` of `Â^D`.
pub fn dual_drazin<T: Scalar>(
    a: &DualMatrix<T>,
) -> Result<Option<(DualMatrix<T>, usize)>, DualError> {
    let cert = dual_generalized_inverse(&DualKind::Drazin, a)?;
    Ok(cert.witness.zip(cert.drazin_index))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct OuterInverse<T: Scalar> {
    pub inverse: Option<DualMatrix<T>>,
    pub subspaces: Option<SubspaceCheck>,
    pub nonexistence: Option<Nonexistence<T>>,
}

/// `A^{(2)}_{R(B̂),N(Ĉ)}`, computed as `Â^{‖(B̂,Ĉ)}`.
pub fn outer_inverse_prescribed<T: Scalar>(
    a: &DualMatrix<T>,
    b: &DualMatrix<T>,
    c: &DualMatrix<T>,
) -> Result<OuterInverse<T>, DualError> {
    let cert = dual_generalized_inverse(&DualKind::Outer(b.clone(), c.clone()), a)?;
    Ok(OuterInverse {
        inverse: cert.witness,
        subspaces: cert.subspaces,
        nonexistence: cert.nonexistence,
    })
}

/// Outcome of re-checking a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub valid: bool,
    /// First defining equation that failed, or the disagreement found.
    pub first_failure: Option<String>,
}

/// A witness is re-checked against the defining equations. A nonexistence
/// claim is re-derived from the input and its residuals compared.
pub fn verify_certificate<T: Scalar>(
    cert: &DualInverseCertificate<T>,
) -> Result<CertificateCheck, DualError> {
    let kind = cert.dual_kind()?;
    check_shapes(&kind, &cert.input)?;
    if let Some(x) = &cert.witness {
        if kind == DualKind::Drazin && cert.drazin_index.is_none() {
            return Err(DualError::Input(
                "drazin certificate lacks drazin_index".into(),
            ));
        }
        let report = residual_report(&kind, &cert.input, x, cert.drazin_index)?;
        let size = ring_size(&kind, &cert.input);
        let ring = DualMatrixRing::<T>::new(size);
        let first_failure = report
            .residuals
            .iter()
            .find(|r| !ring.is_zero(&r.value))
            .map(|r| format!("{} = {}", r.name, r.value))
            .or(report.membership_failure);
        return Ok(CertificateCheck {
            valid: first_failure.is_none(),
            first_failure,
        });
    }
    let fresh = dual_generalized_inverse(&kind, &cert.input)?;
    let first_failure = match (&fresh.nonexistence, &cert.nonexistence) {
        (None, _) => Some("an inverse exists".to_string()),
        (Some(_), None) => Some("certificate has neither witness nor nonexistence".to_string()),
        (Some(f), Some(c)) if f.residuals != c.residuals => {
            Some("nonexistence residuals differ".to_string())
        }
        _ => None,
    };
    Ok(CertificateCheck {
        valid: first_failure.is_none(),
        first_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::{QDualMatrix, QMatrix};

    fn idempotent_example() -> QDualMatrix {
        DualMatrix::from_i64(&[&[1, 0], &[0, 0]], &[&[0, 1], &[1, 0]])
    }

    fn real(rows: &[&[i64]]) -> QDualMatrix {
        QDualMatrix::from_real(QMatrix::from_i64(rows))
    }

    #[test]
    fn mp_of_the_idempotent_example() {
        let a = idempotent_example();
        let cert = dual_generalized_inverse(&DualKind::MoorePenrose, &a).unwrap();
        assert_eq!(cert.witness, Some(a.clone()));
        assert_eq!(cert.paths_agree, Some(true));
        assert_eq!(cert.real_part_consistent, Some(true));
        assert!(cert.residual_report.as_ref().unwrap().passed);
        assert!(verify_certificate(&cert).unwrap().valid);
    }

    #[test]
    fn mp_nonexistence_carries_the_residual() {
        let a = QDualMatrix::from_i64(&[&[1, 0], &[0, 0]], &[&[0, 0], &[0, 1]]);
        let cert = dual_generalized_inverse(&DualKind::MoorePenrose, &a).unwrap();
        assert!(!cert.exists());
        let res = &cert.nonexistence.as_ref().unwrap().residuals[0].value;
        assert_eq!(res.dual(), &QMatrix::from_i64(&[&[0, 0], &[0, 1]]));
        assert!(res.real().is_zero());
        assert_eq!(cert.paths_agree, Some(true));
        assert!(verify_certificate(&cert).unwrap().valid);
    }

    #[test]
    fn drazin_of_a_nilpotent_has_index_three() {
        let a = QDualMatrix::from_i64(&[&[0, 1], &[0, 0]], &[&[1, 0], &[0, 1]]);
        let cert = dual_generalized_inverse(&DualKind::Drazin, &a).unwrap();
        assert_eq!(cert.witness, Some(QDualMatrix::zeros(2, 2)));
        assert_eq!(cert.drazin_index, Some(3));
        assert_eq!(cert.paths_agree, Some(true));
    }

    #[test]
    fn bc_with_idempotent_prescription() {
        let a = idempotent_example();
        let p = real(&[&[1, 0], &[0, 0]]);
        let cert = dual_generalized_inverse(&DualKind::Bc(p.clone(), p.clone()), &a).unwrap();
        assert_eq!(cert.witness, Some(p.clone()));
        assert_eq!(cert.paths_agree, Some(true));
        let outer = outer_inverse_prescribed(&a, &p, &p).unwrap();
        assert_eq!(outer.inverse, Some(p));
        assert!(outer.subspaces.unwrap().holds());
    }

    #[test]
    fn outer_identity_and_nonexistence() {
        let i = QDualMatrix::identity(2);
        let outer = outer_inverse_prescribed(&i, &i, &i).unwrap();
        assert_eq!(outer.inverse, Some(i.clone()));
        let p = real(&[&[1, 0], &[0, 0]]);
        let bad = QDualMatrix::from_i64(&[&[1, 0], &[0, 0]], &[&[0, 0], &[0, 1]]);
        let outer = outer_inverse_prescribed(&i, &p, &bad).unwrap();
        assert_eq!(outer.inverse, None);
        let n = outer.nonexistence.unwrap();
        assert_eq!(n.residuals.len(), 1);
        assert_eq!(
            n.residuals[0].value.dual(),
            &QMatrix::from_i64(&[&[0, 0], &[0, 1]])
        );
    }

    #[test]
    fn rectangular_inputs_are_padded() {
        let a = QDualMatrix::from_i64(&[&[1, 0, 0], &[0, 2, 0]], &[&[0, 0, 1], &[0, 0, 0]]);
        let cert = dual_generalized_inverse(&DualKind::MoorePenrose, &a).unwrap();
        assert_eq!(cert.padded_to, Some(3));
        let x = cert.witness.clone().unwrap();
        assert_eq!(x.shape(), (3, 2));
        assert_eq!(cert.paths_agree, Some(true));
        assert!(verify_certificate(&cert).unwrap().valid);
        assert!(matches!(
            dual_generalized_inverse(&DualKind::Group, &a),
            Err(DualError::Matrix(crate::MatrixError::NotSquare(2, 3)))
        ));
    }

    #[test]
    fn tampering_is_detected() {
        let a = idempotent_example();
        let mut cert = dual_generalized_inverse(&DualKind::MoorePenrose, &a).unwrap();
        let (mut r, d) = cert.witness.take().unwrap().into_parts();
        r.set(0, 0, q(2, 1));
        cert.witness = Some(DualMatrix::new(r, d).unwrap());
        let check = verify_certificate(&cert).unwrap();
        assert!(!check.valid);
        assert!(check.first_failure.unwrap().starts_with("axa-a"));
    }

    #[test]
    fn group_of_a_non_group_invertible_real_part() {
        let a = QDualMatrix::from_i64(&[&[0, 1], &[0, 0]], &[&[0, 0], &[0, 0]]);
        let cert = dual_generalized_inverse(&DualKind::Group, &a).unwrap();
        let n = cert.nonexistence.unwrap();
        assert_eq!(n.residuals[0].name, "HG");
        assert_eq!(cert.paths_agree, Some(true));
    }

    #[test]
    fn reflexive_overrides_do_not_change_the_value() {
        let a = idempotent_example();
        let b = QDualMatrix::from_i64(&[&[1, 1], &[0, 0]], &[&[0, 0], &[1, 1]]);
        let c = QDualMatrix::from_i64(&[&[1, 0], &[1, 0]], &[&[0, 1], &[0, 1]]);
        let kind = DualKind::Bc(b.clone(), c.clone());
        let base = dual_generalized_inverse(&kind, &a).unwrap();
        let opts = DualOptions {
            b_plus: Some(QMatrix::from_i64(&[&[1, 0], &[0, 0]])),
            c_plus: Some(QMatrix::from_i64(&[&[0, 1], &[0, 0]])),
            ..DualOptions::default()
        };
        let other = dual_generalized_inverse_with(&kind, &a, &opts).unwrap();
        assert_eq!(base.witness, other.witness);
        assert_eq!(other.paths_agree, Some(true));
    }
}
