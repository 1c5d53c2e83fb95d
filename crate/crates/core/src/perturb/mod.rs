//! Generalized inverses of `a + j` for `j` in the Jacobson radical, over any
//! [`RingSpace`].
//!
//! Everything here is stated for ring elements; dual matrices, truncated
//! power series and finite rings are instances.

mod clean;
mod corollaries;
pub mod series;
pub mod t2z;

use serde::Serialize;

use crate::ring::{
    inverse_one_plus, is_reflexive, one_minus, one_plus, phi, product, require_member,
    require_radical, sum, verify_inverse, InverseKind, RingError, RingSpace,
};

pub use clean::{
    clean_transfer, special_clean_transfer, CleanCandidate, CleanTransferReport, SpecialCleanReport,
};
pub use corollaries::{
    absorption_equivalences, drazin_perturb, idempotence_check, joint_idempotence_check,
    mgc_perturb, AbsorptionReport, DrazinPerturbReport, IdempotenceReport, JointIdempotenceReport,
    Mgc, MgcReport,
};

/// `(1 - a·a⁺)·j·(1 + a⁺·j)⁻¹·(1 - a⁺·a)`; it vanishes exactly when `a + j`
/// is regular.
pub fn regularity_residual<R: RingSpace + ?Sized>(
    space: &R,
    a: &R::Elem,
    a_plus: &R::Elem,
    j: &R::Elem,
) -> Result<R::Elem, RingError> {
    let left = one_minus(space, &space.mul(a, a_plus));
    let right = one_minus(space, &space.mul(a_plus, a));
    let mid = inverse_one_plus(space, &space.mul(a_plus, j))?;
    Ok(product(space, &[&left, j, &mid, &right]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularPerturbation<E> {
    pub residual: E,
    /// `(1 + a⁺j)⁻¹a⁺` when the residual vanishes.
    pub inverse: Option<E>,
    /// Whether `inverse` passed the `{1,2}` equations for `a + j`.
    pub verified: Option<bool>,
}

impl<E> RegularPerturbation<E> {
    pub fn is_regular(&self) -> bool {
        self.inverse.is_some()
    }
}

/// Decides regularity of `a + j` from a reflexive inverse of `a`, and builds
/// a reflexive inverse of `a + j` when it exists.
pub fn regular_perturb<R: RingSpace + ?Sized>(
    space: &R,
    a: &R::Elem,
    a_plus: &R::Elem,
    j: &R::Elem,
) -> Result<RegularPerturbation<R::Elem>, RingError> {
    require_member(space, a)?;
    require_member(space, a_plus)?;
    require_radical(space, j, "j")?;
    if !is_reflexive(space, a, a_plus) {
        return Err(RingError::Precondition(
            "a⁺ is not a reflexive inverse of a".into(),
        ));
    }
    let residual = regularity_residual(space, a, a_plus, j)?;
    if !space.is_zero(&residual) {
        return Ok(RegularPerturbation {
            residual,
            inverse: None,
            verified: None,
        });
    }
    let inv = space.mul(&inverse_one_plus(space, &space.mul(a_plus, j))?, a_plus);
    let verified = is_reflexive(space, &space.add(a, j), &inv);
    Ok(RegularPerturbation {
        residual,
        inverse: Some(inv),
        verified: Some(verified),
    })
}

/// Data for perturbing a `(b,c)`-inverse: `a^{‖(b,c)}`, reflexive inverses
/// of `b` and `c`, and the three radical perturbations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerturbationInput<E> {
    pub a: E,
    pub b: E,
    pub c: E,
    pub a_bc: E,
    pub b_plus: E,
    pub c_plus: E,
    pub j_a: E,
    pub j_b: E,
    pub j_c: E,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BcPerturbation<E> {
    /// Regularity residual of `b + j_b`.
    pub cond_b: E,
    /// Regularity residual of `c + j_c`.
    pub cond_c: E,
    pub composite_j: E,
    /// `(a+j_a)^{‖(b+j_b,c+j_c)}` from the closed formula.
    pub perturbed_inverse: Option<E>,
    /// `a^{‖(b+j_b,c+j_c)}`, the `j_a = 0` specialization.
    pub unperturbed_a_inverse: Option<E>,
    /// `φ(a^{‖(b+j_b,c+j_c)}) = (a+j_a)^{‖(b+j_b,c+j_c)}`.
    pub phi_relation: Option<bool>,
    /// Whether the formula value passed the `(b+j_b, c+j_c)` equations,
    /// membership witnesses included.
    pub verified: Option<bool>,
    /// Regularity of `b + j_b` and `c + j_c` by the ring's own inner-inverse
    /// route, when it has one.
    pub regular: Option<(bool, bool)>,
    /// The conditions recomputed with the ring's canonical reflexive
    /// inverses give the same verdict.
    pub canonical_agree: Option<bool>,
}

impl<E> BcPerturbation<E> {
    pub fn exists(&self) -> bool {
        self.perturbed_inverse.is_some()
    }
}

/// `j = j_a + a j_b b⁺ + c⁺ j_c a + j_a j_b b⁺ + c⁺ j_c j_a + c⁺ j_c a j_b b⁺ + c⁺ j_c j_a j_b b⁺`
pub fn composite_radical<R: RingSpace + ?Sized>(
    space: &R,
    input: &PerturbationInput<R::Elem>,
) -> R::Elem {
    let PerturbationInput {
        a,
        b_plus,
        c_plus,
        j_a,
        j_b,
        j_c,
        ..
    } = input;
    let p = |f: &[&R::Elem]| product(space, f);
    sum(
        space,
        &[
            j_a.clone(),
            p(&[a, j_b, b_plus]),
            p(&[c_plus, j_c, a]),
            p(&[j_a, j_b, b_plus]),
            p(&[c_plus, j_c, j_a]),
            p(&[c_plus, j_c, a, j_b, b_plus]),
            p(&[c_plus, j_c, j_a, j_b, b_plus]),
        ],
    )
}

fn optional<T>(r: Result<T, RingError>) -> Result<Option<T>, RingError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(RingError::Unsupported { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn is_regular<R: RingSpace + ?Sized>(space: &R, x: &R::Elem) -> Result<Option<bool>, RingError> {
    Ok(optional(space.inner_inverse(x))?.map(|g| g.is_some()))
}

/// Existence and value of `(a+j_a)^{‖(b+j_b,c+j_c)}` from `a^{‖(b,c)}`.
pub fn perturb_bc<R: RingSpace + ?Sized>(
    space: &R,
    input: &PerturbationInput<R::Elem>,
) -> Result<BcPerturbation<R::Elem>, RingError> {
    let PerturbationInput {
        a,
        b,
        c,
        a_bc: x,
        b_plus,
        c_plus,
        j_a,
        j_b,
        j_c,
    } = input;
    for e in [a, b, c, x, b_plus, c_plus] {
        require_member(space, e)?;
    }
    require_radical(space, j_a, "j_a")?;
    require_radical(space, j_b, "j_b")?;
    require_radical(space, j_c, "j_c")?;
    if !verify_inverse(space, &InverseKind::Bc(b.clone(), c.clone()), a, x, None)?.passed {
        return Err(RingError::Precondition(
            "the given element is not a^{‖(b,c)}".into(),
        ));
    }
    if !is_reflexive(space, b, b_plus) {
        return Err(RingError::Precondition(
            "b⁺ is not a reflexive inverse of b".into(),
        ));
    }
    if !is_reflexive(space, c, c_plus) {
        return Err(RingError::Precondition(
            "c⁺ is not a reflexive inverse of c".into(),
        ));
    }

    let cond_b = regularity_residual(space, b, b_plus, j_b)?;
    let cond_c = regularity_residual(space, c, c_plus, j_c)?;
    let holds = space.is_zero(&cond_b) && space.is_zero(&cond_c);
    let composite_j = composite_radical(space, input);

    let b_pert = space.add(b, j_b);
    let c_pert = space.add(c, j_c);
    let regular = match (is_regular(space, &b_pert)?, is_regular(space, &c_pert)?) {
        (Some(rb), Some(rc)) => Some((rb, rc)),
        _ => None,
    };
    let canonical_agree = match (
        optional(space.reflexive_inverse(b))?.flatten(),
        optional(space.reflexive_inverse(c))?.flatten(),
    ) {
        (Some(bp), Some(cp)) => {
            let zb = space.is_zero(&regularity_residual(space, b, &bp, j_b)?);
            let zc = space.is_zero(&regularity_residual(space, c, &cp, j_c)?);
            Some((zb && zc) == holds)
        }
        _ => None,
    };

    let mut report = BcPerturbation {
        cond_b,
        cond_c,
        composite_j,
        perturbed_inverse: None,
        unperturbed_a_inverse: None,
        phi_relation: None,
        verified: None,
        regular,
        canonical_agree,
    };
    if !holds {
        return Ok(report);
    }

    let left = one_plus(space, &space.mul(j_b, b_plus));
    let right = one_plus(space, &space.mul(c_plus, j_c));
    let mid = inverse_one_plus(space, &space.mul(&report.composite_j, x))?;
    let perturbed = product(space, &[&left, x, &mid, &right]);

    let t = sum(
        space,
        &[
            product(space, &[a, j_b, b_plus]),
            product(space, &[c_plus, j_c, a]),
            product(space, &[c_plus, j_c, a, j_b, b_plus]),
        ],
    );
    let inner = inverse_one_plus(space, &space.mul(x, &t))?;
    let unperturbed = product(space, &[&left, &inner, x, &right]);

    let a_pert = space.add(a, j_a);
    let verdict = verify_inverse(
        space,
        &InverseKind::Bc(b_pert, c_pert),
        &a_pert,
        &perturbed,
        None,
    )?;
    report.phi_relation = Some(phi(space, &unperturbed, j_a)? == perturbed);
    report.verified = Some(verdict.passed);
    report.perturbed_inverse = Some(perturbed);
    report.unperturbed_a_inverse = Some(unperturbed);
    Ok(report)
}
