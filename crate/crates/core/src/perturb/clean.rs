use serde::Serialize;

use super::{is_regular, regular_perturb, regularity_residual};
use crate::ring::{one_minus, product, require_member, require_radical, RingError, RingSpace};

/// A clean decomposition `a = ē + u` with `ē` idempotent and `u` a unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CleanCandidate<E> {
    pub idempotent: E,
    pub unit: E,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CleanTransferReport<E> {
    /// `a^{‖e}` for `e = 1 - ē`.
    pub along_e: Option<E>,
    /// `aa^{‖e}(a+j_a)(1-aa^{‖e})` and `(1-a^{‖e}a)(a+j_a)a^{‖e}a`.
    pub annihilators: Option<(E, E)>,
    /// The criterion through `a^{‖e}`.
    pub criterion: bool,
    /// `1^{‖(ueu⁻¹,e)}`
    pub conjugate_idempotent: Option<E>,
    /// The same criterion through `1^{‖(ueu⁻¹,e)}`.
    pub conjugate_criterion: bool,
    /// `ē + (u + j_a)` when the criterion holds.
    pub witness: Option<CleanCandidate<E>>,
    /// The witness is a strongly clean decomposition of `a + j_a`.
    pub witness_valid: Option<bool>,
}

impl<E> CleanTransferReport<E> {
    pub fn consistent(&self) -> bool {
        self.criterion == self.conjugate_criterion && self.witness_valid.is_none_or(|v| v)
    }
}

/// Checks that `a = ē + u` is a clean decomposition, returning `u⁻¹`.
pub(crate) fn check_clean<R: RingSpace + ?Sized>(
    space: &R,
    a: &R::Elem,
    cand: &CleanCandidate<R::Elem>,
) -> Result<Option<R::Elem>, RingError> {
    let CleanCandidate {
        idempotent: e,
        unit: u,
    } = cand;
    if space.mul(e, e) != *e || space.add(e, u) != *a {
        return Ok(None);
    }
    space.unit_inverse(u)
}

fn is_strongly_clean_decomposition<R: RingSpace + ?Sized>(
    space: &R,
    a: &R::Elem,
    cand: &CleanCandidate<R::Elem>,
) -> Result<bool, RingError> {
    let e = &cand.idempotent;
    Ok(check_clean(space, a, cand)?.is_some() && space.mul(e, a) == space.mul(a, e))
}

/// Strong cleanness of `a + j_a` from a clean decomposition of `a`.
pub fn clean_transfer<R: RingSpace + ?Sized>(
    space: &R,
    a: &R::Elem,
    j_a: &R::Elem,
    cand: &CleanCandidate<R::Elem>,
) -> Result<CleanTransferReport<R::Elem>, RingError> {
    require_member(space, a)?;
    require_member(space, &cand.idempotent)?;
    require_member(space, &cand.unit)?;
    require_radical(space, j_a, "j_a")?;
    let Some(u_inv) = check_clean(space, a, cand)? else {
        return Err(RingError::Precondition(
            "candidate is not a clean decomposition of a".into(),
        ));
    };
    let p = |f: &[&R::Elem]| product(space, f);
    let a_pert = space.add(a, j_a);
    let e = one_minus(space, &cand.idempotent);

    let along_e = space.bc_inverse(a, &e, &e)?;
    let annihilators = along_e.as_ref().map(|x| {
        let ax = space.mul(a, x);
        let xa = space.mul(x, a);
        (
            p(&[&ax, &a_pert, &one_minus(space, &ax)]),
            p(&[&one_minus(space, &xa), &a_pert, &xa]),
        )
    });
    let criterion = annihilators
        .as_ref()
        .is_some_and(|(l, r)| space.is_zero(l) && space.is_zero(r));

    let ueu = p(&[&cand.unit, &e, &u_inv]);
    let conjugate_idempotent = space.bc_inverse(&space.one(), &ueu, &e)?;
    let conjugate_criterion = conjugate_idempotent.as_ref().is_some_and(|f| {
        let f_bar = one_minus(space, f);
        space.is_zero(&p(&[f, &a_pert, &f_bar]))
            && space.is_zero(&p(&[&f_bar, &cand.unit, &a_pert, &u_inv, f]))
    });

    let witness = criterion.then(|| CleanCandidate {
        idempotent: cand.idempotent.clone(),
        unit: space.add(&cand.unit, j_a),
    });
    let witness_valid = match &witness {
        Some(w) => Some(is_strongly_clean_decomposition(space, &a_pert, w)?),
        None => None,
    };
    Ok(CleanTransferReport {
        along_e,
        annihilators,
        criterion,
        conjugate_idempotent,
        conjugate_criterion,
        witness,
        witness_valid,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialCleanReport<E> {
    pub residual: E,
    /// `(1 + a⁺j_a)⁻¹a⁺`
    pub inverse: Option<E>,
    /// `inverse` is a reflexive inverse of `a + j_a`.
    pub reflexive: Option<bool>,
    /// `inverse` has a group inverse.
    pub group_invertible: Option<bool>,
    pub regular: Option<bool>,
}

impl<E> SpecialCleanReport<E> {
    pub fn consistent(&self) -> bool {
        let exists = self.inverse.is_some();
        self.regular.is_none_or(|r| r == exists)
            && self.reflexive.is_none_or(|v| v)
            && self.group_invertible.is_none_or(|v| v)
    }
}

fn group_invertible<R: RingSpace + ?Sized>(space: &R, z: &R::Elem) -> Result<bool, RingError> {
    Ok(space.bc_inverse(z, z, z)?.is_some())
}

/// Special cleanness of `a + j_a` from a group invertible reflexive
/// inverse `a⁺` of `a`.
pub fn special_clean_transfer<R: RingSpace + ?Sized>(
    space: &R,
    a: &R::Elem,
    a_plus: &R::Elem,
    j_a: &R::Elem,
) -> Result<SpecialCleanReport<R::Elem>, RingError> {
    require_member(space, a_plus)?;
    if !group_invertible(space, a_plus)? {
        return Err(RingError::Precondition("a⁺ is not group invertible".into()));
    }
    let rp = regular_perturb(space, a, a_plus, j_a)?;
    debug_assert_eq!(rp.residual, regularity_residual(space, a, a_plus, j_a)?);
    let regular = is_regular(space, &space.add(a, j_a))?;
    let group = match &rp.inverse {
        Some(z) => Some(group_invertible(space, z)?),
        None => None,
    };
    Ok(SpecialCleanReport {
        residual: rp.residual,
        inverse: rp.inverse,
        reflexive: rp.verified,
        group_invertible: group,
        regular,
    })
}
