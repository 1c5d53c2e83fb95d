use serde::Serialize;

use super::{composite_radical, is_regular, perturb_bc, regularity_residual, PerturbationInput};
use crate::ring::{
    inverse_one_plus, is_reflexive, one_minus, one_plus, phi, product, require_member,
    require_radical, sum, verify_inverse, InverseKind, Involution, RingError, RingSpace,
};

/// The three inverses whose perturbation shares one pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mgc {
    MoorePenrose,
    Group,
    Core,
}

impl Mgc {
    pub fn kind<E>(self) -> InverseKind<E> {
        match self {
            Mgc::MoorePenrose => InverseKind::MoorePenrose,
            Mgc::Group => InverseKind::Group,
            Mgc::Core => InverseKind::Core,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MgcReport<E> {
    pub kind: Mgc,
    /// Regularity residual of `a + j_a` with respect to `a⁺`.
    pub residual: E,
    /// `j₁`, `j₂` or `j₃`.
    pub j: E,
    pub regular: Option<bool>,
    pub result: Option<E>,
    pub verified: Option<bool>,
    /// The explicit `j` and the value agree with the general `(b,c)` formula.
    pub theorem_agrees: bool,
}

impl<E> MgcReport<E> {
    /// Existence, regularity of `a + j_a` and a vanishing residual coincide.
    pub fn consistent(&self) -> bool {
        let exists = self.result.is_some();
        self.regular.is_none_or(|r| r == exists) && self.verified.is_none_or(|v| v)
    }
}

fn star<R: RingSpace + ?Sized>(space: &R, x: &R::Elem) -> Result<R::Elem, RingError> {
    space
        .involution(x)
        .ok_or(RingError::MissingInvolution("moore-penrose/core"))
}

/// Moore-Penrose, group or core inverse of `a + j_a` from that of `a` and a
/// reflexive inverse `a⁺`.
pub fn mgc_perturb<R: RingSpace + ?Sized>(
    space: &R,
    kind: Mgc,
    a: &R::Elem,
    a_inv: &R::Elem,
    a_plus: &R::Elem,
    j_a: &R::Elem,
) -> Result<MgcReport<R::Elem>, RingError> {
    require_member(space, a)?;
    require_member(space, a_inv)?;
    require_member(space, a_plus)?;
    require_radical(space, j_a, "j_a")?;
    let inv_kind = kind.kind();
    let involution = |x: &R::Elem| space.involution(x).expect("checked");
    let needs_star = inv_kind.needs_involution();
    if needs_star && space.involution(a).is_none() {
        return Err(RingError::MissingInvolution(inv_kind.label()));
    }
    let invol: Option<Involution<'_, R::Elem>> = if needs_star { Some(&involution) } else { None };
    if !verify_inverse(space, &inv_kind, a, a_inv, invol)?.passed {
        return Err(RingError::Precondition(format!(
            "the given element is not the {} inverse of a",
            inv_kind.label()
        )));
    }
    if !is_reflexive(space, a, a_plus) {
        return Err(RingError::Precondition(
            "a⁺ is not a reflexive inverse of a".into(),
        ));
    }

    let p = |f: &[&R::Elem]| product(space, f);
    let residual = regularity_residual(space, a, a_plus, j_a)?;
    let (b, c, b_plus, c_plus, j_b, j_c) = match kind {
        Mgc::MoorePenrose => {
            let (sa, sp, sj) = (star(space, a)?, star(space, a_plus)?, star(space, j_a)?);
            (sa.clone(), sa, sp.clone(), sp, sj.clone(), sj)
        }
        Mgc::Group => (
            a.clone(),
            a.clone(),
            a_plus.clone(),
            a_plus.clone(),
            j_a.clone(),
            j_a.clone(),
        ),
        Mgc::Core => (
            a.clone(),
            star(space, a)?,
            a_plus.clone(),
            star(space, a_plus)?,
            j_a.clone(),
            star(space, j_a)?,
        ),
    };
    let j = match kind {
        Mgc::MoorePenrose => {
            let (sj, sp) = (&j_b, &b_plus);
            sum(
                space,
                &[
                    j_a.clone(),
                    p(&[a, sj, sp]),
                    p(&[sp, sj, a]),
                    p(&[j_a, sj, sp]),
                    p(&[sp, sj, j_a]),
                    p(&[sp, sj, a, sj, sp]),
                    p(&[sp, sj, j_a, sj, sp]),
                ],
            )
        }
        Mgc::Group => sum(
            space,
            &[
                j_a.clone(),
                p(&[a, j_a, a_plus]),
                p(&[a_plus, j_a, a]),
                p(&[j_a, j_a, a_plus]),
                p(&[a_plus, j_a, j_a]),
                p(&[a_plus, j_a, a, j_a, a_plus]),
                p(&[a_plus, j_a, j_a, j_a, a_plus]),
            ],
        ),
        Mgc::Core => {
            let (sj, sp) = (&j_c, &c_plus);
            sum(
                space,
                &[
                    j_a.clone(),
                    p(&[a, j_a, a_plus]),
                    p(&[sp, sj, a]),
                    p(&[j_a, j_a, a_plus]),
                    p(&[sp, sj, j_a]),
                    p(&[sp, sj, a, j_a, a_plus]),
                    p(&[sp, sj, j_a, j_a, a_plus]),
                ],
            )
        }
    };
    let input = PerturbationInput {
        a: a.clone(),
        b,
        c,
        a_bc: a_inv.clone(),
        b_plus,
        c_plus,
        j_a: j_a.clone(),
        j_b,
        j_c,
    };
    let general = perturb_bc(space, &input)?;
    let mut theorem_agrees = general.composite_j == j && composite_radical(space, &input) == j;

    let a_pert = space.add(a, j_a);
    let regular = is_regular(space, &a_pert)?;
    let mut report = MgcReport {
        kind,
        residual,
        j,
        regular,
        result: None,
        verified: None,
        theorem_agrees,
    };
    if !space.is_zero(&report.residual) {
        report.theorem_agrees &= !general.exists();
        return Ok(report);
    }
    let left = one_plus(space, &space.mul(&input.j_b, &input.b_plus));
    let right = one_plus(space, &space.mul(&input.c_plus, &input.j_c));
    let mid = inverse_one_plus(space, &space.mul(&report.j, a_inv))?;
    let value = p(&[&left, a_inv, &mid, &right]);
    theorem_agrees &= general.perturbed_inverse.as_ref() == Some(&value);
    report.verified = Some(verify_inverse(space, &inv_kind, &a_pert, &value, invol)?.passed);
    report.theorem_agrees = theorem_agrees;
    report.result = Some(value);
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DrazinPerturbReport<E> {
    pub l: usize,
    /// `(a+j_a)^l - a^l`
    pub j1: E,
    pub residual: E,
    pub composite_j: E,
    pub result: Option<E>,
    /// The value passed the Drazin equations with exponent `l`.
    pub verified: Option<bool>,
    pub theorem_agrees: bool,
}

/// Drazin inverse of `a + j_a` from `a^D` (index `k`) at exponent `l ≥ k`.
pub fn drazin_perturb<R: RingSpace + ?Sized>(
    space: &R,
    a: &R::Elem,
    a_d: &R::Elem,
    k: usize,
    j_a: &R::Elem,
    l: Option<usize>,
) -> Result<DrazinPerturbReport<R::Elem>, RingError> {
    require_member(space, a)?;
    require_member(space, a_d)?;
    require_radical(space, j_a, "j_a")?;
    if !verify_inverse(space, &InverseKind::Drazin(k), a, a_d, None)?.passed {
        return Err(RingError::Precondition(format!(
            "the given element is not a Drazin inverse of a with exponent {k}"
        )));
    }
    let l = l.unwrap_or(k);
    if l < k {
        return Err(RingError::Precondition(format!(
            "l = {l} is below the index {k}"
        )));
    }
    let p = |f: &[&R::Elem]| product(space, f);
    let a_pert = space.add(a, j_a);
    let al = space.pow(a, l);
    let dl = space.pow(a_d, l);
    let j1 = space.sub(&space.pow(&a_pert, l), &al);
    let residual = p(&[
        &one_minus(space, &space.mul(a, a_d)),
        &j1,
        &inverse_one_plus(space, &space.mul(&dl, &j1))?,
        &one_minus(space, &space.mul(a_d, a)),
    ]);
    let composite_j = sum(
        space,
        &[
            j_a.clone(),
            p(&[a, &j1, &dl]),
            p(&[&dl, &j1, a]),
            p(&[j_a, &j1, &dl]),
            p(&[&dl, &j1, j_a]),
            p(&[&dl, &j1, a, &j1, &dl]),
            p(&[&dl, &j1, j_a, &j1, &dl]),
        ],
    );
    let input = PerturbationInput {
        a: a.clone(),
        b: al.clone(),
        c: al,
        a_bc: a_d.clone(),
        b_plus: dl.clone(),
        c_plus: dl.clone(),
        j_a: j_a.clone(),
        j_b: j1.clone(),
        j_c: j1.clone(),
    };
    let general = perturb_bc(space, &input)?;
    let mut report = DrazinPerturbReport {
        l,
        theorem_agrees: general.composite_j == composite_j,
        j1,
        residual,
        composite_j,
        result: None,
        verified: None,
    };
    if !space.is_zero(&report.residual) {
        report.theorem_agrees &= !general.exists();
        return Ok(report);
    }
    let value = p(&[
        &one_plus(space, &space.mul(&report.j1, &dl)),
        a_d,
        &inverse_one_plus(space, &space.mul(&report.composite_j, a_d))?,
        &one_plus(space, &space.mul(&dl, &report.j1)),
    ]);
    report.theorem_agrees &= general.perturbed_inverse.as_ref() == Some(&value);
    report.verified =
        Some(verify_inverse(space, &InverseKind::Drazin(l), &a_pert, &value, None)?.passed);
    report.result = Some(value);
    Ok(report)
}

/// The six absorption conditions for `x ∈ a{2}` and `y ∈ (a+j_a){2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbsorptionReport {
    /// Conditions (1)..(6) in order.
    pub conditions: [bool; 6],
}

impl AbsorptionReport {
    pub fn all_agree(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0])
    }
}

/// Evaluates the six conditions. The last one, `x = a^{‖(b,c)}` and
/// `y = (a+j_a)^{‖(b,c)}` for some `b, c`, is decided with `b = c = x`: an
/// outer inverse `x` of `a` is always `a^{‖(x,x)}`, and a `(b,c)`-inverse
/// only depends on `bR` and `Rc`.
pub fn absorption_equivalences<R: RingSpace + ?Sized>(
    space: &R,
    a: &R::Elem,
    j_a: &R::Elem,
    x: &R::Elem,
    y: &R::Elem,
) -> Result<AbsorptionReport, RingError> {
    require_member(space, a)?;
    require_member(space, x)?;
    require_member(space, y)?;
    require_radical(space, j_a, "j_a")?;
    let p = |f: &[&R::Elem]| product(space, f);
    let a_pert = space.add(a, j_a);
    if p(&[x, a, x]) != *x {
        return Err(RingError::Precondition(
            "x is not an outer inverse of a".into(),
        ));
    }
    if p(&[y, &a_pert, y]) != *y {
        return Err(RingError::Precondition(
            "y is not an outer inverse of a + j_a".into(),
        ));
    }
    let s = space.add(a, &a_pert);
    let x_plus_y = space.add(x, y);
    let xsy = p(&[x, &s, y]);
    let ysx = p(&[y, &s, x]);
    let c2 = xsy == x_plus_y;
    let c1 = c2 && ysx == x_plus_y;
    let c3 = p(&[x, j_a, y]) == space.sub(x, y);
    let c4 = space.right_factor(y, x)?.is_some()
        && space.right_factor(x, y)?.is_some()
        && space.left_factor(y, x)?.is_some()
        && space.left_factor(x, y)?.is_some();
    let c5 = phi(space, x, j_a)? == *y;
    let c6 = verify_inverse(space, &InverseKind::Along(x.clone()), &a_pert, y, None)?.passed;
    Ok(AbsorptionReport {
        conditions: [c1, c2, c3, c4, c5, c6],
    })
}

/// Idempotence of `(a+j_a)^{‖(b,c)}` given that `a^{‖(b,c)}` exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotenceReport<E> {
    pub bc_inverse: E,
    pub perturbed_bc_inverse: Option<E>,
    /// Conditions (1), (2), (3) in order.
    pub conditions: [bool; 3],
    /// `c(a+j_a)b = cb`, which condition (3) reduces to.
    pub reduced_form: bool,
}

impl<E> IdempotenceReport<E> {
    pub fn all_agree(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0])
            && self.reduced_form == self.conditions[0]
    }
}

fn resolve_plus<R: RingSpace + ?Sized>(
    space: &R,
    x: &R::Elem,
    given: Option<&R::Elem>,
    name: &str,
) -> Result<Option<R::Elem>, RingError> {
    match given {
        Some(g) => {
            require_member(space, g)?;
            if !is_reflexive(space, x, g) {
                return Err(RingError::Precondition(format!(
                    "{name}⁺ is not a reflexive inverse of {name}"
                )));
            }
            Ok(Some(g.clone()))
        }
        None => space.reflexive_inverse(x),
    }
}

/// `c⁺cbb⁺ + (1 - c⁺c)z + c⁺cz(1 - bb⁺)`
fn corner_form<R: RingSpace + ?Sized>(
    space: &R,
    z: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
    b_plus: &R::Elem,
    c_plus: &R::Elem,
) -> R::Elem {
    let cpc = space.mul(c_plus, c);
    let bbp = space.mul(b, b_plus);
    sum(
        space,
        &[
            product(space, &[c_plus, c, b, b_plus]),
            space.mul(&one_minus(space, &cpc), z),
            product(space, &[&cpc, z, &one_minus(space, &bbp)]),
        ],
    )
}

pub fn idempotence_check<R: RingSpace + ?Sized>(
    space: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
    j_a: &R::Elem,
    b_plus: Option<&R::Elem>,
    c_plus: Option<&R::Elem>,
) -> Result<IdempotenceReport<R::Elem>, RingError> {
    for e in [a, b, c] {
        require_member(space, e)?;
    }
    require_radical(space, j_a, "j_a")?;
    let x = space
        .bc_inverse(a, b, c)?
        .ok_or_else(|| RingError::Precondition("a has no (b,c)-inverse".into()))?;
    let (Some(bp), Some(cp)) = (
        resolve_plus(space, b, b_plus, "b")?,
        resolve_plus(space, c, c_plus, "c")?,
    ) else {
        return Err(RingError::Precondition(
            "b or c has no reflexive inverse".into(),
        ));
    };
    let a_pert = space.add(a, j_a);
    let y = space.bc_inverse(&a_pert, b, c)?;
    let c1 = y.as_ref().is_some_and(|y| space.mul(y, y) == *y);
    let c2 = space.mul(&x, &x) == product(space, &[&x, &a_pert, &x]);
    let c3 = corner_form(space, &a_pert, b, c, &bp, &cp) == a_pert;
    let reduced_form = product(space, &[c, &a_pert, b]) == space.mul(c, b);
    Ok(IdempotenceReport {
        bc_inverse: x,
        perturbed_bc_inverse: y,
        conditions: [c1, c2, c3],
        reduced_form,
    })
}

/// Joint idempotence of `a^{‖(b,c)}` and `(a+j_a)^{‖(b,c)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JointIdempotenceReport<E> {
    /// `a^{‖(b,c)}` exists and both inverses are idempotent.
    pub jointly_idempotent: bool,
    /// `cbR = cR` and `Rcb = Rb`.
    pub trace_product: bool,
    /// `bcR = bR` and `Rbc = Rc`, reported for comparison only.
    pub trace_product_bc: bool,
    pub a_decomposes: bool,
    pub j_decomposes: bool,
    /// `1^{‖(b,c)}`
    pub unit_bc_inverse: Option<E>,
    /// When jointly idempotent, both inverses equal `1^{‖(b,c)}`.
    pub coincide: Option<bool>,
}

impl<E> JointIdempotenceReport<E> {
    /// The criterion: trace product and both decompositions.
    pub fn criterion(&self) -> bool {
        self.trace_product && self.a_decomposes && self.j_decomposes
    }

    pub fn consistent(&self) -> bool {
        self.criterion() == self.jointly_idempotent && self.coincide.is_none_or(|c| c)
    }
}

fn is_trace_product<R: RingSpace + ?Sized>(
    space: &R,
    left: &R::Elem,
    right: &R::Elem,
) -> Result<bool, RingError> {
    // left·right·R = left·R and R·left·right = R·right
    let prod = space.mul(left, right);
    Ok(space.right_factor(&prod, left)?.is_some() && space.left_factor(&prod, right)?.is_some())
}

pub fn joint_idempotence_check<R: RingSpace + ?Sized>(
    space: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
    j_a: &R::Elem,
    b_plus: Option<&R::Elem>,
    c_plus: Option<&R::Elem>,
) -> Result<JointIdempotenceReport<R::Elem>, RingError> {
    for e in [a, b, c] {
        require_member(space, e)?;
    }
    require_radical(space, j_a, "j_a")?;
    let a_pert = space.add(a, j_a);
    let x = space.bc_inverse(a, b, c)?;
    let y = space.bc_inverse(&a_pert, b, c)?;
    let idem = |z: &Option<R::Elem>| z.as_ref().is_some_and(|z| space.mul(z, z) == *z);
    let jointly_idempotent = idem(&x) && idem(&y);
    let trace_product = is_trace_product(space, c, b)?;
    let trace_product_bc = is_trace_product(space, b, c)?;
    let (a_decomposes, j_decomposes) = match (
        resolve_plus(space, b, b_plus, "b")?,
        resolve_plus(space, c, c_plus, "c")?,
    ) {
        (Some(bp), Some(cp)) => {
            let cpc = space.mul(&cp, c);
            let bbp = space.mul(b, &bp);
            let j_form = space.add(
                &space.mul(&one_minus(space, &cpc), j_a),
                &product(space, &[&cpc, j_a, &one_minus(space, &bbp)]),
            );
            (corner_form(space, a, b, c, &bp, &cp) == *a, j_form == *j_a)
        }
        _ => (false, false),
    };
    let unit_bc_inverse = space.bc_inverse(&space.one(), b, c)?;
    let coincide = jointly_idempotent.then(|| x == unit_bc_inverse && y == unit_bc_inverse);
    Ok(JointIdempotenceReport {
        jointly_idempotent,
        trace_product,
        trace_product_bc,
        a_decomposes,
        j_decomposes,
        unit_bc_inverse,
        coincide,
    })
}
