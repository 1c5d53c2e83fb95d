//! Ring-agnostic generalized-inverse definitions.
//!
//! A [`RingSpace`] is a concrete ring instance (a matrix ring of fixed size, a
//! finite ring, a truncated series ring, ...) that owns the arithmetic of its
//! elements. Every generalized inverse is defined here as a system of equations
//! whose residuals are reported as ring elements by [`verify_inverse`].

use std::fmt::Debug;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::matrix::{solve, Matrix, MatrixError};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("element {element} does not belong to {space}")]
    MixedSpaces { element: String, space: String },
    #[error("{0} needs an involution but none was supplied")]
    MissingInvolution(&'static str),
    #[error("element is not nilpotent within bound {bound}")]
    NonNilpotent { bound: usize },
    #[error("{op} is not supported by {space}")]
    Unsupported { op: &'static str, space: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A ring with identity together with the capabilities the perturbation
/// engine needs: radical membership, nilpotency bound, one-sided factoring
/// (the constructive side of `y ∈ bR ∩ Rc`) and unit inversion.
pub trait RingSpace: Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    /// Identifier of this space; elements of other spaces are rejected.
    fn name(&self) -> String;
    fn contains(&self, x: &Self::Elem) -> bool;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        *x == self.zero()
    }

    fn pow(&self, x: &Self::Elem, k: usize) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Upper bound `m` such that every radical element `n` has `n^m = 0`.
    fn nilpotency_bound(&self) -> usize;

    /// Membership in the Jacobson radical.
    fn is_radical(&self, x: &Self::Elem) -> bool;

    /// The ring's standard involution, if it has one.
    fn involution(&self, _x: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    /// Some `r` with `y = b·r`.
    fn right_factor(&self, b: &Self::Elem, y: &Self::Elem)
        -> Result<Option<Self::Elem>, RingError>;

    /// Some `s` with `y = s·c`.
    fn left_factor(&self, c: &Self::Elem, y: &Self::Elem) -> Result<Option<Self::Elem>, RingError>;

    fn unit_inverse(&self, x: &Self::Elem) -> Result<Option<Self::Elem>, RingError>;

    /// Some `g` with `x·g·x = x`.
    fn inner_inverse(&self, _x: &Self::Elem) -> Result<Option<Self::Elem>, RingError> {
        Err(RingError::Unsupported {
            op: "inner_inverse",
            space: self.name(),
        })
    }

    /// A reflexive inverse `g·x·g` built from [`RingSpace::inner_inverse`].
    fn reflexive_inverse(&self, x: &Self::Elem) -> Result<Option<Self::Elem>, RingError> {
        Ok(self
            .inner_inverse(x)?
            .map(|g| self.mul(&self.mul(&g, x), &g)))
    }

    /// The `(b,c)`-inverse of `a`, by a route native to this ring.
    fn bc_inverse(
        &self,
        a: &Self::Elem,
        b: &Self::Elem,
        c: &Self::Elem,
    ) -> Result<Option<Self::Elem>, RingError>;
}

/// Finite-dimensional algebras over an exact field: one-sided factoring and
/// inner inverses reduce to linear systems in coordinates.
pub trait LinearAlgebra: RingSpace {
    type Field: Scalar;
    fn dim(&self) -> usize;
    fn coords(&self, x: &Self::Elem) -> Vec<Self::Field>;
    fn assemble(&self, v: &[Self::Field]) -> Self::Elem;
}

/// Solves `map(z) = rhs` for a linear `map`.
pub fn solve_linear<S: LinearAlgebra>(
    space: &S,
    map: impl Fn(&S::Elem) -> S::Elem,
    rhs: &S::Elem,
) -> Result<Option<S::Elem>, RingError> {
    let sol = solve_linear_system(space, 1, |z| vec![map(&z[0])], std::slice::from_ref(rhs))?;
    Ok(sol.map(|mut z| z.remove(0)))
}

/// Solves a linear system with several unknown elements and several
/// element-valued equations: `map(z_1..z_k) = rhs`.
pub fn solve_linear_system<S: LinearAlgebra>(
    space: &S,
    unknowns: usize,
    map: impl Fn(&[S::Elem]) -> Vec<S::Elem>,
    rhs: &[S::Elem],
) -> Result<Option<Vec<S::Elem>>, RingError> {
    let dim = space.dim();
    if dim == 0 {
        return Ok(Some(vec![space.zero(); unknowns]));
    }
    let zero = vec![S::Field::zero(); dim];
    let basis_elem = |k: usize| {
        let mut e = zero.clone();
        e[k] = S::Field::one();
        space.assemble(&e)
    };
    let flatten = |elems: &[S::Elem]| -> Vec<S::Field> {
        elems.iter().flat_map(|e| space.coords(e)).collect()
    };
    let target = flatten(rhs);
    let mut columns = Vec::with_capacity(unknowns * dim);
    for u in 0..unknowns {
        for k in 0..dim {
            let args: Vec<S::Elem> = (0..unknowns)
                .map(|v| if v == u { basis_elem(k) } else { space.zero() })
                .collect();
            let col = flatten(&map(&args));
            if col.len() != target.len() {
                return Err(RingError::Precondition(
                    "equation count differs from right-hand side".into(),
                ));
            }
            columns.push(col);
        }
    }
    let m = Matrix::from_fn(target.len(), unknowns * dim, |i, j| columns[j][i].clone());
    let b = Matrix::from_fn(target.len(), 1, |i, _| target[i].clone());
    Ok(solve(&m, &b)?.map(|z| z.entries().chunks(dim).map(|c| space.assemble(c)).collect()))
}

/// Some `g` with `a·g·a = a`, by a linear solve.
pub fn linear_inner_inverse<S: LinearAlgebra>(
    space: &S,
    a: &S::Elem,
) -> Result<Option<S::Elem>, RingError> {
    solve_linear(space, |x| product(space, &[a, x, a]), a)
}

/// The `(b,c)`-inverse through its defining equations, solved for the
/// factors: `b·r = s·c`, `c·a·b·r = c`, `s·c·a·b = b`, then `y = b·r`.
pub fn linear_bc_inverse<S: LinearAlgebra>(
    space: &S,
    a: &S::Elem,
    b: &S::Elem,
    c: &S::Elem,
) -> Result<Option<S::Elem>, RingError> {
    let cab = product(space, &[c, a, b]);
    let sol = solve_linear_system(
        space,
        2,
        |z| {
            let (r, s) = (&z[0], &z[1]);
            vec![
                space.sub(&space.mul(b, r), &space.mul(s, c)),
                space.mul(&cab, r),
                space.mul(s, &cab),
            ]
        },
        &[space.zero(), c.clone(), b.clone()],
    )?;
    Ok(sol.map(|z| space.mul(b, &z[0])))
}

/// `x_0 · x_1 · … · x_k` (the identity for an empty product).
pub fn product<R: RingSpace + ?Sized>(space: &R, factors: &[&R::Elem]) -> R::Elem {
    let mut acc = match factors.first() {
        Some(f) => (*f).clone(),
        None => return space.one(),
    };
    for f in &factors[1..] {
        acc = space.mul(&acc, f);
    }
    acc
}

pub fn sum<R: RingSpace + ?Sized>(space: &R, terms: &[R::Elem]) -> R::Elem {
    terms.iter().fold(space.zero(), |acc, t| space.add(&acc, t))
}

/// `1 - x`
pub fn one_minus<R: RingSpace + ?Sized>(space: &R, x: &R::Elem) -> R::Elem {
    space.sub(&space.one(), x)
}

/// `1 + x`
pub fn one_plus<R: RingSpace + ?Sized>(space: &R, x: &R::Elem) -> R::Elem {
    space.add(&space.one(), x)
}

pub(crate) fn require_member<R: RingSpace + ?Sized>(
    space: &R,
    x: &R::Elem,
) -> Result<(), RingError> {
    if space.contains(x) {
        Ok(())
    } else {
        Err(RingError::MixedSpaces {
            element: format!("{x:?}"),
            space: space.name(),
        })
    }
}

pub(crate) fn require_radical<R: RingSpace + ?Sized>(
    space: &R,
    j: &R::Elem,
    what: &str,
) -> Result<(), RingError> {
    require_member(space, j)?;
    if space.is_radical(j) {
        Ok(())
    } else {
        Err(RingError::Precondition(format!(
            "{what} = {j:?} is not in the radical"
        )))
    }
}

/// Generalized-inverse kinds as equation systems.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InverseKind<E> {
    Regular,
    Reflexive,
    MoorePenrose,
    Group,
    Core,
    /// Drazin equations with exponent `k`.
    Drazin(usize),
    Bc(E, E),
    /// Inverse along `d`, the `(d,d)`-inverse.
    Along(E),
}

impl<E> InverseKind<E> {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Regular => "regular",
            Self::Reflexive => "reflexive",
            Self::MoorePenrose => "moore-penrose",
            Self::Group => "group",
            Self::Core => "core",
            Self::Drazin(_) => "drazin",
            Self::Bc(..) => "bc",
            Self::Along(_) => "along",
        }
    }

    pub fn needs_involution(&self) -> bool {
        matches!(self, Self::MoorePenrose | Self::Core)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residual<E> {
    pub label: String,
    pub value: E,
}

/// Outcome of checking one candidate inverse: every defining equation's
/// residual, plus membership witnesses for `(b,c)`-kinds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictReport<E> {
    pub kind: InverseKind<E>,
    pub passed: bool,
    pub residuals: Vec<Residual<E>>,
    /// `(r, s)` with `y = b·r` and `y = s·c`.
    pub witnesses: Option<(E, E)>,
    pub membership_failure: Option<String>,
}

/// Involution passed to [`verify_inverse`].
pub type Involution<'a, E> = &'a dyn Fn(&E) -> E;

/// Evaluates the defining equations of `kind` for the candidate `x` of `a`.
pub fn verify_inverse<R: RingSpace + ?Sized>(
    space: &R,
    kind: &InverseKind<R::Elem>,
    a: &R::Elem,
    x: &R::Elem,
    involution: Option<Involution<'_, R::Elem>>,
) -> Result<VerdictReport<R::Elem>, RingError> {
    require_member(space, a)?;
    require_member(space, x)?;
    match kind {
        InverseKind::Bc(b, c) => {
            require_member(space, b)?;
            require_member(space, c)?;
        }
        InverseKind::Along(d) => require_member(space, d)?,
        _ => {}
    }
    let star = match (kind.needs_involution(), involution) {
        (true, None) => return Err(RingError::MissingInvolution(kind.label())),
        (_, inv) => inv,
    };
    let m = |u: &R::Elem, v: &R::Elem| space.mul(u, v);
    let d = |u: &R::Elem, v: &R::Elem| space.sub(u, v);
    let res = |label: &str, value: R::Elem| Residual {
        label: label.to_string(),
        value,
    };
    let ax = m(a, x);
    let xa = m(x, a);
    let mut residuals = Vec::new();
    let mut witnesses = None;
    let mut membership_failure = None;
    match kind {
        InverseKind::Regular => residuals.push(res("axa-a", d(&m(&ax, a), a))),
        InverseKind::Reflexive => {
            residuals.push(res("axa-a", d(&m(&ax, a), a)));
            residuals.push(res("xax-x", d(&m(&xa, x), x)));
        }
        InverseKind::MoorePenrose => {
            let star = star.expect("checked above");
            residuals.push(res("axa-a", d(&m(&ax, a), a)));
            residuals.push(res("xax-x", d(&m(&xa, x), x)));
            residuals.push(res("(ax)*-ax", d(&star(&ax), &ax)));
            residuals.push(res("(xa)*-xa", d(&star(&xa), &xa)));
        }
        InverseKind::Group | InverseKind::Drazin(_) => {
            let k = match kind {
                InverseKind::Drazin(k) => *k,
                _ => 1,
            };
            residuals.push(res("ax^2-x", d(&m(&ax, x), x)));
            residuals.push(res("xa-ax", d(&xa, &ax)));
            let ak = space.pow(a, k);
            residuals.push(res("xa^{k+1}-a^k", d(&m(&m(x, &ak), a), &ak)));
        }
        InverseKind::Core => {
            let star = star.expect("checked above");
            residuals.push(res("xa^2-a", d(&m(&xa, a), a)));
            residuals.push(res("ax^2-x", d(&m(&ax, x), x)));
            residuals.push(res("(ax)*-ax", d(&star(&ax), &ax)));
        }
        InverseKind::Bc(..) | InverseKind::Along(_) => {
            let (b, c) = match kind {
                InverseKind::Bc(b, c) => (b, c),
                InverseKind::Along(d) => (d, d),
                _ => unreachable!(),
            };
            residuals.push(res("cay-c", d(&m(c, &ax), c)));
            residuals.push(res("yab-b", d(&m(&xa, b), b)));
            let r = space.right_factor(b, x)?;
            let s = space.left_factor(c, x)?;
            match (r, s) {
                (Some(r), Some(s)) => witnesses = Some((r, s)),
                (None, Some(_)) => membership_failure = Some("y is not in bR".to_string()),
                (Some(_), None) => membership_failure = Some("y is not in Rc".to_string()),
                (None, None) => membership_failure = Some("y is in neither bR nor Rc".to_string()),
            }
        }
    }
    let residuals_vanish = residuals.iter().all(|r| space.is_zero(&r.value));
    let witnesses_ok =
        !matches!(kind, InverseKind::Bc(..) | InverseKind::Along(_)) || witnesses.is_some();
    Ok(VerdictReport {
        kind: kind.clone(),
        passed: residuals_vanish && witnesses_ok,
        residuals,
        witnesses,
        membership_failure,
    })
}

/// Labels of the residuals that did not vanish.
pub fn nonzero_residuals<R: RingSpace + ?Sized>(
    space: &R,
    report: &VerdictReport<R::Elem>,
) -> Vec<String> {
    report
        .residuals
        .iter()
        .filter(|r| !space.is_zero(&r.value))
        .map(|r| r.label.clone())
        .collect()
}

pub fn is_reflexive<R: RingSpace + ?Sized>(space: &R, a: &R::Elem, x: &R::Elem) -> bool {
    let axa = product(space, &[a, x, a]);
    let xax = product(space, &[x, a, x]);
    axa == *a && xax == *x
}

/// `(1 + n)⁻¹ = Σ (-n)^i` for nilpotent `n`, checked against `bound`.
pub fn geometric_inverse<R: RingSpace + ?Sized>(
    space: &R,
    n: &R::Elem,
    bound: usize,
) -> Result<R::Elem, RingError> {
    let step = space.neg(n);
    let mut term = space.one();
    let mut acc = space.one();
    for _ in 0..bound.max(1) {
        term = space.mul(&term, &step);
        if space.is_zero(&term) {
            debug_assert!({
                let one_n = one_plus(space, n);
                space.mul(&acc, &one_n) == space.one() && space.mul(&one_n, &acc) == space.one()
            });
            return Ok(acc);
        }
        acc = space.add(&acc, &term);
    }
    Err(RingError::NonNilpotent { bound })
}

/// `(1 + n)⁻¹` with the space's own nilpotency bound.
pub fn inverse_one_plus<R: RingSpace + ?Sized>(
    space: &R,
    n: &R::Elem,
) -> Result<R::Elem, RingError> {
    geometric_inverse(space, n, space.nilpotency_bound())
}

/// `φ(x) = (1 + x·j)⁻¹·x`, mapping `a{2}` onto `(a+j){2}`.
pub fn phi<R: RingSpace + ?Sized>(
    space: &R,
    x: &R::Elem,
    j: &R::Elem,
) -> Result<R::Elem, RingError> {
    let u = inverse_one_plus(space, &space.mul(x, j))?;
    Ok(space.mul(&u, x))
}

/// `φ⁻¹(y) = (1 - y·j)⁻¹·y`.
pub fn phi_inv<R: RingSpace + ?Sized>(
    space: &R,
    y: &R::Elem,
    j: &R::Elem,
) -> Result<R::Elem, RingError> {
    let u = inverse_one_plus(space, &space.neg(&space.mul(y, j)))?;
    Ok(space.mul(&u, y))
}
