//! The ring `T₂(ℤ)` of upper triangular integer 2x2 matrices.
//!
//! Elements are stored as `[a, b, c]` for `[[a, b], [0, c]]`.

use num_integer::Integer;
use serde::Serialize;

use super::clean::CleanCandidate;
use crate::matrix::{bc_inverse, Matrix};
use crate::ring::{verify_inverse, InverseKind, RingError, RingSpace};
use crate::scalar::rational_to_i64;
use crate::QMatrix;

pub type T2 = [i64; 3];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct T2IntRing;

/// Some `u` with `p·u = t`.
fn solve1(p: i64, t: i64) -> Option<i64> {
    match p {
        0 => (t == 0).then_some(0),
        _ => (t % p == 0).then(|| t / p),
    }
}

/// Some `(u, v)` with `p·u + q·v = t`.
fn solve2(p: i64, q: i64, t: i64) -> Option<(i64, i64)> {
    if p == 0 && q == 0 {
        return (t == 0).then_some((0, 0));
    }
    let g = p.extended_gcd(&q);
    (t % g.gcd == 0).then(|| {
        let k = t / g.gcd;
        (g.x * k, g.y * k)
    })
}

fn to_rational(x: &T2) -> QMatrix {
    Matrix::from_i64(&[&[x[0], x[1]], &[0, x[2]]])
}

fn from_rational(m: &QMatrix) -> Option<T2> {
    if !m.get(1, 0).eq(&num_traits::Zero::zero()) {
        return None;
    }
    Some([
        rational_to_i64(m.get(0, 0))?,
        rational_to_i64(m.get(0, 1))?,
        rational_to_i64(m.get(1, 1))?,
    ])
}

impl RingSpace for T2IntRing {
    type Elem = T2;

    fn name(&self) -> String {
        "T2(Z)".into()
    }

    fn contains(&self, _x: &T2) -> bool {
        true
    }

    fn zero(&self) -> T2 {
        [0, 0, 0]
    }

    fn one(&self) -> T2 {
        [1, 0, 1]
    }

    fn add(&self, x: &T2, y: &T2) -> T2 {
        [x[0] + y[0], x[1] + y[1], x[2] + y[2]]
    }

    fn neg(&self, x: &T2) -> T2 {
        [-x[0], -x[1], -x[2]]
    }

    fn mul(&self, x: &T2, y: &T2) -> T2 {
        [x[0] * y[0], x[0] * y[1] + x[1] * y[2], x[2] * y[2]]
    }

    fn nilpotency_bound(&self) -> usize {
        2
    }

    fn is_radical(&self, x: &T2) -> bool {
        x[0] == 0 && x[2] == 0
    }

    fn right_factor(&self, b: &T2, y: &T2) -> Result<Option<T2>, RingError> {
        // b·r: [b0 r0, b0 r1 + b1 r2, b2 r2]
        let Some(r0) = solve1(b[0], y[0]) else {
            return Ok(None);
        };
        let tail = if b[2] == 0 {
            if y[2] != 0 {
                return Ok(None);
            }
            solve2(b[0], b[1], y[1])
        } else {
            solve1(b[2], y[2]).and_then(|r2| solve1(b[0], y[1] - b[1] * r2).map(|r1| (r1, r2)))
        };
        Ok(tail.map(|(r1, r2)| [r0, r1, r2]))
    }

    fn left_factor(&self, c: &T2, y: &T2) -> Result<Option<T2>, RingError> {
        // s·c: [s0 c0, s0 c1 + s1 c2, s2 c2]
        let Some(s2) = solve1(c[2], y[2]) else {
            return Ok(None);
        };
        let head = if c[0] == 0 {
            if y[0] != 0 {
                return Ok(None);
            }
            solve2(c[1], c[2], y[1])
        } else {
            solve1(c[0], y[0]).and_then(|s0| solve1(c[2], y[1] - s0 * c[1]).map(|s1| (s0, s1)))
        };
        Ok(head.map(|(s0, s1)| [s0, s1, s2]))
    }

    fn unit_inverse(&self, x: &T2) -> Result<Option<T2>, RingError> {
        let unit = |v: i64| v == 1 || v == -1;
        Ok((unit(x[0]) && unit(x[2])).then(|| [x[0], -x[0] * x[1] * x[2], x[2]]))
    }

    /// Computed over the rationals, where the inverse is unique, and kept
    /// only if it is integral and passes the defining equations here.
    fn bc_inverse(&self, a: &T2, b: &T2, c: &T2) -> Result<Option<T2>, RingError> {
        let Ok(y) = bc_inverse(&to_rational(a), &to_rational(b), &to_rational(c)) else {
            return Ok(None);
        };
        let Some(y) = from_rational(&y) else {
            return Ok(None);
        };
        let ok = verify_inverse(self, &InverseKind::Bc(*b, *c), a, &y, None)?.passed;
        Ok(ok.then_some(y))
    }
}

/// One family of idempotents of `T₂(ℤ)` in the strongly clean search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyOutcome {
    pub family: &'static str,
    /// `a - e` is a unit (independent of the family parameter).
    pub unit: bool,
    /// `(α, β)` with the commuting condition `ea = ae` reading `α·x + β = 0`.
    pub equation: Option<(i64, i64)>,
    pub solution: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StronglyCleanSearch {
    pub families: Vec<FamilyOutcome>,
    pub decomposition: Option<CleanCandidate<T2>>,
}

/// Exhaustive strongly clean search in `T₂(ℤ)`. The idempotents are `0`, `1`,
/// `[[1,x],[0,0]]` and `[[0,x],[0,1]]` for `x ∈ ℤ`; the units are the
/// elements with diagonal entries `±1`. For a parametrized family the unit
/// condition does not involve `x` and the commuting condition is affine in
/// `x`, so each family reduces to one linear equation over `ℤ`.
pub fn strongly_clean_search(a: &T2) -> StronglyCleanSearch {
    let r = T2IntRing;
    type Family = (&'static str, fn(i64) -> T2, bool);
    let families: [Family; 4] = [
        ("0", |_| [0, 0, 0], false),
        ("1", |_| [1, 0, 1], false),
        ("[[1,x],[0,0]]", |x| [1, x, 0], true),
        ("[[0,x],[0,1]]", |x| [0, x, 1], true),
    ];
    let commutator = |e: &T2| {
        let d = r.sub(&r.mul(e, a), &r.mul(a, e));
        debug_assert!(d[0] == 0 && d[2] == 0);
        d[1]
    };
    let mut outcomes = Vec::new();
    let mut decomposition = None;
    for (family, make, parametrized) in families {
        let unit = r
            .unit_inverse(&r.sub(a, &make(0)))
            .expect("infallible")
            .is_some();
        let (equation, solution) = if parametrized {
            let beta = commutator(&make(0));
            let alpha = commutator(&make(1)) - beta;
            debug_assert_eq!(commutator(&make(2)), 2 * alpha + beta);
            let sol = match alpha {
                0 => (beta == 0).then_some(0),
                _ => (beta % alpha == 0).then(|| -beta / alpha),
            };
            (Some((alpha, beta)), sol)
        } else {
            (None, (commutator(&make(0)) == 0).then_some(0))
        };
        if decomposition.is_none() && unit {
            if let Some(x) = solution {
                let e = make(x);
                decomposition = Some(CleanCandidate {
                    idempotent: e,
                    unit: r.sub(a, &e),
                });
            }
        }
        outcomes.push(FamilyOutcome {
            family,
            unit,
            equation,
            solution,
        });
    }
    StronglyCleanSearch {
        families: outcomes,
        decomposition,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factoring_matches_bounded_search() {
        let r = T2IntRing;
        let elems: Vec<T2> = (-2..=2)
            .flat_map(|a| (-2..=2).flat_map(move |b| (-2..=2).map(move |c| [a, b, c])))
            .collect();
        let wide: Vec<T2> = (-6..=6)
            .flat_map(|a| (-6..=6).flat_map(move |b| (-6..=6).map(move |c| [a, b, c])))
            .collect();
        for b in &elems {
            for y in &elems {
                if let Some(f) = r.right_factor(b, y).unwrap() {
                    assert_eq!(r.mul(b, &f), *y);
                } else {
                    assert!(wide.iter().all(|f| r.mul(b, f) != *y), "{b:?} {y:?}");
                }
                if let Some(f) = r.left_factor(b, y).unwrap() {
                    assert_eq!(r.mul(&f, b), *y);
                } else {
                    assert!(wide.iter().all(|f| r.mul(f, b) != *y), "{b:?} {y:?}");
                }
            }
        }
    }

    #[test]
    fn unit_inverse_multiplies_back() {
        let r = T2IntRing;
        for u in [[1, 5, -1], [-1, 3, -1], [1, -2, 1]] {
            let v = r.unit_inverse(&u).unwrap().unwrap();
            assert_eq!(r.mul(&u, &v), r.one());
            assert_eq!(r.mul(&v, &u), r.one());
        }
        assert_eq!(r.unit_inverse(&[2, 0, 1]).unwrap(), None);
    }

    #[test]
    fn idempotent_plus_unit_is_found() {
        let s = strongly_clean_search(&[2, 0, 0]);
        let d = s.decomposition.unwrap();
        let r = T2IntRing;
        assert_eq!(r.add(&d.idempotent, &d.unit), [2, 0, 0]);
        assert_eq!(r.mul(&d.idempotent, &d.idempotent), d.idempotent);
    }
}
