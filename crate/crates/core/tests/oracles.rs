//! Exhaustive comparisons against brute-force scans of small finite rings.

use std::collections::HashSet;

use radinv::dual::{dual_generalized_inverse, DualKind};
use radinv::finite::{FElem, FiniteRing, RingSpec};
use radinv::matrix::bc_inverse;
use radinv::{DualMatrix, DualMatrixRing, Matrix, ModInt, RingSpace};

/// For every `(b, c)`, the elements of `bR ∩ Rc`.
fn candidates(ring: &FiniteRing) -> Vec<Vec<Vec<FElem>>> {
    let right: Vec<HashSet<FElem>> = ring
        .elements()
        .iter()
        .map(|b| ring.right_ideal(b))
        .collect();
    let left: Vec<HashSet<FElem>> = ring.elements().iter().map(|c| ring.left_ideal(c)).collect();
    right
        .iter()
        .map(|br| {
            left.iter()
                .map(|rc| br.intersection(rc).copied().collect())
                .collect()
        })
        .collect()
}

/// Every `y ∈ bR ∩ Rc` with `cay = c` and `yab = b`.
fn scan(ring: &FiniteRing, cand: &[FElem], a: &FElem, b: &FElem, c: &FElem) -> Vec<FElem> {
    let ca = ring.mul(c, a);
    cand.iter()
        .filter(|y| ring.mul(&ca, y) == *c && ring.mul(&ring.mul(y, a), b) == *b)
        .copied()
        .collect()
}

fn to_matrix<const P: u64>(x: &FElem) -> Matrix<ModInt<P>> {
    let e: Vec<i64> = x.entries().iter().map(|&v| i64::from(v)).collect();
    Matrix::from_i64(&[&e[0..2], &e[2..4]])
}

fn bc_matches_brute_force<const P: u64>() {
    let ring = FiniteRing::new(RingSpec::M2(P)).unwrap();
    let elems = ring.elements();
    for x in elems {
        for y in elems {
            assert_eq!(
                to_matrix::<P>(&ring.mul(x, y)),
                &to_matrix::<P>(x) * &to_matrix::<P>(y)
            );
        }
    }
    let cand = candidates(&ring);
    let mut found = 0;
    for (bi, b) in elems.iter().enumerate() {
        for (ci, c) in elems.iter().enumerate() {
            let (mb, mc) = (to_matrix::<P>(b), to_matrix::<P>(c));
            for a in elems {
                let brute = scan(&ring, &cand[bi][ci], a, b, c);
                assert!(brute.len() <= 1, "{a:?} {b:?} {c:?}: {brute:?}");
                let lib = bc_inverse(&to_matrix::<P>(a), &mb, &mc).ok();
                assert_eq!(
                    lib,
                    brute.first().map(to_matrix::<P>),
                    "a = {a:?}, b = {b:?}, c = {c:?}"
                );
                found += brute.len();
            }
        }
    }
    assert!(found > 0);
}

#[test]
fn matrix_bc_inverse_over_z2() {
    bc_matches_brute_force::<2>();
}

#[test]
fn matrix_bc_inverse_over_z3() {
    bc_matches_brute_force::<3>();
}

#[test]
fn bc_inverses_are_unique() {
    for spec in [
        "zn:4",
        "zn:8",
        "zn:9",
        "t2z:2",
        "m2z:2",
        "dual:2",
        "dual:3",
        "series:2:3",
        "t2z:4",
    ] {
        let ring = FiniteRing::new(spec.parse().unwrap()).unwrap();
        let cand = candidates(&ring);
        let elems = ring.elements();
        for (bi, b) in elems.iter().enumerate() {
            for (ci, c) in elems.iter().enumerate() {
                for a in elems {
                    let sols = scan(&ring, &cand[bi][ci], a, b, c);
                    assert!(sols.len() <= 1, "{spec}: {a:?} {b:?} {c:?} has {sols:?}");
                }
            }
        }
        let (a, b) = (elems[elems.len() / 2], elems[elems.len() / 3]);
        assert_eq!(
            ring.brute_bc_inverse(&a, &b, &b).solutions,
            scan(&ring, &cand[elems.len() / 3][elems.len() / 3], &a, &b, &b)
        );
    }
}

#[test]
fn radicals_are_ideals() {
    for spec in [
        "zn:2",
        "zn:4",
        "zn:5",
        "zn:8",
        "zn:9",
        "zn:12",
        "t2z:2",
        "t2z:3",
        "t2z:4",
        "m2z:2",
        "m2z:3",
        "dual:2",
        "dual:3",
        "dual:5",
        "series:2:3",
        "series:3:2",
    ] {
        let ring = FiniteRing::new(spec.parse().unwrap()).unwrap();
        assert!(ring.radical_is_ideal(), "{spec}");
        for x in ring.jacobson_radical() {
            for r in ring.elements() {
                assert!(
                    ring.is_unit(&ring.sub(&ring.one(), &ring.mul(r, x))),
                    "{spec}: 1 - {r:?}{x:?}"
                );
            }
        }
    }
}

fn dual_of<const P: u64>(x: &FElem) -> DualMatrix<ModInt<P>> {
    let e = x.entries();
    DualMatrix::from_i64(&[&[i64::from(e[0])]], &[&[i64::from(e[1])]])
}

fn dual_engine_matches_brute_force<const P: u64>() {
    let ring = FiniteRing::new(RingSpec::DualOver(P)).unwrap();
    let space = DualMatrixRing::<ModInt<P>>::new(1);
    let elems = ring.elements();
    let mut found = 0;
    for a in elems {
        for b in elems {
            for c in elems {
                let brute = ring
                    .brute_bc_inverse(a, b, c)
                    .unique()
                    .map(|y| dual_of::<P>(&y));
                let (da, db, dc) = (dual_of::<P>(a), dual_of::<P>(b), dual_of::<P>(c));
                let cert =
                    dual_generalized_inverse(&DualKind::Bc(db.clone(), dc.clone()), &da).unwrap();
                assert_eq!(cert.witness, brute, "a = {a:?}, b = {b:?}, c = {c:?}");
                assert_eq!(space.bc_inverse(&da, &db, &dc).unwrap(), brute);
                found += usize::from(brute.is_some());
            }
        }
    }
    assert!(found > 0);
}

#[test]
fn dual_engine_over_z2() {
    dual_engine_matches_brute_force::<2>();
}

#[test]
fn dual_engine_over_z3() {
    dual_engine_matches_brute_force::<3>();
}

#[test]
fn dual_engine_over_z5() {
    dual_engine_matches_brute_force::<5>();
}
