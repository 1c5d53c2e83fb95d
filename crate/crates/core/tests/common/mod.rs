//! Test-side oracles and generators, independent of the library's solvers.

#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use radinv::matrix::inverse;
use radinv::{QDualMatrix, QMatrix, Rational};

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub enum Solution {
    None,
    Unique(Vec<Rational>),
    Many,
}

/// Gauss-Jordan in place on the first `cols` columns; returns the pivot
/// columns.
fn eliminate(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        let Some(p) = (top..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(top, p);
        let lead = rows[top][col].clone();
        for v in rows[top].iter_mut() {
            *v = &*v / &lead;
        }
        for i in 0..rows.len() {
            if i != top && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in 0..rows[i].len() {
                    let d = &f * &rows[top][j];
                    rows[i][j] -= d;
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    pivots
}

pub fn solve_system(mut rows: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> Solution {
    let unknowns = rows.first().map_or(0, Vec::len);
    for (r, b) in rows.iter_mut().zip(rhs) {
        r.push(b);
    }
    let pivots = eliminate(&mut rows, unknowns);
    if rows[pivots.len()..].iter().any(|r| !r[unknowns].is_zero()) {
        return Solution::None;
    }
    if pivots.len() < unknowns {
        return Solution::Many;
    }
    Solution::Unique((0..unknowns).map(|i| rows[i][unknowns].clone()).collect())
}

pub fn rank_of(m: &QMatrix) -> usize {
    let mut rows: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    eliminate(&mut rows, m.cols()).len()
}

pub fn solvable(rows: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> bool {
    !matches!(solve_system(rows, rhs), Solution::None)
}

/// Coefficients of the unknown `X` (`p x q`, row-major) in `(L X R)[i][j]`.
pub fn coeffs(l: &QMatrix, r: &QMatrix, i: usize, j: usize) -> Vec<Rational> {
    let (p, q) = (l.cols(), r.rows());
    let mut out = vec![Rational::zero(); p * q];
    for a in 0..p {
        for b in 0..q {
            out[a * q + b] = l.get(i, a) * r.get(b, j);
        }
    }
    out
}

pub fn add_into(acc: &mut [Rational], v: &[Rational], sign: i64) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += b * int(sign);
    }
}

/// Exact block solvability of `ÂX̂Â = Â`, real and dual parts separately.
pub fn dual_regular_oracle(a: &QDualMatrix) -> bool {
    let (m, n) = a.shape();
    let (ar, ad) = (a.real(), a.dual());
    let cells = n * m;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..m {
        for j in 0..n {
            // A X A = A
            let mut row = coeffs(ar, ar, i, j);
            row.extend(vec![Rational::zero(); cells]);
            rows.push(row);
            rhs.push(ar.get(i, j).clone());
            // A X₀ A + A₀ X A + A X A₀ = A₀
            let mut row = coeffs(ad, ar, i, j);
            add_into(&mut row, &coeffs(ar, ad, i, j), 1);
            row.extend(coeffs(ar, ar, i, j));
            rows.push(row);
            rhs.push(ad.get(i, j).clone());
        }
    }
    solvable(rows, rhs)
}

/// Solvability of `P̂X̂ = Q̂` through its real and dual parts.
pub fn dual_right_solvable(p: &QDualMatrix, q: &QDualMatrix) -> bool {
    let (m, k) = p.shape();
    let w = q.cols();
    let id = QMatrix::identity(w);
    let cells = k * w;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..m {
        for j in 0..w {
            let mut row = coeffs(p.real(), &id, i, j);
            row.extend(vec![Rational::zero(); cells]);
            rows.push(row);
            rhs.push(q.real().get(i, j).clone());
            let mut row = coeffs(p.dual(), &id, i, j);
            row.extend(coeffs(p.real(), &id, i, j));
            rows.push(row);
            rhs.push(q.dual().get(i, j).clone());
        }
    }
    solvable(rows, rhs)
}

/// Drazin index of a square dual matrix: least `l` with `Â^l` in both
/// `Â^{l+1}R` and `RÂ^{l+1}`.
pub fn dual_index_oracle(a: &QDualMatrix, bound: usize) -> Option<usize> {
    (0..=bound).find(|&l| {
        let al = a.pow(l).unwrap();
        let al1 = a.pow(l + 1).unwrap();
        dual_right_solvable(&al1, &al) && dual_right_solvable(&al1.transpose(), &al.transpose())
    })
}

pub fn small(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(
        rng.gen_range(-2i64..=2).into(),
        rng.gen_range(1i64..=2).into(),
    )
}

pub fn small_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize) -> QMatrix {
    QMatrix::from_fn(r, c, |_, _| small(rng))
}

pub fn int_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize, lo: i64, hi: i64) -> QMatrix {
    QMatrix::from_fn(r, c, |_, _| int(rng.gen_range(lo..=hi)))
}

/// A product `GH` with inner dimension `rank`.
pub fn low_rank(rng: &mut ChaCha8Rng, r: usize, c: usize, rank: usize) -> QMatrix {
    &int_matrix(rng, r, rank, -2, 2) * &int_matrix(rng, rank, c, -2, 2)
}

/// Real parts with small entries, singular about half of the time.
pub fn small_real(rng: &mut ChaCha8Rng, r: usize, c: usize) -> QMatrix {
    let mut a = small_matrix(rng, r, c);
    if rng.gen_bool(0.5) {
        let (src, dst) = (rng.gen_range(0..r), rng.gen_range(0..r));
        let sign = int(if rng.gen_bool(0.5) { 1 } else { -1 });
        for j in 0..c {
            let v = if src == dst {
                Rational::zero()
            } else {
                a.get(src, j) * &sign
            };
            a.set(dst, j, v);
        }
    }
    a
}

pub fn small_dual(rng: &mut ChaCha8Rng, r: usize, c: usize) -> QDualMatrix {
    QDualMatrix::new(small_real(rng, r, c), small_matrix(rng, r, c)).unwrap()
}

/// `A + ε(A₁A + AA₂)`, regular by construction.
pub fn split_dual(rng: &mut ChaCha8Rng, a: QMatrix) -> QDualMatrix {
    let (r, c) = a.shape();
    let a1 = int_matrix(rng, r, r, -2, 2);
    let a2 = int_matrix(rng, c, c, -2, 2);
    let a0 = &(&a1 * &a) + &(&a * &a2);
    QDualMatrix::new(a, a0).unwrap()
}

pub fn regular_dual(rng: &mut ChaCha8Rng, r: usize, c: usize) -> QDualMatrix {
    let rank = rng.gen_range(1..=r.min(c));
    regular_dual_of_rank(rng, r, c, rank)
}

pub fn regular_dual_of_rank(rng: &mut ChaCha8Rng, r: usize, c: usize, rank: usize) -> QDualMatrix {
    let a = low_rank(rng, r, c, rank);
    split_dual(rng, a)
}

/// Unimodular integer matrix from elementary row operations.
pub fn unimodular(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    let mut s = QMatrix::identity(n);
    if n < 2 {
        return s;
    }
    for _ in 0..2 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let f = int(rng.gen_range(-1..=1));
        for col in 0..n {
            let v = s.get(i, col) + &f * s.get(j, col);
            s.set(i, col, v);
        }
    }
    s
}

/// `S·diag(B, N_k)·S⁻¹` with `B` invertible of size `m` and `N_k` the
/// nilpotent Jordan block of size `k`; its index is exactly `k`.
pub fn with_index(rng: &mut ChaCha8Rng, k: usize, m: usize) -> QMatrix {
    let n = k + m;
    let b = loop {
        let b = int_matrix(rng, m, m, -2, 2);
        if m == 0 || inverse(&b).unwrap().is_some() {
            break b;
        }
    };
    let mut d = QMatrix::zeros(n, n);
    for i in 0..m {
        for j in 0..m {
            d.set(i, j, b.get(i, j).clone());
        }
    }
    for i in m..n - 1 {
        d.set(i, i + 1, Rational::one());
    }
    let s = unimodular(rng, n);
    let si = inverse(&s).unwrap().unwrap();
    &(&s * &d) * &si
}
