//! Exact scalar types: arbitrary-precision rationals and integers modulo `N`.
//!
//! Every matrix, dual matrix and series in this crate is generic over
//! [`Scalar`]. There is deliberately no floating-point implementation: all
//! generalized-inverse certificates are checked with exact equality.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Failure to parse a scalar from its textual form.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse {text:?} as {target}: {detail}")]
pub struct ParseScalarError {
    pub text: String,
    pub target: &'static str,
    pub detail: String,
}

/// An exact commutative scalar ring.
///
/// Rank-based algorithms additionally require [`Scalar::is_field`]; finite
/// scalar rings expose their elements through [`Scalar::elements`] so that
/// non-field cases can fall back to enumeration.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse, if `self` is a unit.
    fn inverse(&self) -> Option<Self>;

    /// Whether every nonzero element is a unit.
    fn is_field() -> bool;

    /// `Some(n)` for the integers modulo `n`, `None` for characteristic zero.
    fn modulus() -> Option<u64>;

    /// All elements, for finite scalar rings.
    fn elements() -> Option<Vec<Self>>;

    fn from_i64(v: i64) -> Self;

    /// Parses a decimal integer or a `p/q` fraction.
    fn parse(text: &str) -> Result<Self, ParseScalarError>;
}

impl Scalar for BigRational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn is_field() -> bool {
        true
    }

    fn modulus() -> Option<u64> {
        None
    }

    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn parse(text: &str) -> Result<Self, ParseScalarError> {
        let err = |detail: String| ParseScalarError {
            text: text.to_string(),
            target: "rational",
            detail,
        };
        let trimmed = text.trim();
        match trimmed.split_once('/') {
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|e| err(e.to_string()))?;
                let q = BigInt::from_str(q.trim()).map_err(|e| err(e.to_string()))?;
                if q.is_zero() {
                    return Err(err("zero denominator".into()));
                }
                // BigRational::new normalizes sign and gcd.
                Ok(BigRational::new(p, q))
            }
            None => BigInt::from_str(trimmed)
                .map(BigRational::from_integer)
                .map_err(|e| err(e.to_string())),
        }
    }
}

/// Shorthand for building rationals in code and tests.
pub fn q(num: i64, den: i64) -> BigRational {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as `p` or `p/q` with positive denominator.
pub fn rational_text(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Integers modulo `N`, always stored reduced into `0..N`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ModInt<const N: u64>(u64);

impl<const N: u64> ModInt<N> {
    pub const fn new(v: u64) -> Self {
        assert!(N >= 2, "modulus must be at least 2");
        Self(v % N)
    }

    pub const fn value(self) -> u64 {
        self.0
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Inverse of `v` modulo `n` by the extended Euclidean algorithm.
pub(crate) fn inverse_mod(v: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (v % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (t0, t1) = (t1, t0 - quot * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i128) as u64)
}

impl<const N: u64> Debug for ModInt<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {N})", self.0)
    }
}

impl<const N: u64> Display for ModInt<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const N: u64> Add for ModInt<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(((self.0 as u128 + rhs.0 as u128) % N as u128) as u64)
    }
}

impl<const N: u64> Sub for ModInt<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(((self.0 as u128 + N as u128 - rhs.0 as u128) % N as u128) as u64)
    }
}

impl<const N: u64> Mul for ModInt<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(((self.0 as u128 * rhs.0 as u128) % N as u128) as u64)
    }
}

impl<const N: u64> Neg for ModInt<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Self((N - self.0) % N)
    }
}

impl<const N: u64> Zero for ModInt<N> {
    fn zero() -> Self {
        Self(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const N: u64> One for ModInt<N> {
    fn one() -> Self {
        Self::new(1)
    }
}

impl<const N: u64> Scalar for ModInt<N> {
    fn inverse(&self) -> Option<Self> {
        inverse_mod(self.0, N).map(Self)
    }

    fn is_field() -> bool {
        is_prime(N)
    }

    fn modulus() -> Option<u64> {
        Some(N)
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..N).map(Self).collect())
    }

    fn from_i64(v: i64) -> Self {
        Self((v as i128).rem_euclid(N as i128) as u64)
    }

    fn parse(text: &str) -> Result<Self, ParseScalarError> {
        let err = |detail: String| ParseScalarError {
            text: text.to_string(),
            target: "modular integer",
            detail,
        };
        let int = |s: &str| -> Result<Self, ParseScalarError> {
            BigInt::from_str(s.trim())
                .map(|b| {
                    let n = BigInt::from(N);
                    let r = ((b % &n) + &n) % &n;
                    Self(u64::try_from(r).expect("reduced below modulus"))
                })
                .map_err(|e| err(e.to_string()))
        };
        match text.trim().split_once('/') {
            Some((p, d)) => {
                let p = int(p)?;
                let d = int(d)?;
                let inv = d
                    .inverse()
                    .ok_or_else(|| err(format!("denominator {d} is not a unit mod {N}")))?;
                Ok(p * inv)
            }
            None => int(text),
        }
    }
}

/// Signed integer view of a rational, if it is integral.
pub(crate) fn rational_to_i64(x: &BigRational) -> Option<i64> {
    if !x.denom().is_one() {
        return None;
    }
    i64::try_from(x.numer()).ok()
}
