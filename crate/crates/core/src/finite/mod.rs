//! Small finite rings, enumerated in full, as ground truth.
//!
//! Every generalized inverse, the Jacobson radical and clean decompositions
//! are found here by exhaustive scans, independently of any formula.

mod campaign;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::ring::{RingError, RingSpace};

pub use campaign::{
    campaign, run, CampaignMode, CampaignOptions, CampaignReport, Counterexample, Theorem,
    DEFAULT_SEED, DEFAULT_TRIALS, EXHAUSTIVE_LIMIT,
};

/// Largest ring that will be enumerated.
pub const MAX_ELEMENTS: usize = 4096;
const MAX_ENTRIES: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiniteError {
    #[error("ring {spec} has {size} elements, above the budget of {MAX_ELEMENTS}")]
    Budget { spec: String, size: u128 },
    #[error("cannot parse ring spec {0:?}; expected zn:N, t2z:N, m2z:N, dual:N or series:N:ORDER")]
    Parse(String),
    #[error("modulus must be at least 2, got {0}")]
    Modulus(u64),
}

/// The shipped families of finite rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingSpec {
    /// `ℤ/n`
    Zn(u64),
    /// Upper triangular 2x2 matrices over `ℤ/n`.
    T2(u64),
    /// All 2x2 matrices over `ℤ/n`.
    M2(u64),
    /// `ℤ/n[ε]/(ε²)`
    DualOver(u64),
    /// `ℤ/n[x]/(x^N)`
    TruncSeries(u64, usize),
}

impl RingSpec {
    pub fn modulus(&self) -> u64 {
        match *self {
            RingSpec::Zn(n)
            | RingSpec::T2(n)
            | RingSpec::M2(n)
            | RingSpec::DualOver(n)
            | RingSpec::TruncSeries(n, _) => n,
        }
    }

    /// Entries per element.
    pub fn width(&self) -> usize {
        match *self {
            RingSpec::Zn(_) => 1,
            RingSpec::T2(_) => 3,
            RingSpec::M2(_) => 4,
            RingSpec::DualOver(_) => 2,
            RingSpec::TruncSeries(_, order) => order,
        }
    }

    pub fn size(&self) -> u128 {
        (self.modulus() as u128).saturating_pow(self.width() as u32)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RingSpec::Zn(n) => write!(f, "zn:{n}"),
            RingSpec::T2(n) => write!(f, "t2z:{n}"),
            RingSpec::M2(n) => write!(f, "m2z:{n}"),
            RingSpec::DualOver(n) => write!(f, "dual:{n}"),
            RingSpec::TruncSeries(n, order) => write!(f, "series:{n}:{order}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = FiniteError;

    fn from_str(s: &str) -> Result<Self, FiniteError> {
        let err = || FiniteError::Parse(s.to_string());
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |i: usize| {
            parts
                .get(i)
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(err)
        };
        let spec = match (parts.first().copied(), parts.len()) {
            (Some("zn"), 2) => RingSpec::Zn(num(1)?),
            (Some("t2z"), 2) => RingSpec::T2(num(1)?),
            (Some("m2z"), 2) => RingSpec::M2(num(1)?),
            (Some("dual"), 2) => RingSpec::DualOver(num(1)?),
            (Some("series"), 3) => {
                let order = num(2)? as usize;
                if order == 0 || order > MAX_ENTRIES {
                    return Err(err());
                }
                RingSpec::TruncSeries(num(1)?, order)
            }
            _ => return Err(err()),
        };
        Ok(spec)
    }
}

impl Serialize for RingSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A ring element as its tuple of residues.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FElem {
    len: u8,
    v: [u16; MAX_ENTRIES],
}

impl FElem {
    fn from_entries(entries: &[u16]) -> Self {
        let mut v = [0; MAX_ENTRIES];
        v[..entries.len()].copy_from_slice(entries);
        Self {
            len: entries.len() as u8,
            v,
        }
    }

    pub fn entries(&self) -> &[u16] {
        &self.v[..self.len as usize]
    }
}

impl fmt::Debug for FElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.entries() {
            [x] => write!(f, "{x}"),
            es => {
                write!(f, "[")?;
                for (i, x) in es.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl fmt::Display for FElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for FElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A clean decomposition `a = e + u` found by search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CleanDecomposition {
    pub idempotent: FElem,
    pub unit: FElem,
    pub strongly: bool,
    pub special: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CleanKind {
    Clean,
    StronglyClean,
    SpecialClean,
}

/// All `(b,c)`-inverse candidates found by a full scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteBc {
    pub solutions: Vec<FElem>,
}

impl BruteBc {
    /// The unique solution, if there is exactly one.
    pub fn unique(&self) -> Option<FElem> {
        match self.solutions.as_slice() {
            [y] => Some(*y),
            _ => None,
        }
    }
}

/// An enumerated finite ring with its units, idempotents and radical.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    spec: RingSpec,
    n: u64,
    elements: Vec<FElem>,
    units: HashMap<FElem, FElem>,
    idempotents: Vec<FElem>,
    radical: Vec<FElem>,
    radical_set: HashSet<FElem>,
}

impl FiniteRing {
    pub fn new(spec: RingSpec) -> Result<Self, FiniteError> {
        let n = spec.modulus();
        if n < 2 {
            return Err(FiniteError::Modulus(n));
        }
        let size = spec.size();
        if size > MAX_ELEMENTS as u128 {
            return Err(FiniteError::Budget {
                spec: spec.to_string(),
                size,
            });
        }
        let width = spec.width();
        let mut elements = Vec::with_capacity(size as usize);
        let mut digits = vec![0u16; width];
        'outer: loop {
            elements.push(FElem::from_entries(&digits));
            for d in digits.iter_mut() {
                *d += 1;
                if u64::from(*d) < n {
                    continue 'outer;
                }
                *d = 0;
            }
            break;
        }
        let mut ring = Self {
            spec,
            n,
            elements,
            units: HashMap::new(),
            idempotents: Vec::new(),
            radical: Vec::new(),
            radical_set: HashSet::new(),
        };
        let one = ring.one();
        for x in &ring.elements {
            for y in &ring.elements {
                if ring.mul(x, y) == one && ring.mul(y, x) == one {
                    ring.units.insert(*x, *y);
                    break;
                }
            }
        }
        ring.idempotents = ring
            .elements
            .iter()
            .filter(|e| ring.mul(e, e) == **e)
            .copied()
            .collect();
        ring.radical = ring
            .elements
            .iter()
            .filter(|x| {
                ring.elements
                    .iter()
                    .all(|r| ring.units.contains_key(&ring.sub(&one, &ring.mul(r, x))))
            })
            .copied()
            .collect();
        ring.radical_set = ring.radical.iter().copied().collect();
        Ok(ring)
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn elements(&self) -> &[FElem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `{x : 1 - r·x is a unit for every r}`
    pub fn jacobson_radical(&self) -> &[FElem] {
        &self.radical
    }

    pub fn idempotents(&self) -> &[FElem] {
        &self.idempotents
    }

    pub fn units(&self) -> impl Iterator<Item = &FElem> {
        self.units.keys()
    }

    pub fn is_unit(&self, x: &FElem) -> bool {
        self.units.contains_key(x)
    }

    /// The element with the given entries, reduced modulo `n`.
    pub fn elem(&self, entries: &[i64]) -> FElem {
        assert_eq!(
            entries.len(),
            self.spec.width(),
            "entry count for {}",
            self.spec
        );
        let n = self.n as i64;
        let reduced: Vec<u16> = entries.iter().map(|&x| x.rem_euclid(n) as u16).collect();
        FElem::from_entries(&reduced)
    }

    /// `k · 1`
    pub fn int(&self, k: i64) -> FElem {
        let one = self.one();
        let n = self.n as i64;
        let entries: Vec<u16> = one
            .entries()
            .iter()
            .map(|&x| (i64::from(x) * k).rem_euclid(n) as u16)
            .collect();
        FElem::from_entries(&entries)
    }

    fn md(&self, x: u64) -> u16 {
        (x % self.n) as u16
    }

    /// Closure of the radical under addition and two-sided multiplication.
    pub fn radical_is_ideal(&self) -> bool {
        let one = self.one();
        !self.radical_set.contains(&one)
            && self.radical.iter().all(|x| {
                self.radical
                    .iter()
                    .all(|y| self.radical_set.contains(&self.add(x, y)))
                    && self.elements.iter().all(|r| {
                        self.radical_set.contains(&self.mul(r, x))
                            && self.radical_set.contains(&self.mul(x, r))
                    })
            })
    }

    pub fn right_ideal(&self, b: &FElem) -> HashSet<FElem> {
        self.elements.iter().map(|r| self.mul(b, r)).collect()
    }

    pub fn left_ideal(&self, c: &FElem) -> HashSet<FElem> {
        self.elements.iter().map(|s| self.mul(s, c)).collect()
    }

    /// Every `y ∈ bR ∩ Rc` with `cay = c` and `yab = b`.
    pub fn brute_bc_inverse(&self, a: &FElem, b: &FElem, c: &FElem) -> BruteBc {
        let left = self.left_ideal(c);
        let mut solutions: Vec<FElem> = self
            .right_ideal(b)
            .into_iter()
            .filter(|y| left.contains(y))
            .filter(|y| self.mul(&self.mul(c, a), y) == *c && self.mul(&self.mul(y, a), b) == *b)
            .collect();
        solutions.sort();
        BruteBc { solutions }
    }

    pub fn is_regular(&self, x: &FElem) -> bool {
        self.elements
            .iter()
            .any(|g| self.mul(&self.mul(x, g), x) == *x)
    }

    pub fn reflexive_inverses(&self, x: &FElem) -> Vec<FElem> {
        self.elements
            .iter()
            .filter(|g| self.mul(&self.mul(x, g), x) == *x && self.mul(&self.mul(g, x), g) == **g)
            .copied()
            .collect()
    }

    /// All `{2}`-inverses `x` of `a`.
    pub fn outer_inverses(&self, a: &FElem) -> Vec<FElem> {
        self.elements
            .iter()
            .filter(|x| self.mul(&self.mul(x, a), x) == **x)
            .copied()
            .collect()
    }

    /// The Drazin inverse and index, by scanning exponents up to `|R|`.
    pub fn brute_drazin(&self, a: &FElem) -> Option<(FElem, usize)> {
        let mut best: Option<(FElem, usize)> = None;
        for x in &self.elements {
            let ax = self.mul(a, x);
            if self.mul(x, a) != ax || self.mul(&ax, x) != *x {
                continue;
            }
            let mut ak = self.one();
            for k in 0..=self.len() {
                if self.mul(&self.mul(x, &ak), a) == ak {
                    if best.is_none_or(|(_, kb)| k < kb) {
                        best = Some((*x, k));
                    }
                    break;
                }
                ak = self.mul(&ak, a);
            }
        }
        best
    }

    /// `aR ∩ eR = {0}`
    pub fn trivially_meets(&self, a: &FElem, e: &FElem) -> bool {
        let zero = self.zero();
        let er = self.right_ideal(e);
        self.right_ideal(a)
            .iter()
            .all(|x| *x == zero || !er.contains(x))
    }

    /// First decomposition `a = e + u` of the requested kind, scanning
    /// idempotents in element order.
    pub fn clean_search(&self, a: &FElem, kind: CleanKind) -> Option<CleanDecomposition> {
        self.clean_decompositions(a)
            .into_iter()
            .find(|d| match kind {
                CleanKind::Clean => true,
                CleanKind::StronglyClean => d.strongly,
                CleanKind::SpecialClean => d.special,
            })
    }

    pub fn clean_decompositions(&self, a: &FElem) -> Vec<CleanDecomposition> {
        self.idempotents
            .iter()
            .filter_map(|e| {
                let u = self.sub(a, e);
                self.is_unit(&u).then(|| CleanDecomposition {
                    idempotent: *e,
                    unit: u,
                    strongly: self.mul(e, a) == self.mul(a, e),
                    special: self.trivially_meets(a, e),
                })
            })
            .collect()
    }

    fn entrywise(&self, x: &FElem, y: &FElem, f: impl Fn(u64, u64) -> u64) -> FElem {
        let mut v = [0u16; MAX_ENTRIES];
        let n = x.len as usize;
        for (out, (a, b)) in v.iter_mut().zip(x.v[..n].iter().zip(&y.v[..n])) {
            *out = self.md(f(u64::from(*a), u64::from(*b)));
        }
        FElem { len: x.len, v }
    }
}

impl RingSpace for FiniteRing {
    type Elem = FElem;

    fn name(&self) -> String {
        self.spec.to_string()
    }

    fn contains(&self, x: &FElem) -> bool {
        x.len as usize == self.spec.width() && x.entries().iter().all(|&v| u64::from(v) < self.n)
    }

    fn zero(&self) -> FElem {
        FElem::from_entries(&vec![0; self.spec.width()])
    }

    fn one(&self) -> FElem {
        let e: Vec<u16> = match self.spec {
            RingSpec::Zn(_) => vec![1],
            RingSpec::T2(_) => vec![1, 0, 1],
            RingSpec::M2(_) => vec![1, 0, 0, 1],
            RingSpec::DualOver(_) => vec![1, 0],
            RingSpec::TruncSeries(_, order) => {
                let mut v = vec![0; order];
                v[0] = 1;
                v
            }
        };
        FElem::from_entries(&e)
    }

    fn add(&self, x: &FElem, y: &FElem) -> FElem {
        self.entrywise(x, y, |a, b| a + b)
    }

    fn neg(&self, x: &FElem) -> FElem {
        let n = self.n;
        self.entrywise(x, x, |a, _| n - a)
    }

    fn sub(&self, x: &FElem, y: &FElem) -> FElem {
        let n = self.n;
        self.entrywise(x, y, |a, b| a + n - b)
    }

    fn mul(&self, x: &FElem, y: &FElem) -> FElem {
        let (a, b) = (x.v.map(u64::from), y.v.map(u64::from));
        let mut out = [0u64; MAX_ENTRIES];
        match self.spec {
            RingSpec::Zn(_) => out[0] = a[0] * b[0],
            RingSpec::T2(_) => {
                out[0] = a[0] * b[0];
                out[1] = a[0] * b[1] + a[1] * b[2];
                out[2] = a[2] * b[2];
            }
            RingSpec::M2(_) => {
                out[0] = a[0] * b[0] + a[1] * b[2];
                out[1] = a[0] * b[1] + a[1] * b[3];
                out[2] = a[2] * b[0] + a[3] * b[2];
                out[3] = a[2] * b[1] + a[3] * b[3];
            }
            RingSpec::DualOver(_) => {
                out[0] = a[0] * b[0];
                out[1] = a[0] * b[1] + a[1] * b[0];
            }
            RingSpec::TruncSeries(_, order) => {
                for k in 0..order {
                    out[k] = (0..=k).map(|i| a[i] * b[k - i] % self.n).sum();
                }
            }
        }
        FElem {
            len: x.len,
            v: out.map(|v| self.md(v)),
        }
    }

    fn is_zero(&self, x: &FElem) -> bool {
        x.entries().iter().all(|&v| v == 0)
    }

    fn nilpotency_bound(&self) -> usize {
        self.len()
    }

    fn is_radical(&self, x: &FElem) -> bool {
        self.radical_set.contains(x)
    }

    /// Transpose for `M₂`; the identity for the commutative families. `T₂`
    /// has none.
    fn involution(&self, x: &FElem) -> Option<FElem> {
        match self.spec {
            RingSpec::M2(_) => {
                let e = x.entries();
                Some(FElem::from_entries(&[e[0], e[2], e[1], e[3]]))
            }
            RingSpec::T2(_) => None,
            _ => Some(*x),
        }
    }

    fn right_factor(&self, b: &FElem, y: &FElem) -> Result<Option<FElem>, RingError> {
        Ok(self.elements.iter().find(|r| self.mul(b, r) == *y).copied())
    }

    fn left_factor(&self, c: &FElem, y: &FElem) -> Result<Option<FElem>, RingError> {
        Ok(self.elements.iter().find(|s| self.mul(s, c) == *y).copied())
    }

    fn unit_inverse(&self, x: &FElem) -> Result<Option<FElem>, RingError> {
        Ok(self.units.get(x).copied())
    }

    fn inner_inverse(&self, x: &FElem) -> Result<Option<FElem>, RingError> {
        Ok(self
            .elements
            .iter()
            .find(|g| self.mul(&self.mul(x, g), x) == *x)
            .copied())
    }

    fn bc_inverse(&self, a: &FElem, b: &FElem, c: &FElem) -> Result<Option<FElem>, RingError> {
        Ok(self.brute_bc_inverse(a, b, c).unique())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        FiniteRing::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn element_counts() {
        assert_eq!(ring("zn:4").len(), 4);
        assert_eq!(ring("t2z:2").len(), 8);
        assert_eq!(ring("dual:2").len(), 4);
        assert_eq!(ring("m2z:2").len(), 16);
        assert_eq!(ring("series:2:3").len(), 8);
    }

    #[test]
    fn oversize_spec_is_refused() {
        assert!(matches!(
            FiniteRing::new(RingSpec::M2(9)),
            Err(FiniteError::Budget { .. })
        ));
        assert!(matches!(
            "q:3".parse::<RingSpec>(),
            Err(FiniteError::Parse(_))
        ));
    }

    #[test]
    fn radicals() {
        let z4 = ring("zn:4");
        assert_eq!(z4.jacobson_radical(), &[z4.int(0), z4.int(2)]);
        let z5 = ring("zn:5");
        assert_eq!(z5.jacobson_radical(), &[z5.int(0)]);
        let t2 = ring("t2z:2");
        assert_eq!(
            t2.jacobson_radical(),
            &[t2.elem(&[0, 0, 0]), t2.elem(&[0, 1, 0])]
        );
        let d2 = ring("dual:2");
        assert_eq!(d2.jacobson_radical(), &[d2.elem(&[0, 0]), d2.elem(&[0, 1])]);
        assert!(ring("m2z:2").jacobson_radical().len() == 1);
    }

    #[test]
    fn bc_inverses_by_scan() {
        let z4 = ring("zn:4");
        let one = z4.int(1);
        assert_eq!(
            z4.brute_bc_inverse(&z4.int(3), &one, &one).unique(),
            Some(z4.int(3))
        );
        assert!(z4
            .brute_bc_inverse(&z4.int(2), &z4.int(2), &z4.int(2))
            .solutions
            .is_empty());
        assert_eq!(z4.brute_bc_inverse(&one, &one, &one).unique(), Some(one));
    }

    #[test]
    fn clean_examples() {
        let z4 = ring("zn:4");
        let d = z4.clean_search(&z4.int(2), CleanKind::Clean).unwrap();
        assert_eq!(z4.add(&d.idempotent, &d.unit), z4.int(2));
        let t9 = ring("t2z:9");
        let a = t9.elem(&[2, 2, 8]);
        let d = t9.clean_search(&a, CleanKind::StronglyClean).unwrap();
        assert_eq!(d.idempotent, t9.zero());
        let d = t9.clean_search(&a, CleanKind::SpecialClean).unwrap();
        assert_eq!(d.idempotent, t9.zero());
        // 3 − e is a unit only for e = 1, and 3R ∩ R ≠ {0}
        assert!(t9.clean_search(&t9.int(3), CleanKind::Clean).is_some());
        assert!(t9
            .clean_search(&t9.int(3), CleanKind::SpecialClean)
            .is_none());
    }

    #[test]
    fn drazin_in_z4() {
        let z4 = ring("zn:4");
        assert_eq!(z4.brute_drazin(&z4.int(2)), Some((z4.int(0), 2)));
        assert_eq!(z4.brute_drazin(&z4.int(3)), Some((z4.int(3), 0)));
    }
}
