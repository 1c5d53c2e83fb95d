//! Theorem-verification campaigns: every tuple of a finite ring (or a seeded
//! sample when the tuple space is large) is run through the perturbation
//! engine and compared with brute force.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{FElem, FiniteError, FiniteRing, RingSpec};
use crate::perturb::{
    absorption_equivalences, clean_transfer, drazin_perturb, idempotence_check,
    joint_idempotence_check, perturb_bc, regular_perturb, CleanCandidate, PerturbationInput,
};
use crate::ring::{RingError, RingSpace};

/// Tuple spaces up to this size are enumerated in full.
pub const EXHAUSTIVE_LIMIT: u128 = 1_000_000;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TRIALS: u64 = 100_000;

/// The statements a campaign can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Existence and value of `(a+j_a)^{‖(b+j_b,c+j_c)}`.
    BcPerturbation,
    /// The six absorption conditions coincide.
    Absorption,
    /// Idempotence of `(a+j_a)^{‖(b,c)}` through the corner decomposition.
    Idempotence,
    /// Joint idempotence of `a^{‖(b,c)}` and `(a+j_a)^{‖(b,c)}`.
    JointIdempotence,
    /// Regularity of `a + j` from a reflexive inverse of `a`.
    RegularPerturbation,
    /// Drazin inverse of `a + j_a`.
    DrazinPerturbation,
    /// Strong cleanness of `a + j_a` from clean decompositions of `a`.
    CleanTransfer,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::BcPerturbation,
        Theorem::Absorption,
        Theorem::Idempotence,
        Theorem::JointIdempotence,
        Theorem::RegularPerturbation,
        Theorem::DrazinPerturbation,
        Theorem::CleanTransfer,
    ];

    /// Identifier used on the command line and in reports.
    pub fn id(self) -> &'static str {
        match self {
            Theorem::BcPerturbation => "thm33",
            Theorem::Absorption => "absorption",
            Theorem::Idempotence => "idempotence-3.9",
            Theorem::JointIdempotence => "idempotence-3.10",
            Theorem::RegularPerturbation => "lemma31",
            Theorem::DrazinPerturbation => "cor36",
            Theorem::CleanTransfer => "cor38",
        }
    }

    /// Names of the tuple coordinates; `j…` coordinates range over the
    /// radical, the rest over the whole ring.
    pub fn coordinates(self) -> &'static [&'static str] {
        match self {
            Theorem::BcPerturbation => &["a", "b", "c", "j_a", "j_b", "j_c"],
            Theorem::Absorption => &["a", "j_a", "x", "y"],
            Theorem::Idempotence | Theorem::JointIdempotence => &["a", "b", "c", "j_a"],
            Theorem::RegularPerturbation => &["a", "a_plus", "j"],
            Theorem::DrazinPerturbation | Theorem::CleanTransfer => &["a", "j_a"],
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| {
                let ids: Vec<&str> = Theorem::ALL.iter().map(|t| t.id()).collect();
                format!("unknown theorem {s:?}; expected one of {}", ids.join(", "))
            })
    }
}

impl Serialize for Theorem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CampaignMode {
    Exhaustive,
    Sampled { seed: u64, trials: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CampaignOptions {
    pub seed: u64,
    pub trials: u64,
}

impl Default for CampaignOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub tuple: Vec<FElem>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub theorem: Theorem,
    pub ring: RingSpec,
    pub ring_size: usize,
    pub radical_size: usize,
    pub coordinates: Vec<&'static str>,
    pub mode: CampaignMode,
    /// Size of the raw tuple space, before preconditions are applied.
    pub tuple_space: u128,
    pub tuples_drawn: u64,
    /// Tuples meeting the theorem's hypotheses.
    pub tuples_tested: u64,
    pub counterexamples: Vec<Counterexample>,
    pub warning: Option<String>,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

enum Outcome {
    OutOfScope,
    Held,
    Failed(String),
}

/// Collects failed checks for one tuple.
#[derive(Default)]
struct Checks(Vec<String>);

impl Checks {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn finish(self) -> Outcome {
        if self.0.is_empty() {
            Outcome::Held
        } else {
            Outcome::Failed(self.0.join("; "))
        }
    }
}

fn engine_error(e: RingError) -> Outcome {
    Outcome::Failed(format!("engine error: {e}"))
}

pub fn campaign(
    theorem: Theorem,
    spec: RingSpec,
    options: CampaignOptions,
) -> Result<CampaignReport, FiniteError> {
    let ring = FiniteRing::new(spec)?;
    Ok(run(&ring, theorem, options))
}

/// Runs a campaign on an already enumerated ring.
pub fn run(ring: &FiniteRing, theorem: Theorem, options: CampaignOptions) -> CampaignReport {
    let domains: Vec<&[FElem]> = theorem
        .coordinates()
        .iter()
        .map(|c| {
            if c.starts_with('j') {
                ring.jacobson_radical()
            } else {
                ring.elements()
            }
        })
        .collect();
    let tuple_space = domains.iter().map(|d| d.len() as u128).product::<u128>();
    let mut report = CampaignReport {
        theorem,
        ring: ring.spec(),
        ring_size: ring.len(),
        radical_size: ring.jacobson_radical().len(),
        coordinates: theorem.coordinates().to_vec(),
        mode: CampaignMode::Exhaustive,
        tuple_space,
        tuples_drawn: 0,
        tuples_tested: 0,
        counterexamples: Vec::new(),
        warning: None,
    };
    let visit = |tuple: &[FElem], report: &mut CampaignReport| {
        report.tuples_drawn += 1;
        match check(ring, theorem, tuple) {
            Outcome::OutOfScope => {}
            Outcome::Held => report.tuples_tested += 1,
            Outcome::Failed(reason) => {
                report.tuples_tested += 1;
                report.counterexamples.push(Counterexample {
                    tuple: tuple.to_vec(),
                    reason,
                });
            }
        }
    };
    let mut tuple: Vec<FElem> = domains.iter().map(|d| d[0]).collect();
    if tuple_space <= EXHAUSTIVE_LIMIT {
        let mut idx = vec![0usize; domains.len()];
        'outer: loop {
            visit(&tuple, &mut report);
            for (pos, d) in domains.iter().enumerate() {
                idx[pos] += 1;
                if idx[pos] < d.len() {
                    tuple[pos] = d[idx[pos]];
                    continue 'outer;
                }
                idx[pos] = 0;
                tuple[pos] = d[0];
            }
            break;
        }
    } else {
        report.mode = CampaignMode::Sampled {
            seed: options.seed,
            trials: options.trials,
        };
        report.warning = Some(format!(
            "tuple space of {tuple_space} exceeds {EXHAUSTIVE_LIMIT}; sampled {} tuples with seed {}",
            options.trials, options.seed
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        for _ in 0..options.trials {
            for (slot, d) in tuple.iter_mut().zip(&domains) {
                *slot = d[rng.gen_range(0..d.len())];
            }
            visit(&tuple, &mut report);
        }
    }
    report.counterexamples.sort();
    report
}

fn check(ring: &FiniteRing, theorem: Theorem, t: &[FElem]) -> Outcome {
    match theorem {
        Theorem::BcPerturbation => check_bc_perturbation(ring, t),
        Theorem::Absorption => check_absorption(ring, t),
        Theorem::Idempotence => check_idempotence(ring, t),
        Theorem::JointIdempotence => check_joint_idempotence(ring, t),
        Theorem::RegularPerturbation => check_regular(ring, t),
        Theorem::DrazinPerturbation => check_drazin(ring, t),
        Theorem::CleanTransfer => check_clean(ring, t),
    }
}

/// A reflexive inverse other than the ring's canonical one where possible,
/// so that choice independence is exercised.
fn alternate_reflexive(ring: &FiniteRing, x: &FElem) -> Option<FElem> {
    ring.reflexive_inverses(x).last().copied()
}

fn check_bc_perturbation(ring: &FiniteRing, t: &[FElem]) -> Outcome {
    let &[a, b, c, j_a, j_b, j_c] = t else {
        unreachable!()
    };
    let Some(x) = ring.brute_bc_inverse(&a, &b, &c).unique() else {
        return Outcome::OutOfScope;
    };
    let mut ck = Checks::default();
    let (Some(b_plus), Some(c_plus)) =
        (alternate_reflexive(ring, &b), alternate_reflexive(ring, &c))
    else {
        ck.expect(false, || {
            "b or c is not regular although a^{‖(b,c)} exists".into()
        });
        return ck.finish();
    };
    let input = PerturbationInput {
        a,
        b,
        c,
        a_bc: x,
        b_plus,
        c_plus,
        j_a,
        j_b,
        j_c,
    };
    let rep = match perturb_bc(ring, &input) {
        Ok(r) => r,
        Err(e) => return engine_error(e),
    };
    let (bp, cp) = (ring.add(&b, &j_b), ring.add(&c, &j_c));
    let brute = ring.brute_bc_inverse(&ring.add(&a, &j_a), &bp, &cp);
    ck.expect(brute.solutions.len() <= 1, || {
        format!("{} distinct solutions", brute.solutions.len())
    });
    let exists = brute.unique().is_some();
    let regular = ring.is_regular(&bp) && ring.is_regular(&cp);
    let residuals_vanish = ring.is_zero(&rep.cond_b) && ring.is_zero(&rep.cond_c);
    ck.expect(exists == regular, || {
        format!("brute existence {exists} but regularity {regular}")
    });
    ck.expect(exists == residuals_vanish, || {
        format!("brute existence {exists} but residuals vanish {residuals_vanish}")
    });
    ck.expect(rep.exists() == exists, || {
        format!("formula existence {} vs brute {exists}", rep.exists())
    });
    ck.expect(
        rep.regular.is_none_or(|(rb, rc)| (rb && rc) == regular),
        || "ring regularity verdict differs".into(),
    );
    ck.expect(rep.canonical_agree != Some(false), || {
        "canonical reflexive inverses disagree".into()
    });
    if let (Some(v), Some(y)) = (&rep.perturbed_inverse, brute.unique()) {
        ck.expect(*v == y, || {
            format!("formula value {v} differs from brute {y}")
        });
    }
    ck.expect(rep.verified != Some(false), || {
        "formula value fails the defining equations".into()
    });
    ck.expect(rep.phi_relation != Some(false), || {
        "φ relation fails".into()
    });
    if ring.is_zero(&j_b) && ring.is_zero(&j_c) {
        match crate::ring::phi(ring, &x, &j_a) {
            Ok(p) => ck.expect(rep.perturbed_inverse == Some(p), || {
                "j_b = j_c = 0 does not give φ".into()
            }),
            Err(e) => return engine_error(e),
        }
    }
    ck.finish()
}

fn check_absorption(ring: &FiniteRing, t: &[FElem]) -> Outcome {
    let &[a, j_a, x, y] = t else { unreachable!() };
    let a_pert = ring.add(&a, &j_a);
    if ring.mul(&ring.mul(&x, &a), &x) != x || ring.mul(&ring.mul(&y, &a_pert), &y) != y {
        return Outcome::OutOfScope;
    }
    let rep = match absorption_equivalences(ring, &a, &j_a, &x, &y) {
        Ok(r) => r,
        Err(e) => return engine_error(e),
    };
    let mut ck = Checks::default();
    ck.expect(rep.all_agree(), || {
        format!("conditions differ: {:?}", rep.conditions)
    });
    let same_ideals =
        ring.right_ideal(&x) == ring.right_ideal(&y) && ring.left_ideal(&x) == ring.left_ideal(&y);
    ck.expect(rep.conditions[3] == same_ideals, || {
        "ideal condition differs from enumeration".into()
    });
    let elems = ring.elements();
    let prescribed = elems.iter().any(|b| {
        elems.iter().any(|c| {
            ring.brute_bc_inverse(&a, b, c).unique() == Some(x)
                && ring.brute_bc_inverse(&a_pert, b, c).unique() == Some(y)
        })
    });
    ck.expect(rep.conditions[5] == prescribed, || {
        "common (b,c) condition differs from enumeration".into()
    });
    ck.finish()
}

fn check_idempotence(ring: &FiniteRing, t: &[FElem]) -> Outcome {
    let &[a, b, c, j_a] = t else { unreachable!() };
    if ring.brute_bc_inverse(&a, &b, &c).unique().is_none() {
        return Outcome::OutOfScope;
    }
    let (bp, cp) = (alternate_reflexive(ring, &b), alternate_reflexive(ring, &c));
    let rep = match idempotence_check(ring, &a, &b, &c, &j_a, bp.as_ref(), cp.as_ref()) {
        Ok(r) => r,
        Err(e) => return engine_error(e),
    };
    let mut ck = Checks::default();
    ck.expect(rep.all_agree(), || {
        format!(
            "conditions {:?}, reduced form {}",
            rep.conditions, rep.reduced_form
        )
    });
    let y = ring.brute_bc_inverse(&ring.add(&a, &j_a), &b, &c).unique();
    let idem = y.is_some_and(|y| ring.mul(&y, &y) == y);
    ck.expect(rep.conditions[0] == idem, || {
        format!("idempotence {} vs brute {idem}", rep.conditions[0])
    });
    ck.finish()
}

fn check_joint_idempotence(ring: &FiniteRing, t: &[FElem]) -> Outcome {
    let &[a, b, c, j_a] = t else { unreachable!() };
    let (bp, cp) = (alternate_reflexive(ring, &b), alternate_reflexive(ring, &c));
    if bp.is_none() || cp.is_none() {
        return Outcome::OutOfScope;
    }
    let rep = match joint_idempotence_check(ring, &a, &b, &c, &j_a, bp.as_ref(), cp.as_ref()) {
        Ok(r) => r,
        Err(e) => return engine_error(e),
    };
    let mut ck = Checks::default();
    let idem = |z: Option<FElem>| z.is_some_and(|z| ring.mul(&z, &z) == z);
    let brute = idem(ring.brute_bc_inverse(&a, &b, &c).unique())
        && idem(ring.brute_bc_inverse(&ring.add(&a, &j_a), &b, &c).unique());
    ck.expect(rep.jointly_idempotent == brute, || {
        "joint idempotence differs from enumeration".into()
    });
    ck.expect(rep.consistent(), || {
        format!(
            "criterion {} (trace product {}, decompositions {}/{}) vs jointly idempotent {}",
            rep.criterion(),
            rep.trace_product,
            rep.a_decomposes,
            rep.j_decomposes,
            rep.jointly_idempotent
        )
    });
    let cb = ring.mul(&c, &b);
    let trace = ring.right_ideal(&cb) == ring.right_ideal(&c)
        && ring.left_ideal(&cb) == ring.left_ideal(&b);
    ck.expect(rep.trace_product == trace, || {
        "trace product differs from enumeration".into()
    });
    ck.finish()
}

fn check_regular(ring: &FiniteRing, t: &[FElem]) -> Outcome {
    let &[a, a_plus, j] = t else { unreachable!() };
    if !crate::ring::is_reflexive(ring, &a, &a_plus) {
        return Outcome::OutOfScope;
    }
    let rep = match regular_perturb(ring, &a, &a_plus, &j) {
        Ok(r) => r,
        Err(e) => return engine_error(e),
    };
    let mut ck = Checks::default();
    let regular = ring.is_regular(&ring.add(&a, &j));
    ck.expect(rep.is_regular() == regular, || {
        format!("residual verdict {} vs brute {regular}", rep.is_regular())
    });
    ck.expect(rep.verified != Some(false), || {
        "constructed inverse is not reflexive".into()
    });
    ck.finish()
}

fn check_drazin(ring: &FiniteRing, t: &[FElem]) -> Outcome {
    let &[a, j_a] = t else { unreachable!() };
    let Some((a_d, k)) = ring.brute_drazin(&a) else {
        return Outcome::OutOfScope;
    };
    let a_pert = ring.add(&a, &j_a);
    let mut ck = Checks::default();
    let Some((d, index)) = ring.brute_drazin(&a_pert) else {
        ck.expect(false, || "a + j_a has no Drazin inverse".into());
        return ck.finish();
    };
    for l in k..=k + 2 {
        let rep = match drazin_perturb(ring, &a, &a_d, k, &j_a, Some(l)) {
            Ok(r) => r,
            Err(e) => return engine_error(e),
        };
        let vanishes = ring.is_zero(&rep.residual);
        let regular = ring.is_regular(&ring.pow(&a_pert, l));
        ck.expect(vanishes == regular, || {
            format!("l={l}: residual {vanishes} vs regularity of power {regular}")
        });
        ck.expect(vanishes == (index <= l), || {
            format!("l={l}: residual {vanishes} vs index {index}")
        });
        ck.expect(rep.theorem_agrees, || {
            format!("l={l}: general formula disagrees")
        });
        ck.expect(rep.verified != Some(false), || {
            format!("l={l}: value fails the Drazin equations")
        });
        if let Some(v) = rep.result {
            ck.expect(v == d, || {
                format!("l={l}: value {v} differs from brute {d}")
            });
        }
    }
    ck.finish()
}

fn check_clean(ring: &FiniteRing, t: &[FElem]) -> Outcome {
    let &[a, j_a] = t else { unreachable!() };
    let decompositions = ring.clean_decompositions(&a);
    if decompositions.is_empty() {
        return Outcome::OutOfScope;
    }
    let mut ck = Checks::default();
    let mut any = false;
    for d in decompositions {
        let cand = CleanCandidate {
            idempotent: d.idempotent,
            unit: d.unit,
        };
        let rep = match clean_transfer(ring, &a, &j_a, &cand) {
            Ok(r) => r,
            Err(e) => return engine_error(e),
        };
        ck.expect(rep.consistent(), || {
            format!(
                "e={}: criterion {} conjugate {} witness {:?}",
                d.idempotent, rep.criterion, rep.conjugate_criterion, rep.witness_valid
            )
        });
        any |= rep.criterion;
    }
    let brute = ring
        .clean_search(&ring.add(&a, &j_a), super::CleanKind::StronglyClean)
        .is_some();
    ck.expect(any == brute, || {
        format!("some criterion holds {any} vs strongly clean {brute}")
    });
    ck.finish()
}
