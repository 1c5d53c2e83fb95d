use std::time::Instant;

use radinv::finite::{campaign, CampaignMode, CampaignOptions, RingSpec, Theorem};

fn run_all(theorem: Theorem, rings: &[&str]) {
    for r in rings {
        let spec: RingSpec = r.parse().unwrap();
        let t = Instant::now();
        let rep = campaign(theorem, spec, CampaignOptions::default()).unwrap();
        eprintln!(
            "{theorem} {spec}: tested {} of {} in {:?}",
            rep.tuples_tested,
            rep.tuple_space,
            t.elapsed()
        );
        assert_eq!(rep.mode, CampaignMode::Exhaustive);
        assert!(rep.tuples_tested > 0);
        assert!(
            rep.passed(),
            "{theorem} on {spec}: {:#?}",
            &rep.counterexamples[..rep.counterexamples.len().min(5)]
        );
    }
}

const SMALL: [&str; 6] = ["zn:4", "zn:8", "t2z:2", "dual:2", "dual:3", "series:2:3"];

#[test]
fn bc_perturbation() {
    run_all(
        Theorem::BcPerturbation,
        &[
            "t2z:2",
            "zn:4",
            "dual:2",
            "dual:3",
            "zn:8",
            "series:2:3",
            "zn:9",
        ],
    );
}

#[test]
fn regular_perturbation() {
    run_all(Theorem::RegularPerturbation, &SMALL);
    run_all(Theorem::RegularPerturbation, &["m2z:2", "t2z:3"]);
}

#[test]
fn absorption() {
    run_all(Theorem::Absorption, &SMALL);
}

#[test]
fn idempotence() {
    run_all(Theorem::Idempotence, &SMALL);
}

#[test]
fn joint_idempotence() {
    run_all(Theorem::JointIdempotence, &SMALL);
}

#[test]
fn drazin() {
    run_all(Theorem::DrazinPerturbation, &SMALL);
    run_all(Theorem::DrazinPerturbation, &["m2z:2", "t2z:3", "t2z:4"]);
}

#[test]
fn clean_transfer() {
    run_all(Theorem::CleanTransfer, &SMALL);
    run_all(Theorem::CleanTransfer, &["m2z:2", "t2z:3"]);
}

#[test]
fn wider_rings() {
    for t in [
        Theorem::Idempotence,
        Theorem::JointIdempotence,
        Theorem::BcPerturbation,
    ] {
        run_all(t, &["t2z:3", "m2z:2"]);
    }
    run_all(Theorem::Absorption, &["m2z:2"]);
}

#[test]
fn sampled_t2z4() {
    let t = Instant::now();
    let rep = campaign(
        Theorem::BcPerturbation,
        RingSpec::T2(4),
        CampaignOptions {
            seed: 42,
            trials: 100_000,
        },
    )
    .unwrap();
    eprintln!("sampled: tested {} in {:?}", rep.tuples_tested, t.elapsed());
    assert_eq!(
        rep.mode,
        CampaignMode::Sampled {
            seed: 42,
            trials: 100_000
        }
    );
    assert!(
        rep.passed(),
        "{:#?}",
        &rep.counterexamples[..rep.counterexamples.len().min(5)]
    );
}
