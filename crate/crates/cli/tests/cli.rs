use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn radinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn matrix(rows: &[&[i64]]) -> Value {
    json!({"rows": rows.len(), "cols": rows[0].len(), "entries": rows})
}

fn dual(real: &[&[i64]], eps: &[&[i64]]) -> Value {
    json!({"real": matrix(real), "dual": matrix(eps)})
}

fn write(dir: &Path, name: &str, v: &Value) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn read(p: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

/// Entries of a serialized matrix as strings.
fn entries(m: &Value) -> Vec<Vec<String>> {
    m["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r.as_array()
                .unwrap()
                .iter()
                .map(|e| e.as_str().unwrap().to_owned())
                .collect()
        })
        .collect()
}

fn strs(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|e| e.to_string()).collect())
        .collect()
}

#[test]
fn mp_of_idempotent_dual_is_itself() {
    let dir = TempDir::new().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        &dual(&[&[1, 0], &[0, 0]], &[&[0, 1], &[1, 0]]),
    );
    let out = dir.path().join("cert.json");
    let r = radinv(&["compute", "--kind", "mp", "--a", s(&a), "--out", s(&out)]);
    assert_eq!(code(&r), 0, "{}", String::from_utf8_lossy(&r.stderr));
    let cert = read(&out);
    assert_eq!(
        entries(&cert["witness"]["real"]),
        strs(&[&["1", "0"], &["0", "0"]])
    );
    assert_eq!(
        entries(&cert["witness"]["dual"]),
        strs(&[&["0", "1"], &["1", "0"]])
    );
    assert_eq!(cert["paths_agree"], json!(true));
}

#[test]
fn mp_nonexistence_carries_the_residual() {
    let dir = TempDir::new().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        &dual(&[&[1, 0], &[0, 0]], &[&[0, 0], &[0, 1]]),
    );
    let r = radinv(&["compute", "--kind", "mp", "--a", s(&a)]);
    assert_eq!(code(&r), 1);
    let cert: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert!(cert["witness"].is_null());
    let res = &cert["nonexistence"]["residuals"][0]["value"];
    assert_eq!(entries(&res["real"]), strs(&[&["0", "0"], &["0", "0"]]));
    assert_eq!(entries(&res["dual"]), strs(&[&["0", "0"], &["0", "1"]]));
}

#[test]
fn bc_with_real_prescriptions() {
    let dir = TempDir::new().unwrap();
    let i = write(dir.path(), "i.json", &matrix(&[&[1, 0], &[0, 1]]));
    let p = write(dir.path(), "p.json", &matrix(&[&[1, 0], &[0, 0]]));
    let r = radinv(&[
        "compute",
        "--kind",
        "bc",
        "--a",
        s(&i),
        "--b",
        s(&p),
        "--c",
        s(&p),
    ]);
    assert_eq!(code(&r), 0);
    let cert: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(
        entries(&cert["witness"]["real"]),
        strs(&[&["1", "0"], &["0", "0"]])
    );
    assert_eq!(
        entries(&cert["witness"]["dual"]),
        strs(&[&["0", "0"], &["0", "0"]])
    );
}

#[test]
fn compute_then_verify_round_trips() {
    let dir = TempDir::new().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        &dual(&[&[0, 1], &[0, 0]], &[&[1, 0], &[0, 1]]),
    );
    let b = write(
        dir.path(),
        "b.json",
        &dual(&[&[2, 1], &[1, 1]], &[&[0, 3], &[-1, 2]]),
    );
    let bad = write(
        dir.path(),
        "bad.json",
        &dual(&[&[1, 0], &[0, 0]], &[&[0, 0], &[0, 1]]),
    );
    let cases: [(&str, &Path, i32); 7] = [
        ("mp", &a, 0),
        ("group", &b, 0),
        ("core", &b, 0),
        ("drazin", &a, 0),
        ("drazin", &b, 0),
        ("mp", &bad, 1),
        ("group", &a, 1),
    ];
    for (n, (kind, input, expect)) in cases.into_iter().enumerate() {
        let out = dir.path().join(format!("cert{n}.json"));
        let r = radinv(&["compute", "--kind", kind, "--a", s(input), "--out", s(&out)]);
        assert_eq!(
            code(&r),
            expect,
            "{kind}: {}",
            String::from_utf8_lossy(&r.stderr)
        );
        let v = radinv(&["verify", "--certificate", s(&out)]);
        assert_eq!(
            code(&v),
            0,
            "{kind}: {}",
            String::from_utf8_lossy(&v.stderr)
        );
    }
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = TempDir::new().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        &dual(&[&[1, 0], &[0, 0]], &[&[0, 1], &[1, 0]]),
    );
    let out = dir.path().join("cert.json");
    assert_eq!(
        code(&radinv(&[
            "compute",
            "--kind",
            "mp",
            "--a",
            s(&a),
            "--out",
            s(&out)
        ])),
        0
    );
    let mut cert = read(&out);
    cert["witness"]["real"]["entries"][1][1] = json!("1");
    let tampered = write(dir.path(), "tampered.json", &cert);
    let r = radinv(&["verify", "--certificate", s(&tampered)]);
    assert_eq!(code(&r), 1);
    assert!(String::from_utf8_lossy(&r.stderr).contains("rejected"));
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        &dual(&[&[1, 0], &[0, 0]], &[&[0, 1], &[1, 0]]),
    );
    let out = dir.path().join("cert.json");
    assert_eq!(
        code(&radinv(&[
            "compute",
            "--kind",
            "mp",
            "--a",
            s(&a),
            "--out",
            s(&out)
        ])),
        0
    );
    let mut cert = read(&out);
    cert.as_object_mut().unwrap().remove("input");
    let partial = write(dir.path(), "partial.json", &cert);
    assert_eq!(code(&radinv(&["verify", "--certificate", s(&partial)])), 2);

    let ragged = write(
        dir.path(),
        "ragged.json",
        &json!({"rows": 2, "cols": 2, "entries": [[1, 0]]}),
    );
    assert_eq!(
        code(&radinv(&["compute", "--kind", "mp", "--a", s(&ragged)])),
        2
    );
    let missing = dir.path().join("nope.json");
    assert_eq!(
        code(&radinv(&["compute", "--kind", "mp", "--a", s(&missing)])),
        2
    );
    assert_eq!(code(&radinv(&["compute", "--kind", "bc", "--a", s(&a)])), 2);
    let wide = write(dir.path(), "wide.json", &matrix(&[&[1, 0, 0], &[0, 1, 0]]));
    assert_eq!(
        code(&radinv(&["compute", "--kind", "group", "--a", s(&wide)])),
        2
    );
    assert_eq!(
        code(&radinv(&["compute", "--kind", "inverse", "--a", s(&a)])),
        2
    );
    assert_eq!(
        code(&radinv(&[
            "campaign",
            "--theorem",
            "thm33",
            "--ring",
            "zn:0x"
        ])),
        2
    );
}

#[test]
fn campaigns_pass() {
    for args in [
        &["--theorem", "thm33", "--ring", "t2z:2"][..],
        &["--theorem", "lemma31", "--ring", "zn:4"],
        &[
            "--theorem",
            "thm33",
            "--ring",
            "t2z:4",
            "--trials",
            "100000",
            "--seed",
            "42",
        ],
    ] {
        let mut full = vec!["campaign"];
        full.extend_from_slice(args);
        let r = radinv(&full);
        assert_eq!(
            code(&r),
            0,
            "{args:?}: {}",
            String::from_utf8_lossy(&r.stderr)
        );
        let report: Value = serde_json::from_slice(&r.stdout).unwrap();
        assert_eq!(report["counterexamples"], json!([]));
    }
}

#[test]
fn campaign_reports_are_deterministic() {
    let args = [
        "campaign",
        "--theorem",
        "thm33",
        "--ring",
        "t2z:4",
        "--trials",
        "2000",
        "--seed",
        "7",
    ];
    assert_eq!(radinv(&args).stdout, radinv(&args).stdout);
}

#[test]
fn split_reports_the_radical_factors() {
    let dir = TempDir::new().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        &dual(&[&[1, 0], &[0, 0]], &[&[0, 1], &[1, 0]]),
    );
    let r = radinv(&["split", "--a", s(&a)]);
    assert_eq!(code(&r), 0);
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v["regularity"]["regular"], json!(true));
    assert_eq!(
        entries(&v["split"]["a1"]),
        strs(&[&["0", "0"], &["1", "0"]])
    );
    assert_eq!(
        entries(&v["split"]["a2"]),
        strs(&[&["0", "1"], &["0", "0"]])
    );

    let bad = write(
        dir.path(),
        "bad.json",
        &dual(&[&[1, 0], &[0, 0]], &[&[0, 0], &[0, 1]]),
    );
    let r = radinv(&["split", "--a", s(&bad)]);
    assert_eq!(code(&r), 1);
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert!(v["split"].is_null());
}
