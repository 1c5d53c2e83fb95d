//! `radinv`: compute and verify generalized-inverse certificates for dual
//! matrices, and run finite-ring campaigns.
//!
//! Exit codes: 0 when the inverse exists or the check passes, 1 for a
//! certified nonexistence, a rejected certificate or a counterexample, 2 for
//! input errors.

use std::fs;
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use radinv::dual::{
    dual_generalized_inverse_with, radical_split_with, regularity_certificate, verify_certificate,
    DualInverseCertificate, DualKind, DualOptions, RadicalSplit, RegularityCertificate,
};
use radinv::finite::{campaign, CampaignOptions, RingSpec, Theorem};
use radinv::{QDualMatrix, QMatrix, Rational};

#[derive(Parser)]
#[command(
    name = "radinv",
    version,
    about = "Exact generalized inverses of dual matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Mp,
    Group,
    Core,
    Drazin,
    Bc,
    Along,
    Outer,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an inverse and write its certificate.
    Compute {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: Option<PathBuf>,
        #[arg(long)]
        c: Option<PathBuf>,
        /// Matrix to invert along, for `--kind along`.
        #[arg(long)]
        d: Option<PathBuf>,
        /// Reflexive inverse of the real part of A.
        #[arg(long)]
        a_plus: Option<PathBuf>,
        #[arg(long)]
        b_plus: Option<PathBuf>,
        #[arg(long)]
        c_plus: Option<PathBuf>,
        /// Drazin exponent; must not be below the index.
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Check a theorem on a finite ring, exhaustively when feasible.
    Campaign {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        ring: String,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regularity certificate and radical split of a dual matrix.
    Split {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        a_plus: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failures that are the caller's fault, reported with exit code 2.
#[derive(Debug)]
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        Self(e.into())
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// A dual matrix, or a plain matrix read as having zero dual part.
fn read_dual(path: &Path) -> Result<QDualMatrix> {
    let text = read_text(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).with_context(|| format!("{} is not JSON", path.display()))?;
    if value.get("real").is_some() || value.get("dual").is_some() {
        serde_json::from_value(value)
            .with_context(|| format!("{} is not a dual matrix", path.display()))
    } else {
        let m: QMatrix = serde_json::from_value(value)
            .with_context(|| format!("{} is not a matrix", path.display()))?;
        Ok(QDualMatrix::from_real(m))
    }
}

fn read_matrix(path: &Path) -> Result<QMatrix> {
    serde_json::from_str(&read_text(path)?)
        .with_context(|| format!("{} is not a matrix", path.display()))
}

fn read_optional<T>(path: Option<&PathBuf>, read: fn(&Path) -> Result<T>) -> Result<Option<T>> {
    path.map(|p| read(p)).transpose()
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(p) => {
            fs::write(p, text + "\n").with_context(|| format!("cannot write {}", p.display()))
        }
        None => match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.into()),
            _ => Ok(()),
        },
    }
}

#[allow(clippy::too_many_arguments)]
fn compute(
    kind: Kind,
    a: &Path,
    b: Option<&PathBuf>,
    c: Option<&PathBuf>,
    d: Option<&PathBuf>,
    overrides: [Option<&PathBuf>; 3],
    l: Option<usize>,
    out: Option<&Path>,
) -> Result<u8, InputError> {
    let a = read_dual(a)?;
    let b = read_optional(b, read_dual)?;
    let c = read_optional(c, read_dual)?;
    let need = |m: Option<QDualMatrix>, flag: &str| m.ok_or_else(|| anyhow!("--kind needs {flag}"));
    let kind = match kind {
        Kind::Mp => DualKind::MoorePenrose,
        Kind::Group => DualKind::Group,
        Kind::Core => DualKind::Core,
        Kind::Drazin => DualKind::Drazin,
        Kind::Bc => DualKind::Bc(need(b, "--b")?, need(c, "--c")?),
        Kind::Outer => DualKind::Outer(need(b, "--b")?, need(c, "--c")?),
        Kind::Along => DualKind::Along(need(read_optional(d, read_dual)?, "--d")?),
    };
    let [a_plus, b_plus, c_plus] = overrides;
    let opts = DualOptions::<Rational> {
        a_plus: read_optional(a_plus, read_matrix)?,
        b_plus: read_optional(b_plus, read_matrix)?,
        c_plus: read_optional(c_plus, read_matrix)?,
        drazin_l: l,
    };
    let cert = dual_generalized_inverse_with(&kind, &a, &opts)?;
    emit(&cert, out)?;
    if cert.exists() {
        let passed = cert.residual_report.as_ref().is_some_and(|r| r.passed);
        if !passed || cert.paths_agree == Some(false) || cert.real_part_consistent == Some(false) {
            eprintln!("witness failed its own checks");
            return Ok(1);
        }
        eprintln!("{} inverse exists", cert.kind);
        Ok(0)
    } else {
        let reason = cert.nonexistence.as_ref().map_or("", |n| n.reason.as_str());
        eprintln!("no {} inverse: {reason}", cert.kind);
        Ok(1)
    }
}

fn verify(path: &Path) -> Result<u8, InputError> {
    let cert: DualInverseCertificate<Rational> = serde_json::from_str(&read_text(path)?)
        .with_context(|| format!("{} is not a certificate", path.display()))?;
    let check = verify_certificate(&cert)?;
    match check.first_failure {
        None => {
            eprintln!("certificate verified");
            Ok(0)
        }
        Some(f) => {
            eprintln!("certificate rejected: {f}");
            Ok(1)
        }
    }
}

fn run_campaign(
    theorem: &str,
    ring: &str,
    trials: Option<u64>,
    seed: Option<u64>,
    out: Option<&Path>,
) -> Result<u8, InputError> {
    let theorem: Theorem = theorem.parse().map_err(|e| anyhow!("{e}"))?;
    let spec: RingSpec = ring.parse().map_err(|e| anyhow!("{e}"))?;
    let defaults = CampaignOptions::default();
    let options = CampaignOptions {
        seed: seed.unwrap_or(defaults.seed),
        trials: trials.unwrap_or(defaults.trials),
    };
    let report = campaign(theorem, spec, options)?;
    if let Some(w) = &report.warning {
        eprintln!("warning: {w}");
    }
    emit(&report, out)?;
    eprintln!(
        "{} on {}: {} tuples tested, {} counterexamples",
        theorem,
        spec,
        report.tuples_tested,
        report.counterexamples.len()
    );
    Ok(if report.passed() { 0 } else { 1 })
}

#[derive(Serialize)]
struct SplitReport {
    regularity: RegularityCertificate<Rational>,
    split: Option<RadicalSplit<Rational>>,
}

fn split(a: &Path, a_plus: Option<&PathBuf>, out: Option<&Path>) -> Result<u8, InputError> {
    let a = read_dual(a)?;
    let a_plus = read_optional(a_plus, read_matrix)?;
    let regularity = regularity_certificate(&a, a_plus.as_ref())?;
    let split = radical_split_with(&a, a_plus.as_ref())?;
    let code = if split.is_some() { 0 } else { 1 };
    emit(&SplitReport { regularity, split }, out)?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Compute {
            kind,
            a,
            b,
            c,
            d,
            a_plus,
            b_plus,
            c_plus,
            l,
            out,
        } => compute(
            *kind,
            a,
            b.as_ref(),
            c.as_ref(),
            d.as_ref(),
            [a_plus.as_ref(), b_plus.as_ref(), c_plus.as_ref()],
            *l,
            out.as_deref(),
        ),
        Command::Verify { certificate } => verify(certificate),
        Command::Campaign {
            theorem,
            ring,
            trials,
            seed,
            out,
        } => run_campaign(theorem, ring, *trials, *seed, out.as_deref()),
        Command::Split { a, a_plus, out } => split(a, a_plus.as_ref(), out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
