//! Command-line front end.
//!
//! Exit codes: 0 success, 1 failed verification or census verdict,
//! 2 unparseable input or bad bounds, 3 invariant violation or not a knot,
//! 4 equality case (no certificate), 5 no attestation.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::braid::{BraidError, BraidWord};
use crate::census::{corollary2_scan, torus_braid, CensusError};
use crate::invariants::{alexander_polynomial, bound_report, format_rational, InvariantError};
use crate::seifert::{seifert_matrix_from_positive_braid, SeifertError, SeifertMatrix};
use crate::stable::{attested_witness, theorem1_decide, verify_certificate, Dichotomy, Sign, SliceCertificate, StableError};

#[derive(Debug, Parser)]
#[command(name = "knotform", version, about = "Seifert-form invariants and stable 4-genus certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus, signature, Alexander polynomial and the signature bound.
    Invariants {
        #[command(flatten)]
        source: Source,
        /// Also write the Seifert matrix as JSON.
        #[arg(long)]
        matrix_out: Option<PathBuf>,
    },
    /// Build a slice certificate for `ĝ₄ ≤ g − 1/N`.
    Certificate {
        #[command(flatten)]
        source: Source,
        /// Framing of the attested annulus. Braid input defaults to the
        /// brick Hopf bands.
        #[arg(long, allow_hyphen_values = true)]
        attest_annulus: Option<Sign>,
        /// Certificate path; printed to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a Seifert matrix.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Scan positive braid knots for `|σ| = 2g`.
    Census {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        crossings: usize,
        /// CSV report path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a certificate for every strict record into this directory.
        #[arg(long)]
        cert_dir: Option<PathBuf>,
    },
    /// Print the standard positive braid of `T(p, q)`.
    Torus { p: usize, q: usize },
}

#[derive(Debug, Args)]
pub struct Source {
    #[command(flatten)]
    input: InputArgs,
    /// Strand count for braid input, when above the largest letter + 1.
    #[arg(long)]
    strands: Option<usize>,
}

/// Exactly one input per invocation.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Inline braid word, e.g. "1 2 1 2".
    #[arg(long)]
    braid: Option<String>,
    #[arg(long)]
    braid_file: Option<PathBuf>,
    /// Seifert matrix JSON file.
    #[arg(long)]
    matrix: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Invariant(String),
    #[error("|σ| = 2g: the stable 4-genus equals the genus and no certificate exists")]
    EqualityCase,
    #[error("no framed annulus attested; pass --attest-annulus +1 or -1")]
    NoAttestation,
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::EqualityCase => 4,
            CliError::NoAttestation => 5,
        }
    }
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        match e {
            BraidError::EmptyWord | BraidError::NonPositiveLetter(_) | BraidError::StrandsTooFew { .. } => {
                CliError::Parse(e.to_string())
            }
            BraidError::NotAKnot(_) | BraidError::MissingGenerator(_) => CliError::Invariant(e.to_string()),
        }
    }
}

impl From<SeifertError> for CliError {
    fn from(e: SeifertError) -> Self {
        match e {
            SeifertError::Braid(b) => b.into(),
            SeifertError::NotSquare | SeifertError::Json(_) | SeifertError::Io(_) => CliError::Parse(e.to_string()),
            _ => CliError::Invariant(e.to_string()),
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        CliError::Invariant(e.to_string())
    }
}

impl From<StableError> for CliError {
    fn from(e: StableError) -> Self {
        match e {
            StableError::NoAttestation => CliError::NoAttestation,
            StableError::Json(_) | StableError::Malformed(_) | StableError::Io(_) | StableError::DimensionMismatch { .. } => {
                CliError::Parse(e.to_string())
            }
            _ => CliError::Invariant(e.to_string()),
        }
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::Braid(b) => b.into(),
            CensusError::Seifert(s) => s.into(),
            CensusError::Io(io) => CliError::Io(io),
            other => CliError::Parse(other.to_string()),
        }
    }
}

enum Input {
    Braid(BraidWord),
    Matrix(SeifertMatrix),
}

impl Source {
    fn load(&self) -> Result<Input, CliError> {
        let word = match (&self.input.braid, &self.input.braid_file, &self.input.matrix) {
            (Some(text), _, _) => text.parse::<BraidWord>()?,
            (_, Some(path), _) => std::fs::read_to_string(path)
                .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?
                .parse::<BraidWord>()?,
            (_, _, Some(path)) => {
                if self.strands.is_some() {
                    return Err(CliError::Parse("--strands only applies to braid input".into()));
                }
                return Ok(Input::Matrix(SeifertMatrix::read_file(path)?));
            }
            _ => return Err(CliError::Parse("no input given".into())),
        };
        let word = match self.strands {
            Some(s) => word.with_strands(s)?,
            None => word,
        };
        word.validate_knot()?;
        Ok(Input::Braid(word))
    }

    fn seifert(&self) -> Result<(SeifertMatrix, bool), CliError> {
        match self.load()? {
            Input::Braid(w) => Ok((seifert_matrix_from_positive_braid(&w)?, true)),
            Input::Matrix(v) => Ok((v, false)),
        }
    }
}

/// Runs one invocation, writing regular output to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Invariants { source, matrix_out } => {
            let (v, _) = source.seifert()?;
            let report = bound_report(&v)?;
            writeln!(out, "genus: {}", report.genus)?;
            writeln!(out, "signature: {}", report.signature)?;
            writeln!(out, "alexander: {}", alexander_polynomial(&v))?;
            writeln!(out, "stable_lower_bound: {}", format_rational(&report.lower_stable))?;
            writeln!(out, "equality: {}", if report.equality { "yes" } else { "no" })?;
            if let Some(path) = matrix_out {
                v.write_file(&path)?;
            }
            Ok(0)
        }
        Command::Certificate { source, attest_annulus, out: path } => {
            let (v, from_braid) = source.seifert()?;
            // bricks are Hopf bands of framing −1
            let sign = attest_annulus.or(from_braid.then_some(Sign::Negative));
            let witness = match sign {
                Some(sign) => {
                    let report = bound_report(&v)?;
                    if report.equality {
                        return Err(CliError::EqualityCase);
                    }
                    Some(attested_witness(&v, sign)?)
                }
                None => None,
            };
            let cert = match theorem1_decide(&v, witness.as_ref())? {
                Dichotomy::Equality { .. } => return Err(CliError::EqualityCase),
                Dichotomy::StrictUpper { certificate, .. } => certificate,
            };
            match &path {
                Some(p) => {
                    cert.write_file(p)?;
                    writeln!(out, "N: {}", cert.n)?;
                    writeln!(out, "genus_bound: {}", format_rational(&cert.genus_bound))?;
                    writeln!(out, "certificate: {}", p.display())?;
                }
                None => writeln!(out, "{}", cert.to_json())?,
            }
            Ok(0)
        }
        Command::Verify { source, certificate } => {
            let (v, _) = source.seifert()?;
            let cert = SliceCertificate::read_file(&certificate)?;
            if !cert.fits(&v) {
                return Err(CliError::Parse(format!(
                    "certificate vectors of length {} and {} do not fit N = {} copies of a {}x{} matrix",
                    cert.a.len(),
                    cert.d.len(),
                    cert.n,
                    v.size(),
                    v.size()
                )));
            }
            let report = verify_certificate(&v, &cert);
            writeln!(out, "{report}")?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Census { strands, crossings, out: path, cert_dir } => {
            let report = corollary2_scan(strands, crossings, cert_dir.as_deref())?;
            if let Some(p) = &path {
                report.write_csv_file(p)?;
            }
            writeln!(out, "{report}")?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Torus { p, q } => {
            writeln!(out, "{}", torus_braid(p, q)?)?;
            Ok(0)
        }
    }
}
