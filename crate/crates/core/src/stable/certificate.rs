//! Slice certificates: a class pair in `Σ^N` spanning a genus-one
//! subsurface with Seifert form `[[0, ±1], [0, 0]]`, which bounds a knot
//! with trivial Alexander polynomial and so witnesses `ĝ₄ ≤ g − 1/N`.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::StableError;
use crate::invariants::{form_value, seifert_determinant, signature};
use crate::laurent::LaurentPolynomial;
use crate::matrix::{is_primitive, IntMatrix};
use crate::seifert::SeifertMatrix;

/// Which class of the pair a construction step modified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    A,
    D,
}

/// One step of the construction, kept as provenance only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    /// The attested annulus had framing −1; the construction ran on the
    /// mirror and the roles of the two classes were swapped afterwards.
    MirrorNormalization,
    PickedDual {
        #[serde(with = "crate::json::vector")]
        d: Vec<BigInt>,
        #[serde(with = "crate::json::scalar")]
        b: BigInt,
        #[serde(with = "crate::json::scalar")]
        c: BigInt,
    },
    FramingCorrection {
        target: Target,
        /// Framing of each added copy, ±1.
        unit_framing: i64,
        copies: usize,
        /// 1-based block range `[first, last]` consumed by the copies.
        blocks: [usize; 2],
        #[serde(with = "crate::json::scalar")]
        framing_after: BigInt,
    },
    BaseChange {
        /// `d ↦ d + coefficient·a`
        #[serde(with = "crate::json::scalar")]
        coefficient: BigInt,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceCertificate {
    pub n: usize,
    pub a: Vec<BigInt>,
    pub d: Vec<BigInt>,
    /// `[[aᵀVa, aᵀVd], [dᵀVa, dᵀVd]]` against `V^(N)`.
    pub final_form: [[BigInt; 2]; 2],
    pub genus_bound: BigRational,
    pub realizability_attested: bool,
    pub transcript: Vec<Step>,
}

#[derive(Serialize, Deserialize)]
struct RationalWire {
    #[serde(with = "crate::json::scalar")]
    num: BigInt,
    #[serde(with = "crate::json::scalar")]
    den: BigInt,
}

#[derive(Serialize, Deserialize)]
struct CertificateWire {
    #[serde(rename = "N")]
    n: usize,
    #[serde(with = "crate::json::vector")]
    a: Vec<BigInt>,
    #[serde(with = "crate::json::vector")]
    d: Vec<BigInt>,
    #[serde(with = "crate::json::matrix")]
    final_form: Vec<Vec<BigInt>>,
    genus_bound: RationalWire,
    realizability_attested: bool,
    #[serde(default)]
    transcript: Vec<Step>,
}

impl SliceCertificate {
    pub fn final_form_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&[self.final_form[0].to_vec(), self.final_form[1].to_vec()]).expect("2x2")
    }

    pub fn to_json(&self) -> String {
        let wire = CertificateWire {
            n: self.n,
            a: self.a.clone(),
            d: self.d.clone(),
            final_form: self.final_form.iter().map(|r| r.to_vec()).collect(),
            genus_bound: RationalWire { num: self.genus_bound.numer().clone(), den: self.genus_bound.denom().clone() },
            realizability_attested: self.realizability_attested,
            transcript: self.transcript.clone(),
        };
        serde_json::to_string(&wire).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, StableError> {
        let w: CertificateWire = serde_json::from_str(text)?;
        let shape_ok = w.final_form.len() == 2 && w.final_form.iter().all(|r| r.len() == 2);
        if !shape_ok {
            return Err(StableError::Malformed("final_form must be a 2x2 array".into()));
        }
        if w.genus_bound.den.is_zero() {
            return Err(StableError::Malformed("genus_bound has zero denominator".into()));
        }
        let f = &w.final_form;
        Ok(Self {
            n: w.n,
            a: w.a,
            d: w.d,
            final_form: [[f[0][0].clone(), f[0][1].clone()], [f[1][0].clone(), f[1][1].clone()]],
            genus_bound: BigRational::new(w.genus_bound.num, w.genus_bound.den),
            realizability_attested: w.realizability_attested,
            transcript: w.transcript,
        })
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self, StableError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<(), StableError> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }

    /// Whether `a` and `d` fit `V^(N)`.
    pub fn fits(&self, v: &SeifertMatrix) -> bool {
        self.n >= 1 && v.size() > 0 && self.a.len() == self.n * v.size() && self.d.len() == self.n * v.size()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        write!(f, "verdict: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

pub(crate) fn format_ratio(r: &BigRational) -> String {
    crate::invariants::format_rational(r)
}

/// Recomputes everything the certificate claims from `V`, `N`, `a`, `d`,
/// `final_form` and `genus_bound`. The transcript is not consulted.
pub fn verify_certificate(v: &SeifertMatrix, cert: &SliceCertificate) -> VerificationReport {
    let mut checks = Vec::new();
    let mut push = |name: &'static str, passed: bool, detail: String| checks.push(Check { name, passed, detail });

    let g = BigRational::from_integer(BigInt::from(v.genus()));
    let fits = cert.fits(v);
    push(
        "dimensions",
        fits,
        format!("N = {}, |a| = {}, |d| = {}, block size {}", cert.n, cert.a.len(), cert.d.len(), v.size()),
    );

    let gram = fits.then(|| {
        let e = |x: &[BigInt], y: &[BigInt]| form_value(v, x, y).expect("dimensions checked");
        [[e(&cert.a, &cert.a), e(&cert.a, &cert.d)], [e(&cert.d, &cert.a), e(&cert.d, &cert.d)]]
    });
    match &gram {
        Some(gm) => {
            push("framing_a", gm[0][0].is_zero(), format!("aᵀVa = {}", gm[0][0]));
            push("framing_d", gm[1][1].is_zero(), format!("dᵀVd = {}", gm[1][1]));
            let (x, y) = (&gm[0][1], &gm[1][0]);
            let unimodular = (x.abs().is_one() && y.is_zero()) || (y.abs().is_one() && x.is_zero());
            push("cross_linking", unimodular, format!("{{aᵀVd, dᵀVa}} = {{{x}, {y}}}"));
            push("gram_matches_final_form", *gm == cert.final_form, format!("recomputed {}", fmt_form(gm)));
        }
        None => {
            for name in ["framing_a", "framing_d", "cross_linking", "gram_matches_final_form"] {
                push(name, false, "skipped: dimension mismatch".into());
            }
        }
    }
    push("primitive_a", is_primitive(&cert.a), "gcd of entries is 1".into());
    push("primitive_d", is_primitive(&cert.d), "gcd of entries is 1".into());

    let ff = &cert.final_form;
    let shape = ff[0][0].is_zero() && ff[1][0].is_zero() && ff[1][1].is_zero() && ff[0][1].abs().is_one();
    push("final_form_unimodular", shape, format!("final_form = {}, need [[0, ±1], [0, 0]]", fmt_form(ff)));

    let alex = seifert_determinant(&cert.final_form_matrix());
    push("alexander_trivial", alex == LaurentPolynomial::one(), format!("Δ = {alex}"));

    let expected = if cert.n >= 1 {
        Some(&g - BigRational::new(BigInt::one(), BigInt::from(cert.n)))
    } else {
        None
    };
    push(
        "genus_bound_value",
        expected.as_ref() == Some(&cert.genus_bound),
        format!("genus_bound = {}, g - 1/N = {}", format_ratio(&cert.genus_bound), expected.as_ref().map_or("undefined".into(), format_ratio)),
    );
    push("genus_bound_below_genus", cert.genus_bound < g, format!("{} < {}", format_ratio(&cert.genus_bound), g));

    match signature(v) {
        Ok(sigma) => {
            let lower = BigRational::new(BigInt::from(sigma.abs()), BigInt::from(2));
            push(
                "signature_bound",
                lower <= cert.genus_bound,
                format!("|σ|/2 = {} ≤ {}", format_ratio(&lower), format_ratio(&cert.genus_bound)),
            );
        }
        Err(e) => push("signature_bound", false, e.to_string()),
    }
    VerificationReport { checks }
}

fn fmt_form(f: &[[BigInt; 2]; 2]) -> String {
    format!("[[{}, {}], [{}, {}]]", f[0][0], f[0][1], f[1][0], f[1][1])
}
