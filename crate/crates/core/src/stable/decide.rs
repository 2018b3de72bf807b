use num_traits::{One, Signed};

use super::certificate::{verify_certificate, SliceCertificate, Step};
use super::framed::{find_signed_class, find_unit_class, FramedClass};
use super::torus::lemma2_torus;
use super::{Sign, StableError};
use crate::invariants::{bound_report, BoundReport};
use crate::seifert::SeifertMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dichotomy {
    /// `|σ| = 2g`, hence `ĝ₄ = g`.
    Equality { report: BoundReport },
    /// `ĝ₄ ≤ g − 1/N < g`, witnessed by a verified certificate.
    StrictUpper { report: BoundReport, certificate: SliceCertificate },
}

impl Dichotomy {
    pub fn report(&self) -> &BoundReport {
        match self {
            Dichotomy::Equality { report } | Dichotomy::StrictUpper { report, .. } => report,
        }
    }

    pub fn is_equality(&self) -> bool {
        matches!(self, Dichotomy::Equality { .. })
    }
}

/// A power-one class of framing `sign·1` standing in for an attested
/// annulus. For positive braid fibre surfaces every brick is a Hopf band
/// with framing −1.
pub fn attested_witness(v: &SeifertMatrix, sign: Sign) -> Result<FramedClass, StableError> {
    find_unit_class(v, sign).ok_or(StableError::NoUnitClass(sign))
}

/// Decides between `ĝ₄ = g` and a strict upper bound, given a ±1-framed
/// witness class for the annulus hypothesis.
pub fn theorem1_decide(v: &SeifertMatrix, witness: Option<&FramedClass>) -> Result<Dichotomy, StableError> {
    let witness = witness.ok_or(StableError::NoAttestation)?;
    if !witness.framing().abs().is_one() {
        return Err(StableError::NotUnitFraming(witness.framing().clone()));
    }
    let report = bound_report(v)?;
    if report.equality {
        return Ok(Dichotomy::Equality { report });
    }
    let certificate = if witness.framing().is_positive() {
        let helper = find_signed_class(v, Sign::Negative)?;
        lemma2_torus(v, witness, &helper)?
    } else {
        // on −Vᵀ the witness has framing +1; swapping the pair back turns
        // [[0, 1], [0, 0]] into [[0, −1], [0, 0]]
        let w = v.mirror();
        let a = FramedClass::new(&w, witness.vector().to_vec())?;
        let helper = find_signed_class(&w, Sign::Negative)?;
        let mirrored = lemma2_torus(&w, &a, &helper)?;
        let ff = &mirrored.final_form;
        let mut transcript = vec![Step::MirrorNormalization];
        transcript.extend(mirrored.transcript);
        SliceCertificate {
            n: mirrored.n,
            a: mirrored.d,
            d: mirrored.a,
            final_form: [[-&ff[1][1], -&ff[0][1]], [-&ff[1][0], -&ff[0][0]]],
            genus_bound: mirrored.genus_bound,
            realizability_attested: mirrored.realizability_attested,
            transcript,
        }
    };
    let check = verify_certificate(v, &certificate);
    if !check.passed() {
        return Err(StableError::CertificateRejected(check.to_string()));
    }
    Ok(Dichotomy::StrictUpper { report, certificate })
}
