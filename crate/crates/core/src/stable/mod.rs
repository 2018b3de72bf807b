//! Stable 4-genus certificates: framed classes in powers of the Seifert
//! surface, the Alexander-trivial torus construction and the equality /
//! strict-upper-bound dichotomy.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::invariants::InvariantError;

mod certificate;
mod decide;
mod framed;
mod torus;

pub use certificate::{verify_certificate, Check, SliceCertificate, Step, Target, VerificationReport};
pub use decide::{attested_witness, theorem1_decide, Dichotomy};
pub use framed::{dual_class, find_signed_class, find_unit_class, realize_framing, FramedClass};
pub use torus::lemma2_torus;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+1",
            Sign::Negative => "-1",
        })
    }
}

impl FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Sign::Positive),
            "-1" | "-" => Ok(Sign::Negative),
            other => Err(format!("expected +1 or -1, got {other:?}")),
        }
    }
}

#[derive(Debug, Error)]
pub enum StableError {
    #[error("vector of length {len} does not fit a power of a {size}x{size} matrix")]
    DimensionMismatch { len: usize, size: usize },
    #[error("class is not primitive")]
    NotPrimitive,
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("no class with framing of sign {0}: the symmetrized form is definite")]
    DefiniteForm(Sign),
    #[error("no primitive class of framing {0} found")]
    NoUnitClass(Sign),
    #[error("expected a class of framing +1 or -1, got framing {0}")]
    NotUnitFraming(BigInt),
    #[error("helper class must have negative framing, got {0}")]
    HelperNotNegative(BigInt),
    #[error("cannot move framing {from} to {to} with the given unit")]
    UnreachableFraming { from: BigInt, to: BigInt },
    #[error("construction exceeds machine-size bounds")]
    TooLarge,
    #[error("no dual class exists")]
    NoDualClass,
    #[error("no framed annulus attested; no conclusion is drawn")]
    NoAttestation,
    #[error("constructed certificate failed verification:\n{0}")]
    CertificateRejected(String),
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_parsing() {
        assert_eq!("+1".parse::<Sign>(), Ok(Sign::Positive));
        assert_eq!("1".parse::<Sign>(), Ok(Sign::Positive));
        assert_eq!("-1".parse::<Sign>(), Ok(Sign::Negative));
        assert!("2".parse::<Sign>().is_err());
        assert_eq!(Sign::Negative.to_string(), "-1");
        assert_eq!(Sign::Positive.flip().value(), -1);
    }
}
