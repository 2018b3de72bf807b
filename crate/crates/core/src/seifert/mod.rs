//! Seifert matrices: brick-basis construction, the Burau oracle, and the
//! surface operations (mirror, boundary connected sum, powers).

mod brick;
mod burau;

use std::path::Path;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidError;
use crate::matrix::IntMatrix;

pub use brick::{brick_basis, seifert_matrix_from_positive_braid, Brick};
pub use burau::{burau_alexander_oracle, reduced_burau_generator};

#[derive(Debug, Error)]
pub enum SeifertError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix has odd size {0}")]
    OddSize(usize),
    #[error("det(V - V^T) = {0}, expected 1")]
    NotUnimodular(BigInt),
    #[error("power must be at least 1, got {0}")]
    InvalidPower(usize),
    #[error("Burau determinant is not divisible as expected")]
    OracleInexact,
    #[error("malformed matrix file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Seifert matrix of a knot: square, even-sized, with `det(V − Vᵀ) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    v: IntMatrix,
}

impl SeifertMatrix {
    pub fn new(v: IntMatrix) -> Result<Self, SeifertError> {
        if !v.size().is_multiple_of(2) {
            return Err(SeifertError::OddSize(v.size()));
        }
        let det = v.sub(&v.transpose()).det();
        if !det.is_one() {
            return Err(SeifertError::NotUnimodular(det));
        }
        Ok(Self { v })
    }

    pub fn from_rows(rows: &[Vec<BigInt>]) -> Result<Self, SeifertError> {
        Self::new(IntMatrix::from_rows(rows).ok_or(SeifertError::NotSquare)?)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, SeifertError> {
        Self::new(IntMatrix::from_i64_rows(rows))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.v
    }

    pub fn size(&self) -> usize {
        self.v.size()
    }

    pub fn genus(&self) -> usize {
        self.v.size() / 2
    }

    /// `V + Vᵀ`
    pub fn symmetrized(&self) -> IntMatrix {
        self.v.add(&self.v.transpose())
    }

    /// `V − Vᵀ`
    pub fn intersection_form(&self) -> IntMatrix {
        self.v.sub(&self.v.transpose())
    }

    /// Seifert matrix of the mirror image, `−Vᵀ`.
    pub fn mirror(&self) -> Self {
        Self { v: self.v.transpose().neg() }
    }

    /// Boundary connected sum.
    pub fn block_sum(&self, other: &Self) -> Self {
        Self { v: self.v.block_sum(&other.v) }
    }

    /// The `n`-fold boundary connected sum.
    pub fn power(&self, n: usize) -> Result<Self, SeifertError> {
        if n < 1 {
            return Err(SeifertError::InvalidPower(n));
        }
        Ok((1..n).fold(self.clone(), |acc, _| acc.block_sum(self)))
    }

    pub fn to_json(&self) -> String {
        let file = MatrixFile { matrix: self.v.rows() };
        serde_json::to_string(&file).expect("matrix serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, SeifertError> {
        let file: MatrixFile = serde_json::from_str(text)?;
        Self::from_rows(&file.matrix)
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self, SeifertError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<(), SeifertError> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    #[serde(with = "crate::json::matrix")]
    matrix: Vec<Vec<BigInt>>,
}
