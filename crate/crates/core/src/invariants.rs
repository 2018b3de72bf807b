//! Signature, Alexander polynomial, framings and the signature bound for
//! the stable 4-genus, all in exact arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::laurent::LaurentPolynomial;
use crate::matrix::{diagonalize_symmetric, IntMatrix};
use crate::seifert::SeifertMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("symmetrized Seifert form is degenerate")]
    DegenerateForm,
    #[error("vector of length {len} does not fit a power of a {size}x{size} matrix")]
    DimensionMismatch { len: usize, size: usize },
}

/// Signature of a symmetric integer form by congruence over ℚ.
pub fn form_signature(q: &IntMatrix) -> Result<i64, InvariantError> {
    let (pos, neg, zero) = diagonalize_symmetric(q).inertia();
    if zero > 0 {
        return Err(InvariantError::DegenerateForm);
    }
    Ok(pos as i64 - neg as i64)
}

/// Signature of `V + Vᵀ`.
pub fn signature(v: &SeifertMatrix) -> Result<i64, InvariantError> {
    form_signature(&v.symmetrized())
}

/// `det(tV − Vᵀ) · t^{−n/2}` for any square `V`, without sign normalization.
///
/// The determinant has degree at most `n`, so it is sampled at the `n + 1`
/// points `0, 1, −1, 2, −2, …` and recovered by Newton interpolation.
pub fn seifert_determinant(v: &IntMatrix) -> LaurentPolynomial {
    let n = v.size();
    let vt = v.transpose();
    let points: Vec<BigInt> = (0..=n as i64).map(|k| if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) }).map(BigInt::from).collect();
    let values: Vec<BigInt> = points
        .iter()
        .map(|t| IntMatrix::from_fn(n, |i, j| t * &v[(i, j)] - &vt[(i, j)]).det())
        .collect();
    let coeffs = interpolate(&points, &values);
    LaurentPolynomial::new(0, coeffs).shift(-((n / 2) as i64))
}

/// Integer coefficients (ascending) of the interpolating polynomial.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Vec<BigInt> {
    let m = xs.len();
    let x: Vec<BigRational> = xs.iter().cloned().map(BigRational::from_integer).collect();
    let mut dd: Vec<BigRational> = ys.iter().cloned().map(BigRational::from_integer).collect();
    for level in 1..m {
        for i in (level..m).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&x[i] - &x[i - level]);
        }
    }
    // Horner on the Newton form
    let mut poly: Vec<BigRational> = vec![BigRational::zero(); m];
    for i in (0..m).rev() {
        let mut next = vec![BigRational::zero(); m];
        for (k, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k + 1 < m {
                next[k + 1] += c;
            }
            next[k] -= c * &x[i];
        }
        next[0] += &dd[i];
        poly = next;
    }
    poly.into_iter()
        .map(|c| {
            assert!(c.is_integer(), "integer determinant interpolates to an integer polynomial");
            c.to_integer()
        })
        .collect()
}

/// Alexander polynomial `Δ(t)`, symmetric with `Δ(1) = 1`.
pub fn alexander_polynomial(v: &SeifertMatrix) -> LaurentPolynomial {
    let raw = seifert_determinant(v.matrix());
    if raw.eval_one().is_negative() {
        -raw
    } else {
        raw
    }
}

/// `xᵀ V y` where `x`, `y` live in a block-sum power of `V`. Cross-block
/// terms vanish, so the value is the sum of the per-block values.
pub fn form_value(v: &SeifertMatrix, x: &[BigInt], y: &[BigInt]) -> Result<BigInt, InvariantError> {
    let size = v.size();
    let fits = |len: usize| if size == 0 { len == 0 } else { len.is_multiple_of(size) };
    for len in [x.len(), y.len()] {
        if !fits(len) || x.len() != y.len() {
            return Err(InvariantError::DimensionMismatch { len, size });
        }
    }
    if size == 0 {
        return Ok(BigInt::zero());
    }
    Ok(x.chunks(size).zip(y.chunks(size)).map(|(xb, yb)| v.matrix().bilinear(xb, yb)).sum())
}

/// Framing `xᵀ V x`; note `q(x) = xᵀ(V + Vᵀ)x` is twice this.
pub fn framing(v: &SeifertMatrix, x: &[BigInt]) -> Result<BigInt, InvariantError> {
    form_value(v, x, x)
}

/// Genus, signature and the signature lower bound `|σ|/2 ≤ ĝ₄ ≤ g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub genus: usize,
    pub signature: i64,
    pub lower_stable: BigRational,
    /// `|σ| = 2g`, in which case `ĝ₄ = g`.
    pub equality: bool,
}

pub fn bound_report(v: &SeifertMatrix) -> Result<BoundReport, InvariantError> {
    let sigma = signature(v)?;
    let genus = v.genus();
    Ok(BoundReport {
        genus,
        signature: sigma,
        lower_stable: BigRational::new(BigInt::from(sigma.abs()), BigInt::from(2)),
        equality: sigma.unsigned_abs() as usize == 2 * genus,
    })
}

/// `a/b`, or `a` when the denominator is 1.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Determinant of the symmetrized form, `±Δ(−1)`; odd for knots.
pub fn knot_determinant(v: &SeifertMatrix) -> BigInt {
    v.symmetrized().det()
}
