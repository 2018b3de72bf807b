//! Alexander polynomial of a braid closure from the reduced Burau
//! representation. Used as an oracle independent of any Seifert matrix.

use num_bigint::BigInt;
use num_traits::One;

use super::SeifertError;
use crate::braid::BraidWord;
use crate::laurent::LaurentPolynomial;

type PolyMatrix = Vec<Vec<LaurentPolynomial>>;

fn poly(c: i64, e: i64) -> LaurentPolynomial {
    LaurentPolynomial::monomial(BigInt::from(c), e)
}

fn identity(n: usize) -> PolyMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { LaurentPolynomial::one() } else { LaurentPolynomial::zero() }).collect())
        .collect()
}

/// Reduced Burau matrix of σ_i (1-based) on `strands` strands, size `strands - 1`.
pub fn reduced_burau_generator(i: usize, strands: usize) -> Vec<Vec<LaurentPolynomial>> {
    let n = strands - 1;
    let mut m = identity(n);
    let k = i - 1;
    m[k][k] = poly(-1, 1);
    if k > 0 {
        m[k - 1][k] = poly(1, 1);
    }
    if k + 1 < n {
        m[k + 1][k] = LaurentPolynomial::one();
    }
    m
}

fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(LaurentPolynomial::zero(), |acc, k| &acc + &(&a[i][k] * &b[k][j])))
                .collect()
        })
        .collect()
}

/// Determinant over ℤ[t^±1] by Bareiss elimination; every division is exact.
fn poly_det(mut a: PolyMatrix) -> LaurentPolynomial {
    let n = a.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut negate = false;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return LaurentPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss quotient is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `Δ(t) ≐ det(I − ρ(β)) / (1 + t + … + t^{s−1})`, normalized to be
/// symmetric with `Δ(1) = 1`.
pub fn burau_alexander_oracle(word: &BraidWord) -> Result<LaurentPolynomial, SeifertError> {
    word.validate_knot()?;
    let s = word.strands();
    let mut rho = identity(s - 1);
    for &l in word.letters() {
        rho = mat_mul(&rho, &reduced_burau_generator(l, s));
    }
    let id = identity(s - 1);
    let diff: PolyMatrix =
        rho.iter().zip(&id).map(|(r, e)| r.iter().zip(e).map(|(x, y)| y - x).collect()).collect();
    let det = poly_det(diff);
    let cyclotomic = LaurentPolynomial::new(0, vec![BigInt::one(); s]);
    let quotient = det.div_exact(&cyclotomic).ok_or(SeifertError::OracleInexact)?;
    let normalized = quotient.symmetrized();
    if !normalized.is_symmetric() || !normalized.eval_one().is_one() {
        return Err(SeifertError::OracleInexact);
    }
    Ok(normalized)
}
