//! Dense square integer matrices and the exact linear algebra used by the
//! invariants: fraction-free determinants and rational congruence
//! diagonalization of symmetric forms.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![BigInt::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// `None` if the rows do not form a square array.
    pub fn from_rows(rows: &[Vec<BigInt>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Self { n, data: rows.iter().flatten().cloned().collect() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::from_rows(&rows).expect("square array")
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn neg(&self) -> Self {
        Self { n: self.n, data: self.data.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| (0..self.n).map(|k| &self[(i, k)] * &other[(k, j)]).sum())
    }

    /// `Pᵀ · self · P`
    pub fn congruent(&self, p: &Self) -> Self {
        p.transpose().mul(self).mul(p)
    }

    /// Block diagonal `[[self, 0], [0, other]]`.
    pub fn block_sum(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        Self::from_fn(n, |i, j| match (i < self.n, j < self.n) {
            (true, true) => self[(i, j)].clone(),
            (false, false) => other[(i - self.n, j - self.n)].clone(),
            _ => BigInt::zero(),
        })
    }

    /// `xᵀ · self · y`
    pub fn bilinear(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        assert_eq!(x.len(), self.n);
        assert_eq!(y.len(), self.n);
        let mut acc = BigInt::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    acc += xi * &self[(i, j)] * yj;
                }
            }
        }
        acc
    }

    /// Row vector `xᵀ · self`.
    pub fn left_apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.n);
        (0..self.n).map(|j| x.iter().enumerate().map(|(i, xi)| xi * &self[(i, j)]).sum()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        bareiss_det(self.rows())
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows().iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Result of diagonalizing a symmetric form by congruence over ℚ.
///
/// `basis[k]` are rational vectors with `form(basis[i], basis[j]) = 0` for
/// `i ≠ j` and `form(basis[k], basis[k]) = diagonal[k]`.
#[derive(Debug, Clone)]
pub struct Diagonalization {
    pub diagonal: Vec<BigRational>,
    pub basis: Vec<Vec<BigRational>>,
}

impl Diagonalization {
    /// `(positive, negative, zero)` counts.
    pub fn inertia(&self) -> (usize, usize, usize) {
        let pos = self.diagonal.iter().filter(|d| d.is_positive()).count();
        let neg = self.diagonal.iter().filter(|d| d.is_negative()).count();
        (pos, neg, self.diagonal.len() - pos - neg)
    }
}

/// Symmetric congruence reduction. At each step a nonzero diagonal pivot is
/// cleared from its row and column; when every remaining diagonal entry
/// vanishes but an off-diagonal `a_ij` does not, `e_i` is replaced by
/// `e_i + e_j`, which has value `2·a_ij ≠ 0` and becomes the next pivot.
pub fn diagonalize_symmetric(q: &IntMatrix) -> Diagonalization {
    assert!(q.is_symmetric(), "congruence diagonalization needs a symmetric form");
    let n = q.size();
    let mut a: Vec<Vec<BigRational>> =
        q.rows().into_iter().map(|r| r.into_iter().map(BigRational::from_integer).collect()).collect();
    // columns of the change of basis, stored as rows for convenience
    let mut p: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut diagonal = Vec::with_capacity(n);
    let mut basis = Vec::with_capacity(n);

    while !active.is_empty() {
        let pivot = match active.iter().position(|&i| !a[i][i].is_zero()) {
            Some(k) => active[k],
            None => {
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero());
                match pair {
                    Some((i, j)) => {
                        add_basis_vector(&mut a, &mut p, i, j, &BigRational::one());
                        i
                    }
                    None => {
                        // remaining block is identically zero
                        for &i in &active {
                            diagonal.push(BigRational::zero());
                            basis.push(p[i].clone());
                        }
                        break;
                    }
                }
            }
        };
        active.retain(|&i| i != pivot);
        let d = a[pivot][pivot].clone();
        for &j in &active {
            if a[pivot][j].is_zero() {
                continue;
            }
            let factor = -(&a[pivot][j] / &d);
            add_basis_vector(&mut a, &mut p, j, pivot, &factor);
        }
        diagonal.push(d);
        basis.push(p[pivot].clone());
    }
    Diagonalization { diagonal, basis }
}

/// Replaces basis vector `i` by `e_i + factor·e_j`, updating the Gram matrix.
fn add_basis_vector(a: &mut [Vec<BigRational>], p: &mut [Vec<BigRational>], i: usize, j: usize, factor: &BigRational) {
    let n = a.len();
    for k in 0..n {
        let v = &a[j][k] * factor;
        a[i][k] += v;
    }
    for k in 0..n {
        let v = &a[k][j] * factor;
        a[k][i] += v;
    }
    for k in 0..n {
        let v = &p[j][k] * factor;
        p[i][k] += v;
    }
}

/// Scales a nonzero rational vector to a primitive integer vector with the
/// same direction.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = content(&ints);
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// gcd of the entries (0 for the zero vector).
pub fn content(v: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

pub fn is_primitive(v: &[BigInt]) -> bool {
    content(v).is_one()
}
