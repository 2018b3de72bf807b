//! Framed homology classes in connected-sum powers of a Seifert surface.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Sign, StableError};
use crate::invariants::{form_value, framing};
use crate::matrix::{diagonalize_symmetric, is_primitive, primitive_integer_vector};
use crate::seifert::SeifertMatrix;

/// A primitive class in `H_1(Σ^power)` with its cached framing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedClass {
    power: usize,
    vector: Vec<BigInt>,
    framing: BigInt,
}

impl FramedClass {
    pub fn new(v: &SeifertMatrix, vector: Vec<BigInt>) -> Result<Self, StableError> {
        if v.size() == 0 || vector.is_empty() || !vector.len().is_multiple_of(v.size()) {
            return Err(StableError::DimensionMismatch { len: vector.len(), size: v.size() });
        }
        if !is_primitive(&vector) {
            return Err(StableError::NotPrimitive);
        }
        let framing = framing(v, &vector)?;
        Ok(Self { power: vector.len() / v.size(), vector, framing })
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn vector(&self) -> &[BigInt] {
        &self.vector
    }

    pub fn framing(&self) -> &BigInt {
        &self.framing
    }

    pub fn into_vector(self) -> Vec<BigInt> {
        self.vector
    }
}

fn sign_matches(x: &BigInt, sign: Sign) -> bool {
    match sign {
        Sign::Positive => x.is_positive(),
        Sign::Negative => x.is_negative(),
    }
}

/// A primitive class whose framing has the requested sign, preferring
/// basis vectors and then the smallest framing magnitude.
pub fn find_signed_class(v: &SeifertMatrix, sign: Sign) -> Result<FramedClass, StableError> {
    let n = v.size();
    let unit = |i: usize| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect::<Vec<_>>();
    let from_basis = (0..n)
        .filter(|&i| sign_matches(&v.matrix()[(i, i)], sign))
        .min_by_key(|&i| v.matrix()[(i, i)].abs());
    if let Some(i) = from_basis {
        return FramedClass::new(v, unit(i));
    }
    // q(x) = 2·framing(x), so the sign of q on a diagonalizing vector decides
    let diag = diagonalize_symmetric(&v.symmetrized());
    let mut best: Option<FramedClass> = None;
    for (d, basis) in diag.diagonal.iter().zip(&diag.basis) {
        // denominators are positive, so the numerator carries the sign
        if !sign_matches(d.numer(), sign) {
            continue;
        }
        let class = FramedClass::new(v, primitive_integer_vector(basis))?;
        if best.as_ref().is_none_or(|b| class.framing.abs() < b.framing.abs()) {
            best = Some(class);
        }
    }
    best.ok_or(StableError::DefiniteForm(sign))
}

/// Adds `|m − f|` copies of a ±1-framed `unit`, each in its own fresh
/// blocks, to `base`. Cross-block linking vanishes, so framings add.
pub fn realize_framing(
    v: &SeifertMatrix,
    base: &FramedClass,
    unit: &FramedClass,
    m: &BigInt,
) -> Result<FramedClass, StableError> {
    if !unit.framing.abs().is_one() {
        return Err(StableError::NotUnitFraming(unit.framing.clone()));
    }
    let gap = m - &base.framing;
    if gap.is_zero() {
        return Ok(base.clone());
    }
    if gap.signum() != unit.framing {
        return Err(StableError::UnreachableFraming { from: base.framing.clone(), to: m.clone() });
    }
    let copies = gap.abs().to_usize().ok_or(StableError::TooLarge)?;
    let mut vector = base.vector.clone();
    for _ in 0..copies {
        vector.extend_from_slice(&unit.vector);
    }
    let class = FramedClass::new(v, vector)?;
    debug_assert_eq!(&class.framing, m);
    Ok(class)
}

/// `a` followed by `extra_blocks` zero blocks.
pub(crate) fn padded(v: &SeifertMatrix, a: &[BigInt], extra_blocks: usize) -> Vec<BigInt> {
    let mut out = a.to_vec();
    out.resize(a.len() + extra_blocks * v.size(), BigInt::zero());
    out
}

/// Row vector `aᵀ (V − Vᵀ)` in the power that `a` lives in.
fn intersection_row(v: &SeifertMatrix, a: &[BigInt]) -> Vec<BigInt> {
    let form = v.intersection_form();
    a.chunks(v.size()).flat_map(|block| form.left_apply(block)).collect()
}

/// A class `d` with algebraic intersection `aᵀ(V − Vᵀ)d = 1`.
///
/// Among all solutions, picks one minimizing the largest absolute entry;
/// ties go to the first in lexicographic order under `0 < 1 < −1 < 2 < −2 < …`.
pub fn dual_class(v: &SeifertMatrix, a: &FramedClass) -> Result<Vec<BigInt>, StableError> {
    let row = intersection_row(v, &a.vector);
    let row: Vec<i64> = row.iter().map(|x| x.to_i64().ok_or(StableError::TooLarge)).collect::<Result<_, _>>()?;
    let total: i64 = row.iter().map(|x| x.abs()).sum();
    if total == 0 {
        return Err(StableError::NoDualClass);
    }
    // a solution with entries bounded by max|row| exists whenever gcd(row) = 1
    let max_radius = row.iter().map(|x| x.abs()).max().unwrap_or(1).max(1);
    for radius in 1..=max_radius {
        if let Some(d) = bounded_solution(&row, radius) {
            return Ok(d.into_iter().map(BigInt::from).collect());
        }
    }
    Err(StableError::NoDualClass)
}

/// First solution of `row · d = 1` with `|d_k| ≤ radius`, in the
/// lexicographic order described on [`dual_class`].
fn bounded_solution(row: &[i64], radius: i64) -> Option<Vec<i64>> {
    let n = row.len();
    let bound: i64 = radius * row.iter().map(|x| x.abs()).sum::<i64>();
    let width = (2 * bound + 1) as usize;
    let idx = |s: i64| (s + bound) as usize;
    // reach[k][s]: suffix row[k..] can sum to s
    let mut reach = vec![vec![false; width]; n + 1];
    reach[n][idx(0)] = true;
    for k in (0..n).rev() {
        let (cur, next) = reach.split_at_mut(k + 1);
        let cur = &mut cur[k];
        let next = &next[0];
        for s in -bound..=bound {
            if !next[idx(s)] {
                continue;
            }
            for c in -radius..=radius {
                let t = s + c * row[k];
                if t.abs() <= bound {
                    cur[idx(t)] = true;
                }
            }
        }
    }
    if 1 > bound || !reach[0][idx(1)] {
        return None;
    }
    let order: Vec<i64> = std::iter::once(0).chain((1..=radius).flat_map(|r| [r, -r])).collect();
    let mut target = 1i64;
    let mut d = Vec::with_capacity(n);
    for k in 0..n {
        let c = order
            .iter()
            .copied()
            .find(|&c| {
                let rest = target - c * row[k];
                rest.abs() <= bound && reach[k + 1][idx(rest)]
            })
            .expect("reachability table guarantees a completion");
        target -= c * row[k];
        d.push(c);
    }
    Some(d)
}

/// Searches for a primitive class of framing exactly `sign·1`, trying
/// vectors with entries in `[-r, r]` for `r = 1, 2`. Used to produce a
/// witness for an attested ±1-framed annulus.
pub fn find_unit_class(v: &SeifertMatrix, sign: Sign) -> Option<FramedClass> {
    let target = match sign {
        Sign::Positive => BigInt::one(),
        Sign::Negative => -BigInt::one(),
    };
    let n = v.size();
    if n == 0 {
        return None;
    }
    let unit = |i: usize| (0..n).map(|j| BigInt::from((i == j) as i64)).collect::<Vec<_>>();
    if let Some(i) = (0..n).find(|&i| v.matrix()[(i, i)] == target) {
        return FramedClass::new(v, unit(i)).ok();
    }
    for radius in 1..=2i64 {
        // skip the search space when it gets out of hand
        if (2 * radius + 1).checked_pow(n as u32).is_none_or(|c| c > 2_000_000) {
            break;
        }
        let mut x = vec![-radius; n];
        loop {
            let big: Vec<BigInt> = x.iter().map(|&c| BigInt::from(c)).collect();
            if form_value(v, &big, &big).ok().as_ref() == Some(&target) && is_primitive(&big) {
                return FramedClass::new(v, big).ok();
            }
            let Some(k) = x.iter().rposition(|&c| c < radius) else { break };
            x[k] += 1;
            x[k + 1..].iter_mut().for_each(|c| *c = -radius);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::seifert_matrix_from_positive_braid;

    fn m(rows: &[&[i64]]) -> SeifertMatrix {
        SeifertMatrix::from_i64_rows(rows).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn class(v: &SeifertMatrix, x: &[i64]) -> FramedClass {
        FramedClass::new(v, ints(x)).unwrap()
    }

    #[test]
    fn framed_class_validation() {
        let t = m(&[&[-1, 1], &[0, -1]]);
        assert!(matches!(FramedClass::new(&t, ints(&[2, 0])), Err(StableError::NotPrimitive)));
        assert!(matches!(FramedClass::new(&t, ints(&[1, 0, 0])), Err(StableError::DimensionMismatch { .. })));
        let c = class(&t, &[1, 0, 0, 1]);
        assert_eq!(c.power(), 2);
        assert_eq!(c.framing(), &BigInt::from(-2));
    }

    #[test]
    fn signed_class_examples() {
        // V + Vᵀ = [[2, 1], [1, -2]]
        let v = m(&[&[1, 1], &[0, -1]]);
        let neg = find_signed_class(&v, Sign::Negative).unwrap();
        assert_eq!(neg.vector(), ints(&[0, 1]).as_slice());
        assert_eq!(neg.framing(), &BigInt::from(-1));

        let trefoil = m(&[&[-1, 1], &[0, -1]]);
        assert!(matches!(find_signed_class(&trefoil, Sign::Positive), Err(StableError::DefiniteForm(Sign::Positive))));

        let t37 = seifert_matrix_from_positive_braid(&"1 2 1 2 1 2 1 2 1 2 1 2 1 2".parse().unwrap()).unwrap();
        let pos = find_signed_class(&t37, Sign::Positive).unwrap();
        assert!(pos.framing().is_positive());
        assert!(find_signed_class(&t37, Sign::Negative).unwrap().framing().is_negative());
        assert_eq!(framing(&t37, pos.vector()).unwrap(), *pos.framing());
    }

    #[test]
    fn signed_class_needs_diagonalization() {
        // zero diagonal: the hyperbolic form has classes of both signs
        let h = m(&[&[0, 1], &[0, 0]]);
        let pos = find_signed_class(&h, Sign::Positive).unwrap();
        let neg = find_signed_class(&h, Sign::Negative).unwrap();
        assert!(pos.framing().is_positive());
        assert!(neg.framing().is_negative());
    }

    #[test]
    fn realize_framing_examples() {
        let v = m(&[&[-3, 1], &[0, 1]]);
        let base = class(&v, &[1, 0]);
        let unit = class(&v, &[0, 1]);
        let r = realize_framing(&v, &base, &unit, &BigInt::from(-1)).unwrap();
        assert_eq!(r.power(), 3);
        assert_eq!(r.framing(), &BigInt::from(-1));
        assert_eq!(r.vector(), ints(&[1, 0, 0, 1, 0, 1]).as_slice());

        let v = m(&[&[-1, 1], &[0, 1]]);
        let r = realize_framing(&v, &class(&v, &[1, 0]), &class(&v, &[0, 1]), &BigInt::zero()).unwrap();
        assert_eq!((r.power(), r.framing().clone()), (2, BigInt::zero()));

        let unit = class(&v, &[0, 1]);
        let r = realize_framing(&v, &unit, &unit, &BigInt::from(5)).unwrap();
        assert_eq!((r.power(), r.framing().clone()), (5, BigInt::from(5)));

        assert!(matches!(
            realize_framing(&v, &unit, &unit, &BigInt::from(-2)),
            Err(StableError::UnreachableFraming { .. })
        ));
        let not_unit = class(&m(&[&[-3, 1], &[0, 1]]), &[1, 0]);
        assert!(matches!(realize_framing(&v, &unit, &not_unit, &BigInt::zero()), Err(StableError::NotUnitFraming(_))));
    }

    #[test]
    fn dual_class_examples() {
        let h = m(&[&[0, 1], &[0, 0]]);
        assert_eq!(dual_class(&h, &class(&h, &[1, 0])).unwrap(), ints(&[0, 1]));
        let t = m(&[&[-1, 1], &[0, -1]]);
        assert_eq!(dual_class(&t, &class(&t, &[1, 0])).unwrap(), ints(&[0, 1]));
        let sum = t.block_sum(&h);
        let d = dual_class(&sum, &class(&sum, &[1, 0, 0, 0])).unwrap();
        assert_eq!(d, ints(&[0, 1, 0, 0]));
    }

    #[test]
    fn dual_class_prefers_small_entries() {
        // row (3, 5): solutions with max entry 2 exist, (2, -1) is first
        assert_eq!(bounded_solution(&[3, 5], 1), None);
        assert_eq!(bounded_solution(&[3, 5], 2), Some(vec![2, -1]));
        assert_eq!(bounded_solution(&[0, 1, 1], 1), Some(vec![0, 0, 1]));
        assert_eq!(bounded_solution(&[-1], 1), Some(vec![-1]));
    }

    #[test]
    fn unit_class_search() {
        let t = m(&[&[-1, 1], &[0, -1]]);
        let hopf = find_unit_class(&t, Sign::Negative).unwrap();
        assert_eq!(hopf.framing(), &BigInt::from(-1));
        assert!(find_unit_class(&t, Sign::Positive).is_none());
        let h = m(&[&[0, 1], &[0, 0]]);
        assert_eq!(find_unit_class(&h, Sign::Positive).unwrap().framing(), &BigInt::one());
    }
}
