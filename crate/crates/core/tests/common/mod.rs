#![allow(dead_code)]

use knotform::braid::BraidWord;
use knotform::invariants::{alexander_polynomial, framing, signature};
use knotform::matrix::{is_primitive, IntMatrix};
use knotform::seifert::{seifert_matrix_from_positive_braid, SeifertMatrix};
use knotform::stable::{lemma2_torus, realize_framing, verify_certificate, FramedClass, SliceCertificate};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

/// A random Seifert matrix `Pᵀ(S + E)P` with `S` symmetric, `E` the
/// standard hyperbolic pairing and `P` unimodular. When planted,
/// `S₀₀ = 1`, `S₁₁ = −1`, and `plus = P⁻¹e₀`, `minus = P⁻¹e₁` carry
/// framings `+1` and `−1`.
#[derive(Debug, Clone)]
pub struct Planted {
    pub v: SeifertMatrix,
    pub plus: Vec<BigInt>,
    pub minus: Vec<BigInt>,
}

fn elementary(n: usize, i: usize, j: usize, c: i64) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    m[(i, j)] = BigInt::from(c);
    m
}

fn build(n: usize, sym: Vec<i64>, ops: Vec<(usize, usize, i64)>, plant: bool) -> Planted {
    let mut k = 0;
    let mut s = IntMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let x = BigInt::from(sym[k % sym.len()]);
            k += 1;
            s[(i, j)] = x.clone();
            s[(j, i)] = x;
        }
    }
    if plant {
        s[(0, 0)] = BigInt::one();
        s[(1, 1)] = -BigInt::one();
    }
    for b in 0..n / 2 {
        s[(2 * b, 2 * b + 1)] += 1;
    }
    let mut p = IntMatrix::identity(n);
    let mut p_inv = IntMatrix::identity(n);
    for &(i, j, c) in &ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        p = p.mul(&elementary(n, i, j, c));
        p_inv = elementary(n, i, j, -c).mul(&p_inv);
    }
    let v = SeifertMatrix::new(s.congruent(&p)).expect("congruent to a unimodular pairing");
    let column = |m: &IntMatrix, c: usize| (0..n).map(|r| m[(r, c)].clone()).collect::<Vec<_>>();
    Planted { v, plus: column(&p_inv, 0), minus: column(&p_inv, 1) }
}

fn matrix_strategy(plant: bool) -> impl Strategy<Value = Planted> {
    (1usize..=4)
        .prop_flat_map(|g| {
            let n = 2 * g;
            (
                Just(n),
                prop::collection::vec(-2i64..=2, n * (n + 1) / 2),
                prop::collection::vec((0..n, 0..n, -1i64..=1), 0..6),
            )
        })
        .prop_map(move |(n, sym, ops)| build(n, sym, ops, plant))
}

/// Size `2g ≤ 8`.
pub fn seifert_matrix() -> impl Strategy<Value = SeifertMatrix> {
    matrix_strategy(false).prop_map(|p| p.v)
}

pub fn planted_matrix() -> impl Strategy<Value = Planted> {
    matrix_strategy(true)
}

/// Appends letters joining distinct closure cycles until the closure is
/// a knot on `strands` strands.
pub fn knotted(mut letters: Vec<usize>, strands: usize) -> BraidWord {
    loop {
        let word = BraidWord::new(letters.clone()).unwrap().with_strands(strands).unwrap();
        let perm = word.closure_permutation();
        if perm.cycles == 1 {
            return word;
        }
        let mut cycle_of = vec![usize::MAX; strands];
        for start in 0..strands {
            let mut k = start;
            while cycle_of[k] == usize::MAX {
                cycle_of[k] = start;
                k = perm.image[k] - 1;
            }
        }
        let i = (0..strands - 1).find(|&i| cycle_of[i] != cycle_of[i + 1]).expect("some neighbours differ");
        letters.push(i + 1);
    }
}

/// Positive knot words on 2..=5 strands. At most 9 random letters plus
/// `s − 1` joining letters keeps the brick matrix at size ≤ 8.
pub fn knot_word() -> impl Strategy<Value = BraidWord> {
    (2usize..=5)
        .prop_flat_map(|s| (Just(s), prop::collection::vec(1..s, 1..=9)))
        .prop_map(|(s, letters)| knotted(letters, s))
}

pub fn sig(v: &SeifertMatrix) -> i64 {
    signature(v).expect("knot forms are nondegenerate")
}

pub fn check_signature_additive(v: &SeifertMatrix, w: &SeifertMatrix) -> Result<(), TestCaseError> {
    prop_assert_eq!(sig(&v.block_sum(w)), sig(v) + sig(w));
    Ok(())
}

pub fn check_alexander_multiplicative(v: &SeifertMatrix, w: &SeifertMatrix) -> Result<(), TestCaseError> {
    prop_assert_eq!(alexander_polynomial(&v.block_sum(w)), alexander_polynomial(v) * alexander_polynomial(w));
    Ok(())
}

pub fn check_brick_alexander(word: &BraidWord) -> Result<(), TestCaseError> {
    let v = seifert_matrix_from_positive_braid(word).unwrap();
    let delta = alexander_polynomial(&v);
    prop_assert!(delta.eval_one().is_one(), "Δ(1) = {} for {}", delta.eval_one(), word);
    prop_assert!(delta.is_symmetric(), "Δ = {} not palindromic for {}", delta, word);
    prop_assert_eq!(delta.span(), v.size() as i64);
    Ok(())
}

pub fn check_mirror(v: &SeifertMatrix, x: &[i64]) -> Result<(), TestCaseError> {
    let m = v.mirror();
    prop_assert_eq!(sig(&m), -sig(v));
    let x: Vec<BigInt> = x.iter().take(v.size()).map(|&c| BigInt::from(c)).collect();
    prop_assert_eq!(framing(&m, &x).unwrap(), -framing(v, &x).unwrap());
    prop_assert_eq!(alexander_polynomial(&m), alexander_polynomial(v));
    Ok(())
}

pub fn check_realize_framing(p: &Planted) -> Result<(), TestCaseError> {
    let plus = FramedClass::new(&p.v, p.plus.clone()).unwrap();
    let minus = FramedClass::new(&p.v, p.minus.clone()).unwrap();
    prop_assert_eq!(plus.framing(), &BigInt::one());
    prop_assert_eq!(minus.framing(), &-BigInt::one());
    for base in [&plus, &minus] {
        for m in -10i64..=10 {
            let m = BigInt::from(m);
            let unit = if &m >= base.framing() { &plus } else { &minus };
            let r = realize_framing(&p.v, base, unit, &m).unwrap();
            prop_assert_eq!(r.framing(), &m);
            prop_assert_eq!(framing(&p.v, r.vector()).unwrap(), m.clone());
            prop_assert!(is_primitive(r.vector()));
            prop_assert_eq!(r.power(), 1 + (&m - base.framing()).abs().try_into().unwrap_or(0usize));
        }
    }
    Ok(())
}

pub fn planted_certificate(p: &Planted) -> SliceCertificate {
    let a = FramedClass::new(&p.v, p.plus.clone()).unwrap();
    let helper = FramedClass::new(&p.v, p.minus.clone()).unwrap();
    lemma2_torus(&p.v, &a, &helper).unwrap()
}

pub fn check_certificate_verifies(p: &Planted) -> Result<(), TestCaseError> {
    let cert = planted_certificate(p);
    let report = verify_certificate(&p.v, &cert);
    prop_assert!(report.passed(), "{}", report);
    let lower = BigRational::new(BigInt::from(sig(&p.v).abs()), BigInt::from(2));
    prop_assert!(lower <= cert.genus_bound);
    let parsed = SliceCertificate::from_json(&cert.to_json()).unwrap();
    prop_assert_eq!(&parsed, &cert);
    prop_assert_eq!(verify_certificate(&p.v, &parsed), report);
    Ok(())
}

/// Ways of corrupting a certificate; each must be caught.
#[derive(Debug, Clone, Copy)]
pub enum Tamper {
    BumpA(usize),
    BumpD(usize),
    ScaleD,
    FinalForm(usize),
    Epsilon2,
    BoundNumerator,
    PowerPlusOne,
    SwapClasses,
}

pub fn tamper() -> impl Strategy<Value = Tamper> {
    prop_oneof![
        any::<usize>().prop_map(Tamper::BumpA),
        any::<usize>().prop_map(Tamper::BumpD),
        Just(Tamper::ScaleD),
        (0usize..4).prop_map(Tamper::FinalForm),
        Just(Tamper::Epsilon2),
        Just(Tamper::BoundNumerator),
        Just(Tamper::PowerPlusOne),
        Just(Tamper::SwapClasses),
    ]
}

/// Independent validity check through the explicit power `V^(N)`.
fn valid_by_power(v: &SeifertMatrix, cert: &SliceCertificate) -> bool {
    let Ok(big) = v.power(cert.n) else { return false };
    if cert.a.len() != big.size() || cert.d.len() != big.size() {
        return false;
    }
    let m = big.matrix();
    let gram = [
        [m.bilinear(&cert.a, &cert.a), m.bilinear(&cert.a, &cert.d)],
        [m.bilinear(&cert.d, &cert.a), m.bilinear(&cert.d, &cert.d)],
    ];
    let one = BigInt::one();
    let shape = gram[0][0].is_zero() && gram[1][0].is_zero() && gram[1][1].is_zero() && gram[0][1].abs() == one;
    let g = BigRational::from_integer(BigInt::from(v.genus()));
    shape
        && gram == cert.final_form
        && is_primitive(&cert.a)
        && is_primitive(&cert.d)
        && cert.genus_bound == g - BigRational::new(one, BigInt::from(cert.n))
}

pub fn check_tampered_fails(p: &Planted, t: Tamper) -> Result<(), TestCaseError> {
    let mut cert = planted_certificate(p);
    match t {
        Tamper::BumpA(k) => {
            let k = k % cert.a.len();
            cert.a[k] += 1;
        }
        Tamper::BumpD(k) => {
            let k = k % cert.d.len();
            cert.d[k] -= 1;
        }
        Tamper::ScaleD => cert.d.iter_mut().for_each(|x| *x *= 2),
        Tamper::FinalForm(k) => cert.final_form[k / 2][k % 2] += 1,
        Tamper::Epsilon2 => cert.final_form[0][1] *= 2,
        Tamper::BoundNumerator => cert.genus_bound += BigRational::new(BigInt::one(), BigInt::from(cert.n * 2)),
        Tamper::PowerPlusOne => cert.n += 1,
        Tamper::SwapClasses => std::mem::swap(&mut cert.a, &mut cert.d),
    }
    let report = verify_certificate(&p.v, &cert);
    prop_assert_eq!(report.passed(), valid_by_power(&p.v, &cert), "{:?}: {}", t, report);
    if !matches!(t, Tamper::BumpA(_) | Tamper::BumpD(_)) {
        // a single-entry bump may land on another valid pair; these cannot
        prop_assert!(!report.passed(), "{:?} passed: {}", t, report);
    }
    Ok(())
}
