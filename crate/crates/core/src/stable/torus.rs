//! Algebraic model of the genus-one subsurface with Alexander-trivial
//! boundary inside a power of the surface.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::certificate::{verify_certificate, SliceCertificate, Step, Target};
use super::framed::{dual_class, padded, realize_framing, FramedClass};
use super::StableError;
use crate::invariants::form_value;
use crate::seifert::SeifertMatrix;

/// The pair `(a, d)` as vectors over the blocks used so far.
struct Workspace<'v> {
    v: &'v SeifertMatrix,
    a: Vec<BigInt>,
    d: Vec<BigInt>,
    blocks: usize,
    transcript: Vec<Step>,
}

impl Workspace<'_> {
    fn value(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        form_value(self.v, x, y).expect("workspace vectors share the block count")
    }

    fn framing_of(&self, target: Target) -> BigInt {
        match target {
            Target::A => self.value(&self.a, &self.a),
            Target::D => self.value(&self.d, &self.d),
        }
    }

    /// Appends `copies` copies of `unit` to `target` in fresh blocks; the
    /// other class is zero there.
    fn append(&mut self, target: Target, unit: &FramedClass, copies: usize) {
        if copies == 0 {
            return;
        }
        let first = self.blocks + 1;
        for _ in 0..copies {
            let (grow, pad) = match target {
                Target::A => (&mut self.a, &mut self.d),
                Target::D => (&mut self.d, &mut self.a),
            };
            grow.extend_from_slice(unit.vector());
            pad.resize(grow.len(), BigInt::zero());
            self.blocks += unit.power();
        }
        let framing_after = self.framing_of(target);
        self.transcript.push(Step::FramingCorrection {
            target,
            unit_framing: unit.framing().to_i64().expect("unit framing is ±1"),
            copies,
            blocks: [first, self.blocks],
            framing_after,
        });
    }

    /// Moves the framing of `target` to `goal` using the +1 and −1 units.
    fn set_framing(
        &mut self,
        target: Target,
        goal: &BigInt,
        plus: &FramedClass,
        minus: &FramedClass,
    ) -> Result<(), StableError> {
        let gap = goal - self.framing_of(target);
        let copies = gap.abs().to_usize().ok_or(StableError::TooLarge)?;
        let unit = if gap.is_positive() { plus } else { minus };
        self.append(target, unit, copies);
        Ok(())
    }
}

/// Builds a slice certificate from a +1-framed class `a` and a class of
/// negative framing.
///
/// 1. `d` dual to `a`, giving the form `[[1, b], [c, f]]` with `b − c = 1`;
/// 2. framing of `d` moved to −1 in fresh blocks;
/// 3. `d ↦ d − c·a`, giving `[[1, b − c], [0, −bc − 1]]`;
/// 4. both framings moved to 0 in further fresh blocks.
pub fn lemma2_torus(
    v: &SeifertMatrix,
    a: &FramedClass,
    helper_negative: &FramedClass,
) -> Result<SliceCertificate, StableError> {
    if !a.framing().is_one() {
        return Err(StableError::NotUnitFraming(a.framing().clone()));
    }
    if !helper_negative.framing().is_negative() {
        return Err(StableError::HelperNotNegative(helper_negative.framing().clone()));
    }
    // the −1 unit: helper plus |f| − 1 copies of a
    let minus = realize_framing(v, helper_negative, a, &-BigInt::one())?;

    let d = dual_class(v, a)?;
    let mut ws = Workspace { v, a: a.vector().to_vec(), d, blocks: a.power(), transcript: Vec::new() };
    let b = ws.value(&ws.a, &ws.d);
    let c = ws.value(&ws.d, &ws.a);
    debug_assert_eq!(&b - &c, BigInt::one());
    ws.transcript.push(Step::PickedDual { d: ws.d.clone(), b: b.clone(), c: c.clone() });

    ws.set_framing(Target::D, &-BigInt::one(), a, &minus)?;

    let a_padded = padded(v, &ws.a, 0);
    ws.d = ws.d.iter().zip(&a_padded).map(|(x, y)| x - &c * y).collect();
    ws.transcript.push(Step::BaseChange { coefficient: -&c });
    debug_assert_eq!(ws.framing_of(Target::D), -(&b * &c) - 1);

    ws.set_framing(Target::A, &BigInt::zero(), a, &minus)?;
    ws.set_framing(Target::D, &BigInt::zero(), a, &minus)?;

    let n = ws.blocks;
    let final_form = [
        [ws.value(&ws.a, &ws.a), ws.value(&ws.a, &ws.d)],
        [ws.value(&ws.d, &ws.a), ws.value(&ws.d, &ws.d)],
    ];
    let genus_bound = BigRational::from_integer(BigInt::from(v.genus())) - BigRational::new(BigInt::one(), BigInt::from(n));
    let cert = SliceCertificate {
        n,
        a: ws.a,
        d: ws.d,
        final_form,
        genus_bound,
        realizability_attested: true,
        transcript: ws.transcript,
    };
    let report = verify_certificate(v, &cert);
    if !report.passed() {
        return Err(StableError::CertificateRejected(report.to_string()));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::alexander_polynomial;
    use crate::laurent::LaurentPolynomial;
    use crate::matrix::IntMatrix;

    fn m(rows: &[&[i64]]) -> SeifertMatrix {
        SeifertMatrix::from_i64_rows(rows).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hand_executed_example() {
        // framing(a) = 1, framing(d) = −1, b − c = 1 from the start
        let v = m(&[&[1, 1], &[0, -1]]);
        let a = FramedClass::new(&v, ints(&[1, 0])).unwrap();
        let helper = FramedClass::new(&v, ints(&[0, 1])).unwrap();
        let cert = lemma2_torus(&v, &a, &helper).unwrap();
        assert_eq!(cert.n, 3);
        assert_eq!(cert.a, ints(&[1, 0, 0, 1, 0, 0]));
        assert_eq!(cert.d, ints(&[0, 1, 0, 0, 1, 0]));
        assert_eq!(cert.final_form_matrix(), IntMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]));
        assert_eq!(cert.genus_bound, BigRational::new(2.into(), 3.into()));
        assert_eq!(
            cert.transcript,
            vec![
                Step::PickedDual { d: ints(&[0, 1]), b: BigInt::one(), c: BigInt::zero() },
                Step::BaseChange { coefficient: BigInt::zero() },
                Step::FramingCorrection {
                    target: Target::A,
                    unit_framing: -1,
                    copies: 1,
                    blocks: [2, 2],
                    framing_after: BigInt::zero()
                },
                Step::FramingCorrection {
                    target: Target::D,
                    unit_framing: 1,
                    copies: 1,
                    blocks: [3, 3],
                    framing_after: BigInt::zero()
                },
            ]
        );
    }

    #[test]
    fn elementary_base_change() {
        // Pᵀ [[1, b], [c, −1]] P with P = [[1, −c], [0, 1]]
        let conj = |b: i64, c: i64| {
            let form = IntMatrix::from_i64_rows(&[&[1, b], &[c, -1]]);
            form.congruent(&IntMatrix::from_i64_rows(&[&[1, -c], &[0, 1]]))
        };
        assert_eq!(conj(2, 1), IntMatrix::from_i64_rows(&[&[1, 1], &[0, -3]]));
        for b in -3..=3 {
            for c in -3..=3 {
                assert_eq!(conj(b, c), IntMatrix::from_i64_rows(&[&[1, b - c], &[0, -b * c - 1]]));
            }
        }
    }

    #[test]
    fn final_form_is_alexander_trivial() {
        assert_eq!(alexander_polynomial(&m(&[&[0, 1], &[0, 0]])), LaurentPolynomial::one());
        assert_eq!(alexander_polynomial(&m(&[&[0, -1], &[0, 0]])), LaurentPolynomial::one());
    }

    #[test]
    fn general_case_with_base_change() {
        // b = 2, c = 1 and framing(d) = −1
        let v = m(&[&[1, 2], &[1, -1]]);
        let a = FramedClass::new(&v, ints(&[1, 0])).unwrap();
        let helper = FramedClass::new(&v, ints(&[0, 1])).unwrap();
        let cert = lemma2_torus(&v, &a, &helper).unwrap();
        assert!(cert.transcript.contains(&Step::BaseChange { coefficient: BigInt::from(-1) }));
        assert!(verify_certificate(&v, &cert).passed());
    }

    #[test]
    fn rejects_bad_inputs() {
        let v = m(&[&[1, 1], &[0, -1]]);
        let neg = FramedClass::new(&v, ints(&[0, 1])).unwrap();
        let pos = FramedClass::new(&v, ints(&[1, 0])).unwrap();
        assert!(matches!(lemma2_torus(&v, &neg, &neg), Err(StableError::NotUnitFraming(_))));
        assert!(matches!(lemma2_torus(&v, &pos, &pos), Err(StableError::HelperNotNegative(_))));
    }
}
