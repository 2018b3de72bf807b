//! Brick basis of the fibre surface of a positive braid closure.
//!
//! Each pair of consecutive occurrences of a generator σ_i bounds a brick;
//! its boundary curve runs through the two corresponding twisted bands.
//! Bricks in the same column overlapping at a shared crossing, and bricks
//! in neighbouring columns whose time intervals interleave, meet once; all
//! other pairs are disjoint.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{SeifertError, SeifertMatrix};
use crate::braid::BraidWord;
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Brick {
    /// Generator index, 1-based.
    pub column: usize,
    /// 1-based word positions of two consecutive occurrences of `column`.
    pub start_time: usize,
    pub end_time: usize,
}

impl Brick {
    fn contains(&self, t: usize) -> bool {
        self.start_time < t && t < self.end_time
    }

    /// Exactly one endpoint of `other` lies strictly inside `self`.
    fn interleaves(&self, other: &Brick) -> bool {
        self.contains(other.start_time) != self.contains(other.end_time)
    }
}

/// Bricks in column-major order, then by start time.
pub fn brick_basis(word: &BraidWord) -> Result<Vec<Brick>, SeifertError> {
    word.validate_knot()?;
    let mut bricks = Vec::with_capacity(word.len() + 1 - word.strands());
    for column in 1..word.strands() {
        let times: Vec<usize> =
            word.letters().iter().enumerate().filter(|&(_, &l)| l == column).map(|(k, _)| k + 1).collect();
        bricks.extend(times.windows(2).map(|w| Brick { column, start_time: w[0], end_time: w[1] }));
    }
    Ok(bricks)
}

/// Which member of an ordered brick pair carries the nonzero linking entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Orientation {
    /// `V(earlier, later)`, ordering the pair by start time.
    EarlierFirst,
    LaterFirst,
}

/// Local linking rules of the brick basis. Interleaved pairs in
/// neighbouring columns are split by whether the lower-column brick
/// starts first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct LinkingConvention {
    pub diagonal: i64,
    pub same_column: (Orientation, i64),
    pub lower_starts_first: (Orientation, i64),
    pub upper_starts_first: (Orientation, i64),
}

impl LinkingConvention {
    /// Same-column neighbours give `V(b_k, b_{k+1}) = 1`. Interleaved
    /// neighbours put their entry in the (lower column, upper column)
    /// slot: `-1` when the lower brick starts first, `+1` otherwise.
    pub(crate) const CALIBRATED: LinkingConvention = LinkingConvention {
        diagonal: -1,
        same_column: (Orientation::EarlierFirst, 1),
        lower_starts_first: (Orientation::EarlierFirst, -1),
        upper_starts_first: (Orientation::LaterFirst, 1),
    };
}

pub(crate) fn linking_matrix(bricks: &[Brick], conv: &LinkingConvention) -> IntMatrix {
    let n = bricks.len();
    let mut v = IntMatrix::zeros(n);
    for i in 0..n {
        v[(i, i)] = BigInt::from(conv.diagonal);
    }
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (&bricks[i], &bricks[j]);
            let (earlier, later) = if x.start_time < y.start_time { (i, j) } else { (j, i) };
            let rule = if x.column == y.column {
                let adjacent = x.end_time == y.start_time || y.end_time == x.start_time;
                adjacent.then_some(conv.same_column)
            } else if x.column.abs_diff(y.column) == 1 && x.interleaves(y) {
                if bricks[earlier].column < bricks[later].column {
                    Some(conv.lower_starts_first)
                } else {
                    Some(conv.upper_starts_first)
                }
            } else {
                None
            };
            let Some((orientation, sign)) = rule else { continue };
            let (r, c) = match orientation {
                Orientation::EarlierFirst => (earlier, later),
                Orientation::LaterFirst => (later, earlier),
            };
            debug_assert!(v[(r, c)].is_zero());
            v[(r, c)] = BigInt::from(sign);
        }
    }
    v
}

/// Seifert matrix of the canonical fibre surface in the brick basis.
pub fn seifert_matrix_from_positive_braid(word: &BraidWord) -> Result<SeifertMatrix, SeifertError> {
    let bricks = brick_basis(word)?;
    SeifertMatrix::new(linking_matrix(&bricks, &LinkingConvention::CALIBRATED))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidError;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn b(column: usize, start_time: usize, end_time: usize) -> Brick {
        Brick { column, start_time, end_time }
    }

    #[test]
    fn basis_examples() {
        assert_eq!(brick_basis(&w("1 1 1")).unwrap(), vec![b(1, 1, 2), b(1, 2, 3)]);
        let t34 = brick_basis(&w("1 2 1 2 1 2 1 2")).unwrap();
        assert_eq!(t34.len(), 6);
        assert_eq!(t34.iter().filter(|x| x.column == 1).count(), 3);
        assert_eq!(t34[0], b(1, 1, 3));
        assert_eq!(t34[3], b(2, 2, 4));
        assert!(brick_basis(&w("1 2")).unwrap().is_empty());
        assert!(matches!(brick_basis(&w("1 1")), Err(SeifertError::Braid(BraidError::NotAKnot(2)))));
    }

    #[test]
    fn interleaving() {
        assert!(b(1, 1, 3).interleaves(&b(2, 2, 4)));
        assert!(b(2, 2, 4).interleaves(&b(1, 1, 3)));
        assert!(!b(1, 1, 5).interleaves(&b(2, 2, 4)));
        assert!(!b(2, 2, 4).interleaves(&b(1, 1, 5)));
        assert!(!b(1, 1, 2).interleaves(&b(2, 3, 4)));
    }

    #[test]
    fn matrix_examples() {
        let v = seifert_matrix_from_positive_braid(&w("1 1 1")).unwrap();
        assert_eq!(v.matrix(), &IntMatrix::from_i64_rows(&[&[-1, 1], &[0, -1]]));
        assert_eq!(seifert_matrix_from_positive_braid(&w("1 2")).unwrap().size(), 0);
        let t25 = seifert_matrix_from_positive_braid(&w("1 1 1 1 1")).unwrap();
        assert_eq!(
            t25.matrix(),
            &IntMatrix::from_i64_rows(&[&[-1, 1, 0, 0], &[0, -1, 1, 0], &[0, 0, -1, 1], &[0, 0, 0, -1]])
        );
        // bricks (1,1,3) (1,3,5) (1,5,6) (2,2,4): both interleaving cases occur
        let v = seifert_matrix_from_positive_braid(&w("1 2 1 2 1 1")).unwrap();
        assert_eq!(
            v.matrix(),
            &IntMatrix::from_i64_rows(&[&[-1, 1, 0, -1], &[0, -1, 1, 1], &[0, 0, -1, 0], &[0, 0, 0, -1]])
        );
    }

    fn knot_words(max_strands: usize, max_len: usize) -> Vec<BraidWord> {
        let mut out = Vec::new();
        for s in 2..=max_strands {
            for len in 1..=max_len {
                let mut letters = vec![1; len];
                loop {
                    let word = BraidWord::new(letters.clone()).unwrap();
                    if word.strands() == s && word.validate_knot().is_ok() {
                        out.push(word);
                    }
                    // odometer over {1..s-1}^len
                    let Some(k) = letters.iter().rposition(|&l| l < s - 1) else { break };
                    letters[k] += 1;
                    letters[k + 1..].iter_mut().for_each(|l| *l = 1);
                }
            }
        }
        out
    }

    /// Calibration suite: among all local sign/orientation choices, the
    /// calibrated one gives the trefoil signature −2 and agrees with the
    /// Burau oracle on every knot word up to 4 strands and 8 crossings.
    #[test]
    fn calibration_against_oracle() {
        use crate::invariants::{form_signature, seifert_determinant};
        use crate::seifert::burau_alexander_oracle;
        use num_traits::Signed;

        let words = knot_words(4, 8);
        let oracle: Vec<_> = words.iter().map(|w| burau_alexander_oracle(w).unwrap()).collect();
        let agrees = |conv: &LinkingConvention| {
            let trefoil = linking_matrix(&brick_basis(&w("1 1 1")).unwrap(), conv);
            form_signature(&trefoil.add(&trefoil.transpose())) == Ok(-2)
                && words.iter().zip(&oracle).all(|(word, expected)| {
                    let v = linking_matrix(&brick_basis(word).unwrap(), conv);
                    let d = seifert_determinant(&v);
                    let d = if d.eval_one().is_negative() { -d } else { d };
                    v.sub(&v.transpose()).det() == BigInt::from(1) && &d == expected
                })
        };
        assert!(agrees(&LinkingConvention::CALIBRATED));

        let choices = [Orientation::EarlierFirst, Orientation::LaterFirst]
            .into_iter()
            .flat_map(|o| [(o, 1), (o, -1)])
            .collect::<Vec<_>>();
        // a uniform interleaving sign never works
        for &same_column in &choices {
            for &inter in &choices {
                let conv = LinkingConvention { diagonal: -1, same_column, lower_starts_first: inter, upper_starts_first: inter };
                assert!(!agrees(&conv), "{conv:?}");
            }
        }
    }
}
