//! Positive braid words and the combinatorics of their closures.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("empty braid word")]
    EmptyWord,
    #[error("letter `{0}` is not a positive integer")]
    NonPositiveLetter(String),
    #[error("strand override {requested} is below the inferred strand count {inferred}")]
    StrandsTooFew { requested: usize, inferred: usize },
    #[error("closure of the braid is a {0}-component link, not a knot")]
    NotAKnot(usize),
    #[error("generator {0} does not occur; the closure is split")]
    MissingGenerator(usize),
}

/// A word in the positive Artin generators σ_1, …, σ_{s-1}.
///
/// Letters are stored 1-based, exactly as written in the text format.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    /// Builds a word with the strand count inferred as `max letter + 1`.
    pub fn new(letters: Vec<usize>) -> Result<Self, BraidError> {
        if letters.is_empty() {
            return Err(BraidError::EmptyWord);
        }
        if letters.contains(&0) {
            return Err(BraidError::NonPositiveLetter("0".into()));
        }
        let strands = letters.iter().copied().max().unwrap_or(0) + 1;
        Ok(Self { strands, letters })
    }

    /// Pads the word with extra strands. Only increasing the count is allowed.
    pub fn with_strands(mut self, strands: usize) -> Result<Self, BraidError> {
        if strands < self.strands {
            return Err(BraidError::StrandsTooFew { requested: strands, inferred: self.strands });
        }
        self.strands = strands;
        Ok(self)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Number of crossings.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Occurrence count of each generator, indexed by `i - 1`.
    pub fn generator_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.strands - 1];
        for &l in &self.letters {
            counts[l - 1] += 1;
        }
        counts
    }

    /// Permutation of the closure and its cycle count.
    pub fn closure_permutation(&self) -> ClosurePermutation {
        // image[k] is where the strand starting at position k ends up
        let mut position: Vec<usize> = (0..self.strands).collect();
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let (p, q) = (l - 1, l);
            at.swap(p, q);
            position[at[p]] = p;
            position[at[q]] = q;
        }
        let image: Vec<usize> = position.iter().map(|&p| p + 1).collect();
        let cycles = count_cycles(&position);
        ClosurePermutation { image, cycles }
    }

    pub fn is_knot(&self) -> bool {
        self.closure_permutation().cycles == 1
    }

    /// Checks that the closure is a knot and that no generator is missing.
    pub fn validate_knot(&self) -> Result<(), BraidError> {
        if let Some(i) = self.generator_counts().iter().position(|&c| c == 0) {
            return Err(BraidError::MissingGenerator(i + 1));
        }
        let cycles = self.closure_permutation().cycles;
        if cycles != 1 {
            return Err(BraidError::NotAKnot(cycles));
        }
        Ok(())
    }

    /// Genus of the canonical fibre surface, `(c - s + 1) / 2`.
    pub fn positive_braid_genus(&self) -> Result<usize, BraidError> {
        self.validate_knot()?;
        let twice = self.len() + 1 - self.strands;
        debug_assert!(twice.is_multiple_of(2));
        Ok(twice / 2)
    }

    /// Cyclic rotation by `k` letters (Markov conjugation). Never applied implicitly.
    pub fn rotated(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        Self { strands: self.strands, letters }
    }
}

fn count_cycles(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
        }
    }
    cycles
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosurePermutation {
    /// `image[k - 1]` is the end position (1-based) of the strand starting at `k`.
    pub image: Vec<usize>,
    pub cycles: usize,
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        parse_braid_word(text)
    }
}

pub fn parse_braid_word(text: &str) -> Result<BraidWord, BraidError> {
    let letters = text
        .split_whitespace()
        .map(|tok| match tok.parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(BraidError::NonPositiveLetter(tok.to_string())),
        })
        .collect::<Result<Vec<_>, _>>()?;
    BraidWord::new(letters)
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
