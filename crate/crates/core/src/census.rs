//! Desk-scale census of positive braid knots: enumerate words up to
//! rotation and distant commutation, compute invariants and check which
//! knots attain `|σ| = 2g`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::path::{Path, PathBuf};

use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::braid::{BraidError, BraidWord};
use crate::invariants::{alexander_polynomial, signature};
use crate::laurent::LaurentPolynomial;
use crate::seifert::{seifert_matrix_from_positive_braid, SeifertError};
use crate::stable::{attested_witness, theorem1_decide, verify_certificate, Dichotomy, Sign};

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("T({0},{1}) needs both parameters at least 2")]
    TorusTooSmall(usize, usize),
    #[error("T({0},{1}) is a link: gcd({0},{1}) != 1")]
    NotCoprime(usize, usize),
    #[error("invalid bounds: need strands >= 2 and crossings >= 1, got ({strands}, {crossings})")]
    InvalidBounds { strands: usize, crossings: usize },
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error("report: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// `(σ_1 σ_2 ⋯ σ_{p−1})^q` on `p` strands.
pub fn torus_braid(p: usize, q: usize) -> Result<BraidWord, CensusError> {
    if p < 2 || q < 2 {
        return Err(CensusError::TorusTooSmall(p, q));
    }
    if p.gcd(&q) != 1 {
        return Err(CensusError::NotCoprime(p, q));
    }
    let letters = (0..q).flat_map(|_| 1..p).collect();
    Ok(BraidWord::new(letters)?)
}

fn orbit_moves(word: &[u8]) -> impl Iterator<Item = Vec<u8>> + '_ {
    let n = word.len();
    let rotation = std::iter::once_with(move || {
        let mut w = word.to_vec();
        w.rotate_left(1);
        w
    });
    let swaps = (0..n.saturating_sub(1)).filter(move |&i| word[i].abs_diff(word[i + 1]) >= 2).map(move |i| {
        let mut w = word.to_vec();
        w.swap(i, i + 1);
        w
    });
    rotation.chain(swaps)
}

/// Whether `word` is the lexicographic minimum of its class under cyclic
/// rotation and commutation of distant letters.
fn is_orbit_minimum(word: &[u8]) -> bool {
    let n = word.len();
    if (1..n).any(|k| word[k..].iter().chain(&word[..k]).lt(word.iter())) {
        return false;
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for next in orbit_moves(&w) {
            if next.as_slice() < word {
                return false;
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    true
}

fn decode(mut index: usize, len: usize, base: usize) -> Vec<u8> {
    let mut out = vec![0u8; len];
    for slot in out.iter_mut().rev() {
        *slot = (index % base) as u8 + 1;
        index /= base;
    }
    out
}

fn full_support(word: &[u8], generators: usize) -> bool {
    let mut present = vec![false; generators];
    word.iter().for_each(|&l| present[l as usize - 1] = true);
    present.into_iter().all(|p| p)
}

/// Positive knot words with `2 ≤ s ≤ s_max`, `s ≤ c ≤ c_max`, every
/// generator present, one representative per rotation/commutation class.
/// Sorted by strands, then length, then letters.
pub fn enumerate_positive_knot_words(s_max: usize, c_max: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    for s in 2..=s_max {
        let base = s - 1;
        // knot closure forces c ≡ s − 1 (mod 2)
        for c in (s..=c_max).filter(|c| (c + s) % 2 == 1) {
            // the class minimum starts with the letter 1
            let total = base.pow((c - 1) as u32);
            let mut words: Vec<Vec<u8>> = (0..total)
                .into_par_iter()
                .filter_map(|idx| {
                    let mut w = Vec::with_capacity(c);
                    w.push(1u8);
                    w.extend(decode(idx, c - 1, base));
                    let keep = full_support(&w, base)
                        && is_orbit_minimum(&w)
                        && BraidWord::new(w.iter().map(|&l| l as usize).collect()).is_ok_and(|b| b.is_knot());
                    keep.then_some(w)
                })
                .collect();
            words.sort();
            out.extend(words.into_iter().map(|w| BraidWord::new(w.into_iter().map(usize::from).collect()).expect("nonempty")));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusLabel {
    pub p: usize,
    pub q: usize,
}

impl TorusLabel {
    /// `T(2, n)`, `T(3, 4)` and `T(3, 5)`.
    pub fn in_allowed_set(&self) -> bool {
        self.p == 2 || (self.p, self.q) == (3, 4) || (self.p, self.q) == (3, 5)
    }
}

impl fmt::Display for TorusLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

pub type References = HashMap<(usize, LaurentPolynomial), TorusLabel>;

/// Torus knots `T(p, q)`, `p < q`, of genus at most `max_genus`, keyed by
/// `(g, Δ)`.
pub fn torus_references(max_genus: usize) -> Result<References, CensusError> {
    let mut refs = HashMap::new();
    for p in 2.. {
        if (p - 1) * p / 2 > max_genus {
            break;
        }
        for q in p + 1.. {
            let genus = (p - 1) * (q - 1) / 2;
            if genus > max_genus {
                break;
            }
            if p.gcd(&q) != 1 {
                continue;
            }
            let v = seifert_matrix_from_positive_braid(&torus_braid(p, q)?)?;
            refs.insert((genus, alexander_polynomial(&v)), TorusLabel { p, q });
        }
    }
    Ok(refs)
}

/// Splits a visibly composite word: if, for some `i`, the letters `i` and
/// `i + 1` form at most two cyclic runs, the word is conjugate (up to
/// distant commutation) to `u·v` with `u` in generators `≤ i` and `v` in
/// generators `> i`, and its closure is the connected sum of theirs.
pub fn split_connected_sum(word: &BraidWord) -> Option<(BraidWord, BraidWord)> {
    let letters = word.letters();
    for i in 1..word.strands().saturating_sub(1) {
        let pattern: Vec<usize> = letters.iter().copied().filter(|&l| l == i || l == i + 1).collect();
        let changes = (0..pattern.len()).filter(|&k| pattern[k] != pattern[(k + 1) % pattern.len()]).count();
        if changes > 2 {
            continue;
        }
        let lower: Vec<usize> = letters.iter().copied().filter(|&l| l <= i).collect();
        let upper: Vec<usize> = letters.iter().filter(|&&l| l > i).map(|&l| l - i).collect();
        let u = BraidWord::new(lower).and_then(|u| u.with_strands(i + 1)).ok()?;
        let v = BraidWord::new(upper).and_then(|v| v.with_strands(word.strands() - i)).ok()?;
        return Some((u, v));
    }
    None
}

/// Torus knot summands of a knot word: visible connected-sum splits first,
/// then `(g, Δ)` lookup for the pieces. Unknotted pieces contribute nothing.
fn identify(word: &BraidWord, refs: &References) -> Result<Option<Vec<TorusLabel>>, CensusError> {
    if let Some((u, v)) = split_connected_sum(word) {
        let (Some(mut a), Some(b)) = (identify(&u, refs)?, identify(&v, refs)?) else { return Ok(None) };
        a.extend(b);
        a.sort();
        return Ok(Some(a));
    }
    let v = seifert_matrix_from_positive_braid(word)?;
    if v.genus() == 0 {
        return Ok(Some(Vec::new()));
    }
    Ok(refs.get(&(v.genus(), alexander_polynomial(&v))).map(|&t| vec![t]))
}

/// `T(2,3)#T(2,3)`; the empty sum is the unknot.
pub fn format_summands(summands: &[TorusLabel]) -> String {
    if summands.is_empty() {
        return "unknot".into();
    }
    summands.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("#")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateOutcome {
    pub path: Option<PathBuf>,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub word: BraidWord,
    pub genus: usize,
    pub signature: i64,
    pub alexander: LaurentPolynomial,
    pub equality: bool,
    /// Torus knot with the same `(g, Δ)`.
    pub torus_match: Option<TorusLabel>,
    /// Whether the word splits visibly as a connected sum.
    pub composite: bool,
    /// Torus knot summands, when every piece is identified.
    pub summands: Option<Vec<TorusLabel>>,
    pub certificate: Option<CertificateOutcome>,
    /// Violated per-record sanity checks.
    pub issues: Vec<String>,
}

impl CensusRecord {
    /// Equality records must be allowed torus knots or connected sums of
    /// them; `σ` and `g` are both additive, so such sums attain `|σ| = 2g`.
    pub fn corollary_holds(&self) -> bool {
        let allowed = |s: &Vec<TorusLabel>| !s.is_empty() && s.iter().all(TorusLabel::in_allowed_set);
        let prime_ok = self.is_connected_sum() || self.torus_match.is_some_and(|t| t.in_allowed_set());
        !self.equality || (prime_ok && self.summands.as_ref().is_some_and(allowed))
    }

    /// At least two nontrivial torus summands.
    pub fn is_connected_sum(&self) -> bool {
        self.summands.as_ref().is_some_and(|s| s.len() >= 2)
    }

    /// `T(p,q)` for prime matches, a `#`-joined sum for split words.
    pub fn label(&self) -> Option<String> {
        if self.is_connected_sum() {
            self.summands.as_deref().map(format_summands)
        } else {
            self.torus_match.map(|t| t.to_string())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub s_max: usize,
    pub c_max: usize,
    pub records: Vec<CensusRecord>,
}

impl CensusReport {
    pub fn equality_records(&self) -> impl Iterator<Item = &CensusRecord> {
        self.records.iter().filter(|r| r.equality)
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| {
            r.corollary_holds() && r.issues.is_empty() && r.certificate.as_ref().is_none_or(|c| c.passed)
        })
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<(), CensusError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "word",
            "s",
            "c",
            "genus",
            "signature",
            "alexander",
            "equality",
            "torus_match",
            "certificate_path",
        ])?;
        for r in &self.records {
            let alexander = serde_json::to_string(&r.alexander).expect("polynomial serializes");
            let path = r.certificate.as_ref().and_then(|c| c.path.as_ref()).map(|p| p.display().to_string());
            w.write_record([
                r.word.to_string(),
                r.word.strands().to_string(),
                r.word.len().to_string(),
                r.genus.to_string(),
                r.signature.to_string(),
                alexander,
                r.equality.to_string(),
                r.label().unwrap_or_default(),
                path.unwrap_or_default(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_csv_file(&self, path: impl AsRef<Path>) -> Result<(), CensusError> {
        self.write_csv(std::fs::File::create(path)?)
    }
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "records: {}", self.records.len())?;
        writeln!(f, "equality: {}", self.equality_records().count())?;
        let mut labels: Vec<String> = Vec::new();
        for r in self.equality_records() {
            let label = r.label().unwrap_or_else(|| "unmatched".to_string());
            if !labels.contains(&label) {
                labels.push(label);
            }
        }
        writeln!(f, "equality knot types: {}", labels.join(" "))?;
        for r in &self.records {
            if !r.corollary_holds() {
                writeln!(f, "violation: {} has |σ| = 2g but is not a sum of allowed torus knots", r.word)?;
            }
            for issue in &r.issues {
                writeln!(f, "issue: {}: {issue}", r.word)?;
            }
            if let Some(c) = r.certificate.as_ref().filter(|c| !c.passed) {
                writeln!(f, "certificate failure: {}: {}", r.word, c.detail)?;
            }
        }
        write!(f, "verdict: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn certificate_file_name(word: &BraidWord) -> String {
    let letters: Vec<String> = word.letters().iter().map(|l| l.to_string()).collect();
    format!("braid-{}.json", letters.join("-"))
}

fn certify(word: &BraidWord, v: &crate::seifert::SeifertMatrix, dir: &Path) -> CertificateOutcome {
    let failed = |detail: String| CertificateOutcome { path: None, passed: false, detail };
    // every brick is a Hopf band of framing −1
    let witness = match attested_witness(v, Sign::Negative) {
        Ok(w) => w,
        Err(e) => return failed(e.to_string()),
    };
    let cert = match theorem1_decide(v, Some(&witness)) {
        Ok(Dichotomy::StrictUpper { certificate, .. }) => certificate,
        Ok(Dichotomy::Equality { .. }) => return failed("decided equality for |σ| < 2g".into()),
        Err(e) => return failed(e.to_string()),
    };
    let path = dir.join(certificate_file_name(word));
    if let Err(e) = cert.write_file(&path) {
        return failed(e.to_string());
    }
    let report = verify_certificate(v, &cert);
    CertificateOutcome { path: Some(path), passed: report.passed(), detail: format!("N = {}", cert.n) }
}

fn record(
    word: BraidWord,
    refs: &References,
    cert_dir: Option<&Path>,
) -> Result<CensusRecord, CensusError> {
    let v = seifert_matrix_from_positive_braid(&word)?;
    let genus = v.genus();
    let alexander = alexander_polynomial(&v);
    let mut issues = Vec::new();
    let signature = signature(&v).unwrap_or_else(|e| {
        issues.push(e.to_string());
        0
    });
    if signature.unsigned_abs() as usize > 2 * genus {
        issues.push(format!("|σ| = {} exceeds 2g = {}", signature.abs(), 2 * genus));
    }
    if alexander.span() != 2 * genus as i64 {
        issues.push(format!("Δ spans {} but 2g = {}", alexander.span(), 2 * genus));
    }
    if !alexander.eval_one().is_one() || !alexander.is_symmetric() {
        issues.push(format!("Δ = {alexander} is not normalized"));
    }
    let equality = signature.unsigned_abs() as usize == 2 * genus;
    let torus_match = refs.get(&(genus, alexander.clone())).copied();
    let composite = split_connected_sum(&word).is_some();
    let summands = identify(&word, refs)?;
    let certificate = cert_dir.filter(|_| !equality).map(|dir| certify(&word, &v, dir));
    Ok(CensusRecord { word, genus, signature, alexander, equality, torus_match, composite, summands, certificate, issues })
}

/// Invariants of every census word and the check that `|σ| = 2g` only
/// occurs for `T(2, n)`, `T(3, 4)` and `T(3, 5)`. With `cert_dir`, each
/// strict record also gets a certificate written there.
pub fn corollary2_scan(s_max: usize, c_max: usize, cert_dir: Option<&Path>) -> Result<CensusReport, CensusError> {
    if s_max < 2 || c_max < 1 {
        return Err(CensusError::InvalidBounds { strands: s_max, crossings: c_max });
    }
    let words = enumerate_positive_knot_words(s_max, c_max);
    let max_genus = words.iter().map(|w| (w.len() + 1 - w.strands()) / 2).max().unwrap_or(0);
    let refs = torus_references(max_genus)?;
    if let Some(dir) = cert_dir {
        std::fs::create_dir_all(dir)?;
    }
    let records = words.into_par_iter().map(|w| record(w, &refs, cert_dir)).collect::<Result<Vec<_>, _>>()?;
    Ok(CensusReport { s_max, c_max, records })
}
