//! Exact Seifert-form invariants of knots and stable 4-genus certificates
//! for positive braid knots.

pub mod braid;
pub mod laurent;
pub mod matrix;
pub mod invariants;
pub mod seifert;
pub mod stable;
pub mod census;
pub mod cli;

mod json;
