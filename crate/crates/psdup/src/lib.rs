//! Algorithms around three word operations: prefix-suffix duplication (`PSD`),
//! its bounded variant (`PSD_k`), and prefix-suffix square completion (`PSSC`).
//!
//! The crate provides text indexes (suffix array, LCP, Lempel-Ziv, dictionary
//! of basic factors), per-position square structure tables, exact brute-force
//! oracles for the operations, fast membership/ancestor/distance algorithms,
//! the regular-language side of bounded duplication, square-free factor
//! analytics, gapped repeat/palindrome tables, and generators for classic
//! morphic sequences.
//!
//! All public index parameters are 1-based and ranges are closed (`w[i..=j]`),
//! matching the usual stringology convention.

pub mod ancestors;
pub mod distance;
pub mod gapped;
pub mod index;
pub mod intervals;
pub mod lang;
pub mod ops;
pub mod seq;
pub mod squarefree;
pub mod squares;
pub mod word;

pub use word::Word;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("position out of range: {0}")]
    OutOfRange(String),
    #[error("{0} budget exceeded")]
    BudgetExceeded(&'static str),
    #[error("no separator symbol available")]
    NoSeparator,
    #[error("window exceeds c*2^k")]
    WindowTooLong,
    #[error("union across non-adjacent blocks")]
    NonAdjacentUnion,
    #[error("not duplication-closed")]
    NotDuplicationClosed,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
