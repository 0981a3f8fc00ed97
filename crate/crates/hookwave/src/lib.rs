//! Statistics on finite words with distinct positive entries.
//!
//! The central objects are the statistics `des`, `inv` and `lec`, the hook
//! factorization of a word, and two decompositions of a word into a "special
//! reverse wave" prefix or a "special wave" subword plus a residual word.
//! On top of these the crate provides:
//!
//! - the bijections `theta`/`eta` and `psi`/`phi`, which exchange the `des`
//!   and `lec` statistics on words (and restrict to bijections of the
//!   symmetric group),
//! - the bijection `mu`/`nu` between semipermutations (a set of untouched
//!   values plus an ordered word on the rest) and permutations whose special
//!   reverse wave is long,
//! - the subset-chain monomial basis with its grade-preserving correspondence
//!   to permutations whose rightmost hook is long, and the resulting
//!   generalized Eulerian numbers,
//! - exhaustive enumeration and verification machinery that machine-checks
//!   all of the above at small sizes.

pub mod bijections;
pub mod cohomology;
pub mod enumeration;
pub mod waves;
pub mod words;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed textual input; `position` is the 1-based offending token.
    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },
    /// Input outside an operation's domain.
    #[error("{0}")]
    Domain(String),
    /// Parameter outside its admissible range.
    #[error("{0}")]
    Range(String),
    /// Two routes that must agree disagreed; always a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub use bijections::Semipermutation;
pub use cohomology::ChainMonomial;
pub use words::Word;
