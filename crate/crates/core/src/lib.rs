//! Exact Stirling numbers of both kinds, factorials and odd double
//! factorials, rational polynomials, and verifiers for the identities that
//! express `(2k−1)!!` through them.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod identities;
pub mod par;
pub mod ratpoly;

pub use error::{Error, Result};
pub use exact::{ExactInt, ExactRat};
pub use par::Execution;
pub use ratpoly::RatPoly;
