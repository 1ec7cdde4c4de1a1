use num_bigint::BigInt;
use thiserror::Error;

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division left a remainder; an identity that should hold did not.
    #[error("exact division failed: remainder {remainder} is nonzero")]
    NonzeroRemainder { remainder: String },

    #[error("closed form for P({n}, {s}) evaluated to non-integer {value}")]
    NonIntegerResult {
        n: usize,
        s: usize,
        value: Box<Rational>,
    },

    #[error("closed form for P({n}, {s}) evaluated to negative {value}")]
    NegativeResult { n: usize, s: usize, value: BigInt },

    #[error("ã_{k}({p}): closed formula gives {formula}, Taylor expansion gives {taylor}")]
    Mismatch {
        k: usize,
        p: usize,
        formula: String,
        taylor: String,
    },

    #[error("Φ_{s} has degree {actual}, expected {expected}")]
    DegreeMismatch {
        s: usize,
        expected: i64,
        actual: i64,
    },

    #[error("{0}")]
    OutOfDomain(String),

    #[error("parse error: {0}")]
    Parse(String),
}
