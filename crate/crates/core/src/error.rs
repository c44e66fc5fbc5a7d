//! Input and construction errors shared across the crate.
//!
//! Only malformed input is an error. Axiom violations, failed predicates and
//! failed checks are ordinary results carried by report types.

use thiserror::Error;

/// Rejection of user-supplied data: bad sizes, out-of-range indices,
/// malformed files, invalid grades, or carrier mismatches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{what} must be at least 1")]
    ZeroSize { what: &'static str },

    #[error("{what} has {got} entries, expected {want}")]
    TableSize {
        what: &'static str,
        got: usize,
        want: usize,
    },

    #[error("{what} entry {value} out of range (size {size})")]
    IndexRange {
        what: &'static str,
        value: usize,
        size: usize,
    },

    #[error("grade denominator is zero")]
    ZeroDenominator,

    #[error("grade {text} outside [0, 1]")]
    GradeRange { text: String },

    #[error("mu + nu exceeds 1 at element {element}")]
    GradeSum { element: usize },

    #[error("carrier mismatch: got {got}, expected {expected}")]
    CarrierMismatch { got: String, expected: String },

    #[error("empty family")]
    EmptyFamily,

    #[error(
        "quotient product ill-defined on the {side} operator semigroup: \
         equivalent pairs {p:?} and {p_alt:?} give different product classes \
         against {q:?}"
    )]
    QuotientIllDefined {
        side: &'static str,
        p: (usize, usize),
        p_alt: (usize, usize),
        q: (usize, usize),
    },

    #[error("unknown check id {id}")]
    UnknownCheck { id: String },

    #[error("{0}")]
    Other(String),
}

impl InputError {
    /// Shorthand for a parse failure at a 1-based line number.
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        InputError::Parse {
            line,
            msg: msg.into(),
        }
    }
}
