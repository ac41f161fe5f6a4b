//! One error type for the whole crate.
//!
//! Every variant is a data-dependent failure that a caller (in particular the
//! CLI) may want to surface verbatim; nothing here panics. Precondition
//! violations are reported, not asserted.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two objects that must share a dimension do not.
    DimensionMismatch { expected: usize, found: usize },
    /// An operation that requires a nonempty set or support got an empty one.
    Empty(&'static str),
    /// A coordinate index is outside `0..dim`.
    IndexOutOfRange { index: usize, dim: usize },
    /// A point has a negative coordinate where naturals are required.
    NegativeCoordinate { point: Vec<i64> },
    /// Homogenization slack `r` is smaller than some point's coordinate sum.
    SlackTooSmall { r: i64, needed: i64 },
    /// A support that must be a constant-parity jump system is not.
    SupportPrecondition(&'static str),
    /// A 0/1 or constant-sum precondition failed; the message names it.
    Precondition(String),
    /// The zero polynomial where a nonzero one is required.
    ZeroPolynomial,
    /// Variable indices that must differ coincide.
    SameVariable { index: usize },
    /// A scaling factor that must be nonnegative is negative.
    NegativeScale,
    /// A univariate support has gaps where an integer interval is required.
    SupportGap { missing: i64 },
    /// A coefficient that must be a positive constant is not.
    BadCoefficient(String),
    /// The input function is not a hive (or not a strict hive when required).
    NotHive(String),
    /// The quantitative bound `Q >= 2(n-1)` was not met and `force` is off.
    QuotientBoundTooSmall { q: String, needed: String },
    /// Values that must be integers are not.
    NotInteger { value: String },
    /// A matrix that must be square (or well-shaped) is not.
    BadMatrix(String),
    /// A graph edge is a loop or references a vertex out of range.
    BadGraph(String),
    /// Term-count guard tripped during an expansion.
    TermCapExceeded { cap: usize },
    /// Catch-all for malformed serialized input.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::Empty(what) => write!(f, "{what} must be nonempty"),
            Error::IndexOutOfRange { index, dim } => {
                write!(f, "coordinate index {index} out of range for dimension {dim}")
            }
            Error::NegativeCoordinate { point } => {
                write!(f, "negative coordinate in point {point:?}")
            }
            Error::SlackTooSmall { r, needed } => {
                write!(f, "homogenization slack {r} is smaller than a coordinate sum {needed}")
            }
            Error::SupportPrecondition(msg) => write!(f, "support precondition failed: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
            Error::ZeroPolynomial => write!(f, "the zero polynomial is not allowed here"),
            Error::SameVariable { index } => {
                write!(f, "variable indices must differ (both are {index})")
            }
            Error::NegativeScale => write!(f, "scale factor must be nonnegative"),
            Error::SupportGap { missing } => {
                write!(f, "support must be an integer interval; {missing} is missing")
            }
            Error::BadCoefficient(msg) => write!(f, "bad coefficient: {msg}"),
            Error::NotHive(msg) => write!(f, "not a hive: {msg}"),
            Error::QuotientBoundTooSmall { q, needed } => {
                write!(f, "Q = {q} is below the quantitative bound {needed} (pass force to override)")
            }
            Error::NotInteger { value } => write!(f, "value {value} is not an integer"),
            Error::BadMatrix(msg) => write!(f, "bad matrix: {msg}"),
            Error::BadGraph(msg) => write!(f, "bad graph: {msg}"),
            Error::TermCapExceeded { cap } => {
                write!(f, "expansion exceeded the term-count guard ({cap} terms)")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
