use thiserror::Error;

use crate::brace::Violation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table has {got} entries, expected {expected}")]
    Dimension { expected: usize, got: usize },

    #[error("entry {value} at position {position} is out of range for order {n}")]
    EntryOutOfRange { position: usize, value: usize, n: usize },

    #[error("order must be positive")]
    EmptyCarrier,

    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),

    #[error("solution map is not a bijection: pair ({0}, {1}) is hit twice")]
    NotBijective(usize, usize),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not a skew brace: {}", .0.first().map(ToString::to_string).unwrap_or_default())]
    NotABrace(Vec<Violation>),

    #[error("subset is not an ideal")]
    NotAnIdeal,

    #[error("solution does not satisfy the braid relation")]
    NotASolution,

    #[error("solution is degenerate")]
    Degenerate,

    #[error("unbound generator `{0}`")]
    UnboundGenerator(String),

    #[error("order {n} is outside the supported range {min}..={max}")]
    UnsupportedOrder { n: usize, min: usize, max: usize },

    #[error("orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("internal construction failed: {0}")]
    Construction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
