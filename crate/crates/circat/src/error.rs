//! Error type shared by every module in the crate.

use thiserror::Error;

/// Everything that can go wrong while building or combining exact relations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division of a scalar by zero.
    #[error("division by zero")]
    DivisionByZero,

    /// A rational function was built with a zero denominator.
    #[error("zero denominator")]
    ZeroDenominator,

    /// Text input violated a grammar; `pos` is a byte offset into the input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A vector or matrix had the wrong number of entries.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Two morphisms were combined along boundaries that do not match.
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    /// A generator name (or name/parameter combination) is not in the signature.
    #[error("unknown generator: {0}")]
    UnknownGenerator(String),

    /// An edge label has no assigned semantics.
    #[error("no semantics for label `{0}`")]
    MissingLabel(String),

    /// A netlist file violated the schema; the message names the field path.
    #[error("netlist error: {0}")]
    Netlist(String),

    /// A term does not typecheck over its signature.
    #[error("term type error: {0}")]
    TermType(String),

    /// A relation failed a structural requirement (for example a label
    /// semantics entry that is not Lagrangian).
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
}
