use thiserror::Error;

use crate::diagram::DiagramViolation;
use crate::word::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word is not in Ẑ: {0}")]
    NotMember(Violation),
    #[error("width arithmetic overflowed")]
    Overflow,
    #[error("cable multiplicity q must be at least 1")]
    ZeroMultiplicity,
    #[error("block {block} out of range for a word with {blocks} blocks")]
    BlockOutOfRange { block: usize, blocks: usize },
    #[error("letter position {position} out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("type II move at position {position} needs the letters {expected}")]
    LetterMismatch { position: usize, expected: &'static str },
    #[error("type I move would reduce the word below \"mM\"")]
    WouldVanish,
    #[error("move leaves Ẑ: {0}")]
    LeavesZhat(Violation),
    #[error("invalid level profile: {0}")]
    InvalidProfile(String),
    #[error("invalid thick/thin tuple: {0}")]
    InvalidThickThin(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(DiagramViolation),
    #[error("diagram has {0} components, a knot is required")]
    NotAKnot(usize),
    #[error("search exceeded the node budget of {0} states")]
    NodeBudget(usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Text input errors. Word errors carry a 1-based column; the line-oriented
/// formats (diagrams, trace records) carry a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("column {column}: {message}")]
    Word { column: usize, message: String },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
}

impl ParseError {
    pub(crate) fn word(column: usize, message: String) -> Self {
        ParseError::Word { column, message }
    }

    pub(crate) fn line(line: usize, message: String) -> Self {
        ParseError::Line { line, message }
    }

    /// Column or line number of the error.
    pub fn position(&self) -> usize {
        match self {
            ParseError::Word { column, .. } => *column,
            ParseError::Line { line, .. } => *line,
        }
    }
}
