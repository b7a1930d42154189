use thiserror::Error;

use crate::orthogonality::AmbiguityWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,

    #[error("alphabet contains duplicate symbol '{0}'")]
    DuplicateSymbol(String),

    #[error("symbol '{0}' is not part of the alphabet")]
    UnknownSymbol(String),

    #[error("symbol index {index} is outside the alphabet of size {size}")]
    SymbolOutOfRange { index: usize, size: usize },

    #[error("state {state} is outside the valid range 0..{count}")]
    StateOutOfRange { state: usize, count: usize },

    #[error("an automaton needs at least one state")]
    NoStates,

    #[error("transition table has {actual} entries, expected {expected}")]
    TableSize { expected: usize, actual: usize },

    #[error("alphabets differ: [{left}] vs [{right}]")]
    AlphabetMismatch { left: String, right: String },

    #[error("automaton has {count} states, at most {max} are supported here")]
    TooManyStates { count: usize, max: usize },

    #[error("{what} must be at least {min}, got {value}")]
    Parameter {
        what: &'static str,
        min: u64,
        value: u64,
    },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("{what} overflows 64-bit arithmetic")]
    Overflow { what: &'static str },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: state {state} is outside the valid range 0..{count}")]
    Range {
        line: usize,
        state: usize,
        count: usize,
    },

    #[error("missing transitions for {}", format_missing(.0))]
    Incomplete(Vec<(usize, String)>),

    #[error("accepting state {state} lies on a cycle (returns to itself on '{word}')")]
    AcceptingCycle { state: usize, word: String },

    #[error("orthogonal catenation is undefined: {0}")]
    Undefined(Box<AmbiguityWitness>),
}

fn format_missing(pairs: &[(usize, String)]) -> String {
    pairs
        .iter()
        .map(|(state, symbol)| format!("({state}, {symbol})"))
        .collect::<Vec<_>>()
        .join(", ")
}
