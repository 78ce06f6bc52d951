use thiserror::Error;

/// Errors raised while reading, analysing or complementing automata.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unsupported HOA feature: {0}")]
    Unsupported(String),

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("not a Büchi automaton: {0}")]
    NotBuchi(String),

    #[error("colour {colour} is out of range for block {block} ({count} colours)")]
    ColourOutOfRange { colour: u32, block: usize, count: u32 },

    #[error("{0} colours requested, at most 64 are supported")]
    TooManyColours(u32),

    #[error("automata are over different alphabets")]
    AlphabetMismatch,

    #[error("acceptance condition expands to more than {0} disjuncts")]
    ConditionTooLarge(usize),

    #[error(
        "rank enumeration over a domain of {domain} states exceeds the cap of {limit} rankings"
    )]
    RankCapExceeded { domain: usize, limit: usize },

    #[error("block algorithm precondition violated: {0}")]
    Precondition(String),

    #[error("the period of a lasso word must not be empty")]
    EmptyPeriod,

    #[error("{0} cannot take part in a shared breakpoint")]
    NotBreakpointCapable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
