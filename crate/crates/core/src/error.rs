use thiserror::Error;

/// Errors raised by graph operations, decision procedures and the text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid token {0:?}: {1}")]
    InvalidToken(String, &'static str),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("graph is not deterministic")]
    NotDeterministic,
    #[error("graph is not irreducible")]
    NotIrreducible,
    #[error("graph is not essential")]
    NotEssential,
    #[error("graph is not synchronizing")]
    NotSynchronizing,
    #[error("graph is not follower-separated")]
    NotFollowerSeparated,
    #[error("presented shift is not of finite type")]
    NotSft,
    #[error("pair-synchronizing words need two distinct vertices")]
    SameVertex,
    #[error("graph alphabet is not contained in the given alphabet")]
    AlphabetMismatch,
    #[error("alphabet uses reserved label {0}")]
    AlphabetClash(String),
    #[error("every input automaton has an empty language")]
    AllLanguagesEmpty,
    #[error("{what} exceeded the cap of {limit}")]
    CapExceeded { what: &'static str, limit: usize },
    #[error("relations belong to different graphs")]
    HostMismatch,
    #[error("relation is not an element of the action monoid")]
    NotAnElement,
    #[error("parameter too small: {0}")]
    TooSmall(String),
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
