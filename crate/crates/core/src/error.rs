use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("state {state} is outside 1..={n}")]
    StateOutOfRange { state: usize, n: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree {n} exceeds the configured maximum {max}")]
    DegreeTooLarge { n: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("closure exceeded the element cap of {cap}")]
    ElementCap { cap: usize },
    #[error("operation requires a composition-closed set")]
    NotClosed,
    #[error("state {state} lies on the principal sequence")]
    OnPrincipalSequence { state: usize },
    #[error("alphabets differ: {0:?} vs {1:?}")]
    AlphabetMismatch(Vec<String>, Vec<String>),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("automaton is not minimal")]
    NotMinimal,
    #[error("{what} is defined for n in {min}..={max}, got n = {n}")]
    OutOfRange {
        what: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("no conflicting partner exists for {s}")]
    NoConflict { s: String },
    #[error("table {table} row {row} at n={n}: {detail}")]
    TableMismatch {
        table: u8,
        row: String,
        n: usize,
        detail: String,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
