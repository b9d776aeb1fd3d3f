use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {found:?} at position {position} (expected one of a, b, A, B)")]
    InvalidCharacter { position: usize, found: char },

    #[error("letter sequence is not cyclically reduced")]
    NotCyclicallyReduced,

    #[error("empty pattern")]
    EmptyPattern,

    #[error("pattern of length {pattern} is longer than the word (length {word})")]
    PatternTooLong { pattern: usize, word: usize },

    #[error("operation is undefined on the empty word")]
    EmptyWord,

    #[error("invalid Whitehead automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("cannot parse automorphism token {0:?}")]
    AutomorphismSyntax(String),

    #[error("no letter occurs in both words, so no representatives share an initial letter")]
    NoCommonLetter,

    #[error("equivalence class exceeds the member limit of {limit}")]
    ClassTooLarge { limit: usize },

    #[error("requested length {requested} exceeds the enumeration guard of {limit}")]
    LengthGuard { requested: usize, limit: usize },

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

pub type Result<T> = std::result::Result<T, Error>;
