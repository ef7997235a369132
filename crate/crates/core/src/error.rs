use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown token `{0}` for this alphabet")]
    UnknownToken(String),
    #[error("empty word")]
    EmptyWord,
    #[error("letter {letter} outside alphabet 1..={r}")]
    LetterOutOfRange { letter: u8, r: u8 },
    #[error("{0:?} is not a permutation of 1..={1}")]
    NotPermutation(Vec<u8>, u8),
    #[error("length vector entries must be positive")]
    NonPositiveLength,
    #[error("point {0} out of range 1..={1}")]
    PointOutOfRange(usize, usize),
    #[error("expected {expected} entries, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("Parikh count for letter {0} is zero")]
    ZeroCount(u8),
    #[error("word is not primitive")]
    NotPrimitive,
    #[error("word is not clustering")]
    NotClustering,
    #[error("interval lengths must be positive")]
    NonPositiveAlpha,
    #[error("interval lengths must sum to 1")]
    AlphaSumNotOne,
    #[error("point outside [0, 1)")]
    PointOutsideUnitInterval,
    #[error("mixed quadratic contexts: sqrt({0}) vs sqrt({1})")]
    MixedRadicand(u64, u64),
    #[error("radicand {0} must be square-free and >= 2")]
    BadRadicand(u64),
    #[error("cannot parse `{0}`: {1}")]
    Parse(String, String),
    #[error("search horizon {horizon} is shorter than 2|w| = {need}")]
    HorizonTooShort { horizon: usize, need: usize },
    #[error("criterion is only defined for r = 3")]
    NotThreeIntervals,
    #[error("need r <= n so that every letter can occur")]
    AlphabetLargerThanLength,
    #[error("slope must lie strictly between 0 and 1")]
    SlopeOutOfRange,
}

pub type Result<T> = std::result::Result<T, Error>;
