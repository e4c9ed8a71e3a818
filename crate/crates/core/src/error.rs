use thiserror::Error;

use crate::laurent::SignedPoly;

/// Which of the three unmixedness intersections is non-empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnmixedClause {
    /// `ascents ∩ descents ≠ ∅`
    Overlap,
    /// `(ascents + 1) ∩ descents ≠ ∅`
    AscentThenDescent,
    /// `ascents ∩ (descents + 1) ≠ ∅`
    DescentThenAscent,
}

impl std::fmt::Display for UnmixedClause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UnmixedClause::Overlap => f.write_str("ascents ∩ descents is non-empty"),
            UnmixedClause::AscentThenDescent => f.write_str("(ascents+1) ∩ descents is non-empty"),
            UnmixedClause::DescentThenAscent => f.write_str("ascents ∩ (descents+1) is non-empty"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("n = {n} is outside the supported range 1..={max}")]
    UnsupportedSize { n: usize, max: usize },

    #[error("position {position} is outside [1, {}]", .n.saturating_sub(1))]
    PositionOutOfRange { position: usize, n: usize },

    #[error("position {0} is both a forced ascent and a forced descent")]
    Overlapping(usize),

    #[error("class is not unmixed: {0}")]
    NotUnmixed(UnmixedClause),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("division is not exact, remainder {remainder}")]
    InexactDivision { remainder: SignedPoly },

    #[error("polynomial has a negative coefficient")]
    NegativeCoefficient,

    #[error("odd chessboard elements do not exist for odd n = {0}")]
    EmptyPopulation(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("malformed polynomial: {0}")]
    MalformedPoly(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
