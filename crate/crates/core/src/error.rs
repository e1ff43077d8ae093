use thiserror::Error;

/// Which clause of the area-word characterization failed.
///
/// 1: the word must start with the unique barred zero;
/// 2: letter counts must match the box dimensions;
/// 3: each letter may exceed its predecessor by at most one rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AreaWordCondition {
    LeadingZero,
    LetterCounts,
    RankJump,
}

impl AreaWordCondition {
    pub fn index(self) -> u8 {
        match self {
            AreaWordCondition::LeadingZero => 1,
            AreaWordCondition::LetterCounts => 2,
            AreaWordCondition::RankJump => 3,
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid area word (condition {}): {reason}", condition.index())]
    InvalidAreaWord {
        condition: AreaWordCondition,
        reason: String,
    },
    #[error("invalid polyomino: {0}")]
    InvalidPolyomino(String),
    #[error("invalid Dyck path: {0}")]
    InvalidDyckPath(String),
    #[error("invalid parking function: {0}")]
    InvalidParkingFunction(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
