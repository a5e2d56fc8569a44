use alloc::string::String;

use crate::words::Letter;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("empty factor")]
    EmptyFactor,
    #[error("invalid letter {0:?}: letters are ASCII letters and digits")]
    InvalidLetter(char),
    #[error("position {position} out of range 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("letter {:?} is outside the morphism domain", char::from(*.0))]
    LetterNotInDomain(Letter),
    #[error("image of {:?} is empty; morphisms must be non-erasing", char::from(*.0))]
    ErasingImage(Letter),
    #[error("not prolongable on {:?}", char::from(*.0))]
    NotProlongable(Letter),
    #[error("expansion budget of {0} iterations exhausted")]
    ExpansionBudget(usize),
    #[error("input not rich")]
    NotRich,
    #[error("no two-palindrome factorization")]
    NoTwoPalindromeFactorization,
    #[error("letter {:?} already occurs in the word", char::from(*.0))]
    LetterAlreadyPresent(Letter),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("factor set not stabilized")]
    FactorSetNotStabilized,
    #[error("invalid class P certificate: {0}")]
    InvalidCertificate(String),
    #[error("morphism is not special")]
    NotSpecial,
    #[error("internal consistency error: {0}")]
    Inconsistent(String),
}
