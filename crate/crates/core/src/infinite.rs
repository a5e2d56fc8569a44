//! Finite descriptions of infinite words, expanded to prefixes on demand.

use core::fmt;

use crate::error::{Error, Result};
use crate::morphisms::{Morphism, DEFAULT_EXPANSION_BUDGET};
use crate::words::{Letter, Word};

#[derive(Clone, PartialEq, Eq)]
pub enum InfiniteWordSpec {
    /// `period^ω`
    Periodic { period: Word },
    /// `preperiod · period^ω`
    EventuallyPeriodic { preperiod: Word, period: Word },
    /// `morphism^ω(seed)`
    MorphicFixedPoint { morphism: Morphism, seed: Letter },
}

impl InfiniteWordSpec {
    pub fn periodic(period: impl Into<Word>) -> Result<Self> {
        let period = period.into();
        if period.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self::Periodic { period })
    }

    pub fn eventually_periodic(preperiod: impl Into<Word>, period: impl Into<Word>) -> Result<Self> {
        let period = period.into();
        if period.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self::EventuallyPeriodic { preperiod: preperiod.into(), period })
    }

    pub fn morphic(morphism: Morphism, seed: Letter) -> Result<Self> {
        if !morphism.is_prolongable(seed) {
            return Err(Error::NotProlongable(seed));
        }
        Ok(Self::MorphicFixedPoint { morphism, seed })
    }

    /// The Fibonacci word, fixed point of `a ↦ ab, b ↦ a`.
    pub fn fibonacci() -> Self {
        let m = Morphism::from_pairs(&[(b'a', "ab"), (b'b', "a")]).unwrap();
        Self::MorphicFixedPoint { morphism: m, seed: b'a' }
    }

    /// The Thue–Morse word, fixed point of `a ↦ ab, b ↦ ba`.
    pub fn thue_morse() -> Self {
        let m = Morphism::from_pairs(&[(b'a', "ab"), (b'b', "ba")]).unwrap();
        Self::MorphicFixedPoint { morphism: m, seed: b'a' }
    }

    /// The Tribonacci word, fixed point of `a ↦ ab, b ↦ ac, c ↦ a`.
    pub fn tribonacci() -> Self {
        let m = Morphism::from_pairs(&[(b'a', "ab"), (b'b', "ac"), (b'c', "a")]).unwrap();
        Self::MorphicFixedPoint { morphism: m, seed: b'a' }
    }

    pub fn prefix(&self, n: usize) -> Result<Word> {
        self.prefix_with_budget(n, DEFAULT_EXPANSION_BUDGET)
    }

    /// Like [`prefix`](Self::prefix) with an explicit iteration cap for
    /// morphic fixed points.
    pub fn prefix_with_budget(&self, n: usize, budget: usize) -> Result<Word> {
        match self {
            Self::Periodic { period } => Ok(period.iter().copied().cycle().take(n).collect()),
            Self::EventuallyPeriodic { preperiod, period } => {
                Ok(preperiod.iter().copied().chain(period.iter().copied().cycle()).take(n).collect())
            }
            Self::MorphicFixedPoint { morphism, seed } => morphism.fixed_point_prefix(*seed, n, budget),
        }
    }

    /// Default analysis window: three periods (after the preperiod) for
    /// periodic specs, `None` for morphic ones.
    pub fn canonical_window(&self) -> Option<usize> {
        match self {
            Self::Periodic { period } => Some(3 * period.len()),
            Self::EventuallyPeriodic { preperiod, period } => Some(preperiod.len() + 3 * period.len()),
            Self::MorphicFixedPoint { .. } => None,
        }
    }

    pub fn period(&self) -> Option<&Word> {
        match self {
            Self::Periodic { period } | Self::EventuallyPeriodic { period, .. } => Some(period),
            Self::MorphicFixedPoint { .. } => None,
        }
    }
}

impl fmt::Display for InfiniteWordSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Periodic { period } => write!(f, "periodic:{period}"),
            Self::EventuallyPeriodic { preperiod, period } => {
                write!(f, "evper:{preperiod}|{period}")
            }
            Self::MorphicFixedPoint { morphism, seed } => {
                write!(f, "morphic:{morphism};seed={}", char::from(*seed))
            }
        }
    }
}

impl fmt::Debug for InfiniteWordSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
