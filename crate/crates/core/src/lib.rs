//! Palindromic richness for finite words and finitely described infinite words.
//!
//! A word of length `n` has at most `n + 1` distinct palindromic factors
//! (counting the empty word). Words reaching that bound are *rich*. This crate
//! decides richness and its relatives (almost richness, weak richness),
//! computes defects and oddities, works with periodic and morphic infinite
//! words through finite prefixes, and classifies morphisms that interact well
//! with palindromes (episturmian morphisms, class P, special P).
//!
//! The crate is `no_std` and only needs `alloc`. IO, the command line front
//! end and the JSON formats live in the companion `palrich-cli` crate.
//!
//! ```
//! use palrich::richness::{is_rich, richness_report};
//!
//! assert!(!is_rich(b"abbabaabba"));
//! let report = richness_report(b"cacaabca", false);
//! assert_eq!(report.defect, 2);
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod balance;
mod error;
pub mod infinite;
pub mod morphisms;
pub mod oracle;
pub mod palindrome_index;
pub mod periodic;
pub mod richness;
pub mod words;

pub use error::{Error, Result};
pub use infinite::InfiniteWordSpec;
pub use morphisms::Morphism;
pub use palindrome_index::PalindromeIndex;
pub use words::{Letter, Word};
