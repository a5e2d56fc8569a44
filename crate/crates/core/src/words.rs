//! Finite words and the basic operations on them: reversal, palindromes,
//! conjugacy, primitivity and factor sets.
//!
//! Letters are single bytes. Parsed input is restricted to ASCII letters and
//! digits, but the algorithms work for any byte alphabet ordered by value.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::borrow::Borrow;
use core::fmt;
use core::ops::Deref;
use core::str::FromStr;

use crate::error::{Error, Result};

pub type Letter = u8;

/// A finite word. Dereferences to its letters, so every `&[u8]` operation in
/// the crate accepts a `&Word` as well.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub const fn new() -> Self {
        Word(Vec::new())
    }

    /// Parses a word, rejecting anything outside `[A-Za-z0-9]`.
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }

    pub fn as_bytes(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, a: Letter) {
        self.0.push(a);
    }

    pub fn extend_from_slice(&mut self, w: &[Letter]) {
        self.0.extend_from_slice(w);
    }

    pub fn truncate(&mut self, n: usize) {
        self.0.truncate(n);
    }

    /// `self^k`.
    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn concat(parts: &[&[Letter]]) -> Word {
        Word(parts.concat())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.chars().find(|c| !c.is_ascii_alphanumeric()) {
            Some(c) => Err(Error::InvalidLetter(c)),
            None => Ok(Word(s.as_bytes().to_vec())),
        }
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

impl Borrow<[Letter]> for Word {
    fn borrow(&self) -> &[Letter] {
        &self.0
    }
}

impl From<&[Letter]> for Word {
    fn from(w: &[Letter]) -> Self {
        Word(w.to_vec())
    }
}

impl<const N: usize> From<&[Letter; N]> for Word {
    fn from(w: &[Letter; N]) -> Self {
        Word(w.to_vec())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(w: Vec<Letter>) -> Self {
        Word(w)
    }
}

/// Unchecked conversion; use [`Word::parse`] for untrusted input.
impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.as_bytes().to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.0 {
            fmt::Write::write_char(f, char::from(a))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl PartialEq<str> for Word {
    fn eq(&self, other: &str) -> bool {
        self.0 == other.as_bytes()
    }
}

impl PartialEq<&str> for Word {
    fn eq(&self, other: &&str) -> bool {
        self.0 == other.as_bytes()
    }
}

pub fn reverse(w: &[Letter]) -> Word {
    w.iter().rev().copied().collect()
}

pub fn is_palindrome(w: &[Letter]) -> bool {
    w.iter().eq(w.iter().rev())
}

/// The circular shift `T^k(w)`; `k` is taken modulo `|w|`.
pub fn rotate(w: &[Letter], k: usize) -> Word {
    if w.is_empty() {
        return Word::new();
    }
    let k = k % w.len();
    Word::concat(&[&w[k..], &w[..k]])
}

/// The conjugates `T^k(w)` for `1 <= k < |w|`, in shift order. With
/// `include_self`, `w` itself is listed first.
pub fn conjugates(w: &[Letter], include_self: bool) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    let start = if include_self { 0 } else { 1 };
    Ok((start..w.len()).map(|k| rotate(w, k)).collect())
}

/// Returns `(r, k)` with `w = r^k` and `r` primitive.
pub fn primitive_root(w: &[Letter]) -> Result<(Word, usize)> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = w.len();
    let d = (1..=n).filter(|d| n.is_multiple_of(*d)).find(|&d| w.chunks(d).all(|c| c == &w[..d])).unwrap_or(n);
    Ok((Word::from(&w[..d]), n / d))
}

pub fn is_primitive(w: &[Letter]) -> Result<bool> {
    Ok(primitive_root(w)?.1 == 1)
}

/// All distinct factors of length `n`; empty when `n > |w|`.
pub fn factor_set(w: &[Letter], n: usize) -> BTreeSet<Word> {
    if n > w.len() {
        return BTreeSet::new();
    }
    if n == 0 {
        return BTreeSet::from([Word::new()]);
    }
    w.windows(n).map(Word::from).collect()
}

pub fn is_reversal_closed(factors: &BTreeSet<Word>) -> bool {
    factors.iter().all(|u| factors.contains(reverse(u).as_bytes()))
}

/// `|w|_a`.
pub fn letter_count(w: &[Letter], a: Letter) -> usize {
    w.iter().filter(|&&x| x == a).count()
}

/// `Alph(w)`, in letter order.
pub fn alphabet(w: &[Letter]) -> BTreeSet<Letter> {
    w.iter().copied().collect()
}

/// 0-based start positions of every occurrence of the non-empty word `u` in `w`.
pub fn occurrences(w: &[Letter], u: &[Letter]) -> Vec<usize> {
    if u.is_empty() || u.len() > w.len() {
        return Vec::new();
    }
    w.windows(u.len()).enumerate().filter(|(_, x)| *x == u).map(|(i, _)| i).collect()
}

pub fn contains_factor(w: &[Letter], u: &[Letter]) -> bool {
    u.is_empty() || w.windows(u.len()).any(|x| x == u)
}

/// All words of length `n` over `alphabet` (taken in the given order), in
/// lexicographic order of that ordering.
pub fn words_over(alphabet: &[Letter], n: usize) -> impl Iterator<Item = Word> + '_ {
    let k = alphabet.len();
    let total = if k == 0 { usize::from(n == 0) } else { k.checked_pow(n as u32).unwrap_or(usize::MAX) };
    (0..total).map(move |mut idx| {
        let mut w = alloc::vec![0; n];
        for slot in w.iter_mut().rev() {
            *slot = alphabet[idx % k];
            idx /= k;
        }
        Word::from(w)
    })
}
