//! Brute-force reference implementations.
//!
//! Every function here applies a definition literally, with no shared code
//! path with the fast modules it is used to check. Nothing in the library
//! depends on this module; tests and the CLI's `--oracle` mode do.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Length guard for the quadratic oracles.
pub const QUADRATIC_LIMIT: usize = 2000;
/// Length guard for the cubic oracles.
pub const CUBIC_LIMIT: usize = 600;
/// Guard on `alphabet_size^length` for enumeration.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

fn guard(w: &[Letter], limit: usize) -> Result<()> {
    if w.len() > limit {
        return Err(Error::GuardExceeded(format!("oracle input length {} > {limit}", w.len())));
    }
    Ok(())
}

fn palindrome(u: &[Letter]) -> bool {
    (0..u.len() / 2).all(|i| u[i] == u[u.len() - 1 - i])
}

fn count_occurrences(w: &[Letter], u: &[Letter]) -> usize {
    (0..=w.len().saturating_sub(u.len())).filter(|&i| i + u.len() <= w.len() && &w[i..i + u.len()] == u).count()
}

/// All distinct palindromic factors of `w`, including the empty word.
pub fn naive_palindrome_set(w: &[Letter]) -> Result<BTreeSet<Word>> {
    guard(w, QUADRATIC_LIMIT)?;
    let mut set = BTreeSet::from([Word::new()]);
    for i in 0..w.len() {
        for j in i + 1..=w.len() {
            if palindrome(&w[i..j]) {
                set.insert(Word::from(&w[i..j]));
            }
        }
    }
    Ok(set)
}

pub fn naive_defect(w: &[Letter]) -> Result<usize> {
    Ok(w.len() + 1 - naive_palindrome_set(w)?.len())
}

/// Positions `i` (1-based) whose prefix has no unioccurrent palindromic
/// suffix, checked suffix by suffix.
pub fn naive_defective_positions(w: &[Letter]) -> Result<Vec<usize>> {
    guard(w, CUBIC_LIMIT)?;
    Ok((1..=w.len())
        .filter(|&i| {
            let prefix = &w[..i];
            !(0..i).any(|s| palindrome(&prefix[s..]) && count_occurrences(prefix, &prefix[s..]) == 1)
        })
        .collect())
}

/// Every factor containing exactly two occurrences of `u`, one as a prefix
/// and one as a suffix, in order of start position.
pub fn naive_complete_returns(w: &[Letter], u: &[Letter]) -> Result<Vec<Word>> {
    if u.is_empty() {
        return Err(Error::EmptyFactor);
    }
    guard(w, CUBIC_LIMIT)?;
    let mut out = Vec::new();
    for i in 0..w.len() {
        for j in i + u.len() + 1..=w.len() {
            let r = &w[i..j];
            if r.starts_with(u) && r.ends_with(u) && count_occurrences(r, u) == 2 {
                out.push(Word::from(r));
            }
        }
    }
    Ok(out)
}

/// Compares every pair of equal-length factors on every letter.
pub fn naive_balanced(w: &[Letter]) -> Result<bool> {
    guard(w, CUBIC_LIMIT)?;
    let letters: BTreeSet<Letter> = w.iter().copied().collect();
    for n in 1..=w.len() {
        let factors: Vec<&[Letter]> = w.windows(n).collect();
        for u in &factors {
            for v in &factors {
                for &x in &letters {
                    let cu = u.iter().filter(|&&y| y == x).count();
                    let cv = v.iter().filter(|&&y| y == x).count();
                    if cu.abs_diff(cv) > 1 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// All complete returns to single letters are palindromes.
pub fn naive_weakly_rich(w: &[Letter]) -> Result<bool> {
    let letters: BTreeSet<Letter> = w.iter().copied().collect();
    for a in letters {
        if !naive_complete_returns(w, &[a])?.iter().all(|r| palindrome(r)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Oddities as `(min(r, r̃), incriminated palindrome)` pairs.
pub fn naive_oddities(w: &[Letter]) -> Result<BTreeSet<(Word, Word)>> {
    let mut out = BTreeSet::new();
    for p in naive_palindrome_set(w)? {
        if p.is_empty() {
            continue;
        }
        for r in naive_complete_returns(w, &p)? {
            if !palindrome(&r) {
                let rev: Word = r.iter().rev().copied().collect();
                out.insert((core::cmp::min(r, rev), p.clone()));
            }
        }
    }
    Ok(out)
}

/// All words of a given length over the first `alphabet_size` lowercase
/// letters, in lexicographic order.
pub fn enumerate_words(alphabet_size: usize, length: usize) -> Result<WordEnumerator> {
    if alphabet_size == 0 || alphabet_size > 26 {
        return Err(Error::InvalidParameter(format!("alphabet size {alphabet_size} not in 1..=26")));
    }
    let total = (alphabet_size as u64).checked_pow(length as u32);
    match total {
        Some(t) if t <= ENUMERATION_LIMIT => Ok(WordEnumerator {
            alphabet_size: alphabet_size as u8,
            digits: alloc::vec![0; length],
            done: false,
            canonical: false,
        }),
        _ => Err(Error::GuardExceeded(format!("{alphabet_size}^{length} words exceeds {ENUMERATION_LIMIT}"))),
    }
}

/// Like [`enumerate_words`], keeping only words whose letters first appear
/// in alphabetical order (one representative per letter permutation class).
pub fn enumerate_canonical_words(alphabet_size: usize, length: usize) -> Result<WordEnumerator> {
    let mut e = enumerate_words(alphabet_size, length)?;
    e.canonical = true;
    Ok(e)
}

/// All words of length `0..=max_len`, shortest first.
pub fn enumerate_words_up_to(alphabet_size: usize, max_len: usize) -> Result<impl Iterator<Item = Word>> {
    let parts = (0..=max_len).map(|n| enumerate_words(alphabet_size, n)).collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().flatten())
}

pub fn is_canonical(w: &[Letter]) -> bool {
    let mut next = b'a';
    for &x in w {
        if x == next {
            next += 1;
        } else if x > next {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone)]
pub struct WordEnumerator {
    alphabet_size: u8,
    digits: Vec<u8>,
    done: bool,
    canonical: bool,
}

impl WordEnumerator {
    fn advance(&mut self) {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.alphabet_size {
                return;
            }
            *d = 0;
        }
        self.done = true;
    }
}

impl Iterator for WordEnumerator {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        while !self.done {
            let w: Word = self.digits.iter().map(|d| b'a' + d).collect();
            self.advance();
            if !self.canonical || is_canonical(&w) {
                return Some(w);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(words: &[&str]) -> BTreeSet<Word> {
        words.iter().map(|&w| Word::from(w)).collect()
    }

    #[test]
    fn palindrome_sets() {
        assert_eq!(naive_palindrome_set(b"aab").unwrap(), set(&["", "a", "b", "aa"]));
        assert_eq!(naive_palindrome_set(b"").unwrap(), set(&[""]));
        assert_eq!(naive_palindrome_set(b"aba").unwrap(), set(&["", "a", "b", "aba"]));
        assert!(matches!(naive_palindrome_set(&[b'a'; 2001]), Err(Error::GuardExceeded(_))));
    }

    #[test]
    fn literal_definitions() {
        assert_eq!(naive_defect(b"cacaabca").unwrap(), 2);
        assert!(!naive_balanced(b"aabcb").unwrap());
        assert_eq!(naive_complete_returns(b"abaca", b"a").unwrap(), vec![Word::from("aba"), Word::from("aca")]);
        assert_eq!(naive_complete_returns(b"aa", b"a").unwrap(), vec![Word::from("aa")]);
        assert_eq!(naive_defective_positions(b"abbabaabba").unwrap(), vec![9, 10]);
    }

    #[test]
    fn enumeration() {
        let all: Vec<Word> = enumerate_words(2, 2).unwrap().collect();
        assert_eq!(all, ["aa", "ab", "ba", "bb"].map(Word::from));
        let empty: Vec<Word> = enumerate_words(2, 0).unwrap().collect();
        assert_eq!(empty, vec![Word::new()]);
        let canon: Vec<Word> = enumerate_canonical_words(3, 2).unwrap().collect();
        assert_eq!(canon, ["aa", "ab"].map(Word::from));
        assert!(matches!(enumerate_words(10, 8), Err(Error::GuardExceeded(_))));
        assert_eq!(enumerate_words_up_to(3, 3).unwrap().count(), 1 + 3 + 9 + 27);
    }
}
