use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::morphisms::Morphism;
use crate::richness::is_rich;
use crate::words::{is_palindrome, is_primitive, words_over, Letter, Word};

/// Cap on the number of words a sweep may visit.
pub const SWEEP_LIMIT: usize = 10_000_000;
/// Largest `|α|`, `|β|`, `|γ|` tried when looking for a free-group relation.
pub const RELATION_EXPONENT_BOUND: i32 = 4;

fn sweep_words(alphabet: &[Letter], max_len: usize) -> Result<impl Iterator<Item = Word> + '_> {
    let mut total: usize = 0;
    for n in 0..=max_len {
        let count = alphabet.len().checked_pow(n as u32).unwrap_or(usize::MAX);
        total = total.saturating_add(count);
    }
    if total > SWEEP_LIMIT {
        return Err(Error::GuardExceeded(format!("{total} words up to length {max_len}")));
    }
    Ok((0..=max_len).flat_map(move |n| words_over(alphabet, n)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreservationSweep {
    pub max_len: usize,
    pub rich_words_checked: usize,
    /// Rich words with a non-rich image, shortest first, then lexicographic.
    pub counterexamples: Vec<Word>,
}

impl PreservationSweep {
    pub fn preserves(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Applies `m` to every rich word over `alphabet` of length up to `max_len`
/// and collects those whose image is not rich.
pub fn preserves_richness_empirical(m: &Morphism, max_len: usize, alphabet: &[Letter]) -> Result<PreservationSweep> {
    let letters: Vec<Letter> = alphabet.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if let Some(&x) = letters.iter().find(|&&x| m.image(x).is_err()) {
        return Err(Error::LetterNotInDomain(x));
    }
    let mut sweep = PreservationSweep { max_len, rich_words_checked: 0, counterexamples: Vec::new() };
    for w in sweep_words(&letters, max_len)? {
        if !is_rich(&w) {
            continue;
        }
        sweep.rich_words_checked += 1;
        if !is_rich(&m.apply(&w)?) {
            sweep.counterexamples.push(w);
        }
    }
    Ok(sweep)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PreservationClass {
    None,
    Preserves,
    StrictlyPreserves,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromePreservation {
    pub class: PreservationClass,
    pub max_len: usize,
    /// Non-palindromes with a palindromic image, shortest first.
    pub witnesses: Vec<Word>,
}

/// Whether `m` maps palindromes to palindromes, and whether, on every word
/// up to `max_len`, only palindromes do.
pub fn palindrome_preservation_class(m: &Morphism, max_len: usize) -> Result<PalindromePreservation> {
    if !m.images().values().all(|v| is_palindrome(v)) {
        return Ok(PalindromePreservation { class: PreservationClass::None, max_len, witnesses: Vec::new() });
    }
    let letters: Vec<Letter> = m.domain().collect();
    let mut witnesses = Vec::new();
    for w in sweep_words(&letters, max_len)? {
        if !is_palindrome(&w) && is_palindrome(&m.apply(&w)?) {
            witnesses.push(w);
        }
    }
    let class = if witnesses.is_empty() { PreservationClass::StrictlyPreserves } else { PreservationClass::Preserves };
    Ok(PalindromePreservation { class, max_len, witnesses })
}

/// A relation `φ(a)^α φ(b)^β φ(c)^γ = ε` with `αβγ ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeGroupRelation {
    pub letters: [Letter; 3],
    pub exponents: [i32; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MprHypotheses {
    pub distinct_images: bool,
    pub primitive_images: bool,
    /// A relation found by the bounded search, if any.
    pub relation: Option<FreeGroupRelation>,
}

impl MprHypotheses {
    pub fn holds(&self) -> bool {
        self.distinct_images && self.primitive_images && self.relation.is_none()
    }
}

/// Free reduction of a word over letters and their inverses.
fn push_reduced(acc: &mut Vec<(Letter, bool)>, item: (Letter, bool)) {
    match acc.last() {
        Some(&(x, inv)) if x == item.0 && inv != item.1 => {
            acc.pop();
        }
        _ => acc.push(item),
    }
}

fn push_power(acc: &mut Vec<(Letter, bool)>, w: &[Letter], e: i32) {
    for _ in 0..e.unsigned_abs() {
        if e > 0 {
            w.iter().for_each(|&x| push_reduced(acc, (x, false)));
        } else {
            w.iter().rev().for_each(|&x| push_reduced(acc, (x, true)));
        }
    }
}

fn find_relation(m: &Morphism) -> Option<FreeGroupRelation> {
    let letters: Vec<Letter> = m.domain().collect();
    let range = || (-RELATION_EXPONENT_BOUND..=RELATION_EXPONENT_BOUND).filter(|&e| e != 0);
    for &a in &letters {
        for &b in &letters {
            for &c in &letters {
                if a == b || b == c || a == c {
                    continue;
                }
                let (u, v, w) = (m.image(a).ok()?, m.image(b).ok()?, m.image(c).ok()?);
                for alpha in range() {
                    for beta in range() {
                        for gamma in range() {
                            let mut acc = Vec::new();
                            push_power(&mut acc, u, alpha);
                            push_power(&mut acc, v, beta);
                            push_power(&mut acc, w, gamma);
                            if acc.is_empty() {
                                return Some(FreeGroupRelation { letters: [a, b, c], exponents: [alpha, beta, gamma] });
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// The checkable hypotheses of the class P converse: distinct images,
/// primitive images, and no free-group relation among three images with all
/// exponents non-zero and at most [`RELATION_EXPONENT_BOUND`] in absolute
/// value.
pub fn check_mpr_hypotheses(m: &Morphism) -> MprHypotheses {
    MprHypotheses {
        distinct_images: m.has_distinct_images(),
        primitive_images: m.images().values().all(|v| is_primitive(v).unwrap_or(false)),
        relation: find_relation(m),
    }
}
