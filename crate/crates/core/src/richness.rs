//! Richness, defects, complete returns, oddities and weak richness of finite
//! words.
//!
//! Predicates about infinite words are evaluated on a finite prefix chosen by
//! the caller; for a periodic word `u^ω` three periods are enough to see every
//! complete return to a letter.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::palindrome_index::PalindromeIndex;
use crate::words::{alphabet, is_palindrome, occurrences, reverse, Letter, Word};

pub fn is_rich(w: &[Letter]) -> bool {
    PalindromeIndex::build(w).defect() == 0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RichnessReport {
    pub word_length: usize,
    /// `|PAL(w)|`, including the empty word.
    pub palindrome_count: usize,
    pub is_rich: bool,
    pub defect: usize,
    /// 1-based prefix lengths with no unioccurrent palindromic suffix.
    pub defective_positions: Vec<usize>,
    /// `(position, ups)` for every non-defective position, when requested.
    pub ups_per_prefix: Option<Vec<(usize, Word)>>,
}

pub fn richness_report(w: &[Letter], with_ups: bool) -> RichnessReport {
    let idx = PalindromeIndex::build(w);
    let defective_positions: Vec<usize> =
        idx.ups_flags().enumerate().filter(|&(_, created)| !created).map(|(i, _)| i + 1).collect();
    let ups_per_prefix = with_ups.then(|| {
        idx.ups_flags()
            .enumerate()
            .filter(|&(_, created)| created)
            .map(|(i, _)| {
                let ups = idx.longest_palindromic_suffix(i + 1).expect("position in range");
                (i + 1, Word::from(ups))
            })
            .collect()
    });
    RichnessReport {
        word_length: w.len(),
        palindrome_count: idx.distinct_palindrome_count(),
        is_rich: idx.defect() == 0,
        defect: idx.defect(),
        defective_positions,
        ups_per_prefix,
    }
}

/// `w^(+)`: the shortest palindrome with prefix `w`.
pub fn palindromic_closure(w: &[Letter]) -> Word {
    if w.is_empty() {
        return Word::new();
    }
    let idx = PalindromeIndex::build(w);
    let lps = idx.longest_palindromic_suffix(w.len()).expect("non-empty word").len();
    let head = &w[..w.len() - lps];
    Word::concat(&[w, &reverse(head)])
}

/// `Pal(x_1 … x_n)`, built by `Pal(ux) = (Pal(u)x)^(+)`.
pub fn iterated_palindromic_closure(directive: &[Letter]) -> Word {
    directive.iter().fold(Word::new(), |mut acc, &x| {
        acc.push(x);
        palindromic_closure(&acc)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteReturn {
    pub factor: Word,
    pub return_word: Word,
    /// 1-based start position in the analysed word.
    pub start: usize,
}

impl CompleteReturn {
    /// 1-based end position.
    pub fn end(&self) -> usize {
        self.start + self.return_word.len() - 1
    }
}

fn returns_from_occurrences(w: &[Letter], u: &[Letter], occ: &[usize]) -> Vec<CompleteReturn> {
    occ.windows(2)
        .map(|pair| CompleteReturn {
            factor: Word::from(u),
            return_word: Word::from(&w[pair[0]..pair[1] + u.len()]),
            start: pair[0] + 1,
        })
        .collect()
}

/// Complete returns to `u`, one per pair of consecutive occurrences.
pub fn complete_returns(w: &[Letter], u: &[Letter]) -> Result<Vec<CompleteReturn>> {
    if u.is_empty() {
        return Err(Error::EmptyFactor);
    }
    Ok(returns_from_occurrences(w, u, &occurrences(w, u)))
}

/// Distinct non-empty palindromic factors by centre expansion. Deliberately
/// independent of [`PalindromeIndex`].
fn palindromic_factors(w: &[Letter]) -> BTreeSet<&[Letter]> {
    let n = w.len();
    let mut out = BTreeSet::new();
    for centre in 0..2 * n {
        let (mut lo, mut hi) = (centre / 2, centre / 2 + centre % 2);
        while hi < n && lo < n && w[lo] == w[hi] {
            out.insert(&w[lo..=hi]);
            if lo == 0 {
                break;
            }
            lo -= 1;
            hi += 1;
        }
    }
    out
}

/// A non-palindromic complete return to a non-empty palindromic factor, if
/// one exists. Among all of them, the one ending first (then starting first).
pub fn non_palindromic_return(w: &[Letter]) -> Option<CompleteReturn> {
    palindromic_factors(w)
        .into_iter()
        .flat_map(|p| returns_from_occurrences(w, p, &occurrences(w, p)))
        .filter(|r| !is_palindrome(&r.return_word))
        .min_by_key(|r| (r.end(), r.start))
}

/// Richness decided through complete returns to palindromes only.
pub fn is_rich_via_returns(w: &[Letter]) -> bool {
    non_palindromic_return(w).is_none()
}

/// The earliest-ending non-palindromic complete return to a single letter.
pub fn weak_richness_witness(w: &[Letter]) -> Option<CompleteReturn> {
    alphabet(w)
        .into_iter()
        .flat_map(|a| returns_from_occurrences(w, &[a], &occurrences(w, &[a])))
        .filter(|r| !is_palindrome(&r.return_word))
        .min_by_key(|r| (r.end(), r.start))
}

pub fn is_weakly_rich(w: &[Letter]) -> bool {
    weak_richness_witness(w).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Oddity {
    /// The smaller of `r` and its reversal.
    pub representative: Word,
    pub incriminated_palindrome: Word,
    /// Earliest 1-based end position of `r` or its reversal.
    pub end_position: usize,
}

/// All oddities of `w`, ordered by end position.
pub fn oddities(w: &[Letter]) -> Vec<Oddity> {
    let idx = PalindromeIndex::build(w);
    let mut found: BTreeMap<(Word, Word), usize> = BTreeMap::new();
    for p in idx.palindromes() {
        for r in returns_from_occurrences(w, p, &occurrences(w, p)) {
            if is_palindrome(&r.return_word) {
                continue;
            }
            let end = r.end();
            let rev = reverse(&r.return_word);
            let key = (core::cmp::min(r.return_word, rev), Word::from(p));
            found.entry(key).and_modify(|e| *e = (*e).min(end)).or_insert(end);
        }
    }
    let mut out: Vec<Oddity> = found
        .into_iter()
        .map(|((representative, incriminated_palindrome), end_position)| Oddity {
            representative,
            incriminated_palindrome,
            end_position,
        })
        .collect();
    out.sort_by(|a, b| (a.end_position, &a.representative).cmp(&(b.end_position, &b.representative)));
    out
}

/// Letters `x` of `Alph(w)` with `wx` rich, and `z` with `zw` rich.
pub fn rich_extensions(w: &[Letter]) -> Result<(BTreeSet<Letter>, BTreeSet<Letter>)> {
    if !is_rich(w) {
        return Err(Error::NotRich);
    }
    let mut right = BTreeSet::new();
    let mut left = BTreeSet::new();
    for x in alphabet(w) {
        let mut wx = Word::from(w);
        wx.push(x);
        if is_rich(&wx) {
            right.insert(x);
        }
        if is_rich(&Word::concat(&[&[x], w])) {
            left.insert(x);
        }
    }
    Ok((right, left))
}

/// `Some(true)` when `ux` has a palindromic suffix `r` with `2|r| >= |u|`,
/// which forces `ux` to be rich. `None` otherwise; never `Some(false)`.
pub fn rich_extension_fastpath(u: &[Letter], x: Letter) -> Result<Option<bool>> {
    if !is_rich(u) {
        return Err(Error::NotRich);
    }
    let mut ux = Word::from(u);
    ux.push(x);
    let idx = PalindromeIndex::build(&ux);
    let r = idx.longest_palindromic_suffix(ux.len())?.len();
    Ok((2 * r >= u.len()).then_some(true))
}
