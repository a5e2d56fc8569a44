//! Periodic words `w^ω`: richness, almost richness and exact defect, all
//! decided from one period.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::palindrome_index::PalindromeIndex;
use crate::richness::is_rich;
use crate::words::{conjugates, is_palindrome, primitive_root, Letter, Word};

/// `w = p·q` with `p` and `q` palindromes, either possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TwoPalindromeFactorization {
    pub p: Word,
    pub q: Word,
}

impl TwoPalindromeFactorization {
    pub fn word(&self) -> Word {
        Word::concat(&[&self.p, &self.q])
    }
}

/// Every split point of `w` into two palindromes, by increasing `|p|`.
pub fn two_palindrome_factorizations(w: &[Letter]) -> Vec<TwoPalindromeFactorization> {
    (0..=w.len())
        .filter(|&i| is_palindrome(&w[..i]) && is_palindrome(&w[i..]))
        .map(|i| TwoPalindromeFactorization { p: Word::from(&w[..i]), q: Word::from(&w[i..]) })
        .collect()
}

/// Whether `w^ω` is rich, decided on `w²`.
pub fn is_power_rich(w: &[Letter]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(is_rich(&Word::from(w).pow(2)))
}

/// Whether `w^ω` has finite defect.
pub fn is_power_almost_rich(w: &[Letter]) -> Result<bool> {
    let (root, _) = primitive_root(w)?;
    Ok(!two_palindrome_factorizations(&root).is_empty())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PeriodicDefect {
    Finite(usize),
    Infinite,
}

impl PeriodicDefect {
    pub fn finite(self) -> Option<usize> {
        match self {
            Self::Finite(d) => Some(d),
            Self::Infinite => None,
        }
    }
}

impl fmt::Display for PeriodicDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(d) => write!(f, "{d}"),
            Self::Infinite => f.write_str("infinite"),
        }
    }
}

/// The length of the prefix of `r^ω` that carries the full defect, for a
/// primitive `r = p·q`.
pub fn defect_window(f: &TwoPalindromeFactorization) -> usize {
    f.p.len() + f.q.len() + f.p.len().abs_diff(f.q.len()) / 3
}

/// `D(w^ω)`.
pub fn periodic_defect(w: &[Letter]) -> Result<PeriodicDefect> {
    let (root, _) = primitive_root(w)?;
    let mut value = None;
    for f in two_palindrome_factorizations(&root) {
        let n = defect_window(&f);
        let prefix: Word = root.iter().copied().cycle().take(n).collect();
        let d = PalindromeIndex::build(&prefix).defect();
        match value {
            None => value = Some(d),
            Some(v) if v != d => {
                return Err(Error::Inconsistent(alloc::format!(
                    "defect of {root}^ω is {v} or {d} depending on the factorization"
                )))
            }
            Some(_) => {}
        }
    }
    Ok(value.map_or(PeriodicDefect::Infinite, PeriodicDefect::Finite))
}

/// A conjugate `p'q'` of `w` with `p'`, `q'` palindromes and
/// `||p'| - |q'|| <= 2`.
pub fn balanced_conjugate_factorization(w: &[Letter]) -> Result<TwoPalindromeFactorization> {
    let mut f = two_palindrome_factorizations(w).into_iter().next().ok_or(Error::NoTwoPalindromeFactorization)?;
    // p = x p' x: T(pq) = p' · (x q x). Symmetrically on the q side.
    loop {
        let (lp, lq) = (f.p.len(), f.q.len());
        if lp > lq + 2 {
            let x = f.p[0];
            let q = Word::concat(&[&[x], &f.q, &[x]]);
            f = TwoPalindromeFactorization { p: Word::from(&f.p[1..lp - 1]), q };
        } else if lq > lp + 2 {
            let y = f.q[0];
            let p = Word::concat(&[&[y], &f.p, &[y]]);
            f = TwoPalindromeFactorization { p, q: Word::from(&f.q[1..lq - 1]) };
        } else {
            return Ok(f);
        }
    }
}

/// `w` and all its conjugates are rich.
pub fn conjugates_all_rich(w: &[Letter]) -> bool {
    w.is_empty() || conjugates(w, true).expect("non-empty").iter().all(|c| is_rich(c))
}
