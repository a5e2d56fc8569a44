//! Balance, letter gaps and frequencies, Fraenkel words and the `σ_a` map.

mod families;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::words::{alphabet, primitive_root, Letter, Word};

pub use families::{
    fraenkel_interleaving_check, matches_wr_family, sigma_periodic, wr_family_word, WRFamilySpec, WrMatch,
};

/// Two equal-length factors whose counts of `letter` differ by two or more.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceWitness {
    pub u: Word,
    pub v: Word,
    pub letter: Letter,
}

/// Scans windows `text[s..s+n]` for `s` in `starts`, `n` in `lengths`.
fn imbalance(
    text: &[Letter],
    starts: usize,
    lengths: impl Iterator<Item = usize>,
    letters: &BTreeSet<Letter>,
) -> Option<BalanceWitness> {
    for n in lengths {
        for &x in letters {
            let mut count = text[..n].iter().filter(|&&y| y == x).count();
            let (mut lo, mut hi) = ((count, 0), (count, 0));
            for s in 1..starts {
                if text[s - 1] == x {
                    count -= 1;
                }
                if text[s + n - 1] == x {
                    count += 1;
                }
                if count > hi.0 {
                    hi = (count, s);
                }
                if count <= lo.0 {
                    lo = (count, s);
                }
            }
            if hi.0 - lo.0 > 1 {
                return Some(BalanceWitness {
                    u: Word::from(&text[hi.1..hi.1 + n]),
                    v: Word::from(&text[lo.1..lo.1 + n]),
                    letter: x,
                });
            }
        }
    }
    None
}

/// The first imbalance found, by increasing length: the first window with
/// the most occurrences against the last window with the fewest.
pub fn balance_witness(w: &[Letter]) -> Option<BalanceWitness> {
    let letters = alphabet(w);
    (1..=w.len()).find_map(|n| imbalance(w, w.len() - n + 1, core::iter::once(n), &letters))
}

pub fn is_balanced(w: &[Letter]) -> bool {
    balance_witness(w).is_none()
}

/// Balance of `u^ω`, from the cyclic factors of length `1..=|u|`.
pub fn periodic_balance_witness(u: &[Letter]) -> Result<Option<BalanceWitness>> {
    if u.is_empty() {
        return Err(Error::EmptyInput);
    }
    let text = Word::from(u).pow(2);
    Ok(imbalance(&text, u.len(), 1..=u.len(), &alphabet(u)))
}

pub fn is_periodic_balanced(u: &[Letter]) -> Result<bool> {
    Ok(periodic_balance_witness(u)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapProfile {
    pub letter: Letter,
    /// Distances between consecutive occurrences; adjacent letters are 1 apart.
    pub gaps: BTreeSet<usize>,
}

pub fn gap_profile(w: &[Letter], a: Letter) -> GapProfile {
    let positions: Vec<usize> = w.iter().enumerate().filter(|(_, &x)| x == a).map(|(i, _)| i).collect();
    GapProfile { letter: a, gaps: positions.windows(2).map(|p| p[1] - p[0]).collect() }
}

pub fn delete_letter(w: &[Letter], a: Letter) -> Word {
    w.iter().copied().filter(|&x| x != a).collect()
}

/// Exact letter frequencies of `u^ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyTable {
    pub frequencies: BTreeMap<Letter, Ratio<usize>>,
}

impl FrequencyTable {
    pub fn of_period(u: &[Letter]) -> Result<Self> {
        let (root, _) = primitive_root(u)?;
        let frequencies = alphabet(&root)
            .into_iter()
            .map(|x| (x, Ratio::new(crate::words::letter_count(&root, x), root.len())))
            .collect();
        Ok(FrequencyTable { frequencies })
    }

    pub fn all_distinct(&self) -> bool {
        let set: BTreeSet<&Ratio<usize>> = self.frequencies.values().collect();
        set.len() == self.frequencies.len()
    }

    pub fn get(&self, x: Letter) -> Option<Ratio<usize>> {
        self.frequencies.get(&x).copied()
    }
}

/// Letter `i` of the Fraenkel alphabet, the digit `'0' + i`.
pub(crate) fn digit(i: usize) -> Letter {
    b'0' + i as u8
}

/// `F_1 = 1`, `F_k = F_{k-1}·k·F_{k-1}`, for `1 <= k <= 9`.
pub fn fraenkel_word(k: usize) -> Result<Word> {
    if !(1..=9).contains(&k) {
        return Err(Error::InvalidParameter(format!("Fraenkel index {k} not in 1..=9")));
    }
    let mut f = Word::from(&[digit(1)]);
    for i in 2..=k {
        f = Word::concat(&[&f, &[digit(i)], &f]);
    }
    Ok(f)
}

/// `σ_a(x_1 … x_n) = a x_1 a^{ε_1} x_2 … a^{ε_{n-1}} x_n`, with `ε_i = 2`
/// when `x_i = x_{i+1}` and 1 otherwise. The trailing block is not defined
/// for finite input and is dropped.
pub fn sigma_map(a: Letter, w: &[Letter]) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    if w.contains(&a) {
        return Err(Error::LetterAlreadyPresent(a));
    }
    let mut out = Word::from(&[a]);
    for (i, &x) in w.iter().enumerate() {
        out.push(x);
        if let Some(&next) = w.get(i + 1) {
            out.push(a);
            if next == x {
                out.push(a);
            }
        }
    }
    Ok(out)
}
