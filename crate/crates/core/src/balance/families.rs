use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use itertools::Itertools;

use super::{digit, fraenkel_word, sigma_map};
use crate::error::{Error, Result};
use crate::infinite::InfiniteWordSpec;
use crate::morphisms::psi;
use crate::words::{alphabet, letter_count, primitive_root, rotate, Letter, Word};

/// Largest `n` accepted for the first family.
const MAX_FAMILY1_EXPONENT: usize = 64;
/// Largest alphabet tried by [`matches_wr_family`].
const MAX_MATCH_ALPHABET: usize = 5;

/// The two families of balanced weakly rich periodic words on `k >= 3`
/// letters `1..=k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WRFamilySpec {
    /// `ψ_1^n ∘ ψ_2 ∘ … ∘ ψ_{k-1}(k^ω)`.
    Family1 { k: usize, n: usize },
    /// `σ_1 ∘ … ∘ σ_j ∘ ψ_{j+1}² ∘ ψ_{j+2} ∘ … ∘ ψ_{k-1}(k^ω)`.
    Family2 { k: usize, j: usize },
}

impl WRFamilySpec {
    pub fn k(&self) -> usize {
        match *self {
            Self::Family1 { k, .. } | Self::Family2 { k, .. } => k,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Self::Family1 { k, n } => (3..=9).contains(&k) && (1..=MAX_FAMILY1_EXPONENT).contains(&n),
            Self::Family2 { k, j } => (3..=9).contains(&k) && j >= 1 && j + 2 <= k,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("{self} out of range")))
        }
    }
}

impl fmt::Display for WRFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Family1 { k, n } => write!(f, "family1(k={k}, n={n})"),
            Self::Family2 { k, j } => write!(f, "family2(k={k}, j={j})"),
        }
    }
}

fn apply_psi(i: usize, v: &Word) -> Word {
    let alph: Vec<Letter> = alphabet(v).into_iter().collect();
    psi(digit(i), &alph).apply(v).expect("alphabet covers the word")
}

/// A period of `σ_a(v^ω)`: `a x_1 a^{ε_1} … x_m a^{ε_m − 1}`, with `ε_m`
/// comparing `x_m` to `x_1`.
pub fn sigma_periodic(a: Letter, v: &[Letter]) -> Result<Word> {
    if v.is_empty() {
        return Err(Error::EmptyInput);
    }
    if v.contains(&a) {
        return Err(Error::LetterAlreadyPresent(a));
    }
    let mut out = Word::from(&[a]);
    for (i, &x) in v.iter().enumerate() {
        out.push(x);
        let next = v[(i + 1) % v.len()];
        let eps = if next == x { 2 } else { 1 };
        let eps = if i + 1 == v.len() { eps - 1 } else { eps };
        for _ in 0..eps {
            out.push(a);
        }
    }
    Ok(out)
}

/// The family word as `Periodic(minimal period)`.
pub fn wr_family_word(spec: WRFamilySpec) -> Result<InfiniteWordSpec> {
    spec.validate()?;
    let k = spec.k();
    let mut v = Word::from(&[digit(k)]);
    match spec {
        WRFamilySpec::Family1 { n, .. } => {
            for i in (2..k).rev() {
                v = apply_psi(i, &v);
            }
            for _ in 0..n {
                v = apply_psi(1, &v);
            }
        }
        WRFamilySpec::Family2 { j, .. } => {
            for i in (j + 2..k).rev() {
                v = apply_psi(i, &v);
            }
            v = apply_psi(j + 1, &v);
            v = apply_psi(j + 1, &v);
            for i in (1..=j).rev() {
                v = sigma_periodic(digit(i), &v)?;
            }
        }
    }
    InfiniteWordSpec::periodic(primitive_root(&v)?.0)
}

/// Checks `σ_1 ∘ … ∘ σ_j ∘ ψ_{j+1}²(x) = F_{j+1}² x_1 F_{j+1}² x_2 …` on the
/// first `n` letters, for `x = tail^ω` over letters above `j + 1`.
pub fn fraenkel_interleaving_check(j: usize, tail: &[Letter], n: usize) -> Result<bool> {
    if !(1..=7).contains(&j) {
        return Err(Error::InvalidParameter(format!("j = {j} not in 1..=7")));
    }
    if tail.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(&x) = tail.iter().find(|&&x| x <= digit(j + 1) || x > b'9') {
        return Err(Error::InvalidParameter(format!("tail letter {} must be a digit above {}", char::from(x), j + 1)));
    }
    let x = InfiniteWordSpec::periodic(tail)?.prefix(n + 1)?;
    let mut left = apply_psi(j + 1, &apply_psi(j + 1, &x));
    for i in (1..=j).rev() {
        left = sigma_map(digit(i), &left)?;
    }
    if left.len() < n {
        return Err(Error::Inconsistent(format!("left side expanded to {} < {n} letters", left.len())));
    }
    let f = fraenkel_word(j + 1)?;
    let mut right = Word::new();
    for &y in x.iter() {
        if right.len() >= n {
            break;
        }
        right.extend_from_slice(&f);
        right.extend_from_slice(&f);
        right.push(y);
    }
    Ok(left[..n] == right[..n])
}

/// A family, a letter map from family letters to the word's letters, and a
/// shift with `T^shift(map(family period))` equal to the primitive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WrMatch {
    pub spec: WRFamilySpec,
    pub permutation: BTreeMap<Letter, Letter>,
    pub shift: usize,
}

fn count_profile(w: &[Letter]) -> Vec<usize> {
    let mut counts: Vec<usize> = alphabet(w).into_iter().map(|x| letter_count(w, x)).collect();
    counts.sort_unstable();
    counts
}

/// Whether `u^ω` is a family word up to letter permutation and shift.
/// Alphabets of fewer than 3 letters never match.
pub fn matches_wr_family(u: &[Letter]) -> Result<Option<WrMatch>> {
    let (root, _) = primitive_root(u)?;
    let letters: Vec<Letter> = alphabet(&root).into_iter().collect();
    let k = letters.len();
    if k < 3 {
        return Ok(None);
    }
    if k > MAX_MATCH_ALPHABET {
        return Err(Error::GuardExceeded(format!("{k}! letter permutations")));
    }
    let mut specs = Vec::new();
    for n in 1..=MAX_FAMILY1_EXPONENT {
        let spec = WRFamilySpec::Family1 { k, n };
        let period = wr_family_word(spec)?.period().expect("periodic").clone();
        if period.len() > root.len() {
            break;
        }
        specs.push((spec, period));
    }
    for j in 1..=k - 2 {
        let spec = WRFamilySpec::Family2 { k, j };
        specs.push((spec, wr_family_word(spec)?.period().expect("periodic").clone()));
    }
    let profile = count_profile(&root);
    for (spec, period) in specs {
        if period.len() != root.len() || count_profile(&period) != profile {
            continue;
        }
        for perm in letters.iter().copied().permutations(k) {
            let map: BTreeMap<Letter, Letter> = (1..=k).map(digit).zip(perm).collect();
            let image: Word = period.iter().map(|x| map[x]).collect();
            if let Some(shift) = (0..root.len()).find(|&s| rotate(&image, s) == root) {
                return Ok(Some(WrMatch { spec, permutation: map, shift }));
            }
        }
    }
    Ok(None)
}
