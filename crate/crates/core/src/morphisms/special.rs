use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::infinite::InfiniteWordSpec;
use crate::morphisms::{Morphism, StandardPMorphism};
use crate::richness::is_rich;
use crate::words::{occurrences, words_over, Letter, Word};

/// Cap on the number of words scanned for the synchronization condition.
pub const SYNCHRONIZATION_LIMIT: usize = 2_000_000;
/// Longest prefix searched when looking for `h`.
const PREFIX_SEARCH_LIMIT: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialCheck {
    /// Condition 1: the images end with pairwise distinct letters.
    pub distinct_last_letters: bool,
    /// Condition 2: every occurrence of a block `σ(x)p` inside `σ(w)p` is
    /// one of its own blocks, for all `w` of length `bound`.
    pub synchronized: bool,
    pub bound: usize,
    /// A misaligned occurrence: the word `w`, the letter `x` and the 0-based
    /// offset in `σ(w)p`.
    pub witness: Option<(Word, Letter, usize)>,
}

impl SpecialCheck {
    pub fn is_special(&self) -> bool {
        self.distinct_last_letters && self.synchronized
    }
}

/// `ceil(2·max|σ(x)p| / min|σ(y)|) + 2`.
pub fn synchronization_bound(m: &Morphism, p: &[Letter]) -> usize {
    let longest = m.max_image_len() + p.len();
    (2 * longest).div_ceil(m.min_image_len()) + 2
}

/// Checks both conditions of a special standard P-morphism. The certificate
/// must be standard and must reconstruct `m`.
pub fn is_special(m: &Morphism, cert: &StandardPMorphism) -> Result<SpecialCheck> {
    if !cert.is_standard() {
        return Err(Error::InvalidCertificate(format!("shift {} is not standard", cert.shift)));
    }
    cert.validate()?;
    if !cert.certifies(m) {
        return Err(Error::InvalidCertificate(format!("{cert} does not reconstruct {m}")));
    }
    let lasts: BTreeSet<Letter> = m.images().values().map(|v| v[v.len() - 1]).collect();
    let distinct_last_letters = lasts.len() == m.images().len();

    let p = &cert.p;
    let bound = synchronization_bound(m, p);
    let letters: Vec<Letter> = m.domain().collect();
    let total = letters.len().checked_pow(bound as u32).unwrap_or(usize::MAX);
    if total > SYNCHRONIZATION_LIMIT {
        return Err(Error::GuardExceeded(format!("{}^{bound} words for the synchronization check", letters.len())));
    }
    let blocks: Vec<(Letter, Word)> = m.images().iter().map(|(&x, v)| (x, Word::concat(&[v, p]))).collect();

    let mut witness = None;
    'words: for w in words_over(&letters, bound) {
        let mut text = m.apply(&w)?;
        text.extend_from_slice(p);
        // Start offset of each block σ(y_m).
        let mut starts = Vec::with_capacity(w.len());
        let mut at = 0;
        for &y in w.iter() {
            starts.push((at, m.image(y)?.len()));
            at += m.image(y)?.len();
        }
        for (x, block) in &blocks {
            let len = block.len() - p.len();
            for s in occurrences(&text, block) {
                if !starts.contains(&(s, len)) {
                    witness = Some((w.clone(), *x, s));
                    break 'words;
                }
            }
        }
    }
    Ok(SpecialCheck { distinct_last_letters, synchronized: witness.is_none(), bound, witness })
}

/// Factors of length 1 and 2 of `σ^ω(a)`, by iterating the induced action of
/// `σ` on them until the set is stable.
pub fn length2_factors_of_fixed_point(m: &Morphism, a: Letter) -> Result<BTreeSet<Word>> {
    if !m.is_prolongable(a) {
        return Err(Error::NotProlongable(a));
    }
    let n = m.images().len();
    let mut set: BTreeSet<Word> = BTreeSet::from([Word::from(&[a])]);
    for _ in 0..=n * n + n {
        let mut next = set.clone();
        for f in &set {
            let image = m.apply(f)?;
            for x in image.iter() {
                next.insert(Word::from(&[*x]));
            }
            for pair in image.windows(2) {
                next.insert(Word::from(pair));
            }
        }
        if next == set {
            return Ok(set);
        }
        set = next;
    }
    Err(Error::FactorSetNotStabilized)
}

/// Factors of length at most 2 of an infinite word given by a spec.
fn short_factors(t: &InfiniteWordSpec) -> Result<BTreeSet<Word>> {
    let window = match t {
        InfiniteWordSpec::MorphicFixedPoint { morphism, seed } => {
            return length2_factors_of_fixed_point(morphism, *seed)
        }
        InfiniteWordSpec::Periodic { period } => t.prefix(2 * period.len())?,
        InfiniteWordSpec::EventuallyPeriodic { preperiod, period } => t.prefix(preperiod.len() + 2 * period.len())?,
    };
    let mut set = BTreeSet::new();
    for i in 0..window.len() {
        set.insert(Word::from(&window[i..i + 1]));
        if i + 2 <= window.len() {
            set.insert(Word::from(&window[i..i + 2]));
        }
    }
    Ok(set)
}

/// The shortest prefix of `t` containing every palindromic factor of `t` of
/// length at most 2.
pub fn h_prefix(t: &InfiniteWordSpec) -> Result<Word> {
    let mut needed: BTreeSet<Word> = short_factors(t)?.into_iter().filter(|f| f.len() == 1 || f[0] == f[1]).collect();
    let mut n = 64;
    loop {
        let prefix = match t.prefix(n) {
            Ok(p) => p,
            Err(Error::ExpansionBudget(_)) => return Err(Error::FactorSetNotStabilized),
            Err(e) => return Err(e),
        };
        for i in 0..prefix.len() {
            needed.remove(&prefix[i..i + 1]);
            if i >= 1 {
                needed.remove(&prefix[i - 1..i + 1]);
            }
            if needed.is_empty() {
                return Ok(Word::from(&prefix[..=i]));
            }
        }
        if n >= PREFIX_SEARCH_LIMIT {
            return Err(Error::FactorSetNotStabilized);
        }
        n *= 4;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialRichVerdict {
    /// `t_h`.
    pub prefix: Word,
    /// `σ(t_h)·p`.
    pub image: Word,
    pub rich: bool,
}

impl SpecialRichVerdict {
    pub fn h(&self) -> usize {
        self.prefix.len()
    }

    pub fn class(&self) -> FixedPointClass {
        if self.rich {
            FixedPointClass::Rich
        } else {
            FixedPointClass::InfiniteDefect
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedPointClass {
    Rich,
    InfiniteDefect,
}

fn require_special(m: &Morphism, cert: &StandardPMorphism) -> Result<()> {
    if is_special(m, cert)?.is_special() {
        Ok(())
    } else {
        Err(Error::NotSpecial)
    }
}

fn verdict(m: &Morphism, cert: &StandardPMorphism, prefix: Word) -> Result<SpecialRichVerdict> {
    let mut image = m.apply(&prefix)?;
    image.extend_from_slice(&cert.p);
    let rich = is_rich(&image);
    Ok(SpecialRichVerdict { prefix, image, rich })
}

/// Decides whether `σ(t)` is rich for a rich `t`, from `σ(t_h)·p`.
/// `window` letters of `t` (at least `h`) are checked to be rich first.
pub fn special_rich_test(
    m: &Morphism,
    cert: &StandardPMorphism,
    t: &InfiniteWordSpec,
    window: usize,
) -> Result<SpecialRichVerdict> {
    require_special(m, cert)?;
    let prefix = h_prefix(t)?;
    let checked = t.prefix(window.max(prefix.len()))?;
    if !is_rich(&checked) {
        return Err(Error::NotRich);
    }
    verdict(m, cert, prefix)
}

/// Rich or infinite defect for the fixed point `σ^ω(a)` of a special
/// standard P-morphism.
pub fn special_fixed_point_class(m: &Morphism, cert: &StandardPMorphism, a: Letter) -> Result<SpecialRichVerdict> {
    let s = InfiniteWordSpec::morphic(m.clone(), a)?;
    require_special(m, cert)?;
    verdict(m, cert, h_prefix(&s)?)
}
