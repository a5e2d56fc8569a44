use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::words::{alphabet, Letter, Word};

/// Maximal runs of `a` as `(start, length)`.
fn runs(w: &[Letter], a: Letter) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < w.len() {
        if w[i] == a {
            let start = i;
            while i < w.len() && w[i] == a {
                i += 1;
            }
            out.push((start, i - start));
        } else {
            i += 1;
        }
    }
    out
}

/// The distinct exponents of `a` in `w`, ascending. Runs touching either end
/// of the word count, and so does a run covering the whole word.
pub fn pi_exponents(w: &[Letter], a: Letter) -> Vec<usize> {
    runs(w, a).into_iter().map(|(_, k)| k).collect::<BTreeSet<_>>().into_iter().collect()
}

/// `π_a(w)`: every run `a^{k_i}` becomes `a^{h_i}`.
pub fn pi_transform(w: &[Letter], a: Letter, new_exponents: &[usize]) -> Result<Word> {
    let ks = pi_exponents(w, a);
    if ks.len() != new_exponents.len() {
        return Err(Error::InvalidParameter(format!(
            "{} exponents of {} but {} replacements",
            ks.len(),
            char::from(a),
            new_exponents.len()
        )));
    }
    for (i, (&k, &h)) in ks.iter().zip(new_exponents).enumerate() {
        if h == 0 || h > k || (i > 0 && h <= new_exponents[i - 1]) {
            return Err(Error::InvalidParameter(format!(
                "replacement exponents must be increasing with 1 <= h_i <= k_i, got {new_exponents:?} for {ks:?}"
            )));
        }
    }
    let mut out = Word::new();
    let mut i = 0;
    while i < w.len() {
        if w[i] == a {
            let start = i;
            while i < w.len() && w[i] == a {
                i += 1;
            }
            let slot = ks.binary_search(&(i - start)).expect("exponent listed");
            for _ in 0..new_exponents[slot] {
                out.push(a);
            }
        } else {
            out.push(w[i]);
            i += 1;
        }
    }
    Ok(out)
}

/// A letter occurring in every length-2 factor; the smallest one if several do.
pub fn separating_letter(w: &[Letter]) -> Result<Option<Letter>> {
    if w.len() < 2 {
        return Err(Error::InvalidParameter(format!("separating letter needs |w| >= 2, got {}", w.len())));
    }
    Ok(alphabet(w).into_iter().find(|&a| w.windows(2).all(|f| f.contains(&a))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiPreimage {
    pub preimage: Word,
    /// `w` started with a letter other than `a`, so `a·w` was decoded instead.
    pub prepended: bool,
}

/// `v` with `ψ_a(v) = w`, or with `ψ_a(v) = a·w` when `w` starts with a
/// letter other than `a`.
pub fn psi_preimage(w: &[Letter], a: Letter) -> Option<PsiPreimage> {
    let prepended = w.first().is_some_and(|&x| x != a);
    let mut src = Word::new();
    if prepended {
        src.push(a);
    }
    src.extend_from_slice(w);
    let mut v = Word::new();
    let mut i = 0;
    while i < src.len() {
        if src[i] != a {
            return None;
        }
        match src.get(i + 1) {
            Some(&x) if x != a => {
                v.push(x);
                i += 2;
            }
            _ => {
                v.push(a);
                i += 1;
            }
        }
    }
    Some(PsiPreimage { preimage: v, prepended })
}
