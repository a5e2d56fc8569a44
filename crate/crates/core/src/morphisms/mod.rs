//! Morphisms of free monoids and the palindrome-related classes built on them.
//!
//! [`Morphism`] is the engine (application, composition, iteration, fixed
//! points). The submodules carry the named morphisms, the class P and special
//! P recognizers, the richness transfer checks and a few word transforms that
//! are not morphisms at all (`π_a`, `ψ_a` preimages).

mod class_p;
mod named;
mod preservation;
mod special;
mod transforms;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

#[doc(hidden)]
pub use class_p::class_p_exhaustive;
pub use class_p::{is_class_p, QPart, StandardPMorphism};
pub use named::{doubling, insertion, psi, psi_bar, theta};
pub use preservation::{
    check_mpr_hypotheses, palindrome_preservation_class, preserves_richness_empirical, FreeGroupRelation,
    MprHypotheses, PalindromePreservation, PreservationClass, PreservationSweep,
};
pub use special::{
    h_prefix, is_special, length2_factors_of_fixed_point, special_fixed_point_class, special_rich_test,
    synchronization_bound, FixedPointClass, SpecialCheck, SpecialRichVerdict,
};
pub use transforms::{pi_exponents, pi_transform, psi_preimage, separating_letter, PsiPreimage};

/// Iteration cap for fixed-point expansion.
pub const DEFAULT_EXPANSION_BUDGET: usize = 30;

/// A non-erasing morphism, given by the images of the letters of its domain.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    images: BTreeMap<Letter, Word>,
}

impl Morphism {
    pub fn new<I, W>(images: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Letter, W)>,
        W: Into<Word>,
    {
        let images: BTreeMap<Letter, Word> = images.into_iter().map(|(a, w)| (a, w.into())).collect();
        if images.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some((&a, _)) = images.iter().find(|(_, w)| w.is_empty()) {
            return Err(Error::ErasingImage(a));
        }
        Ok(Morphism { images })
    }

    /// Shorthand for literal morphisms: `Morphism::from_pairs(&[(b'a', "ab"), (b'b', "a")])`.
    pub fn from_pairs(pairs: &[(Letter, &str)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(a, w)| (a, Word::from(w))))
    }

    pub fn image(&self, a: Letter) -> Result<&Word> {
        self.images.get(&a).ok_or(Error::LetterNotInDomain(a))
    }

    pub fn images(&self) -> &BTreeMap<Letter, Word> {
        &self.images
    }

    pub fn domain(&self) -> impl Iterator<Item = Letter> + '_ {
        self.images.keys().copied()
    }

    /// Letters appearing in some image.
    pub fn target_alphabet(&self) -> BTreeSet<Letter> {
        self.images.values().flat_map(|w| w.iter().copied()).collect()
    }

    pub fn max_image_len(&self) -> usize {
        self.images.values().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn min_image_len(&self) -> usize {
        self.images.values().map(|w| w.len()).min().unwrap_or(0)
    }

    pub fn apply(&self, w: &[Letter]) -> Result<Word> {
        let mut out = Word::new();
        for &a in w {
            out.extend_from_slice(self.image(a)?);
        }
        Ok(out)
    }

    /// `self ∘ inner`, i.e. `x ↦ self(inner(x))`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        let images = inner.images.iter().map(|(&a, w)| Ok((a, self.apply(w)?))).collect::<Result<Vec<_>>>()?;
        Morphism::new(images)
    }

    /// `self^steps(a)`.
    pub fn iterate(&self, a: Letter, steps: usize) -> Result<Word> {
        let mut w = Word::from(&[a]);
        for _ in 0..steps {
            w = self.apply(&w)?;
        }
        Ok(w)
    }

    /// `self(a) = a·u` with `u` non-empty.
    pub fn is_prolongable(&self, a: Letter) -> bool {
        self.images.get(&a).is_some_and(|w| w.len() > 1 && w[0] == a)
    }

    /// The length-`n` prefix of the fixed point `self^ω(a)`.
    pub fn fixed_point_prefix(&self, a: Letter, n: usize, budget: usize) -> Result<Word> {
        if !self.is_prolongable(a) {
            return Err(Error::NotProlongable(a));
        }
        let mut w = Word::from(&[a]);
        let mut steps = 0;
        while w.len() < n {
            if steps == budget {
                return Err(Error::ExpansionBudget(budget));
            }
            // Only the first n letters of the next iterate are needed.
            let mut next = Word::new();
            for &x in w.iter() {
                next.extend_from_slice(self.image(x)?);
                if next.len() >= n {
                    break;
                }
            }
            w = next;
            steps += 1;
        }
        w.truncate(n);
        Ok(w)
    }

    /// Whether the images are pairwise distinct.
    pub fn has_distinct_images(&self) -> bool {
        let set: BTreeSet<&Word> = self.images.values().collect();
        set.len() == self.images.len()
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (&a, w)) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}={}", char::from(a), w)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apply_psi_a() {
        let psi_a = psi(b'a', b"abc");
        assert_eq!(psi_a.apply(b"abca").unwrap(), "aabaca");
        assert_eq!(psi_a.apply(b"abd"), Err(Error::LetterNotInDomain(b'd')));
    }

    #[test]
    fn compose_psi_a_psi_b() {
        let m = psi(b'a', b"abc").compose(&psi(b'b', b"abc")).unwrap();
        assert_eq!(m.image(b'a').unwrap(), "aba");
        assert_eq!(m.image(b'b').unwrap(), "ab");
        assert_eq!(m.image(b'c').unwrap(), "abac");
    }

    #[test]
    fn iterate_by_hand() {
        let m = Morphism::from_pairs(&[(b'a', "aba"), (b'b', "bb")]).unwrap();
        assert_eq!(m.iterate(b'a', 2).unwrap(), "ababbaba");
        assert_eq!(m.iterate(b'a', 0).unwrap(), "a");
    }

    #[test]
    fn erasing_rejected() {
        assert_eq!(Morphism::from_pairs(&[(b'a', "ab"), (b'b', "")]), Err(Error::ErasingImage(b'b')));
    }

    #[test]
    fn fixed_point_prefix_fibonacci() {
        let fib = Morphism::from_pairs(&[(b'a', "ab"), (b'b', "a")]).unwrap();
        assert_eq!(fib.fixed_point_prefix(b'a', 8, 30).unwrap(), "abaababa");
        assert_eq!(fib.fixed_point_prefix(b'b', 8, 30), Err(Error::NotProlongable(b'b')));
        assert_eq!(fib.fixed_point_prefix(b'a', 1 << 20, 3), Err(Error::ExpansionBudget(3)));
    }

    #[test]
    fn display_round_trip_format() {
        let m = Morphism::from_pairs(&[(b'b', "baba"), (b'a', "baa")]).unwrap();
        assert_eq!(alloc::format!("{m}"), "a=baa,b=baba");
    }
}
