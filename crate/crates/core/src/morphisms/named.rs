use crate::morphisms::Morphism;
use crate::words::{Letter, Word};

fn build(alphabet: &[Letter], image: impl Fn(Letter) -> Word) -> Morphism {
    let mut letters = alphabet.to_vec();
    letters.sort_unstable();
    letters.dedup();
    Morphism::new(letters.into_iter().map(|x| (x, image(x))))
        .expect("named morphisms are non-erasing over a non-empty alphabet")
}

/// `ψ_a: a ↦ a, x ↦ ax`. `a` is added to the alphabet if missing.
pub fn psi(a: Letter, alphabet: &[Letter]) -> Morphism {
    let mut letters = alphabet.to_vec();
    letters.push(a);
    build(&letters, |x| if x == a { Word::from(&[a]) } else { Word::from(&[a, x]) })
}

/// `ψ̄_a: a ↦ a, x ↦ xa`.
pub fn psi_bar(a: Letter, alphabet: &[Letter]) -> Morphism {
    let mut letters = alphabet.to_vec();
    letters.push(a);
    build(&letters, |x| if x == a { Word::from(&[a]) } else { Word::from(&[x, a]) })
}

/// The insertion morphism `φ_a: x ↦ xa` for every letter.
pub fn insertion(a: Letter, alphabet: &[Letter]) -> Morphism {
    build(alphabet, |x| Word::from(&[x, a]))
}

/// Letter doubling `x ↦ xx`.
pub fn doubling(alphabet: &[Letter]) -> Morphism {
    build(alphabet, |x| Word::from(&[x, x]))
}

/// `θ: a ↦ a^n, x ↦ x`. Panics if `n == 0`.
pub fn theta(a: Letter, n: usize, alphabet: &[Letter]) -> Morphism {
    assert!(n >= 1, "theta needs a positive exponent");
    let mut letters = alphabet.to_vec();
    letters.push(a);
    build(&letters, |x| if x == a { Word::from(&[a]).pow(n) } else { Word::from(&[x]) })
}
