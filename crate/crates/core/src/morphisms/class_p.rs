use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::morphisms::Morphism;
use crate::words::{is_palindrome, reverse, rotate, Letter, Word};

/// The part of a standard P image that follows `p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum QPart {
    /// `σ(x) = p·q` with `q` a palindrome, possibly empty.
    Appended(Word),
    /// `σ(x) = p·π⁻¹` with `π` the palindromic suffix of `p` of this length.
    Trimmed(usize),
}

impl fmt::Display for QPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Appended(q) => write!(f, "+{q}"),
            Self::Trimmed(k) => write!(f, "-{k}"),
        }
    }
}

/// A class P certificate: `φ(x) = p·q_x` is standard P, and the certified
/// morphism is `T^shift(φ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardPMorphism {
    pub p: Word,
    pub q: BTreeMap<Letter, QPart>,
    pub shift: usize,
}

impl StandardPMorphism {
    pub fn is_standard(&self) -> bool {
        self.shift == 0
    }

    /// Checks the structural constraints on `p`, the `q_x` and the shift.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: alloc::string::String| Err(Error::InvalidCertificate(msg));
        if !is_palindrome(&self.p) {
            return bad(format!("p = {} is not a palindrome", self.p));
        }
        if self.shift > self.p.len() {
            return bad(format!("shift {} exceeds |p| = {}", self.shift, self.p.len()));
        }
        if self.q.is_empty() {
            return bad("no letters".into());
        }
        for (&x, part) in &self.q {
            match part {
                QPart::Appended(q) if !is_palindrome(q) => {
                    return bad(format!("q_{} = {q} is not a palindrome", char::from(x)))
                }
                QPart::Appended(q) if q.is_empty() && self.p.is_empty() => {
                    return bad(format!("image of {} would be empty", char::from(x)))
                }
                QPart::Trimmed(k) if *k == 0 || *k >= self.p.len() => {
                    return bad(format!("trim {k} not a proper non-empty suffix of p"))
                }
                QPart::Trimmed(k) if !is_palindrome(&self.p[self.p.len() - k..]) => {
                    return bad(format!("suffix of p of length {k} is not a palindrome"))
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// The standard morphism `x ↦ p·q_x`.
    pub fn standard_morphism(&self) -> Result<Morphism> {
        self.validate()?;
        Morphism::new(self.q.iter().map(|(&x, part)| {
            let image = match part {
                QPart::Appended(q) => Word::concat(&[&self.p, q]),
                QPart::Trimmed(k) => Word::from(&self.p[..self.p.len() - k]),
            };
            (x, image)
        }))
    }

    /// The certified morphism, `x ↦ p''·q_x·p'` with `|p'| = shift`.
    pub fn morphism(&self) -> Result<Morphism> {
        let standard = self.standard_morphism()?;
        if self.shift == 0 {
            return Ok(standard);
        }
        let head = &self.p[..self.shift];
        Morphism::new(standard.images().iter().map(|(&x, img)| {
            let mut v = Word::concat(&[img, head]);
            v = Word::from(&v[self.shift..]);
            (x, v)
        }))
    }

    /// Whether this certificate reconstructs `m` exactly.
    pub fn certifies(&self, m: &Morphism) -> bool {
        self.morphism().is_ok_and(|r| &r == m)
    }
}

impl fmt::Display for StandardPMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}", self.p)?;
        for (&x, part) in &self.q {
            write!(f, " q_{}={part}", char::from(x))?;
        }
        write!(f, " shift={}", self.shift)
    }
}

/// Splits `image` against `p`, preferring the appended form.
fn decompose(image: &[Letter], p: &[Letter]) -> Option<QPart> {
    if image.starts_with(p) {
        let q = &image[p.len()..];
        return is_palindrome(q).then(|| QPart::Appended(Word::from(q)));
    }
    if !image.is_empty() && p.starts_with(image) {
        let k = p.len() - image.len();
        return is_palindrome(&p[image.len()..]).then_some(QPart::Trimmed(k));
    }
    None
}

/// Candidate values of `p` for a standard morphism, shortest first.
fn candidates(images: &BTreeMap<Letter, Word>) -> BTreeSet<(usize, Word)> {
    let mut out = BTreeSet::new();
    let first = images.values().next().expect("non-empty morphism");
    for n in 0..=first.len() {
        let pre = &first[..n];
        if images.values().all(|v| v.starts_with(pre)) && is_palindrome(pre) {
            out.insert((n, Word::from(pre)));
        }
    }
    let cap = 2 * images.values().map(|v| v.len()).max().unwrap_or(0) + 2;
    for v in images.values() {
        for k in 1..=v.len() {
            let p = Word::concat(&[v, &reverse(&v[..k])]);
            if is_palindrome(&p) {
                out.insert((p.len(), p));
            }
        }
        // p = v·π with π a palindromic prefix of p: p has period |v|.
        for n in v.len() + 1..=cap {
            let p: Word = v.iter().copied().cycle().take(n).collect();
            if is_palindrome(&p) {
                out.insert((n, p));
            }
        }
    }
    out
}

fn standard_certificate(images: &BTreeMap<Letter, Word>, min_p: usize) -> Option<(Word, BTreeMap<Letter, QPart>)> {
    candidates(images).into_iter().filter(|(n, _)| *n >= min_p).find_map(|(_, p)| {
        let q =
            images.iter().map(|(&x, v)| decompose(v, &p).map(|part| (x, part))).collect::<Option<BTreeMap<_, _>>>()?;
        Some((p, q))
    })
}

/// A class P certificate for `m`, trying the standard form first and then
/// each conjugation shift in turn.
pub fn is_class_p(m: &Morphism) -> Option<StandardPMorphism> {
    let images = m.images();
    let min_len = m.min_image_len();
    for shift in 0..=min_len {
        // ψ(x) = p''·q_x·p' ends with p'; un-rotate to φ(x) = p'·ψ(x)·p'⁻¹.
        let tail = {
            let v = images.values().next().expect("non-empty morphism");
            &v[v.len() - shift..]
        };
        if !images.values().all(|v| v.ends_with(tail)) {
            break;
        }
        let standard: BTreeMap<Letter, Word> = images.iter().map(|(&x, v)| (x, rotate(v, v.len() - shift))).collect();
        if let Some((p, q)) = standard_certificate(&standard, shift) {
            let cert = StandardPMorphism { p, q, shift };
            if cert.certifies(m) {
                return Some(cert);
            }
        }
    }
    None
}

/// Every palindrome `p` up to `max_p` letters over the target alphabet, tried
/// against every shift. Test oracle for [`is_class_p`].
#[doc(hidden)]
pub fn class_p_exhaustive(m: &Morphism, max_p: usize) -> bool {
    let letters: Vec<Letter> = m.target_alphabet().into_iter().collect();
    (0..=max_p).any(|n| {
        crate::words::words_over(&letters, n).filter(|p| is_palindrome(p)).any(|p| {
            (0..=n).any(|shift| {
                let q = m
                    .images()
                    .keys()
                    .map(|&x| {
                        let v = m.image(x).expect("in domain");
                        if shift > v.len() || !v.ends_with(&p[..shift]) {
                            return None;
                        }
                        let standard = rotate(v, v.len() - shift);
                        decompose(&standard, &p).map(|part| (x, part))
                    })
                    .collect::<Option<BTreeMap<_, _>>>();
                q.is_some_and(|q| StandardPMorphism { p: p.clone(), q, shift }.certifies(m))
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::psi;

    #[test]
    fn tau_is_standard() {
        let tau = Morphism::from_pairs(&[(b'a', "baa"), (b'b', "baba")]).unwrap();
        let cert = is_class_p(&tau).unwrap();
        assert_eq!(cert.p, "b");
        assert!(cert.is_standard());
        assert_eq!(cert.q[&b'a'], QPart::Appended("aa".into()));
        assert_eq!(cert.q[&b'b'], QPart::Appended("aba".into()));
    }

    #[test]
    fn tau_conjugate_is_class_p() {
        let t = Morphism::from_pairs(&[(b'a', "aab"), (b'b', "abab")]).unwrap();
        let cert = is_class_p(&t).unwrap();
        assert!(cert.certifies(&t));
    }

    #[test]
    fn psi_a_psi_b_certificate() {
        let m = psi(b'a', b"ab").compose(&psi(b'b', b"ab")).unwrap();
        let cert = is_class_p(&m).unwrap();
        assert_eq!(cert.p, "aba");
        assert_eq!(cert.q[&b'a'], QPart::Appended(Word::new()));
        assert_eq!(cert.q[&b'b'], QPart::Trimmed(1));
    }

    #[test]
    fn thue_morse_not_class_p() {
        let mu = Morphism::from_pairs(&[(b'a', "ab"), (b'b', "ba")]).unwrap();
        assert_eq!(is_class_p(&mu), None);
        assert!(!class_p_exhaustive(&mu, 8));
    }

    #[test]
    fn invalid_certificates() {
        let cert =
            StandardPMorphism { p: "ab".into(), q: BTreeMap::from([(b'a', QPart::Appended(Word::new()))]), shift: 0 };
        assert!(matches!(cert.validate(), Err(Error::InvalidCertificate(_))));
        let cert = StandardPMorphism { p: "aba".into(), q: BTreeMap::from([(b'a', QPart::Trimmed(3))]), shift: 0 };
        assert!(cert.validate().is_err());
    }
}
