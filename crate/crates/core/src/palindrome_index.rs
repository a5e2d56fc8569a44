//! Incremental index of the distinct palindromic factors of a word.
//!
//! This is an eertree (palindromic tree): one node per distinct non-empty
//! palindrome, plus two roots of length `-1` and `0`. Reading the word left to
//! right, position `i` creates at most one node, and it creates one exactly
//! when the longest palindromic suffix of the length-`i` prefix is
//! unioccurrent in that prefix. That flag is what richness, defects and ups
//! queries are built on.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

const IMAGINARY_ROOT: usize = 0;
const EMPTY_ROOT: usize = 1;

#[derive(Debug, Clone)]
struct Node {
    len: isize,
    link: usize,
    children: Vec<(Letter, usize)>,
    /// 1-based end position of the first occurrence.
    first_end: usize,
    occurrences: usize,
}

impl Node {
    fn child(&self, a: Letter) -> Option<usize> {
        self.children.iter().find(|(x, _)| *x == a).map(|&(_, v)| v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct PositionInfo {
    longest_suffix: usize,
    created: bool,
}

#[derive(Debug, Clone)]
pub struct PalindromeIndex {
    word: Word,
    nodes: Vec<Node>,
    positions: Vec<PositionInfo>,
}

/// Palindromic and factor complexity at one length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexityProfile {
    pub n: usize,
    /// `P(n)`: distinct palindromic factors of length `n`.
    pub palindromes: usize,
    /// `C(n)`: distinct factors of length `n`.
    pub factors: usize,
}

impl PalindromeIndex {
    pub fn build(w: &[Letter]) -> Self {
        let root = |len, first_end| Node { len, link: IMAGINARY_ROOT, children: Vec::new(), first_end, occurrences: 0 };
        let mut nodes = alloc::vec![root(-1, 0), root(0, 0)];
        let mut positions = Vec::with_capacity(w.len());
        let mut last = EMPTY_ROOT;

        let extendable = |nodes: &[Node], mut v: usize, i: usize| -> usize {
            loop {
                let before = i as isize - 1 - nodes[v].len;
                if before >= 0 && w[before as usize] == w[i] {
                    return v;
                }
                v = nodes[v].link;
            }
        };

        for i in 0..w.len() {
            let a = w[i];
            let parent = extendable(&nodes, last, i);
            let created = match nodes[parent].child(a) {
                Some(v) => {
                    last = v;
                    false
                }
                None => {
                    let len = nodes[parent].len + 2;
                    let link = if len == 1 {
                        EMPTY_ROOT
                    } else {
                        let t = extendable(&nodes, nodes[parent].link, i);
                        nodes[t].child(a).expect("suffix palindrome already indexed")
                    };
                    nodes.push(Node { len, link, children: Vec::new(), first_end: i + 1, occurrences: 0 });
                    let v = nodes.len() - 1;
                    nodes[parent].children.push((a, v));
                    last = v;
                    true
                }
            };
            nodes[last].occurrences += 1;
            positions.push(PositionInfo { longest_suffix: last, created });
        }

        // Nodes are created in order of first occurrence, so links always point
        // to earlier nodes: one reverse sweep finalizes the counts.
        for v in (2..nodes.len()).rev() {
            let link = nodes[v].link;
            if link >= 2 {
                nodes[link].occurrences += nodes[v].occurrences;
            }
        }

        PalindromeIndex { word: Word::from(w), nodes, positions }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Distinct non-empty palindromic factors.
    pub fn node_count(&self) -> usize {
        self.nodes.len() - 2
    }

    /// `|PAL(w)|`, counting the empty word.
    pub fn distinct_palindrome_count(&self) -> usize {
        self.node_count() + 1
    }

    /// `D(w) = |w| + 1 − |PAL(w)|`.
    pub fn defect(&self) -> usize {
        self.word.len() + 1 - self.distinct_palindrome_count()
    }

    /// The non-empty palindromic factors, in order of first occurrence.
    pub fn palindromes(&self) -> impl Iterator<Item = &[Letter]> + '_ {
        self.nodes[2..].iter().map(move |v| self.slice_of(v))
    }

    fn slice_of(&self, v: &Node) -> &[Letter] {
        &self.word[v.first_end - v.len as usize..v.first_end]
    }

    fn check(&self, i: usize) -> Result<PositionInfo> {
        if i == 0 || i > self.word.len() {
            return Err(Error::PositionOutOfRange { position: i, len: self.word.len() });
        }
        Ok(self.positions[i - 1])
    }

    /// Longest palindromic suffix of the length-`i` prefix (1-based).
    pub fn longest_palindromic_suffix(&self, i: usize) -> Result<&[Letter]> {
        let info = self.check(i)?;
        let len = self.nodes[info.longest_suffix].len as usize;
        Ok(&self.word[i - len..i])
    }

    /// Whether the length-`i` prefix has a unioccurrent palindromic suffix.
    pub fn has_ups(&self, i: usize) -> Result<bool> {
        Ok(self.check(i)?.created)
    }

    /// The per-position "new palindrome" flags for prefixes `1..=|w|`.
    pub fn ups_flags(&self) -> impl Iterator<Item = bool> + '_ {
        self.positions.iter().map(|p| p.created)
    }

    /// Number of occurrences of `p` in the word (0 when `p` is not a
    /// palindromic factor).
    pub fn occurrence_count(&self, p: &[Letter]) -> usize {
        if p.is_empty() {
            return self.word.len() + 1;
        }
        let half = p.len() / 2;
        let (mut v, walk) = if p.len() % 2 == 1 { (IMAGINARY_ROOT, &p[..=half]) } else { (EMPTY_ROOT, &p[..half]) };
        for &a in walk.iter().rev() {
            match self.nodes[v].child(a) {
                Some(c) => v = c,
                None => return 0,
            }
        }
        if self.slice_of(&self.nodes[v]) != p {
            return 0;
        }
        self.nodes[v].occurrences
    }

    /// `P(n)`, with `P(0) = 1`.
    pub fn palindromes_of_length(&self, n: usize) -> usize {
        if n == 0 {
            return 1;
        }
        self.nodes[2..].iter().filter(|v| v.len as usize == n).count()
    }

    /// `C(n)`, with `C(0) = 1`. Hashes every window, which is fine at the
    /// sizes this crate targets.
    pub fn factor_count(&self, n: usize) -> usize {
        match n {
            0 => 1,
            n if n > self.word.len() => 0,
            n => self.word.windows(n).collect::<BTreeSet<_>>().len(),
        }
    }

    pub fn complexity(&self, n: usize) -> ComplexityProfile {
        ComplexityProfile { n, palindromes: self.palindromes_of_length(n), factors: self.factor_count(n) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infinite::InfiniteWordSpec;

    #[test]
    fn distinct_counts() {
        assert_eq!(PalindromeIndex::build(b"aaa").distinct_palindrome_count(), 4);
        assert_eq!(PalindromeIndex::build(b"").distinct_palindrome_count(), 1);
        assert_eq!(PalindromeIndex::build(b"abc").distinct_palindrome_count(), 4);
        assert_eq!(PalindromeIndex::build(b"abbabaabba").defect(), 2);
    }

    #[test]
    fn longest_suffixes() {
        let idx = PalindromeIndex::build(b"abbab");
        assert_eq!(idx.longest_palindromic_suffix(5).unwrap(), b"bab");
        let idx = PalindromeIndex::build(b"aab");
        assert_eq!(idx.longest_palindromic_suffix(3).unwrap(), b"b");
        let idx = PalindromeIndex::build(b"aa");
        assert_eq!(idx.longest_palindromic_suffix(2).unwrap(), b"aa");
        assert_eq!(idx.longest_palindromic_suffix(3), Err(Error::PositionOutOfRange { position: 3, len: 2 }));
        assert!(idx.longest_palindromic_suffix(0).is_err());
    }

    #[test]
    fn ups_queries() {
        let idx = PalindromeIndex::build(b"abbabaabba");
        assert!(!idx.has_ups(10).unwrap());
        let idx = PalindromeIndex::build(b"aab");
        assert!(idx.has_ups(3).unwrap());
        assert!(idx.has_ups(1).unwrap());
        assert!(idx.has_ups(4).is_err());
    }

    #[test]
    fn complexity_examples() {
        let idx = PalindromeIndex::build(b"aabaa");
        assert_eq!(idx.complexity(2), ComplexityProfile { n: 2, palindromes: 1, factors: 3 });
        assert_eq!(idx.complexity(0), ComplexityProfile { n: 0, palindromes: 1, factors: 1 });
        let fib = InfiniteWordSpec::fibonacci().prefix(30).unwrap();
        let idx = PalindromeIndex::build(&fib);
        assert_eq!(idx.complexity(3), ComplexityProfile { n: 3, palindromes: 2, factors: 4 });
    }

    #[test]
    fn occurrence_counts() {
        let idx = PalindromeIndex::build(b"abaababa");
        assert_eq!(idx.occurrence_count(b"aba"), 3);
        assert_eq!(idx.occurrence_count(b"a"), 5);
        assert_eq!(idx.occurrence_count(b"aa"), 1);
        assert_eq!(idx.occurrence_count(b"bab"), 1);
        assert_eq!(idx.occurrence_count(b"bb"), 0);
        assert_eq!(idx.occurrence_count(b"ab"), 0);
    }

    #[test]
    fn palindromes_listed_in_first_occurrence_order() {
        let idx = PalindromeIndex::build(b"abaab");
        let list: alloc::vec::Vec<_> = idx.palindromes().collect();
        assert_eq!(list, [&b"a"[..], b"b", b"aba", b"aa", b"baab"]);
    }
}
