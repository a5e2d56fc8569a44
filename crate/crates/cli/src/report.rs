//! Serializable reports. Every command prints an [`Envelope`] around one of
//! these, either as a JSON line or as text.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use palrich::balance::BalanceWitness;
use palrich::morphisms::{QPart, StandardPMorphism};
use palrich::periodic::PeriodicDefect;
use palrich::richness::{CompleteReturn, Oddity};
use palrich::words::is_palindrome;
use palrich::Letter;
use serde::{Deserialize, Serialize};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn letter(x: Letter) -> String {
    char::from(x).to_string()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub version: String,
    /// Prefix length analyzed when the input was an infinite word.
    pub window: Option<usize>,
    #[serde(flatten)]
    pub body: T,
}

impl<T> Envelope<T> {
    pub fn new(window: Option<usize>, body: T) -> Self {
        Envelope { version: VERSION.to_string(), window, body }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unbounded {
    Infinite,
}

/// A defect written as a number, or as the string `"infinite"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DefectValue {
    Finite(usize),
    Infinite(Unbounded),
}

impl From<PeriodicDefect> for DefectValue {
    fn from(d: PeriodicDefect) -> Self {
        match d {
            PeriodicDefect::Finite(k) => DefectValue::Finite(k),
            PeriodicDefect::Infinite => DefectValue::Infinite(Unbounded::Infinite),
        }
    }
}

impl std::fmt::Display for DefectValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DefectValue::Finite(k) => write!(f, "{k}"),
            DefectValue::Infinite(_) => f.write_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddityDto {
    pub representative: String,
    pub palindrome: String,
    pub end_position: usize,
}

impl From<&Oddity> for OddityDto {
    fn from(o: &Oddity) -> Self {
        OddityDto {
            representative: o.representative.to_string(),
            palindrome: o.incriminated_palindrome.to_string(),
            end_position: o.end_position,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReturnDto {
    pub factor: String,
    pub return_word: String,
    pub start: usize,
    pub end: usize,
    pub palindromic: bool,
}

impl From<&CompleteReturn> for ReturnDto {
    fn from(r: &CompleteReturn) -> Self {
        ReturnDto {
            factor: r.factor.to_string(),
            return_word: r.return_word.to_string(),
            start: r.start,
            end: r.end(),
            palindromic: is_palindrome(&r.return_word),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceWitnessDto {
    pub u: String,
    pub v: String,
    pub letter: String,
}

impl From<&BalanceWitness> for BalanceWitnessDto {
    fn from(w: &BalanceWitness) -> Self {
        BalanceWitnessDto { u: w.u.to_string(), v: w.v.to_string(), letter: letter(w.letter) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityRow {
    pub n: usize,
    #[serde(rename = "P")]
    pub palindromes: usize,
    #[serde(rename = "C")]
    pub factors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicReport {
    pub word: String,
    pub primitive_root: String,
    pub power_rich: bool,
    pub power_almost_rich: bool,
    pub defect: DefectValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: String,
    pub word: String,
    pub length: usize,
    pub palindrome_count: usize,
    pub is_rich: bool,
    pub defect: usize,
    pub defective_positions: Vec<usize>,
    pub oddities: Vec<OddityDto>,
    pub weakly_rich: bool,
    pub weak_witness: Option<ReturnDto>,
    pub balanced: bool,
    pub balance_witness: Option<BalanceWitnessDto>,
    pub complexity: Vec<ComplexityRow>,
    pub periodic: Option<PeriodicReport>,
    pub oracle_checked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceReport {
    pub input: String,
    pub balanced: bool,
    pub witness: Option<BalanceWitnessDto>,
    pub gaps: BTreeMap<String, Vec<usize>>,
    /// Exact letter frequencies as `p/q`, over the primitive period for
    /// periodic inputs and over the word otherwise.
    pub frequencies: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReturnsReport {
    pub input: String,
    pub factors: Vec<String>,
    pub returns: Vec<ReturnDto>,
    pub all_palindromic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerateReport {
    pub kind: String,
    pub word: String,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub length: usize,
    pub candidates: usize,
    pub hits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyHit {
    pub period: String,
    pub family: String,
    pub permutation: BTreeMap<String, String>,
    pub shift: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub predicate: String,
    pub theorem: Option<String>,
    pub alphabet_size: usize,
    pub max_len: usize,
    pub rows: Vec<CountRow>,
    pub matches: Vec<FamilyHit>,
    pub unmatched: Vec<String>,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QDto {
    Appended(String),
    Trimmed(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDto {
    pub p: String,
    pub q: BTreeMap<String, QDto>,
    pub shift: usize,
}

impl From<&StandardPMorphism> for CertificateDto {
    fn from(c: &StandardPMorphism) -> Self {
        let q =
            c.q.iter()
                .map(|(&x, part)| {
                    let part = match part {
                        QPart::Appended(w) => QDto::Appended(w.to_string()),
                        QPart::Trimmed(k) => QDto::Trimmed(*k),
                    };
                    (letter(x), part)
                })
                .collect();
        CertificateDto { p: c.p.to_string(), q, shift: c.shift }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub morphism: String,
    pub class_p: bool,
    /// `p`, `q` and `shift`, present when `class_p` holds.
    #[serde(flatten)]
    pub certificate: Option<CertificateDto>,
    pub standard: bool,
    pub special: bool,
    /// Word length `B` of the synchronization check, when it ran.
    pub special_bound: Option<usize>,
    pub distinct_last_letters: Option<bool>,
    pub synchronized: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixedPointClassDto {
    Rich,
    InfiniteDefect,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialReport {
    pub morphism: String,
    pub input: String,
    pub h: usize,
    pub prefix: String,
    pub image: String,
    pub rich: bool,
    pub class: FixedPointClassDto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismReport {
    pub morphism: String,
    pub operation: String,
    pub input: String,
    pub word: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreservesReport {
    pub morphism: String,
    pub max_len: usize,
    pub rich_words_checked: usize,
    pub preserves: bool,
    pub counterexamples: Vec<String>,
}

/// Plain-text rendering.
pub trait Render {
    fn render(&self) -> String;
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `n,P,C` rows with a header line.
pub fn complexity_csv(rows: &[ComplexityRow]) -> String {
    let mut out = csv::Writer::from_writer(Vec::new());
    for row in rows {
        out.serialize(row).expect("in-memory write");
    }
    String::from_utf8(out.into_inner().expect("in-memory flush")).expect("ascii")
}

impl Render for PeriodicReport {
    fn render(&self) -> String {
        format!(
            "word: {}\nprimitive root: {}\npower rich: {}\npower almost rich: {}\ndefect: {}\n",
            self.word,
            self.primitive_root,
            yes(self.power_rich),
            yes(self.power_almost_rich),
            self.defect
        )
    }
}

impl Render for AnalysisReport {
    fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "input: {}", self.input);
        if self.word.len() <= 80 {
            let _ = writeln!(s, "word: {}", self.word);
        }
        let _ = writeln!(s, "length: {}", self.length);
        let _ = writeln!(s, "palindromes: {}", self.palindrome_count);
        let _ = writeln!(s, "rich: {}", yes(self.is_rich));
        let _ = writeln!(s, "defect: {}", self.defect);
        if !self.defective_positions.is_empty() {
            let _ = writeln!(s, "defective positions: {}", list(&self.defective_positions));
        }
        let _ = writeln!(s, "oddities: {}", self.oddities.len());
        for o in &self.oddities {
            let _ = writeln!(s, "  {} (palindrome {}, ends at {})", o.representative, o.palindrome, o.end_position);
        }
        let _ = writeln!(s, "weakly rich: {}", yes(self.weakly_rich));
        if let Some(r) = &self.weak_witness {
            let _ = writeln!(s, "  witness {} at {}..{}", r.return_word, r.start, r.end);
        }
        let _ = writeln!(s, "balanced: {}", yes(self.balanced));
        if let Some(w) = &self.balance_witness {
            let _ = writeln!(s, "  witness {} / {} on {}", w.u, w.v, w.letter);
        }
        if let Some(p) = &self.periodic {
            let _ = writeln!(
                s,
                "periodic: root {}, power rich {}, power almost rich {}, defect {}",
                p.primitive_root,
                yes(p.power_rich),
                yes(p.power_almost_rich),
                p.defect
            );
        }
        if self.oracle_checked {
            s.push_str("oracle: agrees\n");
        }
        if !self.complexity.is_empty() {
            s.push_str(&complexity_csv(&self.complexity));
        }
        s
    }
}

impl Render for BalanceReport {
    fn render(&self) -> String {
        let mut s = format!("input: {}\nbalanced: {}\n", self.input, yes(self.balanced));
        if let Some(w) = &self.witness {
            let _ = writeln!(s, "witness: {} / {} on {}", w.u, w.v, w.letter);
        }
        for (x, gaps) in &self.gaps {
            let _ = writeln!(s, "gaps {x}: {}", list(gaps));
        }
        for (x, f) in &self.frequencies {
            let _ = writeln!(s, "frequency {x}: {f}");
        }
        s
    }
}

impl Render for ReturnsReport {
    fn render(&self) -> String {
        let mut s = String::new();
        for r in &self.returns {
            let mark = if r.palindromic { "" } else { "  not a palindrome" };
            let _ = writeln!(s, "{} -> {} at {}..{}{mark}", r.factor, r.return_word, r.start, r.end);
        }
        let _ = writeln!(s, "{} complete returns, all palindromic: {}", self.returns.len(), yes(self.all_palindromic));
        s
    }
}

impl Render for GenerateReport {
    fn render(&self) -> String {
        format!("{}\n", self.word)
    }
}

impl Render for EnumerateReport {
    fn render(&self) -> String {
        let mut s = String::new();
        let what = self.theorem.as_deref().unwrap_or(&self.predicate);
        let _ = writeln!(s, "{what} over {} letters, lengths up to {}", self.alphabet_size, self.max_len);
        for r in &self.rows {
            let _ = writeln!(s, "length {:>3}: {} of {}", r.length, r.hits, r.candidates);
        }
        for m in &self.matches {
            let _ = writeln!(s, "{} matches {} with shift {}", m.period, m.family, m.shift);
        }
        for u in &self.unmatched {
            let _ = writeln!(s, "{u} matches no family");
        }
        if self.predicate == "counterexample-hunt" {
            match &self.counterexample {
                Some(c) => {
                    let _ = writeln!(s, "counterexample: {c}");
                }
                None => s.push_str("none found\n"),
            }
        }
        s
    }
}

impl Render for ClassifyReport {
    fn render(&self) -> String {
        let mut s = format!("morphism: {}\nclass P: {}\n", self.morphism, yes(self.class_p));
        if let Some(c) = &self.certificate {
            let _ = writeln!(s, "p: {:?}", c.p);
            for (x, q) in &c.q {
                let _ = match q {
                    QDto::Appended(w) => writeln!(s, "q_{x}: appended {w:?}"),
                    QDto::Trimmed(k) => writeln!(s, "q_{x}: trimmed {k}"),
                };
            }
            let _ = writeln!(s, "shift: {}", c.shift);
            let _ = writeln!(s, "standard: {}", yes(self.standard));
            let _ = writeln!(s, "special: {}", yes(self.special));
            if let Some(b) = self.special_bound {
                let _ = writeln!(s, "synchronization bound: {b}");
            }
        }
        s
    }
}

impl Render for SpecialReport {
    fn render(&self) -> String {
        let class = match self.class {
            FixedPointClassDto::Rich => "rich",
            FixedPointClassDto::InfiniteDefect => "infinite defect",
        };
        format!(
            "morphism: {}\ninput: {}\nh: {} ({})\nimage: {}\nrich: {}\nclass: {class}\n",
            self.morphism,
            self.input,
            self.h,
            self.prefix,
            self.image,
            yes(self.rich)
        )
    }
}

impl Render for MorphismReport {
    fn render(&self) -> String {
        format!("{}\n", self.word)
    }
}

impl Render for PreservesReport {
    fn render(&self) -> String {
        let mut s = format!(
            "morphism: {}\nrich words checked: {} (length <= {})\npreserves richness: {}\n",
            self.morphism,
            self.rich_words_checked,
            self.max_len,
            yes(self.preserves)
        );
        if !self.counterexamples.is_empty() {
            let _ = writeln!(s, "counterexamples: {}", list(&self.counterexamples));
        }
        s
    }
}
