use palrich::balance::{fraenkel_word, wr_family_word, WRFamilySpec};
use palrich::richness::iterated_palindromic_closure;
use palrich::{InfiniteWordSpec, Letter, Morphism, Word};

use crate::error::{CliError, CliResult};
use crate::report::{Envelope, GenerateReport};

/// Longest prefix `generate` will build.
pub const MAX_GENERATED: usize = 10_000_000;

fn check_len(n: usize) -> CliResult<()> {
    if n > MAX_GENERATED {
        return Err(CliError::Usage(format!("length {n} exceeds {MAX_GENERATED}")));
    }
    Ok(())
}

fn report(kind: String, word: Word, window: Option<usize>) -> Envelope<GenerateReport> {
    Envelope::new(window, GenerateReport { kind, length: word.len(), word: word.to_string() })
}

pub fn prefix(spec: &InfiniteWordSpec, n: usize) -> CliResult<Envelope<GenerateReport>> {
    check_len(n)?;
    Ok(report(spec.to_string(), spec.prefix(n)?, Some(n)))
}

pub fn fraenkel(k: usize) -> CliResult<Envelope<GenerateReport>> {
    Ok(report(format!("fraenkel {k}"), fraenkel_word(k)?, None))
}

/// The iterated palindromic closure of `directive`, or, with `n`, the
/// length-`n` prefix of the episturmian word directed by `directive^ω`.
pub fn episturmian(directive: &Word, n: Option<usize>) -> CliResult<Envelope<GenerateReport>> {
    if directive.is_empty() {
        return Err(CliError::Usage("empty directive".into()));
    }
    let kind = format!("episturmian {directive}");
    let Some(n) = n else {
        return Ok(report(kind, iterated_palindromic_closure(directive), None));
    };
    check_len(n)?;
    let mut d = directive.clone();
    let mut w = iterated_palindromic_closure(&d);
    while w.len() < n {
        d.extend_from_slice(directive);
        w = iterated_palindromic_closure(&d);
    }
    w.truncate(n);
    Ok(report(kind, w, Some(n)))
}

/// The period of a balanced weakly rich family word.
pub fn wr_family(spec: WRFamilySpec) -> CliResult<Envelope<GenerateReport>> {
    let word = wr_family_word(spec)?;
    let period = word.period().expect("family words are periodic").clone();
    Ok(report(spec.to_string(), period, None))
}

pub fn fixed_point(m: &Morphism, seed: Letter, n: usize) -> CliResult<Envelope<GenerateReport>> {
    prefix(&InfiniteWordSpec::morphic(m.clone(), seed)?, n)
}
