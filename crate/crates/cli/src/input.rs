//! Word literals, `@file` lists and the infinite-word mini-language.

use std::fmt;
use std::fs;

use palrich::{InfiniteWordSpec, Letter, Morphism, Word};

use crate::error::{CliError, CliResult};

/// Default prefix length analyzed for morphic fixed points.
pub const MORPHIC_WINDOW: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Word(Word),
    Spec(InfiniteWordSpec),
}

impl Input {
    /// The analyzed finite word and the window it came from, if any.
    pub fn expand(&self, window: Option<usize>) -> CliResult<(Word, Option<usize>)> {
        match self {
            Input::Word(w) => Ok((w.clone(), None)),
            Input::Spec(s) => {
                let n = window.or_else(|| s.canonical_window()).unwrap_or(MORPHIC_WINDOW);
                Ok((s.prefix(n)?, Some(n)))
            }
        }
    }
}

impl fmt::Display for Input {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Input::Word(w) => write!(f, "{w}"),
            Input::Spec(s) => write!(f, "{s}"),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn parse_word(s: &str) -> CliResult<Word> {
    Word::parse(s).map_err(|e| usage(format!("word {s:?}: {e}")))
}

pub fn parse_letter(s: &str) -> CliResult<Letter> {
    match s.as_bytes() {
        [x] if x.is_ascii_alphanumeric() => Ok(*x),
        _ => Err(usage(format!("{s:?} is not a single letter"))),
    }
}

/// `a=baa,b=baba`.
pub fn parse_morphism(s: &str) -> CliResult<Morphism> {
    let mut images = Vec::new();
    for part in s.split(',') {
        let (x, w) =
            part.split_once('=').ok_or_else(|| usage(format!("morphism {s:?}: expected letter=word, got {part:?}")))?;
        let x = parse_letter(x.trim())?;
        if images.iter().any(|(y, _)| *y == x) {
            return Err(usage(format!("morphism {s:?}: {} given twice", char::from(x))));
        }
        images.push((x, parse_word(w.trim())?));
    }
    Morphism::new(images).map_err(|e| usage(format!("morphism {s:?}: {e}")))
}

/// `periodic:<w>`, `evper:<pre>|<w>` or `morphic:<a>=<w>,...;seed=<a>`.
pub fn parse_spec(s: &str) -> CliResult<InfiniteWordSpec> {
    let bad = |e: palrich::Error| usage(format!("spec {s:?}: {e}"));
    if let Some(rest) = s.strip_prefix("periodic:") {
        InfiniteWordSpec::periodic(parse_word(rest)?).map_err(bad)
    } else if let Some(rest) = s.strip_prefix("evper:") {
        let (pre, per) =
            rest.split_once('|').ok_or_else(|| usage(format!("spec {s:?}: expected evper:<pre>|<word>")))?;
        InfiniteWordSpec::eventually_periodic(parse_word(pre)?, parse_word(per)?).map_err(bad)
    } else if let Some(rest) = s.strip_prefix("morphic:") {
        let (images, seed) = rest
            .rsplit_once(";seed=")
            .ok_or_else(|| usage(format!("spec {s:?}: expected morphic:<images>;seed=<letter>")))?;
        InfiniteWordSpec::morphic(parse_morphism(images)?, parse_letter(seed)?).map_err(bad)
    } else {
        Err(usage(format!("{s:?} is not a spec (periodic:, evper: or morphic:)")))
    }
}

/// A spec when the text has a mini-language prefix, otherwise a word.
pub fn parse_input(s: &str) -> CliResult<Input> {
    if s.contains(':') {
        parse_spec(s).map(Input::Spec)
    } else {
        parse_word(s).map(Input::Word)
    }
}

/// Replaces every `@path` argument by the non-blank lines of the file.
pub fn expand_args(args: &[String]) -> CliResult<Vec<String>> {
    let mut out = Vec::new();
    for a in args {
        match a.strip_prefix('@') {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
                out.extend(text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from));
            }
            None => out.push(a.clone()),
        }
    }
    if out.is_empty() {
        return Err(usage("no input words"));
    }
    Ok(out)
}
