use palrich::morphisms::{
    is_class_p, is_special, preserves_richness_empirical, special_fixed_point_class, special_rich_test,
    FixedPointClass, SpecialRichVerdict, StandardPMorphism,
};
use palrich::{InfiniteWordSpec, Letter, Morphism, Word};

use crate::error::{CliError, CliResult};
use crate::input::MORPHIC_WINDOW;
use crate::report::{
    letter, CertificateDto, ClassifyReport, Envelope, FixedPointClassDto, MorphismReport, PreservesReport,
    SpecialReport,
};

pub fn apply(m: &Morphism, w: &Word) -> CliResult<Envelope<MorphismReport>> {
    Ok(Envelope::new(
        None,
        MorphismReport {
            morphism: m.to_string(),
            operation: "apply".into(),
            input: w.to_string(),
            word: m.apply(w)?.to_string(),
        },
    ))
}

pub fn iterate(m: &Morphism, seed: Letter, steps: usize) -> CliResult<Envelope<MorphismReport>> {
    Ok(Envelope::new(
        None,
        MorphismReport {
            morphism: m.to_string(),
            operation: format!("iterate {steps}"),
            input: letter(seed),
            word: m.iterate(seed, steps)?.to_string(),
        },
    ))
}

pub fn classify_p(m: &Morphism) -> CliResult<Envelope<ClassifyReport>> {
    let cert = is_class_p(m);
    let check = match &cert {
        Some(c) if c.is_standard() => Some(is_special(m, c)?),
        _ => None,
    };
    Ok(Envelope::new(
        None,
        ClassifyReport {
            morphism: m.to_string(),
            class_p: cert.is_some(),
            standard: cert.as_ref().is_some_and(StandardPMorphism::is_standard),
            certificate: cert.as_ref().map(CertificateDto::from),
            special: check.as_ref().is_some_and(|c| c.is_special()),
            special_bound: check.as_ref().filter(|c| c.distinct_last_letters).map(|c| c.bound),
            distinct_last_letters: check.as_ref().map(|c| c.distinct_last_letters),
            synchronized: check.as_ref().filter(|c| c.distinct_last_letters).map(|c| c.synchronized),
        },
    ))
}

fn certificate(m: &Morphism) -> CliResult<StandardPMorphism> {
    match is_class_p(m) {
        Some(c) if c.is_standard() => Ok(c),
        Some(_) => Err(CliError::Usage(format!("{m} is class P but not standard"))),
        None => Err(CliError::Usage(format!("{m} is not class P"))),
    }
}

fn special_report(m: &Morphism, input: String, v: SpecialRichVerdict) -> SpecialReport {
    SpecialReport {
        morphism: m.to_string(),
        input,
        h: v.h(),
        prefix: v.prefix.to_string(),
        image: v.image.to_string(),
        rich: v.rich,
        class: match v.class() {
            FixedPointClass::Rich => FixedPointClassDto::Rich,
            FixedPointClass::InfiniteDefect => FixedPointClassDto::InfiniteDefect,
        },
    }
}

/// Richness of `σ(t)` for a rich `t`, with `t` checked on `window` letters.
pub fn special_test(m: &Morphism, t: &InfiniteWordSpec, window: Option<usize>) -> CliResult<Envelope<SpecialReport>> {
    let cert = certificate(m)?;
    let window = window.or_else(|| t.canonical_window()).unwrap_or(MORPHIC_WINDOW);
    let v = special_rich_test(m, &cert, t, window)?;
    Ok(Envelope::new(Some(window), special_report(m, t.to_string(), v)))
}

pub fn fixed_point_class(m: &Morphism, seed: Letter) -> CliResult<Envelope<SpecialReport>> {
    let cert = certificate(m)?;
    let v = special_fixed_point_class(m, &cert, seed)?;
    Ok(Envelope::new(None, special_report(m, letter(seed), v)))
}

/// Maximum number of counterexamples listed.
const LISTED: usize = 50;

pub fn preserves(m: &Morphism, max_len: usize) -> CliResult<Envelope<PreservesReport>> {
    let alphabet: Vec<Letter> = m.domain().collect();
    let sweep = preserves_richness_empirical(m, max_len, &alphabet)?;
    Ok(Envelope::new(
        None,
        PreservesReport {
            morphism: m.to_string(),
            max_len,
            rich_words_checked: sweep.rich_words_checked,
            preserves: sweep.preserves(),
            counterexamples: sweep.counterexamples.iter().take(LISTED).map(ToString::to_string).collect(),
        },
    ))
}
