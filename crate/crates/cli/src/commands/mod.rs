mod analyze;
mod enumerate;
mod morphism;

use std::io::Write;

use palrich::balance::{balance_witness, gap_profile, periodic_balance_witness, FrequencyTable};
use palrich::periodic::{is_power_almost_rich, is_power_rich, periodic_defect};
use palrich::richness::complete_returns;
use palrich::words::{alphabet, primitive_root};
use palrich::{InfiniteWordSpec, Word};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::input::Input;
use crate::report::{letter, BalanceReport, Envelope, PeriodicReport, Render, ReturnDto, ReturnsReport};

pub use analyze::analyze;
pub use enumerate::{enumerate, Predicate, Theorem};
pub use morphism::{apply, classify_p, fixed_point_class, iterate, preserves, special_test};

pub mod generate;

/// The global flags.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub json: bool,
    pub oracle: bool,
    pub window: Option<usize>,
    pub jobs: usize,
}

/// Writes each report as one JSON line or as text.
pub struct Printer<W: Write> {
    pub json: bool,
    pub out: W,
}

impl<W: Write> Printer<W> {
    pub fn emit<T: Serialize + Render>(&mut self, envelope: &Envelope<T>) -> CliResult<()> {
        let text = if self.json {
            let mut line = serde_json::to_string(envelope).map_err(|e| CliError::Inconsistent(e.to_string()))?;
            line.push('\n');
            line
        } else {
            envelope.body.render()
        };
        self.out.write_all(text.as_bytes())?;
        Ok(())
    }
}

pub fn periodic_verdict(u: &Word) -> CliResult<PeriodicReport> {
    Ok(PeriodicReport {
        word: u.to_string(),
        primitive_root: primitive_root(u)?.0.to_string(),
        power_rich: is_power_rich(u)?,
        power_almost_rich: is_power_almost_rich(u)?,
        defect: periodic_defect(u)?.into(),
    })
}

pub fn balance(input: &Input, opts: &Options) -> CliResult<Envelope<BalanceReport>> {
    let (w, window) = input.expand(opts.window)?;
    let (witness, freq_source, gap_source) = match input {
        Input::Spec(InfiniteWordSpec::Periodic { period }) => {
            (periodic_balance_witness(period)?, period.clone(), period.pow(3))
        }
        _ => (balance_witness(&w), w.clone(), w.clone()),
    };
    let gaps = alphabet(&gap_source)
        .into_iter()
        .map(|x| (letter(x), gap_profile(&gap_source, x).gaps.into_iter().collect()))
        .collect();
    let frequencies = if freq_source.is_empty() {
        Default::default()
    } else {
        FrequencyTable::of_period(&freq_source)?
            .frequencies
            .into_iter()
            .map(|(x, f)| (letter(x), f.to_string()))
            .collect()
    };
    let window = match input {
        Input::Spec(InfiniteWordSpec::Periodic { .. }) => None,
        _ => window,
    };
    Ok(Envelope::new(
        window,
        BalanceReport {
            input: input.to_string(),
            balanced: witness.is_none(),
            witness: witness.as_ref().map(Into::into),
            gaps,
            frequencies,
        },
    ))
}

/// Complete returns to `factor`, or to every letter when it is absent.
pub fn returns(input: &Input, factor: Option<&Word>, opts: &Options) -> CliResult<Envelope<ReturnsReport>> {
    let (w, window) = input.expand(opts.window)?;
    let factors: Vec<Word> = match factor {
        Some(u) => vec![u.clone()],
        None => alphabet(&w).into_iter().map(|x| Word::from(&[x])).collect(),
    };
    let mut list = Vec::new();
    for u in &factors {
        list.extend(complete_returns(&w, u)?.iter().map(ReturnDto::from));
    }
    Ok(Envelope::new(
        window,
        ReturnsReport {
            input: input.to_string(),
            factors: factors.iter().map(ToString::to_string).collect(),
            all_palindromic: list.iter().all(|r| r.palindromic),
            returns: list,
        },
    ))
}
