use std::collections::BTreeSet;

use palrich::balance::balance_witness;
use palrich::oracle::{
    naive_balanced, naive_defective_positions, naive_oddities, naive_palindrome_set, naive_weakly_rich, CUBIC_LIMIT,
};
use palrich::palindrome_index::PalindromeIndex;
use palrich::richness::{is_rich_via_returns, oddities, richness_report, weak_richness_witness};
use palrich::{InfiniteWordSpec, Word};

use super::{periodic_verdict, Options};
use crate::error::{CliError, CliResult};
use crate::input::Input;
use crate::report::{AnalysisReport, ComplexityRow, Envelope, OddityDto};

fn divergence(what: &str, fast: impl std::fmt::Debug, naive: impl std::fmt::Debug) -> CliError {
    CliError::Inconsistent(format!("oracle divergence on {what}: fast {fast:?}, oracle {naive:?}"))
}

/// Recomputes every reported quantity with the brute-force oracle.
fn cross_check(w: &Word, r: &AnalysisReport) -> CliResult<()> {
    if w.len() > CUBIC_LIMIT {
        return Err(CliError::Usage(format!(
            "--oracle handles at most {CUBIC_LIMIT} letters, the analyzed word has {}",
            w.len()
        )));
    }
    let pal = naive_palindrome_set(w)?.len();
    if pal != r.palindrome_count {
        return Err(divergence("palindrome count", r.palindrome_count, pal));
    }
    let positions = naive_defective_positions(w)?;
    if positions != r.defective_positions {
        return Err(divergence("defective positions", &r.defective_positions, positions));
    }
    if is_rich_via_returns(w) != r.is_rich {
        return Err(divergence("richness via complete returns", r.is_rich, !r.is_rich));
    }
    let odd: BTreeSet<(String, String)> =
        r.oddities.iter().map(|o| (o.representative.clone(), o.palindrome.clone())).collect();
    let naive: BTreeSet<(String, String)> =
        naive_oddities(w)?.into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    if odd != naive {
        return Err(divergence("oddities", odd, naive));
    }
    let weak = naive_weakly_rich(w)?;
    if weak != r.weakly_rich {
        return Err(divergence("weak richness", r.weakly_rich, weak));
    }
    let balanced = naive_balanced(w)?;
    if balanced != r.balanced {
        return Err(divergence("balance", r.balanced, balanced));
    }
    Ok(())
}

pub fn analyze(input: &Input, opts: &Options, complexity: Option<usize>) -> CliResult<Envelope<AnalysisReport>> {
    let (w, window) = input.expand(opts.window)?;
    let rich = richness_report(&w, false);
    if rich.is_rich != (rich.defect == 0) || rich.defect != rich.defective_positions.len() {
        return Err(CliError::Inconsistent(format!(
            "defect {} with {} defective positions",
            rich.defect,
            rich.defective_positions.len()
        )));
    }
    let complexity = match complexity {
        Some(n) => {
            let idx = PalindromeIndex::build(&w);
            (0..=n)
                .map(|k| {
                    let c = idx.complexity(k);
                    ComplexityRow { n: c.n, palindromes: c.palindromes, factors: c.factors }
                })
                .collect()
        }
        None => Vec::new(),
    };
    let periodic = match input {
        Input::Spec(InfiniteWordSpec::Periodic { period }) => {
            let verdict = periodic_verdict(period)?;
            if w.len() >= 2 * period.len() && verdict.power_rich != rich.is_rich {
                return Err(CliError::Inconsistent(format!(
                    "power richness {} disagrees with window richness {}",
                    verdict.power_rich, rich.is_rich
                )));
            }
            Some(verdict)
        }
        _ => None,
    };
    let weak = weak_richness_witness(&w);
    let unbalanced = balance_witness(&w);
    let mut report = AnalysisReport {
        input: input.to_string(),
        word: w.to_string(),
        length: w.len(),
        palindrome_count: rich.palindrome_count,
        is_rich: rich.is_rich,
        defect: rich.defect,
        defective_positions: rich.defective_positions,
        oddities: oddities(&w).iter().map(OddityDto::from).collect(),
        weakly_rich: weak.is_none(),
        weak_witness: weak.as_ref().map(Into::into),
        balanced: unbalanced.is_none(),
        balance_witness: unbalanced.as_ref().map(Into::into),
        complexity,
        periodic,
        oracle_checked: false,
    };
    if opts.oracle {
        cross_check(&w, &report)?;
        report.oracle_checked = true;
    }
    Ok(Envelope::new(window, report))
}
