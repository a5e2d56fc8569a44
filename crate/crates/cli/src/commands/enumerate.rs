use std::thread;

use clap::ValueEnum;
use palrich::balance::{is_periodic_balanced, matches_wr_family};
use palrich::morphisms::{pi_exponents, pi_transform, psi};
use palrich::oracle::{enumerate_canonical_words, enumerate_words, ENUMERATION_LIMIT};
use palrich::palindrome_index::PalindromeIndex;
use palrich::periodic::{
    conjugates_all_rich, is_power_almost_rich, is_power_rich, periodic_defect, two_palindrome_factorizations,
    PeriodicDefect,
};
use palrich::richness::{is_rich, is_rich_via_returns, is_weakly_rich, oddities, palindromic_closure};
use palrich::words::{alphabet, is_primitive};
use palrich::{InfiniteWordSpec, Letter, Word};

use super::Options;
use crate::error::{CliError, CliResult};
use crate::report::{letter, CountRow, EnumerateReport, Envelope, FamilyHit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    /// Rich words.
    Rich,
    /// Primitive periods u, up to renaming, with u^ω weakly rich.
    WeaklyRichPeriod,
    /// Primitive periods on exactly k letters with u^ω balanced and weakly
    /// rich, each matched against the two families.
    BalancedWr,
}

/// Statements checked by `counterexample-hunt`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    /// Rich iff every complete return to a palindrome is a palindrome.
    #[value(alias = "theorem-p1")]
    CompleteReturns,
    /// u^ω rich iff u² rich iff u = pq with all conjugates rich.
    PeriodicEquivalence,
    /// Oddities never outnumber the defect.
    OddityBound,
    /// The periodic defect formula against a 6-period window.
    PeriodicDefect,
    /// π_a keeps richness.
    PiInvariance,
    /// ψ_a keeps power richness both ways and never lowers the defect.
    PsiTransfer,
    /// Palindromic closure keeps richness.
    Closure,
}

impl Theorem {
    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    /// A description of the violation at `w`, if any.
    fn violation(self, w: &Word) -> CliResult<Option<String>> {
        let periodic =
            |u: &Word, n: usize| -> CliResult<Word> { Ok(InfiniteWordSpec::periodic(u.clone())?.prefix(n)?) };
        Ok(match self {
            Theorem::CompleteReturns => {
                (is_rich(w) != is_rich_via_returns(w)).then(|| format!("{w}: the two richness tests disagree"))
            }
            Theorem::PeriodicEquivalence if !w.is_empty() => {
                let proxy = is_rich(&periodic(w, 4 * w.len())?);
                let squared = is_power_rich(w)?;
                let pq = !two_palindrome_factorizations(w).is_empty() && conjugates_all_rich(w);
                (proxy != squared || squared != pq)
                    .then(|| format!("{w}: prefix {proxy}, square {squared}, factorization {pq}"))
            }
            Theorem::OddityBound => {
                let (o, d) = (oddities(w).len(), PalindromeIndex::build(w).defect());
                (o > d).then(|| format!("{w}: {o} oddities, defect {d}"))
            }
            Theorem::PeriodicDefect if !w.is_empty() => match periodic_defect(w)? {
                PeriodicDefect::Finite(k) => {
                    let brute = PalindromeIndex::build(&periodic(w, 6 * w.len())?).defect();
                    (k != brute).then(|| format!("{w}: formula {k}, window {brute}"))
                }
                PeriodicDefect::Infinite => {
                    is_power_almost_rich(w)?.then(|| format!("{w}: infinite defect but almost rich"))
                }
            },
            Theorem::PiInvariance => {
                let rich = is_rich(w);
                let mut found = None;
                'letters: for a in alphabet(w) {
                    for hs in increasing_below(&pi_exponents(w, a)) {
                        let image = pi_transform(w, a, &hs)?;
                        if is_rich(&image) != rich {
                            found = Some(format!("{w}: π_{} gives {image}", letter(a)));
                            break 'letters;
                        }
                    }
                }
                found
            }
            Theorem::PsiTransfer if !w.is_empty() => {
                let alph: Vec<Letter> = alphabet(w).into_iter().collect();
                let mut found = None;
                for a in alph.iter().copied().chain(std::iter::once(b'z')) {
                    let mut domain = alph.clone();
                    domain.push(a);
                    let image = psi(a, &domain).apply(w)?;
                    if is_power_rich(w)? != is_power_rich(&image)? {
                        found = Some(format!("{w}: ψ_{} changes power richness", letter(a)));
                        break;
                    }
                    if let (PeriodicDefect::Finite(dt), PeriodicDefect::Finite(ds)) =
                        (periodic_defect(w)?, periodic_defect(&image)?)
                    {
                        if ds < dt {
                            found = Some(format!("{w}: ψ_{} lowers the defect from {dt} to {ds}", letter(a)));
                            break;
                        }
                    }
                }
                found
            }
            Theorem::Closure => {
                (is_rich(w) && !is_rich(&palindromic_closure(w))).then(|| format!("{w}: closure not rich"))
            }
            _ => None,
        })
    }
}

/// Every strictly increasing positive sequence bounded by `ks` termwise.
fn increasing_below(ks: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &k in ks {
        let mut next = Vec::new();
        for prefix in out {
            let lo = prefix.last().map_or(1, |&h| h + 1);
            for h in lo..=k {
                let mut v = prefix.clone();
                v.push(h);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// `f` over `items` on `jobs` threads, results in input order.
fn par_map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    if jobs <= 1 || items.len() < 2 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    thread::scope(|s| {
        let handles: Vec<_> =
            items.chunks(chunk).map(|part| s.spawn(|| part.iter().map(&f).collect::<Vec<_>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn guard(k: usize, max_len: usize) -> CliResult<()> {
    let mut total: u64 = 0;
    for n in 0..=max_len {
        total = total.saturating_add((k as u64).saturating_pow(n as u32));
    }
    if total > ENUMERATION_LIMIT {
        return Err(CliError::Usage(format!(
            "{total} words over {k} letters up to length {max_len} exceeds {ENUMERATION_LIMIT}"
        )));
    }
    Ok(())
}

fn primitive_periods(k: usize, n: usize, exactly: bool) -> CliResult<Vec<Word>> {
    Ok(enumerate_canonical_words(k, n)?
        .filter(|u| is_primitive(u).unwrap_or(false) && (!exactly || alphabet(u).len() == k))
        .collect())
}

pub fn enumerate(
    predicate: Option<Predicate>,
    theorem: Option<Theorem>,
    k: usize,
    max_len: usize,
    opts: &Options,
) -> CliResult<Envelope<EnumerateReport>> {
    guard(k, max_len)?;
    let jobs = opts.jobs.max(1);
    let mut report = EnumerateReport {
        predicate: match predicate {
            Some(p) => p.to_possible_value().expect("no skipped variants").get_name().to_string(),
            None => "counterexample-hunt".into(),
        },
        theorem: theorem.map(Theorem::name),
        alphabet_size: k,
        max_len,
        rows: Vec::new(),
        matches: Vec::new(),
        unmatched: Vec::new(),
        counterexample: None,
    };
    for n in 0..=max_len {
        let (candidates, hits) = match (predicate, theorem) {
            (Some(Predicate::Rich), _) => {
                let words: Vec<Word> = enumerate_words(k, n)?.collect();
                let hits = par_map(&words, jobs, |w| is_rich(w)).into_iter().filter(|&b| b).count();
                (words.len(), hits)
            }
            (Some(Predicate::WeaklyRichPeriod), _) if n > 0 => {
                let periods = primitive_periods(k, n, false)?;
                let hits = par_map(&periods, jobs, |u| is_weakly_rich(&u.pow(3))).into_iter().filter(|&b| b).count();
                (periods.len(), hits)
            }
            (Some(Predicate::BalancedWr), _) if n > 0 => {
                let periods = primitive_periods(k, n, true)?;
                let flags = par_map(&periods, jobs, |u| -> CliResult<bool> {
                    Ok(is_periodic_balanced(u)? && is_weakly_rich(&u.pow(3)))
                });
                let mut hits = 0;
                for (u, flag) in periods.iter().zip(flags) {
                    if !flag? {
                        continue;
                    }
                    hits += 1;
                    if k < 3 {
                        continue;
                    }
                    match matches_wr_family(u)? {
                        Some(m) => report.matches.push(FamilyHit {
                            period: u.to_string(),
                            family: m.spec.to_string(),
                            permutation: m.permutation.iter().map(|(&a, &b)| (letter(a), letter(b))).collect(),
                            shift: m.shift,
                        }),
                        None => report.unmatched.push(u.to_string()),
                    }
                }
                (periods.len(), hits)
            }
            (None, Some(t)) => {
                let words: Vec<Word> = enumerate_words(k, n)?.collect();
                let found = par_map(&words, jobs, |w| t.violation(w));
                let mut hits = 0;
                for v in found {
                    if let Some(msg) = v? {
                        hits += 1;
                        report.counterexample.get_or_insert(msg);
                    }
                }
                (words.len(), hits)
            }
            _ => continue,
        };
        report.rows.push(CountRow { length: n, candidates, hits });
        if report.counterexample.is_some() {
            break;
        }
    }
    Ok(Envelope::new(None, report))
}
