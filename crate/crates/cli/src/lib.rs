//! The `palrich` command line: argument parsing, input formats, reports.

pub mod commands;
pub mod error;
pub mod input;
pub mod report;

use std::io::Write;
use std::num::NonZeroUsize;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use palrich::balance::WRFamilySpec;

use commands::{generate, Options, Predicate, Printer, Theorem};
use error::{CliError, CliResult};
use input::{expand_args, parse_input, parse_letter, parse_morphism, parse_spec, parse_word, Input};
use report::Envelope;

#[derive(Debug, Parser)]
#[command(name = "palrich", version, about = "Palindromic richness of words, periodic words and morphic words")]
pub struct Cli {
    /// One JSON object per report, one per line.
    #[arg(long, global = true)]
    pub json: bool,
    /// Re-check `analyze` results with the brute-force oracle.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Prefix length analyzed for infinite inputs (default: three periods
    /// after the preperiod, or 1000 letters of a fixed point).
    #[arg(long, global = true)]
    pub window: Option<NonZeroUsize>,
    /// Worker threads for `enumerate`.
    #[arg(long, global = true, default_value_t = NonZeroUsize::MIN)]
    pub jobs: NonZeroUsize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Richness, defect, oddities, weak richness and balance of words or specs.
    Analyze {
        /// Words, `periodic:`/`evper:`/`morphic:` specs, or `@file` lists.
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Also list P(n) and C(n) for n up to this length.
        #[arg(long)]
        complexity: Option<usize>,
    },
    /// Print a word.
    #[command(subcommand)]
    Generate(GenerateCmd),
    /// Exhaustive counts and counterexample searches.
    #[command(subcommand)]
    Enumerate(EnumerateCmd),
    /// Apply, iterate and classify morphisms given as `a=ab,b=a`.
    #[command(subcommand)]
    Morphism(MorphismCmd),
    /// Richness, almost richness and defect of u^ω.
    Periodic {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Balance, letter gaps and letter frequencies.
    Balance {
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Complete returns to a factor, or to every letter.
    Returns { input: String, factor: Option<String> },
}

#[derive(Debug, Subcommand)]
pub enum GenerateCmd {
    Fibonacci {
        n: usize,
    },
    ThueMorse {
        n: usize,
    },
    Tribonacci {
        n: usize,
    },
    /// F_1 = 1, F_k = F_{k-1} k F_{k-1}.
    Fraenkel {
        k: usize,
    },
    /// Iterated palindromic closure of the directive; with N, the length-N
    /// prefix of the word directed by the directive repeated.
    Episturmian {
        directive: String,
        n: Option<usize>,
    },
    /// Period of a balanced weakly rich family word: `1 K N` or `2 K J`.
    WrFamily {
        family: u8,
        k: usize,
        param: usize,
    },
    FixedPoint {
        morphism: String,
        seed: String,
        n: usize,
    },
    /// Prefix of any spec.
    Prefix {
        spec: String,
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum EnumerateCmd {
    /// Rich words per length.
    Rich { alphabet_size: usize, max_len: usize },
    /// Primitive periods, up to renaming, with u^ω weakly rich.
    WeaklyRichPeriod { alphabet_size: usize, max_len: usize },
    /// Balanced weakly rich periods on exactly K letters, matched to the families.
    BalancedWr { alphabet_size: usize, max_len: usize },
    /// First violation of a statement over all words, or "none found".
    CounterexampleHunt { theorem: Theorem, alphabet_size: usize, max_len: usize },
}

#[derive(Debug, Subcommand)]
pub enum MorphismCmd {
    Apply {
        morphism: String,
        word: String,
    },
    Iterate {
        morphism: String,
        seed: String,
        steps: usize,
    },
    /// Class P certificate, and whether it is special.
    ClassifyP {
        morphism: String,
    },
    /// Richness of σ(t) for a rich infinite word t.
    SpecialTest {
        morphism: String,
        spec: String,
    },
    /// Rich or infinite defect for the fixed point of a special morphism.
    FixedPointClass {
        morphism: String,
        seed: String,
    },
    /// Rich words up to MAX_LEN with non-rich images.
    Preserves {
        morphism: String,
        max_len: usize,
    },
}

impl Cli {
    pub fn options(&self) -> Options {
        Options {
            json: self.json,
            oracle: self.oracle,
            window: self.window.map(NonZeroUsize::get),
            jobs: self.jobs.get(),
        }
    }
}

fn inputs(args: &[String]) -> CliResult<Vec<Input>> {
    expand_args(args)?.iter().map(|s| parse_input(s)).collect()
}

fn run_generate<W: Write>(cmd: &GenerateCmd, p: &mut Printer<W>) -> CliResult<()> {
    use palrich::InfiniteWordSpec as S;
    let env = match cmd {
        GenerateCmd::Fibonacci { n } => generate::prefix(&S::fibonacci(), *n)?,
        GenerateCmd::ThueMorse { n } => generate::prefix(&S::thue_morse(), *n)?,
        GenerateCmd::Tribonacci { n } => generate::prefix(&S::tribonacci(), *n)?,
        GenerateCmd::Fraenkel { k } => generate::fraenkel(*k)?,
        GenerateCmd::Episturmian { directive, n } => generate::episturmian(&parse_word(directive)?, *n)?,
        GenerateCmd::WrFamily { family, k, param } => {
            let spec = match family {
                1 => WRFamilySpec::Family1 { k: *k, n: *param },
                2 => WRFamilySpec::Family2 { k: *k, j: *param },
                _ => return Err(CliError::Usage(format!("family {family}: expected 1 or 2"))),
            };
            generate::wr_family(spec)?
        }
        GenerateCmd::FixedPoint { morphism, seed, n } => {
            generate::fixed_point(&parse_morphism(morphism)?, parse_letter(seed)?, *n)?
        }
        GenerateCmd::Prefix { spec, n } => generate::prefix(&parse_spec(spec)?, *n)?,
    };
    p.emit(&env)
}

fn run_morphism<W: Write>(cmd: &MorphismCmd, opts: &Options, p: &mut Printer<W>) -> CliResult<()> {
    match cmd {
        MorphismCmd::Apply { morphism, word } => {
            p.emit(&commands::apply(&parse_morphism(morphism)?, &parse_word(word)?)?)
        }
        MorphismCmd::Iterate { morphism, seed, steps } => {
            p.emit(&commands::iterate(&parse_morphism(morphism)?, parse_letter(seed)?, *steps)?)
        }
        MorphismCmd::ClassifyP { morphism } => p.emit(&commands::classify_p(&parse_morphism(morphism)?)?),
        MorphismCmd::SpecialTest { morphism, spec } => {
            p.emit(&commands::special_test(&parse_morphism(morphism)?, &parse_spec(spec)?, opts.window)?)
        }
        MorphismCmd::FixedPointClass { morphism, seed } => {
            p.emit(&commands::fixed_point_class(&parse_morphism(morphism)?, parse_letter(seed)?)?)
        }
        MorphismCmd::Preserves { morphism, max_len } => {
            p.emit(&commands::preserves(&parse_morphism(morphism)?, *max_len)?)
        }
    }
}

/// Runs a parsed command line, writing reports to `out`.
pub fn run<W: Write>(cli: &Cli, out: W) -> CliResult<ExitCode> {
    let opts = cli.options();
    let mut p = Printer { json: opts.json, out };
    match &cli.command {
        Command::Analyze { inputs: args, complexity } => {
            for input in inputs(args)? {
                p.emit(&commands::analyze(&input, &opts, *complexity)?)?;
            }
        }
        Command::Generate(cmd) => run_generate(cmd, &mut p)?,
        Command::Enumerate(cmd) => {
            let (predicate, theorem, k, n) = match *cmd {
                EnumerateCmd::Rich { alphabet_size, max_len } => (Some(Predicate::Rich), None, alphabet_size, max_len),
                EnumerateCmd::WeaklyRichPeriod { alphabet_size, max_len } => {
                    (Some(Predicate::WeaklyRichPeriod), None, alphabet_size, max_len)
                }
                EnumerateCmd::BalancedWr { alphabet_size, max_len } => {
                    (Some(Predicate::BalancedWr), None, alphabet_size, max_len)
                }
                EnumerateCmd::CounterexampleHunt { theorem, alphabet_size, max_len } => {
                    (None, Some(theorem), alphabet_size, max_len)
                }
            };
            let env = commands::enumerate(predicate, theorem, k, n, &opts)?;
            p.emit(&env)?;
            if env.body.counterexample.is_some() || !env.body.unmatched.is_empty() {
                return Ok(ExitCode::from(3));
            }
        }
        Command::Morphism(cmd) => run_morphism(cmd, &opts, &mut p)?,
        Command::Periodic { words } => {
            for w in expand_args(words)? {
                let w = parse_word(&w)?;
                if w.is_empty() {
                    return Err(CliError::Usage("empty period".into()));
                }
                p.emit(&Envelope::new(None, commands::periodic_verdict(&w)?))?;
            }
        }
        Command::Balance { inputs: args } => {
            for input in inputs(args)? {
                p.emit(&commands::balance(&input, &opts)?)?;
            }
        }
        Command::Returns { input, factor } => {
            let factor = factor.as_deref().map(parse_word).transpose()?;
            p.emit(&commands::returns(&parse_input(input)?, factor.as_ref(), &opts)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
