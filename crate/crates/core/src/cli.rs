//! Command-line front end. Exit codes: 0 success, 1 verification or
//! decoding failure, 2 usage error.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::balls::{deletion_ball, insertion_ball};
use crate::caps::{check_cap, Caps};
use crate::codes::{code_stats, csvt_bound_stats, enumerate_code, Codebook, CodeFamily, CsvtParams};
use crate::confusability::{classify_pair, reconstruction_bounds};
use crate::cover::{cover_size, max_independent_set_exact, redundancy_lower_bound, redundancy_lower_bound_with_ell, verify_cover};
use crate::error::{Error, Result};
use crate::reconstruct::{certify_reconstruction_code, decode, simulate_trials, ReadSet};
use crate::table1::{table1, to_human, to_tsv};
use crate::verify::{run_suite, Suite, VerifyOptions};
use crate::words::Word;

#[derive(Parser, Debug)]
#[command(name = "delrecon", version, about = "Deletion-channel reconstruction codes: balls, confusability, CSVT codes, decoding, clique-cover bounds")]
pub struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "tsv")]
    pub json: bool,
    /// Emit tab-separated values.
    #[arg(long, global = true)]
    pub tsv: bool,
    /// Accept the empty string as a word.
    #[arg(long, global = true)]
    pub allow_empty: bool,
    /// Worker threads (default: logical CPUs).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the deletion (or insertion) ball of a word, one word per line.
    Ball {
        word: String,
        #[arg(short, long, default_value_t = 1)]
        t: usize,
        #[arg(long)]
        insertion: bool,
    },
    /// Classify a pair of words by their single-deletion balls.
    Classify { x: String, y: String },
    /// Read-count bounds N1, N2 and N_P.
    Bounds {
        #[arg(short)]
        n: i64,
        #[arg(short, default_value_t = 2)]
        t: i64,
        #[arg(short = 'P')]
        period: Option<u64>,
    },
    /// Enumerate codes and report statistics.
    Code {
        #[command(subcommand)]
        command: CodeCommand,
    },
    /// Check that a code is an (n, N; D_t)-reconstruction code.
    Certify {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(short = 'N', long)]
        reads: usize,
        #[arg(short, default_value_t = 1)]
        t: usize,
    },
    /// Seeded channel simulation followed by decoding.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(short, default_value_t = 1)]
        t: usize,
        #[arg(short = 'N', long, default_value_t = 2)]
        reads: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decode a codeword from comma-separated reads.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        reads: Vec<String>,
    },
    /// Clique cover of the Type-A confusability graph.
    Cover {
        #[command(subcommand)]
        command: CoverCommand,
    },
    /// Reproduce the CSVT read-coverage and redundancy table.
    Table1,
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(value_parser = Suite::NAMES)]
        suite: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        t_max: Option<usize>,
        /// P values for csvt/decode, ℓ values for cover.
        #[arg(short = 'P', long = "param", value_delimiter = ',')]
        params: Vec<u64>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum CodeCommand {
    /// Print every codeword.
    Enum {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Size and redundancy; CSVT lengths above the enumeration cap use the
    /// counting bound.
    Stats {
        #[command(flatten)]
        code: CodeArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum CoverCommand {
    Verify {
        #[arg(short)]
        n: usize,
        #[arg(short = 'l')]
        ell: usize,
    },
    Size {
        #[arg(short)]
        n: usize,
        #[arg(short = 'l')]
        ell: usize,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        formula: bool,
    },
    /// Redundancy lower bound for two-read single-deletion reconstruction.
    Bound {
        #[arg(short)]
        n: usize,
        #[arg(long, required_unless_present = "ell")]
        eps: Option<f64>,
        #[arg(short = 'l', long, conflicts_with = "eps")]
        ell: Option<usize>,
    },
    /// Exact maximum independent set (n <= 8).
    Mis {
        #[arg(short)]
        n: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Vt,
    Csvt,
}

#[derive(Args, Debug)]
pub struct CodeArgs {
    #[arg(long, value_enum, required_unless_present = "file")]
    pub family: Option<Family>,
    /// Explicit codebook, one word per line.
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,
    #[arg(short, required_unless_present = "file")]
    pub n: Option<usize>,
    /// VT residue.
    #[arg(short = 'a', default_value_t = 0)]
    pub residue: u64,
    #[arg(short = 'P')]
    pub period: Option<u64>,
    #[arg(short = 'c', default_value_t = 0)]
    pub syndrome: u64,
    #[arg(short = 'd', default_value_t = 0)]
    pub parity: u8,
}

impl CodeArgs {
    fn family(&self) -> Result<CodeFamily> {
        match self.family {
            Some(Family::Vt) => Ok(CodeFamily::Vt { residue: self.residue }),
            Some(Family::Csvt) => {
                let p = self.period.ok_or_else(|| Error::InvalidParameter("csvt needs -P".into()))?;
                Ok(CodeFamily::Csvt(CsvtParams::new(p, self.syndrome, self.parity)))
            }
            None => Ok(CodeFamily::Explicit),
        }
    }

    fn load(&self) -> Result<Codebook> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
            return Codebook::parse(&text);
        }
        enumerate_code(self.family()?, self.n.expect("clap requires -n"))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Human,
    Tsv,
    Json,
}

/// Process outcome distinct from library errors.
enum Outcome {
    Ok,
    Failed,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NoCandidate | Error::Ambiguous(_) | Error::BallTooSmall { .. } | Error::Inconsistency { .. } => 1,
        _ => 2,
    }
}

fn parse_word(s: &str, allow_empty: bool) -> Result<Word> {
    if allow_empty {
        Word::parse_allow_empty(s)
    } else {
        s.parse()
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // a second initialization only happens in tests; keep the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build_global();
    }
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(err) => {
            if let Error::Ambiguous(candidates) = &err {
                for c in candidates {
                    println!("{c}");
                }
            }
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let format = if cli.json {
        Format::Json
    } else if cli.tsv {
        Format::Tsv
    } else {
        Format::Human
    };
    let word = |s: &str| parse_word(s, cli.allow_empty);

    match &cli.command {
        Command::Ball { word: w, t, insertion } => {
            let x = word(w)?;
            check_cap(x.len() + if *insertion { *t } else { 0 }, Caps::from_env().ball)?;
            let ball = if *insertion { insertion_ball(&x, *t)? } else { deletion_ball(&x, *t)? };
            if format == Format::Json {
                print_json(&ball);
            } else {
                let mut out = std::io::stdout().lock();
                for y in ball.iter() {
                    writeln!(out, "{y}").expect("stdout");
                }
            }
        }
        Command::Classify { x, y } => {
            let c = classify_pair(&word(x)?, &word(y)?)?;
            if format == Format::Tsv {
                println!("{}\t{:?}", c.intersection_size_d1, c.kind);
            } else {
                print_json(&c);
            }
        }
        Command::Bounds { n, t, period } => print_json(&reconstruction_bounds(*n, *t, *period)?),
        Command::Code { command } => match command {
            CodeCommand::Enum { code } => {
                let book = code.load()?;
                match format {
                    Format::Json => print_json(&book.words()),
                    _ => print!("{}", book.to_file_string()),
                }
            }
            CodeCommand::Stats { code } => {
                let stats = match (code.family()?, code.n) {
                    (CodeFamily::Csvt(p), Some(n)) if n > Caps::from_env().enumeration => {
                        csvt_bound_stats(n, p.period)?
                    }
                    _ => code_stats(&code.load()?)?,
                };
                if format == Format::Tsv {
                    println!("{}\t{}\t{}\t{:?}\t{:.6}", stats.family, stats.n, stats.size.value, stats.size.kind, stats.redundancy);
                } else {
                    print_json(&stats);
                }
            }
        },
        Command::Certify { code, reads, t } => {
            let cert = certify_reconstruction_code(&code.load()?, *reads, *t)?;
            print_json(&cert);
            if !cert.holds {
                return Ok(Outcome::Failed);
            }
        }
        Command::Simulate { code, t, reads, trials, seed } => {
            let report = simulate_trials(&code.load()?, *t, *reads, *trials, *seed)?;
            print_json(&report);
            if !report.failures.is_empty() {
                return Ok(Outcome::Failed);
            }
        }
        Command::Decode { code, reads } => {
            let book = code.load()?;
            let reads: Vec<Word> = reads.iter().map(|r| word(r)).collect::<Result<_>>()?;
            let len = reads.first().map(Word::len).unwrap_or(0);
            if len > book.n() {
                return Err(Error::LengthMismatch { left: book.n(), right: len });
            }
            let set = ReadSet::new(book.n(), book.n() - len, reads)?;
            let found = decode(&book, &set)?;
            match format {
                Format::Json => print_json(&serde_json::json!({ "codeword": found })),
                _ => println!("{found}"),
            }
        }
        Command::Cover { command } => return run_cover(command, format),
        Command::Table1 => {
            let rows = table1()?;
            match format {
                Format::Json => print_json(&rows),
                Format::Tsv => print!("{}", to_tsv(&rows)),
                Format::Human => print!("{}", to_human(&rows)),
            }
        }
        Command::Verify { suite, n_max, t_max, params, samples, seed } => {
            let suite: Suite = suite.parse()?;
            let opts = VerifyOptions { n_max: *n_max, t_max: *t_max, periods: params.clone(), samples: *samples, seed: *seed };
            let report = run_suite(suite, &opts)?;
            match format {
                Format::Json => print_json(&report),
                Format::Tsv => print!("{}", report.to_tsv()),
                Format::Human => print!("{}", report.to_human()),
            }
            if !report.passed() {
                return Ok(Outcome::Failed);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn run_cover(command: &CoverCommand, format: Format) -> Result<Outcome> {
    match command {
        CoverCommand::Verify { n, ell } => {
            let report = verify_cover(*n, *ell)?;
            if format == Format::Json {
                print_json(&report);
            } else {
                let verdict = if report.holds() { "holds" } else { "FAILS" };
                println!(
                    "cover Q({n}, {ell}) {verdict}: {} singletons, {} cliques, {} of {} words covered",
                    report.singletons,
                    report.cliques,
                    report.covered,
                    1u64 << n
                );
                if let Some(v) = &report.violation {
                    println!("violation: {v:?}");
                }
            }
            if !report.holds() {
                return Ok(Outcome::Failed);
            }
        }
        CoverCommand::Size { n, ell, exact, formula } => {
            let size = cover_size(*n, *ell)?;
            let (show_exact, show_formula) = if *exact || *formula { (*exact, *formula) } else { (true, true) };
            match format {
                Format::Json => print_json(&size),
                _ => {
                    if show_exact {
                        println!("exact\t{}", size.exact);
                    }
                    if show_formula {
                        match size.formula {
                            Some(v) => println!("formula\t{v:.6}"),
                            None => println!("formula_log2\t{:.6}", size.formula_log2),
                        }
                        println!("agree\t{}", size.agree);
                    }
                }
            }
        }
        CoverCommand::Bound { n, eps, ell } => {
            let bound = match (eps, ell) {
                (_, Some(ell)) => redundancy_lower_bound_with_ell(*n, *ell)?,
                (Some(eps), None) => redundancy_lower_bound(*n, *eps)?,
                (None, None) => unreachable!("clap requires one of --eps / -l"),
            };
            match format {
                Format::Json => print_json(&bound),
                Format::Tsv => println!("{}\t{}\t{:.6}\t{:.6}", bound.n, bound.ell, bound.cover_log2, bound.bound),
                Format::Human => println!("n={} ℓ={} redundancy >= {:.6}", bound.n, bound.ell, bound.bound),
            }
        }
        CoverCommand::Mis { n } => {
            let set = max_independent_set_exact(*n)?;
            match format {
                Format::Json => print_json(&set),
                _ => {
                    println!("{}", set.size);
                    for w in &set.members {
                        println!("{w}");
                    }
                }
            }
        }
    }
    Ok(Outcome::Ok)
}
