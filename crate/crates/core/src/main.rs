use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orthocat::catenation::build_catenation_dfa;
use orthocat::experiments::{self, SweepRow};
use orthocat::format::{parse_automaton, serialize_automaton};
use orthocat::oracle::{verify_fooling_set, FoolingVerdict};
use orthocat::orthogonality::{is_orthogonal, Verdict};
use orthocat::random::{random_dfa, RngSeed};
use orthocat::witnesses::{
    fooling_set_unary_catenation, unary_catenation_dfa, unary_catenation_nfa, witness_a, witness_b,
};
use orthocat::{Dfa, Error};

#[derive(Parser)]
#[command(
    name = "orthocat",
    version,
    about = "Orthogonal catenation of regular languages"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    A,
    B,
}

#[derive(Subcommand)]
enum Command {
    /// Check the state count of the orthogonal catenation of the witness pair.
    Verify { m: usize, n: usize },
    /// Run `verify` over [3..=m_max] × [3..=n_max] and write a CSV report.
    Sweep {
        m_max: usize,
        n_max: usize,
        #[arg(short, long)]
        out: PathBuf,
        /// Worker threads (defaults to available parallelism).
        #[arg(short, long)]
        jobs: Option<usize>,
    },
    /// Decide whether L(A) and L(B) are catenation-orthogonal.
    Ortho { a: PathBuf, b: PathBuf },
    /// Minimal DFA for L(A)·L(B).
    Cat {
        a: PathBuf,
        b: PathBuf,
        /// Refuse non-orthogonal inputs.
        #[arg(long)]
        orthogonal: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Canonical minimal DFA.
    Min {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Language equality; prints a shortest distinguishing word otherwise.
    Eq { a: PathBuf, b: PathBuf },
    /// Emit a witness automaton.
    Witness {
        #[arg(value_enum)]
        family: Family,
        states: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// State count of the catenation NFA for (a^m)*(b^n)* and a certified
    /// fooling-set lower bound.
    NfaBound { m: usize, n: usize },
    /// Emit a seeded random DFA.
    Random {
        states: usize,
        alphabet: usize,
        #[arg(long, default_value_t = 0.5)]
        accept_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Automaton(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: Error },
}

fn load(path: &Path) -> Result<Dfa, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_automaton(&text).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_row(row: &SweepRow) {
    println!("{}", experiments::CSV_HEADER);
    println!("{}", row.to_csv_line());
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let code = match cli.command {
        Command::Verify { m, n } => {
            let row = experiments::verify(m, n)?;
            print_row(&row);
            if row.matches_prediction() {
                ExitCode::SUCCESS
            } else {
                eprintln!(
                    "mismatch: minimized {} vs predicted {} (orthogonal: {})",
                    row.minimized, row.predicted, row.orthogonal
                );
                ExitCode::from(1)
            }
        }
        Command::Sweep {
            m_max,
            n_max,
            out,
            jobs,
        } => {
            let jobs =
                jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, usize::from));
            let rows = experiments::sweep(m_max, n_max, jobs)?;
            emit(&experiments::to_csv(&rows), Some(&out))?;
            let failures = rows.iter().filter(|r| !r.matches_prediction()).count();
            println!("{} rows written to {}", rows.len(), out.display());
            if failures == 0 {
                ExitCode::SUCCESS
            } else {
                eprintln!("{failures} rows differ from the predicted bound");
                ExitCode::from(1)
            }
        }
        Command::Ortho { a, b } => {
            let (a, b) = (load(&a)?, load(&b)?);
            match is_orthogonal(&a, &b)? {
                Verdict::Orthogonal => {
                    println!("orthogonal");
                    ExitCode::SUCCESS
                }
                Verdict::NotOrthogonal(w) => {
                    let r = |x| w.alphabet.render(x);
                    println!("not orthogonal");
                    println!("word: {}", r(&w.word));
                    println!("split 1: {} | {}", r(&w.split1.0), r(&w.split1.1));
                    println!("split 2: {} | {}", r(&w.split2.0), r(&w.split2.1));
                    ExitCode::from(1)
                }
            }
        }
        Command::Cat {
            a,
            b,
            orthogonal,
            out,
        } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let cat = if orthogonal {
                orthocat::orthogonal_catenation(&a, &b)?
            } else {
                build_catenation_dfa(&a, &b)?
            };
            eprintln!("constructed {} states", cat.state_count());
            emit(&serialize_automaton(&cat.dfa().minimize()), out.as_deref())?;
            ExitCode::SUCCESS
        }
        Command::Min { file, out } => {
            let d = load(&file)?;
            emit(&serialize_automaton(&d.minimize()), out.as_deref())?;
            ExitCode::SUCCESS
        }
        Command::Eq { a, b } => {
            let (a, b) = (load(&a)?, load(&b)?);
            match a.distinguishing_word(&b)? {
                None => {
                    println!("equivalent");
                    ExitCode::SUCCESS
                }
                Some(w) => {
                    println!("not equivalent");
                    println!("distinguishing word: {}", a.alphabet().render(&w));
                    ExitCode::from(1)
                }
            }
        }
        Command::Witness {
            family,
            states,
            out,
        } => {
            let d = match family {
                Family::A => witness_a(states)?,
                Family::B => witness_b(states)?,
            };
            emit(&serialize_automaton(&d), out.as_deref())?;
            ExitCode::SUCCESS
        }
        Command::NfaBound { m, n } => {
            let nfa = unary_catenation_nfa(m, n)?;
            let lang = unary_catenation_dfa(m, n)?;
            let pairs = fooling_set_unary_catenation(m, n)?;
            println!("nfa states: {}", nfa.state_count());
            println!("minimal dfa states: {}", lang.state_count());
            match verify_fooling_set(&lang, &pairs) {
                FoolingVerdict::Certified(k) => {
                    println!("fooling set lower bound: {k}");
                    if k == nfa.state_count() {
                        println!("tight: {}", m + n);
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                other => {
                    println!("fooling set rejected: {other:?}");
                    ExitCode::from(1)
                }
            }
        }
        Command::Random {
            states,
            alphabet,
            accept_prob,
            seed,
            out,
        } => {
            let d = random_dfa(states, alphabet, accept_prob, RngSeed(seed))?;
            emit(&serialize_automaton(&d), out.as_deref())?;
            ExitCode::SUCCESS
        }
    };
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
