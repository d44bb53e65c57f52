use std::path::PathBuf;
use std::process::ExitCode;

use braidforge::burau::entropy_lower_bound;
use braidforge::exchange::{is_degenerate, iterated_exchange, ExchangePresentation};
use braidforge::garside::{self, conjugate_test, Conjugacy, DEFAULT_SSS_CAP};
use braidforge::lamination::{entropy_estimate, geometric_nondegeneracy, EntropySettings};
use braidforge::BraidWord;
use braidforge_cli::experiment::{run_experiment, Basis, Verdict};
use braidforge_cli::output::write_report;
use braidforge_cli::{CliError, ExperimentConfig};
use clap::{Parser, Subcommand};

/// Braid words are comma-separated signed generator indices, e.g. "1,-2,3".
#[derive(Parser)]
#[command(name = "braidforge", version, about = "Exchange moves, Garside normal forms and braid entropy")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the left normal form of a braid.
    Nf {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Strand count; inferred from the word when omitted.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Decide conjugacy of two braids and print a witness.
    Conj {
        #[arg(allow_hyphen_values = true)]
        w1: String,
        #[arg(allow_hyphen_values = true)]
        w2: String,
        #[arg(long)]
        n: Option<usize>,
        /// Maximum super summit set size.
        #[arg(long, default_value_t = DEFAULT_SSS_CAP)]
        cap: usize,
    },
    /// Print ex^k(AB) = A τ^k B τ^-k.
    Exchange {
        #[arg(long)]
        n: usize,
        #[arg(long = "A", allow_hyphen_values = true, default_value = "")]
        a: String,
        #[arg(long = "B", allow_hyphen_values = true, default_value = "")]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Report whether A or B commutes with τ.
    Degenerate {
        #[arg(long)]
        n: usize,
        #[arg(long = "A", allow_hyphen_values = true, default_value = "")]
        a: String,
        #[arg(long = "B", allow_hyphen_values = true, default_value = "")]
        b: String,
    },
    /// Estimate the topological entropy of a braid.
    Entropy {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = EntropySettings::default().max_iters)]
        iters: usize,
        #[arg(long, default_value_t = EntropySettings::default().tol)]
        tol: f64,
        #[arg(long, default_value_t = EntropySettings::default().seeds)]
        seeds: usize,
    },
    /// Run a configured experiment and write its report.
    Experiment {
        #[arg(long)]
        config: PathBuf,
    },
}

/// Parses with `n` strands, or the fewest that fit (at least `min_n`).
fn word(text: &str, n: Option<usize>, min_n: usize) -> Result<BraidWord, CliError> {
    Ok(match n {
        Some(n) => BraidWord::parse(n, text)?,
        None => BraidWord::parse_infer(text, min_n)?,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Nf { word: w, n } => {
            println!("{}", garside::normal_form(&word(&w, n, 2)?)?);
        }
        Command::Conj { w1, w2, n, cap } => {
            let n = match n {
                Some(n) => n,
                None => word(&w1, None, 2)?.n().max(word(&w2, None, 2)?.n()),
            };
            let (u, v) = (word(&w1, Some(n), 2)?, word(&w2, Some(n), 2)?);
            match conjugate_test(&u, &v, cap)? {
                Conjugacy::Conjugate { witness } => {
                    println!("conjugate");
                    println!("witness: {witness}");
                }
                Conjugacy::NotConjugate(sep) => {
                    println!("non-conjugate");
                    println!("basis: {}", Basis::from(sep).as_str());
                }
            }
        }
        Command::Exchange { n, a, b, k } => {
            let p = ExchangePresentation::parse(n, &a, &b)?;
            println!("{}", iterated_exchange(&p, k));
        }
        Command::Degenerate { n, a, b } => {
            let p = ExchangePresentation::parse(n, &a, &b)?;
            let r = is_degenerate(&p)?;
            let (a_moves, b_moves) = geometric_nondegeneracy(&p)?;
            println!("A commutes with tau: {}", yes_no(r.a_commutes));
            println!("B commutes with tau: {}", yes_no(r.b_commutes));
            println!("A moves c: {}", yes_no(a_moves));
            println!("B moves c: {}", yes_no(b_moves));
            println!("degenerate: {}", yes_no(r.degenerate()));
        }
        Command::Entropy {
            word: w,
            n,
            iters,
            tol,
            seeds,
        } => {
            let w = word(&w, n, 3)?;
            let settings = EntropySettings {
                max_iters: iters,
                tol,
                seeds,
            };
            let est = entropy_estimate(&w, &settings)?;
            println!("estimate: {:.12}", est.value);
            println!("converged: {} ({} iterations)", yes_no(est.converged), est.iterations);
            println!("lower bound: {:.12}", entropy_lower_bound(&w));
        }
        Command::Experiment { config } => {
            let text = std::fs::read_to_string(&config).map_err(|source| CliError::Io {
                path: config.display().to_string(),
                source,
            })?;
            let cfg: ExperimentConfig = text.parse()?;
            let report = run_experiment(&cfg)?;
            for path in write_report(&report, &cfg)? {
                eprintln!("wrote {}", path.display());
            }
            eprintln!(
                "pairs: {} conjugate, {} non-conjugate, {} undecided; invariant checks {}",
                report.count(Verdict::Conjugate),
                report.count(Verdict::NonConjugate),
                report.count(Verdict::Undecided),
                if report.checks.all_pass() { "pass" } else { "FAIL" },
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
