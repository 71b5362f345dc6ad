//! Thin command-line frontend: argument parsing and output plumbing only;
//! all behavior lives in the `tropdual` library (`tropdual::cli`).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use tropdual::cli::{
    self, exit_code, parse_checks, render_report, CheckKind, CliError, ScanConfig, ShowFlags,
    WordStrategy, DEFAULT_SCAN_BUDGET,
};
use tropdual::MutationWord;

#[derive(Parser)]
#[command(
    name = "tropdual",
    version,
    about = "Exact computation and verification of C-matrices, G-matrices, and F-polynomials of cluster-algebra seed patterns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Walk a mutation word and print the pattern data at the endpoint.
    Mutate {
        /// Matrix file: {"rows":n,"cols":n,"entries":[[..]],"d":[..]?}.
        #[arg(short = 'm', long = "matrix", value_name = "FILE")]
        matrix: PathBuf,
        /// Comma-separated 1-based directions, e.g. "1,2,1"; empty for the root.
        #[arg(short = 'w', long = "word", value_name = "LIST", default_value = "")]
        word: String,
        /// Fields to print: any of b,c,g,f.
        #[arg(long = "show", value_name = "LIST", default_value = "b,c,g,f")]
        show: String,
    },
    /// Run identity and conjecture checks over all words up to a depth.
    Verify {
        #[arg(short = 'm', long = "matrix", value_name = "FILE")]
        matrix: PathBuf,
        /// Maximum word length to sweep.
        #[arg(long, value_name = "N", default_value_t = 4)]
        depth: usize,
        /// "default", "all", or a comma-separated list: theorem, auxiliary,
        /// sign_coherence, conjecture41, step_left, inverse_column, tropical,
        /// scalar, separation.
        #[arg(long = "checks", value_name = "LIST", default_value = "default")]
        checks: String,
    },
    /// Verify seeded random skew-symmetrizable matrices.
    Scan {
        #[arg(long, value_name = "N", default_value_t = 3)]
        rank: usize,
        /// Bound on the absolute value of sampled entries.
        #[arg(long = "max-entry", value_name = "N", default_value_t = 2)]
        max_entry: i64,
        #[arg(long, value_name = "N", default_value_t = 20)]
        samples: usize,
        #[arg(long, value_name = "N", default_value_t = 4)]
        depth: usize,
        /// Word strategy: "exhaustive" or "random".
        #[arg(long, value_name = "KIND", default_value = "random")]
        strategy: String,
        /// Random words per sample (random strategy only).
        #[arg(long = "words", value_name = "N", default_value_t = 200)]
        words: usize,
        /// 64-bit seed; a fixed seed gives a byte-identical report.
        #[arg(long, value_name = "N", default_value_t = 0)]
        seed: u64,
        /// "scan-default", "all", or a comma-separated list of check names.
        #[arg(long = "checks", value_name = "LIST", default_value = "scan-default")]
        checks: String,
        /// Cap on total word evaluations (samples x words per sample).
        #[arg(long, value_name = "N", default_value_t = DEFAULT_SCAN_BUDGET)]
        budget: u64,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Mutate { matrix, word, show } => {
            let b0 = cli::load_matrix_file(&matrix)?;
            let word: MutationWord = word.parse()?;
            word.validate_rank(b0.size())?;
            let show: ShowFlags = show.parse()?;
            let value: Value = cli::run_mutate(&b0, &word, show)?;
            let mut text = serde_json::to_string_pretty(&value).expect("output serializes");
            text.push('\n');
            emit(&cli.out, &text)?;
            Ok(exit_code::OK)
        }
        Command::Verify { matrix, depth, checks } => {
            let b0 = cli::load_matrix_file(&matrix)?;
            let checks = parse_checks(&checks, CheckKind::verify_default())?;
            let report = cli::run_verify(&b0, depth, &checks);
            emit(&cli.out, &render_report(&report))?;
            Ok(report.exit_code())
        }
        Command::Scan {
            rank,
            max_entry,
            samples,
            depth,
            strategy,
            words,
            seed,
            checks,
            budget,
        } => {
            let strategy = match strategy.as_str() {
                "exhaustive" => WordStrategy::Exhaustive,
                "random" => WordStrategy::Random { words_per_sample: words },
                other => {
                    return Err(CliError::Config(format!(
                        "unknown strategy `{other}` (expected exhaustive or random)"
                    )))
                }
            };
            let config = ScanConfig {
                rank,
                max_entry,
                samples,
                depth,
                strategy,
                seed,
                checks: parse_checks(&checks, CheckKind::scan_default())?,
                budget,
            };
            let report = cli::run_scan(&config)?;
            emit(&cli.out, &render_report(&report))?;
            Ok(report.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            // Violations also emit their witness as JSON for downstream tools.
            if matches!(err, CliError::MixedSigns(_)) {
                let mut text =
                    serde_json::to_string_pretty(&err.to_json()).expect("error serializes");
                text.push('\n');
                let _ = emit(&out, &text);
            }
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
