//! `k3lab`: run verification suites, evaluate family members and manage the
//! modular polynomial cache.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 domain error.

mod family;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use k3lab::constants::Constants;
use k3lab::exact::{parse_rational, BigComplex, DEFAULT_PRECISION};
use k3lab::modular::{self, CacheStatus};
use k3lab::verify::{self, Suite, VerifyOptions};
use k3lab::Error;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "k3lab",
    version,
    about = "Exact checks for a two-parameter family of elliptic K3 surfaces"
)]
#[command(args_conflicts_with_subcommands = true, allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct SuiteArgs {
    /// all, identities, lattice, kummer, toric, weierstrass or modular.
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: Suite,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Perturb one transcribed constant before running (see `mutations`).
    #[arg(long)]
    mutate: Option<String>,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Run a suite; exit 0 iff every check passes.
    Verify(SuiteArgs),
    /// Print a suite report; the exit code ignores check outcomes.
    Report(SuiteArgs),
    /// Coefficients of one family member.
    #[command(allow_negative_numbers = true)]
    #[command(group(ArgGroup::new("input").required(true).multiple(false).args(["j1", "lambda1", "tau"])))]
    Family {
        #[arg(long, requires = "j2", value_parser = parse_rational_arg)]
        j1: Option<BigRational>,
        #[arg(long, requires = "j1", value_parser = parse_rational_arg)]
        j2: Option<BigRational>,
        #[arg(long, requires = "lambda2", value_parser = parse_rational_arg)]
        lambda1: Option<BigRational>,
        #[arg(long, requires = "lambda1", value_parser = parse_rational_arg)]
        lambda2: Option<BigRational>,
        /// Point of the upper half-plane, `re+imi` or `i`.
        #[arg(long, requires = "n")]
        tau: Option<String>,
        #[arg(long, requires = "tau")]
        n: Option<u32>,
        /// Working precision in bits.
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
        /// Significant digits printed for numeric values.
        #[arg(long, default_value_t = 30)]
        digits: usize,
    },
    /// Build or load Φₙ for n in 1..=3 and print it in cache format.
    Modpoly {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Reconstruct even when a cached copy exists.
        #[arg(long)]
        rebuild: bool,
    },
    /// List the single-constant mutations and the suite that catches each.
    Mutations,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rational_arg(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn domain_code(e: &Error) -> u8 {
    match e {
        Error::UnknownSuite(_) | Error::UnknownMutation(_) | Error::Parse { .. } => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("k3lab: {e}");
    ExitCode::from(domain_code(&e))
}

fn run_suite(args: &SuiteArgs, gate: bool) -> ExitCode {
    let base = Constants::reference();
    let constants = match &args.mutate {
        Some(id) => match base.mutate(id) {
            Ok(c) => c,
            Err(e) => return fail(e),
        },
        None => base,
    };
    let opts = VerifyOptions {
        cache_dir: modular::cache_dir(args.cache_dir.as_deref()),
        seed: args.seed,
    };
    let r = verify::run(args.suite, &constants, &opts);
    let mutation = args.mutate.as_deref();
    match args.format {
        Format::Json => println!("{}", report::to_json(&r, mutation)),
        Format::Text => print!("{}", report::to_text(&r, mutation)),
    }
    if gate && !r.passed() {
        ExitCode::from(EXIT_FAIL)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => run_suite(&args, true),
        Command::Report(args) => run_suite(&args, false),
        Command::Family {
            j1,
            j2,
            lambda1,
            lambda2,
            tau,
            n,
            precision,
            digits,
        } => {
            let precision = match BigComplex::checked_precision(precision) {
                Ok(p) => p,
                Err(e) => return fail(e),
            };
            let input = match (j1, j2, lambda1, lambda2, tau, n) {
                (Some(a), Some(b), ..) => family::Input::J(a, b),
                (_, _, Some(a), Some(b), ..) => family::Input::Lambda(a, b),
                (.., Some(t), Some(n)) => match BigComplex::parse(&t, precision) {
                    Ok(t) => family::Input::Tau(t, n),
                    Err(e) => return fail(e),
                },
                _ => unreachable!("clap enforces one complete group"),
            };
            let o = family::Options { precision, digits };
            match family::run(&Constants::reference(), &input, &o) {
                Ok(s) => {
                    print!("{s}");
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Command::Modpoly {
            n,
            cache_dir,
            rebuild,
        } => {
            let dir = modular::cache_dir(cache_dir.as_deref());
            match modular::modular_polynomial(&dir, n, rebuild) {
                Ok((p, status)) => {
                    let how = match status {
                        CacheStatus::Hit => "cache hit",
                        CacheStatus::Built => "built",
                    };
                    eprintln!("{how}: {}", modular::cache_path(&dir, n).display());
                    print!("{}", p.to_cache_string());
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Command::Mutations => {
            for m in Constants::mutations() {
                println!("{:<24} {:<12} {}", m.id, m.suite, m.description);
            }
            ExitCode::SUCCESS
        }
    }
}
