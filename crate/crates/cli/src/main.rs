//! `divcert`: certificates for binomial and q-binomial divisibility claims.

mod cache;
mod checkpoint;
mod commands;
mod error;
mod report;
mod runner;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use divcert_core::divisibility::DEFAULT_N_CAP;
use divcert_core::qpoly::DEGREE_BUDGET;

#[derive(Parser)]
#[command(name = "divcert", version, about = "Exact checks of binomial and q-binomial divisibility")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args)]
pub struct Global {
    /// Render records as an aligned table instead of JSON lines
    #[arg(long, global = true)]
    pub table: bool,
    /// Put wall-clock seconds in the summary record (otherwise on stderr)
    #[arg(long, global = true)]
    pub timing: bool,
    /// Worker threads for grid points
    #[arg(long, global = true, env = "DIVCERT_PAR", default_value_t = 1)]
    pub par: usize,
    /// Largest polynomial degree to expand coefficient by coefficient
    #[arg(long, global = true, env = "DIVCERT_BUDGET_DEGREE", default_value_t = DEGREE_BUDGET)]
    pub budget_degree: u64,
    /// Largest prime to sieve or scan
    #[arg(long, global = true, env = "DIVCERT_BUDGET_PRIME", default_value_t = 10_000_000)]
    pub budget_prime: u64,
    /// Resume from and save progress to this file
    #[arg(long, global = true)]
    pub checkpoint: Option<PathBuf>,
    /// Stop after this many grid points (resume later with --checkpoint)
    #[arg(long, global = true, requires = "checkpoint")]
    pub max_points: Option<usize>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Least n with (bn+1) not dividing binom(an+bn, an), for one pair or a grid
    Fab(FabArgs),
    /// Check a theorem over a parameter grid
    Verify {
        #[command(subcommand)]
        target: VerifyCmd,
    },
    /// Explore a conjecture
    Conj {
        #[command(subcommand)]
        target: ConjCmd,
    },
    /// Least prime p = 2 (mod 3) in (x, 20x/19) for each x in a range
    Primes {
        #[arg(long)]
        lo: u64,
        #[arg(long)]
        hi: u64,
    },
    /// Dump a Gaussian polynomial, optionally times a q-integer quotient
    Qbinom(QbinomArgs),
    /// theta(x; 3, 2), the sum of ln p over primes p <= x with p = 2 (mod 3)
    Theta { x: u64 },
}

#[derive(Args)]
pub struct FabArgs {
    #[arg(requires = "b", conflicts_with_all = ["a_max", "b_max"])]
    pub a: Option<u64>,
    pub b: Option<u64>,
    #[arg(long, requires = "b_max")]
    pub a_max: Option<u64>,
    #[arg(long, requires = "a_max")]
    pub b_max: Option<u64>,
    /// Largest n to scan when the theorem bound is larger
    #[arg(long, env = "DIVCERT_N_CAP", default_value_t = DEFAULT_N_CAP)]
    pub n_cap: u64,
    /// Result cache file
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum VerifyCmd {
    /// gcd(an, bn+1) binom(an+bn, an) divisible by bn+1
    #[command(name = "thm0")]
    Thm0 {
        #[arg(long)]
        a_max: u64,
        #[arg(long)]
        b_max: u64,
        #[arg(long)]
        n_max: u64,
    },
    /// The integer congruence families, including the (10n-1)(15n-1) modulus
    #[command(name = "thm3")]
    Thm3 {
        #[arg(long, default_value_t = 1)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
    },
    /// The seven (1-q) quotient families
    #[command(name = "thm4")]
    Thm4 {
        #[arg(long, default_value_t = 1)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
        /// Expand coefficients and check non-negativity
        #[arg(long)]
        expand: bool,
    },
    /// (1-q^gcd(k,n))/(1-q^n) [2n, n-k] for 0 <= k <= n <= n_max
    #[command(name = "thm_kn")]
    ThmKn {
        #[arg(long)]
        n_max: u64,
    },
    /// (1-q^gcd(a,b))/(1-q^(a+b)) [a+b, a]
    Andrews {
        #[arg(long)]
        a_max: u64,
        #[arg(long)]
        b_max: u64,
    },
    /// The (an, bn+1) quotient in both forms
    Anbn {
        #[arg(long)]
        a_max: u64,
        #[arg(long)]
        b_max: u64,
        #[arg(long)]
        n_max: u64,
    },
    /// The three-binomial decomposition of binom(an+bn, an)/(bn+1)
    Decomposition {
        #[arg(long)]
        a_max: u64,
        #[arg(long)]
        b_max: u64,
        #[arg(long)]
        n_max: u64,
    },
}

#[derive(Subcommand)]
pub enum ConjCmd {
    /// A prime p and n with v_p(binom((a+b)n, an)/(3n-1)) < 0, per pair
    #[command(name = "conj2witness")]
    Conj2Witness {
        #[arg(long)]
        a_max: u64,
        #[arg(long)]
        b_max: u64,
        /// Largest prime to scan (clamped to --budget-prime)
        #[arg(long, default_value_t = 100_000)]
        p_cap: u64,
    },
    /// First n with (pn-1) not dividing binom(an, bn)
    Oddp {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        n_max: u64,
    },
    /// Pairs with (an-1) dividing binom(amn, bn) for all n <= n_max
    Oddp2 {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        a_max: u64,
        #[arg(long)]
        b_max: u64,
        #[arg(long)]
        n_max: u64,
    },
    /// Negative coefficients of the [30n, 5n] double quotient
    #[command(name = "c330n88n")]
    C330n88n {
        #[arg(long)]
        n: u64,
        /// Check every n up to this value
        #[arg(long)]
        n_max: Option<u64>,
    },
    /// Residues of binom(an+alpha, bn+beta) mod p over n <= n_max
    Residues {
        #[arg(long)]
        a: u64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        alpha: i64,
        #[arg(long)]
        b: u64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        beta: i64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n_max: u64,
    },
}

#[derive(Args)]
pub struct QbinomArgs {
    pub m: u64,
    pub k: u64,
    /// Numerator q-integers (1-q^m_i), comma separated
    #[arg(long, value_delimiter = ',')]
    pub num: Vec<u64>,
    /// Denominator q-integers (1-q^n_j), comma separated
    #[arg(long, value_delimiter = ',')]
    pub den: Vec<u64>,
    /// Print only the cyclotomic exponent vector
    #[arg(long)]
    pub exponents: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("divcert: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
