use std::ops::RangeInclusive;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "lucasforge",
    version,
    about = "Exact Fibonacci, Lucas polynomial and Catalan-family arithmetic"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest Lucas index the polynomial caches will build.
    #[arg(long, global = true, env = "LUCASFORGE_MAX_INDEX")]
    pub max_index: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fibonacci number F_n.
    Fib { n: usize },
    /// Lucas polynomials, factorials and atoms.
    #[command(subcommand)]
    Lucas(LucasCommand),
    /// Lucanomial: the Lucas analogue of binomial(n, k).
    Lucanomial { n: usize, k: usize },
    /// Catalan number, Lucas (default) or classical.
    Catalan {
        n: usize,
        #[arg(long, conflicts_with = "lucas")]
        classical: bool,
        #[arg(long)]
        lucas: bool,
    },
    /// FiboCatalan number C_(n,F).
    Fibocatalan { n: usize },
    /// Super Catalan S(m,n) in one of three layers.
    #[command(group(ArgGroup::new("layer").required(true).args(["classical", "fib", "lucas"])))]
    Super {
        m: usize,
        n: usize,
        #[arg(long)]
        classical: bool,
        #[arg(long)]
        fib: bool,
        #[arg(long)]
        lucas: bool,
        /// Use k-divisible factorials (Fibonacci and Lucas layers).
        #[arg(short = 'k', long = "kdiv", value_parser = clap::value_parser!(u64).range(1..))]
        k: Option<u64>,
    },
    /// Generalized Catalan J_r (2n)!/(n!(n+r+1)!) analogue.
    #[command(group(ArgGroup::new("layer").required(true).args(["fib", "lucas"])))]
    Gencat {
        r: usize,
        n: usize,
        #[arg(long)]
        fib: bool,
        #[arg(long)]
        lucas: bool,
    },
    /// Rational Catalan Cat(a,b) for coprime a, b.
    #[command(group(ArgGroup::new("layer").required(true).args(["classical", "lucas"])))]
    Ratcat {
        a: usize,
        b: usize,
        #[arg(long)]
        classical: bool,
        #[arg(long)]
        lucas: bool,
    },
    /// Atom valuation table for a quotient of k-divisible Lucas factorials.
    Valuation {
        /// Numerator factorial indices, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        num: Vec<usize>,
        /// Denominator factorial indices, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        den: Vec<usize>,
        #[arg(short = 'k', default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        /// Also attempt the exact division and compare.
        #[arg(long)]
        check: bool,
    },
    /// Check one identity family over a parameter grid.
    Verify {
        family: String,
        #[command(flatten)]
        ranges: RangeArgs,
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
    },
    /// Search for Fibonacci analogues of a convolution identity.
    Search {
        /// von_szily_F, mikic_super_F or mikic_catalan_F
        template: String,
        /// alt, tri, square or choose2 (or the formula, e.g. "(-1)^k")
        weights: String,
        #[command(flatten)]
        ranges: RangeArgs,
    },
    /// Run every identity family (or the listed ones) over its acceptance grid.
    Suite {
        #[arg(long = "family")]
        families: Vec<String>,
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum LucasCommand {
    /// Lucas polynomial of index n.
    Poly { n: usize },
    /// Lucas factorial of n.
    Factorial {
        n: usize,
        /// k-divisible factorial of n with step k.
        #[arg(short = 'k', value_parser = clap::value_parser!(u64).range(1..))]
        k: Option<u64>,
    },
    /// Lucas atom P_d.
    Atom { d: usize },
}

/// Inclusive ranges `a..b` (or a single value) per parameter name.
#[derive(Args, Debug, Default)]
pub struct RangeArgs {
    #[arg(long, value_parser = parse_range)]
    pub n: Option<RangeInclusive<usize>>,
    #[arg(long, value_parser = parse_range)]
    pub m: Option<RangeInclusive<usize>>,
    #[arg(long, value_parser = parse_range)]
    pub k: Option<RangeInclusive<usize>>,
    #[arg(long, value_parser = parse_range)]
    pub r: Option<RangeInclusive<usize>>,
    #[arg(long, value_parser = parse_range)]
    pub l: Option<RangeInclusive<usize>>,
    #[arg(long, value_parser = parse_range)]
    pub a: Option<RangeInclusive<usize>>,
    #[arg(long, value_parser = parse_range)]
    pub b: Option<RangeInclusive<usize>>,
}

impl RangeArgs {
    pub fn get(&self, name: &str) -> Option<RangeInclusive<usize>> {
        match name {
            "n" => self.n.clone(),
            "m" => self.m.clone(),
            "k" => self.k.clone(),
            "r" => self.r.clone(),
            "l" => self.l.clone(),
            "a" => self.a.clone(),
            "b" => self.b.clone(),
            _ => None,
        }
    }

    /// Names of the ranges given on the command line.
    pub fn given(&self) -> Vec<&'static str> {
        ["n", "m", "k", "r", "l", "a", "b"]
            .into_iter()
            .filter(|n| self.get(n).is_some())
            .collect()
    }
}

pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{s}` is not a nonnegative integer"))
    };
    match text.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo > hi {
                return Err(format!("empty range {lo}..{hi}"));
            }
            Ok(lo..=hi)
        }
        None => num(text).map(|v| v..=v),
    }
}
