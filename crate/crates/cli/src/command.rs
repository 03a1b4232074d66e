use clap::{ArgGroup, Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::report::Format;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "steinfill", version, about = "Exact verifier for Bernoulli 2-adic congruences and stable almost complex structure conditions")]
struct Cli {
    #[command(subcommand)]
    command: Query,
    #[arg(long, value_enum, default_value = "human", global = true)]
    format: Format,
}

/// A parsed and validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Command {
    pub query: Query,
    pub format: Format,
    /// The argv that produced this command, space-joined.
    pub echo: String,
}

fn parse_even(s: &str) -> Result<u32, String> {
    let n: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if n < 2 || n % 2 == 1 {
        return Err(format!("expected an even integer >= 2, got {n}"));
    }
    Ok(n)
}

fn parse_even_or_zero(s: &str) -> Result<u32, String> {
    let n: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if n % 2 == 1 {
        return Err(format!("expected an even integer, got {n}"));
    }
    Ok(n)
}

fn parse_odd(s: &str) -> Result<u32, String> {
    let n: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if n % 2 == 0 {
        return Err(format!("expected an odd integer, got {n}"));
    }
    Ok(n)
}

fn parse_big(s: &str) -> Result<BigInt, String> {
    s.parse().map_err(|_| format!("not an integer: {s}"))
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Query {
    /// Bernoulli numbers in either convention
    #[command(group(ArgGroup::new("sel").required(true)))]
    Bern {
        /// topologist's B_k
        #[arg(long, group = "sel", value_parser = clap::value_parser!(u32).range(1..))]
        top: Option<u32>,
        /// number-theoretic index n
        #[arg(long, group = "sel")]
        nt: Option<u32>,
        /// B_1 .. B_k
        #[arg(long, group = "sel", value_parser = clap::value_parser!(u32).range(1..))]
        max_k: Option<u32>,
        /// number-theoretic indices 0 .. n
        #[arg(long, group = "sel")]
        max_n: Option<u32>,
        /// cross-check each value against the Akiyama-Tanigawa oracle
        #[arg(long)]
        audit: bool,
    },
    /// von Staudt-Clausen denominators against computed denominators
    #[command(group(ArgGroup::new("sel").required(true)))]
    Vsc {
        #[arg(long, group = "sel", value_parser = parse_even)]
        n: Option<u32>,
        /// every even n in [2, max]
        #[arg(long, group = "sel", value_parser = parse_even_or_zero)]
        max_n: Option<u32>,
    },
    /// N_k, D_k and D'_k of B_k
    #[command(group(ArgGroup::new("sel").required(true)))]
    Parts {
        #[arg(long, group = "sel", value_parser = clap::value_parser!(u32).range(1..))]
        k: Option<u32>,
        #[arg(long, group = "sel", value_parser = clap::value_parser!(u32).range(1..))]
        max_k: Option<u32>,
    },
    /// Carlitz finite-difference congruence
    Carlitz(CarlitzArgs),
    /// Valuation of differences of reciprocal Bernoulli numbers
    #[command(name = "prop-a4", group(ArgGroup::new("sel").required(true)))]
    PropA4 {
        #[arg(long, requires = "m", value_parser = parse_even)]
        n: Option<u32>,
        #[arg(long, group = "sel", requires = "n", value_parser = parse_even)]
        m: Option<u32>,
        /// all even pairs 2 <= n < m <= max
        #[arg(long, group = "sel", value_parser = parse_even_or_zero)]
        max_m: Option<u32>,
    },
    /// 2^{j+3} divides Num((B_2k - B_k)/(B_2k B_k)) for even k = 2^j c
    #[command(name = "thm-a1", group(ArgGroup::new("sel").required(true)))]
    ThmA1 {
        #[arg(long, group = "sel", value_parser = parse_even)]
        k: Option<u32>,
        /// every even k in [2, max]
        #[arg(long, group = "sel", value_parser = parse_even_or_zero)]
        max_k: Option<u32>,
    },
    /// A-hat genus of a (4k-1)-connected 8k-manifold
    Ahat(ManifoldArgs),
    /// Decide stable almost complex structure existence both ways
    Admits {
        #[command(flatten)]
        manifold: ManifoldArgs,
        #[arg(long)]
        tau_in_image: bool,
    },
    /// Equivalence audit of the two decision procedures over a fixed grid
    #[command(name = "audit-yang")]
    AuditYang {
        #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u32).range(1..))]
        max_k: u32,
    },
    /// Numerator identity for odd k
    #[command(name = "num-identity", group(ArgGroup::new("sel").required(true)))]
    NumIdentity {
        #[arg(long, group = "sel", value_parser = parse_odd)]
        k: Option<u32>,
        /// every odd k in [1, max]
        #[arg(long, group = "sel", value_parser = clap::value_parser!(u32).range(1..))]
        max_k: Option<u32>,
    },
    /// Cross-check both Bernoulli algorithms and the denominator law
    #[command(name = "self-check")]
    SelfCheck {
        #[arg(long, value_parser = parse_even_or_zero)]
        max_n: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
#[command(group(ArgGroup::new("single").multiple(true).conflicts_with("sweep")))]
#[command(group(ArgGroup::new("sweep").multiple(true)))]
pub struct CarlitzArgs {
    #[arg(long, group = "single", requires_all = ["w", "r"], value_parser = parse_even)]
    pub n: Option<u32>,
    #[arg(long, group = "single", requires_all = ["n", "r"], value_parser = parse_even)]
    pub w: Option<u32>,
    #[arg(long, group = "single", requires_all = ["n", "w"], value_parser = clap::value_parser!(u32).range(1..))]
    pub r: Option<u32>,
    /// sweep bounds: even n in [2, max_n], even w in [2, max_w], r in [1, max_r]
    #[arg(long, group = "sweep", requires_all = ["max_w", "max_r"], value_parser = parse_even_or_zero)]
    pub max_n: Option<u32>,
    #[arg(long, group = "sweep", requires_all = ["max_n", "max_r"], value_parser = parse_even_or_zero)]
    pub max_w: Option<u32>,
    #[arg(long, group = "sweep", requires_all = ["max_n", "max_w"])]
    pub max_r: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct ManifoldArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_big)]
    pub sigma: BigInt,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_big)]
    pub tau2: BigInt,
}

/// Parse argv (without the program name).
pub fn parse<I, T>(argv: I) -> Result<Command, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(std::iter::once("steinfill".to_string()).chain(argv.iter().cloned()))
        .map_err(CliError::Clap)?;
    if let Query::Carlitz(a) = &cli.command {
        if a.n.is_none() && a.max_n.is_none() {
            return Err(CliError::Usage("carlitz needs --n/--w/--r or --max-n/--max-w/--max-r".into()));
        }
    }
    Ok(Command { query: cli.command, format: cli.format, echo: argv.join(" ") })
}
