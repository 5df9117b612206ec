//! `arboreal`: command-line front end for the arboreal library.
//!
//! Exit status is 0 on success, 2 on invalid input, 3 when a cap or budget
//! is exceeded and 1 on internal errors. Reports go to stdout unless `--out`
//! names a file.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use arboreal::algebra::{parse_poly, FieldSpec, Rationals};
use arboreal::dynamics::{RationalMap, DEFAULT_BIT_CAP, DEFAULT_DECOMPOSITION_BUDGET};
use arboreal::experiments::{
    cheb_scan, char2_affine_report, char2_quadratic_scan, disc_check, fpp_report, frob_sample, h_check,
    orbit_prime_density, wreath_sample, DistributionReport, FrobMode, FrobOptions, OrbitOptions, Report, ScanOptions,
    DEFAULT_ALPHA_CAP, DEFAULT_POLY_CAP, DEFAULT_PRIME_CAP,
};
use arboreal::wreath::{pattern_distribution_with_cap, DEFAULT_LEAF_CAP};
use arboreal::Error;

const CAP_BITS_ENV: &str = "ARBOREAL_CAP_BITS";

#[derive(Parser, Debug)]
#[command(name = "arboreal", version, about = "Wreath statistics, generic-polynomial checks and finite-field experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct Common {
    /// Report encoding.
    #[arg(long, value_enum, default_value = "csv")]
    output: Output,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; results do not depend on this.
    #[arg(long, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    workers: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact cycle-pattern distribution of [S_d]^n.
    WreathDist {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        /// Largest d^n enumerated.
        #[arg(long, default_value_t = DEFAULT_LEAF_CAP)]
        cap_leaves: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Fixed-point proportions of [S_d]^m for m = 1..=n.
    WreathFpp {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        /// Levels with at most this many leaves are cross-checked exactly.
        #[arg(long, default_value_t = DEFAULT_LEAF_CAP)]
        cap_leaves: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Cycle patterns of uniform random elements of [S_d]^n.
    WreathSample {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_LEAF_CAP)]
        cap_leaves: u64,
        #[command(flatten)]
        common: Common,
    },
    /// The four genericity conditions for a polynomial.
    DynCheckH {
        /// `Q` or `q=P^K`.
        #[arg(long)]
        field: FieldSpec,
        #[arg(long)]
        poly: String,
        #[arg(long = "N")]
        big_n: usize,
        /// Candidate budget for the decomposition search.
        #[arg(long, default_value_t = DEFAULT_DECOMPOSITION_BUDGET)]
        cap_budget: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Discriminant of a rational map in the parameter T.
    DynDisc {
        #[arg(long)]
        field: FieldSpec,
        /// `num=<poly>;den=<poly>` or a bare polynomial.
        #[arg(long)]
        map: String,
        /// Also report the radical for the n-th iterate of a polynomial map.
        #[arg(long)]
        n: Option<usize>,
        /// Coefficient bit guard for iteration over Q; also read from ARBOREAL_CAP_BITS.
        #[arg(long)]
        cap_bits: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Factorization census of f^n over all a_0..a_(d-1) in GF(q).
    ExpChebScan {
        #[arg(long)]
        q: u64,
        /// Index of the leading coefficient in GF(q).
        #[arg(long, default_value_t = 1)]
        b: u64,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Also count members of the genericity set.
        #[arg(long)]
        check_h: bool,
        /// Largest q^d scanned.
        #[arg(long, default_value_t = DEFAULT_POLY_CAP)]
        cap_polys: u64,
        #[arg(long, default_value_t = DEFAULT_LEAF_CAP)]
        cap_leaves: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Factorization patterns of f^n(x) - alpha over alpha in GF(q).
    ExpFrob {
        #[arg(long)]
        field: FieldSpec,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        n: usize,
        /// Sample this many alpha instead of walking the whole field.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long)]
        seed: u64,
        /// Largest q walked, or sample count drawn.
        #[arg(long, default_value_t = DEFAULT_ALPHA_CAP)]
        cap_alpha: u64,
        #[arg(long, default_value_t = DEFAULT_LEAF_CAP)]
        cap_leaves: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Density of primes up to X dividing some f^n(a0), for f over Q.
    ExpOrbitPrimes {
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "0")]
        a0: String,
        #[arg(long = "X")]
        x: u64,
        #[arg(long, default_value_t = DEFAULT_PRIME_CAP)]
        cap_primes: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Fixed-point proportions of the affine group of F_2[Y]/(Y^m), m = 1..=n.
    ExpChar2 {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Factor-degree profiles of iterates of quadratics over GF(2^k).
    ExpChar2Quad {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

fn render<R: Report>(r: &R, output: Output) -> String {
    match output {
        Output::Csv => r.to_csv(),
        Output::Json => r.to_json(),
    }
}

fn workers(common: &Common) -> arboreal::Result<usize> {
    Ok(common.workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())))
}

fn cap_bits(flag: Option<u64>) -> arboreal::Result<u64> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(CAP_BITS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("{CAP_BITS_ENV} must be a non-negative integer, got '{v}'"))),
        Err(_) => Ok(DEFAULT_BIT_CAP),
    }
}

fn finite_only(field: &FieldSpec) -> arboreal::Result<arboreal::algebra::Gf> {
    match field {
        FieldSpec::Finite(g) => Ok(g.clone()),
        FieldSpec::Rationals => Err(Error::InvalidParameter("this command needs a finite field q=P^K".into())),
    }
}

fn run(cmd: Command) -> arboreal::Result<(String, Common)> {
    Ok(match cmd {
        Command::WreathDist { d, n, cap_leaves, common } => {
            let dist = pattern_distribution_with_cap(d, n, cap_leaves)?;
            (render(&DistributionReport::new(&dist), common.output), common)
        }
        Command::WreathFpp { d, n, cap_leaves, common } => {
            if n == 0 {
                return Err(Error::InvalidParameter("n must be at least 1".into()));
            }
            (render(&fpp_report(d, n, cap_leaves)?, common.output), common)
        }
        Command::WreathSample { d, n, samples, seed, cap_leaves, common } => {
            let r = wreath_sample(d, n, samples, seed, workers(&common)?, cap_leaves)?;
            (render(&r, common.output), common)
        }
        Command::DynCheckH { field, poly, big_n, cap_budget, common } => {
            let tag = field.to_string();
            let r = match &field {
                FieldSpec::Rationals => h_check(&tag, &parse_poly(&Rationals, &poly)?, big_n, cap_budget)?,
                FieldSpec::Finite(g) => h_check(&tag, &parse_poly(g, &poly)?, big_n, cap_budget)?,
            };
            (render(&r, common.output), common)
        }
        Command::DynDisc { field, map, n, cap_bits: bits, common } => {
            let tag = field.to_string();
            let bits = cap_bits(bits)?;
            let r = match &field {
                FieldSpec::Rationals => disc_check(&tag, &RationalMap::parse(&Rationals, &map)?, n, bits)?,
                FieldSpec::Finite(g) => disc_check(&tag, &RationalMap::parse(g, &map)?, n, bits)?,
            };
            (render(&r, common.output), common)
        }
        Command::ExpChebScan { q, b, d, n, seed, check_h, cap_polys, cap_leaves, common } => {
            let opts = ScanOptions { seed, workers: workers(&common)?, poly_cap: cap_polys, leaf_cap: cap_leaves, check_h };
            (render(&cheb_scan(q, b, d, n, &opts)?, common.output), common)
        }
        Command::ExpFrob { field, poly, n, samples, seed, cap_alpha, cap_leaves, common } => {
            let g = finite_only(&field)?;
            let f = parse_poly(&g, &poly)?;
            let mode = match samples {
                Some(samples) => FrobMode::Sample { samples, seed },
                None => FrobMode::Exhaustive,
            };
            let opts = FrobOptions { workers: workers(&common)?, leaf_cap: cap_leaves, alpha_cap: cap_alpha, seed };
            (render(&frob_sample(&f, n, mode, &opts)?, common.output), common)
        }
        Command::ExpOrbitPrimes { field, poly, a0, x, cap_primes, common } => {
            if field != FieldSpec::Rationals {
                return Err(Error::InvalidParameter("orbit primes are computed over Q only".into()));
            }
            let f = parse_poly(&Rationals, &poly)?;
            let a0 = arboreal::algebra::ParseField::parse_elem(&Rationals, a0.trim())?;
            let opts = OrbitOptions { workers: workers(&common)?, prime_cap: cap_primes };
            (render(&orbit_prime_density(&f, &a0, x, &opts)?, common.output), common)
        }
        Command::ExpChar2 { n, common } => (render(&char2_affine_report(n)?, common.output), common),
        Command::ExpChar2Quad { k, n, seed, common } => {
            let r = char2_quadratic_scan(k, n, seed, workers(&common)?)?;
            (render(&r, common.output), common)
        }
    })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        e if e.is_cap() => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn one_line(s: &str) -> String {
    let parts: Vec<&str> = s
        .lines()
        .map(str::trim)
        .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
        .filter(|l| !l.is_empty())
        .collect();
    if parts.is_empty() {
        "invalid arguments".into()
    } else {
        parts.join(" ")
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{}", one_line(&e.to_string()));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok((text, common)) => match &common.out {
            None => {
                print!("{text}");
                ExitCode::SUCCESS
            }
            Some(path) => match std::fs::write(path, text) {
                Ok(()) => {
                    eprintln!("wrote {}", path.display());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    ExitCode::from(2)
                }
            },
        },
        Err(e) => {
            eprintln!("error: {}", one_line(&e.to_string()));
            ExitCode::from(exit_code(&e))
        }
    }
}
