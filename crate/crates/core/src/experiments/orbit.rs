//! Density of primes dividing some iterate `f^n(a0)`, `n >= 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::parallel::run_blocks;
use super::report::{int_str, join, parse_ratio, ratio_text, ratio_vec, read_csv, split, write_csv, Report};
use crate::algebra::{Field, Poly, Rationals};
use crate::dynamics::{is_bad_prime, ReducedOrbit};
use crate::error::{Error, Result};
use crate::wreath::fpp_ladder;

/// Largest sieve bound accepted by default.
pub const DEFAULT_PRIME_CAP: u64 = 100_000_000;

/// Length of the fixed-point-proportion ladder attached to reports.
pub const LADDER_LEN: usize = 8;

const BLOCK: usize = 512;

/// Primes up to `x`, by the sieve of Eratosthenes.
pub fn primes_up_to(x: u64) -> Vec<u64> {
    if x < 2 {
        return Vec::new();
    }
    let n = x as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDensityReport {
    pub f: String,
    pub a0: String,
    #[serde(rename = "X")]
    pub x: u64,
    pub good_primes: u64,
    pub dividing: u64,
    #[serde(with = "int_str")]
    pub density_num: BigInt,
    #[serde(with = "int_str")]
    pub density_den: BigInt,
    pub bad_primes: Vec<u64>,
    /// `FPP([S_d]^m)` for `m = 1..=8`, `d = deg f`; empty for `d < 2`.
    #[serde(with = "ratio_vec")]
    pub fpp_ladder: Vec<BigRational>,
}

impl OrbitDensityReport {
    pub fn density(&self) -> BigRational {
        BigRational::new(self.density_num.clone(), self.density_den.clone())
    }
}

#[derive(Clone, Debug)]
pub struct OrbitOptions {
    pub workers: usize,
    pub prime_cap: u64,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions { workers: 1, prime_cap: DEFAULT_PRIME_CAP }
    }
}

fn check_inputs(f: &Poly<Rationals>, x: u64, cap: u64) -> Result<()> {
    if f.is_constant() {
        return Err(Error::InvalidParameter("f must be nonconstant".into()));
    }
    if x < 3 {
        return Err(Error::InvalidParameter(format!("X must be at least 3, got {x}")));
    }
    if x > cap {
        return Err(Error::cap("prime bound X", x, cap));
    }
    Ok(())
}

/// Per good prime up to `x`, whether the orbit of `a0` hits 0 mod p.
fn classify(f: &Poly<Rationals>, a0: &BigRational, x: u64, workers: usize) -> Result<(Vec<u64>, Vec<(u64, bool)>)> {
    let primes = primes_up_to(x);
    let blocks = primes.len().div_ceil(BLOCK) as u64;
    let parts = run_blocks(blocks, workers, |b| {
        let lo = b as usize * BLOCK;
        let chunk = &primes[lo..(lo + BLOCK).min(primes.len())];
        let mut bad = Vec::new();
        let mut good = Vec::new();
        for &p in chunk {
            if is_bad_prime(f, a0, p) {
                bad.push(p);
            } else {
                good.push((p, ReducedOrbit::new(f, a0, p)?.hits_zero()));
            }
        }
        Ok((bad, good))
    })?;
    let (mut bad, mut good) = (Vec::new(), Vec::new());
    for (b, g) in parts {
        bad.extend(b);
        good.extend(g);
    }
    Ok((bad, good))
}

pub fn orbit_prime_density(f: &Poly<Rationals>, a0: &BigRational, x: u64, opts: &OrbitOptions) -> Result<OrbitDensityReport> {
    check_inputs(f, x, opts.prime_cap)?;
    let (bad, good) = classify(f, a0, x, opts.workers)?;
    if good.is_empty() {
        return Err(Error::InvalidParameter(format!("no good primes up to {x}")));
    }
    let dividing = good.iter().filter(|(_, hit)| *hit).count() as u64;
    let density = BigRational::new(dividing.into(), (good.len() as u64).into());
    let d = f.deg();
    Ok(OrbitDensityReport {
        f: f.to_text(),
        a0: Rationals.format_elem(a0),
        x,
        good_primes: good.len() as u64,
        dividing,
        density_num: density.numer().clone(),
        density_den: density.denom().clone(),
        bad_primes: bad,
        fpp_ladder: if d >= 2 { fpp_ladder(d, LADDER_LEN) } else { Vec::new() },
    })
}

/// The good primes up to `x` dividing some `f^n(a0)`, `n >= 1`.
pub fn dividing_primes(f: &Poly<Rationals>, a0: &BigRational, x: u64, opts: &OrbitOptions) -> Result<Vec<u64>> {
    check_inputs(f, x, opts.prime_cap)?;
    let (_, good) = classify(f, a0, x, opts.workers)?;
    Ok(good.into_iter().filter(|(_, hit)| *hit).map(|(p, _)| p).collect())
}

const ORBIT_HEADER: [&str; 6] = ["X", "good_primes", "dividing", "density_num", "density_den", "bad_primes"];

impl Report for OrbitDensityReport {
    fn to_csv(&self) -> String {
        let ladder: Vec<String> = self.fpp_ladder.iter().map(ratio_text).collect();
        let meta = [("f", self.f.clone()), ("a0", self.a0.clone()), ("fpp_ladder", ladder.join(";"))];
        let row = (
            self.x,
            self.good_primes,
            self.dividing,
            self.density_num.to_string(),
            self.density_den.to_string(),
            join(&self.bad_primes),
        );
        write_csv(&meta, &ORBIT_HEADER, &[row])
    }

    fn from_csv(s: &str) -> Result<Self> {
        let parsed = read_csv::<(u64, u64, u64, String, String, String)>(s, &ORBIT_HEADER)?;
        let [(x, good_primes, dividing, num, den, bad)] = <[_; 1]>::try_from(parsed.rows.clone())
            .map_err(|_| Error::Parse("expected exactly one data row".into()))?;
        let bad_int = |v: &str| Error::Parse(format!("bad integer '{v}'"));
        let ladder = parsed.get_str("fpp_ladder")?;
        Ok(OrbitDensityReport {
            f: parsed.get_str("f")?,
            a0: parsed.get_str("a0")?,
            x,
            good_primes,
            dividing,
            density_num: num.parse().map_err(|_| bad_int(&num))?,
            density_den: den.parse().map_err(|_| bad_int(&den))?,
            bad_primes: split(&bad)?,
            fpp_ladder: ladder.split(';').filter(|t| !t.is_empty()).map(parse_ratio).collect::<Result<_>>()?,
        })
    }
}
