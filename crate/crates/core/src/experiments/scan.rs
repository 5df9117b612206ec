//! Exhaustive census of cycle patterns of `f^n` over all degree-`d`
//! polynomials with a fixed leading coefficient.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::parallel::{block_count, block_range, run_blocks};
use super::report::{int_str, read_csv, write_csv, Report};
use crate::algebra::{factor, field_make, is_squarefree, prime_power, Field, Gf, Poly};
use crate::dynamics::{is_in_h, iterate};
use crate::error::{Error, Result};
use crate::wreath::{pattern_distribution_with_cap, CyclePattern, DEFAULT_LEAF_CAP};

/// Default bound on `q^d`, the number of polynomials scanned.
pub const DEFAULT_POLY_CAP: u64 = 1_000_000;

const BLOCK: u64 = 64;

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub seed: u64,
    pub workers: usize,
    pub poly_cap: u64,
    pub leaf_cap: u64,
    /// Also count members of the genericity set.
    pub check_h: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { seed: 0, workers: 1, poly_cap: DEFAULT_POLY_CAP, leaf_cap: DEFAULT_LEAF_CAP, check_h: true }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub pattern: CyclePattern,
    pub count: u64,
    #[serde(with = "int_str")]
    pub rho_num: BigInt,
    #[serde(with = "int_str")]
    pub rho_den: BigInt,
    /// `|count - q^d rho| / q^(d - 1/2)`.
    pub deviation: f64,
}

impl ScanRow {
    pub fn rho(&self) -> BigRational {
        BigRational::new(self.rho_num.clone(), self.rho_den.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub q: u64,
    pub b: u64,
    pub d: usize,
    pub n: usize,
    /// Every supported pattern plus any observed one, ascending.
    pub rows: Vec<ScanRow>,
    pub non_squarefree: u64,
    pub h_member: u64,
}

impl ScanReport {
    pub fn tally(&self, pattern: &CyclePattern) -> u64 {
        self.rows.iter().find(|r| &r.pattern == pattern).map_or(0, |r| r.count)
    }

    /// Number of polynomials accounted for.
    pub fn total(&self) -> u64 {
        self.rows.iter().map(|r| r.count).sum::<u64>() + self.non_squarefree
    }

    pub fn partition_holds(&self) -> bool {
        Some(self.total()) == self.q.checked_pow(self.d as u32)
    }

    /// Observed patterns of probability zero.
    pub fn unsupported(&self) -> Vec<&CyclePattern> {
        self.rows.iter().filter(|r| r.count > 0 && r.rho_num.is_zero()).map(|r| &r.pattern).collect()
    }

    pub fn max_deviation(&self) -> f64 {
        self.rows.iter().map(|r| r.deviation).fold(0.0, f64::max)
    }

    /// Rows whose deviation exceeds `m`.
    pub fn violations(&self, m: f64) -> Vec<&ScanRow> {
        self.rows.iter().filter(|r| r.deviation > m).collect()
    }
}

/// The default acceptance constant `8 d^n`.
pub fn default_deviation_bound(d: usize, n: usize) -> f64 {
    8.0 * (d as f64).powi(n as i32)
}

pub(crate) fn field_of_order(q: u64) -> Result<Gf> {
    let (p, k) = prime_power(q).ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
    field_make(p, k)
}

/// `|count - expected| / q^(d - 1/2)` in floating point, from exact inputs.
pub(crate) fn deviation(count: u64, expected: &BigRational, q: u64, d: usize) -> f64 {
    let diff = (BigRational::from_integer(count.into()) - expected).abs();
    diff.to_f64().expect("finite") / (q as f64).powf(d as f64 - 0.5)
}

/// The `i`-th monic-up-to-`b` polynomial: digits of `i` in base `q` are the
/// indices of `a_0, ..., a_(d-1)`.
fn nth_poly(field: &Gf, b: u64, d: usize, mut i: u64) -> Poly<Gf> {
    let q = field.order();
    let mut coeffs = Vec::with_capacity(d + 1);
    for _ in 0..d {
        coeffs.push(field.element(i % q));
        i /= q;
    }
    coeffs.push(b);
    Poly::new(field.clone(), coeffs)
}

#[derive(Default)]
struct Tally {
    patterns: BTreeMap<CyclePattern, u64>,
    non_squarefree: u64,
    h_member: u64,
}

pub fn cheb_scan(q: u64, b: u64, d: usize, n: usize, opts: &ScanOptions) -> Result<ScanReport> {
    let field = field_of_order(q)?;
    if d < 2 || n < 1 {
        return Err(Error::InvalidParameter(format!("need d >= 2 and n >= 1, got d={d} n={n}")));
    }
    if d == 2 && field.p() == 2 {
        return Err(Error::InvalidParameter("the census is not run for d = 2 in characteristic 2".into()));
    }
    if b == 0 || b >= q {
        return Err(Error::InvalidParameter(format!("leading coefficient index must be in 1..{q}, got {b}")));
    }
    let total = q.checked_pow(d as u32).filter(|&t| t <= opts.poly_cap);
    let total = total.ok_or_else(|| Error::cap(format!("q^d for q={q}, d={d}"), format!("{q}^{d}"), opts.poly_cap))?;
    let dist = pattern_distribution_with_cap(d, n, opts.leaf_cap)?;
    let lead = field.element(b);

    let tallies = run_blocks(block_count(total, BLOCK), opts.workers, |blk| {
        let mut t = Tally::default();
        for i in block_range(total, BLOCK, blk) {
            let f = nth_poly(&field, lead, d, i);
            let fnn = iterate(&f, n)?;
            if is_squarefree(&fnn)? {
                let fact = factor(&fnn, opts.seed ^ i)?;
                let pat = CyclePattern::from_lengths(fact.factors.iter().map(|(g, _)| g.deg() as u32));
                *t.patterns.entry(pat).or_default() += 1;
            } else {
                t.non_squarefree += 1;
            }
            if opts.check_h && is_in_h(&f, n)?.overall {
                t.h_member += 1;
            }
        }
        Ok(t)
    })?;
    let mut all = Tally::default();
    for t in tallies {
        for (p, c) in t.patterns {
            *all.patterns.entry(p).or_default() += c;
        }
        all.non_squarefree += t.non_squarefree;
        all.h_member += t.h_member;
    }

    let mut keys: Vec<CyclePattern> = dist.support().cloned().collect();
    keys.extend(all.patterns.keys().filter(|p| !dist.contains(p)).cloned());
    keys.sort();
    let qd = BigRational::from_integer(total.into());
    let rows = keys
        .into_iter()
        .map(|pattern| {
            let rho = dist.rho(&pattern).unwrap_or_else(|_| BigRational::zero());
            let count = all.patterns.get(&pattern).copied().unwrap_or(0);
            let deviation = deviation(count, &(&qd * &rho), q, d);
            ScanRow { pattern, count, rho_num: rho.numer().clone(), rho_den: rho.denom().clone(), deviation }
        })
        .collect();
    Ok(ScanReport { q, b, d, n, rows, non_squarefree: all.non_squarefree, h_member: all.h_member })
}

const SCAN_HEADER: [&str; 9] = ["q", "b", "d", "n", "pattern", "count", "rho_num", "rho_den", "deviation"];

impl Report for ScanReport {
    fn to_csv(&self) -> String {
        let meta = [
            ("q", self.q.to_string()),
            ("b", self.b.to_string()),
            ("d", self.d.to_string()),
            ("n", self.n.to_string()),
            ("non_squarefree", self.non_squarefree.to_string()),
            ("h_member", self.h_member.to_string()),
        ];
        let rows: Vec<_> = self
            .rows
            .iter()
            .map(|r| (self.q, self.b, self.d, self.n, &r.pattern, r.count, r.rho_num.to_string(), r.rho_den.to_string(), r.deviation))
            .collect();
        write_csv(&meta, &SCAN_HEADER, &rows)
    }

    fn from_csv(s: &str) -> Result<Self> {
        type Rec = (u64, u64, usize, usize, CyclePattern, u64, String, String, f64);
        let parsed = read_csv::<Rec>(s, &SCAN_HEADER)?;
        let (q, b, d, n) = (parsed.get("q")?, parsed.get("b")?, parsed.get("d")?, parsed.get("n")?);
        let bad = |v: &str| Error::Parse(format!("bad integer '{v}'"));
        let rows = parsed
            .rows
            .iter()
            .map(|(rq, rb, rd, rn, pattern, count, num, den, deviation)| {
                if (*rq, *rb, *rd, *rn) != (q, b, d, n) {
                    return Err(Error::Parse("row parameters disagree with header lines".into()));
                }
                Ok(ScanRow {
                    pattern: pattern.clone(),
                    count: *count,
                    rho_num: num.parse().map_err(|_| bad(num))?,
                    rho_den: den.parse().map_err(|_| bad(den))?,
                    deviation: *deviation,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ScanReport { q, b, d, n, rows, non_squarefree: parsed.get("non_squarefree")?, h_member: parsed.get("h_member")? })
    }
}
