//! Characteristic 2: affine maps of `R_n = F_2[Y]/(Y^n)` and factor degrees
//! of iterated quadratics.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::parallel::{block_count, block_range, run_blocks};
use super::report::{int_str, read_csv, write_csv, Report};
use crate::algebra::{factor, field_make, is_squarefree, Field, Poly};
use crate::dynamics::iterate;
use crate::error::{Error, Result};
use crate::wreath::CyclePattern;

/// Largest `n` accepted by [`char2_affine_fpp`].
pub const MAX_AFFINE_N: usize = 20;

/// An element of `R_n` as a bit vector: bit `i` is the coefficient of `Y^i`.
pub type Rn = u32;

/// `a b mod Y^n`.
pub fn rn_mul(a: Rn, b: Rn, n: usize) -> Rn {
    let mut acc = 0;
    for i in 0..n {
        if a >> i & 1 == 1 {
            acc ^= b << i;
        }
    }
    acc & mask(n)
}

fn mask(n: usize) -> Rn {
    ((1u64 << n) - 1) as Rn
}

/// `v -> shift + unit * v` on `R_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffineMapChar2 {
    pub n: usize,
    pub shift: Rn,
    pub unit: Rn,
}

impl AffineMapChar2 {
    pub fn new(n: usize, shift: Rn, unit: Rn) -> Result<Self> {
        if n == 0 || n > MAX_AFFINE_N || shift > mask(n) || unit > mask(n) || unit & 1 == 0 {
            return Err(Error::InvalidParameter(format!("not an affine map of R_{n}: shift={shift:#b} unit={unit:#b}")));
        }
        Ok(AffineMapChar2 { n, shift, unit })
    }

    pub fn apply(&self, v: Rn) -> Rn {
        self.shift ^ rn_mul(self.unit, v, self.n)
    }

    /// A fixed point `v = shift + unit v` exists iff `1 + unit` divides
    /// `shift`. Writing `1 + unit = Y^s w` with `w` a unit, that holds iff
    /// `Y^s` divides `shift`; when `1 + unit = 0` only `shift = 0` works.
    pub fn has_fixed_point(&self) -> bool {
        let w = self.unit ^ 1;
        if w == 0 {
            return self.shift == 0;
        }
        self.shift.trailing_zeros() >= w.trailing_zeros()
    }
}

/// Number of the `2^(2n-1)` affine maps with a fixed point.
pub fn char2_affine_fixed_count(n: usize) -> Result<u64> {
    if n == 0 || n > MAX_AFFINE_N {
        return Err(Error::cap("n for affine maps of R_n", n, MAX_AFFINE_N));
    }
    let mut count = 0u64;
    for u in (0..=mask(n)).filter(|u| u & 1 == 1) {
        let w = u ^ 1;
        count += if w == 0 { 1 } else { 1u64 << (n as u32 - w.trailing_zeros()) };
    }
    Ok(count)
}

/// Proportion of affine maps of `R_n` with a fixed point.
pub fn char2_affine_fpp(n: usize) -> Result<BigRational> {
    let count = char2_affine_fixed_count(n)?;
    Ok(BigRational::new(count.into(), (BigInt::from(1) << (2 * n - 1)).into()))
}

/// `1/3 + 2 / (3 * 4^n)`.
pub fn char2_affine_fpp_closed_form(n: usize) -> BigRational {
    let four_n = BigInt::from(1) << (2 * n);
    BigRational::new(BigInt::from(1), BigInt::from(3)) + BigRational::new(BigInt::from(2), BigInt::from(3) * four_n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Char2Row {
    pub n: usize,
    #[serde(with = "int_str")]
    pub fpp_num: BigInt,
    #[serde(with = "int_str")]
    pub fpp_den: BigInt,
}

impl Char2Row {
    pub fn fpp(&self) -> BigRational {
        BigRational::new(self.fpp_num.clone(), self.fpp_den.clone())
    }
}

/// Affine fixed-point proportions for `n = 1..=max_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Char2Report {
    pub rows: Vec<Char2Row>,
}

pub fn char2_affine_report(max_n: usize) -> Result<Char2Report> {
    let rows = (1..=max_n)
        .map(|n| {
            let f = char2_affine_fpp(n)?;
            Ok(Char2Row { n, fpp_num: f.numer().clone(), fpp_den: f.denom().clone() })
        })
        .collect::<Result<_>>()?;
    Ok(Char2Report { rows })
}

const CHAR2_HEADER: [&str; 3] = ["n", "fpp_num", "fpp_den"];

impl Report for Char2Report {
    fn to_csv(&self) -> String {
        let rows: Vec<_> = self.rows.iter().map(|r| (r.n, r.fpp_num.to_string(), r.fpp_den.to_string())).collect();
        write_csv(&[], &CHAR2_HEADER, &rows)
    }

    fn from_csv(s: &str) -> Result<Self> {
        let parsed = read_csv::<(usize, String, String)>(s, &CHAR2_HEADER)?;
        let bad = |v: &str| Error::Parse(format!("bad integer '{v}'"));
        let rows = parsed
            .rows
            .iter()
            .map(|(n, a, b)| {
                Ok(Char2Row { n: *n, fpp_num: a.parse().map_err(|_| bad(a))?, fpp_den: b.parse().map_err(|_| bad(b))? })
            })
            .collect::<Result<_>>()?;
        Ok(Char2Report { rows })
    }
}

/// Largest `k` and `n` for [`char2_quadratic_scan`].
pub const MAX_QUAD_K: u32 = 4;
pub const MAX_QUAD_N: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadRow {
    pub profile: CyclePattern,
    pub count: u64,
}

/// Factor-degree profiles of `f^n - alpha` over all quadratics
/// `a2 x^2 + a1 x + a0` with `a1 a2 != 0` and all `alpha` in `GF(2^k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadReport {
    pub k: u32,
    pub n: usize,
    pub polynomials: u64,
    pub fibers: u64,
    pub skipped: u64,
    /// Squarefree fibers with a factor whose degree is not a power of 2
    /// dividing `2^n`.
    pub violations: u64,
    pub rows: Vec<QuadRow>,
}

fn degree_ok(deg: u32, n: usize) -> bool {
    deg.is_power_of_two() && deg <= 1 << n
}

pub fn char2_quadratic_scan(k: u32, n: usize, seed: u64, workers: usize) -> Result<QuadReport> {
    if k == 0 || k > MAX_QUAD_K {
        return Err(Error::cap("k for GF(2^k)", k, MAX_QUAD_K));
    }
    if n == 0 || n > MAX_QUAD_N {
        return Err(Error::cap("n for quadratic iterates", n, MAX_QUAD_N));
    }
    let field = field_make(2, k)?;
    let q = field.order();
    let units = q - 1;
    let polynomials = units * units * q;
    let parts = run_blocks(block_count(polynomials, 16), workers, |blk| {
        let mut tally = BTreeMap::<CyclePattern, u64>::new();
        let (mut skipped, mut violations) = (0u64, 0u64);
        for i in block_range(polynomials, 16, blk) {
            let a0 = field.element(i % q);
            let a1 = field.element(1 + (i / q) % units);
            let a2 = field.element(1 + i / (q * units));
            let fnn = iterate(&Poly::new(field.clone(), vec![a0, a1, a2]), n)?;
            for alpha in field.elements() {
                let g = &fnn - &Poly::constant(field.clone(), alpha);
                if !is_squarefree(&g)? {
                    skipped += 1;
                    continue;
                }
                let fact = factor(&g, seed ^ (i * q + alpha))?;
                let profile = CyclePattern::from_lengths(fact.factors.iter().map(|(h, _)| h.deg() as u32));
                if profile.lengths().any(|l| !degree_ok(l, n)) {
                    violations += 1;
                }
                *tally.entry(profile).or_default() += 1;
            }
        }
        Ok((tally, skipped, violations))
    })?;
    let mut tally = BTreeMap::<CyclePattern, u64>::new();
    let (mut skipped, mut violations) = (0, 0);
    for (t, s, v) in parts {
        for (p, c) in t {
            *tally.entry(p).or_default() += c;
        }
        skipped += s;
        violations += v;
    }
    Ok(QuadReport {
        k,
        n,
        polynomials,
        fibers: polynomials * q,
        skipped,
        violations,
        rows: tally.into_iter().map(|(profile, count)| QuadRow { profile, count }).collect(),
    })
}

const QUAD_HEADER: [&str; 4] = ["k", "n", "profile", "count"];

impl Report for QuadReport {
    fn to_csv(&self) -> String {
        let meta = [
            ("k", self.k.to_string()),
            ("n", self.n.to_string()),
            ("polynomials", self.polynomials.to_string()),
            ("fibers", self.fibers.to_string()),
            ("skipped", self.skipped.to_string()),
            ("violations", self.violations.to_string()),
        ];
        let rows: Vec<_> = self.rows.iter().map(|r| (self.k, self.n, &r.profile, r.count)).collect();
        write_csv(&meta, &QUAD_HEADER, &rows)
    }

    fn from_csv(s: &str) -> Result<Self> {
        let parsed = read_csv::<(u32, usize, CyclePattern, u64)>(s, &QUAD_HEADER)?;
        let (k, n) = (parsed.get("k")?, parsed.get("n")?);
        if parsed.rows.iter().any(|r| (r.0, r.1) != (k, n)) {
            return Err(Error::Parse("row parameters disagree with header lines".into()));
        }
        Ok(QuadReport {
            k,
            n,
            polynomials: parsed.get("polynomials")?,
            fibers: parsed.get("fibers")?,
            skipped: parsed.get("skipped")?,
            violations: parsed.get("violations")?,
            rows: parsed.rows.into_iter().map(|(_, _, profile, count)| QuadRow { profile, count }).collect(),
        })
    }
}
