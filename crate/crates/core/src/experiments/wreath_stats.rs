//! Reports for exact wreath statistics and Monte Carlo sampling.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::parallel::{block_count, block_range, block_rng, run_blocks};
use super::report::{int_str, read_csv, write_csv, Report};
use crate::error::{Error, Result};
use crate::wreath::{fpp, fpp_ladder, CyclePattern, FppMethod, PatternDistribution, TreeAut};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistRow {
    pub pattern: CyclePattern,
    #[serde(with = "int_str")]
    pub numerator: BigInt,
    #[serde(with = "int_str")]
    pub denominator: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionReport {
    pub d: usize,
    pub n: usize,
    pub rows: Vec<DistRow>,
}

impl DistributionReport {
    pub fn new(dist: &PatternDistribution) -> Self {
        let rows = dist
            .entries()
            .map(|(p, r)| DistRow { pattern: p.clone(), numerator: r.numer().clone(), denominator: r.denom().clone() })
            .collect();
        DistributionReport { d: dist.d, n: dist.n, rows }
    }

    pub fn to_distribution(&self) -> Result<PatternDistribution> {
        let probs = self
            .rows
            .iter()
            .map(|r| (r.pattern.clone(), BigRational::new(r.numerator.clone(), r.denominator.clone())));
        PatternDistribution::from_probabilities(self.d, self.n, probs)
    }
}

const DIST_HEADER: [&str; 3] = ["pattern", "numerator", "denominator"];

impl Report for DistributionReport {
    fn to_csv(&self) -> String {
        let meta = [("d", self.d.to_string()), ("n", self.n.to_string())];
        let rows: Vec<_> = self.rows.iter().map(|r| (&r.pattern, r.numerator.to_string(), r.denominator.to_string())).collect();
        write_csv(&meta, &DIST_HEADER, &rows)
    }

    fn from_csv(s: &str) -> Result<Self> {
        let parsed = read_csv::<(CyclePattern, String, String)>(s, &DIST_HEADER)?;
        let bad = |v: &str| Error::Parse(format!("bad integer '{v}'"));
        let rows = parsed
            .rows
            .iter()
            .map(|(p, a, b)| {
                Ok(DistRow { pattern: p.clone(), numerator: a.parse().map_err(|_| bad(a))?, denominator: b.parse().map_err(|_| bad(b))? })
            })
            .collect::<Result<_>>()?;
        Ok(DistributionReport { d: parsed.get("d")?, n: parsed.get("n")?, rows })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FppRow {
    pub n: usize,
    #[serde(with = "int_str")]
    pub fpp_num: BigInt,
    #[serde(with = "int_str")]
    pub fpp_den: BigInt,
}

impl FppRow {
    pub fn fpp(&self) -> BigRational {
        BigRational::new(self.fpp_num.clone(), self.fpp_den.clone())
    }
}

/// `FPP([S_d]^m)` for `m = 1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FppReport {
    pub d: usize,
    pub rows: Vec<FppRow>,
}

/// The ladder by recursion, cross-checked against the exact distribution for
/// every level with at most `leaf_cap` leaves.
pub fn fpp_report(d: usize, n: usize, leaf_cap: u64) -> Result<FppReport> {
    fpp(d, 1, FppMethod::Recursive)?;
    let ladder = fpp_ladder(d, n);
    for (m, f) in ladder.iter().enumerate() {
        let leaves = (d as u64).checked_pow(m as u32 + 1);
        if leaves.is_some_and(|l| l <= leaf_cap) {
            let exact = crate::wreath::pattern_distribution_with_cap(d, m + 1, leaf_cap)?.fixed_point_proportion();
            if &exact != f {
                return Err(Error::Internal(format!("fixed-point proportions disagree at n = {}", m + 1)));
            }
        }
    }
    let rows = ladder
        .into_iter()
        .enumerate()
        .map(|(m, f)| FppRow { n: m + 1, fpp_num: f.numer().clone(), fpp_den: f.denom().clone() })
        .collect();
    Ok(FppReport { d, rows })
}

const FPP_HEADER: [&str; 3] = ["n", "fpp_num", "fpp_den"];

impl Report for FppReport {
    fn to_csv(&self) -> String {
        let rows: Vec<_> = self.rows.iter().map(|r| (r.n, r.fpp_num.to_string(), r.fpp_den.to_string())).collect();
        write_csv(&[("d", self.d.to_string())], &FPP_HEADER, &rows)
    }

    fn from_csv(s: &str) -> Result<Self> {
        let parsed = read_csv::<(usize, String, String)>(s, &FPP_HEADER)?;
        let bad = |v: &str| Error::Parse(format!("bad integer '{v}'"));
        let rows = parsed
            .rows
            .iter()
            .map(|(n, a, b)| Ok(FppRow { n: *n, fpp_num: a.parse().map_err(|_| bad(a))?, fpp_den: b.parse().map_err(|_| bad(b))? }))
            .collect::<Result<_>>()?;
        Ok(FppReport { d: parsed.get("d")?, rows })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRow {
    pub pattern: CyclePattern,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleReport {
    pub d: usize,
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub rows: Vec<SampleRow>,
}

/// Largest sample count accepted by default.
pub const DEFAULT_SAMPLE_CAP: u64 = 100_000_000;

const SAMPLE_BLOCK: u64 = 1024;

/// Leaf cycle patterns of `samples` uniform draws from `[S_d]^n`.
pub fn wreath_sample(d: usize, n: usize, samples: u64, seed: u64, workers: usize, leaf_cap: u64) -> Result<SampleReport> {
    if d < 2 || n < 1 {
        return Err(Error::InvalidParameter(format!("need d >= 2 and n >= 1, got d={d} n={n}")));
    }
    let leaves = (d as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if leaves > leaf_cap {
        return Err(Error::cap(format!("d^n for d={d}, n={n}"), leaves, leaf_cap));
    }
    if samples > DEFAULT_SAMPLE_CAP {
        return Err(Error::cap("sample count", samples, DEFAULT_SAMPLE_CAP));
    }
    let parts = run_blocks(block_count(samples, SAMPLE_BLOCK), workers, |b| {
        let mut rng = block_rng(seed, b);
        let mut t = BTreeMap::<CyclePattern, u64>::new();
        for _ in block_range(samples, SAMPLE_BLOCK, b) {
            *t.entry(TreeAut::sample(d, n, &mut rng).leaf_action().cycle_pattern()).or_default() += 1;
        }
        Ok(t)
    })?;
    let mut all = BTreeMap::<CyclePattern, u64>::new();
    for t in parts {
        for (p, c) in t {
            *all.entry(p).or_default() += c;
        }
    }
    let rows = all.into_iter().map(|(pattern, count)| SampleRow { pattern, count }).collect();
    Ok(SampleReport { d, n, samples, seed, rows })
}

const SAMPLE_HEADER: [&str; 2] = ["pattern", "count"];

impl Report for SampleReport {
    fn to_csv(&self) -> String {
        let meta = [
            ("d", self.d.to_string()),
            ("n", self.n.to_string()),
            ("samples", self.samples.to_string()),
            ("seed", self.seed.to_string()),
        ];
        let rows: Vec<_> = self.rows.iter().map(|r| (&r.pattern, r.count)).collect();
        write_csv(&meta, &SAMPLE_HEADER, &rows)
    }

    fn from_csv(s: &str) -> Result<Self> {
        let parsed = read_csv::<(CyclePattern, u64)>(s, &SAMPLE_HEADER)?;
        Ok(SampleReport {
            d: parsed.get("d")?,
            n: parsed.get("n")?,
            samples: parsed.get("samples")?,
            seed: parsed.get("seed")?,
            rows: parsed.rows.iter().map(|(pattern, count)| SampleRow { pattern: pattern.clone(), count: *count }).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wreath::pattern_distribution;

    #[test]
    fn distribution_report_round_trip() {
        let dist = pattern_distribution(2, 3).unwrap();
        let r = DistributionReport::new(&dist);
        let back = DistributionReport::from_csv(&r.to_csv()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_distribution().unwrap(), dist);
        assert_eq!(DistributionReport::from_json(&r.to_json()).unwrap(), r);
        let r22 = DistributionReport::new(&pattern_distribution(2, 2).unwrap());
        assert_eq!(r22.rows.len(), 4);
    }

    #[test]
    fn fpp_report_rows() {
        let r = fpp_report(2, 4, 64).unwrap();
        assert_eq!(r.rows[1].fpp(), BigRational::new(3.into(), 8.into()));
        assert_eq!(FppReport::from_csv(&r.to_csv()).unwrap(), r);
        assert!(fpp_report(1, 3, 64).is_err());
    }

    #[test]
    fn sampling_report() {
        let a = wreath_sample(2, 3, 5000, 7, 1, 64).unwrap();
        let b = wreath_sample(2, 3, 5000, 7, 5, 64).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rows.iter().map(|r| r.count).sum::<u64>(), 5000);
        assert_eq!(SampleReport::from_csv(&a.to_csv()).unwrap(), a);
        assert_eq!(SampleReport::from_json(&a.to_json()).unwrap(), a);
    }
}
