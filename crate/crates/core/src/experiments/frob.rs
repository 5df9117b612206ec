//! Cycle patterns of the fibers `f^n(x) - alpha` over `alpha in GF(q)`.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::parallel::{block_count, block_range, block_rng, run_blocks};
use super::report::{read_csv, write_csv, Report};
use crate::algebra::{factor, is_squarefree, Field, FieldSpec, Gf, Poly};
use crate::dynamics::iterate;
use crate::error::{Error, Result};
use crate::wreath::{CyclePattern, DEFAULT_LEAF_CAP};

/// Largest `q` walked exhaustively, and largest sample count, by default.
pub const DEFAULT_ALPHA_CAP: u64 = 10_000_000;

const BLOCK: u64 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum FrobMode {
    Exhaustive,
    Sample { samples: u64, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct FrobOptions {
    pub workers: usize,
    pub leaf_cap: u64,
    pub alpha_cap: u64,
    pub seed: u64,
}

impl Default for FrobOptions {
    fn default() -> Self {
        FrobOptions { workers: 1, leaf_cap: DEFAULT_LEAF_CAP, alpha_cap: DEFAULT_ALPHA_CAP, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobRow {
    pub pattern: CyclePattern,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobReport {
    /// Field tag, e.g. `q=5^1`.
    pub field: String,
    pub f: String,
    pub n: usize,
    #[serde(flatten)]
    pub mode: FrobMode,
    pub alpha_count: u64,
    pub rows: Vec<FrobRow>,
    pub skipped: u64,
}

impl FrobReport {
    pub fn tally(&self, pattern: &CyclePattern) -> u64 {
        self.rows.iter().find(|r| &r.pattern == pattern).map_or(0, |r| r.count)
    }

    pub fn consistent(&self) -> bool {
        self.rows.iter().map(|r| r.count).sum::<u64>() + self.skipped == self.alpha_count
    }
}

pub fn frob_sample(f: &Poly<Gf>, n: usize, mode: FrobMode, opts: &FrobOptions) -> Result<FrobReport> {
    let field = f.field().clone();
    let q = field.order();
    let d = f.degree().filter(|&d| d >= 1).ok_or_else(|| Error::InvalidParameter("f must be nonconstant".into()))?;
    let leaves = (d as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if leaves > opts.leaf_cap {
        return Err(Error::cap(format!("d^n for d={d}, n={n}"), leaves, opts.leaf_cap));
    }
    let alpha_count = match mode {
        FrobMode::Exhaustive => q,
        FrobMode::Sample { samples, .. } => samples,
    };
    if alpha_count > opts.alpha_cap {
        return Err(Error::cap("number of fibers", alpha_count, opts.alpha_cap));
    }
    let fnn = iterate(f, n)?;
    let fiber = |alpha: u64, salt: u64| -> Result<Option<CyclePattern>> {
        let g = &fnn - &Poly::constant(field.clone(), alpha);
        if !is_squarefree(&g)? {
            return Ok(None);
        }
        let fact = factor(&g, opts.seed ^ salt)?;
        Ok(Some(CyclePattern::from_lengths(fact.factors.iter().map(|(h, _)| h.deg() as u32))))
    };
    let parts = run_blocks(block_count(alpha_count, BLOCK), opts.workers, |blk| {
        let mut tally = BTreeMap::<CyclePattern, u64>::new();
        let mut skipped = 0u64;
        let mut rng = match mode {
            FrobMode::Sample { seed, .. } => Some(block_rng(seed, blk)),
            FrobMode::Exhaustive => None,
        };
        for i in block_range(alpha_count, BLOCK, blk) {
            let alpha = match rng.as_mut() {
                Some(r) => field.element(r.gen_range(0..q)),
                None => field.element(i),
            };
            match fiber(alpha, i)? {
                Some(p) => *tally.entry(p).or_default() += 1,
                None => skipped += 1,
            }
        }
        Ok((tally, skipped))
    })?;
    let mut tally = BTreeMap::<CyclePattern, u64>::new();
    let mut skipped = 0;
    for (t, s) in parts {
        for (p, c) in t {
            *tally.entry(p).or_default() += c;
        }
        skipped += s;
    }
    Ok(FrobReport {
        field: FieldSpec::Finite(field.clone()).to_string(),
        f: f.to_text(),
        n,
        mode,
        alpha_count,
        rows: tally.into_iter().map(|(pattern, count)| FrobRow { pattern, count }).collect(),
        skipped,
    })
}

const FROB_HEADER: [&str; 4] = ["alpha_count", "pattern", "count", "skipped"];

impl Report for FrobReport {
    fn to_csv(&self) -> String {
        let mut meta = vec![("field", self.field.clone()), ("f", self.f.clone()), ("n", self.n.to_string())];
        match self.mode {
            FrobMode::Exhaustive => meta.push(("mode", "exhaustive".into())),
            FrobMode::Sample { samples, seed } => {
                meta.push(("mode", "sample".into()));
                meta.push(("samples", samples.to_string()));
                meta.push(("seed", seed.to_string()));
            }
        }
        meta.push(("alpha_count", self.alpha_count.to_string()));
        meta.push(("skipped", self.skipped.to_string()));
        let rows: Vec<_> = self.rows.iter().map(|r| (self.alpha_count, &r.pattern, r.count, self.skipped)).collect();
        write_csv(&meta, &FROB_HEADER, &rows)
    }

    fn from_csv(s: &str) -> Result<Self> {
        let parsed = read_csv::<(u64, CyclePattern, u64, u64)>(s, &FROB_HEADER)?;
        let mode = match parsed.get_str("mode")?.as_str() {
            "exhaustive" => FrobMode::Exhaustive,
            "sample" => FrobMode::Sample { samples: parsed.get("samples")?, seed: parsed.get("seed")? },
            m => return Err(Error::Parse(format!("unknown mode '{m}'"))),
        };
        let (alpha_count, skipped) = (parsed.get("alpha_count")?, parsed.get("skipped")?);
        if parsed.rows.iter().any(|r| r.0 != alpha_count || r.3 != skipped) {
            return Err(Error::Parse("row totals disagree with header lines".into()));
        }
        Ok(FrobReport {
            field: parsed.get_str("field")?,
            f: parsed.get_str("f")?,
            n: parsed.get("n")?,
            mode,
            alpha_count,
            rows: parsed.rows.into_iter().map(|(_, pattern, count, _)| FrobRow { pattern, count }).collect(),
            skipped,
        })
    }
}
