//! Exact cycle-pattern distribution of the leaf action of `[S_d]^n`, and
//! fixed-point proportions.
//!
//! The distribution is computed level by level through
//! `[S_d]^n = S_d[[S_d]^(n-1)]`. For a root permutation with a `k`-cycle on
//! branches `i_1 -> ... -> i_k`, the leaves below those branches are permuted
//! in cycles of length `k * l`, one for each `l`-cycle of the product of the
//! `k` subtree elements taken around the cycle. That product is uniform when
//! the subtrees are, so each root cycle independently draws a pattern from the
//! depth-`n-1` distribution, scaled by `k`. Counts are kept as integers, out
//! of `|[S_d]^n|`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::pattern::CyclePattern;
use crate::error::{Error, Result};

/// Default bound on `d^n` for [`pattern_distribution`].
pub const DEFAULT_LEAF_CAP: u64 = 64;

/// `|[S_d]^n| = (d!)^((d^n - 1)/(d - 1))`.
pub fn wreath_order(d: usize, n: usize) -> BigUint {
    let fact: BigUint = (1..=d as u64).product();
    let nodes: u64 = (0..n).map(|l| (d as u64).pow(l as u32)).sum();
    num_traits::pow(fact, nodes as usize)
}

/// Exact distribution of leaf cycle patterns under the uniform measure on
/// `[S_d]^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternDistribution {
    pub d: usize,
    pub n: usize,
    /// Number of group elements with each supported pattern.
    counts: BTreeMap<CyclePattern, BigUint>,
    group_order: BigUint,
}

impl PatternDistribution {
    pub fn group_order(&self) -> &BigUint {
        &self.group_order
    }

    pub fn leaves(&self) -> u64 {
        (self.d as u64).pow(self.n as u32)
    }

    /// Supported patterns in ascending order.
    pub fn support(&self) -> impl Iterator<Item = &CyclePattern> {
        self.counts.keys()
    }

    pub fn contains(&self, pattern: &CyclePattern) -> bool {
        self.counts.contains_key(pattern)
    }

    pub fn count(&self, pattern: &CyclePattern) -> BigUint {
        self.counts.get(pattern).cloned().unwrap_or_default()
    }

    /// `(pattern, probability)` pairs in ascending pattern order.
    pub fn entries(&self) -> impl Iterator<Item = (&CyclePattern, BigRational)> + '_ {
        self.counts.iter().map(|(p, c)| (p, self.to_prob(c)))
    }

    fn to_prob(&self, c: &BigUint) -> BigRational {
        BigRational::new(c.clone().into(), self.group_order.clone().into())
    }

    /// `rho(pi)`: probability of `pattern`, zero when unsupported.
    pub fn rho(&self, pattern: &CyclePattern) -> Result<BigRational> {
        if pattern.degree() != self.leaves() {
            return Err(Error::InvalidParameter(format!(
                "pattern {pattern} has degree {}, expected {}",
                pattern.degree(),
                self.leaves()
            )));
        }
        Ok(self.to_prob(&self.count(pattern)))
    }

    /// Probability that an element fixes at least one leaf.
    pub fn fixed_point_proportion(&self) -> BigRational {
        let total: BigUint = self.counts.iter().filter(|(p, _)| p.fixed_points() > 0).map(|(_, c)| c).sum();
        self.to_prob(&total)
    }

    /// Rebuilds from probabilities (e.g. when re-reading a CSV report).
    pub fn from_probabilities(d: usize, n: usize, probs: impl IntoIterator<Item = (CyclePattern, BigRational)>) -> Result<Self> {
        let order = wreath_order(d, n);
        let order_q = BigRational::from_integer(order.clone().into());
        let mut counts = BTreeMap::new();
        for (p, prob) in probs {
            let c = prob * &order_q;
            if !c.is_integer() || c < BigRational::zero() {
                return Err(Error::Parse(format!("probability for {p} is not a multiple of 1/|G|")));
            }
            let c: BigUint = c.to_integer().try_into().map_err(|_| Error::Parse("negative count".into()))?;
            counts.insert(p, c);
        }
        let dist = PatternDistribution { d, n, counts, group_order: order };
        let total: BigUint = dist.counts.values().sum();
        if total != dist.group_order {
            return Err(Error::Parse("probabilities do not sum to 1".into()));
        }
        Ok(dist)
    }
}

fn check_params(d: usize, n: usize, leaf_cap: u64) -> Result<()> {
    if d < 2 || n < 1 {
        return Err(Error::InvalidParameter(format!("need d >= 2 and n >= 1, got d={d} n={n}")));
    }
    let leaves = (d as u64).checked_pow(n as u32);
    match leaves {
        Some(l) if l <= leaf_cap => Ok(()),
        _ => Err(Error::cap(format!("d^n for (d,n)=({d},{n})"), format!("{d}^{n}"), leaf_cap)),
    }
}

/// Cycle types of `S_d` with their class sizes `d! / prod(i^r_i r_i!)`.
pub fn symmetric_class_sizes(d: usize) -> Vec<(CyclePattern, BigUint)> {
    let fact: BigUint = (1..=d as u64).product();
    let mut out = Vec::new();
    let mut parts = Vec::new();
    partitions(d as u32, d as u32, &mut parts, &mut |lengths| {
        let pattern = CyclePattern::from_lengths(lengths.iter().copied());
        let mut centralizer = BigUint::one();
        for &(l, r) in pattern.parts() {
            centralizer *= BigUint::from(l).pow(r);
            centralizer *= (1..=r as u64).product::<BigUint>();
        }
        out.push((pattern, &fact / centralizer));
    });
    out.sort();
    out
}

fn partitions(rest: u32, max: u32, cur: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if rest == 0 {
        emit(cur);
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        cur.push(part);
        partitions(rest - part, part, cur, emit);
        cur.pop();
    }
}

type Counts = BTreeMap<CyclePattern, BigUint>;

fn convolve(a: &Counts, b: &Counts) -> Counts {
    let mut out = Counts::new();
    for (pa, ca) in a {
        for (pb, cb) in b {
            *out.entry(pa.union(pb)).or_default() += ca * cb;
        }
    }
    out
}

/// [`pattern_distribution_with_cap`] with `d^n <= 64`.
pub fn pattern_distribution(d: usize, n: usize) -> Result<PatternDistribution> {
    pattern_distribution_with_cap(d, n, DEFAULT_LEAF_CAP)
}

pub fn pattern_distribution_with_cap(d: usize, n: usize, leaf_cap: u64) -> Result<PatternDistribution> {
    check_params(d, n, leaf_cap)?;
    let top = symmetric_class_sizes(d);
    let mut level: Counts = top.iter().cloned().collect();
    let mut order = wreath_order(d, 1);
    for depth in 2..=n {
        let mut next = Counts::new();
        // Each root k-cycle contributes |G_{depth-1}|^(k-1) choices of subtree
        // tuple per value of their product.
        let mut scaled: BTreeMap<u32, Counts> = BTreeMap::new();
        let mut powers: BTreeMap<(u32, u32), Counts> = BTreeMap::new();
        for (top_type, class_size) in &top {
            let mut acc = Counts::from([(CyclePattern::default(), class_size.clone())]);
            for &(k, r) in top_type.parts() {
                let block = scaled
                    .entry(k)
                    .or_insert_with(|| {
                        let weight = num_traits::pow(order.clone(), k as usize - 1);
                        level.iter().map(|(p, c)| (p.scaled(k), c * &weight)).collect()
                    })
                    .clone();
                let power = powers
                    .entry((k, r))
                    .or_insert_with(|| {
                        let mut pw = Counts::from([(CyclePattern::default(), BigUint::one())]);
                        for _ in 0..r {
                            pw = convolve(&pw, &block);
                        }
                        pw
                    })
                    .clone();
                acc = convolve(&acc, &power);
            }
            for (p, c) in acc {
                *next.entry(p).or_default() += c;
            }
        }
        level = next;
        order = wreath_order(d, depth);
    }
    let dist = PatternDistribution { d, n, counts: level, group_order: order };
    debug_assert_eq!(dist.counts.values().sum::<BigUint>(), dist.group_order);
    Ok(dist)
}

/// How `fpp` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FppMethod {
    /// Sum of `rho(pi)` over patterns with a fixed point.
    FromDistribution,
    /// `f_1 = 1 - D_d/d!`, `f_{m+1} = 1 - sum_j P[fix = j] (1 - f_m)^j`.
    Recursive,
}

/// Derangement numbers `D_0..=D_d`.
fn derangements(d: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::one(), BigUint::zero()];
    for m in 2..=d {
        let v = BigUint::from(m as u64 - 1) * (&out[m - 1] + &out[m - 2]);
        out.push(v);
    }
    out.truncate(d + 1);
    out
}

/// Probability that a uniform element of `S_d` fixes exactly `j` points,
/// for `j = 0..=d`: `C(d,j) D_{d-j} / d!`.
pub fn fixed_point_law(d: usize) -> Vec<BigRational> {
    let der = derangements(d);
    let fact: BigUint = (1..=d as u64).product();
    (0..=d)
        .map(|j| {
            let binom = num_integer::binomial(BigUint::from(d), BigUint::from(j));
            BigRational::new((binom * &der[d - j]).into(), fact.clone().into())
        })
        .collect()
}

/// Fixed-point proportion of `[S_d]^n`.
pub fn fpp(d: usize, n: usize, method: FppMethod) -> Result<BigRational> {
    match method {
        FppMethod::FromDistribution => Ok(pattern_distribution(d, n)?.fixed_point_proportion()),
        FppMethod::Recursive => {
            if d < 2 || n < 1 {
                return Err(Error::InvalidParameter(format!("need d >= 2 and n >= 1, got d={d} n={n}")));
            }
            Ok(fpp_ladder(d, n).pop().expect("n >= 1"))
        }
    }
}

/// `fpp(d, m)` for `m = 1..=n` by the recursion.
pub fn fpp_ladder(d: usize, n: usize) -> Vec<BigRational> {
    let law = fixed_point_law(d);
    let mut out = Vec::with_capacity(n);
    let mut f = BigRational::one();
    for _ in 0..n {
        let miss = BigRational::one() - &f;
        let mut none = BigRational::zero();
        let mut pw = BigRational::one();
        for pj in &law {
            none += pj * &pw;
            pw *= &miss;
        }
        f = BigRational::one() - none;
        out.push(f.clone());
    }
    out
}
