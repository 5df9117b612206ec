use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Cycle pattern `(1)^{r_1} ... (m)^{r_m}`: the multiset of cycle lengths of a
/// permutation, or of irreducible-factor degrees of a squarefree polynomial.
///
/// Stored as `(length, multiplicity)` pairs with strictly increasing lengths
/// and positive multiplicities. Text form: `"1^3 2^1 4^2"`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CyclePattern {
    parts: Vec<(u32, u32)>,
}

impl CyclePattern {
    pub fn from_lengths(lengths: impl IntoIterator<Item = u32>) -> Self {
        let mut counts = BTreeMap::new();
        for l in lengths {
            *counts.entry(l).or_insert(0u32) += 1;
        }
        CyclePattern { parts: counts.into_iter().collect() }
    }

    pub fn from_parts(parts: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let parts: Vec<(u32, u32)> = parts.into_iter().collect();
        let ok = parts.iter().all(|&(l, r)| l >= 1 && r >= 1)
            && parts.windows(2).all(|w| w[0].0 < w[1].0);
        if !ok {
            return Err(Error::InvalidParameter(format!("malformed cycle pattern {parts:?}")));
        }
        Ok(CyclePattern { parts })
    }

    /// The single-cycle pattern `(m)^1`.
    pub fn full_cycle(m: u32) -> Self {
        CyclePattern { parts: vec![(m, 1)] }
    }

    /// The identity pattern `(1)^m`.
    pub fn identity(m: u32) -> Self {
        CyclePattern { parts: vec![(1, m)] }
    }

    pub fn parts(&self) -> &[(u32, u32)] {
        &self.parts
    }

    /// `sum i * r_i`.
    pub fn degree(&self) -> u64 {
        self.parts.iter().map(|&(l, r)| l as u64 * r as u64).sum()
    }

    /// Multiplicity `r_i` of length `i`.
    pub fn count(&self, len: u32) -> u32 {
        self.parts.iter().find(|(l, _)| *l == len).map_or(0, |&(_, r)| r)
    }

    pub fn fixed_points(&self) -> u32 {
        self.count(1)
    }

    pub fn lengths(&self) -> impl Iterator<Item = u32> + '_ {
        self.parts.iter().flat_map(|&(l, r)| std::iter::repeat_n(l, r as usize))
    }

    /// Multiset union.
    pub fn union(&self, other: &CyclePattern) -> CyclePattern {
        let mut out = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() || j < other.parts.len() {
            match (self.parts.get(i), other.parts.get(j)) {
                (Some(&(a, ra)), Some(&(b, rb))) if a == b => {
                    out.push((a, ra + rb));
                    i += 1;
                    j += 1;
                }
                (Some(&a), Some(&b)) if a.0 < b.0 => {
                    out.push(a);
                    i += 1;
                }
                (Some(_), Some(&b)) => {
                    out.push(b);
                    j += 1;
                }
                (Some(&a), None) => {
                    out.push(a);
                    i += 1;
                }
                (None, Some(&b)) => {
                    out.push(b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        CyclePattern { parts: out }
    }

    /// Every cycle length multiplied by `k`.
    pub fn scaled(&self, k: u32) -> CyclePattern {
        CyclePattern { parts: self.parts.iter().map(|&(l, r)| (l * k, r)).collect() }
    }
}

impl fmt::Display for CyclePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (l, r)) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}^{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclePattern({self})")
    }
}

impl FromStr for CyclePattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad cycle pattern '{s}'"));
        let parts = s
            .split_whitespace()
            .map(|tok| {
                let (l, r) = tok.split_once('^').ok_or_else(bad)?;
                Ok((l.parse().map_err(|_| bad())?, r.parse().map_err(|_| bad())?))
            })
            .collect::<Result<Vec<(u32, u32)>>>()?;
        if parts.is_empty() {
            return Err(bad());
        }
        CyclePattern::from_parts(parts).map_err(|_| bad())
    }
}

impl Serialize for CyclePattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CyclePattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_form() {
        let p = CyclePattern::from_lengths([4, 1, 2, 1, 4, 1]);
        assert_eq!(p.to_string(), "1^3 2^1 4^2");
        assert_eq!(p.degree(), 13);
        assert_eq!("1^3 2^1 4^2".parse::<CyclePattern>().unwrap(), p);
        assert!("2^1 1^1".parse::<CyclePattern>().is_err());
        assert!("1^0".parse::<CyclePattern>().is_err());
        assert!("".parse::<CyclePattern>().is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(lengths in proptest::collection::vec(1u32..20, 1..30)) {
            let p = CyclePattern::from_lengths(lengths.clone());
            prop_assert_eq!(p.to_string().parse::<CyclePattern>().unwrap(), p.clone());
            prop_assert_eq!(p.degree(), lengths.iter().map(|&l| l as u64).sum::<u64>());
        }

        #[test]
        fn union_is_multiset_sum(a in proptest::collection::vec(1u32..9, 0..12),
                                 b in proptest::collection::vec(1u32..9, 0..12)) {
            let joined = CyclePattern::from_lengths(a.iter().chain(b.iter()).copied());
            let u = CyclePattern::from_lengths(a).union(&CyclePattern::from_lengths(b));
            prop_assert_eq!(u, joined);
        }
    }
}
