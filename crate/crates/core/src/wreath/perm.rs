use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use super::pattern::CyclePattern;
use crate::error::{Error, Result};

/// A permutation of `{0, ..., m-1}`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm { images: (0..m as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            match seen.get_mut(i as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(Error::InvalidParameter(format!("{images:?} is not a bijection"))),
            }
        }
        Ok(Perm { images })
    }

    /// Product of the given cycles on `m` points.
    pub fn from_cycles(m: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..m as u32).collect();
        for cycle in cycles {
            for (idx, &a) in cycle.iter().enumerate() {
                let b = cycle[(idx + 1) % cycle.len()];
                if a as usize >= m || b as usize >= m {
                    return Err(Error::InvalidParameter(format!("cycle {cycle:?} exceeds degree {m}")));
                }
                images[a as usize] = b;
            }
        }
        Perm::from_images(images)
    }

    pub fn transposition(m: usize, a: u32, b: u32) -> Self {
        let mut images: Vec<u32> = (0..m as u32).collect();
        images.swap(a as usize, b as usize);
        Perm { images }
    }

    pub fn random<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Self {
        let mut images: Vec<u32> = (0..m as u32).collect();
        images.shuffle(rng);
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degrees");
        Perm { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Perm { images }
    }

    pub fn cycle_lengths(&self) -> Vec<u32> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            out.push(len);
        }
        out
    }

    pub fn cycle_pattern(&self) -> CyclePattern {
        CyclePattern::from_lengths(self.cycle_lengths())
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &j)| *i as u32 == j).count()
    }
}

impl fmt::Debug for Perm {
    /// Disjoint-cycle notation, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut wrote = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
                first = false;
                i = self.images[i] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// All permutations of `{0..d-1}` in lexicographic order of image vectors.
pub fn all_perms(d: usize) -> Vec<Perm> {
    let mut cur: Vec<u32> = (0..d as u32).collect();
    let mut out = vec![Perm { images: cur.clone() }];
    loop {
        let Some(i) = (1..d).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..d).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Perm { images: cur.clone() });
    }
}
