//! Explicit closures of small permutation groups, with transitivity and
//! primitivity tests.

use std::collections::{HashSet, VecDeque};

use super::perm::Perm;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Elements in breadth-first discovery order, identity first.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.contains(p)
    }

    pub fn has_transposition(&self) -> bool {
        self.elements.iter().any(|p| p.cycle_lengths().iter().filter(|&&l| l > 1).eq([2].iter()))
    }

    /// Orbit of a point under the generators.
    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        let mut queue = VecDeque::from([point]);
        seen[point as usize] = true;
        let mut out = Vec::new();
        while let Some(a) = queue.pop_front() {
            out.push(a);
            for g in &self.generators {
                let b = g.apply(a);
                if !seen[b as usize] {
                    seen[b as usize] = true;
                    queue.push_back(b);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Smallest block of imprimitivity containing `a` and `b`, by merging
    /// images of merged pairs under every generator until stable.
    pub fn minimal_block(&self, a: u32, b: u32) -> Vec<u32> {
        let mut uf = UnionFind::new(self.degree);
        let mut pending = vec![(a, b)];
        uf.union(a as usize, b as usize);
        while let Some((x, y)) = pending.pop() {
            for g in &self.generators {
                let (gx, gy) = (g.apply(x), g.apply(y));
                if uf.union(gx as usize, gy as usize) {
                    pending.push((gx, gy));
                }
            }
        }
        let root = uf.find(a as usize);
        (0..self.degree as u32).filter(|&i| uf.find(i as usize) == root).collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// True when the classes were distinct.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Breadth-first closure of `gens` on `degree` points; fails once more than
/// `cap` elements have been found.
pub fn group_closure(degree: usize, gens: &[Perm], cap: usize) -> Result<PermGroup> {
    if cap == 0 {
        return Err(Error::InvalidParameter("closure cap must be at least 1".into()));
    }
    if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
        return Err(Error::InvalidParameter(format!("generator {g:?} is not on {degree} points")));
    }
    let id = Perm::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut elements = vec![id];
    let mut next = 0;
    while next < elements.len() {
        let e = elements[next].clone();
        next += 1;
        for g in gens {
            let h = g.compose(&e);
            if seen.insert(h.clone()) {
                elements.push(h);
                if elements.len() > cap {
                    return Err(Error::cap("group closure", format!(">{cap}"), cap));
                }
            }
        }
    }
    Ok(PermGroup { degree, generators: gens.to_vec(), elements })
}

pub fn is_transitive(g: &PermGroup) -> bool {
    g.degree == 0 || g.orbit(0).len() == g.degree
}

/// Transitive with no block of imprimitivity other than singletons and the
/// whole set. Degree 1 counts as primitive; intransitive groups never do.
pub fn is_primitive(g: &PermGroup) -> bool {
    if g.degree <= 1 {
        return true;
    }
    if !is_transitive(g) {
        return false;
    }
    (1..g.degree as u32).all(|j| g.minimal_block(0, j).len() == g.degree)
}
