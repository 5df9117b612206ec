//! Automorphisms of the depth-`n` rooted `d`-ary tree, i.e. elements of the
//! iterated wreath power `[S_d]^n`, as recursive portraits.
//!
//! An element is a root permutation of the `d` top-level branches together
//! with one automorphism of depth `n-1` per branch. Leaves are indexed by
//! their root-to-leaf digit string read in base `d`, root digit most
//! significant: leaf `(i, r)` maps to `(root(i), child_i(r))`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::Rng;

use super::distribution::wreath_order;
use super::perm::{all_perms, Perm};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TreeAut {
    arity: usize,
    depth: usize,
    root: Perm,
    /// Empty at depth 1.
    children: Vec<TreeAut>,
}

impl std::fmt::Debug for TreeAut {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.root)?;
        if !self.children.is_empty() {
            f.debug_list().entries(&self.children).finish()?;
        }
        Ok(())
    }
}

fn check_shape(d: usize, n: usize) -> Result<()> {
    if d < 2 || n < 1 {
        return Err(Error::InvalidParameter(format!("need d >= 2 and n >= 1, got d={d} n={n}")));
    }
    Ok(())
}

impl TreeAut {
    pub fn identity(d: usize, n: usize) -> Self {
        let children = if n > 1 { vec![TreeAut::identity(d, n - 1); d] } else { Vec::new() };
        TreeAut { arity: d, depth: n, root: Perm::identity(d), children }
    }

    /// Assembles an element from a root permutation and its subtrees.
    pub fn new(root: Perm, children: Vec<TreeAut>) -> Result<Self> {
        let d = root.degree();
        if children.is_empty() {
            check_shape(d, 1)?;
            return Ok(TreeAut { arity: d, depth: 1, root, children });
        }
        let depth = children[0].depth + 1;
        if children.len() != d || children.iter().any(|c| c.arity != d || c.depth + 1 != depth) {
            return Err(Error::ShapeMismatch("subtrees must share arity and depth".into()));
        }
        Ok(TreeAut { arity: d, depth, root, children })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn root(&self) -> &Perm {
        &self.root
    }

    pub fn children(&self) -> &[TreeAut] {
        &self.children
    }

    pub fn leaf_count(&self) -> usize {
        self.arity.pow(self.depth as u32)
    }

    /// Image of a single leaf.
    pub fn apply_leaf(&self, leaf: usize) -> usize {
        if self.depth == 1 {
            return self.root.apply(leaf as u32) as usize;
        }
        let block = self.arity.pow(self.depth as u32 - 1);
        let (i, r) = (leaf / block, leaf % block);
        self.root.apply(i as u32) as usize * block + self.children[i].apply_leaf(r)
    }

    /// The induced permutation of the `d^n` leaves.
    pub fn leaf_action(&self) -> Perm {
        let mut images = vec![0u32; self.leaf_count()];
        self.fill_leaf_images(&mut images);
        Perm::from_images(images).expect("tree automorphisms act bijectively")
    }

    fn fill_leaf_images(&self, out: &mut [u32]) {
        if self.depth == 1 {
            for (i, o) in out.iter_mut().enumerate() {
                *o = self.root.apply(i as u32);
            }
            return;
        }
        let block = out.len() / self.arity;
        for (i, chunk) in out.chunks_mut(block).enumerate() {
            self.children[i].fill_leaf_images(chunk);
            let base = self.root.apply(i as u32) * block as u32;
            for o in chunk.iter_mut() {
                *o += base;
            }
        }
    }

    /// `self ∘ other` (apply `other` first), so that
    /// `compose(a, b).leaf_action() == a.leaf_action().compose(&b.leaf_action())`.
    pub fn compose(&self, other: &TreeAut) -> Result<TreeAut> {
        if self.arity != other.arity || self.depth != other.depth {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose [S_{}]^{} with [S_{}]^{}",
                self.arity, self.depth, other.arity, other.depth
            )));
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &TreeAut) -> TreeAut {
        let root = self.root.compose(&other.root);
        let children = other
            .children
            .iter()
            .enumerate()
            .map(|(i, b)| self.children[other.root.apply(i as u32) as usize].compose_unchecked(b))
            .collect();
        TreeAut { arity: self.arity, depth: self.depth, root, children }
    }

    pub fn inverse(&self) -> TreeAut {
        let root = self.root.inverse();
        let mut children = self.children.clone();
        for (i, c) in self.children.iter().enumerate() {
            children[self.root.apply(i as u32) as usize] = c.inverse();
        }
        TreeAut { arity: self.arity, depth: self.depth, root, children }
    }

    /// Uniform sample from `[S_d]^n`: uniform root, independent uniform subtrees.
    pub fn sample<R: Rng + ?Sized>(d: usize, n: usize, rng: &mut R) -> TreeAut {
        let root = Perm::random(d, rng);
        let children = if n > 1 { (0..d).map(|_| TreeAut::sample(d, n - 1, rng)).collect() } else { Vec::new() };
        TreeAut { arity: d, depth: n, root, children }
    }
}

/// Largest group `enumerate_elements` will walk.
pub const ENUMERATION_CAP: u64 = 1_000_000;

/// Every element of `[S_d]^n` exactly once, in a fixed order: a mixed-radix
/// counter over the node permutations in preorder, last node fastest.
pub fn enumerate_elements(d: usize, n: usize) -> Result<ElementIter> {
    check_shape(d, n)?;
    let order = wreath_order(d, n);
    if order > BigUint::from(ENUMERATION_CAP) {
        return Err(Error::cap(format!("|[S_{d}]^{n}|"), order, ENUMERATION_CAP));
    }
    let nodes = (0..n).map(|l| d.pow(l as u32)).sum();
    Ok(ElementIter {
        d,
        n,
        perms: all_perms(d),
        counter: vec![0; nodes],
        remaining: order.to_u64().expect("within cap"),
    })
}

#[derive(Debug)]
pub struct ElementIter {
    d: usize,
    n: usize,
    perms: Vec<Perm>,
    counter: Vec<usize>,
    remaining: u64,
}

impl ElementIter {
    fn build(&self, depth: usize, pos: &mut usize) -> TreeAut {
        let root = self.perms[self.counter[*pos]].clone();
        *pos += 1;
        let children = if depth > 1 { (0..self.d).map(|_| self.build(depth - 1, pos)).collect() } else { Vec::new() };
        TreeAut { arity: self.d, depth, root, children }
    }
}

impl Iterator for ElementIter {
    type Item = TreeAut;

    fn next(&mut self) -> Option<TreeAut> {
        if self.remaining == 0 {
            return None;
        }
        let item = self.build(self.n, &mut 0);
        self.remaining -= 1;
        let radix = self.perms.len();
        for digit in self.counter.iter_mut().rev() {
            *digit += 1;
            if *digit < radix {
                break;
            }
            *digit = 0;
        }
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}
