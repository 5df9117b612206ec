//! Factorization over finite fields: squarefree split, distinct-degree split,
//! then seeded equal-degree splitting (Cantor–Zassenhaus; trace map in
//! characteristic 2).

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gf::Gf;
use super::poly::Poly;
use super::squarefree::{is_squarefree, squarefree_decomposition};
use crate::error::{Error, Result};
use crate::wreath::CyclePattern;

/// `f = unit * prod factor^multiplicity` with monic irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u64,
    pub factors: Vec<(Poly<Gf>, u64)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self, field: &Gf) -> Poly<Gf> {
        let start = Poly::constant(field.clone(), self.unit);
        self.factors.iter().fold(start, |acc, (g, m)| &acc * &g.pow(*m))
    }
}

/// Order on monic factors: degree, then coefficients read as a base-`q`
/// integer with the constant term least significant.
pub fn factor_order(a: &Poly<Gf>, b: &Poly<Gf>) -> Ordering {
    a.deg().cmp(&b.deg()).then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Complete factorization of a nonzero polynomial over `GF(q)`. The output
/// is deterministic in `(f, seed)` and sorted by [`factor_order`].
pub fn factor(f: &Poly<Gf>, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unit = f.leading();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(f)? {
        for (g, deg) in distinct_degree(&part) {
            for h in equal_degree(&g, deg, &mut rng) {
                factors.push((h, mult));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| factor_order(a, b));
    Ok(Factorization { unit, factors })
}

/// Splits a monic squarefree polynomial into `(product of all irreducible
/// factors of degree i, i)`.
pub fn distinct_degree(f: &Poly<Gf>) -> Vec<(Poly<Gf>, usize)> {
    let fld = f.field().clone();
    let q = fld.order() as u128;
    let x = Poly::x(fld);
    let mut rest = f.monic();
    let mut out = Vec::new();
    let mut h = x.rem(&rest);
    let mut i = 1;
    while rest.deg() >= 2 * i {
        h = h.pow_mod(q, &rest);
        let g = (&h - &x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, i));
        }
        i += 1;
    }
    if !rest.is_constant() {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

fn random_poly(fld: &Gf, below: usize, rng: &mut ChaCha8Rng) -> Poly<Gf> {
    let q = fld.order();
    let coeffs = (0..below).map(|_| rng.gen_range(0..q)).collect();
    Poly::new(fld.clone(), coeffs)
}

/// Splits a monic squarefree product of irreducibles of degree `deg`.
pub fn equal_degree(g: &Poly<Gf>, deg: usize, rng: &mut ChaCha8Rng) -> Vec<Poly<Gf>> {
    if g.deg() <= deg {
        return vec![g.clone()];
    }
    let fld = g.field().clone();
    let q = fld.order();
    loop {
        let a = random_poly(&fld, g.deg(), rng);
        if a.is_constant() {
            continue;
        }
        let b = if fld.p() == 2 {
            // Absolute trace: sum of a^(2^j) for j < k*deg.
            let steps = fld.k() as usize * deg;
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..steps {
                t = t.mul_mod(&t, g);
                acc = &acc + &t;
            }
            acc
        } else {
            // a^((q^deg - 1)/2) = (a^(1 + q + ... + q^(deg-1)))^((q-1)/2)
            let mut c = a.clone();
            let mut norm = a.clone();
            for _ in 1..deg {
                c = c.pow_mod(q as u128, g);
                norm = norm.mul_mod(&c, g);
            }
            &norm.pow_mod(((q - 1) / 2) as u128, g) - &Poly::one(fld.clone())
        };
        let d = b.gcd(g);
        if !d.is_constant() && d.deg() < g.deg() {
            let other = g.div_exact(&d);
            let mut out = equal_degree(&d, deg, rng);
            out.extend(equal_degree(&other, deg, rng));
            return out;
        }
    }
}

/// Cycle pattern of a squarefree nonconstant polynomial: `r_i` counts its
/// irreducible factors of degree `i`.
pub fn cycle_pattern_of_poly(f: &Poly<Gf>, seed: u64) -> Result<CyclePattern> {
    if f.is_constant() {
        return Err(Error::InvalidParameter("cycle pattern of a constant".into()));
    }
    if !is_squarefree(f)? {
        return Err(Error::NotSquarefree);
    }
    let fact = factor(f, seed)?;
    Ok(CyclePattern::from_lengths(fact.factors.iter().map(|(g, _)| g.deg() as u32)))
}
