//! Squarefree tests, squarefree decomposition and radicals.

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

/// `f(x) = g(x^p)` rewritten as `g'(x)^p`: takes coefficientwise p-th roots.
/// Only meaningful when the derivative of `f` vanishes.
fn pth_root_poly<F: Field>(f: &Poly<F>) -> Poly<F> {
    let fld = f.field();
    let p = fld.characteristic() as usize;
    debug_assert!(p > 0);
    let coeffs = f.coeffs().iter().step_by(p).map(|c| fld.pth_root(c)).collect();
    Poly::new(fld.clone(), coeffs)
}

/// True iff `gcd(f, f')` is constant. In characteristic `p`, a nonconstant
/// `f` with `f' = 0` is a p-th power and not squarefree.
pub fn is_squarefree<F: Field>(f: &Poly<F>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(true);
    }
    let d = f.derivative();
    if d.is_zero() {
        return Ok(false);
    }
    Ok(f.gcd(&d).is_constant())
}

/// Squarefree decomposition of a nonzero polynomial: pairwise coprime monic
/// squarefree `(g_i, m_i)` with `f = lc(f) * prod g_i^m_i`, multiplicities
/// distinct and ascending.
pub fn squarefree_decomposition<F: Field>(f: &Poly<F>) -> Result<Vec<(Poly<F>, u64)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    sqf_rec(&f.monic(), 1, &mut out);
    out.sort_by_key(|(_, m)| *m);
    Ok(out)
}

fn sqf_rec<F: Field>(f: &Poly<F>, scale: u64, out: &mut Vec<(Poly<F>, u64)>) {
    if f.is_constant() {
        return;
    }
    let p = f.field().characteristic();
    let d = f.derivative();
    if d.is_zero() {
        sqf_rec(&pth_root_poly(f), scale * p, out);
        return;
    }
    let mut c = f.gcd(&d);
    let mut w = f.div_exact(&c);
    let mut i = 1u64;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if !z.is_constant() {
            out.push((z, i * scale));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if !c.is_constant() {
        // Remaining factors have multiplicity divisible by p.
        debug_assert!(p > 0);
        sqf_rec(&pth_root_poly(&c), scale * p, out);
    }
}

/// Monic squarefree polynomial with the same roots in the algebraic closure.
pub fn radical<F: Field>(f: &Poly<F>) -> Result<Poly<F>> {
    let parts = squarefree_decomposition(f)?;
    let one = Poly::one(f.field().clone());
    Ok(parts.iter().fold(one, |acc, (g, _)| &acc * g))
}
