//! Functional decomposition `f = g(h(x))` over a finite field, by exhaustive
//! search over normalized inner polynomials.

use crate::algebra::{Field, Poly};
use crate::error::{Error, Result};

/// Default bound on the number of inner candidates `q^(e-1)` per divisor `e`.
pub const DEFAULT_DECOMPOSITION_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
pub enum Decomposition<F: Field> {
    Indecomposable,
    /// `f = outer(inner(x))`, `inner` monic with zero constant term and
    /// both degrees above 1.
    Decomposable { outer: Poly<F>, inner: Poly<F> },
}

impl<F: Field> Decomposition<F> {
    pub fn is_indecomposable(&self) -> bool {
        matches!(self, Decomposition::Indecomposable)
    }
}

/// Writes `f = sum c_i(x) h(x)^i` with `deg c_i < deg h`. Returns
/// `g = sum c_i y^i` when every `c_i` is constant.
pub fn base_h_expansion<F: Field>(f: &Poly<F>, h: &Poly<F>) -> Option<Poly<F>> {
    let mut digits = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (quo, rem) = rest.divrem(h).ok()?;
        if !rem.is_constant() {
            return None;
        }
        digits.push(rem.coeff(0));
        rest = quo;
    }
    Some(Poly::new(f.field().clone(), digits))
}

fn proper_divisors(d: usize) -> Vec<usize> {
    (2..d).filter(|e| d % e == 0).collect()
}

/// Exhaustive indecomposability test over `GF(q)`. Every decomposition over
/// the field can be normalized to an inner polynomial that is monic with zero
/// constant term, so for each proper divisor `e` of `deg f` the `q^(e-1)`
/// such inner polynomials are tried in canonical order.
pub fn is_indecomposable_fq<F: Field>(f: &Poly<F>, budget: u64) -> Result<Decomposition<F>> {
    let fld = f.field().clone();
    let q = fld.size().ok_or(Error::Unsupported("infinite fields"))?;
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let divisors = proper_divisors(d);
    for &e in &divisors {
        let count = (q as u128).checked_pow(e as u32 - 1).unwrap_or(u128::MAX);
        if count > budget as u128 {
            return Err(Error::cap(format!("decomposition candidates for degree {e}"), count, budget));
        }
    }
    for e in divisors {
        let count = q.pow(e as u32 - 1);
        for idx in 0..count {
            let mut coeffs = vec![fld.zero()];
            let mut rest = idx;
            for _ in 1..e {
                coeffs.push(fld.element(rest % q));
                rest /= q;
            }
            coeffs.push(fld.one());
            let inner = Poly::new(fld.clone(), coeffs);
            if let Some(outer) = base_h_expansion(f, &inner) {
                return Ok(Decomposition::Decomposable { outer, inner });
            }
        }
    }
    Ok(Decomposition::Indecomposable)
}
