//! Resultants over a field, and norms of polynomials in one variable `T`
//! computed as determinants over `F[T]`.
//!
//! For nonconstant `c(x)` of degree `m`, multiplication by `h(x)`
//! on `F[x]/(c)` has determinant `prod_{c(w)=0} h(w)` (roots with
//! multiplicity). Resultants against polynomials that are linear in `T`
//! therefore reduce to determinants of matrix pencils `A - T B`, which
//! fraction-free elimination handles exactly.

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Resultant `Res(f, g) = lc(f)^deg g * prod_{f(a)=0} g(a)`.
///
/// A zero argument against a nonzero one gives 0; two zeros are an error.
pub fn resultant<F: Field>(f: &Poly<F>, g: &Poly<F>) -> Result<F::Elem> {
    if f.field() != g.field() {
        return Err(Error::FieldMismatch);
    }
    let fld = f.field().clone();
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::ZeroPolynomial),
        (true, false) | (false, true) => return Ok(fld.zero()),
        _ => {}
    }
    let mut a = f.clone();
    let mut b = g.clone();
    let mut acc = fld.one();
    loop {
        let (da, db) = (a.deg(), b.deg());
        if db == 0 {
            return Ok(fld.mul(&acc, &fld.pow(&b.leading(), da as u64)));
        }
        if da == 0 {
            return Ok(fld.mul(&acc, &fld.pow(&a.leading(), db as u64)));
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return Ok(fld.zero());
        }
        // Res(a, b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r)
        if (da * db) % 2 == 1 {
            acc = fld.neg(&acc);
        }
        acc = fld.mul(&acc, &fld.pow(&b.leading(), (da - r.deg()) as u64));
        a = b;
        b = r;
    }
}

/// Determinant of a square matrix over `F[T]` by Bareiss elimination.
pub fn det_poly<F: Field>(field: &F, mut m: Vec<Vec<Poly<F>>>) -> Poly<F> {
    let n = m.len();
    if n == 0 {
        return Poly::one(field.clone());
    }
    let mut sign = false;
    let mut prev = Poly::one(field.clone());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return Poly::zero(field.clone()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -&d
    } else {
        d
    }
}

/// Matrix of multiplication by `h` on `F[x]/(c)` in the monomial basis,
/// as rows of scalars: entry `[i][j]` is the `x^i` coefficient of `x^j h mod c`.
pub fn multiplication_matrix<F: Field>(c: &Poly<F>, h: &Poly<F>) -> Vec<Vec<F::Elem>> {
    let m = c.deg();
    let mut cols = Vec::with_capacity(m);
    let mut cur = h.rem(c);
    for _ in 0..m {
        cols.push(cur.clone());
        cur = cur.shift(1).rem(c);
    }
    (0..m).map(|i| cols.iter().map(|col| col.coeff(i)).collect()).collect()
}

/// `prod_{c(w)=0} (a(w) - T b(w))` as a polynomial in `T`, over the roots of
/// `c` with multiplicity.
pub fn norm_pencil<F: Field>(c: &Poly<F>, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let fld = c.field().clone();
    let ma = multiplication_matrix(c, a);
    let mb = multiplication_matrix(c, b);
    let m = ma.len();
    let entries = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| Poly::new(fld.clone(), vec![ma[i][j].clone(), fld.neg(&mb[i][j])]))
                .collect()
        })
        .collect();
    det_poly(&fld, entries)
}

/// Characteristic polynomial `prod_{c(w)=0} (T - h(w))`, monic of degree `deg c`.
pub fn charpoly_mod<F: Field>(c: &Poly<F>, h: &Poly<F>) -> Poly<F> {
    let fld = c.field().clone();
    let m = c.deg();
    let n = norm_pencil(c, h, &Poly::one(fld.clone()));
    // prod (h(w) - T) = (-1)^m prod (T - h(w))
    if m % 2 == 1 {
        -&n
    } else {
        n
    }
}
