//! Critical points, critical orbits and the collision and triple-root tests.
//!
//! Critical values are never computed as algebraic numbers. For a squarefree
//! `c` whose roots are the critical points `w_i`, the polynomial
//! `r_n(T) = prod_i (T - f^n(w_i))` is the characteristic polynomial of
//! multiplication by `f^n(x) mod c` on `F[x]/(c)`; collisions between values
//! become repeated roots of `r_n` or common roots of `r_n` and `r_m`.

use serde::{Deserialize, Serialize};

use super::map::RationalMap;
use crate::algebra::{charpoly_mod, is_squarefree, radical, Field, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct CriticalData<F: Field> {
    pub map: RationalMap<F>,
    /// `f'` for polynomials, `p'q - pq'` for `p/q`.
    pub crit_poly: Poly<F>,
    /// Monic squarefree polynomial vanishing exactly at the finite critical
    /// points. In characteristic 2, where `f' = h^2` for polynomials, this is
    /// the radical of `h`.
    pub crit_radical: Poly<F>,
}

pub fn critical_data<F: Field>(map: &RationalMap<F>) -> Result<CriticalData<F>> {
    let crit_poly = map.critical_poly();
    if crit_poly.is_zero() {
        return Err(Error::InseparableFiber);
    }
    let crit_radical = radical(&crit_poly)?;
    Ok(CriticalData { map: map.clone(), crit_poly, crit_radical })
}

fn poly_crit_radical<F: Field>(f: &Poly<F>) -> Result<Poly<F>> {
    if f.is_constant() {
        return Err(Error::InvalidParameter("map must be nonconstant".into()));
    }
    let data = critical_data(&RationalMap::polynomial(f.clone())?)?;
    if data.crit_radical.is_constant() {
        return Err(Error::NoCriticalPoints);
    }
    Ok(data.crit_radical)
}

/// `r_n(T) = prod over distinct critical points w of (T - f^n(w))`, monic.
pub fn critical_value_poly<F: Field>(f: &Poly<F>, n: usize) -> Result<Poly<F>> {
    if n == 0 {
        return Err(Error::InvalidParameter("iterate count must be at least 1".into()));
    }
    Ok(critical_value_polys(f, n)?.pop().expect("n >= 1"))
}

/// `[r_1, ..., r_n]`.
pub fn critical_value_polys<F: Field>(f: &Poly<F>, n: usize) -> Result<Vec<Poly<F>>> {
    let c = poly_crit_radical(f)?;
    let mut h = Poly::x(f.field().clone()).rem(&c);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        h = f.compose_mod(&h, &c);
        out.push(charpoly_mod(&c, &h));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitCheck {
    Ok,
    /// Least `(n, m)` with `m <= n` such that `f^n(w_i) = f^m(w_j)` for some
    /// `(n, i) != (m, j)`.
    Collision { n: usize, m: usize },
}

/// Critical-orbit collision test up to time `big_n`.
pub fn orbit_collision_check<F: Field>(f: &Poly<F>, big_n: usize) -> Result<OrbitCheck> {
    if big_n == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    let rs = critical_value_polys(f, big_n)?;
    for n in 0..big_n {
        for m in 0..n {
            if !rs[n].gcd(&rs[m]).is_constant() {
                return Ok(OrbitCheck::Collision { n: n + 1, m: m + 1 });
            }
        }
        if !is_squarefree(&rs[n])? {
            return Ok(OrbitCheck::Collision { n: n + 1, m: n + 1 });
        }
    }
    Ok(OrbitCheck::Ok)
}

/// Characteristic 2 only: true iff no critical point `b` is a root of
/// `f - f(b)` of multiplicity at least 3, i.e. the first two Hasse
/// derivatives have no common root.
pub fn char2_cube_check<F: Field>(f: &Poly<F>) -> Result<bool> {
    let p = f.field().characteristic();
    if p != 2 {
        return Err(Error::WrongCharacteristic { expected: 2, actual: p });
    }
    let h1 = f.hasse_derivative(1);
    if h1.is_zero() {
        return Ok(false);
    }
    Ok(h1.gcd(&f.hasse_derivative(2)).is_constant())
}
