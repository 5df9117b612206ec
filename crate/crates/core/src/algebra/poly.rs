//! Dense univariate polynomials over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use crate::error::{Error, Result};

/// Dense polynomial, coefficients in ascending degree. The zero polynomial
/// has no coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self.to_text())
    }
}

impl<F: Field> Poly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_i64s(field: F, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&n| field.from_i64(n)).collect();
        Poly::new(field, c)
    }

    pub fn zero(field: F) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Poly::new(field, vec![one])
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Poly::new(field, vec![c])
    }

    /// The indeterminate `x`.
    pub fn x(field: F) -> Self {
        Poly::monomial(field.clone(), field.one(), 1)
    }

    pub fn monomial(field: F, c: F::Elem, deg: usize) -> Self {
        let mut coeffs = vec![field.zero(); deg + 1];
        coeffs[deg] = c;
        Poly::new(field, coeffs)
    }

    /// `x - a`
    pub fn linear_root(field: F, a: &F::Elem) -> Self {
        let c0 = field.neg(a);
        let one = field.one();
        Poly::new(field, vec![c0, one])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; handy for loop bounds.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| self.field.is_one(c))
    }

    pub fn leading(&self) -> F::Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Poly::new(self.field.clone(), coeffs)
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// `self * x^k`
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { field: self.field.clone(), coeffs }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.add_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(f.clone(), coeffs)
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => f.sub(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => f.neg(b),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(f.clone(), coeffs)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f.clone());
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = f.mul(a, b);
                out[i + j] = f.add(&out[i + j], &t);
            }
        }
        Poly::new(f.clone(), out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one(self.field.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder with `deg r < deg g`.
    pub fn divrem(&self, g: &Self) -> Result<(Self, Self)> {
        self.check_field(g)?;
        let f = &self.field;
        let Some(dg) = g.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lc_inv = f.inv(&g.coeffs[dg]).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return Ok((Poly::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dg];
        for i in (dg..rem.len()).rev() {
            if f.is_zero(&rem[i]) {
                continue;
            }
            let c = f.mul(&rem[i], &lc_inv);
            for (j, gj) in g.coeffs.iter().enumerate() {
                let t = f.mul(&c, gj);
                rem[i - dg + j] = f.sub(&rem[i - dg + j], &t);
            }
            quot[i - dg] = c;
        }
        rem.truncate(dg);
        Ok((Poly::new(f.clone(), quot), Poly::new(f.clone(), rem)))
    }

    /// Remainder; panics on a zero divisor or mismatched fields.
    pub fn rem(&self, g: &Self) -> Self {
        self.divrem(g).expect("valid divisor").1
    }

    /// Exact quotient; panics on a zero divisor or mismatched fields.
    pub fn div_exact(&self, g: &Self) -> Self {
        let (q, r) = self.divrem(g).expect("valid divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        assert!(self.field == other.field, "polynomials live over different fields");
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let fld = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(fld.clone()), Poly::zero(fld.clone()));
        let (mut t0, mut t1) = (Poly::zero(fld.clone()), Poly::one(fld.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = fld.inv(&r0.leading()).expect("nonzero");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse of `self` modulo `m`, when coprime.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.rem(m).xgcd(m);
        if g.is_one() {
            Some(s.rem(m))
        } else {
            None
        }
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn derivative(&self) -> Self {
        self.hasse_derivative(1)
    }

    /// Hasse (divided-power) derivative `sum_i C(i,j) a_i x^(i-j)`.
    pub fn hasse_derivative(&self, j: usize) -> Self {
        let f = &self.field;
        if j == 0 {
            return self.clone();
        }
        if self.coeffs.len() <= j {
            return Poly::zero(f.clone());
        }
        let coeffs = (j..self.coeffs.len())
            .map(|i| {
                let b = binomial_in(f, i as u64, j as u64);
                f.mul(&b, &self.coeffs[i])
            })
            .collect();
        Poly::new(f.clone(), coeffs)
    }

    /// `self ∘ g`, by Horner.
    pub fn compose(&self, g: &Self) -> Self {
        let f = &self.field;
        let mut acc = Poly::zero(f.clone());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Poly::constant(f.clone(), c.clone());
        }
        acc
    }

    pub fn try_compose(&self, g: &Self) -> Result<Self> {
        self.check_field(g)?;
        Ok(self.compose(g))
    }

    /// `self ∘ g mod m`.
    pub fn compose_mod(&self, g: &Self, m: &Self) -> Self {
        let f = &self.field;
        let g = g.rem(m);
        let mut acc = Poly::zero(f.clone());
        for c in self.coeffs.iter().rev() {
            acc = (&(&acc * &g) + &Poly::constant(f.clone(), c.clone())).rem(m);
        }
        acc
    }

    pub fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        (self * other).rem(m)
    }

    /// `self^e mod m` for exponents that fit in 128 bits.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.field.clone()).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m);
            }
        }
        acc
    }

    /// Largest coefficient bit size (0 over finite fields).
    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| self.field.bit_size(c)).max().unwrap_or(0)
    }

    /// Comma-separated ascending coefficients, the text form read by
    /// [`crate::algebra::parse_poly`]. The zero polynomial prints as `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs.iter().map(|c| self.field.format_elem(c)).collect::<Vec<_>>().join(",")
    }
}

/// `C(n, k)` reduced into the field, via Lucas in positive characteristic.
pub fn binomial_in<F: Field>(f: &F, n: u64, k: u64) -> F::Elem {
    let p = f.characteristic();
    if p == 0 {
        return f.from_u128(binomial_u128(n, k));
    }
    let (mut n, mut k) = (n, k);
    let mut acc = f.one();
    while n > 0 || k > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return f.zero();
        }
        acc = f.mul(&acc, &f.from_u128(binomial_u128(ni, ki)));
        n /= p;
        k /= p;
    }
    acc
}

fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Poly<F> {
        assert!(self.field == rhs.field, "polynomials live over different fields");
        self.add_unchecked(rhs)
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Poly<F> {
        assert!(self.field == rhs.field, "polynomials live over different fields");
        self.sub_unchecked(rhs)
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Poly<F> {
        assert!(self.field == rhs.field, "polynomials live over different fields");
        self.mul_unchecked(rhs)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        let coeffs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        Poly::new(self.field.clone(), coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{field_make, Rationals};

    fn q(c: &[i64]) -> Poly<Rationals> {
        Poly::from_i64s(Rationals, c)
    }

    #[test]
    fn gcd_over_rationals() {
        let g = q(&[-1, 0, 1]).gcd(&q(&[-1, 1]));
        assert_eq!(g, q(&[-1, 1]));
        assert!(Poly::zero(Rationals).gcd(&Poly::zero(Rationals)).is_zero());
    }

    #[test]
    fn derivative_reduces_in_char_two() {
        let f2 = field_make(2, 1).unwrap();
        let f = Poly::from_i64s(f2.clone(), &[0, 0, 0, 1, 1]);
        assert_eq!(f.derivative(), Poly::from_i64s(f2, &[0, 0, 1]));
    }

    #[test]
    fn composition() {
        assert_eq!(q(&[0, 0, 1]).compose(&q(&[1, 1])), q(&[1, 2, 1]));
    }

    #[test]
    fn hasse_examples() {
        let f2 = field_make(2, 1).unwrap();
        let f = Poly::from_i64s(f2.clone(), &[0, 0, 0, 1, 0, 1]);
        assert_eq!(f.hasse_derivative(1), Poly::from_i64s(f2.clone(), &[0, 0, 1, 0, 1]));
        assert_eq!(f.hasse_derivative(2), Poly::from_i64s(f2.clone(), &[0, 1]));
        assert!(Poly::from_i64s(f2, &[1]).hasse_derivative(3).is_zero());
    }

    #[test]
    fn division_errors() {
        let f3 = field_make(3, 1).unwrap();
        let f5 = field_make(5, 1).unwrap();
        let a = Poly::from_i64s(f3.clone(), &[1, 1]);
        assert_eq!(a.divrem(&Poly::zero(f3)), Err(Error::DivisionByZero));
        assert_eq!(a.divrem(&Poly::from_i64s(f5, &[1, 1])), Err(Error::FieldMismatch));
    }

    #[test]
    fn lucas_binomials() {
        let f2 = field_make(2, 1).unwrap();
        assert_eq!(binomial_in(&f2, 5, 2), 0);
        assert_eq!(binomial_in(&f2, 3, 2), 1);
        assert_eq!(binomial_in(&Rationals, 10, 3), crate::algebra::rational(120, 1));
    }
}
