use crate::algebra::{parse_poly, Field, ParseField, Poly};
use crate::error::{Error, Result};

/// Default bound on coefficient bit size while iterating over the rationals.
pub const DEFAULT_BIT_CAP: u64 = 1_000_000;

/// `phi(x) = num(x) / den(x)` with coprime numerator and denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMap<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RationalMap<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if num.field() != den.field() {
            return Err(Error::FieldMismatch);
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !num.gcd(&den).is_constant() {
            return Err(Error::InvalidParameter("numerator and denominator share a root".into()));
        }
        let map = RationalMap { num, den };
        if map.degree() < 1 {
            return Err(Error::InvalidParameter("map must have degree at least 1".into()));
        }
        Ok(map)
    }

    pub fn polynomial(f: Poly<F>) -> Result<Self> {
        let one = Poly::one(f.field().clone());
        RationalMap::new(f, one)
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn field(&self) -> &F {
        self.num.field()
    }

    /// `max(deg num, deg den)`.
    pub fn degree(&self) -> usize {
        let dn = self.num.degree().unwrap_or(0);
        dn.max(self.den.deg())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Numerator of the derivative, `num' den - num den'`.
    pub fn critical_poly(&self) -> Poly<F> {
        &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative())
    }

    /// Text form `num=<poly>;den=<poly>`.
    pub fn to_text(&self) -> String {
        format!("num={};den={}", self.num.to_text(), self.den.to_text())
    }
}

impl<F: ParseField> RationalMap<F> {
    /// Reads `num=<poly>;den=<poly>`; a missing `den` means 1, and bare
    /// coefficient text is read as a polynomial.
    pub fn parse(field: &F, s: &str) -> Result<Self> {
        let (mut num, mut den) = (None, None);
        if !s.contains('=') {
            return RationalMap::polynomial(parse_poly(field, s)?);
        }
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            match part.split_once('=') {
                Some(("num", v)) => num = Some(parse_poly(field, v)?),
                Some(("den", v)) => den = Some(parse_poly(field, v)?),
                _ => return Err(Error::Parse(format!("bad map component '{part}'"))),
            }
        }
        let num = num.ok_or_else(|| Error::Parse("map is missing num=".into()))?;
        let den = den.unwrap_or_else(|| Poly::one(field.clone()));
        RationalMap::new(num, den)
    }
}

/// `f^n`, the n-fold composite, with the default coefficient guard.
pub fn iterate<F: Field>(f: &Poly<F>, n: usize) -> Result<Poly<F>> {
    iterate_capped(f, n, DEFAULT_BIT_CAP)
}

/// `f^n`, failing once any coefficient needs more than `cap_bits` bits.
pub fn iterate_capped<F: Field>(f: &Poly<F>, n: usize, cap_bits: u64) -> Result<Poly<F>> {
    if n == 0 {
        return Err(Error::InvalidParameter("iterate count must be at least 1".into()));
    }
    let mut acc = f.clone();
    for _ in 1..n {
        acc = f.compose(&acc);
        let bits = acc.max_coeff_bits();
        if bits > cap_bits {
            return Err(Error::cap("coefficient bit size", bits, cap_bits));
        }
    }
    Ok(acc)
}
