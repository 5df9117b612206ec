//! Text forms for fields and polynomials.
//!
//! Polynomials are comma-separated ascending coefficients. A coefficient is an
//! integer, a fraction `a/b` (rationals only), or a bracketed residue
//! `[c0,c1,...]` in powers of the extension generator. `"1,0,1"` is `1 + x^2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::field::{Field, Rationals};
use super::gf::{field_make, prime_power, Gf};
use super::poly::Poly;
use crate::error::{Error, Result};

/// Runtime choice of coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Finite(Gf),
}

impl FieldSpec {
    pub fn finite(p: u64, k: u32) -> Result<Self> {
        field_make(p, k).map(FieldSpec::Finite)
    }

    /// `GF(q)` for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        FieldSpec::finite(p, k)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Finite(g) => write!(f, "{g}"),
        }
    }
}

/// Accepts `Q`, `q=P^K`, `q=P` or a bare prime power.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "q=Q" {
            return Ok(FieldSpec::Rationals);
        }
        let body = s.strip_prefix("q=").unwrap_or(s);
        let bad = || Error::Parse(format!("bad field '{s}' (expected Q or q=P^K)"));
        match body.split_once('^') {
            Some((p, k)) => {
                let p = p.trim().parse::<u64>().map_err(|_| bad())?;
                let k = k.trim().parse::<u32>().map_err(|_| bad())?;
                FieldSpec::finite(p, k)
            }
            None => FieldSpec::of_order(body.trim().parse::<u64>().map_err(|_| bad())?),
        }
    }
}

/// Splits on commas that are not inside brackets.
fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced ']' in '{s}'")));
                }
            }
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced '[' in '{s}'")));
    }
    out.push(s[start..].trim());
    Ok(out)
}

/// Coefficient parsing for a concrete field.
pub trait ParseField: Field {
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
}

impl ParseField for Rationals {
    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        let bad = || Error::Parse(format!("bad rational coefficient '{s}'"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl ParseField for Gf {
    fn parse_elem(&self, s: &str) -> Result<u64> {
        let bad = || Error::Parse(format!("bad coefficient '{s}' for {self:?}"));
        if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let ds = inner
                .split(',')
                .map(|d| d.trim().parse::<i64>().map(|v| self.from_i64(v)))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad())?;
            let mut ds = ds;
            while ds.len() > self.k() as usize && ds.last() == Some(&0) {
                ds.pop();
            }
            return self.from_digits(&ds);
        }
        if s.contains('/') {
            return Err(bad());
        }
        let v: BigInt = s.parse().map_err(|_| bad())?;
        let r = ((v % BigInt::from(self.p())) + BigInt::from(self.p())) % BigInt::from(self.p());
        Ok(r.try_into().expect("residue fits u64"))
    }
}

pub fn parse_poly<F: ParseField>(field: &F, s: &str) -> Result<Poly<F>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let coeffs = split_top_level(s)?
        .into_iter()
        .map(|c| field.parse_elem(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(field.clone(), coeffs))
}
