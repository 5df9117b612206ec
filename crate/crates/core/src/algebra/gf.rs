//! Prime and extension finite fields `GF(p^k)`.
//!
//! An element is packed into a `u64` as the base-`p` integer
//! `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` of its residue coefficients modulo the
//! field's defining polynomial. That packing is also the canonical element
//! enumeration and the order used when sorting factors.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Fields at most this large get discrete log tables.
const LOG_TABLE_LIMIT: u64 = 1 << 21;

/// `GF(p^k)` with the canonical defining polynomial: the monic irreducible of
/// degree `k` whose non-leading coefficient vector is least as a base-`p`
/// integer. Two values built from the same `(p, k)` compare equal.
#[derive(Clone)]
pub struct Gf(Arc<GfInner>);

struct GfInner {
    p: u64,
    k: u32,
    q: u64,
    /// Ascending, monic, length `k + 1`. `[0, 1]` for prime fields.
    modulus: Vec<u64>,
    tables: Option<LogTables>,
}

struct LogTables {
    /// `exp[i] = g^i`, doubled in length so log sums need no reduction.
    exp: Vec<u64>,
    /// `log[0]` is unused.
    log: Vec<u32>,
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.k == other.0.k)
    }
}

impl Eq for Gf {}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.k)
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={}^{}", self.0.p, self.0.k)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors in ascending order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a prime power `q` into `(p, k)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let ps = prime_divisors(q);
    if ps.len() != 1 {
        return None;
    }
    let p = ps[0];
    let mut k = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        k += 1;
    }
    Some((p, k))
}

/// Builds (or fetches from the process-wide cache) `GF(p^k)`.
pub fn field_make(p: u64, k: u32) -> Result<Gf> {
    if !is_prime(p) || p >= 1 << 32 {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("extension degree must be at least 1".into()));
    }
    let q = (p as u128).checked_pow(k).filter(|&q| q < 1 << 62).ok_or_else(|| {
        Error::cap(format!("field order {p}^{k}"), format!("{p}^{k}"), "2^62")
    })? as u64;

    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), Gf>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().expect("field cache").get(&(p, k)) {
        return Ok(f.clone());
    }
    let field = build(p, k, q)?;
    cache.lock().expect("field cache").entry((p, k)).or_insert(field.clone());
    Ok(field)
}

fn build(p: u64, k: u32, q: u64) -> Result<Gf> {
    let prime = Gf(Arc::new(GfInner { p, k: 1, q: p, modulus: vec![0, 1], tables: None }));
    if k == 1 {
        return Ok(prime);
    }
    let modulus = canonical_modulus(&prime, k)
        .ok_or_else(|| Error::Internal(format!("no irreducible of degree {k} over GF({p})")))?;
    let mut inner = GfInner { p, k, q, modulus, tables: None };
    if q <= LOG_TABLE_LIMIT {
        inner.tables = Some(log_tables(&inner));
    }
    Ok(Gf(Arc::new(inner)))
}

fn digits(p: u64, k: u32, mut v: u64) -> Vec<u64> {
    (0..k)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn pack(p: u64, ds: &[u64]) -> u64 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn canonical_modulus(prime: &Gf, k: u32) -> Option<Vec<u64>> {
    let p = prime.0.p;
    let count = p.checked_pow(k)?;
    (0..count).find_map(|c| {
        let mut coeffs = digits(p, k, c);
        if coeffs[0] == 0 {
            return None;
        }
        coeffs.push(1);
        let m = Poly::new(prime.clone(), coeffs.clone());
        is_irreducible(&m).then_some(coeffs)
    })
}

/// Rabin's test: `m` monic of degree `n` is irreducible iff `x^(q^n) = x mod m`
/// and `gcd(x^(q^(n/r)) - x, m) = 1` for every prime `r | n`.
pub fn is_irreducible(m: &Poly<Gf>) -> bool {
    let n = match m.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let m = m.monic();
    let fld = m.field().clone();
    let q = fld.order() as u128;
    let x = Poly::x(fld);
    let frob_iter = |times: usize| {
        let mut h = x.rem(&m);
        for _ in 0..times {
            h = h.pow_mod(q, &m);
        }
        h
    };
    for r in prime_divisors(n as u64) {
        let h = frob_iter(n / r as usize);
        if !(&h - &x).gcd(&m).is_one() {
            return false;
        }
    }
    (&frob_iter(n) - &x).rem(&m).is_zero()
}

fn log_tables(inner: &GfInner) -> LogTables {
    let order = inner.q - 1;
    let factors = prime_divisors(order);
    let g = (2..inner.q)
        .find(|&g| factors.iter().all(|r| slow_pow(inner, g, order / r) != 1))
        .expect("multiplicative group is cyclic");
    let mut exp = Vec::with_capacity(2 * order as usize);
    let mut log = vec![0u32; inner.q as usize];
    let mut cur = 1u64;
    for i in 0..order {
        exp.push(cur);
        log[cur as usize] = i as u32;
        cur = slow_mul(inner, cur, g);
    }
    debug_assert_eq!(cur, 1);
    exp.extend_from_within(..);
    LogTables { exp, log }
}

fn slow_mul(inner: &GfInner, a: u64, b: u64) -> u64 {
    let (p, k) = (inner.p, inner.k as usize);
    let da = digits(p, k as u32, a);
    let db = digits(p, k as u32, b);
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    for i in (k..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for j in 0..k {
            let t = (c as u128 * inner.modulus[j] as u128 % p as u128) as u64;
            prod[i - k + j] = (prod[i - k + j] + p - t) % p;
        }
    }
    pack(p, &prod[..k])
}

fn slow_pow(inner: &GfInner, a: u64, mut e: u64) -> u64 {
    let mut base = a;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = slow_mul(inner, acc, base);
        }
        e >>= 1;
        base = slow_mul(inner, base, base);
    }
    acc
}

impl Gf {
    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    /// `q = p^k`.
    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// The defining polynomial's coefficients over `GF(p)`, ascending.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// The defining polynomial as an element of `GF(p)[x]`.
    pub fn modulus_poly(&self) -> Poly<Gf> {
        let prime = field_make(self.0.p, 1).expect("prime subfield");
        Poly::new(prime, self.0.modulus.clone())
    }

    /// Residue coefficients `c_0, ..., c_{k-1}` of an element.
    pub fn digits(&self, a: u64) -> Vec<u64> {
        digits(self.0.p, self.0.k, a)
    }

    pub fn from_digits(&self, ds: &[u64]) -> Result<u64> {
        if ds.len() > self.0.k as usize || ds.iter().any(|&d| d >= self.0.p) {
            return Err(Error::Parse(format!("residue {ds:?} does not fit {self:?}")));
        }
        Ok(pack(self.0.p, ds))
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.0.q
    }
}

impl Field for Gf {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let inner = &*self.0;
        let p = inner.p;
        if inner.k == 1 {
            let s = a + b;
            if s >= p {
                s - p
            } else {
                s
            }
        } else if p == 2 {
            a ^ b
        } else {
            let (mut x, mut y) = (*a, *b);
            let mut out = 0u64;
            let mut place = 1u64;
            for _ in 0..inner.k {
                out += ((x % p + y % p) % p) * place;
                x /= p;
                y /= p;
                place *= p;
            }
            out
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        let inner = &*self.0;
        let p = inner.p;
        if inner.k == 1 {
            if *a == 0 {
                0
            } else {
                p - a
            }
        } else if p == 2 {
            *a
        } else {
            let mut x = *a;
            let mut out = 0u64;
            let mut place = 1u64;
            for _ in 0..inner.k {
                out += ((p - x % p) % p) * place;
                x /= p;
                place *= p;
            }
            out
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        let inner = &*self.0;
        if *a == 0 || *b == 0 {
            return 0;
        }
        if inner.k == 1 {
            return (*a as u128 * *b as u128 % inner.p as u128) as u64;
        }
        match &inner.tables {
            Some(t) => t.exp[t.log[*a as usize] as usize + t.log[*b as usize] as usize],
            None => slow_mul(inner, *a, *b),
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        let inner = &*self.0;
        if *a == 0 {
            return None;
        }
        if let Some(t) = &inner.tables {
            let l = t.log[*a as usize] as u64;
            return Some(t.exp[((inner.q - 1 - l) % (inner.q - 1)) as usize]);
        }
        Some(self.pow(a, inner.q - 2))
    }

    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.0.p as i64) as u64
    }

    fn from_u128(&self, n: u128) -> u64 {
        (n % self.0.p as u128) as u64
    }

    fn characteristic(&self) -> u64 {
        self.0.p
    }

    fn size(&self) -> Option<u64> {
        Some(self.0.q)
    }

    fn element(&self, index: u64) -> u64 {
        debug_assert!(index < self.0.q);
        index
    }

    fn pth_root(&self, a: &u64) -> u64 {
        let mut r = *a;
        for _ in 1..self.0.k {
            r = self.pow(&r, self.0.p);
        }
        r
    }

    fn format_elem(&self, a: &u64) -> String {
        if self.0.k == 1 {
            a.to_string()
        } else {
            let ds: Vec<String> = self.digits(*a).iter().map(u64::to_string).collect();
            format!("[{}]", ds.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        assert_eq!(field_make(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(field_make(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(field_make(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(field_make(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(field_make(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(field_make(3, 0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn table_and_slow_paths_agree() {
        let f = field_make(3, 3).unwrap();
        for a in 0..27 {
            for b in 0..27 {
                assert_eq!(f.mul(&a, &b), if a == 0 || b == 0 { 0 } else { slow_mul(&f.0, a, b) });
            }
            if a != 0 {
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn frobenius_root_inverts_pth_power() {
        for (p, k) in [(2, 3), (3, 2), (5, 2)] {
            let f = field_make(p, k).unwrap();
            for a in f.elements() {
                assert_eq!(f.pow(&f.pth_root(&a), p), a);
            }
        }
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
    }
}
