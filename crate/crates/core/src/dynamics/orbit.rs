//! Forward orbits of rational points reduced modulo primes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{Poly, Rationals};
use crate::error::{Error, Result};

fn divides(p: u64, n: &BigInt) -> bool {
    (n % BigInt::from(p)).is_zero()
}

fn residue(a: &BigRational, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let num = ((a.numer() % &pb) + &pb) % &pb;
    let den = ((a.denom() % &pb) + &pb) % &pb;
    let (num, den) = (num.to_u64().expect("residue"), den.to_u64().expect("residue"));
    mul_mod(num, pow_mod(den, p - 2, p), p)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// True when `p` divides a coefficient denominator of `f`, the denominator
/// of `a0`, or the leading coefficient of `f`.
pub fn is_bad_prime(f: &Poly<Rationals>, a0: &BigRational, p: u64) -> bool {
    f.coeffs().iter().any(|c| divides(p, c.denom()))
        || divides(p, a0.denom())
        || f.coeffs().last().is_none_or(|lc| divides(p, lc.numer()))
}

/// `f` and `a0` reduced modulo a good prime `p`.
#[derive(Clone, Debug)]
pub struct ReducedOrbit {
    p: u64,
    coeffs: Vec<u64>,
    a0: u64,
}

impl ReducedOrbit {
    pub fn new(f: &Poly<Rationals>, a0: &BigRational, p: u64) -> Result<Self> {
        if p < 2 || !crate::algebra::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if is_bad_prime(f, a0, p) {
            return Err(Error::BadPrime(p));
        }
        Ok(ReducedOrbit { p, coeffs: f.coeffs().iter().map(|c| residue(c, p)).collect(), a0: residue(a0, p) })
    }

    fn step(&self, x: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    /// Whether `f^n(a0) = 0 mod p` for some `n >= 1`. The sequence
    /// `f(a0), f^2(a0), ...` is eventually periodic; Brent's method finds the
    /// tail length `mu` and period `lambda`, and only the first `mu + lambda`
    /// terms need checking.
    pub fn hits_zero(&self) -> bool {
        let start = self.step(self.a0);
        // Brent: period first.
        let (mut power, mut lam) = (1u64, 1u64);
        let mut tortoise = start;
        let mut hare = self.step(start);
        while tortoise != hare {
            if power == lam {
                tortoise = hare;
                power *= 2;
                lam = 0;
            }
            hare = self.step(hare);
            lam += 1;
        }
        // Tail length: the first index where x_i = x_{i + lambda}.
        let mut hare = start;
        for _ in 0..lam {
            hare = self.step(hare);
        }
        let mut tortoise = start;
        let mut mu = 0u64;
        while tortoise != hare {
            tortoise = self.step(tortoise);
            hare = self.step(hare);
            mu += 1;
        }
        let mut x = start;
        for _ in 0..mu + lam {
            if x == 0 {
                return true;
            }
            x = self.step(x);
        }
        false
    }
}

/// Whether some `f^n(a0)`, `n >= 1`, vanishes modulo `p`.
pub fn orbit_hits_zero_mod_p(f: &Poly<Rationals>, a0: &BigRational, p: u64) -> Result<bool> {
    Ok(ReducedOrbit::new(f, a0, p)?.hits_zero())
}
