//! The coefficient-field abstraction shared by every polynomial routine.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A field with exact arithmetic.
///
/// Elements are plain values; the field object carries whatever context the
/// arithmetic needs (for `GF(p^k)` the modulus and log tables).
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Image of an integer under the canonical ring map `Z -> F`.
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Image of a non-negative integer; avoids overflow for large binomials.
    fn from_u128(&self, n: u128) -> Self::Elem;
    /// 0 for the rationals, `p` for `GF(p^k)`.
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` when infinite.
    fn size(&self) -> Option<u64>;
    /// The `index`-th element in the field's canonical enumeration
    /// (finite fields only; `index < size`).
    fn element(&self, index: u64) -> Self::Elem;
    /// Inverse of Frobenius `a -> a^p`. Identity in characteristic 0.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem;
    /// Bit size of the element's exact representation (0 when bounded).
    fn bit_size(&self, _a: &Self::Elem) -> u64 {
        0
    }
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_u128(&self, n: u128) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn size(&self) -> Option<u64> {
        None
    }
    fn element(&self, index: u64) -> BigRational {
        BigRational::from_integer(BigInt::from(index))
    }
    fn pth_root(&self, a: &BigRational) -> BigRational {
        a.clone()
    }
    fn bit_size(&self, a: &BigRational) -> u64 {
        a.numer().bits().max(a.denom().bits())
    }
    fn format_elem(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// `num/den` in lowest terms with positive denominator.
pub fn rational(num: i64, den: i64) -> BigRational {
    let r = BigRational::new(BigInt::from(num), BigInt::from(den));
    debug_assert!(r.denom().is_positive());
    r
}
