//! Iterated wreath products, polynomial dynamics over exact fields, and the
//! factorization statistics of iterates over finite fields.
//!
//! * [`algebra`]: rationals, `GF(p^k)`, polynomials, factorization, resultants.
//! * [`wreath`]: the iterated wreath power `[S_d]^n` acting on tree leaves,
//!   with exact cycle-pattern distributions and fixed-point proportions.
//! * [`dynamics`]: iterates, critical orbits, the genericity membership test
//!   and parametric discriminants.
//! * [`experiments`]: exhaustive finite-field censuses, Frobenius pattern
//!   counts, orbit-prime densities and the characteristic-2 special case.

pub mod algebra;
pub mod dynamics;
pub mod error;
pub mod experiments;
pub mod wreath;

pub use error::{Error, Result};
