//! Exact arithmetic: rationals, `GF(p^k)`, dense polynomials, factorization
//! over finite fields, resultants and Hasse derivatives.

mod factor;
mod field;
mod gf;
mod parse;
mod poly;
mod resultant;
mod squarefree;

pub use factor::{cycle_pattern_of_poly, distinct_degree, equal_degree, factor, factor_order, Factorization};
pub use field::{rational, Field, Rationals};
pub use gf::{field_make, is_irreducible, is_prime, prime_divisors, prime_power, Gf};
pub use parse::{parse_poly, FieldSpec, ParseField};
pub use poly::{binomial_in, Poly};
pub use resultant::{charpoly_mod, det_poly, multiplication_matrix, norm_pencil, resultant};
pub use squarefree::{is_squarefree, radical, squarefree_decomposition};
