//! Iteration of polynomials and rational maps over exact fields, critical
//! orbits, the genericity test, indecomposability and parametric
//! discriminants.

mod critical;
mod decompose;
mod disc;
mod map;
mod membership;
mod orbit;

pub use critical::{
    char2_cube_check, critical_data, critical_value_poly, critical_value_polys, orbit_collision_check, CriticalData,
    OrbitCheck,
};
pub use decompose::{base_h_expansion, is_indecomposable_fq, Decomposition, DEFAULT_DECOMPOSITION_BUDGET};
pub use disc::{
    disc_iterate_radical, disc_iterate_radical_capped, disc_param, DiscReport, DiscSummary, IterateDiscriminant,
};
pub use map::{iterate, iterate_capped, RationalMap, DEFAULT_BIT_CAP};
pub use membership::{is_in_h, is_in_h_with_budget, HReport, Verdict};
pub use orbit::{is_bad_prime, orbit_hits_zero_mod_p, ReducedOrbit};
