//! Desk-scale experiments: the cycle-pattern census of iterates over finite
//! fields, fiber sampling, orbit-prime densities and the characteristic-2
//! special case, with CSV and JSON reports.

mod char2;
mod dyn_reports;
mod frob;
mod orbit;
mod parallel;
mod report;
mod scan;
mod wreath_stats;

pub use char2::{
    char2_affine_fixed_count, char2_affine_fpp, char2_affine_fpp_closed_form, char2_affine_report,
    char2_quadratic_scan, rn_mul, AffineMapChar2, Char2Report, Char2Row, QuadReport, QuadRow, Rn, MAX_AFFINE_N,
    MAX_QUAD_K, MAX_QUAD_N,
};
pub use dyn_reports::{disc_check, h_check, CriticalFactor, DiscCheckReport, HCheckReport, IterateRadical};
pub use frob::{frob_sample, FrobMode, FrobOptions, FrobReport, FrobRow, DEFAULT_ALPHA_CAP};
pub use orbit::{
    dividing_primes, orbit_prime_density, primes_up_to, OrbitDensityReport, OrbitOptions, DEFAULT_PRIME_CAP, LADDER_LEN,
};
pub use parallel::{block_count, block_range, block_rng, run_blocks};
pub use report::Report;
pub use scan::{cheb_scan, default_deviation_bound, ScanOptions, ScanReport, ScanRow, DEFAULT_POLY_CAP};
pub use wreath_stats::{
    fpp_report, wreath_sample, DistRow, DistributionReport, FppReport, FppRow, SampleReport, SampleRow,
    DEFAULT_SAMPLE_CAP,
};
