//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use arboreal::algebra::{field_make, Field, Poly, Rationals};
use arboreal::dynamics::{disc_param, is_in_h, RationalMap};
use arboreal::experiments::{
    cheb_scan, char2_affine_fpp, char2_affine_fpp_closed_form, char2_quadratic_scan, default_deviation_bound,
    dividing_primes, frob_sample, orbit_prime_density, FrobMode, FrobOptions, OrbitOptions, ScanOptions,
};
use arboreal::wreath::{fpp, pattern_distribution, wreath_order, CyclePattern, FppMethod};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

type Outcome = Result<String, String>;

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `(d, n)` with an exact distribution under the default leaf cap.
fn computed_pairs() -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (2..=12).map(|d| (d, 1)).collect();
    for d in 2..=8usize {
        for n in 2..=6 {
            if d.pow(n as u32) <= 64 {
                out.push((d, n));
            }
        }
    }
    out
}

fn exact_wreath_statistics() -> Outcome {
    let start = Instant::now();
    for (d, n) in [(2, 2), (2, 3), (2, 4), (3, 2)] {
        let dist = pattern_distribution(d, n).map_err(|e| e.to_string())?;
        let exact: Vec<_> = dist.entries().map(|(p, r)| (p.clone(), r)).collect();
        let brute: Vec<_> = common::brute_force_distribution(d, n).into_iter().collect();
        ensure(exact == brute, || format!("distribution differs from enumeration at ({d},{n})"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("enumeration took {elapsed:?}"))?;
    let pairs = computed_pairs();
    for &(d, n) in &pairs {
        let dist = pattern_distribution(d, n).map_err(|e| e.to_string())?;
        let leaves = d.pow(n as u32) as u32;
        let fact: BigInt = (1..=d as u64).product::<u64>().into();
        let exponent = (leaves - 1) / (d as u32 - 1);
        let identity = BigRational::new(BigInt::one(), num_traits::pow(fact, exponent as usize));
        let rho_id = dist.rho(&CyclePattern::identity(leaves)).map_err(|e| e.to_string())?;
        ensure(rho_id == identity, || format!("rho(1^{leaves}) wrong at ({d},{n})"))?;
        ensure(BigRational::new(BigInt::one(), wreath_order(d, n).into()) == identity, || "group order".into())?;
        let rho_full = dist.rho(&CyclePattern::full_cycle(leaves)).map_err(|e| e.to_string())?;
        let expected = BigRational::new(BigInt::one(), BigInt::from(d).pow(n as u32));
        ensure(rho_full == expected, || format!("rho({leaves}^1) wrong at ({d},{n})"))?;
    }
    Ok(format!("4 enumerations exact in {elapsed:.1?}; spot values hold on {} (d,n) pairs", pairs.len()))
}

fn fpp_agreement_and_decay() -> Outcome {
    let pairs = computed_pairs();
    for &(d, n) in &pairs {
        let a = fpp(d, n, FppMethod::FromDistribution).map_err(|e| e.to_string())?;
        let b = fpp(d, n, FppMethod::Recursive).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("fpp methods disagree at ({d},{n}): {a} vs {b}"))?;
    }
    let ladder: Vec<BigRational> = (1..=12).map(|n| fpp(2, n, FppMethod::Recursive).unwrap()).collect();
    ensure(ladder.windows(2).all(|w| w[1] < w[0]), || "fpp(2,n) not strictly decreasing".into())?;
    let last = ladder[11].to_f64().unwrap();
    ensure(ladder[11] < ratio(17, 100), || format!("fpp(2,12) = {last}"))?;
    Ok(format!("methods agree on {} pairs; fpp(2,n) decreasing, fpp(2,12) = {last:.5}", pairs.len()))
}

fn chebotarev_census() -> Outcome {
    let start = Instant::now();
    let mut runs: Vec<(u64, usize, usize)> = Vec::new();
    for n in 1..=3 {
        for q in [3, 5, 7, 9, 11, 13, 25, 27] {
            runs.push((q, 2, n));
        }
    }
    for n in 1..=2 {
        for q in [5, 7, 11, 13] {
            runs.push((q, 3, n));
        }
    }
    let mut worst = 0.0f64;
    for &(q, d, n) in &runs {
        let opts = ScanOptions { seed: q ^ (n as u64) << 8, workers: workers(), ..Default::default() };
        let r = cheb_scan(q, 1, d, n, &opts).map_err(|e| format!("q={q} d={d} n={n}: {e}"))?;
        ensure(r.partition_holds(), || format!("partition identity fails at q={q} d={d} n={n}"))?;
        ensure(r.unsupported().is_empty(), || format!("unsupported patterns at q={q} d={d} n={n}"))?;
        let bound = default_deviation_bound(d, n);
        ensure(r.violations(bound).is_empty(), || {
            format!("deviation {} > {bound} at q={q} d={d} n={n}", r.max_deviation())
        })?;
        worst = worst.max(r.max_deviation() / bound);
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), || format!("census took {elapsed:?}"))?;
    Ok(format!("{} scans in {elapsed:.1?}; largest deviation is {:.3} of 8 d^n", runs.len(), worst))
}

fn frobenius_convergence() -> Outcome {
    let mut checked = 0;
    let mut worst = 0.0f64;
    for q in [101u64, 251, 503] {
        let field = field_make(q, 1).map_err(|e| e.to_string())?;
        for n in 1..=3 {
            let dist = pattern_distribution(2, n).map_err(|e| e.to_string())?;
            let bound = 5.0 * 2f64.powi(n as i32) * (q as f64).sqrt();
            let mut chosen = Vec::new();
            for i in 0..q * q {
                let f = Poly::new(field.clone(), vec![field.element(i % q), field.element(i / q), field.one()]);
                if is_in_h(&f, n).map_err(|e| e.to_string())?.overall {
                    chosen.push(f);
                }
                if chosen.len() == 3 {
                    break;
                }
            }
            ensure(chosen.len() == 3, || format!("fewer than three members of H over GF({q})"))?;
            for f in &chosen {
                let opts = FrobOptions { workers: workers(), seed: q, ..Default::default() };
                let r = frob_sample(f, n, FrobMode::Exhaustive, &opts).map_err(|e| e.to_string())?;
                ensure(r.consistent(), || "tallies and skipped do not add up".into())?;
                for (p, rho) in dist.entries() {
                    let expected = (BigRational::from_integer(q.into()) * rho).to_f64().unwrap();
                    let dev = (r.tally(p) as f64 - expected).abs();
                    ensure(dev <= bound, || format!("q={q} n={n} f={}: {p} off by {dev:.1} > {bound:.1}", f.to_text()))?;
                    worst = worst.max(dev / bound);
                }
                ensure(r.rows.iter().all(|row| dist.contains(&row.pattern)), || "unsupported pattern".into())?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} exhaustive runs; largest deviation is {worst:.3} of 5 d^n q^(1/2)"))
}

fn h_test_oracles() -> Outcome {
    let col = common::collision_run(0xacce5, 300);
    let cube = common::cube_run(0xacce6, 300);
    ensure(col.discrepancies == 0, || format!("orbit collision: {col:?}"))?;
    ensure(cube.discrepancies == 0, || format!("cube check: {cube:?}"))?;
    ensure(col.positives > 0 && col.positives < col.instances, || format!("degenerate sample: {col:?}"))?;
    ensure(cube.positives > 0 && cube.positives < cube.instances, || format!("degenerate sample: {cube:?}"))?;
    Ok(format!(
        "0/{} and 0/{} discrepancies ({} and {} positive verdicts)",
        col.instances, cube.instances, col.positives, cube.positives
    ))
}

fn discriminant_consistency() -> Outcome {
    let run = common::disc_run(0xacce7, 200, 50);
    ensure(run.discrepancies == 0, || format!("{run:?}"))?;
    let t = |c: &[i64]| Poly::from_i64s(Rationals, c);
    for (f, worked, delta) in [(t(&[0, 0, 1]), t(&[0, 4]), t(&[0, 1])), (t(&[0, 0, 0, 1]), t(&[0, 0, -27]), t(&[0, 0, 1]))] {
        let r = disc_param(&RationalMap::polynomial(f.clone()).unwrap()).map_err(|e| e.to_string())?;
        let (q, rem) = r.raw.divrem(&worked).unwrap();
        ensure(rem.is_zero() && q.deg() == 0 && !q.is_zero(), || format!("raw {} vs {}", r.raw.to_text(), worked.to_text()))?;
        ensure(r.delta == delta, || format!("normalized {} vs {}", r.delta.to_text(), delta.to_text()))?;
    }
    Ok(format!("radicals agree on {} random maps; x^2 and x^3 reproduce 4T and -27T^2", run.instances))
}

/// `a b mod Y^n` on bit vectors, written out independently.
fn mul_trunc(a: u32, b: u32, n: usize) -> u32 {
    let mut acc = 0u32;
    for i in 0..n {
        for j in 0..n - i {
            acc ^= ((a >> i) & (b >> j) & 1) << (i + j);
        }
    }
    acc
}

/// Maps `v -> s + u v` with a fixed point: `s` must lie in the image of
/// `v -> (1 + u) v`, counted by marking that image.
fn affine_brute_force(n: usize) -> BigRational {
    let size = 1usize << n;
    let mut with_fixed = 0u64;
    let mut seen = vec![false; size];
    for u in (1..size as u32).step_by(2) {
        seen.iter_mut().for_each(|s| *s = false);
        for v in 0..size as u32 {
            seen[mul_trunc(u ^ 1, v, n) as usize] = true;
        }
        with_fixed += seen.iter().filter(|&&s| s).count() as u64;
    }
    BigRational::new(with_fixed.into(), (BigInt::one() << (2 * n - 1)).into())
}

fn char2_special_case() -> Outcome {
    for n in 1..=12 {
        let fast = char2_affine_fpp(n).map_err(|e| e.to_string())?;
        ensure(fast == affine_brute_force(n), || format!("brute force disagrees at n={n}"))?;
        ensure(fast == char2_affine_fpp_closed_form(n), || format!("closed form disagrees at n={n}"))?;
    }
    let gap = (char2_affine_fpp(8).unwrap() - ratio(1, 3)).to_f64().unwrap().abs();
    ensure(gap < 1e-4, || format!("|fpp(8) - 1/3| = {gap}"))?;
    let mut fibers = 0;
    for k in 1..=4 {
        for n in 1..=3 {
            let r = char2_quadratic_scan(k, n, 0xc2 + k as u64, workers()).map_err(|e| e.to_string())?;
            ensure(r.violations == 0, || format!("{} violations over GF(2^{k}) at n={n}", r.violations))?;
            for row in &r.rows {
                let ok = row.profile.lengths().all(|l| l.is_power_of_two() && l <= 1 << n);
                ensure(ok, || format!("profile {} over GF(2^{k}) at n={n}", row.profile))?;
            }
            fibers += r.fibers;
        }
    }
    Ok(format!("n <= 12 exact, |fpp(8) - 1/3| = {gap:.2e}; {fibers} quadratic fibers, no violations"))
}

fn orbit_primes() -> Outcome {
    let o = OrbitOptions { workers: workers(), ..Default::default() };
    let start = Instant::now();
    let f = Poly::from_i64s(Rationals, &[1, 0, 1]);
    let r = orbit_prime_density(&f, &BigRational::from_integer(0.into()), 100_000, &o).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    let density = r.density();
    ensure(density == ratio(r.dividing as i64, r.good_primes as i64), || "density is not dividing/good".into())?;
    ensure(density <= ratio(1, 2), || format!("density {density} > 1/2"))?;
    let ladder: Vec<BigRational> = (1..=8).map(|m| fpp(2, m, FppMethod::Recursive).unwrap()).collect();
    ensure(r.fpp_ladder == ladder, || "report lacks the fpp(2,1..8) ladder".into())?;

    let q = |c: &[i64]| Poly::from_i64s(Rationals, c);
    let a = |v: i64| BigRational::from_integer(v.into());
    for (f, a0, forced) in [(q(&[0, -1, 1]), a(2), vec![2u64]), (q(&[0, -1, 1]), a(-1), vec![2]), (q(&[6, -6, 1]), a(6), vec![2, 3])] {
        let got = dividing_primes(&f, &a0, 10_000, &o).map_err(|e| e.to_string())?;
        ensure(got == forced, || format!("f={} a0={a0}: {got:?} vs {forced:?}", f.to_text()))?;
    }
    Ok(format!(
        "density {}/{} = {:.4} <= 1/2 over {} good primes in {elapsed:.1?}; constant orbits give {{2}}, {{2}}, {{2,3}}",
        r.density_num,
        r.density_den,
        density.to_f64().unwrap(),
        r.good_primes
    ))
}

fn group_lemmas() -> Outcome {
    let t = common::transposition_lemma_counterexamples(0xacce9, 200);
    let p = common::primitive_lemma_counterexamples(0xaccea, 200);
    ensure(t == 0 && p == 0, || format!("{t} transposition and {p} primitivity counterexamples"))?;
    Ok("0 counterexamples in 200 transposition and 200 primitive instances".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("exact wreath statistics", exact_wreath_statistics),
        ("fpp agreement and decay", fpp_agreement_and_decay),
        ("Chebotarev census", chebotarev_census),
        ("Frobenius convergence", frobenius_convergence),
        ("H-test oracle equivalence", h_test_oracles),
        ("discriminant consistency", discriminant_consistency),
        ("char-2 special case", char2_special_case),
        ("orbit primes", orbit_primes),
        ("group-lemma properties", group_lemmas),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS [{secs:.1}s] {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{secs:.1}s] {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
