//! Brute-force oracles shared by the integration suites.
//!
//! Extension fields here are built directly as `GF(q)[z]/(m)` with a
//! root-free modulus found by search, and roots are located by walking every
//! element. Nothing in this module uses resultants or factorization.

#![allow(dead_code)]

use std::collections::BTreeMap;

use arboreal::algebra::{field_make, radical, rational, Field, Gf, Poly, Rationals};
use arboreal::dynamics::{disc_param, OrbitCheck, RationalMap};
use arboreal::Error;
use arboreal::wreath::{enumerate_elements, group_closure, is_primitive, is_transitive, CyclePattern, Perm};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gf(q: u64) -> Gf {
    let (p, k) = arboreal::algebra::prime_power(q).expect("prime power");
    field_make(p, k).unwrap()
}

/// A random polynomial of exact degree `deg`.
pub fn random_poly<R: Rng>(field: &Gf, deg: usize, rng: &mut R) -> Poly<Gf> {
    let q = field.order();
    let mut c: Vec<u64> = (0..deg).map(|_| field.element(rng.gen_range(0..q))).collect();
    c.push(field.element(rng.gen_range(1..q)));
    Poly::new(field.clone(), c)
}

/// `GF(q^L)` as residues of `GF(q)[z]` modulo a degree-`L` polynomial with no
/// roots in `GF(q)` (irreducible for `L <= 3`).
pub struct Ext {
    pub base: Gf,
    pub modulus: Poly<Gf>,
}

impl Ext {
    pub fn new(base: &Gf, degree: usize) -> Ext {
        assert!((1..=3).contains(&degree), "root-free search is only valid up to degree 3");
        if degree == 1 {
            return Ext { base: base.clone(), modulus: Poly::x(base.clone()) };
        }
        let q = base.order();
        let count = q.pow(degree as u32);
        for i in 0..count {
            let mut c: Vec<u64> = digits(i, q, degree).into_iter().map(|d| base.element(d)).collect();
            c.push(base.one());
            let m = Poly::new(base.clone(), c);
            if base.elements().all(|a| !base.is_zero(&m.eval(&a))) {
                return Ext { base: base.clone(), modulus: m };
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    pub fn elements(&self) -> Vec<Poly<Gf>> {
        let q = self.base.order();
        let l = self.degree();
        (0..q.pow(l as u32))
            .map(|i| Poly::new(self.base.clone(), digits(i, q, l).into_iter().map(|d| self.base.element(d)).collect()))
            .collect()
    }

    pub fn embed(&self, c: u64) -> Poly<Gf> {
        Poly::constant(self.base.clone(), c)
    }

    pub fn add(&self, a: &Poly<Gf>, b: &Poly<Gf>) -> Poly<Gf> {
        a + b
    }

    pub fn sub(&self, a: &Poly<Gf>, b: &Poly<Gf>) -> Poly<Gf> {
        a - b
    }

    pub fn mul(&self, a: &Poly<Gf>, b: &Poly<Gf>) -> Poly<Gf> {
        (a * b).rem(&self.modulus)
    }

    /// `f(z)` for `f` over the base field, by Horner.
    pub fn eval(&self, f: &Poly<Gf>, z: &Poly<Gf>) -> Poly<Gf> {
        let mut acc = Poly::zero(self.base.clone());
        for c in f.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, z), &self.embed(*c));
        }
        acc
    }

    /// `g(z)` for `g` with coefficients in this extension.
    pub fn eval_ext(&self, g: &[Poly<Gf>], z: &Poly<Gf>) -> Poly<Gf> {
        let mut acc = Poly::zero(self.base.clone());
        for c in g.iter().rev() {
            acc = self.add(&self.mul(&acc, z), c);
        }
        acc
    }

    /// Quotient of `g` by `x - b` (synthetic division), assuming `g(b) = 0`.
    pub fn deflate(&self, g: &[Poly<Gf>], b: &Poly<Gf>) -> Vec<Poly<Gf>> {
        let n = g.len() - 1;
        let mut out = vec![Poly::zero(self.base.clone()); n];
        let mut carry = Poly::zero(self.base.clone());
        for i in (0..n).rev() {
            carry = self.add(&g[i + 1], &self.mul(&carry, b));
            out[i] = carry.clone();
        }
        out
    }

    /// Multiplicity of `b` as a root of `g`.
    pub fn multiplicity(&self, g: &[Poly<Gf>], b: &Poly<Gf>) -> usize {
        let mut g = g.to_vec();
        let mut m = 0;
        while g.len() > 1 && self.eval_ext(&g, b).is_zero() {
            g = self.deflate(&g, b);
            m += 1;
        }
        m
    }
}

fn digits(mut i: u64, q: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(i % q);
        i /= q;
    }
    out
}

/// All distinct roots of `r` (nonconstant) in the smallest `GF(q^L)`,
/// `L <= 3`, that contains every one of them.
pub fn splitting_roots(r: &Poly<Gf>) -> (Ext, Vec<Poly<Gf>>) {
    let target = radical(r).unwrap().deg();
    for l in 1..=3 {
        let ext = Ext::new(r.field(), l);
        let roots: Vec<_> = ext.elements().into_iter().filter(|z| ext.eval(r, z).is_zero()).collect();
        if roots.len() == target {
            return (ext, roots);
        }
    }
    panic!("no splitting field of degree <= 3 for {r:?}")
}

/// Critical orbits compared value by value in a splitting field of `f'`.
pub fn collision_oracle(f: &Poly<Gf>, big_n: usize) -> OrbitCheck {
    let (ext, crit) = splitting_roots(&f.derivative());
    let mut values: Vec<Vec<Poly<Gf>>> = Vec::new();
    let mut cur = crit;
    for _ in 0..big_n {
        cur = cur.iter().map(|w| ext.eval(f, w)).collect();
        values.push(cur.clone());
    }
    for n in 0..big_n {
        for m in 0..n {
            if values[n].iter().any(|a| values[m].contains(a)) {
                return OrbitCheck::Collision { n: n + 1, m: m + 1 };
            }
        }
        let v = &values[n];
        if (0..v.len()).any(|i| (0..i).any(|j| v[i] == v[j])) {
            return OrbitCheck::Collision { n: n + 1, m: n + 1 };
        }
    }
    OrbitCheck::Ok
}

/// Characteristic 2: true iff no critical point `b` has `(x - b)^3 | f - f(b)`,
/// measured by repeated division in a splitting field. `f' = 0` counts as
/// false.
pub fn cube_oracle(f: &Poly<Gf>) -> bool {
    let d = f.derivative();
    if d.is_zero() {
        return false;
    }
    if d.is_constant() {
        return true;
    }
    let (ext, crit) = splitting_roots(&d);
    let lifted: Vec<Poly<Gf>> = f.coeffs().iter().map(|c| ext.embed(*c)).collect();
    crit.iter().all(|b| {
        let mut g = lifted.clone();
        g[0] = ext.sub(&g[0], &ext.eval(f, b));
        ext.multiplicity(&g, b) < 3
    })
}

/// Leaf-pattern distribution of `[S_d]^n` by walking every element.
pub fn brute_force_distribution(d: usize, n: usize) -> BTreeMap<CyclePattern, BigRational> {
    let mut counts = BTreeMap::<CyclePattern, u64>::new();
    let mut total = 0u64;
    for a in enumerate_elements(d, n).unwrap() {
        *counts.entry(a.leaf_action().cycle_pattern()).or_default() += 1;
        total += 1;
    }
    counts
        .into_iter()
        .map(|(p, c)| (p, BigRational::new(BigInt::from(c), BigInt::from(total))))
        .collect()
}

fn factorial(m: usize) -> usize {
    (1..=m).product()
}

fn random_transposition<R: Rng>(m: usize, r: &mut R) -> Perm {
    let a = r.gen_range(0..m as u32);
    let mut b = r.gen_range(0..m as u32 - 1);
    if b >= a {
        b += 1;
    }
    Perm::transposition(m, a, b)
}

/// Transitive groups generated by transpositions are full symmetric groups.
/// Returns the number of counterexamples over `instances` accepted draws.
pub fn transposition_lemma_counterexamples(seed: u64, instances: usize) -> usize {
    let mut r = rng(seed);
    let (mut seen, mut bad) = (0, 0);
    while seen < instances {
        let m = r.gen_range(2..=8);
        let k = r.gen_range(m - 1..=2 * m);
        let gens: Vec<Perm> = (0..k).map(|_| random_transposition(m, &mut r)).collect();
        let g = group_closure(m, &gens, factorial(m)).unwrap();
        if !is_transitive(&g) {
            continue;
        }
        seen += 1;
        bad += usize::from(g.order() != factorial(m));
    }
    bad
}

/// Primitive groups containing a transposition are full symmetric groups.
/// Returns the number of counterexamples over `instances` accepted draws.
pub fn primitive_lemma_counterexamples(seed: u64, instances: usize) -> usize {
    let mut r = rng(seed);
    let (mut seen, mut bad) = (0, 0);
    while seen < instances {
        let m = r.gen_range(2..=8);
        let mut gens = vec![random_transposition(m, &mut r)];
        for _ in 0..r.gen_range(1..=2) {
            gens.push(Perm::random(m, &mut r));
        }
        let g = group_closure(m, &gens, factorial(m)).unwrap();
        if !(is_primitive(&g) && g.has_transposition()) {
            continue;
        }
        seen += 1;
        bad += usize::from(g.order() != factorial(m));
    }
    bad
}

/// Outcome of running an oracle comparison over seeded random instances.
#[derive(Debug, Default)]
pub struct OracleRun {
    pub instances: usize,
    pub discrepancies: usize,
    /// Instances where the library reported a collision or a cube.
    pub positives: usize,
    /// Instances with critical points outside the base field.
    pub extended: usize,
}

/// `orbit_collision_check` against [`collision_oracle`] for random `f` over
/// `GF(q)`, `q in {3,5,7,8,9}`, `deg f <= 4`, `N <= 3`.
pub fn collision_run(seed: u64, instances: usize) -> OracleRun {
    let mut r = rng(seed);
    let fields: Vec<Gf> = [3, 5, 7, 8, 9].iter().map(|&q| gf(q)).collect();
    let mut out = OracleRun::default();
    while out.instances < instances {
        let field = &fields[r.gen_range(0..fields.len())];
        let f = random_poly(field, r.gen_range(2..=4), &mut r);
        let d = f.derivative();
        if d.is_zero() || d.is_constant() {
            continue;
        }
        let big_n = r.gen_range(1..=3);
        let got = arboreal::dynamics::orbit_collision_check(&f, big_n).unwrap();
        out.discrepancies += usize::from(got != collision_oracle(&f, big_n));
        out.positives += usize::from(got != OrbitCheck::Ok);
        out.extended += usize::from(splitting_roots(&d).0.degree() > 1);
        out.instances += 1;
    }
    out
}

/// `char2_cube_check` against [`cube_oracle`] for random `f` over `GF(2^k)`,
/// `k <= 3`, `deg f <= 6`.
pub fn cube_run(seed: u64, instances: usize) -> OracleRun {
    let mut r = rng(seed);
    let fields: Vec<Gf> = (1..=3).map(|k| gf(1 << k)).collect();
    let mut out = OracleRun::default();
    while out.instances < instances {
        let field = &fields[r.gen_range(0..fields.len())];
        let f = random_poly(field, r.gen_range(2..=6), &mut r);
        let got = arboreal::dynamics::char2_cube_check(&f).unwrap();
        out.discrepancies += usize::from(got != cube_oracle(&f));
        out.positives += usize::from(!got);
        let d = f.derivative();
        out.extended += usize::from(!d.is_constant() && splitting_roots(&d).0.degree() > 1);
        out.instances += 1;
    }
    out
}

fn small_q_poly<R: Rng>(deg: usize, r: &mut R) -> Poly<Rationals> {
    let mut c: Vec<_> = (0..deg).map(|_| rational(r.gen_range(-5..=5), r.gen_range(1..=3))).collect();
    let mut lead = 0;
    while lead == 0 {
        lead = r.gen_range(-4..=4);
    }
    c.push(rational(lead, 1));
    Poly::new(Rationals, c)
}

/// `None` when the fiber is inseparable.
fn radicals_agree<F: Field>(map: &RationalMap<F>) -> Option<bool> {
    match disc_param(map) {
        Ok(rep) => Some(radical(&rep.delta).unwrap() == radical(&rep.critical_product_poly()).unwrap()),
        Err(Error::InseparableFiber) => None,
        Err(e) => panic!("unexpected error {e} for {map:?}"),
    }
}

/// Radical of the resultant form against radical of the critical-value
/// product, for `gf_count` random maps over `GF(q)` with odd `q` and
/// `q_count` over the rationals, all of degree at most 4.
pub fn disc_run(seed: u64, gf_count: usize, q_count: usize) -> OracleRun {
    let mut r = rng(seed);
    let fields: Vec<Gf> = [3, 5, 7, 9, 11, 25].iter().map(|&q| gf(q)).collect();
    let mut out = OracleRun::default();
    let mut done = 0;
    while done < gf_count {
        let field = &fields[r.gen_range(0..fields.len())];
        let p = random_poly(field, r.gen_range(1..=4), &mut r);
        let q = if r.gen_bool(0.4) { Poly::one(field.clone()) } else { random_poly(field, r.gen_range(1..=3), &mut r) };
        let Ok(map) = RationalMap::new(p, q) else { continue };
        if let Some(ok) = radicals_agree(&map) {
            out.discrepancies += usize::from(!ok);
            out.positives += usize::from(!map.is_polynomial());
            done += 1;
        }
    }
    done = 0;
    while done < q_count {
        let p = small_q_poly(r.gen_range(1..=4), &mut r);
        let q = if r.gen_bool(0.4) { Poly::one(Rationals) } else { small_q_poly(r.gen_range(1..=3), &mut r) };
        let Ok(map) = RationalMap::new(p, q) else { continue };
        out.discrepancies += usize::from(radicals_agree(&map) != Some(true));
        out.positives += usize::from(!map.is_polynomial());
        done += 1;
    }
    out.instances = gf_count + q_count;
    out
}
