//! Discriminants of `p(x) - T q(x)` over `F(T)`, in resultant form and in
//! critical-value product form.

use serde::{Deserialize, Serialize};

use super::critical::critical_value_polys;
use super::map::{iterate_capped, RationalMap, DEFAULT_BIT_CAP};
use crate::algebra::{charpoly_mod, norm_pencil, radical, squarefree_decomposition, Field, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct DiscReport<F: Field> {
    /// `Res_x(p'q - pq', p - T q)` as computed.
    pub raw: Poly<F>,
    /// `raw`, made monic.
    pub delta: Poly<F>,
    /// Distinct critical values grouped by exponent: `(g, e)` means every root
    /// `v` of `g` has exponent `e`, the sum of `ord_a(c)` over the critical
    /// points `a` above `v`. Exponents ascend.
    pub critical_product: Vec<(Poly<F>, u64)>,
}

impl<F: Field> DiscReport<F> {
    /// `prod g^e` over the critical product.
    pub fn critical_product_poly(&self) -> Poly<F> {
        let one = Poly::one(self.raw.field().clone());
        self.critical_product.iter().fold(one, |acc, (g, e)| &acc * &g.pow(*e))
    }
}

/// Text-level mirror of [`DiscReport`] for serialization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscSummary {
    pub map: String,
    pub raw: String,
    pub delta: String,
    pub critical_product: Vec<(String, u64)>,
}

impl DiscSummary {
    pub fn new<F: Field>(map: &RationalMap<F>, r: &DiscReport<F>) -> Self {
        DiscSummary {
            map: map.to_text(),
            raw: r.raw.to_text(),
            delta: r.delta.to_text(),
            critical_product: r.critical_product.iter().map(|(g, e)| (g.to_text(), *e)).collect(),
        }
    }
}

/// Removes from `c` every root shared with `q`.
fn strip_common<F: Field>(c: &Poly<F>, q: &Poly<F>) -> Poly<F> {
    let mut c = c.clone();
    loop {
        let g = c.gcd(q);
        if g.is_constant() {
            return c;
        }
        c = c.div_exact(&g);
    }
}

pub fn disc_param<F: Field>(map: &RationalMap<F>) -> Result<DiscReport<F>> {
    let (p, q) = (map.num(), map.den());
    if p.derivative().is_zero() && q.derivative().is_zero() {
        return Err(Error::InseparableFiber);
    }
    let fld = map.field().clone();
    let c = map.critical_poly();
    debug_assert!(!c.is_zero());
    let d = map.degree() as u64;

    // Res_x(c, p - T q) = lc(c)^d prod_{c(a)=0} (p(a) - T q(a))
    let raw = norm_pencil(&c, p, q).scale(&fld.pow(&c.leading(), d));
    let delta = raw.monic();

    let finite = strip_common(&c, q);
    let mut product = Poly::one(fld.clone());
    if !finite.is_constant() {
        for (g, m) in squarefree_decomposition(&finite)? {
            let r = p.mul_mod(&q.inv_mod(&g).expect("poles removed"), &g);
            product = &product * &charpoly_mod(&g, &r).pow(m);
        }
    }
    let critical_product = if product.is_constant() { Vec::new() } else { squarefree_decomposition(&product)? };
    Ok(DiscReport { raw, delta, critical_product })
}

#[derive(Clone, Debug, PartialEq)]
pub struct IterateDiscriminant<F: Field> {
    /// Radical of the discriminant of `f^n(x) - T`.
    pub radical: Poly<F>,
    /// Radical of `r_1 r_2 ... r_n`, whose roots are the values `f^m(b)`.
    pub critical_values: Poly<F>,
}

impl<F: Field> IterateDiscriminant<F> {
    pub fn consistent(&self) -> bool {
        self.radical == self.critical_values
    }
}

pub fn disc_iterate_radical<F: Field>(f: &Poly<F>, n: usize) -> Result<IterateDiscriminant<F>> {
    disc_iterate_radical_capped(f, n, DEFAULT_BIT_CAP)
}

pub fn disc_iterate_radical_capped<F: Field>(f: &Poly<F>, n: usize, cap_bits: u64) -> Result<IterateDiscriminant<F>> {
    let fld = f.field().clone();
    let fn_ = iterate_capped(f, n, cap_bits)?;
    let report = disc_param(&RationalMap::polynomial(fn_)?)?;
    let rad = if report.delta.is_constant() { Poly::one(fld.clone()) } else { radical(&report.delta)? };
    let critical_values = match critical_value_polys(f, n) {
        Ok(rs) => {
            let prod = rs.iter().fold(Poly::one(fld.clone()), |acc, r| &acc * r);
            radical(&prod)?
        }
        Err(Error::NoCriticalPoints) => Poly::one(fld),
        Err(e) => return Err(e),
    };
    Ok(IterateDiscriminant { radical: rad, critical_values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{field_make, Rationals};

    fn q(c: &[i64]) -> Poly<Rationals> {
        Poly::from_i64s(Rationals, c)
    }

    fn poly_map(c: &[i64]) -> RationalMap<Rationals> {
        RationalMap::polynomial(q(c)).unwrap()
    }

    #[test]
    fn power_maps() {
        let r = disc_param(&poly_map(&[0, 0, 1])).unwrap();
        assert_eq!(r.raw, q(&[0, -4]));
        assert_eq!(r.delta, q(&[0, 1]));
        assert_eq!(r.critical_product, vec![(q(&[0, 1]), 1)]);

        let r = disc_param(&poly_map(&[0, 0, 0, 1])).unwrap();
        assert_eq!(r.raw, q(&[0, 0, 27]));
        assert_eq!(r.delta, q(&[0, 0, 1]));
        assert_eq!(r.critical_product, vec![(q(&[0, 1]), 2)]);
    }

    #[test]
    fn degree_one() {
        let r = disc_param(&poly_map(&[3, 2])).unwrap();
        assert!(r.delta.is_one());
        assert!(r.critical_product.is_empty());
        let m = RationalMap::new(q(&[1, 2]), q(&[3, 1])).unwrap();
        let r = disc_param(&m).unwrap();
        assert!(r.delta.is_one());
    }

    #[test]
    fn rational_map_agrees_with_product() {
        // (x^2 + 1) / x: critical points +-1, values +-2.
        let m = RationalMap::new(q(&[1, 0, 1]), q(&[0, 1])).unwrap();
        let r = disc_param(&m).unwrap();
        assert_eq!(r.delta, q(&[-4, 0, 1]));
        assert_eq!(radical(&r.critical_product_poly()).unwrap(), radical(&r.delta).unwrap());
        // x^2 / (x - 1)^2 has a double pole, which contributes only a constant.
        let m = RationalMap::new(q(&[0, 0, 1]), q(&[1, -2, 1])).unwrap();
        let r = disc_param(&m).unwrap();
        assert_eq!(radical(&r.critical_product_poly()).unwrap(), radical(&r.delta).unwrap());
        assert_eq!(r.critical_product, vec![(q(&[0, 1]), 1)]);
    }

    #[test]
    fn inseparable_fiber() {
        let g = field_make(2, 1).unwrap();
        let m = RationalMap::polynomial(Poly::from_i64s(g, &[1, 0, 1])).unwrap();
        assert_eq!(disc_param(&m).unwrap_err(), Error::InseparableFiber);
    }

    #[test]
    fn iterate_radicals() {
        let r = disc_iterate_radical(&q(&[1, 0, 1]), 2).unwrap();
        assert_eq!(r.radical, q(&[2, -3, 1]));
        assert!(r.consistent());
        let r = disc_iterate_radical(&q(&[0, 0, 1]), 2).unwrap();
        assert_eq!(r.radical, q(&[0, 1]));
        assert!(r.consistent());
        let r = disc_iterate_radical(&q(&[5, 3]), 3).unwrap();
        assert!(r.radical.is_one() && r.consistent());
    }
}
