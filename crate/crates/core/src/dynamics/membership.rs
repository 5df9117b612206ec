//! The four-condition genericity test for a polynomial of degree `d` and
//! orbit horizon `N`.

use serde::{Deserialize, Serialize};

use super::critical::{char2_cube_check, orbit_collision_check, OrbitCheck};
use super::decompose::{is_indecomposable_fq, Decomposition, DEFAULT_DECOMPOSITION_BUDGET};
use crate::algebra::{is_squarefree, Field, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "witness", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails(String),
    NotApplicable,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails(_) => "fails",
            Verdict::NotApplicable => "not_applicable",
        }
    }

    pub fn witness(&self) -> &str {
        match self {
            Verdict::Fails(w) => w,
            _ => "",
        }
    }
}

/// Verdicts for the separability, orbit, triple-root and indecomposability
/// conditions, in that order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HReport {
    pub conditions: [Verdict; 4],
    pub overall: bool,
}

impl HReport {
    pub fn new(conditions: [Verdict; 4]) -> Self {
        let overall = !conditions.iter().any(Verdict::is_failure);
        HReport { conditions, overall }
    }
}

/// Strips the Frobenius from `f(x) = g(x)^2` in characteristic 2.
fn char2_sqrt<F: Field>(f: &Poly<F>) -> Option<Poly<F>> {
    let fld = f.field();
    if f.coeffs().iter().skip(1).step_by(2).any(|c| !fld.is_zero(c)) {
        return None;
    }
    let coeffs = f.coeffs().iter().step_by(2).map(|c| fld.pth_root(c)).collect();
    Some(Poly::new(fld.clone(), coeffs))
}

fn separability<F: Field>(f: &Poly<F>) -> Result<Verdict> {
    let df = f.derivative();
    if df.is_zero() {
        return Ok(Verdict::Fails("f' = 0".into()));
    }
    if f.field().characteristic() == 2 {
        let h = char2_sqrt(&df).ok_or_else(|| Error::Internal("f' is not a square".into()))?;
        return Ok(if is_squarefree(&h)? {
            Verdict::Holds
        } else {
            Verdict::Fails(format!("f' = h^2 with h = {} not squarefree", h.to_text()))
        });
    }
    Ok(if is_squarefree(&df)? {
        Verdict::Holds
    } else {
        Verdict::Fails(format!("f' = {} not squarefree", df.to_text()))
    })
}

fn orbit<F: Field>(f: &Poly<F>, big_n: usize) -> Result<Verdict> {
    if f.derivative().is_zero() {
        return Ok(Verdict::Fails("every point is critical".into()));
    }
    match orbit_collision_check(f, big_n) {
        Ok(OrbitCheck::Ok) | Err(Error::NoCriticalPoints) => Ok(Verdict::Holds),
        Ok(OrbitCheck::Collision { n, m }) => Ok(Verdict::Fails(format!("collision at (n, m) = ({n}, {m})"))),
        Err(e) => Err(e),
    }
}

pub fn is_in_h<F: Field>(f: &Poly<F>, big_n: usize) -> Result<HReport> {
    is_in_h_with_budget(f, big_n, DEFAULT_DECOMPOSITION_BUDGET)
}

pub fn is_in_h_with_budget<F: Field>(f: &Poly<F>, big_n: usize, budget: u64) -> Result<HReport> {
    let d = f.degree().unwrap_or(0);
    if d < 2 {
        return Err(Error::InvalidParameter(format!("need degree at least 2, got {d}")));
    }
    let p = f.field().characteristic();
    let c1 = separability(f)?;
    let c2 = orbit(f, big_n)?;
    let c3 = if p == 2 {
        if char2_cube_check(f)? {
            Verdict::Holds
        } else {
            Verdict::Fails("some critical point is a root of f - f(b) of order >= 3".into())
        }
    } else {
        Verdict::NotApplicable
    };
    let c4 = if p != 0 && d as u64 % p == 0 {
        let df = f.derivative();
        match is_indecomposable_fq(f, budget)? {
            Decomposition::Decomposable { outer, inner } => {
                Verdict::Fails(format!("f = g(h) with g = {}, h = {}", outer.to_text(), inner.to_text()))
            }
            Decomposition::Indecomposable if df.is_zero() || df.deg() != d - 2 => {
                Verdict::Fails(format!("deg f' != {}", d - 2))
            }
            Decomposition::Indecomposable => Verdict::Holds,
        }
    } else {
        Verdict::NotApplicable
    };
    Ok(HReport::new([c1, c2, c3, c4]))
}
