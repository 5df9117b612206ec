//! Serializable reports for the genericity test and discriminants.

use serde::{Deserialize, Serialize};

use super::report::{read_csv, write_csv, Report};
use crate::dynamics::{disc_iterate_radical_capped, disc_param, is_in_h_with_budget, HReport, RationalMap, Verdict};
use crate::algebra::{Field, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HCheckReport {
    pub field: String,
    pub f: String,
    #[serde(rename = "N")]
    pub big_n: usize,
    #[serde(flatten)]
    pub report: HReport,
}

pub fn h_check<F: Field>(field_tag: &str, f: &Poly<F>, big_n: usize, budget: u64) -> Result<HCheckReport> {
    Ok(HCheckReport { field: field_tag.to_string(), f: f.to_text(), big_n, report: is_in_h_with_budget(f, big_n, budget)? })
}

const H_HEADER: [&str; 3] = ["condition", "verdict", "witness"];

impl Report for HCheckReport {
    fn to_csv(&self) -> String {
        let meta = [("field", self.field.clone()), ("f", self.f.clone()), ("N", self.big_n.to_string())];
        let mut rows: Vec<(String, &str, &str)> = self
            .report
            .conditions
            .iter()
            .enumerate()
            .map(|(i, v)| ((i + 1).to_string(), v.label(), v.witness()))
            .collect();
        rows.push(("overall".into(), if self.report.overall { "holds" } else { "fails" }, ""));
        write_csv(&meta, &H_HEADER, &rows)
    }

    fn from_csv(s: &str) -> Result<Self> {
        let parsed = read_csv::<(String, String, String)>(s, &H_HEADER)?;
        if parsed.rows.len() != 5 {
            return Err(Error::Parse("expected four conditions and an overall row".into()));
        }
        let mut conditions: [Verdict; 4] = std::array::from_fn(|_| Verdict::NotApplicable);
        for (i, (c, v, w)) in parsed.rows[..4].iter().enumerate() {
            if c != &(i + 1).to_string() {
                return Err(Error::Parse(format!("unexpected condition label '{c}'")));
            }
            conditions[i] = match v.as_str() {
                "holds" => Verdict::Holds,
                "fails" => Verdict::Fails(w.clone()),
                "not_applicable" => Verdict::NotApplicable,
                _ => return Err(Error::Parse(format!("unknown verdict '{v}'"))),
            };
        }
        let report = HReport::new(conditions);
        let claimed = parsed.rows[4].1 == "holds";
        if parsed.rows[4].0 != "overall" || claimed != report.overall {
            return Err(Error::Parse("overall row disagrees with the conditions".into()));
        }
        Ok(HCheckReport { field: parsed.get_str("field")?, f: parsed.get_str("f")?, big_n: parsed.get("N")?, report })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalFactor {
    pub factor: String,
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IterateRadical {
    pub n: usize,
    pub radical: String,
    pub critical_values: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscCheckReport {
    pub field: String,
    pub map: String,
    pub raw: String,
    pub delta: String,
    pub critical_product: Vec<CriticalFactor>,
    pub iterate: Option<IterateRadical>,
}

/// Discriminant of `map`; for polynomial maps with `iterate_n = Some(n)`,
/// also the radical for `f^n`.
pub fn disc_check<F: Field>(field_tag: &str, map: &RationalMap<F>, iterate_n: Option<usize>, cap_bits: u64) -> Result<DiscCheckReport> {
    let r = disc_param(map)?;
    let iterate = match iterate_n {
        None => None,
        Some(n) => {
            if !map.is_polynomial() {
                return Err(Error::InvalidParameter("iterate radicals need a polynomial map".into()));
            }
            let den = map.den().coeff(0);
            let inv = map.field().inv(&den).expect("nonzero constant denominator");
            let f = map.num().scale(&inv);
            let it = disc_iterate_radical_capped(&f, n, cap_bits)?;
            Some(IterateRadical { n, radical: it.radical.to_text(), critical_values: it.critical_values.to_text() })
        }
    };
    Ok(DiscCheckReport {
        field: field_tag.to_string(),
        map: map.to_text(),
        raw: r.raw.to_text(),
        delta: r.delta.to_text(),
        critical_product: r
            .critical_product
            .iter()
            .map(|(g, e)| CriticalFactor { factor: g.to_text(), exponent: *e })
            .collect(),
        iterate,
    })
}

const DISC_HEADER: [&str; 3] = ["kind", "poly", "exponent"];

impl Report for DiscCheckReport {
    fn to_csv(&self) -> String {
        let mut meta = vec![("field", self.field.clone()), ("map", self.map.clone())];
        let mut rows: Vec<(&str, &str, Option<u64>)> = vec![("raw", &self.raw, None), ("delta", &self.delta, None)];
        rows.extend(self.critical_product.iter().map(|c| ("critical", c.factor.as_str(), Some(c.exponent))));
        if let Some(it) = &self.iterate {
            meta.push(("iterate_n", it.n.to_string()));
            rows.push(("iterate_radical", &it.radical, None));
            rows.push(("iterate_critical_values", &it.critical_values, None));
        }
        write_csv(&meta, &DISC_HEADER, &rows)
    }

    fn from_csv(s: &str) -> Result<Self> {
        let parsed = read_csv::<(String, String, Option<u64>)>(s, &DISC_HEADER)?;
        let find = |kind: &str| parsed.rows.iter().find(|r| r.0 == kind).map(|r| r.1.clone());
        let need = |kind: &str| find(kind).ok_or_else(|| Error::Parse(format!("missing '{kind}' row")));
        let critical_product = parsed
            .rows
            .iter()
            .filter(|r| r.0 == "critical")
            .map(|r| Ok(CriticalFactor { factor: r.1.clone(), exponent: r.2.ok_or_else(|| Error::Parse("missing exponent".into()))? }))
            .collect::<Result<_>>()?;
        let iterate = match parsed.meta.contains_key("iterate_n") {
            false => None,
            true => Some(IterateRadical {
                n: parsed.get("iterate_n")?,
                radical: need("iterate_radical")?,
                critical_values: need("iterate_critical_values")?,
            }),
        };
        Ok(DiscCheckReport {
            field: parsed.get_str("field")?,
            map: parsed.get_str("map")?,
            raw: need("raw")?,
            delta: need("delta")?,
            critical_product,
            iterate,
        })
    }
}
