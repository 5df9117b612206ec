//! CSV and JSON encodings of reports.
//!
//! CSV output has one header line followed by data rows. Report-level values
//! that have no column travel in leading `# key=value` lines, which CSV
//! readers configured for `#` comments skip. Exact rationals are always split
//! into numerator and denominator columns.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};

/// A report with lossless CSV and JSON encodings.
pub trait Report: Sized + Serialize + DeserializeOwned {
    fn to_csv(&self) -> String;
    fn from_csv(s: &str) -> Result<Self>;

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

pub(crate) fn write_csv<R: Serialize>(meta: &[(&str, String)], header: &[&str], rows: &[R]) -> String {
    let mut out = String::new();
    for (k, v) in meta {
        debug_assert!(!v.contains('\n'));
        out.push_str(&format!("# {k}={v}\n"));
    }
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.serialize(r).expect("in-memory write");
    }
    out.push_str(&String::from_utf8(w.into_inner().expect("flush")).expect("utf8"));
    out
}

pub(crate) struct Parsed<R> {
    pub meta: BTreeMap<String, String>,
    pub rows: Vec<R>,
}

impl<R> Parsed<R> {
    pub fn get<T: FromStr>(&self, key: &str) -> Result<T> {
        let v = self.meta.get(key).ok_or_else(|| Error::Parse(format!("missing '{key}' line")))?;
        v.parse().map_err(|_| Error::Parse(format!("bad value for '{key}': {v}")))
    }

    pub fn get_str(&self, key: &str) -> Result<String> {
        self.get(key)
    }
}

pub(crate) fn read_csv<R: DeserializeOwned>(s: &str, header: &[&str]) -> Result<Parsed<R>> {
    let mut meta = BTreeMap::new();
    for line in s.lines() {
        if let Some(rest) = line.strip_prefix('#') {
            let (k, v) = rest.trim_start().split_once('=').ok_or_else(|| Error::Parse(format!("bad line '{line}'")))?;
            meta.insert(k.trim().to_string(), v.to_string());
        }
    }
    let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(s.as_bytes());
    let found: Vec<String> = r.headers().map_err(csv_err)?.iter().map(str::to_string).collect();
    if found != header {
        return Err(Error::Parse(format!("expected columns {header:?}, found {found:?}")));
    }
    let rows = r.deserialize().collect::<std::result::Result<Vec<R>, _>>().map_err(csv_err)?;
    Ok(Parsed { meta, rows })
}

pub(crate) fn ratio_text(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub(crate) fn parse_ratio(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

pub(crate) fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}

pub(crate) fn split<T: FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(';')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad list item '{t}'"))))
        .collect()
}

/// Big integers as decimal strings in both CSV and JSON.
pub mod int_str {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Lists of rationals as `"num/den"` strings.
pub mod ratio_vec {
    use num_rational::BigRational;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&super::ratio_text(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| super::parse_ratio(s).map_err(serde::de::Error::custom)).collect()
    }
}
