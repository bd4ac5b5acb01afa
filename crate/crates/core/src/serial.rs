//! Serde helpers shared by the report types: exact rationals as `"p/q"`
//! strings and floats with 17 significant digits.

use serde::ser::SerializeSeq;
use serde::Serializer;

use crate::polycore::Rational;

pub fn rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

pub fn rational_vec<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&r.to_string())?;
    }
    seq.end()
}

/// Fixed 17-significant-digit rendering, so output is byte-stable.
pub fn format_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

/// A JSON number carrying exactly the digits of [`format_f64`]. Non-finite
/// values become `null`.
pub fn json_f64(x: f64) -> serde_json::Value {
    if !x.is_finite() {
        return serde_json::Value::Null;
    }
    let n: serde_json::Number = format_f64(x).parse().expect("formatted float parses");
    serde_json::Value::Number(n)
}

pub fn f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&json_f64(*x), s)
}

pub fn f64_vec<S: Serializer>(v: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&json_f64(*x))?;
    }
    seq.end()
}

pub fn f64_matrix<S: Serializer>(m: &[Vec<f64>], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for row in m {
        let r: Vec<serde_json::Value> = row.iter().map(|x| json_f64(*x)).collect();
        seq.serialize_element(&r)?;
    }
    seq.end()
}
