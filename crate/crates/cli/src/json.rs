//! Exact number encoding for reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::Value;

/// Largest integer a JSON double holds exactly.
const MAX_SAFE: i64 = (1 << 53) - 1;

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if (-MAX_SAFE..=MAX_SAFE).contains(&v) => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

/// Integers as [`int`]; other values as a `"p/q"` string.
pub fn rational(x: &BigRational) -> Value {
    if x.is_integer() {
        int(x.numer())
    } else {
        Value::String(format!("{}/{}", x.numer(), x.denom()))
    }
}

pub fn int_vec(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}
