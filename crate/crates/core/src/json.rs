//! JSON helpers: integers travel as decimal strings.

use num_bigint::BigInt;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::ZMatrix;

/// Accepts a decimal string or a JSON integer.
pub fn value_to_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integer")),
        other => Err(Error::Parse(format!("expected an integer, found {other}"))),
    }
}

pub fn value_to_usize(v: &Value) -> Result<usize> {
    let b = value_to_bigint(v)?;
    usize::try_from(b).map_err(|_| Error::Parse("expected a small non-negative integer".into()))
}

pub fn bigint_to_value(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn vector_to_value(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(bigint_to_value).collect())
}

pub fn value_to_vector(v: &Value) -> Result<Vec<BigInt>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("expected an array".into()))?
        .iter()
        .map(value_to_bigint)
        .collect()
}

pub fn matrix_to_value(m: &ZMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_value(m.row(i))).collect())
}

pub fn value_to_matrix(v: &Value) -> Result<ZMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected an array of rows".into()))?
        .iter()
        .map(value_to_vector)
        .collect::<Result<Vec<_>>>()?;
    ZMatrix::from_rows(rows)
}
