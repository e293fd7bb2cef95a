//! JSON form of an algebra:
//!
//! ```json
//! { "dim": 2, "labels": ["1", "i"], "unit": ["1", "0"],
//!   "sc": [[["1","0"],["0","1"]], [["0","1"],["-1","0"]]] }
//! ```
//!
//! `sc[i][j]` holds the coordinates of `e_i e_j`. Exact algebras write
//! rationals as strings (`"3/2"`); on input strings and JSON numbers are both
//! accepted and parsed exactly.

use std::path::Path;

use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Rational, Scalar};

pub fn algebra_to_json<S: Scalar>(alg: &Algebra<S>) -> Value {
    let sc: Vec<Value> = alg
        .table()
        .iter()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|cell| Value::Array(cell.iter().map(Scalar::to_json).collect()))
                    .collect(),
            )
        })
        .collect();
    json!({
        "dim": alg.dim(),
        "labels": alg.labels(),
        "unit": alg.unit_coords().map(|u| u.iter().map(Scalar::to_json).collect::<Vec<_>>()),
        "sc": sc,
    })
}

fn scalar_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        other => Err(Error::Parse(format!("expected a number or string, got {other}"))),
    }
}

fn vector_from_json(v: &Value, len: usize, what: &str) -> Result<Vec<Rational>> {
    let arr = v.as_array().ok_or_else(|| Error::Parse(format!("{what} must be an array")))?;
    if arr.len() != len {
        return Err(Error::Dimension { expected: len, found: arr.len() });
    }
    arr.iter().map(scalar_from_json).collect()
}

pub fn algebra_from_json(v: &Value) -> Result<Algebra<Rational>> {
    let dim = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing or invalid \"dim\"".into()))? as usize;
    if dim == 0 {
        return Err(Error::InvalidAlgebra("dimension must be positive".into()));
    }
    let labels: Vec<String> = match v.get("labels") {
        Some(Value::Array(items)) => items
            .iter()
            .map(|l| l.as_str().map(str::to_string).ok_or_else(|| Error::Parse("labels must be strings".into())))
            .collect::<Result<_>>()?,
        None | Some(Value::Null) => (0..dim).map(|i| format!("e{i}")).collect(),
        Some(_) => return Err(Error::Parse("\"labels\" must be an array".into())),
    };
    if labels.len() != dim {
        return Err(Error::Dimension { expected: dim, found: labels.len() });
    }
    let unit = match v.get("unit") {
        None | Some(Value::Null) => None,
        Some(u) => Some(vector_from_json(u, dim, "unit")?),
    };
    let sc = v.get("sc").ok_or_else(|| Error::Parse("missing \"sc\"".into()))?;
    let rows = sc.as_array().ok_or_else(|| Error::Parse("\"sc\" must be an array".into()))?;
    if rows.len() != dim {
        return Err(Error::Dimension { expected: dim, found: rows.len() });
    }
    let mut table = Vec::with_capacity(dim);
    for row in rows {
        let cells = row.as_array().ok_or_else(|| Error::Parse("\"sc\" rows must be arrays".into()))?;
        if cells.len() != dim {
            return Err(Error::Dimension { expected: dim, found: cells.len() });
        }
        table.push(cells.iter().map(|c| vector_from_json(c, dim, "sc entry")).collect::<Result<Vec<_>>>()?);
    }
    Algebra::from_table(table, labels, unit)
}

pub fn algebra_from_str(text: &str) -> Result<Algebra<Rational>> {
    algebra_from_json(&serde_json::from_str(text)?)
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<Algebra<Rational>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    algebra_from_str(&text)
}
