//! JSON input and output for curvature tensors.
//!
//! Input document shape:
//!
//! ```json
//! {
//!   "basis": "lex-eij",
//!   "matrix": [[...6 numbers...] x 6],
//!   "tolerance": 1e-10,
//!   "metadata": { "kind": "cp2", "params": [12.0], "volume": 19.7,
//!                 "lambda1": 6.0, "quotient_factor": 1 }
//! }
//! ```
//!
//! `matrix` may also be a flat row-major array of 36 numbers. `basis` is
//! optional but must spell `"lex-eij"` when present; every other field
//! besides `matrix` is optional. Output floats are printed as `{:.16e}`
//! (17 significant digits), enough to reproduce every f64 bit for bit, so
//! summaries are byte-identical across runs given equal inputs. Object
//! keys serialize in sorted order for the same reason.

use crate::curvature::CurvatureOperator;
use nalgebra::{Matrix3, Matrix4, Matrix6, Vector3, Vector4, Vector6};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::io;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unsupported basis {0:?}, expected \"lex-eij\"")]
    BadBasis(String),
    #[error("matrix must be 6 rows of 6 numbers or a flat array of 36: {0}")]
    BadShape(String),
    #[error("matrix entry ({row}, {col}) is not a finite number")]
    NotFinite { row: usize, col: usize },
}

/// Optional global data carried alongside a tensor document.
#[derive(Debug, Clone, PartialEq, Deserialize, Default)]
pub struct TensorMetadata {
    pub kind: Option<String>,
    pub params: Option<Vec<f64>>,
    pub volume: Option<f64>,
    pub lambda1: Option<f64>,
    pub quotient_factor: Option<u32>,
}

/// A parsed tensor document.
#[derive(Debug, Clone)]
pub struct TensorInput {
    pub operator: CurvatureOperator,
    pub tolerance: Option<f64>,
    pub metadata: Option<TensorMetadata>,
}

#[derive(Deserialize)]
struct RawTensor {
    basis: Option<String>,
    matrix: Value,
    tolerance: Option<f64>,
    metadata: Option<TensorMetadata>,
}

fn entry(v: &Value, row: usize, col: usize) -> Result<f64, JsonError> {
    let x = v
        .as_f64()
        .ok_or_else(|| JsonError::BadShape(format!("entry ({row}, {col}) is not a number")))?;
    if !x.is_finite() {
        return Err(JsonError::NotFinite { row, col });
    }
    Ok(x)
}

fn parse_matrix(v: &Value) -> Result<Matrix6<f64>, JsonError> {
    let rows = v
        .as_array()
        .ok_or_else(|| JsonError::BadShape("not an array".to_string()))?;
    let mut m = Matrix6::zeros();
    if rows.len() == 6 && rows.iter().all(Value::is_array) {
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_array().expect("checked above");
            if row.len() != 6 {
                return Err(JsonError::BadShape(format!(
                    "row {i} has {} entries",
                    row.len()
                )));
            }
            for (j, x) in row.iter().enumerate() {
                m[(i, j)] = entry(x, i, j)?;
            }
        }
    } else if rows.len() == 36 {
        for (k, x) in rows.iter().enumerate() {
            m[(k / 6, k % 6)] = entry(x, k / 6, k % 6)?;
        }
    } else {
        return Err(JsonError::BadShape(format!(
            "got {} top-level entries",
            rows.len()
        )));
    }
    Ok(m)
}

/// Parse a tensor document.
pub fn read_tensor(text: &str) -> Result<TensorInput, JsonError> {
    let raw: RawTensor = serde_json::from_str(text)?;
    if let Some(basis) = &raw.basis {
        if basis != "lex-eij" {
            return Err(JsonError::BadBasis(basis.clone()));
        }
    }
    Ok(TensorInput {
        operator: CurvatureOperator::new(parse_matrix(&raw.matrix)?),
        tolerance: raw.tolerance,
        metadata: raw.metadata,
    })
}

/// A tensor document value, inverse of [`read_tensor`].
pub fn tensor_document(r: &CurvatureOperator, metadata: Option<Value>) -> Value {
    let mut doc = json!({
        "basis": "lex-eij",
        "matrix": matrix6_value(r.matrix()),
    });
    if let Some(meta) = metadata {
        doc["metadata"] = meta;
    }
    doc
}

/// The uniform output envelope of every CLI subcommand.
pub fn envelope(command: &str, config: Value, result: Value) -> Value {
    json!({ "command": command, "config": config, "result": result })
}

pub fn matrix6_value(m: &Matrix6<f64>) -> Value {
    Value::Array(
        (0..6)
            .map(|i| Value::Array((0..6).map(|j| json!(m[(i, j)])).collect()))
            .collect(),
    )
}

pub fn matrix4_value(m: &Matrix4<f64>) -> Value {
    Value::Array(
        (0..4)
            .map(|i| Value::Array((0..4).map(|j| json!(m[(i, j)])).collect()))
            .collect(),
    )
}

pub fn matrix3_value(m: &Matrix3<f64>) -> Value {
    Value::Array(
        (0..3)
            .map(|i| Value::Array((0..3).map(|j| json!(m[(i, j)])).collect()))
            .collect(),
    )
}

pub fn vector3_value(v: &Vector3<f64>) -> Value {
    Value::Array(v.iter().map(|x| json!(x)).collect())
}

pub fn vector4_value(v: &Vector4<f64>) -> Value {
    Value::Array(v.iter().map(|x| json!(x)).collect())
}

pub fn vector6_value(v: &Vector6<f64>) -> Value {
    Value::Array(v.iter().map(|x| json!(x)).collect())
}

/// Serializer printing every float as `{:.16e}`.
struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serialize with 17 significant digits on every float; deterministic
/// (sorted keys, exact decimal for each f64 bit pattern).
pub fn to_string_sci(value: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFormatter);
    value
        .serialize(&mut ser)
        .expect("a finite JSON value serializes without error");
    String::from_utf8(out).expect("serde_json writes UTF-8")
}
