//! Reading groups from JSON documents or catalog references.
//!
//! Document schema:
//!
//! ```json
//! {
//!   "cyclotomic_order": 4,
//!   "size": 2,
//!   "generators": [ [[["0","1"], ["0"]], [["0"], ["0","-1"]]] ],
//!   "cap": 1000
//! }
//! ```
//!
//! Each matrix entry is a list of coefficients `c_j` (strings `"p/q"` or
//! JSON integers) meaning `Σ_j c_j ζ_M^j`. Lists shorter than `M` are padded
//! with zeros.

use std::path::Path;

use num_rational::BigRational;
use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::catalog::{catalog_group, CatalogError};
use crate::cyclotomic::{parse_rational, Cyclotomic, CyclotomicError};
use crate::matgroup::{GroupError, MatrixGroup};
use crate::matrix::CycMatrix;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed group document: {0}")]
    Json(String),
    #[error("cyclotomic_order must be positive, got {0}")]
    Order(i64),
    #[error("generator {generator}: expected {expected} rows, got {found}")]
    Rows {
        generator: usize,
        expected: usize,
        found: usize,
    },
    #[error("generator {generator}, row {row}: expected {expected} entries, got {found}")]
    Columns {
        generator: usize,
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("generator {generator}, entry ({row}, {col}): {message}")]
    Entry {
        generator: usize,
        row: usize,
        col: usize,
        message: String,
    },
    #[error("{0}")]
    Group(#[from] GroupError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
}

#[derive(Debug, Deserialize)]
struct GroupDocument {
    cyclotomic_order: i64,
    size: usize,
    generators: Vec<Vec<Vec<Vec<Value>>>>,
    cap: Option<usize>,
}

/// A parsed group document before closure.
#[derive(Debug, Clone)]
pub struct GroupSpec {
    pub size: usize,
    pub generators: Vec<CycMatrix>,
    pub cap: Option<usize>,
}

fn coefficient(v: &Value) -> Option<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        _ => None,
    }
}

pub fn parse_group_document(text: &str) -> Result<GroupSpec, InputError> {
    let doc: GroupDocument =
        serde_json::from_str(text).map_err(|e| InputError::Json(e.to_string()))?;
    if doc.cyclotomic_order <= 0 || doc.cyclotomic_order > u32::MAX as i64 {
        return Err(InputError::Order(doc.cyclotomic_order));
    }
    let order = doc.cyclotomic_order as u32;
    let d = doc.size;
    let mut generators = Vec::with_capacity(doc.generators.len());
    for (gi, g) in doc.generators.iter().enumerate() {
        if g.len() != d {
            return Err(InputError::Rows {
                generator: gi,
                expected: d,
                found: g.len(),
            });
        }
        let mut rows = Vec::with_capacity(d);
        for (ri, row) in g.iter().enumerate() {
            if row.len() != d {
                return Err(InputError::Columns {
                    generator: gi,
                    row: ri,
                    expected: d,
                    found: row.len(),
                });
            }
            let mut out_row = Vec::with_capacity(d);
            for (ci, entry) in row.iter().enumerate() {
                let err = |message: String| InputError::Entry {
                    generator: gi,
                    row: ri,
                    col: ci,
                    message,
                };
                if entry.is_empty() || entry.len() > order as usize {
                    return Err(err(format!(
                        "expected 1..={order} coefficients, got {}",
                        entry.len()
                    )));
                }
                let coeffs = entry
                    .iter()
                    .map(|v| coefficient(v).ok_or_else(|| err(format!("bad coefficient {v}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                out_row.push(Cyclotomic::from_poly(order, coeffs));
            }
            rows.push(out_row);
        }
        generators.push(CycMatrix::new(rows).map_err(GroupError::from)?);
    }
    Ok(GroupSpec {
        size: d,
        generators,
        cap: doc.cap,
    })
}

/// Builds a group from a document; the document's own `cap` wins over
/// `default_cap` when present.
pub fn group_from_document(text: &str, default_cap: usize) -> Result<MatrixGroup, InputError> {
    let spec = parse_group_document(text)?;
    let cap = spec.cap.unwrap_or(default_cap);
    Ok(MatrixGroup::closure(spec.size, &spec.generators, cap)?)
}

/// Resolves `catalog:<name>` or a path to a JSON document.
pub fn load_group(reference: &str, cap: usize) -> Result<MatrixGroup, InputError> {
    if let Some(name) = reference.strip_prefix("catalog:") {
        return Ok(catalog_group(name, cap)?);
    }
    let path = Path::new(reference);
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: reference.to_owned(),
        message: e.to_string(),
    })?;
    group_from_document(&text, cap)
}
