//! Strict JSON interchange formats.
//!
//! Three document kinds, all with arbitrary-precision rational values
//! written as strings (`"p"` or `"p/q"`, `q > 0`):
//!
//! * **tensor** — `{"dims": [a, b, c], "entries": [{"i": 1, "j": 1,
//!   "k": 1, "v": "1"}, …]}` with 1-based indices; duplicate coordinates
//!   and explicit zero values are rejected.
//! * **bilinear form** — `{"k": 12, "rows": [["0", "1", …], …]}`, a dense
//!   `k × k` matrix.
//! * **degeneration family** — `{"X": [[{"-1": "1"}, …], …], "Y": …,
//!   "Z": …}`, three square matrices whose entries are Laurent
//!   polynomials in ε given as exponent → coefficient maps.
//!
//! Unknown fields are errors everywhere: these files are fixtures for
//! exact verification, so silent tolerance would hide typos.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Value};
use tensym_core::exact_arith::parse_rat_str;
use tensym_core::obstructions::DegenerationFamily;
use tensym_core::{LaurentPoly, Mat, Rational, Tensor3};

/// A malformed input document; the message names the offending field.
#[derive(Debug)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FormatError {}

fn bad(msg: impl Into<String>) -> FormatError {
    FormatError(msg.into())
}

fn rational(s: &str, context: &str) -> Result<Rational, FormatError> {
    parse_rat_str(s)
        .ok_or_else(|| bad(format!("{context}: `{s}` is not a rational (`p` or `p/q`, q > 0)")))
}

/// Render a rational in the interchange syntax (lowest terms, no `/1`).
pub fn rat_string(r: &Rational) -> String {
    r.to_string()
}

// ---------------------------------------------------------------------
// Tensors
// ---------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorDoc {
    dims: Vec<usize>,
    entries: Vec<TensorEntryDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorEntryDoc {
    i: u32,
    j: u32,
    k: u32,
    v: String,
}

pub fn parse_tensor(src: &str) -> Result<Tensor3, FormatError> {
    let doc: TensorDoc =
        serde_json::from_str(src).map_err(|e| bad(format!("tensor JSON: {e}")))?;
    let [a, b, c] = doc.dims[..] else {
        return Err(bad(format!(
            "tensor JSON: `dims` must have exactly 3 entries, got {}",
            doc.dims.len()
        )));
    };
    let mut entries = Vec::with_capacity(doc.entries.len());
    for e in &doc.entries {
        let v = rational(&e.v, &format!("entry ({}, {}, {})", e.i, e.j, e.k))?;
        entries.push((e.i, e.j, e.k, v));
    }
    Tensor3::from_entries((a, b, c), entries).map_err(|e| bad(format!("tensor JSON: {e}")))
}

pub fn tensor_to_value(t: &Tensor3) -> Value {
    let (a, b, c) = t.dims();
    let entries: Vec<Value> = t
        .entries()
        .map(|(&(i, j, k), v)| json!({ "i": i, "j": j, "k": k, "v": rat_string(v) }))
        .collect();
    json!({ "dims": [a, b, c], "entries": entries })
}

pub fn tensor_to_string(t: &Tensor3) -> String {
    let mut s = serde_json::to_string_pretty(&tensor_to_value(t)).expect("tensor JSON");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------
// Bilinear forms
// ---------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BformDoc {
    k: usize,
    rows: Vec<Vec<String>>,
}

pub fn parse_bform(src: &str) -> Result<Mat<Rational>, FormatError> {
    let doc: BformDoc =
        serde_json::from_str(src).map_err(|e| bad(format!("bilinear form JSON: {e}")))?;
    if doc.k == 0 {
        return Err(bad("bilinear form JSON: k must be positive"));
    }
    if doc.rows.len() != doc.k {
        return Err(bad(format!(
            "bilinear form JSON: expected {} rows, got {}",
            doc.k,
            doc.rows.len()
        )));
    }
    let mut data = Vec::with_capacity(doc.k * doc.k);
    for (r, row) in doc.rows.iter().enumerate() {
        if row.len() != doc.k {
            return Err(bad(format!(
                "bilinear form JSON: row {} has {} entries, expected {}",
                r + 1,
                row.len(),
                doc.k
            )));
        }
        for (c, cell) in row.iter().enumerate() {
            data.push(rational(cell, &format!("row {}, column {}", r + 1, c + 1))?);
        }
    }
    Ok(Mat::from_fn(doc.k, doc.k, |r, c| data[r * doc.k + c].clone()))
}

pub fn bform_to_value(b: &Mat<Rational>) -> Value {
    let rows: Vec<Vec<String>> = (0..b.rows())
        .map(|r| (0..b.cols()).map(|c| rat_string(b.get(r, c))).collect())
        .collect();
    json!({ "k": b.rows(), "rows": rows })
}

pub fn bform_to_string(b: &Mat<Rational>) -> String {
    let mut s = serde_json::to_string_pretty(&bform_to_value(b)).expect("bform JSON");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------
// Degeneration families
// ---------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyDoc {
    #[serde(rename = "X")]
    x: Vec<Vec<BTreeMap<String, String>>>,
    #[serde(rename = "Y")]
    y: Vec<Vec<BTreeMap<String, String>>>,
    #[serde(rename = "Z")]
    z: Vec<Vec<BTreeMap<String, String>>>,
}

fn parse_laurent_matrix(
    rows: &[Vec<BTreeMap<String, String>>],
    name: &str,
) -> Result<Mat<LaurentPoly>, FormatError> {
    let n = rows.len();
    if n == 0 {
        return Err(bad(format!("family JSON: matrix {name} is empty")));
    }
    let mut data: Vec<LaurentPoly> = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(bad(format!(
                "family JSON: matrix {name} row {} has {} entries, expected {} (square)",
                r + 1,
                row.len(),
                n
            )));
        }
        for (c, cell) in row.iter().enumerate() {
            let mut terms = Vec::with_capacity(cell.len());
            for (exp, coeff) in cell {
                let e: i64 = exp.parse().map_err(|_| {
                    bad(format!(
                        "family JSON: {name}[{},{}]: `{exp}` is not an integer exponent",
                        r + 1,
                        c + 1
                    ))
                })?;
                let v = rational(coeff, &format!("{name}[{},{}] coefficient", r + 1, c + 1))?;
                terms.push((e, v));
            }
            data.push(LaurentPoly::from_terms(terms));
        }
    }
    Ok(Mat::from_fn(n, n, |r, c| data[r * n + c].clone()))
}

pub fn parse_family(src: &str) -> Result<DegenerationFamily, FormatError> {
    let doc: FamilyDoc =
        serde_json::from_str(src).map_err(|e| bad(format!("family JSON: {e}")))?;
    let x = parse_laurent_matrix(&doc.x, "X")?;
    let y = parse_laurent_matrix(&doc.y, "Y")?;
    let z = parse_laurent_matrix(&doc.z, "Z")?;
    DegenerationFamily::new(x, y, z).map_err(|e| bad(format!("family JSON: {e}")))
}

// ---------------------------------------------------------------------
// Inline covectors and digests
// ---------------------------------------------------------------------

/// Parse a comma-separated covector such as `1,0,-2/3`.
pub fn parse_covector(s: &str) -> Result<Vec<Rational>, FormatError> {
    s.split(',')
        .map(|part| rational(part, "witness covector"))
        .collect()
}

/// SHA-256 over NUL-separated input components, hex-encoded.
pub fn digest(parts: &[&[u8]]) -> String {
    use sha2::{Digest, Sha256};
    let mut h = Sha256::new();
    for (idx, p) in parts.iter().enumerate() {
        if idx > 0 {
            h.update([0u8]);
        }
        h.update(p);
    }
    let out = h.finalize();
    let mut hex = String::with_capacity(64);
    for byte in out {
        use std::fmt::Write;
        write!(hex, "{byte:02x}").expect("hex");
    }
    hex
}
