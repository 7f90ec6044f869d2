//! The single-document JSON report emitted by every subcommand.
//!
//! Reports are byte-reproducible: keys are sorted (serde_json's default
//! map is ordered), all numbers are exact, and `wall_time_ms` stays
//! `null` unless the user opts into real timings with `--timings`.

use serde_json::{json, Value};
use tensym_core::exact_arith::Mode;
use tensym_core::symmetry::LieTriple;
use tensym_core::Mat;
use tensym_core::Rational;

use crate::io::rat_string;

/// How the report's results were obtained: `exact` answers are proven,
/// `probabilistic` answers come from random prime fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportMode {
    Exact,
    Probabilistic,
}

impl ReportMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ReportMode::Exact => "exact",
            ReportMode::Probabilistic => "probabilistic",
        }
    }
}

impl From<Mode> for ReportMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exact => ReportMode::Exact,
            Mode::Modular => ReportMode::Probabilistic,
        }
    }
}

pub struct Report {
    pub command: String,
    pub inputs_digest: String,
    pub mode: ReportMode,
    pub seed: u64,
    pub results: Value,
    pub wall_time_ms: Option<u128>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let doc = json!({
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "mode": self.mode.as_str(),
            "results": self.results,
            "seed": self.seed,
            "wall_time_ms": self.wall_time_ms,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("report JSON");
        s.push('\n');
        s
    }
}

/// A rational vector as interchange strings.
pub fn vec_value(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|r| Value::String(rat_string(r))).collect())
}

/// A rational matrix as rows of interchange strings.
pub fn mat_value(m: &Mat<Rational>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| {
                Value::Array(
                    (0..m.cols())
                        .map(|c| Value::String(rat_string(m.get(r, c))))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// A Lie-algebra triple as its three matrices.
pub fn lie_triple_value(l: &LieTriple) -> Value {
    json!({ "u": mat_value(&l.u), "v": mat_value(&l.v), "w": mat_value(&l.w) })
}
