//! Verification experiments and the report format they share.
//!
//! A report holds labeled numeric rows plus a list of checks. Each check
//! records the tolerance that judged it. Reports contain no timings or other
//! run-dependent data, so a given `(suite, seed)` always serializes to the
//! same bytes.

pub mod dilation;
pub mod fejer;
pub mod random;
pub mod suites;
pub mod witness;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

pub use dilation::dilation_experiment;
pub use fejer::{fejer_convergence, FejerTail};
pub use suites::{run_suite, run_suite_with, Suite, SuiteRegistry};
pub use witness::{partial_sum_operator_lower, sharpness_witness, Witness, WitnessKind};

/// Environment variable that overrides the numeric tolerances of suite runs.
pub const TOLERANCE_ENV: &str = "HD_TOL";

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Equalities and inequalities between exactly computable quantities.
    pub exact: f64,
    /// Coefficientwise reconstruction of factorizations.
    pub factorization: f64,
    /// Quadrature against the coefficient formulas (relative).
    pub oracle: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            exact: 1e-9,
            factorization: 1e-10,
            oracle: 1e-2,
        }
    }
}

impl Tolerances {
    pub fn uniform(tol: f64) -> Self {
        Self {
            exact: tol,
            factorization: tol,
            oracle: tol,
        }
    }

    /// Defaults, replaced wholesale by `HD_TOL` when it parses as a positive
    /// number.
    pub fn from_env() -> Self {
        std::env::var(TOLERANCE_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|t| *t > 0.0)
            .map(Self::uniform)
            .unwrap_or_default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `observed ≤ limit + tol`
    Le,
    /// `observed ≥ limit − tol`
    Ge,
    /// `|observed − limit| ≤ tol`
    Eq,
    /// `observed < limit`
    Lt,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub criterion: Option<u32>,
    pub label: String,
    pub observed: f64,
    pub relation: Relation,
    pub limit: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub table: String,
    pub label: String,
    pub columns: Vec<String>,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub name: String,
    pub parameters: BTreeMap<String, Value>,
    pub rows: Vec<Row>,
    pub checks: Vec<Check>,
}

impl ExperimentReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            parameters: BTreeMap::new(),
            rows: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.parameters
            .insert(key.to_string(), serde_json::to_value(value).unwrap_or(Value::Null));
        self
    }

    pub fn row(&mut self, table: &str, label: impl Into<String>, cols: &[(&str, f64)]) {
        self.rows.push(Row {
            table: table.to_string(),
            label: label.into(),
            columns: cols.iter().map(|(c, _)| c.to_string()).collect(),
            values: cols.iter().map(|(_, v)| *v).collect(),
        });
    }

    pub fn check(
        &mut self,
        criterion: Option<u32>,
        label: impl Into<String>,
        observed: f64,
        relation: Relation,
        limit: f64,
        tolerance: f64,
    ) -> bool {
        let passed = match relation {
            Relation::Le => observed <= limit + tolerance,
            Relation::Ge => observed >= limit - tolerance,
            Relation::Eq => (observed - limit).abs() <= tolerance,
            Relation::Lt => observed < limit,
        };
        self.checks.push(Check {
            criterion,
            label: label.into(),
            observed,
            relation,
            limit,
            tolerance,
            passed,
        });
        passed
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Pass/fail per criterion id, in ascending order.
    pub fn criteria(&self) -> BTreeMap<u32, bool> {
        let mut out = BTreeMap::new();
        for c in &self.checks {
            if let Some(id) = c.criterion {
                *out.entry(id).or_insert(true) &= c.passed;
            }
        }
        out
    }

    /// Assigns `criterion` to every check that has none yet.
    pub fn tag(mut self, criterion: u32) -> Self {
        for c in self.checks.iter_mut().filter(|c| c.criterion.is_none()) {
            c.criterion = Some(criterion);
        }
        self
    }

    pub fn merge(&mut self, other: ExperimentReport) {
        self.rows.extend(other.rows);
        self.checks.extend(other.checks);
    }

    /// One JSON object per line: a header, then rows, then checks.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        let header = json!({
            "kind": "report",
            "name": self.name,
            "parameters": self.parameters,
            "passed": self.passed(),
            "rows": self.rows.len(),
            "checks": self.checks.len(),
        });
        let _ = writeln!(out, "{header}");
        for row in &self.rows {
            let mut v = serde_json::to_value(row).unwrap_or(Value::Null);
            v["kind"] = json!("row");
            let _ = writeln!(out, "{v}");
        }
        for check in &self.checks {
            let mut v = serde_json::to_value(check).unwrap_or(Value::Null);
            v["kind"] = json!("check");
            let _ = writeln!(out, "{v}");
        }
        out
    }

    /// Long-format CSV of the rows: `table,label,column,value`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("table,label,column,value\n");
        for row in &self.rows {
            for (c, v) in row.columns.iter().zip(&row.values) {
                let _ = writeln!(out, "{},{},{},{}", row.table, row.label, c, v);
            }
        }
        out
    }
}
