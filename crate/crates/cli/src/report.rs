//! The report every command produces, rendered as text or JSON.

use std::collections::BTreeMap;
use std::fmt::{Display, Write as _};

use serde::Serialize;
use serde_json::Value;
use whk_core::{Matrix, Report, Scalar};

use crate::format::{format_scalar, matrix_strings};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub indices: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Item {
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Item {
    pub fn new(check: impl Into<String>, passed: bool) -> Self {
        Item {
            check: check.into(),
            passed,
            counterexample: None,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CliReport {
    pub command: String,
    pub verdict: Verdict,
    pub items: Vec<Item>,
    pub facts: BTreeMap<String, Value>,
    pub warnings: Vec<String>,
}

impl CliReport {
    pub fn new(command: &str) -> Self {
        CliReport {
            command: command.to_string(),
            verdict: Verdict::Pass,
            items: Vec::new(),
            facts: BTreeMap::new(),
            warnings: Vec::new(),
        }
    }

    pub fn push(&mut self, item: Item) {
        if !item.passed {
            self.verdict = Verdict::Fail;
        }
        self.items.push(item);
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.push(Item::new(name, passed));
    }

    /// One item per declared check of a core report, carrying the first
    /// counterexample of each failed check.
    pub fn absorb<F: Clone + PartialEq + Display>(&mut self, report: &Report<F>) {
        for &check in report.checks() {
            let mut item = Item::new(check, report.passed(check));
            if let Some(v) = report.first_violation(check) {
                item.counterexample = Some(Counterexample {
                    indices: v.indices.clone(),
                    lhs: v.lhs.iter().map(|x| x.to_string()).collect(),
                    rhs: v.rhs.iter().map(|x| x.to_string()).collect(),
                });
            }
            self.push(item);
        }
    }

    pub fn fact(&mut self, name: &str, value: impl Into<Value>) {
        self.facts.insert(name.to_string(), value.into());
    }

    pub fn matrix_fact(&mut self, name: &str, m: &Matrix<Scalar>) {
        self.fact(name, matrix_value(m));
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn item(&self, check: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        writeln!(out, "whk {}: {verdict}", self.command).unwrap();
        for item in &self.items {
            let mark = if item.passed { "ok  " } else { "FAIL" };
            write!(out, "  [{mark}] {}", item.check).unwrap();
            if let Some(c) = &item.counterexample {
                write!(
                    out,
                    " at {:?}: lhs [{}] != rhs [{}]",
                    c.indices,
                    c.lhs.join(", "),
                    c.rhs.join(", ")
                )
                .unwrap();
            }
            if let Some(d) = &item.detail {
                write!(out, " ({d})").unwrap();
            }
            out.push('\n');
        }
        for (name, value) in &self.facts {
            let v = render_value(value);
            let sep = if v.starts_with('\n') { "" } else { " " };
            writeln!(out, "  {name}:{sep}{v}").unwrap();
        }
        for w in &self.warnings {
            writeln!(out, "warning: {w}").unwrap();
        }
        out
    }
}

pub fn matrix_value(m: &Matrix<Scalar>) -> Value {
    serde_json::to_value(matrix_strings(m)).expect("strings serialize")
}

pub fn scalars_value(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_scalar(x))).collect())
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(rows) if rows.iter().all(Value::is_array) && !rows.is_empty() => {
            let mut s = String::new();
            for r in rows {
                s.push_str("\n    ");
                s.push_str(&render_value(r));
            }
            s
        }
        Value::Array(xs) => xs.iter().map(render_value).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
