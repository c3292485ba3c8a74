//! Validation reports: every failed identity with the basis indices that
//! witness it and both sides of the equation.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::rational::{format_rational, Rational, Vector};

/// One basis index taking part in a failed identity, e.g. `("x", 1)`.
/// Indices are 0-based internally and printed 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub tag: String,
    pub witness: Vec<Witness>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Free-form header lines (assumptions in force, mode selections).
    pub notes: Vec<String>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn note(&mut self, line: impl Into<String>) {
        let line = line.into();
        if !self.notes.contains(&line) {
            self.notes.push(line);
        }
    }

    pub fn push(&mut self, tag: &str, witness: &[(&str, usize)], lhs: Vector, rhs: Vector) {
        self.violations.push(Violation {
            tag: tag.to_string(),
            witness: witness
                .iter()
                .map(|(l, i)| Witness {
                    label: (*l).to_string(),
                    index: *i,
                })
                .collect(),
            lhs,
            rhs,
        });
    }

    /// Records a violation when `lhs != rhs`.
    pub fn check(&mut self, tag: &str, witness: &[(&str, usize)], lhs: Vector, rhs: Vector) {
        if lhs != rhs {
            self.push(tag, witness, lhs, rhs);
        }
    }

    /// Records a violation for a failed condition with no vector payload.
    pub fn fail(&mut self, tag: &str, witness: &[(&str, usize)]) {
        self.push(tag, witness, Vec::new(), Vec::new());
    }

    pub fn merge(&mut self, other: ValidationReport) {
        for n in other.notes {
            self.note(n);
        }
        self.violations.extend(other.violations);
    }

    /// Merges `other`, prefixing each of its tags with `prefix/`.
    pub fn merge_prefixed(&mut self, prefix: &str, other: ValidationReport) {
        for n in other.notes {
            self.note(n);
        }
        self.violations
            .extend(other.violations.into_iter().map(|mut v| {
                v.tag = format!("{prefix}/{}", v.tag);
                v
            }));
    }

    pub fn tags(&self) -> BTreeSet<String> {
        self.violations.iter().map(|v| v.tag.clone()).collect()
    }

    /// True when some violation carries `tag`, either bare or as the last
    /// component of a prefixed tag.
    pub fn has(&self, tag: &str) -> bool {
        self.violations
            .iter()
            .any(|v| v.tag == tag || v.tag.rsplit('/').next() == Some(tag))
    }

    pub fn first(&self, tag: &str) -> Option<&Violation> {
        self.violations
            .iter()
            .find(|v| v.tag == tag || v.tag.rsplit('/').next() == Some(tag))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "valid": self.is_valid(),
            "notes": self.notes,
            "violations": self.violations.iter().map(|v| serde_json::json!({
                "tag": v.tag,
                "witness": v.witness.iter().map(|w| serde_json::json!({
                    "label": w.label,
                    "index": w.index + 1,
                })).collect::<Vec<_>>(),
                "lhs": v.lhs.iter().map(format_rational).collect::<Vec<_>>(),
                "rhs": v.rhs.iter().map(format_rational).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in &self.notes {
            writeln!(f, "# {n}")?;
        }
        if self.violations.is_empty() {
            return writeln!(f, "valid");
        }
        writeln!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            let w: Vec<String> = v
                .witness
                .iter()
                .map(|w| format!("{}={}", w.label, w.index + 1))
                .collect();
            write!(f, "  [{}] at ({})", v.tag, w.join(", "))?;
            if v.lhs.is_empty() && v.rhs.is_empty() {
                writeln!(f)?;
            } else {
                writeln!(f, ": lhs={} rhs={}", fmt_vec(&v.lhs), fmt_vec(&v.rhs))?;
            }
        }
        Ok(())
    }
}
