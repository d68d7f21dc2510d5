use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Comparison tolerance for `lhs >= rhs`.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Inputs needed by the inequality are missing or vanish.
    NotApplicable,
    /// The lower bound is known but there is no measured value to compare
    /// it with.
    RhsOnly,
}

/// One inequality `lhs >= rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub id: String,
    pub anchor: String,
    /// Human-readable form of the inequality.
    pub relation: String,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    /// `lhs - rhs`, rounded to 6 significant digits.
    pub margin: Option<f64>,
    pub status: Status,
    pub inputs: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Rounds to 6 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let digits = 5 - x.abs().log10().floor() as i32;
    let scale = 10f64.powi(digits);
    (x * scale).round() / scale
}

impl BoundEntry {
    pub(crate) fn new(id: &str, anchor: &str, relation: &str) -> BoundEntry {
        BoundEntry {
            id: id.to_string(),
            anchor: anchor.to_string(),
            relation: relation.to_string(),
            lhs: None,
            rhs: None,
            margin: None,
            status: Status::NotApplicable,
            inputs: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn input(mut self, name: &str, value: f64) -> BoundEntry {
        self.inputs.insert(name.to_string(), value);
        self
    }

    pub(crate) fn note(mut self, note: impl Into<String>) -> BoundEntry {
        self.notes.push(note.into());
        self
    }

    /// Evaluates the entry. `floor` is a value any admissible `lhs`
    /// reaches anyway; a right side at or below it is flagged as weak.
    pub(crate) fn compare(mut self, lhs: Option<f64>, rhs: f64, floor: f64) -> BoundEntry {
        self.rhs = Some(rhs);
        if rhs <= floor {
            self.notes.push("weak".into());
        }
        match lhs {
            Some(l) => {
                let margin = l - rhs;
                self.lhs = Some(l);
                self.margin = Some(round_sig(margin));
                self.status = if margin >= -TOLERANCE { Status::Pass } else { Status::Fail };
            }
            None => self.status = Status::RhsOnly,
        }
        self
    }

    pub(crate) fn not_applicable(mut self, why: &str) -> BoundEntry {
        self.status = Status::NotApplicable;
        self.notes.push(why.to_string());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn failures(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn all_pass(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn get(&self, id: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub(crate) fn applicable(&self) -> bool {
        self.entries.iter().any(|e| e.status != Status::NotApplicable)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round_sig(12.3456789), 12.3457);
        assert_eq!(round_sig(-0.000123456789), -0.000123457);
        assert_eq!(round_sig(0.0), 0.0);
    }

    #[test]
    fn status_from_margin() {
        let e = BoundEntry::new("x", "a", "l >= r").compare(Some(1.0), 1.0 + 1e-12, 0.0);
        assert_eq!(e.status, Status::Pass);
        let e = BoundEntry::new("x", "a", "l >= r").compare(Some(1.0), 1.1, 0.0);
        assert_eq!(e.status, Status::Fail);
        let e = BoundEntry::new("x", "a", "l >= r").compare(None, -1.0, 0.0);
        assert_eq!(e.status, Status::RhsOnly);
        assert_eq!(e.notes, vec!["weak".to_string()]);
    }
}
