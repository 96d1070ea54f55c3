use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// First point where the two sides of an identity disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Sequence index (`n`, `N`, ...) of the failing instance, if any.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub index: Option<i64>,
    /// Scaled exponent of the first differing coefficient.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exponent: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub scale: Option<u32>,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl Witness {
    pub fn values(expected: impl ToString, actual: impl ToString) -> Self {
        Witness {
            index: None,
            exponent: None,
            scale: None,
            expected: expected.to_string(),
            actual: actual.to_string(),
            note: None,
        }
    }

    pub fn at_index(mut self, index: i64) -> Self {
        self.index = Some(index);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(i) = self.index {
            write!(f, "index {i}: ")?;
        }
        if let Some(e) = self.exponent {
            write!(f, "{}: ", crate::algebra::QSeries::exponent_label(e, self.scale.unwrap_or(1)))?;
        }
        write!(f, "expected {}, got {}", self.expected, self.actual)?;
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    /// Common value of both sides, when it is short enough to be useful.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<String>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn new(check_id: impl Into<String>) -> Self {
        CheckReport {
            check_id: check_id.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            witness: None,
            value: None,
            elapsed_ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Records the outcome; a witness means failure.
    pub fn finish(mut self, witness: Option<Witness>, started: Instant) -> Self {
        self.status = if witness.is_some() { Status::Fail } else { Status::Pass };
        self.witness = witness;
        self.elapsed_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn with_value(mut self, value: impl ToString) -> Self {
        self.value = Some(value.to_string());
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{status} {} [{}] {}ms", self.check_id, params.join(", "), self.elapsed_ms)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}
