use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

/// Outcome of one verification check, serialized as
/// `{check, range, status, counterexamples, notes}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub range: String,
    pub status: Status,
    pub counterexamples: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    /// Pass when `counterexamples` is empty, fail otherwise.
    pub fn from_failures(
        check: impl Into<String>,
        range: impl Into<String>,
        counterexamples: Vec<String>,
    ) -> Self {
        let status = if counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        CheckReport {
            check: check.into(),
            range: range.into(),
            status,
            counterexamples,
            notes: Vec::new(),
        }
    }

    /// Like [`from_failures`](Self::from_failures) but findings only warn.
    pub fn advisory(
        check: impl Into<String>,
        range: impl Into<String>,
        findings: Vec<String>,
    ) -> Self {
        let mut r = Self::from_failures(check, range, findings);
        if r.status == Status::Fail {
            r.status = Status::Warn;
        }
        r
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn is_warn(&self) -> bool {
        self.status == Status::Warn
    }
}
