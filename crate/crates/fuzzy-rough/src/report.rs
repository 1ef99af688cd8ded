//! Validation reports: named law checks with counterexample witnesses.
//!
//! Violations are data, not errors. A report lists every check that was run;
//! a failed check carries a concrete witness, a skipped check the reason it
//! did not apply.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail { witness: String },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub name: String,
    #[serde(flatten)]
    pub status: CheckStatus,
}

impl PropertyCheck {
    pub fn pass(name: impl Into<String>) -> Self {
        PropertyCheck {
            name: name.into(),
            status: CheckStatus::Pass,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        PropertyCheck {
            name: name.into(),
            status: CheckStatus::Fail {
                witness: witness.into(),
            },
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        PropertyCheck {
            name: name.into(),
            status: CheckStatus::Skipped {
                reason: reason.into(),
            },
        }
    }

    pub fn of(name: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(name),
            Some(w) => Self::fail(name, w),
        }
    }

    pub fn holds(&self) -> bool {
        !matches!(self.status, CheckStatus::Fail { .. })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<PropertyCheck>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: PropertyCheck) {
        self.checks.push(check);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// True when no check failed (skipped checks do not count against).
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(PropertyCheck::holds)
    }

    pub fn find(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// True when the named check ran and passed.
    pub fn holds(&self, name: &str) -> bool {
        matches!(self.find(name).map(|c| &c.status), Some(CheckStatus::Pass))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            match &check.status {
                CheckStatus::Pass => writeln!(f, "pass  {}", check.name)?,
                CheckStatus::Fail { witness } => writeln!(f, "FAIL  {} ({witness})", check.name)?,
                CheckStatus::Skipped { reason } => writeln!(f, "skip  {} ({reason})", check.name)?,
            }
        }
        for note in &self.notes {
            writeln!(f, "note  {note}")?;
        }
        Ok(())
    }
}
