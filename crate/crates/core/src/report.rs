use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// One checked claim: which result, on which instance, what was expected and what was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub anchor: String,
    pub instance: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(
        anchor: impl Into<String>,
        instance: impl Into<String>,
        expected: impl fmt::Display,
        got: impl fmt::Display,
        pass: bool,
    ) -> Self {
        CheckRecord {
            anchor: anchor.into(),
            instance: instance.into(),
            expected: expected.to_string(),
            got: got.to_string(),
            pass,
        }
    }

    /// Record comparing two displayable values for equality.
    pub fn eq<T: PartialEq + fmt::Display>(
        anchor: impl Into<String>,
        instance: impl Into<String>,
        expected: T,
        got: T,
    ) -> Self {
        let pass = expected == got;
        Self::new(anchor, instance, expected, got, pass)
    }
}

pub fn all_pass(records: &[CheckRecord]) -> bool {
    records.iter().all(|r| r.pass)
}

pub fn failures(records: &[CheckRecord]) -> Vec<&CheckRecord> {
    records.iter().filter(|r| !r.pass).collect()
}
