use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Outcome of one family of checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of instances evaluated (0 when the family was vacuous).
    pub instances: usize,
    /// The first failing instance, rendered for humans.
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, instances: usize) -> Self {
        Check {
            name: name.into(),
            passed: true,
            instances,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, instances: usize, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            instances,
            witness: Some(witness.into()),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.witness, self.passed) {
            (_, true) => write!(f, "{}: PASS ({} instances)", self.name, self.instances),
            (Some(w), false) => write!(f, "{}: FAIL at {}", self.name, w),
            (None, false) => write!(f, "{}: FAIL", self.name),
        }
    }
}

/// An ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn pass_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{}", c)?;
        }
        Ok(())
    }
}
