//! Named pass/fail checks and the reports that collect them.

use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed_ms: u64,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
            elapsed_ms: 0,
        }
    }

    /// Passes iff `failures` is empty; the detail shows the first few failures.
    pub fn from_failures(name: impl Into<String>, checked: usize, failures: Vec<String>) -> Self {
        let detail = if failures.is_empty() {
            format!("{checked} cases ok")
        } else {
            let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
            let more = if failures.len() > 3 { "; ..." } else { "" };
            format!(
                "{} of {checked} cases failed: {}{more}",
                failures.len(),
                shown.join("; ")
            )
        };
        Check::new(name, failures.is_empty(), detail)
    }

    /// Runs `f` and records its wall-clock time on the resulting check.
    pub fn timed(f: impl FnOnce() -> Check) -> Check {
        let start = Instant::now();
        let mut c = f();
        c.elapsed_ms = start.elapsed().as_millis() as u64;
        c
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    /// Checks are kept sorted by name so output order never depends on scheduling.
    pub fn new(suite: impl Into<String>, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        VerificationReport {
            suite: suite.into(),
            checks,
        }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.checks.extend(other.checks);
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_status() {
        assert!(VerificationReport::new("empty", vec![]).pass());
        let r = VerificationReport::new(
            "x",
            vec![Check::new("b", true, ""), Check::new("a", false, "boom")],
        );
        assert!(!r.pass());
        assert_eq!(r.checks[0].name, "a");
        let c = Check::from_failures(
            "f",
            10,
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
        );
        assert_eq!(c.detail, "4 of 10 cases failed: 1; 2; 3; ...");
    }
}
