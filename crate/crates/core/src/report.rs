//! Pass/fail reports produced by the verification suites.

use std::fmt;

use serde::Serialize;

/// A named family of checks, e.g. every instance of one defining relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub instances: usize,
    pub failed: usize,
    /// Up to [`MAX_FAILURES`] failing instances. Relation failures carry an
    /// expression that should normalize to zero.
    pub failures: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

/// Failures kept per check; the instance count is always exact.
pub const MAX_FAILURES: usize = 20;

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    fn check_mut(&mut self, name: &str) -> &mut Check {
        if let Some(pos) = self.checks.iter().position(|c| c.name == name) {
            return &mut self.checks[pos];
        }
        self.checks.push(Check {
            name: name.to_string(),
            instances: 0,
            failed: 0,
            failures: Vec::new(),
        });
        self.checks.last_mut().unwrap()
    }

    /// Records one instance; `detail` is only evaluated on failure.
    pub fn record(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        let check = self.check_mut(name);
        check.instances += 1;
        if !ok {
            check.failed += 1;
            if check.failures.len() < MAX_FAILURES {
                check.failures.push(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn instances(&self) -> usize {
        self.checks.iter().map(|c| c.instances).sum()
    }

    /// Appends the checks of `other`, prefixing their names with its title.
    pub fn absorb(&mut self, other: Report) {
        for mut c in other.checks {
            c.name = format!("{}: {}", other.title, c.name);
            self.checks.push(c);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "  {tag} {} ({} instances)", c.name, c.instances)?;
            for fail in &c.failures {
                writeln!(f, "       {fail}")?;
            }
            if c.failed > c.failures.len() {
                writeln!(f, "       ... {} more", c.failed - c.failures.len())?;
            }
        }
        let verdict = if self.passed() { "all checks passed" } else { "FAILED" };
        write!(f, "  {verdict}: {} checks, {} instances", self.checks.len(), self.instances())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_and_renders() {
        let mut r = Report::new("demo");
        r.record("a", true, || unreachable!());
        r.record("a", false, || "u1*u1".into());
        r.record("b", true, String::new);
        assert!(!r.passed());
        assert_eq!(r.instances(), 3);
        let text = r.to_string();
        assert!(text.contains("FAIL a (2 instances)"));
        assert!(text.contains("u1*u1"));
        assert!(text.contains("PASS b"));
    }

    #[test]
    fn failure_list_is_bounded() {
        let mut r = Report::new("demo");
        for i in 0..50 {
            r.record("a", false, || format!("f{i}"));
        }
        assert_eq!(r.checks[0].instances, 50);
        assert_eq!(r.checks[0].failed, 50);
        assert_eq!(r.checks[0].failures.len(), MAX_FAILURES);
        assert!(r.to_string().contains("30 more"));
    }
}
