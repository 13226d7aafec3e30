//! Named pass/fail bookkeeping shared by the verification suites.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    /// The first failing instance, if any.
    pub witness: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Outcomes keyed by check name, in first-recorded order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport::default()
    }

    fn entry(&mut self, name: &str) -> &mut CheckOutcome {
        let pos = match self.outcomes.iter().position(|o| o.name == name) {
            Some(pos) => pos,
            None => {
                self.outcomes.push(CheckOutcome { name: name.to_string(), cases: 0, failures: 0, witness: None });
                self.outcomes.len() - 1
            }
        };
        &mut self.outcomes[pos]
    }

    /// Records one instance of `name`; `witness` is only built on failure.
    pub fn record(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        let e = self.entry(name);
        e.cases += 1;
        if !ok {
            e.failures += 1;
            if e.witness.is_none() {
                e.witness = Some(witness());
            }
        }
    }

    /// Records `lhs == rhs`, showing both sides on failure.
    pub fn record_eq<T: PartialEq + fmt::Display>(
        &mut self,
        name: &str,
        lhs: &T,
        rhs: &T,
        context: impl FnOnce() -> String,
    ) {
        let ok = lhs == rhs;
        self.record(name, ok, || format!("{}: {} != {}", context(), lhs, rhs));
    }

    pub fn merge(&mut self, other: CheckReport) {
        for o in other.outcomes {
            let e = self.entry(&o.name);
            e.cases += o.cases;
            e.failures += o.failures;
            if e.witness.is_none() {
                e.witness = o.witness;
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| !o.passed())
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }

    /// Whether every recorded check among `names` passed (absent ones count as passed).
    pub fn all_passed(&self, names: &[&str]) -> bool {
        names.iter().all(|n| self.get(n).is_none_or(CheckOutcome::passed))
    }

    /// Keeps only checks whose name contains `needle` (case-insensitive).
    pub fn filtered(&self, needle: &str) -> CheckReport {
        let needle = needle.to_lowercase();
        CheckReport {
            outcomes: self.outcomes.iter().filter(|o| o.name.to_lowercase().contains(&needle)).cloned().collect(),
        }
    }

    /// The verdict as a `Result`, naming the first failing check.
    pub fn into_result(self) -> crate::Result<CheckReport> {
        match self.first_failure() {
            Some(f) => {
                Err(crate::Error::CheckFailed { check: f.name.clone(), detail: f.witness.clone().unwrap_or_default() })
            }
            None => Ok(self),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let verdict = if o.passed() { "PASS" } else { "FAIL" };
            write!(f, "{verdict} {:<28} {} cases", o.name, o.cases)?;
            if let Some(w) = &o.witness {
                write!(f, "  [{} failures; first: {w}]", o.failures)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_and_merges() {
        let mut a = CheckReport::new();
        a.record("x", true, || unreachable!());
        a.record("x", false, || "first".into());
        a.record("x", false, || "second".into());
        a.record("y", true, String::new);
        let mut b = CheckReport::new();
        b.record("y", false, || "late".into());
        a.merge(b);
        assert_eq!(a.get("x").unwrap().failures, 2);
        assert_eq!(a.get("x").unwrap().witness.as_deref(), Some("first"));
        assert_eq!(a.get("y").unwrap().cases, 2);
        assert!(!a.passed());
        assert_eq!(a.first_failure().unwrap().name, "x");
        assert_eq!(a.filtered("Y").outcomes.len(), 1);
        assert!(matches!(a.into_result(), Err(crate::Error::CheckFailed { check, .. }) if check == "x"));
    }
}
