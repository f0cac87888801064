//! Validation reports.
//!
//! A [`Report`] records the named checks that were evaluated and every
//! violation found, each with the basis-index tuple it was found at and the
//! two sides of the identity that disagreed.

#[derive(Debug, Clone, PartialEq)]
pub struct Violation<F> {
    pub check: &'static str,
    pub indices: Vec<usize>,
    pub lhs: Vec<F>,
    pub rhs: Vec<F>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report<F> {
    checks: Vec<&'static str>,
    violations: Vec<Violation<F>>,
}

impl<F> Default for Report<F> {
    fn default() -> Self {
        Report {
            checks: Vec::new(),
            violations: Vec::new(),
        }
    }
}

impl<F: Clone + PartialEq> Report<F> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a check name. Registering twice is a no-op.
    pub fn declare(&mut self, check: &'static str) {
        if !self.checks.contains(&check) {
            self.checks.push(check);
        }
    }

    pub fn fail(&mut self, check: &'static str, indices: Vec<usize>, lhs: Vec<F>, rhs: Vec<F>) {
        self.declare(check);
        self.violations.push(Violation {
            check,
            indices,
            lhs,
            rhs,
        });
    }

    /// Records a violation iff `lhs != rhs`.
    pub fn compare(&mut self, check: &'static str, indices: &[usize], lhs: Vec<F>, rhs: Vec<F>) {
        self.declare(check);
        if lhs != rhs {
            self.fail(check, indices.to_vec(), lhs, rhs);
        }
    }

    /// Records a violation without evaluated sides iff `holds` is false.
    pub fn require(&mut self, check: &'static str, indices: &[usize], holds: bool) {
        self.declare(check);
        if !holds {
            self.fail(check, indices.to_vec(), Vec::new(), Vec::new());
        }
    }

    pub fn merge(&mut self, other: Report<F>) {
        for c in other.checks {
            self.declare(c);
        }
        self.violations.extend(other.violations);
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn checks(&self) -> &[&'static str] {
        &self.checks
    }

    pub fn violations(&self) -> &[Violation<F>] {
        &self.violations
    }

    pub fn passed(&self, check: &str) -> bool {
        !self.violations.iter().any(|v| v.check == check)
    }

    /// Names of the checks with at least one violation, in declaration order.
    pub fn failed_checks(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .copied()
            .filter(|c| !self.passed(c))
            .collect()
    }

    pub fn first_violation(&self, check: &str) -> Option<&Violation<F>> {
        self.violations.iter().find(|v| v.check == check)
    }
}
