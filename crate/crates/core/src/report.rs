//! Verification reports: named checks with per-case residuals and a
//! pass/fail verdict against a tolerance.

/// One verified case: a human-readable description of the inputs and the
/// residual it produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub inputs: String,
    pub residual: f64,
}

/// Outcome of a named check over a batch of cases.
///
/// The verdict is `pass` exactly when `max_residual <= tolerance`; a case
/// that could not be evaluated (for example a non-convergent quadrature)
/// records an infinite residual, which forces a failure.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub name: String,
    pub cases: Vec<Case>,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl VerificationReport {
    /// Assembles a report from cases, deriving `max_residual` and `pass`.
    pub fn from_cases(name: impl Into<String>, cases: Vec<Case>, tolerance: f64) -> Self {
        let max_residual = cases.iter().fold(0.0_f64, |m, c| m.max(c.residual));
        VerificationReport {
            name: name.into(),
            cases,
            max_residual,
            tolerance,
            pass: max_residual <= tolerance,
        }
    }

    pub fn push(&mut self, inputs: impl Into<String>, residual: f64) {
        self.cases.push(Case {
            inputs: inputs.into(),
            residual,
        });
        self.max_residual = self.max_residual.max(residual);
        self.pass = self.max_residual <= self.tolerance;
    }

    pub fn new(name: impl Into<String>, tolerance: f64) -> Self {
        VerificationReport {
            name: name.into(),
            cases: Vec::new(),
            max_residual: 0.0,
            tolerance,
            pass: true,
        }
    }
}
