//! Reports printed by the commands. Text and JSON carry the same fields.

use std::fmt::Write as _;

use domgame_core::cgt::describe;
use domgame_core::closed_forms::ClosedFormResult;
use domgame_core::verify::SuiteReport;
use domgame_core::Kernel;
use serde::Serialize;

#[derive(Serialize, Debug)]
pub struct ValueReport {
    pub input: String,
    pub value: String,
    pub named: String,
    pub outcome: String,
    pub winner_first_alice: String,
    pub winner_first_bob: String,
    /// Absent for edge-list inputs and predominated positions.
    pub closed_form: Option<ClosedFormReport>,
    /// Whether the exhaustive search ran.
    pub oracle_checked: bool,
    /// Closed form equals search result; absent unless both ran.
    pub agree: Option<bool>,
}

#[derive(Serialize, Debug)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ClosedFormReport {
    Value { value: String, named: String },
    NotCovered { code: String, reason: String },
}

impl ClosedFormReport {
    pub fn new(kernel: &mut Kernel, result: &ClosedFormResult) -> Self {
        match result {
            ClosedFormResult::Value(g, named) => {
                ClosedFormReport::Value { value: kernel.display(*g), named: describe(kernel, *named) }
            }
            ClosedFormResult::NotCovered { code, reason } => {
                ClosedFormReport::NotCovered { code: code.to_string(), reason: reason.clone() }
            }
        }
    }
}

impl ValueReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.value);
        let _ = writeln!(out, "input: {}", self.input);
        let _ = writeln!(out, "named: {}", self.named);
        let _ = writeln!(out, "outcome: {}", self.outcome);
        let _ = writeln!(out, "winner, Alice first: {}", self.winner_first_alice);
        let _ = writeln!(out, "winner, Bob first: {}", self.winner_first_bob);
        match &self.closed_form {
            Some(ClosedFormReport::Value { value, named }) => {
                let _ = writeln!(out, "closed form: {value} ({named})");
            }
            Some(ClosedFormReport::NotCovered { code, reason }) => {
                let _ = writeln!(out, "closed form: not covered, {code}: {reason}");
            }
            None => {
                let _ = writeln!(out, "closed form: not applicable");
            }
        }
        let oracle = match (self.oracle_checked, self.agree) {
            (false, _) => "not run (graph exceeds --max-vertices)",
            (true, Some(true)) => "checked, agrees with closed form",
            (true, Some(false)) => "checked, DISAGREES with closed form",
            (true, None) => "checked",
        };
        let _ = write!(out, "search: {oracle}");
        out
    }
}

#[derive(Serialize, Debug)]
pub struct ComponentReport {
    pub input: String,
    pub value: String,
    pub named: String,
}

#[derive(Serialize, Debug)]
pub struct SumReport {
    pub components: Vec<ComponentReport>,
    pub value: String,
    pub named: String,
    pub outcome: String,
}

impl SumReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.components {
            let _ = writeln!(out, "{}: {}", c.input, c.value);
        }
        let _ = writeln!(out, "sum: {} ({})", self.value, self.named);
        let _ = write!(out, "outcome: {}", self.outcome);
        out
    }
}

#[derive(Serialize, Debug)]
pub struct VerifyReport {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub not_covered: usize,
    pub failures: Vec<String>,
    pub elapsed_ms: u128,
}

impl From<&SuiteReport> for VerifyReport {
    fn from(r: &SuiteReport) -> Self {
        VerifyReport {
            suite: r.suite.name().to_string(),
            passed: r.passed,
            failed: r.failed,
            not_covered: r.not_covered,
            failures: r.failures.clone(),
            elapsed_ms: r.elapsed.as_millis(),
        }
    }
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {}: {} passed, {} failed, {} not covered ({} ms)",
            if self.failed == 0 { "PASS" } else { "FAIL" },
            self.suite,
            self.passed,
            self.failed,
            self.not_covered,
            self.elapsed_ms
        );
        for f in self.failures.iter().take(10) {
            let _ = write!(out, "\n    {f}");
        }
        out
    }
}
