//! Verdicts, witnesses and check reports shared by every verifier.

use std::fmt::Write as _;

use serde::Serialize;

use crate::scalar::{to_wire_vec, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// First counterexample of a failing check: the basis indices it was found
/// at and the coordinates of both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub at: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), verdict: Verdict::Pass, cases: 0, failures: 0, witness: None, note: None }
    }

    pub fn skipped(name: impl Into<String>, why: impl Into<String>) -> Self {
        Check { verdict: Verdict::Skipped, note: Some(why.into()), ..Check::new(name) }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    /// Records one case comparing two coordinate vectors. Returns whether
    /// they agree.
    pub fn case(&mut self, at: &[usize], lhs: &[Scalar], rhs: &[Scalar]) -> bool {
        self.cases += 1;
        let ok = lhs == rhs;
        if !ok {
            self.record_failure(at, to_wire_vec(lhs), to_wire_vec(rhs));
        }
        ok
    }

    pub fn case_scalar(&mut self, at: &[usize], lhs: &Scalar, rhs: &Scalar) -> bool {
        self.case(at, std::slice::from_ref(lhs), std::slice::from_ref(rhs))
    }

    /// Records a yes/no case; failures carry only the location.
    pub fn case_bool(&mut self, at: &[usize], ok: bool) -> bool {
        self.cases += 1;
        if !ok {
            self.record_failure(at, Vec::new(), Vec::new());
        }
        ok
    }

    pub fn fail(&mut self, at: &[usize], lhs: Vec<String>, rhs: Vec<String>) {
        self.cases += 1;
        self.record_failure(at, lhs, rhs);
    }

    fn record_failure(&mut self, at: &[usize], lhs: Vec<String>, rhs: Vec<String>) {
        self.verdict = Verdict::Fail;
        self.failures += 1;
        if self.witness.is_none() {
            self.witness = Some(Witness { at: at.to_vec(), lhs, rhs });
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub fn new(subject: impl Into<String>) -> Self {
        AxiomReport { subject: subject.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    /// Appends the checks of `other`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: AxiomReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.subject);
        for c in &self.checks {
            let tag = match c.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Skipped => "SKIP",
            };
            let _ = write!(s, "  {tag} {} ({} cases)", c.name, c.cases);
            if let Some(w) = &c.witness {
                let _ = write!(s, " at {:?}: [{}] vs [{}]", w.at, w.lhs.join(", "), w.rhs.join(", "));
            }
            if let Some(n) = &c.note {
                let _ = write!(s, " -- {n}");
            }
            s.push('\n');
        }
        s
    }
}

/// Folds several readings of one identity into a single check that passes
/// when at least one reading holds; the note lists every reading's outcome.
pub fn readings(name: &str, readings: Vec<(&str, Check)>) -> Check {
    let holding: Vec<&str> = readings.iter().filter(|(_, c)| c.passed()).map(|(r, _)| *r).collect();
    let mut out = Check::new(name);
    out.cases = readings.iter().map(|(_, c)| c.cases).max().unwrap_or(0);
    let mut note = String::new();
    for (r, c) in &readings {
        if !note.is_empty() {
            note.push_str("; ");
        }
        if c.passed() {
            note.push_str(&format!("{r} reading holds"));
        } else {
            let w = c.witness.as_ref().expect("failing check has a witness");
            note.push_str(&format!("{r} reading fails ({}/{} cases, first at {:?})", c.failures, c.cases, w.at));
        }
    }
    if holding.is_empty() {
        let (_, c) = &readings[0];
        let w = c.witness.clone().expect("witness");
        out.fail(&w.at, w.lhs, w.rhs);
        out.cases -= 1;
    }
    out.with_note(note)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn first_failure_is_kept() {
        let mut c = Check::new("law");
        assert!(c.case(&[0], &[int(1)], &[int(1)]));
        assert!(!c.case(&[1, 2], &[int(1)], &[int(2)]));
        assert!(!c.case(&[3], &[int(0)], &[int(5)]));
        assert_eq!(c.verdict, Verdict::Fail);
        assert_eq!(c.failures, 2);
        assert_eq!(c.witness.as_ref().unwrap().at, vec![1, 2]);
        assert_eq!(c.witness.as_ref().unwrap().rhs, vec!["2".to_string()]);
    }

    #[test]
    fn skipped_does_not_fail_report() {
        let mut r = AxiomReport::new("x");
        r.push(Check::skipped("later", "not applicable"));
        assert!(r.passed());
    }
}
