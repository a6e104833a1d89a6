//! Machine-readable check results.
//!
//! `computed` and `bound` are exact numbers written as `a/b` or, for values
//! in Q(√161), as `a + b*sqrt(161)`; both parse back with
//! [`QuadNum::from_str`](std::str::FromStr).

use std::cmp::Ordering;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::exactmath::{fmt_rational, IdentityReport, QuadNum, Rational};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub claim: String,
    pub computed: String,
    pub bound: String,
    pub pass: bool,
    pub runtime_ms: u64,
}

/// How `computed` must relate to `bound` for a check to pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
    Lt,
    Ge,
}

impl Relation {
    pub fn holds(self, ord: Ordering) -> bool {
        match self {
            Relation::Eq => ord == Ordering::Equal,
            Relation::Le => ord != Ordering::Greater,
            Relation::Lt => ord == Ordering::Less,
            Relation::Ge => ord != Ordering::Less,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Ge => ">=",
        }
    }
}

impl CheckResult {
    pub fn compare(id: &str, claim: &str, computed: &QuadNum, rel: Relation, bound: &QuadNum) -> Self {
        CheckResult {
            id: id.to_string(),
            claim: claim.to_string(),
            computed: computed.to_string(),
            bound: bound.to_string(),
            pass: rel.holds(computed.cmp(bound)),
            runtime_ms: 0,
        }
    }

    pub fn rational(id: &str, claim: &str, computed: &Rational, rel: Relation, bound: &Rational) -> Self {
        CheckResult {
            id: id.to_string(),
            claim: claim.to_string(),
            computed: fmt_rational(computed),
            bound: fmt_rational(bound),
            pass: rel.holds(computed.cmp(bound)),
            runtime_ms: 0,
        }
    }

    pub fn count(id: &str, claim: &str, computed: u64, rel: Relation, bound: u64) -> Self {
        CheckResult {
            id: id.to_string(),
            claim: claim.to_string(),
            computed: computed.to_string(),
            bound: bound.to_string(),
            pass: rel.holds(computed.cmp(&bound)),
            runtime_ms: 0,
        }
    }

    /// A check that failed before producing a value.
    pub fn error(id: &str, claim: &str, message: &str) -> Self {
        CheckResult {
            id: id.to_string(),
            claim: format!("{claim} (error: {message})"),
            computed: "0".into(),
            bound: "0".into(),
            pass: false,
            runtime_ms: 0,
        }
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.runtime_ms = start.elapsed().as_millis() as u64;
        self
    }

    /// One human-readable line.
    pub fn line(&self) -> String {
        format!(
            "{} {}: {} [computed {}, bound {}]",
            if self.pass { "pass" } else { "FAIL" },
            self.id,
            self.claim,
            self.computed,
            self.bound
        )
    }
}

/// Runs one check, timing it and turning an error into a failed result.
pub fn run(id: &str, claim: &str, f: impl FnOnce() -> crate::Result<CheckResult>) -> CheckResult {
    let start = Instant::now();
    match f() {
        Ok(c) => c.timed(start),
        Err(e) => CheckResult::error(id, claim, &e.to_string()).timed(start),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    pub checks: Vec<CheckResult>,
}

impl Section {
    pub fn new(name: &str) -> Self {
        Section {
            name: name.to_string(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// One pass/fail row per identity, `computed = 1` meaning it holds.
    pub fn extend_identities(&mut self, prefix: &str, identities: &IdentityReport) {
        for c in &identities.checks {
            let mut claim = format!("{}: {}", c.name, c.detail);
            if let (Some(l), Some(r)) = (&c.lhs, &c.rhs) {
                claim.push_str(&format!(" ({l} vs {r})"));
            }
            self.push(CheckResult::count(
                &format!("{prefix}{}", c.name),
                &claim,
                c.pass as u64,
                Relation::Eq,
                1,
            ));
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(sections: Vec<Section>) -> Self {
        Report {
            version: REPORT_VERSION,
            sections,
        }
    }

    pub fn passed(&self) -> bool {
        self.sections.iter().all(Section::passed)
    }

    pub fn total(&self) -> usize {
        self.sections.iter().map(|s| s.checks.len()).sum()
    }

    pub fn failed(&self) -> usize {
        self.sections.iter().map(|s| s.failures().count()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn values_parse_back() {
        let mut s = Section::new("demo");
        s.push(CheckResult::compare(
            "q1",
            "29/196 < rho0",
            &QuadNum::rational(rat(29, 196)),
            Relation::Lt,
            &QuadNum::rho0(),
        ));
        s.push(CheckResult::rational(
            "r",
            "x <= 1/50",
            &rat(1, 50),
            Relation::Le,
            &rat(1, 50),
        ));
        assert!(s.passed());
        for c in &s.checks {
            c.computed.parse::<QuadNum>().unwrap();
            c.bound.parse::<QuadNum>().unwrap();
        }
        let r = Report::new(vec![s]);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<Report>(&json).unwrap(), r);
    }

    #[test]
    fn relations() {
        assert!(!CheckResult::count("c", "", 3, Relation::Lt, 3).pass);
        assert!(CheckResult::count("c", "", 3, Relation::Ge, 3).pass);
        assert!(!CheckResult::error("e", "x", "boom").pass);
    }
}
