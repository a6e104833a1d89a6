use serde::{Deserialize, Serialize};

/// Outcome of a single symbolic or grid check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

/// A named batch of checks; passes iff every check passes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub title: String,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn new(title: &str) -> Self {
        IdentityReport {
            title: title.to_string(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(IdentityCheck {
            name: name.to_string(),
            pass,
            detail: detail.into(),
            lhs: None,
            rhs: None,
        });
    }

    /// Records an equality check; both sides are kept only on failure.
    pub fn push_eq(&mut self, name: &str, pass: bool, lhs: impl ToString, rhs: impl ToString) {
        let (lhs, rhs) = if pass {
            (None, None)
        } else {
            (Some(lhs.to_string()), Some(rhs.to_string()))
        };
        self.checks.push(IdentityCheck {
            name: name.to_string(),
            pass,
            detail: if pass {
                "identity holds".into()
            } else {
                "sides differ".into()
            },
            lhs,
            rhs,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
