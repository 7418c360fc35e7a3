use serde::Serialize;

/// One failed law together with the cells that witness the failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<String>,
}

impl Violation {
    pub fn new(law: impl Into<String>, witness: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Violation {
            law: law.into(),
            witness: witness.into_iter().map(Into::into).collect(),
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} [{}]", self.law, self.witness.join(", "))
    }
}

/// Result of a validation pass; empty means every law holds.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: impl Into<String>, witness: impl IntoIterator<Item = impl Into<String>>) {
        self.violations.push(Violation::new(law, witness));
    }

    pub fn extend_prefixed(&mut self, prefix: &str, other: ValidationReport) {
        for v in other.violations {
            self.violations.push(Violation {
                law: format!("{prefix}: {}", v.law),
                witness: v.witness,
            });
        }
    }

    pub fn count(&self, law: &str) -> usize {
        self.violations.iter().filter(|v| v.law == law).count()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("; "))
    }
}
