use serde::Serialize;

use crate::fincat::Violation;
use crate::System;

/// Outcome of testing kernel data against the congruence conditions of a system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceVerdict {
    pub system: System,
    pub is_congruence: bool,
    /// Names of every condition that was tested, in order.
    pub checked: Vec<String>,
    pub failed_conditions: Vec<Violation>,
}

impl CongruenceVerdict {
    pub(crate) fn new(system: System) -> Self {
        CongruenceVerdict {
            system,
            is_congruence: true,
            checked: Vec::new(),
            failed_conditions: Vec::new(),
        }
    }

    /// Record that `condition` was tested, with its failures (if any).
    pub(crate) fn record(&mut self, condition: &str, failures: Vec<Vec<String>>) {
        self.checked.push(condition.to_string());
        for witness in failures {
            self.failed_conditions.push(Violation {
                law: condition.to_string(),
                witness,
            });
        }
        self.is_congruence = self.failed_conditions.is_empty();
    }

    pub fn failed(&self, condition: &str) -> bool {
        self.failed_conditions.iter().any(|v| v.law == condition)
    }
}
