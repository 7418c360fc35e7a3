use crate::error::{Error, Result};
use crate::fincat::FinCategory;

pub const SIZE_BOUND_ENV: &str = "EXACT2_SIZE_BOUND";

/// Limits on the size of constructed and enumerated categories.
///
/// Exceeding a limit yields [`Error::SizeBound`]; nothing is ever truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SizeBound {
    pub construct_objects: usize,
    pub construct_morphisms: usize,
    pub enumerate_objects: usize,
    pub enumerate_morphisms: usize,
}

impl Default for SizeBound {
    fn default() -> Self {
        SizeBound {
            construct_objects: 20,
            construct_morphisms: 200,
            enumerate_objects: 6,
            enumerate_morphisms: 30,
        }
    }
}

impl SizeBound {
    /// Bound whose enumeration limit is `n` objects and `5n` morphisms.
    /// `n == 0` disables every enumeration-dependent computation.
    pub fn with_enumeration(n: usize) -> Self {
        SizeBound {
            enumerate_objects: n,
            enumerate_morphisms: 5 * n,
            ..SizeBound::default()
        }
    }

    /// Default bound, with the enumeration limit overridden by `EXACT2_SIZE_BOUND` when set.
    pub fn from_env() -> Self {
        match std::env::var(SIZE_BOUND_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            Some(n) => SizeBound::with_enumeration(n),
            None => SizeBound::default(),
        }
    }

    pub fn enumeration_disabled(&self) -> bool {
        self.enumerate_objects == 0
    }

    pub fn check_enumerable(&self, what: &str, cat: &FinCategory) -> Result<()> {
        if cat.object_count() > self.enumerate_objects {
            return Err(Error::size(
                format!("{what}: objects"),
                cat.object_count(),
                self.enumerate_objects,
            ));
        }
        if cat.morphism_count() > self.enumerate_morphisms {
            return Err(Error::size(
                format!("{what}: morphisms"),
                cat.morphism_count(),
                self.enumerate_morphisms,
            ));
        }
        Ok(())
    }

    pub fn check_constructible(&self, what: &str, objects: usize, morphisms: usize) -> Result<()> {
        if objects > self.construct_objects {
            return Err(Error::size(
                format!("{what}: objects"),
                objects,
                self.construct_objects,
            ));
        }
        if morphisms > self.construct_morphisms {
            return Err(Error::size(
                format!("{what}: morphisms"),
                morphisms,
                self.construct_morphisms,
            ));
        }
        Ok(())
    }
}
