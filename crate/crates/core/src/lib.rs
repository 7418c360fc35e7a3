pub mod abcat;
pub mod bound;
pub mod cli;
pub mod error;
pub mod kernels;
pub mod factorization;
pub mod fixtures;
pub mod fincat;
pub mod internal_cat;
pub mod locally_discrete;
pub mod minimize;
pub mod quotients;
pub mod sample;
pub mod suite;

use serde::{Deserialize, Serialize};

pub use bound::SizeBound;
pub use error::{Error, Result};

/// The three kernel-quotient systems on `Cat`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum System {
    /// Bijective on objects / fully faithful.
    Bo,
    /// Surjective on objects / full monic.
    So,
    /// Bijective on objects and full / faithful.
    Bof,
}

impl System {
    pub const ALL: [System; 3] = [System::Bo, System::So, System::Bof];

    pub fn as_str(self) -> &'static str {
        match self {
            System::Bo => "bo",
            System::So => "so",
            System::Bof => "bof",
        }
    }
}

impl std::fmt::Display for System {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for System {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bo" => Ok(System::Bo),
            "so" => Ok(System::So),
            "bof" => Ok(System::Bof),
            other => Err(Error::invalid("system", format!("unknown system {other:?}"))),
        }
    }
}
