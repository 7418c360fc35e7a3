//! Congruence conditions, quotients of congruences and effectivity.

mod bo;
mod bof;
mod cocone;
mod coequifier;
mod effective;
mod ffeq;
mod quotient;
mod relation;
mod so;
mod universal;
mod verdict;

pub use cocone::CodescentCocone;
pub use coequifier::{coequifier_pair, Coequifier};
pub use effective::{check_effective, EffectivityReport, KernelIso};
pub use ffeq::{ff_equivalence_to_so, FfEquivalence};
pub use quotient::{is_congruence, quotient, Quotient, SoStages};
pub use universal::{spot_check_universal, UniversalCheck};
pub use verdict::CongruenceVerdict;
