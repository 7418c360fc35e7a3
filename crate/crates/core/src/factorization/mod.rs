//! The three factorisation systems on finite categories.

mod classify;
mod factor;
mod orthogonal;

pub use classify::{classify, classify_direct, Classification, CrossCheck, MorphismClassification};
pub use factor::{factor, Factorisation};
pub use orthogonal::{orthogonal, Orthogonality};
