//! Finite categories, functors and natural transformations.

pub mod category;
pub mod construct;
pub mod enumerate;
pub mod functor;
pub mod iso;
pub mod json;
pub mod nat;
pub mod report;
pub mod shapes;
pub mod tabulate;

pub use category::{CategoryBuilder, FinCategory, MorId, Morphism, ObjId};
pub use construct::{
    coproduct, full_subcategory, functor_category, parallel_pairs, product, pullback,
    transformations_between, FunctorCategory, Pullback,
};
pub use enumerate::{count_functors, enumerate_functors};
pub use functor::FinFunctor;
pub use iso::{categories_isomorphic, find_isomorphism};
pub use nat::NatTransf;
pub use report::{ValidationReport, Violation};
