//! Internal categories and functors in presheaf bases (finite sets being
//! presheaves on the terminal category), with the internal factorisations
//! and the quotient of a fully faithful internal equivalence relation.

pub mod base;
pub mod category;
pub mod coeq;
pub mod factor;
pub mod json;
pub mod translate;

pub use base::{Base, BaseKind, BaseMap, BaseObject, BasePullback};
pub use category::{discrete_internal, internal_pullback, CompTable, InternalCategory, InternalFunctor};
pub use coeq::{descend, internal_ff_coequalizer, FfCoequalizer, SegalCheck};
pub use factor::{internal_classify, internal_factor, InternalClassification, InternalFactorisation};
pub use translate::{
    category_from_internal, fibre_category, fibre_functor, functor_from_internal, internal_from_category,
    internal_from_diagram, internal_from_functor, internal_functor_from_components, isomorphic_in_sets,
};

/// Validation of the internal category axioms, pointwise.
pub fn validate_internal(x: &InternalCategory) -> crate::fincat::ValidationReport {
    x.validate()
}

pub fn validate_internal_functor(f: &InternalFunctor) -> crate::fincat::ValidationReport {
    f.validate()
}
