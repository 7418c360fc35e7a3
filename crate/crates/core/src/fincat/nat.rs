use super::category::{MorId, ObjId};
use super::functor::FinFunctor;
use super::report::ValidationReport;
use crate::error::{Error, Result};

/// A natural transformation between parallel functors, one component per
/// object of the common source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransf {
    source: FinFunctor,
    target: FinFunctor,
    components: Vec<MorId>,
}

impl NatTransf {
    pub fn new(source: FinFunctor, target: FinFunctor, components: Vec<MorId>) -> Result<Self> {
        if *source.source() != *target.source() || *source.target() != *target.target() {
            return Err(Error::invalid("", "functors are not parallel"));
        }
        if components.len() != source.source().object_count() {
            return Err(Error::invalid(
                "components",
                format!(
                    "expected {} components, got {}",
                    source.source().object_count(),
                    components.len()
                ),
            ));
        }
        if let Some(i) = components
            .iter()
            .position(|&c| c >= source.target().morphism_count())
        {
            return Err(Error::invalid(format!("components[{i}]"), "morphism out of range"));
        }
        Ok(NatTransf {
            source,
            target,
            components,
        })
    }

    pub fn identity(f: &FinFunctor) -> Self {
        let cod = f.target();
        NatTransf {
            source: f.clone(),
            target: f.clone(),
            components: f.object_map().iter().map(|&y| cod.identity(y)).collect(),
        }
    }

    pub fn source(&self) -> &FinFunctor {
        &self.source
    }

    pub fn target(&self) -> &FinFunctor {
        &self.target
    }

    pub fn component(&self, x: ObjId) -> MorId {
        self.components[x]
    }

    pub fn components(&self) -> &[MorId] {
        &self.components
    }

    /// Vertical composite `other . self`.
    pub fn then(&self, other: &NatTransf) -> NatTransf {
        assert_eq!(self.target, other.source, "transformations are not composable");
        let c = self.source.target();
        NatTransf {
            source: self.source.clone(),
            target: other.target.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(&a, &b)| c.compose(b, a))
                .collect(),
        }
    }

    /// Whisker on the left by a functor out of the common target: `H . self`.
    pub fn whisker_left(&self, h: &FinFunctor) -> NatTransf {
        NatTransf {
            source: self.source.then(h),
            target: self.target.then(h),
            components: self.components.iter().map(|&a| h.mor(a)).collect(),
        }
    }

    /// Precompose with a functor into the common source: `self . K`.
    pub fn whisker_right(&self, k: &FinFunctor) -> NatTransf {
        NatTransf {
            source: k.then(&self.source),
            target: k.then(&self.target),
            components: k.object_map().iter().map(|&x| self.components[x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        let c = self.source.target();
        self.components.iter().all(|&a| c.is_identity(a))
    }

    pub fn is_invertible(&self) -> bool {
        let c = self.source.target();
        self.components.iter().all(|&a| c.is_iso_morphism(a))
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let a = self.source.source();
        let c = self.source.target();
        for x in a.objects() {
            let k = self.components[x];
            if c.dom(k) != self.source.ob(x) || c.cod(k) != self.target.ob(x) {
                report.push(
                    "component endpoints",
                    [a.object_name(x).to_string(), c.morphism_name(k).to_string()],
                );
            }
        }
        if !report.is_valid() {
            return report;
        }
        for f in a.morphisms() {
            let (x, y) = (a.dom(f), a.cod(f));
            let lhs = c.try_compose(self.target.mor(f), self.components[x]);
            let rhs = c.try_compose(self.components[y], self.source.mor(f));
            if lhs.is_none() || lhs != rhs {
                report.push("naturality", [a.morphism_name(f).to_string()]);
            }
        }
        report
    }
}
