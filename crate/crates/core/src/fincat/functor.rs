use std::sync::Arc;

use super::category::{FinCategory, MorId, ObjId};
use super::report::ValidationReport;
use crate::error::{Error, Result};

/// A map of finite categories given by explicit object and morphism tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    objects: Vec<ObjId>,
    morphisms: Vec<MorId>,
}

impl FinFunctor {
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        objects: Vec<ObjId>,
        morphisms: Vec<MorId>,
    ) -> Result<Self> {
        if objects.len() != source.object_count() {
            return Err(Error::invalid(
                "objects",
                format!(
                    "object map has {} entries, source has {} objects",
                    objects.len(),
                    source.object_count()
                ),
            ));
        }
        if morphisms.len() != source.morphism_count() {
            return Err(Error::invalid(
                "morphisms",
                format!(
                    "morphism map has {} entries, source has {} morphisms",
                    morphisms.len(),
                    source.morphism_count()
                ),
            ));
        }
        if let Some(i) = objects.iter().position(|&o| o >= target.object_count()) {
            return Err(Error::invalid(
                format!("objects[{}]", source.object_name(i)),
                "image out of range",
            ));
        }
        if let Some(i) = morphisms.iter().position(|&m| m >= target.morphism_count()) {
            return Err(Error::invalid(
                format!("morphisms[{}]", source.morphism_name(i)),
                "image out of range",
            ));
        }
        Ok(FinFunctor {
            source,
            target,
            objects,
            morphisms,
        })
    }

    /// Build a functor whose object map is read off the morphism map via identities.
    pub fn from_morphism_map(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        morphisms: Vec<MorId>,
    ) -> Result<Self> {
        if morphisms.len() != source.morphism_count() {
            return Err(Error::invalid("morphisms", "wrong length"));
        }
        let objects = source
            .objects()
            .map(|x| target.dom(morphisms[source.identity(x)]))
            .collect();
        FinFunctor::new(source, target, objects, morphisms)
    }

    pub fn identity(cat: &Arc<FinCategory>) -> Self {
        FinFunctor {
            source: cat.clone(),
            target: cat.clone(),
            objects: cat.objects().collect(),
            morphisms: cat.morphisms().collect(),
        }
    }

    /// The functor to `target` that is constant at object `x`.
    pub fn constant(source: &Arc<FinCategory>, target: &Arc<FinCategory>, x: ObjId) -> Self {
        let id = target.identity(x);
        FinFunctor {
            source: source.clone(),
            target: target.clone(),
            objects: vec![x; source.object_count()],
            morphisms: vec![id; source.morphism_count()],
        }
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn ob(&self, x: ObjId) -> ObjId {
        self.objects[x]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.morphisms[f]
    }

    pub fn object_map(&self) -> &[ObjId] {
        &self.objects
    }

    pub fn morphism_map(&self) -> &[MorId] {
        &self.morphisms
    }

    /// `other . self`.
    pub fn then(&self, other: &FinFunctor) -> FinFunctor {
        assert!(
            same_category(&self.target, &other.source),
            "functors are not composable"
        );
        FinFunctor {
            source: self.source.clone(),
            target: other.target.clone(),
            objects: self.objects.iter().map(|&x| other.ob(x)).collect(),
            morphisms: self.morphisms.iter().map(|&f| other.mor(f)).collect(),
        }
    }

    /// `self . other`.
    pub fn after(&self, other: &FinFunctor) -> FinFunctor {
        other.then(self)
    }

    /// Same maps, reinterpreted against a different but equal target.
    pub fn with_target(&self, target: Arc<FinCategory>) -> FinFunctor {
        assert_eq!(*self.target, *target);
        FinFunctor {
            target,
            ..self.clone()
        }
    }

    /// Same maps, reinterpreted against a different but equal source.
    pub fn with_source(&self, source: Arc<FinCategory>) -> FinFunctor {
        assert_eq!(*self.source, *source);
        FinFunctor {
            source,
            ..self.clone()
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let (s, t) = (&*self.source, &*self.target);
        for f in s.morphisms() {
            let img = self.mor(f);
            if t.dom(img) != self.ob(s.dom(f)) {
                report.push(
                    "preserves domains",
                    [s.morphism_name(f).to_string(), t.morphism_name(img).to_string()],
                );
            }
            if t.cod(img) != self.ob(s.cod(f)) {
                report.push(
                    "preserves codomains",
                    [s.morphism_name(f).to_string(), t.morphism_name(img).to_string()],
                );
            }
        }
        for x in s.objects() {
            if self.mor(s.identity(x)) != t.identity(self.ob(x)) {
                report.push(
                    "preserves identities",
                    [s.object_name(x).to_string()],
                );
            }
        }
        for (g, f, gf) in s.composition_entries() {
            if s.cod(f) != s.dom(g) {
                continue;
            }
            let expected = t.try_compose(self.mor(g), self.mor(f));
            if expected != Some(self.mor(gf)) {
                report.push(
                    "preserves composition",
                    [s.morphism_name(g).to_string(), s.morphism_name(f).to_string()],
                );
            }
        }
        report
    }

    pub fn is_injective_on_objects(&self) -> bool {
        injective(&self.objects, self.target.object_count())
    }

    pub fn is_surjective_on_objects(&self) -> bool {
        surjective(&self.objects, self.target.object_count())
    }

    pub fn is_injective_on_morphisms(&self) -> bool {
        injective(&self.morphisms, self.target.morphism_count())
    }

    pub fn is_surjective_on_morphisms(&self) -> bool {
        surjective(&self.morphisms, self.target.morphism_count())
    }

    /// Bijective on objects and on morphisms; for a valid functor this is
    /// exactly being an isomorphism of categories.
    pub fn is_isomorphism(&self) -> bool {
        self.objects.len() == self.target.object_count()
            && self.morphisms.len() == self.target.morphism_count()
            && self.is_injective_on_objects()
            && self.is_injective_on_morphisms()
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<FinFunctor> {
        if !self.is_isomorphism() {
            return None;
        }
        let mut objects = vec![0; self.objects.len()];
        for (x, &y) in self.objects.iter().enumerate() {
            objects[y] = x;
        }
        let mut morphisms = vec![0; self.morphisms.len()];
        for (f, &g) in self.morphisms.iter().enumerate() {
            morphisms[g] = f;
        }
        Some(FinFunctor {
            source: self.target.clone(),
            target: self.source.clone(),
            objects,
            morphisms,
        })
    }

    /// Restriction along the hom-set map `A(x, y) -> B(Fx, Fy)`.
    pub fn hom_map(&self, x: ObjId, y: ObjId) -> Vec<MorId> {
        self.source.hom(x, y).iter().map(|&f| self.mor(f)).collect()
    }
}

fn injective(map: &[usize], range: usize) -> bool {
    let mut seen = vec![false; range];
    map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
}

fn surjective(map: &[usize], range: usize) -> bool {
    let mut seen = vec![false; range];
    for &v in map {
        seen[v] = true;
    }
    seen.into_iter().all(|b| b)
}

pub(crate) fn same_category(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
