//! Internal categories in finite sets are finite categories; internal
//! categories in presheaves are presheaves of finite categories.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::base::{Base, BaseKind};
use super::category::{CompTable, InternalCategory, InternalFunctor};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FinFunctor, Morphism, ObjId};

/// `C0` = objects, `C1` = morphisms, in the finite-set base.
pub fn internal_from_category(c: &FinCategory) -> InternalCategory {
    let base = Base::sets();
    let c0 = base.set(c.object_count());
    let c1 = base.set(c.morphism_count());
    let d = vec![c.morphisms().map(|f| c.dom(f)).collect()];
    let cc = vec![c.morphisms().map(|f| c.cod(f)).collect()];
    let i = vec![c.objects().map(|x| c.identity(x)).collect()];
    let comp = vec![c.composition_entries().map(|(g, f, gf)| ((f, g), gf)).collect()];
    InternalCategory::new(base, c0, c1, d, cc, i, comp)
}

pub fn internal_from_functor(f: &FinFunctor) -> InternalFunctor {
    let a = Arc::new(internal_from_category(f.source()));
    let b = Arc::new(internal_from_category(f.target()));
    InternalFunctor::new(a, b, vec![f.object_map().to_vec()], vec![f.morphism_map().to_vec()])
        .expect("same base")
}

/// The category `X(x)` at an index object. Objects are named `o<k>`,
/// morphisms `m<k>`.
pub fn fibre_category(x: &InternalCategory, at: ObjId) -> Result<FinCategory> {
    let objects = (0..x.c0.fibres[at]).map(|k| format!("o{k}")).collect();
    let morphisms = (0..x.c1.fibres[at])
        .map(|k| Morphism {
            name: format!("m{k}"),
            dom: x.d.at(at, k),
            cod: x.c.at(at, k),
        })
        .collect();
    let identities = x.i.components[at].clone();
    let comp = x.comp[at].iter().map(|(&(f, g), &gf)| (g, f, gf));
    FinCategory::from_parts(objects, morphisms, identities, comp)
}

/// The inverse translation, for the finite-set base.
pub fn category_from_internal(x: &InternalCategory) -> Result<FinCategory> {
    if x.base.kind() != BaseKind::FiniteSets {
        return Err(Error::Precondition("translation to a finite category needs the finite-set base".into()));
    }
    fibre_category(x, 0)
}

pub fn fibre_functor(
    f: &InternalFunctor,
    at: ObjId,
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
) -> Result<FinFunctor> {
    FinFunctor::new(source, target, f.f0.components[at].clone(), f.f1.components[at].clone())
}

pub fn functor_from_internal(f: &InternalFunctor) -> Result<FinFunctor> {
    let a = Arc::new(category_from_internal(&f.source)?);
    let b = Arc::new(category_from_internal(&f.target)?);
    fibre_functor(f, 0, a, b)
}

/// A presheaf of finite categories: `cats[x]` for each index object and,
/// for each index morphism `m: x -> y`, a functor `actions[m]: cats[y] -> cats[x]`.
pub fn internal_from_diagram(
    index: Arc<FinCategory>,
    cats: &[Arc<FinCategory>],
    actions: &[FinFunctor],
) -> Result<InternalCategory> {
    if cats.len() != index.object_count() || actions.len() != index.morphism_count() {
        return Err(Error::invalid("diagram", "one category per object and one functor per morphism"));
    }
    for m in index.morphisms() {
        let a = &actions[m];
        if a.source() != &cats[index.cod(m)] || a.target() != &cats[index.dom(m)] {
            return Err(Error::invalid(
                format!("actions.{}", index.morphism_name(m)),
                "action functor has the wrong source or target",
            ));
        }
    }
    let base = Base::presheaves(index.clone());
    let c0 = base.object(
        cats.iter().map(|c| c.object_count()).collect(),
        actions.iter().map(|a| a.object_map().to_vec()).collect(),
    );
    let c1 = base.object(
        cats.iter().map(|c| c.morphism_count()).collect(),
        actions.iter().map(|a| a.morphism_map().to_vec()).collect(),
    );
    let d = cats.iter().map(|c| c.morphisms().map(|f| c.dom(f)).collect()).collect();
    let cc = cats.iter().map(|c| c.morphisms().map(|f| c.cod(f)).collect()).collect();
    let i = cats.iter().map(|c| c.objects().map(|x| c.identity(x)).collect()).collect();
    let comp: CompTable = cats
        .iter()
        .map(|c| c.composition_entries().map(|(g, f, gf)| ((f, g), gf)).collect::<BTreeMap<_, _>>())
        .collect();
    Ok(InternalCategory::new(base, c0, c1, d, cc, i, comp))
}

/// A natural family of functors `comps[x]: X(x) -> Y(x)` as an internal functor.
pub fn internal_functor_from_components(
    source: Arc<InternalCategory>,
    target: Arc<InternalCategory>,
    comps: &[FinFunctor],
) -> Result<InternalFunctor> {
    InternalFunctor::new(
        source,
        target,
        comps.iter().map(|f| f.object_map().to_vec()).collect(),
        comps.iter().map(|f| f.morphism_map().to_vec()).collect(),
    )
}

/// Whether two internal categories are isomorphic, in the finite-set base.
pub fn isomorphic_in_sets(x: &InternalCategory, y: &InternalCategory) -> Result<bool> {
    let a = Arc::new(category_from_internal(x)?);
    let b = Arc::new(category_from_internal(y)?);
    Ok(crate::fincat::categories_isomorphic(&a, &b, &crate::SizeBound::default())?.is_some())
}
