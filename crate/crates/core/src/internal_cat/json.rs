//! `internal/v1` documents.
//!
//! Elements of a fibre are the integers `0..n`. Presheaf actions are keyed by
//! index morphism name and may omit identity morphisms; composites are listed
//! per fibre as `[f, g, g.f]` triples.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::base::{Base, BaseKind, BaseObject};
use super::category::{InternalCategory, InternalFunctor};
use crate::error::{Error, Result};
use crate::fincat::json::{from_value_at, parse_value, to_value, CategoryDoc};

pub const INTERNAL_SCHEMA: &str = "internal/v1";
pub const INTERNAL_FUNCTOR_SCHEMA: &str = "internal-functor/v1";
pub const INTERNAL_PAIR_SCHEMA: &str = "internal-pair/v1";

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseDoc {
    pub kind: BaseKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<CategoryDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectDoc {
    pub fibres: Vec<usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub actions: BTreeMap<String, Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InternalDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub base: BaseDoc,
    pub c0: ObjectDoc,
    pub c1: ObjectDoc,
    pub d: Vec<Vec<usize>>,
    pub c: Vec<Vec<usize>>,
    pub i: Vec<Vec<usize>>,
    pub comp: Vec<Vec<[usize; 3]>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapsDoc {
    pub f0: Vec<Vec<usize>>,
    pub f1: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InternalFunctorDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub source: InternalDoc,
    pub target: InternalDoc,
    pub f0: Vec<Vec<usize>>,
    pub f1: Vec<Vec<usize>>,
}

/// A parallel pair `s, t: source => target`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InternalPairDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub source: InternalDoc,
    pub target: InternalDoc,
    pub s: MapsDoc,
    pub t: MapsDoc,
}

fn check_schema(found: &Option<String>, expected: &str, path: &str) -> Result<()> {
    match found {
        Some(s) if s != expected => Err(Error::invalid(
            format!("{path}schema"),
            format!("expected {expected:?}, found {s:?}"),
        )),
        _ => Ok(()),
    }
}

/// Shape checks so that later lookups cannot go out of range.
fn check_table(t: &[Vec<usize>], sizes: &[usize], bound: &[usize], path: &str) -> Result<()> {
    if t.len() != sizes.len() {
        return Err(Error::invalid(path, format!("expected {} fibres, got {}", sizes.len(), t.len())));
    }
    for (k, (row, (&n, &b))) in t.iter().zip(sizes.iter().zip(bound)).enumerate() {
        if row.len() != n {
            return Err(Error::invalid(format!("{path}[{k}]"), format!("expected {n} entries, got {}", row.len())));
        }
        if let Some(j) = row.iter().position(|&v| v >= b) {
            return Err(Error::invalid(format!("{path}[{k}][{j}]"), format!("value out of range (< {b})")));
        }
    }
    Ok(())
}

impl BaseDoc {
    fn from_base(b: &Base) -> Self {
        BaseDoc {
            kind: b.kind(),
            index: match b.kind() {
                BaseKind::FiniteSets => None,
                BaseKind::FinitePresheaves => Some(CategoryDoc::from_category(b.index())),
            },
        }
    }

    fn to_base(&self, path: &str) -> Result<Arc<Base>> {
        match (self.kind, &self.index) {
            (BaseKind::FiniteSets, None) => Ok(Base::sets()),
            (BaseKind::FiniteSets, Some(_)) => Err(Error::invalid(format!("{path}index"), "finite sets take no index")),
            (BaseKind::FinitePresheaves, Some(doc)) => {
                let c = doc.to_category(&format!("{path}index."))?;
                let v = c.validate();
                if !v.is_valid() {
                    return Err(Error::invalid(format!("{path}index"), format!("not a category: {v}")));
                }
                Ok(Base::presheaves(Arc::new(c)))
            }
            (BaseKind::FinitePresheaves, None) => Err(Error::invalid(format!("{path}index"), "missing index category")),
        }
    }
}

impl ObjectDoc {
    fn from_object(b: &Base, o: &BaseObject) -> Self {
        let ix = b.index();
        let actions = match b.kind() {
            BaseKind::FiniteSets => BTreeMap::new(),
            BaseKind::FinitePresheaves => ix
                .morphisms()
                .filter(|&m| !ix.is_identity(m))
                .map(|m| (ix.morphism_name(m).to_string(), o.actions[m].clone()))
                .collect(),
        };
        ObjectDoc {
            fibres: o.fibres.clone(),
            actions,
        }
    }

    fn to_object(&self, b: &Base, path: &str) -> Result<BaseObject> {
        let ix = b.index();
        if self.fibres.len() != ix.object_count() {
            return Err(Error::invalid(
                format!("{path}fibres"),
                format!("expected {} fibres, got {}", ix.object_count(), self.fibres.len()),
            ));
        }
        if let Some(name) = self.actions.keys().find(|n| ix.morphism_by_name(n).is_none()) {
            return Err(Error::invalid(format!("{path}actions.{name}"), "unknown index morphism"));
        }
        let mut actions = Vec::with_capacity(ix.morphism_count());
        for m in ix.morphisms() {
            let name = ix.morphism_name(m);
            let (x, y) = (ix.dom(m), ix.cod(m));
            let act = match self.actions.get(name) {
                Some(a) => a.clone(),
                None if ix.is_identity(m) => (0..self.fibres[x]).collect(),
                None => return Err(Error::invalid(format!("{path}actions.{name}"), "missing action")),
            };
            let ap = format!("{path}actions.{name}");
            if act.len() != self.fibres[y] {
                return Err(Error::invalid(ap, format!("expected {} entries", self.fibres[y])));
            }
            if let Some(j) = act.iter().position(|&v| v >= self.fibres[x]) {
                return Err(Error::invalid(format!("{ap}[{j}]"), "value out of range"));
            }
            actions.push(act);
        }
        Ok(b.object(self.fibres.clone(), actions))
    }
}

impl InternalDoc {
    pub fn from_internal(x: &InternalCategory) -> Self {
        let b = &x.base;
        InternalDoc {
            schema: Some(INTERNAL_SCHEMA.into()),
            base: BaseDoc::from_base(b),
            c0: ObjectDoc::from_object(b, &x.c0),
            c1: ObjectDoc::from_object(b, &x.c1),
            d: x.d.components.clone(),
            c: x.c.components.clone(),
            i: x.i.components.clone(),
            comp: x.comp.iter().map(|t| t.iter().map(|(&(f, g), &gf)| [f, g, gf]).collect()).collect(),
        }
    }

    /// Parse and check the shape of every table; the category axioms are
    /// left to [`InternalCategory::validate`].
    pub fn to_internal(&self, path: &str) -> Result<InternalCategory> {
        check_schema(&self.schema, INTERNAL_SCHEMA, path)?;
        let b = self.base.to_base(&format!("{path}base."))?;
        let c0 = self.c0.to_object(&b, &format!("{path}c0."))?;
        let c1 = self.c1.to_object(&b, &format!("{path}c1."))?;
        check_table(&self.d, &c1.fibres, &c0.fibres, &format!("{path}d"))?;
        check_table(&self.c, &c1.fibres, &c0.fibres, &format!("{path}c"))?;
        check_table(&self.i, &c0.fibres, &c1.fibres, &format!("{path}i"))?;
        if self.comp.len() != c1.fibres.len() {
            return Err(Error::invalid(format!("{path}comp"), "one composition list per fibre"));
        }
        let mut comp = Vec::with_capacity(self.comp.len());
        for (k, list) in self.comp.iter().enumerate() {
            let mut t = BTreeMap::new();
            for (j, &[f, g, gf]) in list.iter().enumerate() {
                let p = format!("{path}comp[{k}][{j}]");
                if [f, g, gf].iter().any(|&v| v >= c1.fibres[k]) {
                    return Err(Error::invalid(p, "morphism out of range"));
                }
                if t.insert((f, g), gf).is_some_and(|old| old != gf) {
                    return Err(Error::invalid(p, "conflicting composite"));
                }
            }
            // Composites with an identity are filled in by the unit laws.
            for f in 0..c1.fibres[k] {
                let (s, e) = (self.d[k][f], self.c[k][f]);
                t.entry((self.i[k][s], f)).or_insert(f);
                t.entry((f, self.i[k][e])).or_insert(f);
            }
            comp.push(t);
        }
        Ok(InternalCategory::new(b, c0, c1, self.d.clone(), self.c.clone(), self.i.clone(), comp))
    }
}

fn maps_to_functor(
    source: Arc<InternalCategory>,
    target: Arc<InternalCategory>,
    f0: &[Vec<usize>],
    f1: &[Vec<usize>],
    path: &str,
) -> Result<InternalFunctor> {
    if source.base.index() != target.base.index() {
        return Err(Error::invalid(format!("{path}target.base"), "source and target bases differ"));
    }
    check_table(f0, &source.c0.fibres, &target.c0.fibres, &format!("{path}f0"))?;
    check_table(f1, &source.c1.fibres, &target.c1.fibres, &format!("{path}f1"))?;
    InternalFunctor::new(source, target, f0.to_vec(), f1.to_vec())
}

impl InternalFunctorDoc {
    pub fn from_functor(f: &InternalFunctor) -> Self {
        InternalFunctorDoc {
            schema: Some(INTERNAL_FUNCTOR_SCHEMA.into()),
            source: InternalDoc::from_internal(&f.source),
            target: InternalDoc::from_internal(&f.target),
            f0: f.f0.components.clone(),
            f1: f.f1.components.clone(),
        }
    }

    pub fn to_functor(&self, path: &str) -> Result<InternalFunctor> {
        check_schema(&self.schema, INTERNAL_FUNCTOR_SCHEMA, path)?;
        let a = Arc::new(self.source.to_internal(&format!("{path}source."))?);
        let b = Arc::new(self.target.to_internal(&format!("{path}target."))?);
        maps_to_functor(a, b, &self.f0, &self.f1, path)
    }
}

impl InternalPairDoc {
    pub fn from_pair(s: &InternalFunctor, t: &InternalFunctor) -> Self {
        let maps = |f: &InternalFunctor| MapsDoc {
            f0: f.f0.components.clone(),
            f1: f.f1.components.clone(),
        };
        InternalPairDoc {
            schema: Some(INTERNAL_PAIR_SCHEMA.into()),
            source: InternalDoc::from_internal(&s.source),
            target: InternalDoc::from_internal(&s.target),
            s: maps(s),
            t: maps(t),
        }
    }

    pub fn to_pair(&self, path: &str) -> Result<(InternalFunctor, InternalFunctor)> {
        check_schema(&self.schema, INTERNAL_PAIR_SCHEMA, path)?;
        let a = Arc::new(self.source.to_internal(&format!("{path}source."))?);
        let b = Arc::new(self.target.to_internal(&format!("{path}target."))?);
        let s = maps_to_functor(a.clone(), b.clone(), &self.s.f0, &self.s.f1, &format!("{path}s."))?;
        let t = maps_to_functor(a, b, &self.t.f0, &self.t.f1, &format!("{path}t."))?;
        Ok((s, t))
    }
}

pub fn internal_to_value(x: &InternalCategory) -> Value {
    to_value(&InternalDoc::from_internal(x))
}

pub fn internal_from_value(v: &Value) -> Result<InternalCategory> {
    from_value_at::<InternalDoc>(v, "")?.to_internal("")
}

pub fn internal_from_str(text: &str) -> Result<InternalCategory> {
    internal_from_value(&parse_value(text)?)
}

pub fn internal_functor_to_value(f: &InternalFunctor) -> Value {
    to_value(&InternalFunctorDoc::from_functor(f))
}

pub fn internal_functor_from_value(v: &Value) -> Result<InternalFunctor> {
    from_value_at::<InternalFunctorDoc>(v, "")?.to_functor("")
}

pub fn internal_functor_from_str(text: &str) -> Result<InternalFunctor> {
    internal_functor_from_value(&parse_value(text)?)
}

pub fn internal_pair_to_value(s: &InternalFunctor, t: &InternalFunctor) -> Value {
    to_value(&InternalPairDoc::from_pair(s, t))
}

pub fn internal_pair_from_value(v: &Value) -> Result<(InternalFunctor, InternalFunctor)> {
    from_value_at::<InternalPairDoc>(v, "")?.to_pair("")
}

pub fn internal_pair_from_str(text: &str) -> Result<(InternalFunctor, InternalFunctor)> {
    internal_pair_from_value(&parse_value(text)?)
}
