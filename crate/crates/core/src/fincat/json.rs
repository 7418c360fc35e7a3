//! `fincat/v1` documents for categories, functors and transformations.
//!
//! Keys are emitted in sorted order (everything goes through
//! `serde_json::Value`), so equal values serialize to identical bytes.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::category::{FinCategory, Morphism};
use super::functor::FinFunctor;
use super::nat::NatTransf;
use crate::error::{Error, Result};

pub const CATEGORY_SCHEMA: &str = "fincat/v1";
pub const FUNCTOR_SCHEMA: &str = "fincat-functor/v1";
pub const NAT_SCHEMA: &str = "fincat-nat/v1";

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositeDoc {
    pub g: String,
    pub f: String,
    pub gf: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub identities: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<CompositeDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub source: CategoryDoc,
    pub target: CategoryDoc,
    #[serde(default)]
    pub objects: BTreeMap<String, String>,
    pub morphisms: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub source: FunctorDoc,
    pub target: FunctorDoc,
    pub components: BTreeMap<String, String>,
}

/// Deserialize with the failing JSON path in the error.
pub fn from_value_at<T: DeserializeOwned>(value: &Value, prefix: &str) -> Result<T> {
    serde_path_to_error::deserialize(value.clone()).map_err(|e| {
        let inner = e.path().to_string();
        let path = match (prefix.is_empty(), inner == ".") {
            (true, _) => inner,
            (false, true) => prefix.to_string(),
            (false, false) => format!("{prefix}.{inner}"),
        };
        Error::invalid(path, e.into_inner().to_string())
    })
}

pub fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        Error::invalid(format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })
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

impl CategoryDoc {
    pub fn from_category(c: &FinCategory) -> Self {
        CategoryDoc {
            schema: Some(CATEGORY_SCHEMA.into()),
            objects: c.object_names().to_vec(),
            morphisms: c
                .morphism_list()
                .iter()
                .map(|m| MorphismDoc {
                    id: m.name.clone(),
                    dom: c.object_name(m.dom).into(),
                    cod: c.object_name(m.cod).into(),
                })
                .collect(),
            identities: c
                .objects()
                .map(|x| (c.object_name(x).into(), c.morphism_name(c.identity(x)).into()))
                .collect(),
            compose: c
                .composition_entries()
                .map(|(g, f, gf)| CompositeDoc {
                    g: c.morphism_name(g).into(),
                    f: c.morphism_name(f).into(),
                    gf: c.morphism_name(gf).into(),
                })
                .collect(),
        }
    }

    /// Resolve names into a table. Composites with an identity that are not
    /// listed are filled in by the identity law; listed ones are kept as given.
    pub fn to_category(&self, path: &str) -> Result<FinCategory> {
        check_schema(&self.schema, CATEGORY_SCHEMA, path)?;
        let obj: BTreeMap<&str, usize> =
            self.objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
        let find_obj = |name: &str, at: String| {
            obj.get(name)
                .copied()
                .ok_or_else(|| Error::invalid(at, format!("unknown object {name:?}")))
        };
        let mut morphisms = Vec::with_capacity(self.morphisms.len());
        for (k, m) in self.morphisms.iter().enumerate() {
            morphisms.push(Morphism {
                name: m.id.clone(),
                dom: find_obj(&m.dom, format!("{path}morphisms[{k}].dom"))?,
                cod: find_obj(&m.cod, format!("{path}morphisms[{k}].cod"))?,
            });
        }
        let mor: BTreeMap<&str, usize> =
            self.morphisms.iter().enumerate().map(|(i, m)| (m.id.as_str(), i)).collect();
        let find_mor = |name: &str, at: String| {
            mor.get(name)
                .copied()
                .ok_or_else(|| Error::invalid(at, format!("unknown morphism {name:?}")))
        };
        for name in self.identities.keys() {
            if !obj.contains_key(name.as_str()) {
                return Err(Error::invalid(
                    format!("{path}identities.{name}"),
                    "identity for an unknown object",
                ));
            }
        }
        let mut identities = Vec::with_capacity(self.objects.len());
        for o in &self.objects {
            let id = self
                .identities
                .get(o)
                .ok_or_else(|| Error::invalid(format!("{path}identities"), format!("missing identity for {o:?}")))?;
            identities.push(find_mor(id, format!("{path}identities.{o}"))?);
        }
        let mut entries = Vec::new();
        let mut given = std::collections::HashSet::new();
        for (k, e) in self.compose.iter().enumerate() {
            let at = |field: &str| format!("{path}compose[{k}].{field}");
            let t = (find_mor(&e.g, at("g"))?, find_mor(&e.f, at("f"))?, find_mor(&e.gf, at("gf"))?);
            given.insert((t.0, t.1));
            entries.push(t);
        }
        for (k, m) in morphisms.iter().enumerate() {
            let (l, r) = (identities[m.cod], identities[m.dom]);
            if !given.contains(&(l, k)) {
                entries.push((l, k, k));
            }
            if !given.contains(&(k, r)) {
                entries.push((k, r, k));
            }
        }
        FinCategory::from_parts(self.objects.clone(), morphisms, identities, entries).map_err(|e| match e {
            Error::InvalidInput { path: p, message } => Error::invalid(format!("{path}{p}"), message),
            other => other,
        })
    }
}

impl FunctorDoc {
    pub fn from_functor(f: &FinFunctor) -> Self {
        let (s, t) = (f.source(), f.target());
        FunctorDoc {
            schema: Some(FUNCTOR_SCHEMA.into()),
            source: CategoryDoc::from_category(s),
            target: CategoryDoc::from_category(t),
            objects: s
                .objects()
                .map(|x| (s.object_name(x).into(), t.object_name(f.ob(x)).into()))
                .collect(),
            morphisms: s
                .morphisms()
                .map(|m| (s.morphism_name(m).into(), t.morphism_name(f.mor(m)).into()))
                .collect(),
        }
    }

    pub fn to_functor(&self, path: &str) -> Result<FinFunctor> {
        check_schema(&self.schema, FUNCTOR_SCHEMA, path)?;
        let s = Arc::new(self.source.to_category(&format!("{path}source."))?);
        let t = Arc::new(self.target.to_category(&format!("{path}target."))?);
        self.to_functor_between(path, s, t)
    }

    /// Resolve the maps against already-parsed endpoint categories.
    pub fn to_functor_between(
        &self,
        path: &str,
        s: Arc<FinCategory>,
        t: Arc<FinCategory>,
    ) -> Result<FinFunctor> {
        for name in self.morphisms.keys() {
            if s.morphism_by_name(name).is_none() {
                return Err(Error::invalid(format!("{path}morphisms.{name}"), "unknown source morphism"));
            }
        }
        for name in self.objects.keys() {
            if s.object_by_name(name).is_none() {
                return Err(Error::invalid(format!("{path}objects.{name}"), "unknown source object"));
            }
        }
        let mut morphisms = Vec::with_capacity(s.morphism_count());
        for m in s.morphisms() {
            let name = s.morphism_name(m);
            let img = self
                .morphisms
                .get(name)
                .ok_or_else(|| Error::invalid(format!("{path}morphisms"), format!("no image for {name:?}")))?;
            morphisms.push(
                t.morphism_by_name(img)
                    .ok_or_else(|| Error::invalid(format!("{path}morphisms.{name}"), format!("unknown target morphism {img:?}")))?,
            );
        }
        let mut objects = Vec::with_capacity(s.object_count());
        for x in s.objects() {
            let name = s.object_name(x);
            let o = match self.objects.get(name) {
                Some(img) => t.object_by_name(img).ok_or_else(|| {
                    Error::invalid(format!("{path}objects.{name}"), format!("unknown target object {img:?}"))
                })?,
                None => t.dom(morphisms[s.identity(x)]),
            };
            objects.push(o);
        }
        FinFunctor::new(s, t, objects, morphisms)
    }
}

impl NatDoc {
    pub fn from_nat(n: &NatTransf) -> Self {
        let a = n.source().source();
        let c = n.source().target();
        NatDoc {
            schema: Some(NAT_SCHEMA.into()),
            source: FunctorDoc::from_functor(n.source()),
            target: FunctorDoc::from_functor(n.target()),
            components: a
                .objects()
                .map(|x| (a.object_name(x).into(), c.morphism_name(n.component(x)).into()))
                .collect(),
        }
    }

    pub fn to_nat(&self, path: &str) -> Result<NatTransf> {
        check_schema(&self.schema, NAT_SCHEMA, path)?;
        let f = self.source.to_functor(&format!("{path}source."))?;
        let g = self
            .target
            .to_functor_between(&format!("{path}target."), f.source().clone(), f.target().clone())?;
        let (a, c) = (f.source().clone(), f.target().clone());
        let mut comps = Vec::with_capacity(a.object_count());
        for x in a.objects() {
            let name = a.object_name(x);
            let m = self
                .components
                .get(name)
                .ok_or_else(|| Error::invalid(format!("{path}components"), format!("no component at {name:?}")))?;
            comps.push(c.morphism_by_name(m).ok_or_else(|| {
                Error::invalid(format!("{path}components.{name}"), format!("unknown morphism {m:?}"))
            })?);
        }
        NatTransf::new(f, g, comps)
    }
}

pub fn to_value<T: Serialize>(doc: &T) -> Value {
    serde_json::to_value(doc).expect("documents serialize")
}

/// Pretty, key-sorted JSON text.
pub fn to_canonical_string(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("values serialize")
}

pub fn category_to_value(c: &FinCategory) -> Value {
    to_value(&CategoryDoc::from_category(c))
}

pub fn category_from_value(v: &Value) -> Result<FinCategory> {
    from_value_at::<CategoryDoc>(v, "")?.to_category("")
}

pub fn category_from_str(text: &str) -> Result<FinCategory> {
    category_from_value(&parse_value(text)?)
}

pub fn functor_to_value(f: &FinFunctor) -> Value {
    to_value(&FunctorDoc::from_functor(f))
}

pub fn functor_from_value(v: &Value) -> Result<FinFunctor> {
    from_value_at::<FunctorDoc>(v, "")?.to_functor("")
}

pub fn functor_from_str(text: &str) -> Result<FinFunctor> {
    functor_from_value(&parse_value(text)?)
}

pub fn nat_to_value(n: &NatTransf) -> Value {
    to_value(&NatDoc::from_nat(n))
}

pub fn nat_from_value(v: &Value) -> Result<NatTransf> {
    from_value_at::<NatDoc>(v, "")?.to_nat("")
}
