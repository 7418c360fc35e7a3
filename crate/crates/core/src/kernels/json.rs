//! `kernel/v1` documents.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::data::{BoKernelData, BofKernelData, KernelData, SoKernelData};
use crate::error::{Error, Result};
use crate::fincat::json::{from_value_at, parse_value, to_value, CategoryDoc, FunctorDoc};
use crate::fincat::{FinCategory, FinFunctor, NatTransf};
use crate::System;

pub const KERNEL_SCHEMA: &str = "kernel/v1";

/// A functor given by name maps, relative to categories stored elsewhere in the document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    #[serde(default)]
    pub objects: BTreeMap<String, String>,
    pub morphisms: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellDoc {
    pub components: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub system: System,
    #[serde(rename = "X1")]
    pub x1: CategoryDoc,
    #[serde(rename = "X2")]
    pub x2: CategoryDoc,
    #[serde(rename = "X3", default, skip_serializing_if = "Option::is_none")]
    pub x3: Option<CategoryDoc>,
    #[serde(rename = "X2p", default, skip_serializing_if = "Option::is_none")]
    pub x2p: Option<CategoryDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, MapDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cells: BTreeMap<String, CellDoc>,
}

fn map_doc(f: &FinFunctor) -> MapDoc {
    let d = FunctorDoc::from_functor(f);
    MapDoc {
        objects: d.objects,
        morphisms: d.morphisms,
    }
}

fn cell_doc(t: &NatTransf) -> CellDoc {
    let a = t.source().source();
    let c = t.source().target();
    CellDoc {
        components: a
            .objects()
            .map(|x| (a.object_name(x).into(), c.morphism_name(t.component(x)).into()))
            .collect(),
    }
}

impl KernelDoc {
    pub fn from_kernel(k: &KernelData) -> Self {
        let mut maps = BTreeMap::new();
        let mut cells = BTreeMap::new();
        let bo_part = |b: &BoKernelData, maps: &mut BTreeMap<String, MapDoc>| {
            for (n, f) in [("p", &b.p), ("m", &b.m), ("q", &b.q), ("d", &b.d), ("c", &b.c), ("i", &b.i)] {
                maps.insert(n.to_string(), map_doc(f));
            }
        };
        let (x1, x2, x3, x2p) = match k {
            KernelData::Bo(b) => {
                bo_part(b, &mut maps);
                (&b.x1, &b.x2, Some(&b.x3), None)
            }
            KernelData::So(s) => {
                bo_part(&s.bo, &mut maps);
                maps.insert("j".into(), map_doc(&s.j));
                (&s.bo.x1, &s.bo.x2, Some(&s.bo.x3), Some(&s.x2p))
            }
            KernelData::Bof(b) => {
                maps.insert("u".into(), map_doc(&b.u));
                maps.insert("v".into(), map_doc(&b.v));
                cells.insert("alpha".into(), cell_doc(&b.alpha));
                cells.insert("beta".into(), cell_doc(&b.beta));
                (&b.x1, &b.x2, None, None)
            }
        };
        KernelDoc {
            schema: Some(KERNEL_SCHEMA.into()),
            system: k.system(),
            x1: CategoryDoc::from_category(x1),
            x2: CategoryDoc::from_category(x2),
            x3: x3.map(|c| CategoryDoc::from_category(c)),
            x2p: x2p.map(|c| CategoryDoc::from_category(c)),
            maps,
            cells,
        }
    }

    pub fn to_kernel(&self) -> Result<KernelData> {
        if let Some(s) = &self.schema {
            if s != KERNEL_SCHEMA {
                return Err(Error::invalid("schema", format!("expected {KERNEL_SCHEMA:?}, found {s:?}")));
            }
        }
        let x1 = Arc::new(self.x1.to_category("X1.")?);
        let x2 = Arc::new(self.x2.to_category("X2.")?);
        let map = |name: &str, s: &Arc<FinCategory>, t: &Arc<FinCategory>| -> Result<FinFunctor> {
            let doc = self
                .maps
                .get(name)
                .ok_or_else(|| Error::invalid("maps", format!("missing structural map {name:?}")))?;
            FunctorDoc {
                schema: None,
                source: CategoryDoc::from_category(s),
                target: CategoryDoc::from_category(t),
                objects: doc.objects.clone(),
                morphisms: doc.morphisms.clone(),
            }
            .to_functor_between(&format!("maps.{name}."), s.clone(), t.clone())
        };
        let bo = |x3: &Option<CategoryDoc>| -> Result<BoKernelData> {
            let x3 = x3
                .as_ref()
                .ok_or_else(|| Error::invalid("X3", "missing for this system"))?;
            let x3 = Arc::new(x3.to_category("X3.")?);
            Ok(BoKernelData {
                p: map("p", &x3, &x2)?,
                m: map("m", &x3, &x2)?,
                q: map("q", &x3, &x2)?,
                d: map("d", &x2, &x1)?,
                c: map("c", &x2, &x1)?,
                i: map("i", &x1, &x2)?,
                x3,
                x2: x2.clone(),
                x1: x1.clone(),
            })
        };
        Ok(match self.system {
            System::Bo => KernelData::Bo(bo(&self.x3)?),
            System::So => {
                let b = bo(&self.x3)?;
                let x2p = self
                    .x2p
                    .as_ref()
                    .ok_or_else(|| Error::invalid("X2p", "missing for system so"))?;
                let x2p = Arc::new(x2p.to_category("X2p.")?);
                let j = map("j", &x2p, &x2)?;
                KernelData::So(SoKernelData { bo: b, x2p, j })
            }
            System::Bof => {
                let u = map("u", &x2, &x1)?;
                let v = map("v", &x2, &x1)?;
                let cell = |name: &str| -> Result<NatTransf> {
                    let doc = self
                        .cells
                        .get(name)
                        .ok_or_else(|| Error::invalid("cells", format!("missing 2-cell {name:?}")))?;
                    let mut comps = Vec::new();
                    for x in x2.objects() {
                        let on = x2.object_name(x);
                        let m = doc.components.get(on).ok_or_else(|| {
                            Error::invalid(format!("cells.{name}.components"), format!("no component at {on:?}"))
                        })?;
                        comps.push(x1.morphism_by_name(m).ok_or_else(|| {
                            Error::invalid(format!("cells.{name}.components.{on}"), format!("unknown morphism {m:?}"))
                        })?);
                    }
                    NatTransf::new(u.clone(), v.clone(), comps)
                };
                let alpha = cell("alpha")?;
                let beta = cell("beta")?;
                KernelData::Bof(BofKernelData {
                    x2: x2.clone(),
                    x1: x1.clone(),
                    u,
                    v,
                    alpha,
                    beta,
                })
            }
        })
    }
}

pub fn kernel_to_value(k: &KernelData) -> Value {
    to_value(&KernelDoc::from_kernel(k))
}

pub fn kernel_from_value(v: &Value) -> Result<KernelData> {
    from_value_at::<KernelDoc>(v, "")?.to_kernel()
}

pub fn kernel_from_str(text: &str) -> Result<KernelData> {
    kernel_from_value(&parse_value(text)?)
}
