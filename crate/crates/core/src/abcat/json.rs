//! `ring/v1` and `ring-hom/v1` documents.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::ring::{FiniteRing, RingHom};
use crate::error::{Error, Result};
use crate::fincat::json::{from_value_at, parse_value, to_value};

pub const RING_SCHEMA: &str = "ring/v1";
pub const RING_HOM_SCHEMA: &str = "ring-hom/v1";

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub elements: Vec<String>,
    pub zero: String,
    pub one: String,
    pub add: Vec<Vec<String>>,
    pub mul: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingHomDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub source: RingDoc,
    pub target: RingDoc,
    pub map: BTreeMap<String, String>,
}

fn schema_ok(found: &Option<String>, expected: &str, path: &str) -> Result<()> {
    match found {
        Some(s) if s != expected => Err(Error::invalid(format!("{path}schema"), format!("expected {expected:?}, got {s:?}"))),
        _ => Ok(()),
    }
}

impl RingDoc {
    pub fn from_ring(r: &FiniteRing) -> Self {
        let table = |f: &dyn Fn(usize, usize) -> usize| {
            r.elements().map(|a| r.elements().map(|b| r.name(f(a, b)).to_string()).collect()).collect()
        };
        RingDoc {
            schema: Some(RING_SCHEMA.into()),
            elements: r.names().to_vec(),
            zero: r.name(r.zero()).into(),
            one: r.name(r.one()).into(),
            add: table(&|a, b| r.add(a, b)),
            mul: table(&|a, b| r.mul(a, b)),
        }
    }

    pub fn to_ring(&self, path: &str) -> Result<FiniteRing> {
        schema_ok(&self.schema, RING_SCHEMA, path)?;
        let index: BTreeMap<&str, usize> = self.elements.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let look = |name: &str, at: String| {
            index.get(name).copied().ok_or_else(|| Error::invalid(at, format!("unknown element {name:?}")))
        };
        let table = |t: &[Vec<String>], label: &str| -> Result<Vec<Vec<usize>>> {
            t.iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, n)| look(n, format!("{path}{label}[{i}][{j}]")))
                        .collect()
                })
                .collect()
        };
        let ring = FiniteRing::new(
            self.elements.clone(),
            table(&self.add, "add")?,
            table(&self.mul, "mul")?,
            look(&self.zero, format!("{path}zero"))?,
            look(&self.one, format!("{path}one"))?,
        )
        .map_err(|e| match e {
            Error::InvalidInput { path: p, message } => Error::InvalidInput { path: format!("{path}{p}"), message },
            other => other,
        })?;
        Ok(ring)
    }
}

impl RingHomDoc {
    pub fn from_hom(h: &RingHom) -> Self {
        RingHomDoc {
            schema: Some(RING_HOM_SCHEMA.into()),
            source: RingDoc::from_ring(&h.source),
            target: RingDoc::from_ring(&h.target),
            map: h
                .source
                .elements()
                .map(|a| (h.source.name(a).to_string(), h.target.name(h.apply(a)).to_string()))
                .collect(),
        }
    }

    pub fn to_hom(&self, path: &str) -> Result<RingHom> {
        schema_ok(&self.schema, RING_HOM_SCHEMA, path)?;
        let s = Arc::new(self.source.to_ring(&format!("{path}source."))?);
        let t = Arc::new(self.target.to_ring(&format!("{path}target."))?);
        let map = s
            .elements()
            .map(|a| {
                let at = format!("{path}map.{}", s.name(a));
                let img = self.map.get(s.name(a)).ok_or_else(|| Error::invalid(at.clone(), "missing image"))?;
                t.element(img).ok_or_else(|| Error::invalid(at, format!("unknown element {img:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(extra) = self.map.keys().find(|k| s.element(k).is_none()) {
            return Err(Error::invalid(format!("{path}map.{extra}"), "not an element of the source"));
        }
        RingHom::new(s, t, map)
    }
}

pub fn ring_to_value(r: &FiniteRing) -> Value {
    to_value(&RingDoc::from_ring(r))
}

pub fn ring_from_value(v: &Value) -> Result<FiniteRing> {
    from_value_at::<RingDoc>(v, "")?.to_ring("")
}

pub fn ring_from_str(text: &str) -> Result<FiniteRing> {
    ring_from_value(&parse_value(text)?)
}

pub fn ring_hom_to_value(h: &RingHom) -> Value {
    to_value(&RingHomDoc::from_hom(h))
}

pub fn ring_hom_from_value(v: &Value) -> Result<RingHom> {
    from_value_at::<RingHomDoc>(v, "")?.to_hom("")
}

pub fn ring_hom_from_str(text: &str) -> Result<RingHom> {
    ring_hom_from_value(&parse_value(text)?)
}
