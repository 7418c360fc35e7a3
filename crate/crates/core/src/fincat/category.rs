use std::collections::HashMap;
use std::fmt;

use super::report::ValidationReport;
use crate::error::{Error, Result};

pub type ObjId = usize;
pub type MorId = usize;

const NONE: u32 = u32::MAX;

/// Hard cap on the morphism count of any category, since the composition
/// table is dense.
pub const MAX_MORPHISMS: usize = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub dom: ObjId,
    pub cod: ObjId,
}

/// A finite category given by explicit object and morphism lists, an
/// identity assignment and a composition table.
///
/// Construction only checks that every reference points at an existing
/// object or morphism. The category axioms are checked by
/// [`FinCategory::validate`], so malformed tables can be represented and
/// reported on.
#[derive(Clone)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<MorId>,
    // compose[g * n + f] = g . f
    compose: Vec<u32>,
    homs: Vec<Vec<MorId>>,
    object_index: HashMap<String, ObjId>,
    morphism_index: HashMap<String, MorId>,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.compose == other.compose
    }
}

impl Eq for FinCategory {}

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinCategory")
            .field("objects", &self.objects)
            .field("morphisms", &self.morphisms.len())
            .finish()
    }
}

impl FinCategory {
    /// Build a category from raw tables. `compose` lists `(g, f, g.f)` triples.
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<MorId>,
        compose: impl IntoIterator<Item = (MorId, MorId, MorId)>,
    ) -> Result<Self> {
        let n_obj = objects.len();
        let n_mor = morphisms.len();
        if n_mor > MAX_MORPHISMS {
            return Err(Error::size("category morphisms", n_mor, MAX_MORPHISMS));
        }
        let mut object_index = HashMap::with_capacity(n_obj);
        for (i, o) in objects.iter().enumerate() {
            if object_index.insert(o.clone(), i).is_some() {
                return Err(Error::invalid(
                    format!("objects[{i}]"),
                    format!("duplicate object {o:?}"),
                ));
            }
        }
        let mut morphism_index = HashMap::with_capacity(n_mor);
        for (i, m) in morphisms.iter().enumerate() {
            if m.dom >= n_obj || m.cod >= n_obj {
                return Err(Error::invalid(
                    format!("morphisms[{i}]"),
                    "domain or codomain out of range",
                ));
            }
            if morphism_index.insert(m.name.clone(), i).is_some() {
                return Err(Error::invalid(
                    format!("morphisms[{i}]"),
                    format!("duplicate morphism {:?}", m.name),
                ));
            }
        }
        if identities.len() != n_obj {
            return Err(Error::invalid(
                "identities",
                format!("expected {n_obj} identities, got {}", identities.len()),
            ));
        }
        if let Some(bad) = identities.iter().position(|&m| m >= n_mor) {
            return Err(Error::invalid(
                format!("identities[{bad}]"),
                "identity morphism out of range",
            ));
        }
        let mut table = vec![NONE; n_mor * n_mor];
        for (k, (g, f, gf)) in compose.into_iter().enumerate() {
            if g >= n_mor || f >= n_mor || gf >= n_mor {
                return Err(Error::invalid(
                    format!("compose[{k}]"),
                    "morphism out of range",
                ));
            }
            let slot = &mut table[g * n_mor + f];
            if *slot != NONE && *slot as usize != gf {
                return Err(Error::invalid(
                    format!("compose[{k}]"),
                    format!(
                        "conflicting composite for ({}, {})",
                        morphisms[g].name, morphisms[f].name
                    ),
                ));
            }
            *slot = gf as u32;
        }
        let mut homs = vec![Vec::new(); n_obj * n_obj];
        for (i, m) in morphisms.iter().enumerate() {
            homs[m.dom * n_obj + m.cod].push(i);
        }
        Ok(FinCategory {
            objects,
            morphisms,
            identities,
            compose: table,
            homs,
            object_index,
            morphism_index,
        })
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = ObjId> {
        0..self.objects.len()
    }

    pub fn morphisms(&self) -> impl ExactSizeIterator<Item = MorId> {
        0..self.morphisms.len()
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism(&self, f: MorId) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn morphism_list(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.morphisms[f].name
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjId> {
        self.object_index.get(name).copied()
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<MorId> {
        self.morphism_index.get(name).copied()
    }

    /// Object lookup that panics on unknown names; for fixtures and tests.
    pub fn obj(&self, name: &str) -> ObjId {
        self.object_by_name(name)
            .unwrap_or_else(|| panic!("no object named {name:?}"))
    }

    /// Morphism lookup that panics on unknown names; for fixtures and tests.
    pub fn mor(&self, name: &str) -> MorId {
        self.morphism_by_name(name)
            .unwrap_or_else(|| panic!("no morphism named {name:?}"))
    }

    pub fn dom(&self, f: MorId) -> ObjId {
        self.morphisms[f].dom
    }

    pub fn cod(&self, f: MorId) -> ObjId {
        self.morphisms[f].cod
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identities[x]
    }

    pub fn identities(&self) -> &[MorId] {
        &self.identities
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identities[self.dom(f)] == f
    }

    /// Raw table lookup for `g . f`, defined or not.
    pub fn try_compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        let v = self.compose[g * self.morphisms.len() + f];
        (v != NONE).then_some(v as usize)
    }

    /// `g . f`. Panics if the pair is missing from the table; only call on
    /// validated categories with `cod f == dom g`.
    pub fn compose(&self, g: MorId, f: MorId) -> MorId {
        match self.try_compose(g, f) {
            Some(gf) => gf,
            None => panic!(
                "composite {} . {} is undefined",
                self.morphisms[g].name, self.morphisms[f].name
            ),
        }
    }

    /// Composite of a path given in diagrammatic order: `path[0]` first.
    pub fn compose_path(&self, path: &[MorId]) -> MorId {
        let mut it = path.iter();
        let mut acc = *it.next().expect("empty path");
        for &g in it {
            acc = self.compose(g, acc);
        }
        acc
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.homs[x * self.objects.len() + y]
    }

    /// Composition table entries as `(g, f, g.f)`, in `(g, f)` order.
    pub fn composition_entries(&self) -> impl Iterator<Item = (MorId, MorId, MorId)> + '_ {
        let n = self.morphisms.len();
        self.compose
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != NONE)
            .map(move |(k, v)| (k / n, k % n, *v as usize))
    }

    pub fn is_discrete(&self) -> bool {
        self.morphisms.len() == self.objects.len()
    }

    /// True when every hom-set has at most one element.
    pub fn is_preorder(&self) -> bool {
        self.homs.iter().all(|h| h.len() <= 1)
    }

    pub fn is_iso_morphism(&self, f: MorId) -> bool {
        self.inverse(f).is_some()
    }

    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (x, y) = (self.dom(f), self.cod(f));
        self.hom(y, x).iter().copied().find(|&g| {
            self.try_compose(g, f) == Some(self.identity(x))
                && self.try_compose(f, g) == Some(self.identity(y))
        })
    }

    /// Check the category axioms by a full table scan.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.morphisms.len();
        let name = |f: MorId| self.morphisms[f].name.clone();
        for x in self.objects() {
            let id = self.identities[x];
            if self.dom(id) != x || self.cod(id) != x {
                report.push("identity endpoints", [self.objects[x].clone(), name(id)]);
            }
        }
        for g in 0..n {
            for f in 0..n {
                let composable = self.cod(f) == self.dom(g);
                match (composable, self.try_compose(g, f)) {
                    (true, None) => report.push("composite defined", [name(g), name(f)]),
                    (false, Some(_)) => {
                        report.push("composite only on composable pairs", [name(g), name(f)])
                    }
                    (true, Some(gf)) => {
                        if self.dom(gf) != self.dom(f) || self.cod(gf) != self.cod(g) {
                            report.push("composite endpoints", [name(g), name(f), name(gf)]);
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for f in 0..n {
            let (a, b) = (self.dom(f), self.cod(f));
            if self.try_compose(self.identities[b], f) != Some(f) {
                report.push("left identity", [name(f)]);
            }
            if self.try_compose(f, self.identities[a]) != Some(f) {
                report.push("right identity", [name(f)]);
            }
        }
        for f in 0..n {
            for g in self.composable_after(f) {
                let Some(gf) = self.try_compose(g, f) else { continue };
                for h in self.composable_after(g) {
                    let lhs = self.try_compose(h, g).and_then(|hg| self.try_compose(hg, f));
                    let rhs = self.try_compose(h, gf);
                    if lhs != rhs {
                        report.push("associativity", [name(h), name(g), name(f)]);
                    }
                }
            }
        }
        report
    }

    fn composable_after(&self, f: MorId) -> impl Iterator<Item = MorId> + '_ {
        let y = self.cod(f);
        self.objects().flat_map(move |z| self.hom(y, z).iter().copied())
    }

    /// Copy of this table with `g . f` overwritten; used to build faulty fixtures.
    pub fn with_composite(&self, g: MorId, f: MorId, gf: Option<MorId>) -> FinCategory {
        let mut out = self.clone();
        let n = self.morphisms.len();
        out.compose[g * n + f] = gf.map_or(NONE, |v| v as u32);
        out
    }

    /// Copy with the identity of `x` reassigned; used to build faulty fixtures.
    pub fn with_identity(&self, x: ObjId, id: MorId) -> FinCategory {
        let mut out = self.clone();
        out.identities[x] = id;
        out
    }

    /// The opposite category; names are kept.
    pub fn opposite(&self) -> FinCategory {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Morphism {
                name: m.name.clone(),
                dom: m.cod,
                cod: m.dom,
            })
            .collect();
        let entries: Vec<_> = self
            .composition_entries()
            .map(|(g, f, gf)| (f, g, gf))
            .collect();
        FinCategory::from_parts(
            self.objects.clone(),
            morphisms,
            self.identities.clone(),
            entries,
        )
        .expect("opposite of a well-formed table is well-formed")
    }
}

/// Incremental construction of a [`FinCategory`] by names.
///
/// Identities are created with each object (named `id_<obj>` unless given).
/// Composites involving an identity are filled in automatically.
#[derive(Debug, Default, Clone)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<MorId>,
    compose: Vec<(MorId, MorId, MorId)>,
    object_index: HashMap<String, ObjId>,
    morphism_index: HashMap<String, MorId>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, name: impl Into<String>) -> ObjId {
        let name = name.into();
        let id_name = format!("id_{name}");
        self.object_with_identity(name, id_name)
    }

    pub fn object_with_identity(
        &mut self,
        name: impl Into<String>,
        identity: impl Into<String>,
    ) -> ObjId {
        let name = name.into();
        let x = self.objects.len();
        self.object_index.insert(name.clone(), x);
        self.objects.push(name);
        let id = self.push_morphism(identity.into(), x, x);
        self.identities.push(id);
        x
    }

    pub fn object_identity(&self, x: ObjId) -> MorId {
        self.identities[x]
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    fn push_morphism(&mut self, name: String, dom: ObjId, cod: ObjId) -> MorId {
        let k = self.morphisms.len();
        self.morphism_index.insert(name.clone(), k);
        self.morphisms.push(Morphism { name, dom, cod });
        k
    }

    pub fn morphism(&mut self, name: impl Into<String>, dom: &str, cod: &str) -> MorId {
        let dom = self.object_index[dom];
        let cod = self.object_index[cod];
        self.morphism_ids(name, dom, cod)
    }

    pub fn morphism_ids(&mut self, name: impl Into<String>, dom: ObjId, cod: ObjId) -> MorId {
        self.push_morphism(name.into(), dom, cod)
    }

    /// Declare `g . f = gf` by names.
    pub fn compose(&mut self, g: &str, f: &str, gf: &str) -> &mut Self {
        let (g, f, gf) = (
            self.morphism_index[g],
            self.morphism_index[f],
            self.morphism_index[gf],
        );
        self.compose.push((g, f, gf));
        self
    }

    pub fn compose_ids(&mut self, g: MorId, f: MorId, gf: MorId) -> &mut Self {
        self.compose.push((g, f, gf));
        self
    }

    /// Finish, adding identity composites. Does not check the axioms.
    pub fn build(&self) -> Result<FinCategory> {
        let mut entries = self.compose.clone();
        for (k, m) in self.morphisms.iter().enumerate() {
            entries.push((k, self.identities[m.dom], k));
            entries.push((self.identities[m.cod], k, k));
        }
        FinCategory::from_parts(
            self.objects.clone(),
            self.morphisms.clone(),
            self.identities.clone(),
            entries,
        )
    }
}
