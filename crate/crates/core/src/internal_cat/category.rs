use std::collections::BTreeMap;
use std::sync::Arc;

use super::base::{Base, BaseMap, BaseObject, BasePullback};
use crate::error::{Error, Result};
use crate::fincat::{ObjId, ValidationReport};

/// Composition, fibrewise: `comp[x][(f, g)] = g . f` for composable
/// `c f = d g`.
pub type CompTable = Vec<BTreeMap<(usize, usize), usize>>;

/// A category object `(C0, C1, d, c, i, comp)` in a presheaf base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalCategory {
    pub base: Arc<Base>,
    pub c0: BaseObject,
    pub c1: BaseObject,
    pub d: BaseMap,
    pub c: BaseMap,
    pub i: BaseMap,
    pub comp: CompTable,
}

impl InternalCategory {
    pub fn new(
        base: Arc<Base>,
        c0: BaseObject,
        c1: BaseObject,
        d: Vec<Vec<usize>>,
        c: Vec<Vec<usize>>,
        i: Vec<Vec<usize>>,
        comp: CompTable,
    ) -> Self {
        let map = |s: &BaseObject, t: &BaseObject, components| BaseMap {
            source: s.clone(),
            target: t.clone(),
            components,
        };
        InternalCategory {
            d: map(&c1, &c0, d),
            c: map(&c1, &c0, c),
            i: map(&c0, &c1, i),
            base,
            c0,
            c1,
            comp,
        }
    }

    /// `C1 x_C0 C1`, pairs `(f, g)` with `c f = d g`.
    pub fn c2(&self) -> BasePullback {
        self.base.pullback(&self.c, &self.d)
    }

    pub fn compose(&self, x: ObjId, f: usize, g: usize) -> Option<usize> {
        self.comp.get(x)?.get(&(f, g)).copied()
    }

    pub fn identity_at(&self, x: ObjId, a: usize) -> usize {
        self.i.at(x, a)
    }

    /// `comp` as a map out of the on-demand `C2`.
    pub fn comp_map(&self, c2: &BasePullback) -> BaseMap {
        BaseMap {
            source: c2.obj.clone(),
            target: self.c1.clone(),
            components: c2
                .pairs
                .iter()
                .enumerate()
                .map(|(x, ps)| ps.iter().map(|&(f, g)| self.comp[x][&(f, g)]).collect())
                .collect(),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let b = &self.base;
        let mut r = ValidationReport::default();
        r.extend_prefixed("C0", b.validate_object(&self.c0));
        r.extend_prefixed("C1", b.validate_object(&self.c1));
        if !r.is_valid() {
            return r;
        }
        for (name, m) in [("d", &self.d), ("c", &self.c), ("i", &self.i)] {
            r.extend_prefixed(name, b.validate_map(m));
        }
        if !r.is_valid() {
            return r;
        }
        let ix = b.index();
        let pt = |x: ObjId, e: usize| format!("{}:{e}", ix.object_name(x));
        for x in ix.objects() {
            for a in 0..self.c0.fibres[x] {
                let ia = self.i.at(x, a);
                if self.d.at(x, ia) != a || self.c.at(x, ia) != a {
                    r.push("d i = c i = id", [pt(x, a)]);
                }
            }
        }
        let c2 = self.c2();
        if self.comp.len() != ix.object_count() {
            r.push("comp is defined on C1 x_C0 C1", ["fibre count"]);
            return r;
        }
        for x in ix.objects() {
            let ps = &c2.pairs[x];
            if self.comp[x].len() != ps.len() || ps.iter().any(|p| !self.comp[x].contains_key(p)) {
                r.push("comp is defined on C1 x_C0 C1", [ix.object_name(x).to_string()]);
                return r;
            }
            if self.comp[x].values().any(|&v| v >= self.c1.fibres[x]) {
                r.push("comp is defined on C1 x_C0 C1", [ix.object_name(x).to_string()]);
                return r;
            }
        }
        for x in ix.objects() {
            for (&(f, g), &gf) in &self.comp[x] {
                if self.d.at(x, gf) != self.d.at(x, f) || self.c.at(x, gf) != self.c.at(x, g) {
                    r.push("source and target of comp", [pt(x, f), pt(x, g)]);
                }
            }
            for f in 0..self.c1.fibres[x] {
                let (s, t) = (self.d.at(x, f), self.c.at(x, f));
                if self.comp[x][&(self.i.at(x, s), f)] != f || self.comp[x][&(f, self.i.at(x, t))] != f {
                    r.push("unit laws", [pt(x, f)]);
                }
            }
            for (&(f, g), &gf) in &self.comp[x] {
                for h in 0..self.c1.fibres[x] {
                    if self.d.at(x, h) != self.c.at(x, g) {
                        continue;
                    }
                    let hg = self.comp[x][&(g, h)];
                    if self.comp[x][&(gf, h)] != self.comp[x][&(f, hg)] {
                        r.push("associativity", [pt(x, f), pt(x, g), pt(x, h)]);
                    }
                }
            }
        }
        for m in ix.morphisms() {
            let (x, y) = (ix.dom(m), ix.cod(m));
            for (&(f, g), &gf) in &self.comp[y] {
                if self.comp[x][&(self.c1.act(m, f), self.c1.act(m, g))] != self.c1.act(m, gf) {
                    r.push("comp is natural", [ix.morphism_name(m).to_string(), pt(y, f), pt(y, g)]);
                }
            }
        }
        r
    }
}

/// An internal functor `(f0, f1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalFunctor {
    pub source: Arc<InternalCategory>,
    pub target: Arc<InternalCategory>,
    pub f0: BaseMap,
    pub f1: BaseMap,
}

impl InternalFunctor {
    pub fn new(
        source: Arc<InternalCategory>,
        target: Arc<InternalCategory>,
        f0: Vec<Vec<usize>>,
        f1: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if source.base.index() != target.base.index() {
            return Err(Error::Precondition("internal functor between different bases".into()));
        }
        let f0 = BaseMap {
            source: source.c0.clone(),
            target: target.c0.clone(),
            components: f0,
        };
        let f1 = BaseMap {
            source: source.c1.clone(),
            target: target.c1.clone(),
            components: f1,
        };
        Ok(InternalFunctor { source, target, f0, f1 })
    }

    pub fn identity(x: &Arc<InternalCategory>) -> Self {
        InternalFunctor {
            source: x.clone(),
            target: x.clone(),
            f0: BaseMap::identity(&x.c0),
            f1: BaseMap::identity(&x.c1),
        }
    }

    pub fn then(&self, g: &InternalFunctor) -> InternalFunctor {
        InternalFunctor {
            source: self.source.clone(),
            target: g.target.clone(),
            f0: self.f0.then(&g.f0),
            f1: self.f1.then(&g.f1),
        }
    }

    /// Equal component tables (source and target are not compared).
    pub fn same_maps(&self, g: &InternalFunctor) -> bool {
        self.f0.same_as(&g.f0) && self.f1.same_as(&g.f1)
    }

    pub fn is_iso(&self) -> bool {
        self.f0.is_bijective() && self.f1.is_bijective()
    }

    pub fn validate(&self) -> ValidationReport {
        let (a, b) = (&self.source, &self.target);
        let base = &a.base;
        let mut r = ValidationReport::default();
        let shape_ok = |m: &BaseMap, s: &BaseObject, t: &BaseObject| {
            m.components.len() == s.fibres.len()
                && m.components.iter().zip(&s.fibres).all(|(c, &n)| c.len() == n)
                && m.components.iter().zip(&t.fibres).all(|(c, &n)| c.iter().all(|&v| v < n))
        };
        if !shape_ok(&self.f0, &a.c0, &b.c0) || !shape_ok(&self.f1, &a.c1, &b.c1) {
            r.push("components are maps", ["f0/f1 shape"]);
            return r;
        }
        r.extend_prefixed("f0", base.validate_map(&self.f0));
        r.extend_prefixed("f1", base.validate_map(&self.f1));
        let ix = base.index();
        let pt = |x: ObjId, e: usize| format!("{}:{e}", ix.object_name(x));
        for x in ix.objects() {
            for g in 0..a.c1.fibres[x] {
                let fg = self.f1.at(x, g);
                if b.d.at(x, fg) != self.f0.at(x, a.d.at(x, g)) {
                    r.push("f preserves d", [pt(x, g)]);
                }
                if b.c.at(x, fg) != self.f0.at(x, a.c.at(x, g)) {
                    r.push("f preserves c", [pt(x, g)]);
                }
            }
            for o in 0..a.c0.fibres[x] {
                if self.f1.at(x, a.i.at(x, o)) != b.i.at(x, self.f0.at(x, o)) {
                    r.push("f preserves identities", [pt(x, o)]);
                }
            }
            if !r.is_valid() {
                continue;
            }
            for (&(f, g), &gf) in &a.comp[x] {
                let (ff, fg) = (self.f1.at(x, f), self.f1.at(x, g));
                if b.compose(x, ff, fg) != Some(self.f1.at(x, gf)) {
                    r.push("f preserves composition", [pt(x, f), pt(x, g)]);
                }
            }
        }
        r
    }
}

/// The discrete internal category on `x0`: `C1 = C0`, all structure identities.
pub fn discrete_internal(base: &Arc<Base>, x0: &BaseObject) -> InternalCategory {
    let ids: Vec<Vec<usize>> = x0.fibres.iter().map(|&n| (0..n).collect()).collect();
    let comp = x0.fibres.iter().map(|&n| (0..n).map(|a| ((a, a), a)).collect()).collect();
    InternalCategory::new(base.clone(), x0.clone(), x0.clone(), ids.clone(), ids.clone(), ids, comp)
}

/// Pullback of internal functors `f: A -> C <- B: g`, with its projections.
pub fn internal_pullback(
    f: &InternalFunctor,
    g: &InternalFunctor,
) -> Result<(Arc<InternalCategory>, InternalFunctor, InternalFunctor)> {
    if f.target.base.index() != g.target.base.index() || f.target.c1 != g.target.c1 {
        return Err(Error::Precondition("pullback of functors with different targets".into()));
    }
    let (a, b) = (&f.source, &g.source);
    let base = &a.base;
    let p0 = base.pullback(&f.f0, &g.f0);
    let p1 = base.pullback(&f.f1, &g.f1);
    let both = |ma: &BaseMap, mb: &BaseMap, over: &BasePullback, into: &BasePullback| {
        into.mediate(&over.p1.then(ma), &over.p2.then(mb)).expect("structure maps commute with f and g")
    };
    let d = both(&a.d, &b.d, &p1, &p0);
    let c = both(&a.c, &b.c, &p1, &p0);
    let i = both(&a.i, &b.i, &p0, &p1);
    let comp: CompTable = base
        .index()
        .objects()
        .map(|x| {
            let mut t = BTreeMap::new();
            for (k1, &(fa, fb)) in p1.pairs[x].iter().enumerate() {
                for (k2, &(ga, gb)) in p1.pairs[x].iter().enumerate() {
                    if c.at(x, k1) != d.at(x, k2) {
                        continue;
                    }
                    let (ca, cb) = (a.comp[x][&(fa, ga)], b.comp[x][&(fb, gb)]);
                    t.insert((k1, k2), p1.element(x, ca, cb).expect("composites lie over the same composite"));
                }
            }
            t
        })
        .collect();
    let k = Arc::new(InternalCategory::new(
        base.clone(),
        p0.obj.clone(),
        p1.obj.clone(),
        d.components,
        c.components,
        i.components,
        comp,
    ));
    let proj = |src: &Arc<InternalCategory>, m0: &BaseMap, m1: &BaseMap| InternalFunctor {
        source: k.clone(),
        target: src.clone(),
        f0: m0.clone(),
        f1: m1.clone(),
    };
    let pa = proj(a, &p0.p1, &p1.p1);
    let pb = proj(b, &p0.p2, &p1.p2);
    Ok((k, pa, pb))
}
