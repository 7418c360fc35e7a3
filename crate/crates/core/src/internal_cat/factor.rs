use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::base::{BaseMap, BasePullback};
use super::category::{CompTable, InternalCategory, InternalFunctor};
use crate::System;

/// Pointwise classification of an internal functor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InternalClassification {
    /// `C1` is the pullback of `(d, c): D1 -> D0 x D0` along `f0 x f0`.
    pub ff: bool,
    /// The comparison into that pullback is surjective.
    pub full: bool,
    /// The comparison into that pullback is injective.
    pub faithful: bool,
    pub mono_on_objects: bool,
    /// Fully faithful and mono on objects.
    pub full_monic_style: bool,
    pub reg_epi_on_objects: bool,
    pub reg_epi_on_morphisms: bool,
    pub bo: bool,
    pub is_iso: bool,
}

impl InternalClassification {
    pub fn in_left_class(&self, system: System) -> bool {
        match system {
            System::Bo => self.bo,
            System::So => self.reg_epi_on_objects,
            System::Bof => self.bo && self.reg_epi_on_morphisms,
        }
    }

    pub fn in_right_class(&self, system: System) -> bool {
        match system {
            System::Bo => self.ff,
            System::So => self.full_monic_style,
            System::Bof => self.faithful,
        }
    }
}

/// `P = D1 x_{D0 x D0} (Z0 x Z0)` for `u: Z0 -> D0`: triples `(z1, z2, delta)`
/// with `delta: u z1 -> u z2`.
pub(crate) struct HomPullback {
    pub zz: BasePullback,
    pub p: BasePullback,
}

impl HomPullback {
    pub fn new(d: &InternalCategory, u: &BaseMap) -> HomPullback {
        let base = &d.base;
        let dd = base.product(&d.c0, &d.c0);
        let zz = base.product(&u.source, &u.source);
        let ends = dd.mediate(&d.d, &d.c).expect("product");
        let uu = dd.mediate(&zz.p1.then(u), &zz.p2.then(u)).expect("product");
        let p = base.pullback(&uu, &ends);
        HomPullback { zz, p }
    }

    pub fn element(&self, x: usize, z1: usize, z2: usize, delta: usize) -> Option<usize> {
        self.p.element(x, self.zz.element(x, z1, z2)?, delta)
    }

    pub fn triple(&self, x: usize, e: usize) -> (usize, usize, usize) {
        let (zz, delta) = self.p.pairs[x][e];
        let (z1, z2) = self.zz.pairs[x][zz];
        (z1, z2, delta)
    }

    /// The comparison `(d, c, f1): C1 -> P` of a functor with `f0 = e0 ; u`.
    pub fn comparison(&self, f: &InternalFunctor, e0: &BaseMap) -> BaseMap {
        let x = &f.source;
        let components = (0..x.c1.fibres.len())
            .map(|at| {
                (0..x.c1.fibres[at])
                    .map(|g| {
                        let (s, t) = (e0.at(at, x.d.at(at, g)), e0.at(at, x.c.at(at, g)));
                        self.element(at, s, t, f.f1.at(at, g)).expect("f commutes with d and c")
                    })
                    .collect()
            })
            .collect();
        BaseMap {
            source: x.c1.clone(),
            target: self.p.obj.clone(),
            components,
        }
    }

    /// The full internal category on `Z0` over `D`, with its projection.
    pub fn full_image(&self, dcat: &Arc<InternalCategory>, u: &BaseMap) -> (Arc<InternalCategory>, InternalFunctor) {
        let base = &dcat.base;
        let n = base.index().object_count();
        let mut d = Vec::with_capacity(n);
        let mut c = Vec::with_capacity(n);
        let mut i = Vec::with_capacity(n);
        let mut comp: CompTable = Vec::with_capacity(n);
        for at in 0..n {
            let triples: Vec<_> = (0..self.p.obj.fibres[at]).map(|e| self.triple(at, e)).collect();
            d.push(triples.iter().map(|t| t.0).collect());
            c.push(triples.iter().map(|t| t.1).collect());
            i.push(
                (0..u.source.fibres[at])
                    .map(|z| self.element(at, z, z, dcat.i.at(at, u.at(at, z))).expect("identity lies over z"))
                    .collect(),
            );
            let mut by_dom: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for (e, t) in triples.iter().enumerate() {
                by_dom.entry(t.0).or_default().push(e);
            }
            let mut tab = BTreeMap::new();
            for (e1, t1) in triples.iter().enumerate() {
                for &e2 in by_dom.get(&t1.1).map(Vec::as_slice).unwrap_or(&[]) {
                    let t2 = triples[e2];
                    let delta = dcat.comp[at][&(t1.2, t2.2)];
                    tab.insert((e1, e2), self.element(at, t1.0, t2.1, delta).expect("composite lies over the ends"));
                }
            }
            comp.push(tab);
        }
        let z = Arc::new(InternalCategory::new(
            base.clone(),
            u.source.clone(),
            self.p.obj.clone(),
            d,
            c,
            i,
            comp,
        ));
        let m = InternalFunctor {
            source: z.clone(),
            target: dcat.clone(),
            f0: u.clone(),
            f1: self.p.p2.clone(),
        };
        (z, m)
    }
}

pub fn internal_classify(f: &InternalFunctor) -> InternalClassification {
    let hp = HomPullback::new(&f.target, &f.f0);
    let k = hp.comparison(f, &BaseMap::identity(&f.source.c0));
    let (full, faithful) = (k.is_surjective(), k.is_injective());
    let mono_on_objects = f.f0.is_injective();
    let reg_epi_on_objects = f.f0.is_surjective();
    InternalClassification {
        ff: full && faithful,
        full,
        faithful,
        mono_on_objects,
        full_monic_style: full && faithful && mono_on_objects,
        reg_epi_on_objects,
        reg_epi_on_morphisms: f.f1.is_surjective(),
        bo: f.f0.is_bijective(),
        is_iso: f.is_iso(),
    }
}

/// `f = m . e` in the internal version of a system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalFactorisation {
    pub system: System,
    pub middle: Arc<InternalCategory>,
    pub e: InternalFunctor,
    pub m: InternalFunctor,
}

impl InternalFactorisation {
    /// `m . e` reproduces `f` component for component.
    pub fn composes_to(&self, f: &InternalFunctor) -> bool {
        self.e.then(&self.m).same_maps(f)
    }
}

/// Factor through the full image (bo), the image on objects (so), or the
/// image of the hom comparison `C1 -> P` (bof).
pub fn internal_factor(f: &InternalFunctor, system: System) -> InternalFactorisation {
    let (x, d) = (&f.source, &f.target);
    let base = &x.base;
    match system {
        System::Bo => {
            let hp = HomPullback::new(d, &f.f0);
            let (z, m) = hp.full_image(d, &f.f0);
            let e0 = BaseMap::identity(&x.c0);
            let e1 = hp.comparison(f, &e0);
            let e = InternalFunctor {
                source: x.clone(),
                target: z.clone(),
                f0: e0,
                f1: e1,
            };
            InternalFactorisation { system, middle: z, e, m }
        }
        System::So => {
            let (e0, u) = base.image(&f.f0);
            let hp = HomPullback::new(d, &u);
            let (z, m) = hp.full_image(d, &u);
            let e1 = hp.comparison(f, &e0);
            let e = InternalFunctor {
                source: x.clone(),
                target: z.clone(),
                f0: e0,
                f1: e1,
            };
            InternalFactorisation { system, middle: z, e, m }
        }
        System::Bof => {
            let hp = HomPullback::new(d, &f.f0);
            let (full, full_m) = hp.full_image(d, &f.f0);
            let e0 = BaseMap::identity(&x.c0);
            let k = hp.comparison(f, &e0);
            let (e1, incl) = base.image(&k);
            let z = Arc::new(restrict(&full, &incl));
            let e = InternalFunctor {
                source: x.clone(),
                target: z.clone(),
                f0: e0,
                f1: e1.clone(),
            };
            let m = InternalFunctor {
                source: z.clone(),
                target: d.clone(),
                f0: full_m.f0.clone(),
                f1: incl.then(&full_m.f1),
            };
            InternalFactorisation { system, middle: z, e, m }
        }
    }
}

/// Restriction of `x` to a subobject of `C1` (given by its inclusion) that
/// contains the identities and is closed under composition.
fn restrict(x: &InternalCategory, incl: &BaseMap) -> InternalCategory {
    let n = x.base.index().object_count();
    let pos: Vec<BTreeMap<usize, usize>> = incl
        .components
        .iter()
        .map(|c| c.iter().enumerate().map(|(k, &v)| (v, k)).collect())
        .collect();
    let d = (0..n).map(|at| incl.components[at].iter().map(|&g| x.d.at(at, g)).collect()).collect();
    let c = (0..n).map(|at| incl.components[at].iter().map(|&g| x.c.at(at, g)).collect()).collect();
    let i = (0..n)
        .map(|at| x.i.components[at].iter().map(|g| pos[at][g]).collect())
        .collect();
    let comp = (0..n)
        .map(|at| {
            x.comp[at]
                .iter()
                .filter_map(|(&(f, g), gf)| Some(((*pos[at].get(&f)?, *pos[at].get(&g)?), pos[at][gf])))
                .collect()
        })
        .collect();
    InternalCategory::new(x.base.clone(), x.c0.clone(), incl.source.clone(), d, c, i, comp)
}
