use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::functor::same_category;
use crate::fincat::tabulate::{tabulate, Tabulated};
use crate::fincat::{FinCategory, FinFunctor, MorId, NatTransf, ObjId};

/// Object `(x, y, a: f x -> g y)` of a comma category.
pub type CommaObject = (ObjId, ObjId, MorId);

/// Morphism `(h, k)` of a comma category with its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CommaMorphism {
    pub src: CommaObject,
    pub dst: CommaObject,
    pub h: MorId,
    pub k: MorId,
}

/// The comma category `f|g` with projections `d`, `c` and the canonical
/// 2-cell `theta: f d => g c` whose component at `(x, y, a)` is `a`.
#[derive(Debug, Clone)]
pub struct Comma {
    pub cat: Arc<FinCategory>,
    pub d: FinFunctor,
    pub c: FinFunctor,
    pub theta: NatTransf,
    pub table: Tabulated<CommaObject, CommaMorphism>,
}

impl Comma {
    pub fn object_of(&self, x: ObjId, y: ObjId, a: MorId) -> Option<ObjId> {
        self.table.object_of(&(x, y, a))
    }

    pub fn object_key(&self, o: ObjId) -> CommaObject {
        self.table.objects[o]
    }

    pub fn morphism_of(&self, src: CommaObject, dst: CommaObject, h: MorId, k: MorId) -> Option<MorId> {
        self.table.morphism_of(&CommaMorphism { src, dst, h, k })
    }

    pub fn morphism_key(&self, m: MorId) -> CommaMorphism {
        self.table.morphisms[m]
    }

    /// The functor into `f|g` induced by a cone `(H: X -> A, K: X -> C, phi: f H => g K)`.
    pub fn mediate(&self, h: &FinFunctor, k: &FinFunctor, phi: &NatTransf) -> Result<FinFunctor> {
        let x = h.source();
        let objects = x
            .objects()
            .map(|o| self.object_of(h.ob(o), k.ob(o), phi.component(o)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Precondition("cone lands outside the comma".into()))?;
        let morphisms = x
            .morphisms()
            .map(|m| {
                let (s, t) = (x.dom(m), x.cod(m));
                self.morphism_of(
                    self.object_key(objects[s]),
                    self.object_key(objects[t]),
                    h.mor(m),
                    k.mor(m),
                )
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Precondition("cone is not natural".into()))?;
        FinFunctor::new(x.clone(), self.cat.clone(), objects, morphisms)
    }
}

pub(crate) fn comma_object_name(a: &FinCategory, c: &FinCategory, b: &FinCategory, o: CommaObject) -> String {
    format!("({},{},{})", a.object_name(o.0), c.object_name(o.1), b.morphism_name(o.2))
}

/// The comma category `f|g` for `f: A -> B`, `g: C -> B`.
pub fn comma(f: &FinFunctor, g: &FinFunctor) -> Result<Comma> {
    if !same_category(f.target(), g.target()) {
        return Err(Error::Precondition("comma of functors with different targets".into()));
    }
    let (a, c, b) = (f.source().clone(), g.source().clone(), f.target().clone());
    let mut objects = Vec::new();
    for x in a.objects() {
        for y in c.objects() {
            for &al in b.hom(f.ob(x), g.ob(y)) {
                objects.push((x, y, al));
            }
        }
    }
    let name = |o: CommaObject| comma_object_name(&a, &c, &b, o);
    let mut morphisms = Vec::new();
    for &src in &objects {
        for &dst in &objects {
            for &h in a.hom(src.0, dst.0) {
                for &k in c.hom(src.1, dst.1) {
                    if b.compose(dst.2, f.mor(h)) == b.compose(g.mor(k), src.2) {
                        morphisms.push((
                            CommaMorphism { src, dst, h, k },
                            format!(
                                "({},{}):{}->{}",
                                a.morphism_name(h),
                                c.morphism_name(k),
                                name(src),
                                name(dst)
                            ),
                            src,
                            dst,
                        ));
                    }
                }
            }
        }
    }
    let obj_cells = objects.iter().map(|&o| (o, name(o))).collect();
    let table = tabulate(
        obj_cells,
        morphisms,
        |&o| CommaMorphism {
            src: o,
            dst: o,
            h: a.identity(o.0),
            k: c.identity(o.1),
        },
        |g2, f2| CommaMorphism {
            src: f2.src,
            dst: g2.dst,
            h: a.compose(g2.h, f2.h),
            k: c.compose(g2.k, f2.k),
        },
    )?;
    let cat = Arc::new(table.cat.clone());
    let d = FinFunctor::new(
        cat.clone(),
        a.clone(),
        table.objects.iter().map(|o| o.0).collect(),
        table.morphisms.iter().map(|m| m.h).collect(),
    )?;
    let cc = FinFunctor::new(
        cat.clone(),
        c.clone(),
        table.objects.iter().map(|o| o.1).collect(),
        table.morphisms.iter().map(|m| m.k).collect(),
    )?;
    let theta = NatTransf::new(
        d.then(f),
        cc.then(g),
        table.objects.iter().map(|o| o.2).collect(),
    )?;
    Ok(Comma {
        cat,
        d,
        c: cc,
        theta,
        table,
    })
}

/// Object `(x, y, z, a, b)` of the triple comma `f|f|f`.
pub type TripleObject = (ObjId, ObjId, ObjId, MorId, MorId);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripleMorphism {
    pub src: TripleObject,
    pub dst: TripleObject,
    pub h: MorId,
    pub k: MorId,
    pub l: MorId,
}

/// The triple comma `f|f|f`: objects `(x, y, z, a: fx -> fy, b: fy -> fz)`,
/// morphisms `(h, k, l)` making both squares commute.
#[derive(Debug, Clone)]
pub struct TripleComma {
    pub cat: Arc<FinCategory>,
    pub table: Tabulated<TripleObject, TripleMorphism>,
}

pub fn triple_comma(f: &FinFunctor) -> Result<TripleComma> {
    let (a, b) = (f.source().clone(), f.target().clone());
    let mut objects = Vec::new();
    for x in a.objects() {
        for y in a.objects() {
            for &al in b.hom(f.ob(x), f.ob(y)) {
                for z in a.objects() {
                    for &be in b.hom(f.ob(y), f.ob(z)) {
                        objects.push((x, y, z, al, be));
                    }
                }
            }
        }
    }
    let name = |o: TripleObject| {
        format!(
            "({},{},{},{},{})",
            a.object_name(o.0),
            a.object_name(o.1),
            a.object_name(o.2),
            b.morphism_name(o.3),
            b.morphism_name(o.4)
        )
    };
    let mut morphisms = Vec::new();
    for &src in &objects {
        for &dst in &objects {
            for &h in a.hom(src.0, dst.0) {
                for &k in a.hom(src.1, dst.1) {
                    if b.compose(dst.3, f.mor(h)) != b.compose(f.mor(k), src.3) {
                        continue;
                    }
                    for &l in a.hom(src.2, dst.2) {
                        if b.compose(dst.4, f.mor(k)) == b.compose(f.mor(l), src.4) {
                            morphisms.push((
                                TripleMorphism { src, dst, h, k, l },
                                format!(
                                    "({},{},{}):{}->{}",
                                    a.morphism_name(h),
                                    a.morphism_name(k),
                                    a.morphism_name(l),
                                    name(src),
                                    name(dst)
                                ),
                                src,
                                dst,
                            ));
                        }
                    }
                }
            }
        }
    }
    let obj_cells = objects.iter().map(|&o| (o, name(o))).collect();
    let table = tabulate(
        obj_cells,
        morphisms,
        |&o| TripleMorphism {
            src: o,
            dst: o,
            h: a.identity(o.0),
            k: a.identity(o.1),
            l: a.identity(o.2),
        },
        |g2, f2| TripleMorphism {
            src: f2.src,
            dst: g2.dst,
            h: a.compose(g2.h, f2.h),
            k: a.compose(g2.k, f2.k),
            l: a.compose(g2.l, f2.l),
        },
    )?;
    Ok(TripleComma {
        cat: Arc::new(table.cat.clone()),
        table,
    })
}

/// The parallel-pair kernel `Eq(f)`: objects are pairs `(a, b): x => y` with
/// `f a = f b`, morphisms `(h, k)` with `k a = a2 h` and `k b = b2 h`.
#[derive(Debug, Clone)]
pub struct EqCategory {
    pub cat: Arc<FinCategory>,
    pub table: Tabulated<(MorId, MorId), crate::fincat::construct::PairMorphism>,
}

pub fn eq_category(f: &FinFunctor, bound: &crate::SizeBound) -> Result<EqCategory> {
    let table =
        crate::fincat::construct::parallel_pairs_where(f.source(), bound, |p, q| f.mor(p) == f.mor(q))?;
    Ok(EqCategory {
        cat: Arc::new(table.cat.clone()),
        table,
    })
}
