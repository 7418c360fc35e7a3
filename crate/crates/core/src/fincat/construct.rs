//! Finite-limit toolkit: pullbacks, products, full subcategories, functor
//! categories and the parallel-pair power `A^P`.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use super::category::{FinCategory, MorId, ObjId};
use super::enumerate::{enumerate_functors, for_each_functor_raw};
use super::functor::{same_category, FinFunctor};
use super::nat::NatTransf;
use super::shapes;
use super::tabulate::{tabulate, Tabulated};
use crate::bound::SizeBound;
use crate::error::{Error, Result};

/// Pullback of a cospan `A -F-> C <-G- B`, with its projections.
#[derive(Debug, Clone)]
pub struct Pullback {
    pub cat: Arc<FinCategory>,
    pub p1: FinFunctor,
    pub p2: FinFunctor,
    table: Tabulated<(ObjId, ObjId), (MorId, MorId)>,
}

impl Pullback {
    pub fn object_of(&self, a: ObjId, b: ObjId) -> Option<ObjId> {
        self.table.object_of(&(a, b))
    }

    pub fn morphism_of(&self, f: MorId, g: MorId) -> Option<MorId> {
        self.table.morphism_of(&(f, g))
    }

    pub fn object_pair(&self, x: ObjId) -> (ObjId, ObjId) {
        self.table.objects[x]
    }

    pub fn morphism_pair(&self, m: MorId) -> (MorId, MorId) {
        self.table.morphisms[m]
    }

    /// The functor into the pullback induced by a commuting cone `(H, K)`.
    pub fn mediate(&self, h: &FinFunctor, k: &FinFunctor) -> Result<FinFunctor> {
        let x = h.source();
        let objects = x
            .objects()
            .map(|o| self.object_of(h.ob(o), k.ob(o)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Precondition("cone does not commute on objects".into()))?;
        let morphisms = x
            .morphisms()
            .map(|m| self.morphism_of(h.mor(m), k.mor(m)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Precondition("cone does not commute on morphisms".into()))?;
        FinFunctor::new(x.clone(), self.cat.clone(), objects, morphisms)
    }

    /// Number of functors `M: X -> pullback` with `p1 M = H` and `p2 M = K`,
    /// found by exhaustive enumeration. The universal property says this is 1.
    pub fn count_mediators(
        &self,
        h: &FinFunctor,
        k: &FinFunctor,
        bound: &SizeBound,
    ) -> Result<usize> {
        let candidates = enumerate_functors(h.source(), &self.cat, bound)?;
        Ok(candidates
            .iter()
            .filter(|m| m.then(&self.p1) == *h && m.then(&self.p2) == *k)
            .count())
    }
}

/// Strict pullback of `F: A -> C` and `G: B -> C`.
pub fn pullback(f: &FinFunctor, g: &FinFunctor) -> Result<Pullback> {
    if !same_category(f.target(), g.target()) {
        return Err(Error::Precondition("pullback of functors with different targets".into()));
    }
    let (a, b) = (f.source().clone(), g.source().clone());
    let mut objects = Vec::new();
    for x in a.objects() {
        for y in b.objects() {
            if f.ob(x) == g.ob(y) {
                objects.push(((x, y), format!("({},{})", a.object_name(x), b.object_name(y))));
            }
        }
    }
    let mut morphisms = Vec::new();
    for m in a.morphisms() {
        for n in b.morphisms() {
            if f.mor(m) == g.mor(n) {
                morphisms.push((
                    (m, n),
                    format!("({},{})", a.morphism_name(m), b.morphism_name(n)),
                    (a.dom(m), b.dom(n)),
                    (a.cod(m), b.cod(n)),
                ));
            }
        }
    }
    let table = tabulate(
        objects,
        morphisms,
        |&(x, y)| (a.identity(x), b.identity(y)),
        |&(g1, g2), &(f1, f2)| (a.compose(g1, f1), b.compose(g2, f2)),
    )?;
    let cat = Arc::new(table.cat.clone());
    let p1 = FinFunctor::new(
        cat.clone(),
        a.clone(),
        table.objects.iter().map(|p| p.0).collect(),
        table.morphisms.iter().map(|p| p.0).collect(),
    )?;
    let p2 = FinFunctor::new(
        cat.clone(),
        b.clone(),
        table.objects.iter().map(|p| p.1).collect(),
        table.morphisms.iter().map(|p| p.1).collect(),
    )?;
    Ok(Pullback { cat, p1, p2, table })
}

/// Product `A x B`, as the pullback over the terminal category.
pub fn product(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> Result<Pullback> {
    let one = Arc::new(shapes::terminal());
    let fa = FinFunctor::constant(a, &one, 0);
    let fb = FinFunctor::constant(b, &one, 0);
    pullback(&fa, &fb)
}

/// Coproduct `A + B` with its two injections. Cells are tagged `.0` and `.1`.
pub fn coproduct(
    a: &Arc<FinCategory>,
    b: &Arc<FinCategory>,
) -> Result<(Arc<FinCategory>, FinFunctor, FinFunctor)> {
    let parts = [a, b];
    let mut objects = Vec::new();
    let mut morphisms = Vec::new();
    for (side, c) in parts.iter().enumerate() {
        for x in c.objects() {
            objects.push(((side, x), format!("{}.{side}", c.object_name(x))));
        }
        for m in c.morphisms() {
            morphisms.push((
                (side, m),
                format!("{}.{side}", c.morphism_name(m)),
                (side, c.dom(m)),
                (side, c.cod(m)),
            ));
        }
    }
    let table = tabulate(
        objects,
        morphisms,
        |&(side, x)| (side, parts[side].identity(x)),
        |&(side, g), &(_, f)| (side, parts[side].compose(g, f)),
    )?;
    let cat = Arc::new(table.cat.clone());
    let inj = |side: usize| {
        let c = parts[side];
        FinFunctor::new(
            c.clone(),
            cat.clone(),
            c.objects().map(|x| table.object_of(&(side, x)).unwrap()).collect(),
            c.morphisms().map(|m| table.morphism_of(&(side, m)).unwrap()).collect(),
        )
    };
    let (i0, i1) = (inj(0)?, inj(1)?);
    Ok((cat, i0, i1))
}

/// The full subcategory on `objects` (in the given order), with its inclusion.
pub fn full_subcategory(
    c: &Arc<FinCategory>,
    objects: &[ObjId],
) -> Result<(Arc<FinCategory>, FinFunctor)> {
    let obj_cells: Vec<_> = objects
        .iter()
        .map(|&x| (x, c.object_name(x).to_string()))
        .collect();
    let mut mor_cells = Vec::new();
    for &x in objects {
        for &y in objects {
            for &m in c.hom(x, y) {
                mor_cells.push((m, c.morphism_name(m).to_string(), x, y));
            }
        }
    }
    mor_cells.sort_by_key(|cell| cell.0);
    let table = tabulate(obj_cells, mor_cells, |&x| c.identity(x), |&g, &f| c.compose(g, f))?;
    let sub = Arc::new(table.cat.clone());
    let inclusion = FinFunctor::new(
        sub.clone(),
        c.clone(),
        table.objects.clone(),
        table.morphisms.clone(),
    )?;
    Ok((sub, inclusion))
}

/// All natural transformations `F => G`, with components chosen in
/// lexicographic order.
pub fn transformations_between(f: &FinFunctor, g: &FinFunctor) -> Vec<NatTransf> {
    let mut out = Vec::new();
    let mut comps: Vec<MorId> = Vec::with_capacity(f.source().object_count());
    fn go(
        f: &FinFunctor,
        g: &FinFunctor,
        comps: &mut Vec<MorId>,
        out: &mut Vec<NatTransf>,
    ) {
        let j = f.source();
        let c = f.target();
        let k = comps.len();
        if k == j.object_count() {
            out.push(NatTransf::new(f.clone(), g.clone(), comps.clone()).unwrap());
            return;
        }
        for &a in c.hom(f.ob(k), g.ob(k)) {
            comps.push(a);
            // naturality on every morphism between already-chosen objects
            let ok = (0..=k).all(|x| {
                [(x, k), (k, x)].iter().all(|&(s, t)| {
                    j.hom(s, t).iter().all(|&m| {
                        c.compose(g.mor(m), comps[s]) == c.compose(comps[t], f.mor(m))
                    })
                })
            });
            if ok {
                go(f, g, comps, out);
            }
            comps.pop();
        }
    }
    go(f, g, &mut comps, &mut out);
    out
}

/// The functor category `[J, C]`: objects all functors, morphisms all
/// natural transformations, composed pointwise.
#[derive(Debug, Clone)]
pub struct FunctorCategory {
    pub cat: Arc<FinCategory>,
    pub functors: Vec<FinFunctor>,
    pub transformations: Vec<NatTransf>,
    obj_index: HashMap<Vec<MorId>, ObjId>,
    mor_index: HashMap<(ObjId, ObjId, Vec<MorId>), MorId>,
}

impl FunctorCategory {
    pub fn object_of(&self, f: &FinFunctor) -> Option<ObjId> {
        self.obj_index.get(f.morphism_map()).copied()
    }

    pub fn morphism_of(&self, t: &NatTransf) -> Option<MorId> {
        let s = self.object_of(t.source())?;
        let u = self.object_of(t.target())?;
        self.mor_index.get(&(s, u, t.components().to_vec())).copied()
    }
}

fn functor_label(f: &FinFunctor) -> String {
    let c = f.target();
    let parts: Vec<&str> = f.morphism_map().iter().map(|&m| c.morphism_name(m)).collect();
    format!("<{}>", parts.join(","))
}

pub fn functor_category(
    j: &Arc<FinCategory>,
    c: &Arc<FinCategory>,
    bound: &SizeBound,
) -> Result<FunctorCategory> {
    bound.check_enumerable("functor_category source", j)?;
    bound.check_enumerable("functor_category target", c)?;
    let mut functors = Vec::new();
    let _ = for_each_functor_raw(j, c, &mut |objects, mors| {
        functors.push(FinFunctor::new(j.clone(), c.clone(), objects.to_vec(), mors.to_vec()).unwrap());
        ControlFlow::Continue(())
    });
    bound.check_constructible("functor_category", functors.len(), 0)?;
    let mut transformations = Vec::new();
    let mut ends = Vec::new();
    for (s, f) in functors.iter().enumerate() {
        for (t, g) in functors.iter().enumerate() {
            for nt in transformations_between(f, g) {
                ends.push((s, t));
                transformations.push(nt);
            }
            bound.check_constructible("functor_category", functors.len(), transformations.len())?;
        }
    }
    let labels: Vec<String> = functors.iter().map(functor_label).collect();
    let obj_cells: Vec<_> = (0..functors.len()).map(|k| (k, labels[k].clone())).collect();
    let mor_cells: Vec<_> = transformations
        .iter()
        .zip(&ends)
        .map(|(t, &(s, u))| {
            let comps: Vec<&str> = t.components().iter().map(|&m| c.morphism_name(m)).collect();
            (
                (s, u, t.components().to_vec()),
                format!("{}=>{}[{}]", labels[s], labels[u], comps.join(",")),
                s,
                u,
            )
        })
        .collect();
    let table = tabulate(
        obj_cells,
        mor_cells,
        |&k| {
            let f = &functors[k];
            (k, k, f.object_map().iter().map(|&y| c.identity(y)).collect())
        },
        |(_, u, gc), (s, _, fc)| {
            (*s, *u, gc.iter().zip(fc).map(|(&b, &a)| c.compose(b, a)).collect())
        },
    )?;
    let obj_index = functors
        .iter()
        .enumerate()
        .map(|(k, f)| (f.morphism_map().to_vec(), k))
        .collect();
    let mor_index = table
        .morphisms
        .iter()
        .enumerate()
        .map(|(k, key)| (key.clone(), k))
        .collect();
    Ok(FunctorCategory {
        cat: Arc::new(table.cat),
        functors,
        transformations,
        obj_index,
        mor_index,
    })
}

/// Key of a morphism of `A^P`: `(h, k)` from pair `(a, b)` to pair `(a2, b2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairMorphism {
    pub src: (MorId, MorId),
    pub dst: (MorId, MorId),
    pub h: MorId,
    pub k: MorId,
}

/// The category `A^P` built directly: objects are parallel pairs
/// `(a, b): x => y`, morphisms `(h: x -> x2, k: y -> y2)` with
/// `k a = a2 h` and `k b = b2 h`.
pub fn parallel_pairs(
    a: &Arc<FinCategory>,
    bound: &SizeBound,
) -> Result<Tabulated<(MorId, MorId), PairMorphism>> {
    parallel_pairs_where(a, bound, |_, _| true)
}

/// The full subcategory of `A^P` on the pairs accepted by `keep`.
pub fn parallel_pairs_where(
    a: &Arc<FinCategory>,
    bound: &SizeBound,
    keep: impl Fn(MorId, MorId) -> bool,
) -> Result<Tabulated<(MorId, MorId), PairMorphism>> {
    let mut pairs = Vec::new();
    for x in a.objects() {
        for y in a.objects() {
            let hom = a.hom(x, y);
            for &p in hom {
                for &q in hom {
                    if keep(p, q) {
                        pairs.push((p, q));
                    }
                }
            }
        }
    }
    bound.check_constructible("parallel pairs", pairs.len(), 0)?;
    let name = |(p, q): (MorId, MorId)| format!("({},{})", a.morphism_name(p), a.morphism_name(q));
    let mut morphisms = Vec::new();
    for &(p, q) in &pairs {
        for &(p2, q2) in &pairs {
            for &h in a.hom(a.dom(p), a.dom(p2)) {
                for &k in a.hom(a.cod(p), a.cod(p2)) {
                    if a.compose(k, p) == a.compose(p2, h) && a.compose(k, q) == a.compose(q2, h) {
                        morphisms.push((
                            PairMorphism { src: (p, q), dst: (p2, q2), h, k },
                            format!(
                                "({},{}):{}->{}",
                                a.morphism_name(h),
                                a.morphism_name(k),
                                name((p, q)),
                                name((p2, q2))
                            ),
                            (p, q),
                            (p2, q2),
                        ));
                    }
                }
            }
        }
        bound.check_constructible("parallel pairs", pairs.len(), morphisms.len())?;
    }
    let objects = pairs.iter().map(|&pq| (pq, name(pq))).collect();
    tabulate(
        objects,
        morphisms,
        |&(p, q)| PairMorphism {
            src: (p, q),
            dst: (p, q),
            h: a.identity(a.dom(p)),
            k: a.identity(a.cod(p)),
        },
        |g, f| PairMorphism {
            src: f.src,
            dst: g.dst,
            h: a.compose(g.h, f.h),
            k: a.compose(g.k, f.k),
        },
    )
}
