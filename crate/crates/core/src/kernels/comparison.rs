use super::comma::{comma, eq_category, triple_comma, Comma, EqCategory, TripleComma};
use crate::error::Result;
use crate::fincat::{pullback, FinFunctor, Pullback, ValidationReport};
use crate::SizeBound;

/// The canonical comparisons `delta: A -> A x_B A`, `gamma: A^2 -> f|f`,
/// `xi: A^3 -> f|f|f` and `eq: A^2 -> Eq(f)`.
///
/// `A^2` and `A^3` are the arrow and composable-pair categories, built as
/// `1_A|1_A` and `1_A|1_A|1_A`.
#[derive(Debug, Clone)]
pub struct ComparisonMaps {
    pub arrows: Comma,
    pub pairs: TripleComma,
    pub kernel_pair: Pullback,
    pub comma: Comma,
    pub triple: TripleComma,
    pub eq: EqCategory,
    pub delta: FinFunctor,
    pub gamma: FinFunctor,
    pub xi: FinFunctor,
    pub eq_f: FinFunctor,
}

pub fn comparison_maps(f: &FinFunctor, bound: &SizeBound) -> Result<ComparisonMaps> {
    let a = f.source().clone();
    let id = FinFunctor::identity(&a);
    let arrows = comma(&id, &id)?;
    bound.check_constructible("A^2", arrows.cat.object_count(), arrows.cat.morphism_count())?;
    let pairs = triple_comma(&id)?;
    let kernel_pair = pullback(f, f)?;
    let ff = comma(f, f)?;
    let triple = triple_comma(f)?;
    let eq = eq_category(f, bound)?;

    let delta = FinFunctor::new(
        a.clone(),
        kernel_pair.cat.clone(),
        a.objects().map(|x| kernel_pair.object_of(x, x).unwrap()).collect(),
        a.morphisms().map(|h| kernel_pair.morphism_of(h, h).unwrap()).collect(),
    )?;

    let lift = |o: (usize, usize, usize)| (o.0, o.1, f.mor(o.2));
    let gamma = FinFunctor::new(
        arrows.cat.clone(),
        ff.cat.clone(),
        arrows.table.objects.iter().map(|&o| {
            let (x, y, al) = lift(o);
            ff.object_of(x, y, al).unwrap()
        }).collect(),
        arrows.table.morphisms.iter().map(|m| {
            ff.morphism_of(lift(m.src), lift(m.dst), m.h, m.k).unwrap()
        }).collect(),
    )?;

    let lift3 = |o: (usize, usize, usize, usize, usize)| (o.0, o.1, o.2, f.mor(o.3), f.mor(o.4));
    let xi = FinFunctor::new(
        pairs.cat.clone(),
        triple.cat.clone(),
        pairs.table.objects.iter().map(|&o| triple.table.object_of(&lift3(o)).unwrap()).collect(),
        pairs.table.morphisms.iter().map(|m| {
            triple
                .table
                .morphism_of(&super::comma::TripleMorphism {
                    src: lift3(m.src),
                    dst: lift3(m.dst),
                    h: m.h,
                    k: m.k,
                    l: m.l,
                })
                .unwrap()
        }).collect(),
    )?;

    let eq_f = FinFunctor::new(
        arrows.cat.clone(),
        eq.cat.clone(),
        arrows.table.objects.iter().map(|o| eq.table.object_of(&(o.2, o.2)).unwrap()).collect(),
        arrows.table.morphisms.iter().map(|m| {
            eq.table
                .morphism_of(&crate::fincat::construct::PairMorphism {
                    src: (m.src.2, m.src.2),
                    dst: (m.dst.2, m.dst.2),
                    h: m.h,
                    k: m.k,
                })
                .unwrap()
        }).collect(),
    )?;
    Ok(ComparisonMaps {
        arrows,
        pairs,
        kernel_pair,
        comma: ff,
        triple,
        eq,
        delta,
        gamma,
        xi,
        eq_f,
    })
}

impl ComparisonMaps {
    /// Each comparison commutes with the projections of its codomain.
    pub fn check_projections(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let id = FinFunctor::identity(self.delta.source());
        if self.delta.then(&self.kernel_pair.p1) != id || self.delta.then(&self.kernel_pair.p2) != id {
            r.push("delta projections", ["delta"]);
        }
        if self.gamma.then(&self.comma.d) != self.arrows.d || self.gamma.then(&self.comma.c) != self.arrows.c {
            r.push("gamma projections", ["gamma"]);
        }
        let (pt, tt) = (&self.pairs.table, &self.triple.table);
        let ok = self.xi.source().objects().all(|o| {
            let (s, t) = (pt.objects[o], tt.objects[self.xi.ob(o)]);
            (s.0, s.1, s.2) == (t.0, t.1, t.2)
        }) && self.xi.source().morphisms().all(|m| {
            let (s, t) = (pt.morphisms[m], tt.morphisms[self.xi.mor(m)]);
            (s.h, s.k, s.l) == (t.h, t.k, t.l)
        });
        if !ok {
            r.push("xi projections", ["xi"]);
        }
        let et = &self.eq.table;
        let a = self.delta.source();
        let ok = self.eq_f.source().objects().all(|o| {
            let (x, y, _) = self.arrows.table.objects[o];
            let (p, _) = et.objects[self.eq_f.ob(o)];
            a.dom(p) == x && a.cod(p) == y
        }) && self.eq_f.source().morphisms().all(|m| {
            let s = self.arrows.table.morphisms[m];
            let t = et.morphisms[self.eq_f.mor(m)];
            (s.h, s.k) == (t.h, t.k)
        });
        if !ok {
            r.push("eq projections", ["eq_f"]);
        }
        r
    }
}
