use std::ops::ControlFlow;
use std::sync::Arc;

use super::category::{FinCategory, MorId, ObjId};
use super::functor::FinFunctor;
use crate::bound::SizeBound;
use crate::error::Result;

/// Backtracking search for morphism maps over a fixed object map.
///
/// Whenever two composable morphisms are both assigned, the image of their
/// composite is forced, so most branches are decided by propagation.
pub(crate) struct MorphismSearch<'a> {
    src: &'a FinCategory,
    tgt: &'a FinCategory,
    objects: &'a [ObjId],
    injective: bool,
    assign: Vec<Option<MorId>>,
    used: Vec<bool>,
    trail: Vec<MorId>,
    into: Vec<Vec<MorId>>,
    out_of: Vec<Vec<MorId>>,
}

impl<'a> MorphismSearch<'a> {
    pub(crate) fn new(
        src: &'a FinCategory,
        tgt: &'a FinCategory,
        objects: &'a [ObjId],
        injective: bool,
    ) -> Self {
        let mut into = vec![Vec::new(); src.object_count()];
        let mut out_of = vec![Vec::new(); src.object_count()];
        for f in src.morphisms() {
            into[src.cod(f)].push(f);
            out_of[src.dom(f)].push(f);
        }
        MorphismSearch {
            src,
            tgt,
            objects,
            injective,
            assign: vec![None; src.morphism_count()],
            used: vec![false; tgt.morphism_count()],
            trail: Vec::new(),
            into,
            out_of,
        }
    }

    /// Visit every valid morphism map, in lexicographic order.
    pub(crate) fn run(
        &mut self,
        visit: &mut dyn FnMut(&[MorId]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        for x in self.src.objects() {
            let id = self.src.identity(x);
            let img = self.tgt.identity(self.objects[x]);
            match self.assign[id] {
                Some(v) if v != img => return ControlFlow::Continue(()),
                Some(_) => {}
                None => {
                    if !self.set(id, img) {
                        return ControlFlow::Continue(());
                    }
                }
            }
        }
        if !self.propagate(0) {
            return ControlFlow::Continue(());
        }
        self.descend(0, visit)
    }

    fn set(&mut self, f: MorId, img: MorId) -> bool {
        if self.injective && self.used[img] {
            return false;
        }
        self.assign[f] = Some(img);
        self.used[img] = true;
        self.trail.push(f);
        true
    }

    fn undo(&mut self, len: usize) {
        while self.trail.len() > len {
            let f = self.trail.pop().unwrap();
            let img = self.assign[f].take().unwrap();
            self.used[img] = false;
        }
    }

    fn check_pair(&mut self, g: MorId, f: MorId) -> bool {
        let (Some(ig), Some(jf)) = (self.assign[g], self.assign[f]) else {
            return true;
        };
        let gf = self.src.compose(g, f);
        let Some(img) = self.tgt.try_compose(ig, jf) else {
            return false;
        };
        match self.assign[gf] {
            Some(v) => v == img,
            None => self.set(gf, img),
        }
    }

    fn propagate(&mut self, from: usize) -> bool {
        let mut k = from;
        while k < self.trail.len() {
            let m = self.trail[k];
            k += 1;
            let (x, y) = (self.src.dom(m), self.src.cod(m));
            for idx in 0..self.into[x].len() {
                let f = self.into[x][idx];
                if !self.check_pair(m, f) {
                    return false;
                }
            }
            for idx in 0..self.out_of[y].len() {
                let g = self.out_of[y][idx];
                if !self.check_pair(g, m) {
                    return false;
                }
            }
        }
        true
    }

    fn descend(
        &mut self,
        start: MorId,
        visit: &mut dyn FnMut(&[MorId]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let Some(f) = (start..self.src.morphism_count()).find(|&f| self.assign[f].is_none()) else {
            let map: Vec<MorId> = self.assign.iter().map(|a| a.unwrap()).collect();
            return visit(&map);
        };
        let (x, y) = (self.objects[self.src.dom(f)], self.objects[self.src.cod(f)]);
        let tgt = self.tgt;
        for &cand in tgt.hom(x, y) {
            let mark = self.trail.len();
            if self.set(f, cand) && self.propagate(mark) {
                self.descend(f + 1, visit)?;
            }
            self.undo(mark);
        }
        ControlFlow::Continue(())
    }
}

/// Visit every object map `J -> C` compatible with nonempty hom-sets, in
/// lexicographic order.
pub(crate) fn for_each_object_map(
    j: &FinCategory,
    c: &FinCategory,
    bijective: bool,
    visit: &mut dyn FnMut(&[ObjId]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn go(
        j: &FinCategory,
        c: &FinCategory,
        bijective: bool,
        map: &mut Vec<ObjId>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[ObjId]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let k = map.len();
        if k == j.object_count() {
            return visit(map);
        }
        for t in c.objects() {
            if bijective && used[t] {
                continue;
            }
            let ok = (0..=k).all(|x| {
                let tx = if x == k { t } else { map[x] };
                let fwd = j.hom(x, k).len();
                let bwd = j.hom(k, x).len();
                let cf = c.hom(tx, t).len();
                let cb = c.hom(t, tx).len();
                if bijective {
                    fwd == cf && bwd == cb
                } else {
                    (fwd == 0 || cf > 0) && (bwd == 0 || cb > 0)
                }
            });
            if !ok {
                continue;
            }
            map.push(t);
            used[t] = true;
            let flow = go(j, c, bijective, map, used, visit);
            used[t] = false;
            map.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    if bijective && j.object_count() != c.object_count() {
        return ControlFlow::Continue(());
    }
    let mut used = vec![false; c.object_count()];
    go(j, c, bijective, &mut Vec::new(), &mut used, visit)
}

/// Visit every functor `J -> C` as raw `(object map, morphism map)` tables,
/// without any size check.
pub(crate) fn for_each_functor_raw(
    j: &FinCategory,
    c: &FinCategory,
    visit: &mut dyn FnMut(&[ObjId], &[MorId]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    for_each_object_map(j, c, false, &mut |objects| {
        let mut search = MorphismSearch::new(j, c, objects, false);
        search.run(&mut |mors| visit(objects, mors))
    })
}

/// All functors `J -> C`, exhaustive, duplicate-free, in lexicographic
/// order of (object map, morphism map).
pub fn enumerate_functors(
    j: &Arc<FinCategory>,
    c: &Arc<FinCategory>,
    bound: &SizeBound,
) -> Result<Vec<FinFunctor>> {
    bound.check_enumerable("enumerate_functors source", j)?;
    bound.check_enumerable("enumerate_functors target", c)?;
    let mut out = Vec::new();
    let _ = for_each_functor_raw(j, c, &mut |objects, mors| {
        out.push(FinFunctor::new(j.clone(), c.clone(), objects.to_vec(), mors.to_vec()).unwrap());
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Number of functors `J -> C`; same bound as [`enumerate_functors`].
pub fn count_functors(j: &FinCategory, c: &FinCategory, bound: &SizeBound) -> Result<usize> {
    bound.check_enumerable("count_functors source", j)?;
    bound.check_enumerable("count_functors target", c)?;
    let mut n = 0;
    let _ = for_each_functor_raw(j, c, &mut |_, _| {
        n += 1;
        ControlFlow::Continue(())
    });
    Ok(n)
}
