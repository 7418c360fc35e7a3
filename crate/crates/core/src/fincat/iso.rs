use std::ops::ControlFlow;
use std::sync::Arc;

use super::category::FinCategory;
use super::enumerate::{for_each_object_map, MorphismSearch};
use super::functor::FinFunctor;
use crate::bound::SizeBound;
use crate::error::Result;

fn hom_profile(c: &FinCategory) -> Vec<(usize, usize, usize)> {
    // (|C(x,x)|, out-degree, in-degree) per object, sorted
    let mut v: Vec<_> = c
        .objects()
        .map(|x| {
            let out: usize = c.objects().map(|y| c.hom(x, y).len()).sum();
            let inn: usize = c.objects().map(|y| c.hom(y, x).len()).sum();
            (c.hom(x, x).len(), out, inn)
        })
        .collect();
    v.sort_unstable();
    v
}

/// Find an isomorphism `C -> D`, the first in lexicographic order.
pub fn categories_isomorphic(
    c: &Arc<FinCategory>,
    d: &Arc<FinCategory>,
    bound: &SizeBound,
) -> Result<Option<FinFunctor>> {
    find_isomorphism(c, d, bound, |_| true)
}

/// Find the first isomorphism `C -> D` accepted by `accept`.
pub fn find_isomorphism(
    c: &Arc<FinCategory>,
    d: &Arc<FinCategory>,
    bound: &SizeBound,
    mut accept: impl FnMut(&FinFunctor) -> bool,
) -> Result<Option<FinFunctor>> {
    for cat in [c, d] {
        bound.check_constructible(
            "categories_isomorphic",
            cat.object_count(),
            cat.morphism_count(),
        )?;
    }
    if c.object_count() != d.object_count()
        || c.morphism_count() != d.morphism_count()
        || hom_profile(c) != hom_profile(d)
    {
        return Ok(None);
    }
    let mut found = None;
    let _ = for_each_object_map(c, d, true, &mut |objects| {
        let mut search = MorphismSearch::new(c, d, objects, true);
        search.run(&mut |mors| {
            let f = FinFunctor::new(c.clone(), d.clone(), objects.to_vec(), mors.to_vec())
                .expect("search yields in-range maps");
            if accept(&f) {
                found = Some(f);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
    });
    Ok(found)
}
