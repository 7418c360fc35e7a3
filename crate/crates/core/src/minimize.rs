//! Shrinking of failure witnesses by deleting objects and morphisms.

use std::sync::Arc;

use crate::fincat::{FinCategory, FinFunctor, MorId, Morphism, ObjId};

/// The subcategory on the objects and morphisms marked in `keep_obj` and
/// `keep_mor`, with its inclusion; `None` unless the marked morphisms contain
/// the identities of kept objects, have kept endpoints and are closed under
/// composition.
pub fn subcategory(c: &Arc<FinCategory>, keep_obj: &[bool], keep_mor: &[bool]) -> Option<(Arc<FinCategory>, FinFunctor)> {
    let objects: Vec<ObjId> = c.objects().filter(|&x| keep_obj[x]).collect();
    let morphisms: Vec<MorId> = c.morphisms().filter(|&m| keep_mor[m]).collect();
    if objects.iter().any(|&x| !keep_mor[c.identity(x)]) {
        return None;
    }
    if morphisms.iter().any(|&m| !keep_obj[c.dom(m)] || !keep_obj[c.cod(m)]) {
        return None;
    }
    let mut new_obj = vec![usize::MAX; c.object_count()];
    for (k, &x) in objects.iter().enumerate() {
        new_obj[x] = k;
    }
    let mut new_mor = vec![usize::MAX; c.morphism_count()];
    for (k, &m) in morphisms.iter().enumerate() {
        new_mor[m] = k;
    }
    let mut compose = Vec::new();
    for &f in &morphisms {
        for &g in &morphisms {
            if let Some(gf) = c.try_compose(g, f) {
                if !keep_mor[gf] {
                    return None;
                }
                compose.push((new_mor[g], new_mor[f], new_mor[gf]));
            }
        }
    }
    let sub = FinCategory::from_parts(
        objects.iter().map(|&x| c.object_name(x).to_string()).collect(),
        morphisms
            .iter()
            .map(|&m| Morphism {
                name: c.morphism_name(m).to_string(),
                dom: new_obj[c.dom(m)],
                cod: new_obj[c.cod(m)],
            })
            .collect(),
        objects.iter().map(|&x| new_mor[c.identity(x)]).collect(),
        compose,
    )
    .ok()?;
    let sub = Arc::new(sub);
    let inclusion = FinFunctor::new(sub.clone(), c.clone(), objects, morphisms).ok()?;
    Some((sub, inclusion))
}

/// `f` with its target cut down along `incl`, which must contain the image.
fn corestrict(f: &FinFunctor, incl: &FinFunctor) -> Option<FinFunctor> {
    let mut back_obj = vec![usize::MAX; incl.target().object_count()];
    for x in incl.source().objects() {
        back_obj[incl.ob(x)] = x;
    }
    let mut back_mor = vec![usize::MAX; incl.target().morphism_count()];
    for m in incl.source().morphisms() {
        back_mor[incl.mor(m)] = m;
    }
    let objects: Vec<ObjId> = f.object_map().iter().map(|&y| back_obj[y]).collect();
    let morphisms: Vec<MorId> = f.morphism_map().iter().map(|&m| back_mor[m]).collect();
    if objects.contains(&usize::MAX) || morphisms.contains(&usize::MAX) {
        return None;
    }
    FinFunctor::new(f.source().clone(), incl.source().clone(), objects, morphisms).ok()
}

/// Candidate shrinkings of a category: drop one object together with every
/// morphism touching it, or drop one non-identity morphism.
fn shrinks(c: &Arc<FinCategory>) -> Vec<(Arc<FinCategory>, FinFunctor)> {
    let mut out = Vec::new();
    for x in c.objects() {
        let keep_obj: Vec<bool> = c.objects().map(|y| y != x).collect();
        let keep_mor: Vec<bool> = c.morphisms().map(|m| c.dom(m) != x && c.cod(m) != x).collect();
        out.extend(subcategory(c, &keep_obj, &keep_mor));
    }
    for m in c.morphisms().filter(|&m| !c.is_identity(m)) {
        let keep_obj = vec![true; c.object_count()];
        let keep_mor: Vec<bool> = c.morphisms().map(|n| n != m).collect();
        out.extend(subcategory(c, &keep_obj, &keep_mor));
    }
    out
}

/// Greedily shrink `c` while `fails` keeps holding.
pub fn minimize_category(c: &Arc<FinCategory>, fails: impl Fn(&Arc<FinCategory>) -> bool) -> Arc<FinCategory> {
    let mut cur = c.clone();
    'outer: loop {
        for (sub, _) in shrinks(&cur) {
            if fails(&sub) {
                cur = sub;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Greedily shrink the source of `f` (restricting `f`) and then its target
/// (where the image allows) while `fails` keeps holding.
pub fn minimize_functor(f: &FinFunctor, fails: impl Fn(&FinFunctor) -> bool) -> FinFunctor {
    let mut cur = f.clone();
    'outer: loop {
        for (_, incl) in shrinks(cur.source()) {
            let g = incl.then(&cur);
            if fails(&g) {
                cur = g;
                continue 'outer;
            }
        }
        for (_, incl) in shrinks(cur.target()) {
            if let Some(g) = corestrict(&cur, &incl) {
                if fails(&g) {
                    cur = g;
                    continue 'outer;
                }
            }
        }
        return cur;
    }
}
