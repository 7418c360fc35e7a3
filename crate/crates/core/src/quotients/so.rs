use super::bo::{self, Segal};
use super::cocone::CodescentCocone;
use super::relation::{equivalence_relation, push_capped, Failures, PairRelation};
use super::verdict::CongruenceVerdict;
use crate::error::{Error, Result};
use crate::fincat::{full_subcategory, FinFunctor};
use crate::kernels::SoKernelData;

pub(crate) const EQREL_PREFIX: &str = "(b) (Xdj, Xcj) is an equivalence relation: ";
pub(crate) const FULL_MONIC: &str = "(c) Xj is full monic";
pub(crate) const PRESERVES_IDENTITIES: &str = "(d) j is an internal functor: identities";
pub(crate) const PRESERVES_COMPOSITION: &str = "(d) j is an internal functor: composition";

/// Collisions, non-full and non-faithful hom-sets of a functor.
pub(crate) fn full_monic_failures(f: &FinFunctor) -> Failures {
    let (a, b) = (f.source(), f.target());
    let mut out = Vec::new();
    let mut seen = vec![None; b.object_count()];
    for x in a.objects() {
        if let Some(prev) = seen[f.ob(x)].replace(x) {
            push_capped(&mut out, vec![
                "not injective on objects".into(),
                a.object_name(prev).to_string(),
                a.object_name(x).to_string(),
            ]);
        }
    }
    for x in a.objects() {
        for y in a.objects() {
            let mut image = f.hom_map(x, y);
            let n = image.len();
            image.sort_unstable();
            image.dedup();
            if image.len() != n {
                push_capped(&mut out, vec![
                    "not faithful".into(),
                    format!("hom({}, {})", a.object_name(x), a.object_name(y)),
                ]);
            }
            if image.len() != b.hom(f.ob(x), f.ob(y)).len() {
                push_capped(&mut out, vec![
                    "not full".into(),
                    format!("hom({}, {})", a.object_name(x), a.object_name(y)),
                ]);
            }
        }
    }
    out
}

fn identity_failures(x: &SoKernelData, r: &FinFunctor) -> Failures {
    let bo = &x.bo;
    let jr = r.then(&x.j);
    let mut out = Vec::new();
    for o in bo.x1.objects() {
        if jr.ob(o) != bo.i.ob(o) {
            push_capped(&mut out, vec![format!("X1 object {}", bo.x1.object_name(o))]);
        }
    }
    for h in bo.x1.morphisms() {
        if jr.mor(h) != bo.i.mor(h) {
            push_capped(&mut out, vec![format!("X1 morphism {}", bo.x1.morphism_name(h))]);
        }
    }
    out
}

fn composition_failures(x: &SoKernelData, rel: &PairRelation, segal: &Segal) -> Failures {
    let (bo, e) = (&x.bo, &x.x2p);
    let dj = x.j.then(&bo.d);
    let cj = x.j.then(&bo.c);
    let mut out = Vec::new();
    for e1 in e.objects() {
        for e2 in e.objects() {
            if cj.ob(e1) != dj.ob(e2) {
                continue;
            }
            let Some(&e3) = rel.objects.get(&(dj.ob(e1), cj.ob(e2))) else {
                continue;
            };
            if segal.compose_objects(x.j.ob(e1), x.j.ob(e2)) != Some(x.j.ob(e3)) {
                push_capped(&mut out, vec![
                    format!("X2' object {}", e.object_name(e1)),
                    format!("X2' object {}", e.object_name(e2)),
                ]);
            }
        }
    }
    for g1 in e.morphisms() {
        for g2 in e.morphisms() {
            if cj.mor(g1) != dj.mor(g2) {
                continue;
            }
            let Some(&g3) = rel.morphisms.get(&(dj.mor(g1), cj.mor(g2))) else {
                continue;
            };
            if segal.compose_morphisms(x.j.mor(g1), x.j.mor(g2)) != Some(x.j.mor(g3)) {
                push_capped(&mut out, vec![
                    format!("X2' morphism {}", e.morphism_name(g1)),
                    format!("X2' morphism {}", e.morphism_name(g2)),
                ]);
            }
        }
    }
    out
}

pub(crate) fn check(x: &SoKernelData, verdict: &mut CongruenceVerdict) -> Result<()> {
    bo::check(&x.bo, verdict, "(a) underlying catead: ")?;
    let dj = x.j.then(&x.bo.d);
    let cj = x.j.then(&x.bo.c);
    let (rel, failures) = equivalence_relation(&dj, &cj);
    for (name, f) in failures.into_named() {
        verdict.record(&format!("{EQREL_PREFIX}{name}"), f);
    }
    verdict.record(FULL_MONIC, full_monic_failures(&x.j));
    // (d) only makes sense once X2' carries the induced category structure.
    if let Some(r) = rel.reflexivity() {
        verdict.record(PRESERVES_IDENTITIES, identity_failures(x, &r));
    }
    let (segal, segal_failures) = Segal::new(&x.bo)?;
    if segal_failures.is_empty() {
        verdict.record(PRESERVES_COMPOSITION, composition_failures(x, &rel, &segal));
    }
    Ok(())
}

/// The bo quotient `q: X1 -> Q` followed by `k: Q -> R`, where `R` is the
/// full subcategory of `Q` on the least element of each class of the
/// object relation induced by `X2'`.
pub(crate) struct SoCocone {
    pub cocone: CodescentCocone,
    pub bo: CodescentCocone,
    pub k: FinFunctor,
}

pub(crate) fn cocone(x: &SoKernelData) -> Result<SoCocone> {
    let bo_cocone = bo::cocone(&x.bo)?;
    let qcat = bo_cocone.vertex().clone();
    let dj = x.j.then(&x.bo.d);
    let cj = x.j.then(&x.bo.c);
    let (rel, _) = equivalence_relation(&dj, &cj);
    let n = x.bo.x1.object_count();
    // phi(x, y): x -> y in Q whenever x ~ y
    let phi = |a: usize, b: usize| -> Result<usize> {
        let e = rel.objects.get(&(a, b)).ok_or_else(|| {
            Error::Precondition(format!("objects {a} and {b} are not related"))
        })?;
        Ok(bo_cocone.theta.component(x.j.ob(*e)))
    };
    let rep: Vec<usize> = (0..n)
        .map(|a| (0..n).find(|&b| rel.objects.contains_key(&(a, b))).unwrap_or(a))
        .collect();
    let mut reps = rep.clone();
    reps.sort_unstable();
    reps.dedup();
    let (rcat, inclusion) = full_subcategory(&qcat, &reps)?;
    let mut obj_pos = vec![usize::MAX; n];
    for (k, &r) in reps.iter().enumerate() {
        obj_pos[r] = k;
    }
    let mut mor_pos = vec![usize::MAX; qcat.morphism_count()];
    for m in rcat.morphisms() {
        mor_pos[inclusion.mor(m)] = m;
    }
    let k_mor = qcat
        .morphisms()
        .map(|al| {
            let (a, b) = (qcat.dom(al), qcat.cod(al));
            let moved = qcat.compose_path(&[phi(rep[a], a)?, al, phi(b, rep[b])?]);
            Ok(mor_pos[moved])
        })
        .collect::<Result<Vec<_>>>()?;
    let k = FinFunctor::new(qcat, rcat, (0..n).map(|a| obj_pos[rep[a]]).collect(), k_mor)?;
    let cocone = CodescentCocone {
        q: bo_cocone.q.then(&k),
        theta: bo_cocone.theta.whisker_left(&k),
    };
    Ok(SoCocone {
        cocone,
        bo: bo_cocone,
        k,
    })
}
