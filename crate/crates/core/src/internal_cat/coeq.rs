use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use serde::Serialize;

use super::base::{Base, BaseMap, BasePullback};
use super::category::{CompTable, InternalCategory, InternalFunctor};
use super::factor::internal_classify;
use crate::error::{Error, Result};

/// Sizes of a Segal comparison `Qn -> Q1 x_Q0 ... x_Q0 Q1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegalCheck {
    pub level: usize,
    pub domain_size: usize,
    pub codomain_size: usize,
    pub invertible: bool,
}

#[derive(Debug, Clone)]
pub struct FfCoequalizer {
    pub quotient: Arc<InternalCategory>,
    pub q: InternalFunctor,
    pub segal: Vec<SegalCheck>,
    pub q_fully_faithful: bool,
    /// `(s, t): E -> X x_Q X` is invertible.
    pub kernel_pair_recovered: bool,
}

/// The first two nerve levels above `C1` of an internal category.
struct Nerve {
    c2: BasePullback,
    /// Triples `((f, g), h)`, over `X2` and `X1`.
    c3: BasePullback,
}

impl Nerve {
    fn new(x: &InternalCategory) -> Nerve {
        let c2 = x.c2();
        let c3 = x.base.pullback(&c2.p2.then(&x.c), &x.d);
        Nerve { c2, c3 }
    }

    /// Edges `(f, g, h)` of a 3-simplex.
    fn edges3(&self, at: usize, e: usize) -> (usize, usize, usize) {
        let (fg, h) = self.c3.pairs[at][e];
        let (f, g) = self.c2.pairs[at][fg];
        (f, g, h)
    }
}

/// Induced map on nerve level 2 and 3 of a functor `s: E -> X`.
fn level_maps(s: &InternalFunctor, ne: &Nerve, nx: &Nerve) -> (BaseMap, BaseMap) {
    let s2 = nx.c2.mediate(&ne.c2.p1.then(&s.f1), &ne.c2.p2.then(&s.f1)).expect("functors preserve composability");
    let s3 = nx.c3.mediate(&ne.c3.p1.then(&s2), &ne.c3.p2.then(&s.f1)).expect("functors preserve composability");
    (s2, s3)
}

/// The map `QA -> QB` induced by `h: A -> B` through the quotients
/// `qa: A -> QA` and `qb: B -> QB`; `None` if `h` does not respect them.
fn induced(qa: &BaseMap, h: &BaseMap, qb: &BaseMap) -> Option<BaseMap> {
    let mut components = Vec::with_capacity(qa.components.len());
    for at in 0..qa.components.len() {
        let mut out = vec![usize::MAX; qa.target.fibres[at]];
        for (a, &cls) in qa.components[at].iter().enumerate() {
            let v = qb.at(at, h.at(at, a));
            if out[cls] == usize::MAX {
                out[cls] = v;
            } else if out[cls] != v {
                return None;
            }
        }
        components.push(out);
    }
    Some(BaseMap {
        source: qa.target.clone(),
        target: qb.target.clone(),
        components,
    })
}

/// `(s, t)` is jointly monic, reflexive, symmetric and transitive at a level.
fn check_relation(base: &Base, s: &BaseMap, t: &BaseMap, level: &str) -> Result<()> {
    let ix = base.index();
    for at in ix.objects() {
        let n = s.target.fibres[at];
        let mut pairs = HashSet::new();
        for e in 0..s.source.fibres[at] {
            if !pairs.insert((s.at(at, e), t.at(at, e))) {
                return Err(Error::NotFFEquivalenceRelation(format!(
                    "(s, t) is not jointly monic on {level} at {}",
                    ix.object_name(at)
                )));
            }
        }
        let fail = |law: &str| {
            Err(Error::NotFFEquivalenceRelation(format!("not {law} on {level} at {}", ix.object_name(at))))
        };
        if (0..n).any(|a| !pairs.contains(&(a, a))) {
            return fail("reflexive");
        }
        if pairs.iter().any(|&(a, b)| !pairs.contains(&(b, a))) {
            return fail("symmetric");
        }
        for &(a, b) in &pairs {
            for c in 0..n {
                if pairs.contains(&(b, c)) && !pairs.contains(&(a, c)) {
                    return fail("transitive");
                }
            }
        }
    }
    Ok(())
}

/// The quotient of a fully faithful internal equivalence relation
/// `s, t: E => X`, computed as the pointwise coequaliser of nerve levels
/// 0, 1 and 2. Segal comparisons are verified at levels 2 and 3.
pub fn internal_ff_coequalizer(s: &InternalFunctor, t: &InternalFunctor) -> Result<FfCoequalizer> {
    if s.source != t.source || s.target != t.target {
        return Err(Error::NotFFEquivalenceRelation("s and t are not parallel".into()));
    }
    for (name, f) in [("s", s), ("t", t)] {
        let v = f.validate();
        if !v.is_valid() {
            return Err(Error::NotFFEquivalenceRelation(format!("{name} is not an internal functor: {v}")));
        }
        if !internal_classify(f).ff {
            return Err(Error::NotFFEquivalenceRelation(format!("{name} is not fully faithful")));
        }
    }
    let (e, x) = (&s.source, &s.target);
    let base = &x.base;
    check_relation(base, &s.f0, &t.f0, "objects")?;
    check_relation(base, &s.f1, &t.f1, "morphisms")?;

    let (ne, nx) = (Nerve::new(e), Nerve::new(x));
    let (s2, s3) = level_maps(s, &ne, &nx);
    let (t2, t3) = level_maps(t, &ne, &nx);
    let q0 = base.coequalizer(&s.f0, &t.f0);
    let q1 = base.coequalizer(&s.f1, &t.f1);
    let q2 = base.coequalizer(&s2, &t2);
    let q3 = base.coequalizer(&s3, &t3);

    let bug = |what: &str| Error::SegalFailure {
        level: 1,
        detail: format!("{what} does not descend to the quotient"),
    };
    let dq = induced(&q1, &x.d, &q0).ok_or_else(|| bug("d"))?;
    let cq = induced(&q1, &x.c, &q0).ok_or_else(|| bug("c"))?;
    let iq = induced(&q0, &x.i, &q1).ok_or_else(|| bug("i"))?;
    let first = induced(&q2, &nx.c2.p1, &q1).ok_or_else(|| bug("first face"))?;
    let second = induced(&q2, &nx.c2.p2, &q1).ok_or_else(|| bug("second face"))?;
    let comp_x = x.comp_map(&nx.c2);
    let mq = induced(&q2, &comp_x, &q1).ok_or_else(|| bug("composition"))?;

    let mut segal = Vec::new();
    let q1q1 = base.pullback(&cq, &dq);
    let seg2 = q1q1.mediate(&first, &second).ok_or_else(|| Error::SegalFailure {
        level: 2,
        detail: "faces of a 2-simplex are not composable".into(),
    })?;
    segal.push(SegalCheck {
        level: 2,
        domain_size: seg2.source.size(),
        codomain_size: seg2.target.size(),
        invertible: seg2.is_bijective(),
    });
    let seg2_inv = seg2.inverse().ok_or_else(|| Error::SegalFailure {
        level: 2,
        detail: format!("Q2 has {} elements, Q1 x_Q0 Q1 has {}", seg2.source.size(), seg2.target.size()),
    })?;

    // Level 3: Q3 -> Q1 x_Q0 Q1 x_Q0 Q1 through the three edges.
    let q111 = base.pullback(&q1q1.p2.then(&cq), &dq);
    let ix = base.index();
    let mut comps3 = Vec::with_capacity(ix.object_count());
    for at in ix.objects() {
        let mut out = vec![usize::MAX; q3.target.fibres[at]];
        for k in 0..nx.c3.obj.fibres[at] {
            let (f, g, h) = nx.edges3(at, k);
            let (qf, qg, qh) = (q1.at(at, f), q1.at(at, g), q1.at(at, h));
            let fg = q1q1.element(at, qf, qg).expect("edges compose");
            let v = q111.element(at, fg, qh).expect("edges compose");
            let cls = q3.at(at, k);
            if out[cls] == usize::MAX {
                out[cls] = v;
            } else if out[cls] != v {
                return Err(Error::SegalFailure {
                    level: 3,
                    detail: "edges of a 3-simplex do not descend".into(),
                });
            }
        }
        comps3.push(out);
    }
    let seg3 = BaseMap {
        source: q3.target.clone(),
        target: q111.obj.clone(),
        components: comps3,
    };
    segal.push(SegalCheck {
        level: 3,
        domain_size: seg3.source.size(),
        codomain_size: seg3.target.size(),
        invertible: seg3.is_bijective(),
    });
    if !seg3.is_bijective() {
        return Err(Error::SegalFailure {
            level: 3,
            detail: format!("Q3 has {} elements, Q1 x_Q0 Q1 x_Q0 Q1 has {}", seg3.source.size(), seg3.target.size()),
        });
    }

    let comp_map = seg2_inv.then(&mq);
    let comp: CompTable = ix
        .objects()
        .map(|at| {
            q1q1.pairs[at]
                .iter()
                .enumerate()
                .map(|(k, &p)| (p, comp_map.at(at, k)))
                .collect::<BTreeMap<_, _>>()
        })
        .collect();
    let quotient = Arc::new(InternalCategory::new(
        base.clone(),
        q0.target.clone(),
        q1.target.clone(),
        dq.components,
        cq.components,
        iq.components,
        comp,
    ));
    let v = quotient.validate();
    if !v.is_valid() {
        return Err(Error::SegalFailure {
            level: 2,
            detail: format!("induced composition is not a category structure: {v}"),
        });
    }
    let q = InternalFunctor {
        source: x.clone(),
        target: quotient.clone(),
        f0: q0.clone(),
        f1: q1.clone(),
    };
    let v = q.validate();
    if !v.is_valid() {
        return Err(Error::SegalFailure {
            level: 2,
            detail: format!("quotient map is not an internal functor: {v}"),
        });
    }
    let q_fully_faithful = internal_classify(&q).ff;
    let k0 = base.pullback(&q.f0, &q.f0);
    let k1 = base.pullback(&q.f1, &q.f1);
    let kernel_pair_recovered = [k0.mediate(&s.f0, &t.f0), k1.mediate(&s.f1, &t.f1)]
        .iter()
        .all(|m| m.as_ref().is_some_and(BaseMap::is_bijective));
    Ok(FfCoequalizer {
        quotient,
        q,
        segal,
        q_fully_faithful,
        kernel_pair_recovered,
    })
}

/// The map `Q -> Y` through which `f: X -> Y` factors when it coequalises
/// the relation; `None` if it does not.
pub fn descend(coeq: &FfCoequalizer, f: &InternalFunctor) -> Option<InternalFunctor> {
    let f0 = induced(&coeq.q.f0, &f.f0, &BaseMap::identity(&f.target.c0))?;
    let f1 = induced(&coeq.q.f1, &f.f1, &BaseMap::identity(&f.target.c1))?;
    Some(InternalFunctor {
        source: coeq.quotient.clone(),
        target: f.target.clone(),
        f0,
        f1,
    })
}
