use super::cocone::CodescentCocone;
use super::quotient::{quotient, Quotient};
use crate::error::{Error, Result};
use crate::fincat::construct::PairMorphism;
use crate::fincat::{FinFunctor, ValidationReport};
use crate::kernels::comma::TripleMorphism;
use crate::kernels::{bo_kernel, bof_kernel, so_kernel, BoKernel, BoKernelData, KernelData};
use crate::{SizeBound, System};

/// Level-by-level isomorphism `X -> KQX`, named by level (`X1`, `X2`, `X3`, `X2'`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelIso {
    pub levels: Vec<(String, FinFunctor)>,
}

impl KernelIso {
    pub fn level(&self, name: &str) -> Option<&FinFunctor> {
        self.levels.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }
}

#[derive(Debug, Clone)]
pub struct EffectivityReport {
    pub system: System,
    pub quotient: Quotient,
    pub recomputed_kernel: KernelData,
    /// The canonical comparison `X -> KQX`, present when every level is
    /// invertible and it commutes with every structural map.
    pub iso_witness: Option<KernelIso>,
    pub failures: ValidationReport,
}

impl EffectivityReport {
    pub fn is_effective(&self) -> bool {
        self.iso_witness.is_some()
    }
}

fn same(a: &FinFunctor, b: &FinFunctor) -> bool {
    a.object_map() == b.object_map() && a.morphism_map() == b.morphism_map()
}

fn expect(r: &mut ValidationReport, law: &str, a: &FinFunctor, b: &FinFunctor) {
    if !same(a, b) {
        r.push("unit commutes with structure", [law.to_string()]);
    }
}

fn precondition(what: &str) -> Error {
    Error::Precondition(format!("unit component {what} leaves the recomputed kernel"))
}

/// The unit at levels 2 and 3 of bo data, into the kernel `k` of the cocone's `q`.
fn bo_unit(x: &BoKernelData, c: &CodescentCocone, k: &BoKernel) -> Result<(FinFunctor, FinFunctor)> {
    let u2 = k.comma.mediate(&x.d, &x.c, &c.theta)?;
    let t = &k.triple.table;
    let th = |e| c.theta.component(e);
    let key = |w| {
        let (a, b) = (x.p.ob(w), x.q.ob(w));
        (x.d.ob(a), x.c.ob(a), x.c.ob(b), th(a), th(b))
    };
    let objects = x
        .x3
        .objects()
        .map(|w| t.object_of(&key(w)).ok_or_else(|| precondition("X3")))
        .collect::<Result<Vec<_>>>()?;
    let morphisms = x
        .x3
        .morphisms()
        .map(|g| {
            let m = TripleMorphism {
                src: key(x.x3.dom(g)),
                dst: key(x.x3.cod(g)),
                h: x.d.mor(x.p.mor(g)),
                k: x.c.mor(x.p.mor(g)),
                l: x.c.mor(x.q.mor(g)),
            };
            t.morphism_of(&m).ok_or_else(|| precondition("X3"))
        })
        .collect::<Result<Vec<_>>>()?;
    let u3 = FinFunctor::new(x.x3.clone(), k.triple.cat.clone(), objects, morphisms)?;
    Ok((u2, u3))
}

fn bo_commutes(r: &mut ValidationReport, x: &BoKernelData, k: &BoKernelData, u2: &FinFunctor, u3: &FinFunctor) {
    expect(r, "d", &u2.then(&k.d), &x.d);
    expect(r, "c", &u2.then(&k.c), &x.c);
    expect(r, "i", &x.i.then(u2), &k.i);
    expect(r, "p", &x.p.then(u2), &u3.then(&k.p));
    expect(r, "m", &x.m.then(u2), &u3.then(&k.m));
    expect(r, "q", &x.q.then(u2), &u3.then(&k.q));
}

fn require_iso(r: &mut ValidationReport, name: &str, f: &FinFunctor) {
    if !f.is_isomorphism() {
        let detail = if !f.is_injective_on_objects() || !f.is_injective_on_morphisms() {
            "not injective"
        } else {
            "not surjective"
        };
        r.push("unit is invertible", [format!("{name}: {detail}")]);
    }
}

/// Compute the quotient of a congruence, recompute the kernel of the
/// quotient map and test whether the canonical unit `X -> KQX` is an
/// isomorphism of kernel diagrams.
pub fn check_effective(x: &KernelData, bound: &SizeBound) -> Result<EffectivityReport> {
    let quotient = quotient(x)?;
    let q = &quotient.q;
    let mut failures = ValidationReport::default();
    let id1 = FinFunctor::identity(x.base());
    let (recomputed_kernel, levels): (KernelData, Vec<(String, FinFunctor)>) = match x {
        KernelData::Bo(b) => {
            let c = quotient.cocone.as_ref().expect("bo quotient carries a cocone");
            let k = bo_kernel(q)?;
            let (u2, u3) = bo_unit(b, c, &k)?;
            bo_commutes(&mut failures, b, &k.data, &u2, &u3);
            let levels = vec![("X1".into(), id1), ("X2".into(), u2), ("X3".into(), u3)];
            (KernelData::Bo(k.data), levels)
        }
        KernelData::So(s) => {
            let c = quotient.cocone.as_ref().expect("so quotient carries a cocone");
            let k = so_kernel(q)?;
            let (u2, u3) = bo_unit(&s.bo, c, &k.bo)?;
            bo_commutes(&mut failures, &s.bo, &k.data.bo, &u2, &u3);
            let dj = s.j.then(&s.bo.d);
            let cj = s.j.then(&s.bo.c);
            let objects = s
                .x2p
                .objects()
                .map(|e| k.pair.object_of(dj.ob(e), cj.ob(e)).ok_or_else(|| precondition("X2'")))
                .collect::<Result<Vec<_>>>()?;
            let morphisms = s
                .x2p
                .morphisms()
                .map(|g| k.pair.morphism_of(dj.mor(g), cj.mor(g)).ok_or_else(|| precondition("X2'")))
                .collect::<Result<Vec<_>>>()?;
            let u2p = FinFunctor::new(s.x2p.clone(), k.pair.cat.clone(), objects, morphisms)?;
            expect(&mut failures, "j", &s.j.then(&u2), &u2p.then(&k.data.j));
            let levels = vec![
                ("X1".into(), id1),
                ("X2".into(), u2),
                ("X3".into(), u3),
                ("X2'".into(), u2p),
            ];
            (KernelData::So(k.data), levels)
        }
        KernelData::Bof(b) => {
            let k = bof_kernel(q, bound)?;
            let t = &k.eq.table;
            let pair = |e| (b.alpha.component(e), b.beta.component(e));
            let objects = b
                .x2
                .objects()
                .map(|e| t.object_of(&pair(e)).ok_or_else(|| precondition("X2")))
                .collect::<Result<Vec<_>>>()?;
            let morphisms = b
                .x2
                .morphisms()
                .map(|g| {
                    let m = PairMorphism {
                        src: pair(b.x2.dom(g)),
                        dst: pair(b.x2.cod(g)),
                        h: b.u.mor(g),
                        k: b.v.mor(g),
                    };
                    t.morphism_of(&m).ok_or_else(|| precondition("X2"))
                })
                .collect::<Result<Vec<_>>>()?;
            let u2 = FinFunctor::new(b.x2.clone(), k.eq.cat.clone(), objects, morphisms)?;
            let kd = &k.data;
            expect(&mut failures, "u", &u2.then(&kd.u), &b.u);
            expect(&mut failures, "v", &u2.then(&kd.v), &b.v);
            if kd.alpha.whisker_right(&u2).components() != b.alpha.components() {
                failures.push("unit commutes with structure", ["alpha"]);
            }
            if kd.beta.whisker_right(&u2).components() != b.beta.components() {
                failures.push("unit commutes with structure", ["beta"]);
            }
            (KernelData::Bof(k.data), vec![("X1".into(), id1), ("X2".into(), u2)])
        }
    };
    for (name, f) in &levels {
        require_iso(&mut failures, name, f);
    }
    let iso_witness = failures.is_valid().then_some(KernelIso { levels });
    Ok(EffectivityReport {
        system: x.system(),
        quotient,
        recomputed_kernel,
        iso_witness,
        failures,
    })
}
