use std::sync::Arc;

use super::cocone::CodescentCocone;
use super::relation::{push_capped, Failures};
use super::verdict::CongruenceVerdict;
use crate::error::Result;
use crate::fincat::tabulate::tabulate;
use crate::fincat::{pullback, FinFunctor, MorId, NatTransf, ObjId, Pullback};
use crate::kernels::BoKernelData;

/// The level-2 Segal comparison `(p, q): X3 -> X2 x_X1 X2` and the
/// composition it induces on `X2`.
pub(crate) struct Segal<'a> {
    x: &'a BoKernelData,
    pb: Pullback,
    obj_inv: Vec<Option<ObjId>>,
    mor_inv: Vec<Option<MorId>>,
}

impl<'a> Segal<'a> {
    /// Returns the comparison and its failures (non-injective or
    /// non-surjective cells).
    pub fn new(x: &'a BoKernelData) -> Result<(Self, Failures)> {
        let pb = pullback(&x.c, &x.d)?;
        let mut failures = Vec::new();
        let mut obj_inv = vec![None; pb.cat.object_count()];
        for w in x.x3.objects() {
            let Some(o) = pb.object_of(x.p.ob(w), x.q.ob(w)) else {
                continue;
            };
            if let Some(prev) = obj_inv[o].replace(w) {
                push_capped(&mut failures, vec![
                    format!("X3 objects {} and {} have the same faces", x.x3.object_name(prev), x.x3.object_name(w)),
                ]);
            }
        }
        let mut mor_inv = vec![None; pb.cat.morphism_count()];
        for g in x.x3.morphisms() {
            let Some(o) = pb.morphism_of(x.p.mor(g), x.q.mor(g)) else {
                continue;
            };
            if let Some(prev) = mor_inv[o].replace(g) {
                push_capped(&mut failures, vec![format!(
                    "X3 morphisms {} and {} have the same faces",
                    x.x3.morphism_name(prev),
                    x.x3.morphism_name(g)
                )]);
            }
        }
        for (o, w) in obj_inv.iter().enumerate() {
            if w.is_none() {
                let (a, b) = pb.object_pair(o);
                push_capped(&mut failures, vec![format!(
                    "composable X2 objects ({}, {}) have no X3 filler",
                    x.x2.object_name(a),
                    x.x2.object_name(b)
                )]);
            }
        }
        for (o, w) in mor_inv.iter().enumerate() {
            if w.is_none() {
                let (a, b) = pb.morphism_pair(o);
                push_capped(&mut failures, vec![format!(
                    "composable X2 morphisms ({}, {}) have no X3 filler",
                    x.x2.morphism_name(a),
                    x.x2.morphism_name(b)
                )]);
            }
        }
        Ok((Segal { x, pb, obj_inv, mor_inv }, failures))
    }

    /// `m` applied to the filler of `(a, b)`, where `c a = d b`.
    pub fn compose_objects(&self, a: ObjId, b: ObjId) -> Option<ObjId> {
        let o = self.pb.object_of(a, b)?;
        self.obj_inv[o].map(|w| self.x.m.ob(w))
    }

    pub fn compose_morphisms(&self, g: MorId, h: MorId) -> Option<MorId> {
        let o = self.pb.morphism_of(g, h)?;
        self.mor_inv[o].map(|w| self.x.m.mor(w))
    }
}

fn obj(x: &BoKernelData, e: ObjId) -> String {
    format!("X2 object {}", x.x2.object_name(e))
}

fn mor(x: &BoKernelData, g: MorId) -> String {
    format!("X2 morphism {}", x.x2.morphism_name(g))
}

fn x1mor(x: &BoKernelData, h: MorId) -> String {
    format!("X1 morphism {}", x.x1.morphism_name(h))
}

fn unit_failures(x: &BoKernelData, s: &Segal, left: bool) -> Failures {
    let mut out = Vec::new();
    for e in x.x2.objects() {
        let got = if left {
            s.compose_objects(x.i.ob(x.d.ob(e)), e)
        } else {
            s.compose_objects(e, x.i.ob(x.c.ob(e)))
        };
        if got != Some(e) {
            push_capped(&mut out, vec![obj(x, e)]);
        }
    }
    for g in x.x2.morphisms() {
        let got = if left {
            s.compose_morphisms(x.i.mor(x.d.mor(g)), g)
        } else {
            s.compose_morphisms(g, x.i.mor(x.c.mor(g)))
        };
        if got != Some(g) {
            push_capped(&mut out, vec![mor(x, g)]);
        }
    }
    out
}

fn associativity_failures(x: &BoKernelData, s: &Segal) -> Failures {
    let mut out = Vec::new();
    let x2 = &x.x2;
    let mut obj_by_d = vec![Vec::new(); x.x1.object_count()];
    for e in x2.objects() {
        obj_by_d[x.d.ob(e)].push(e);
    }
    for a in x2.objects() {
        for &b in &obj_by_d[x.c.ob(a)] {
            for &c in &obj_by_d[x.c.ob(b)] {
                let l = s.compose_objects(a, b).and_then(|ab| s.compose_objects(ab, c));
                let r = s.compose_objects(b, c).and_then(|bc| s.compose_objects(a, bc));
                if l != r || l.is_none() {
                    push_capped(&mut out, vec![obj(x, a), obj(x, b), obj(x, c)]);
                }
            }
        }
    }
    let mut mor_by_d = vec![Vec::new(); x.x1.morphism_count()];
    for g in x2.morphisms() {
        mor_by_d[x.d.mor(g)].push(g);
    }
    for a in x2.morphisms() {
        for &b in &mor_by_d[x.c.mor(a)] {
            for &c in &mor_by_d[x.c.mor(b)] {
                let l = s.compose_morphisms(a, b).and_then(|ab| s.compose_morphisms(ab, c));
                let r = s.compose_morphisms(b, c).and_then(|bc| s.compose_morphisms(a, bc));
                if l != r || l.is_none() {
                    push_capped(&mut out, vec![mor(x, a), mor(x, b), mor(x, c)]);
                }
            }
        }
    }
    out
}

/// Morphisms of `X2` into `e`.
fn into(x: &BoKernelData, e: ObjId) -> impl Iterator<Item = MorId> + '_ {
    x.x2.objects().flat_map(move |o| x.x2.hom(o, e).iter().copied())
}

fn out_of(x: &BoKernelData, e: ObjId) -> impl Iterator<Item = MorId> + '_ {
    x.x2.objects().flat_map(move |o| x.x2.hom(e, o).iter().copied())
}

/// Is `lift: e' -> e` cartesian for `d`?
fn is_d_cartesian(x: &BoKernelData, lift: MorId) -> bool {
    let (x1, x2) = (&x.x1, &x.x2);
    let (ep, e) = (x2.dom(lift), x2.cod(lift));
    let al = x.d.mor(lift);
    for epp in x2.objects() {
        for &g in x2.hom(epp, e) {
            for &h in x1.hom(x.d.ob(epp), x.d.ob(ep)) {
                if x1.compose(al, h) != x.d.mor(g) {
                    continue;
                }
                let n = x2
                    .hom(epp, ep)
                    .iter()
                    .filter(|&&gh| x.d.mor(gh) == h && x2.compose(lift, gh) == g)
                    .count();
                if n != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Is `lift: e -> e'` opcartesian for `c`?
fn is_c_opcartesian(x: &BoKernelData, lift: MorId) -> bool {
    let (x1, x2) = (&x.x1, &x.x2);
    let (e, ep) = (x2.dom(lift), x2.cod(lift));
    let be = x.c.mor(lift);
    for epp in x2.objects() {
        for &g in x2.hom(e, epp) {
            for &h in x1.hom(x.c.ob(ep), x.c.ob(epp)) {
                if x1.compose(h, be) != x.c.mor(g) {
                    continue;
                }
                let n = x2
                    .hom(ep, epp)
                    .iter()
                    .filter(|&&gh| x.c.mor(gh) == h && x2.compose(gh, lift) == g)
                    .count();
                if n != 1 {
                    return false;
                }
            }
        }
    }
    true
}

struct FibrationFailures {
    d_lifts: Failures,
    d_cartesian: Failures,
    c_lifts: Failures,
    c_opcartesian: Failures,
}

fn fibration_failures(x: &BoKernelData) -> FibrationFailures {
    let (x1, x2) = (&x.x1, &x.x2);
    let mut f = FibrationFailures {
        d_lifts: Vec::new(),
        d_cartesian: Vec::new(),
        c_lifts: Vec::new(),
        c_opcartesian: Vec::new(),
    };
    for e in x2.objects() {
        let id_c = x1.identity(x.c.ob(e));
        for a in x1.objects() {
            for &al in x1.hom(a, x.d.ob(e)) {
                let lifts: Vec<MorId> = into(x, e)
                    .filter(|&g| x.d.mor(g) == al && x.c.mor(g) == id_c)
                    .collect();
                if lifts.len() != 1 {
                    push_capped(&mut f.d_lifts, vec![
                        obj(x, e),
                        x1mor(x, al),
                        format!("{} lifts", lifts.len()),
                    ]);
                } else if !is_d_cartesian(x, lifts[0]) {
                    push_capped(&mut f.d_cartesian, vec![obj(x, e), mor(x, lifts[0])]);
                }
            }
        }
        let id_d = x1.identity(x.d.ob(e));
        for b in x1.objects() {
            for &be in x1.hom(x.c.ob(e), b) {
                let lifts: Vec<MorId> = out_of(x, e)
                    .filter(|&g| x.d.mor(g) == id_d && x.c.mor(g) == be)
                    .collect();
                if lifts.len() != 1 {
                    push_capped(&mut f.c_lifts, vec![
                        obj(x, e),
                        x1mor(x, be),
                        format!("{} lifts", lifts.len()),
                    ]);
                } else if !is_c_opcartesian(x, lifts[0]) {
                    push_capped(&mut f.c_opcartesian, vec![obj(x, e), mor(x, lifts[0])]);
                }
            }
        }
    }
    f
}

pub(crate) const SEGAL: &str = "(a) Segal map X3 -> X2 x_X1 X2 is invertible";
pub(crate) const LEFT_UNIT: &str = "(a) left unit law";
pub(crate) const RIGHT_UNIT: &str = "(a) right unit law";
pub(crate) const ASSOCIATIVITY: &str = "(a) associativity";
pub(crate) const D_LIFTS: &str = "(b) unique lift along d with c-image an identity";
pub(crate) const D_CARTESIAN: &str = "(b) lifts along d are cartesian";
pub(crate) const C_LIFTS: &str = "(b) unique lift along c with d-image an identity";
pub(crate) const C_OPCARTESIAN: &str = "(b) lifts along c are opcartesian";

/// Record the catead conditions under `prefix` (empty for the bo system itself).
pub(crate) fn check(x: &BoKernelData, verdict: &mut CongruenceVerdict, prefix: &str) -> Result<()> {
    let name = |c: &str| format!("{prefix}{c}");
    let (segal, segal_failures) = Segal::new(x)?;
    let segal_ok = segal_failures.is_empty();
    verdict.record(&name(SEGAL), segal_failures);
    if segal_ok {
        verdict.record(&name(LEFT_UNIT), unit_failures(x, &segal, true));
        verdict.record(&name(RIGHT_UNIT), unit_failures(x, &segal, false));
        verdict.record(&name(ASSOCIATIVITY), associativity_failures(x, &segal));
    }
    let f = fibration_failures(x);
    verdict.record(&name(D_LIFTS), f.d_lifts);
    verdict.record(&name(D_CARTESIAN), f.d_cartesian);
    verdict.record(&name(C_LIFTS), f.c_lifts);
    verdict.record(&name(C_OPCARTESIAN), f.c_opcartesian);
    Ok(())
}

/// The codescent cocone of a catead: `Q` has the objects of `X1` and the
/// objects of `X2` as morphisms, composed through the Segal inverse and `m`.
pub(crate) fn cocone(x: &BoKernelData) -> Result<CodescentCocone> {
    let (segal, _) = Segal::new(x)?;
    let (x1, x2) = (&x.x1, &x.x2);
    let objects = x1.objects().map(|o| (o, x1.object_name(o).to_string())).collect();
    let morphisms = x2
        .objects()
        .map(|e| (e, x2.object_name(e).to_string(), x.d.ob(e), x.c.ob(e)))
        .collect();
    let table = tabulate(
        objects,
        morphisms,
        |&o| x.i.ob(o),
        |&g, &f| segal.compose_objects(f, g).unwrap_or(usize::MAX),
    )?;
    let qcat = Arc::new(table.cat.clone());
    // q(h) is the codomain of the opcartesian lift of h at i(dom h) along c.
    let q_mor = x1
        .morphisms()
        .map(|h| {
            let start = x.i.ob(x1.dom(h));
            let id = x1.identity(x1.dom(h));
            out_of(x, start)
                .find(|&g| x.d.mor(g) == id && x.c.mor(g) == h)
                .map(|g| table.morphism_of(&x2.cod(g)).expect("every X2 object is a morphism of Q"))
                .ok_or_else(|| {
                    crate::Error::Precondition(format!(
                        "no opcartesian lift of {} at i({})",
                        x1.morphism_name(h),
                        x1.object_name(x1.dom(h))
                    ))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let q = FinFunctor::new(x1.clone(), qcat, x1.objects().collect(), q_mor)?;
    let theta = NatTransf::new(
        x.d.then(&q),
        x.c.then(&q),
        x2.objects().map(|e| table.morphism_of(&e).unwrap()).collect(),
    )?;
    Ok(CodescentCocone { q, theta })
}
