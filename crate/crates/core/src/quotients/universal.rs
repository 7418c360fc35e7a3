use std::sync::Arc;

use super::quotient::Quotient;
use crate::error::Result;
use crate::fincat::{enumerate_functors, transformations_between, FinCategory, FinFunctor, NatTransf};
use crate::kernels::{BoKernelData, KernelData};
use crate::SizeBound;

/// Outcome of testing the universal property of a quotient against every
/// cocone into a list of small targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalCheck {
    pub cocones: usize,
    /// One line per cocone whose number of mediating functors is not 1.
    pub failures: Vec<String>,
}

impl UniversalCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

fn cocycles_hold(x: &BoKernelData, tau: &NatTransf) -> bool {
    let c = tau.source().target();
    x.x1.objects().all(|o| c.is_identity(tau.component(x.i.ob(o))))
        && x.x3.objects().all(|w| {
            c.try_compose(tau.component(x.q.ob(w)), tau.component(x.p.ob(w)))
                == Some(tau.component(x.m.ob(w)))
        })
}

fn same(a: &FinFunctor, b: &FinFunctor) -> bool {
    a.object_map() == b.object_map() && a.morphism_map() == b.morphism_map()
}

/// For every cocone under `x` with vertex in `targets`, count the functors
/// `h: Q -> C` through which it factors; the universal property says 1.
pub fn spot_check_universal(
    x: &KernelData,
    quotient: &Quotient,
    targets: &[Arc<FinCategory>],
    bound: &SizeBound,
) -> Result<UniversalCheck> {
    let mut out = UniversalCheck {
        cocones: 0,
        failures: Vec::new(),
    };
    let q = &quotient.q;
    for (ti, target) in targets.iter().enumerate() {
        let gs = enumerate_functors(x.base(), target, bound)?;
        let hs = enumerate_functors(q.target(), target, bound)?;
        for (gi, g) in gs.iter().enumerate() {
            let through: Vec<&FinFunctor> = hs.iter().filter(|h| same(&q.then(h), g)).collect();
            match x {
                KernelData::Bof(b) => {
                    let coequifies = b
                        .x2
                        .objects()
                        .all(|e| g.mor(b.alpha.component(e)) == g.mor(b.beta.component(e)));
                    if !coequifies {
                        continue;
                    }
                    out.cocones += 1;
                    if through.len() != 1 {
                        out.failures.push(format!(
                            "target {ti}, functor {gi}: {} mediating functors",
                            through.len()
                        ));
                    }
                }
                KernelData::Bo(_) | KernelData::So(_) => {
                    let bo = match x {
                        KernelData::Bo(b) => b,
                        KernelData::So(s) => &s.bo,
                        KernelData::Bof(_) => unreachable!(),
                    };
                    let theta = &quotient.cocone.as_ref().expect("codescent cocone").theta;
                    for tau in transformations_between(&bo.d.then(g), &bo.c.then(g)) {
                        if !cocycles_hold(bo, &tau) {
                            continue;
                        }
                        if let KernelData::So(s) = x {
                            let c = tau.source().target();
                            if !s.x2p.objects().all(|e| c.is_identity(tau.component(s.j.ob(e)))) {
                                continue;
                            }
                        }
                        out.cocones += 1;
                        let n = through
                            .iter()
                            .filter(|h| theta.whisker_left(h).components() == tau.components())
                            .count();
                        if n != 1 {
                            out.failures.push(format!(
                                "target {ti}, functor {gi}, 2-cell {:?}: {n} mediating functors",
                                tau.components()
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
