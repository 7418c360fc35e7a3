use super::relation::equivalence_relation;
use crate::error::{Error, Result};
use crate::factorization::classify_direct;
use crate::fincat::functor::same_category;
use crate::fincat::{FinFunctor, NatTransf};
use crate::kernels::{bo_kernel, SoKernelData};

/// The so-congruence `A^3 => A^2 => A <- E` induced by a fully faithful
/// equivalence relation `(s, t): E => A`.
#[derive(Debug, Clone)]
pub struct FfEquivalence {
    pub data: SoKernelData,
    /// The unique invertible `theta: s => t` with `theta r = 1`.
    pub theta: NatTransf,
    /// The reflexivity `r: A -> E`.
    pub r: FinFunctor,
}

/// Build the congruence of a fully faithful equivalence relation.
///
/// `theta_e = t(rho_e)`, where `rho_e: r(s e) -> e` is the unique morphism of
/// `E` with `s(rho_e) = 1`; `j: E -> A^2` sends `e` to `theta_e`.
pub fn ff_equivalence_to_so(s: &FinFunctor, t: &FinFunctor) -> Result<FfEquivalence> {
    if !same_category(s.source(), t.source()) || !same_category(s.target(), t.target()) {
        return Err(Error::Precondition("s and t must be parallel".into()));
    }
    let (rel, failures) = equivalence_relation(s, t);
    if let Some(msg) = failures.summary() {
        return Err(Error::NotAnEquivalenceRelation(msg));
    }
    if !classify_direct(s).fully_faithful {
        return Err(Error::NotFullyFaithful("the first leg s".into()));
    }
    let r = rel.reflexivity().expect("reflexive relations have a reflexivity");
    let (e, a) = (s.source().clone(), s.target().clone());
    let components = e
        .objects()
        .map(|x| {
            let start = r.ob(s.ob(x));
            let id = a.identity(s.ob(x));
            let rho = e
                .hom(start, x)
                .iter()
                .copied()
                .find(|&g| s.mor(g) == id)
                .expect("s is full");
            t.mor(rho)
        })
        .collect();
    let theta = NatTransf::new(s.clone(), t.clone(), components)?;
    let bo = bo_kernel(&FinFunctor::identity(&a))?;
    let arrows = &bo.comma;
    let key = |x| (s.ob(x), t.ob(x), theta.component(x));
    let objects = e
        .objects()
        .map(|x| arrows.object_of(s.ob(x), t.ob(x), theta.component(x)).expect("theta_e is an arrow"))
        .collect();
    let morphisms = e
        .morphisms()
        .map(|g| {
            arrows
                .morphism_of(key(e.dom(g)), key(e.cod(g)), s.mor(g), t.mor(g))
                .expect("theta is natural")
        })
        .collect();
    let j = FinFunctor::new(e.clone(), bo.data.x2.clone(), objects, morphisms)?;
    Ok(FfEquivalence {
        data: SoKernelData {
            bo: bo.data,
            x2p: e,
            j,
        },
        theta,
        r,
    })
}
