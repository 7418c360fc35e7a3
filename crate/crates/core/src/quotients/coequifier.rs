use std::sync::Arc;

use super::bof::hom_quotient;
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FinFunctor, MorId, NatTransf};

/// The coequifier of a parallel pair of 2-cells and the congruence it imposes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coequifier {
    /// Identity-on-objects quotient map `C -> Q`.
    pub q: FinFunctor,
    /// Class representative (least identifier) of each morphism of `C`.
    pub representative: Vec<MorId>,
}

impl Coequifier {
    pub fn category(&self) -> &Arc<FinCategory> {
        self.q.target()
    }

    pub fn related(&self, f: MorId, g: MorId) -> bool {
        self.representative[f] == self.representative[g]
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    /// Merge the classes; the smaller root wins so roots stay least elements.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// The least congruence on `c` containing the given pairs, as a class
/// representative for every morphism.
///
/// Each merge enqueues every one-sided whiskering of the merged pair; a pair
/// already related is skipped, since its whiskerings follow from those of the
/// merges that related it.
pub(crate) fn congruence_closure(c: &FinCategory, generators: &[(MorId, MorId)]) -> Vec<MorId> {
    let mut uf = UnionFind {
        parent: c.morphisms().collect(),
    };
    let mut work: Vec<(MorId, MorId)> = generators.to_vec();
    while let Some((a, b)) = work.pop() {
        if !uf.union(a, b) {
            continue;
        }
        let (x, y) = (c.dom(a), c.cod(a));
        for z in c.objects() {
            for &g in c.hom(y, z) {
                work.push((c.compose(g, a), c.compose(g, b)));
            }
            for &h in c.hom(z, x) {
                work.push((c.compose(a, h), c.compose(b, h)));
            }
        }
    }
    c.morphisms().map(|m| uf.find(m)).collect()
}

/// The universal `q: C -> Q` with `q.phi = q.psi`, for `phi, psi: F => G`
/// with `F, G: A -> C`.
pub fn coequifier_pair(phi: &NatTransf, psi: &NatTransf) -> Result<Coequifier> {
    if phi.source() != psi.source() || phi.target() != psi.target() {
        return Err(Error::Precondition("coequifier of non-parallel 2-cells".into()));
    }
    let c = phi.source().target().clone();
    let generators: Vec<(MorId, MorId)> = phi
        .components()
        .iter()
        .zip(psi.components())
        .map(|(&a, &b)| (a, b))
        .collect();
    let representative = congruence_closure(&c, &generators);
    let q = hom_quotient(&c, &representative)?;
    Ok(Coequifier { q, representative })
}
