//! One-object Ab-categories as finite rings, and the bo/so quotients of
//! their kernels.

mod comma;
pub mod json;
mod quotient;
mod report;
mod ring;

pub use comma::{ab_comma, AbCommaSummary, HomGroup};
pub use quotient::{ab_effectivity, ab_quotient, ab_quotient_with, AbEffectivity, AbQuotient, Presentation, MAX_AMBIENT, MAX_QUOTIENT};
pub use report::{
    counterexample_report, diagonal, f2_to_f4, is_own_quotient, quotients_agree, so_equals_bo, CoequifierExample,
    CounterexampleReport, REPORT_SCHEMA,
};
pub use ring::{find_ring_isomorphism, ring_generators, ring_homs, FiniteRing, RingHom};

use crate::sample::SampleRng;
use rand::seq::IndexedRandom;
use std::sync::Arc;

/// Every ring hom between two rings of order at most 4.
pub fn small_ring_homs() -> Vec<RingHom> {
    let rings: Vec<Arc<FiniteRing>> = FiniteRing::small_rings().into_iter().map(|(_, r)| Arc::new(r)).collect();
    let mut out = Vec::new();
    for a in &rings {
        for b in &rings {
            out.extend(ring_homs(a, b));
        }
    }
    out
}

/// `n` homs drawn uniformly, with repetition, from [`small_ring_homs`].
pub fn sample_ring_homs(rng: &mut SampleRng, n: usize) -> Vec<RingHom> {
    let all = small_ring_homs();
    (0..n).map(|_| all.choose(rng).expect("homs exist").clone()).collect()
}
