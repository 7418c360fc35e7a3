use std::sync::Arc;

use serde::Serialize;

use super::quotient::{ab_effectivity, ab_quotient, ab_quotient_with, AbEffectivity, AbQuotient, Presentation};
use super::ring::{find_ring_isomorphism, FiniteRing, RingHom};
use crate::error::Result;
use crate::System;

pub const REPORT_SCHEMA: &str = "abcat-report/v1";

/// `phi: F2 -> 0` is an effective so-quotient, while the diagonal of its
/// kernel pair `F2 -> F2 x F2` is not an so-quotient map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoequifierExample {
    pub phi_sprime_size: usize,
    pub phi_effective: bool,
    pub diagonal_s_size: usize,
    pub diagonal_sprime_size: usize,
    pub diagonal_is_so_quotient: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub schema: String,
    pub phi: String,
    #[serde(rename = "S_size")]
    pub s_size: usize,
    #[serde(rename = "Sprime_size")]
    pub sprime_size: usize,
    pub sprime_elements: Vec<String>,
    /// A ring isomorphism `S' -> F2[x]/(x^3+1)`, as `(element, image)` pairs.
    pub iso_to_f2_cubic: Option<Vec<(String, String)>>,
    pub effectivity: AbEffectivity,
    pub conclusion: String,
    pub so_equals_bo: bool,
    pub unit_condition_automatic: bool,
    pub presentations_agree: bool,
    pub coequifier: CoequifierExample,
}

impl CounterexampleReport {
    /// Every expected fact holds.
    pub fn reproduces(&self) -> bool {
        self.s_size == 4
            && self.sprime_size == 8
            && self.iso_to_f2_cubic.is_some()
            && !self.effectivity.effective
            && self.so_equals_bo
            && self.unit_condition_automatic
            && self.presentations_agree
            && self.coequifier.phi_effective
            && !self.coequifier.diagonal_is_so_quotient
    }
}

/// The hom `F2 -> F4`.
pub fn f2_to_f4() -> RingHom {
    let f2 = Arc::new(FiniteRing::integers_mod(2));
    let f4 = Arc::new(FiniteRing::f4());
    RingHom::new(f2, f4, vec![0, 1]).expect("F2 -> F4")
}

/// The diagonal `R -> R x R`.
pub fn diagonal(r: &Arc<FiniteRing>) -> RingHom {
    let rr = Arc::new(FiniteRing::product(r, r));
    let n = r.len();
    RingHom::new(r.clone(), rr, r.elements().map(|a| a * n + a).collect()).expect("diagonal")
}

/// Whether the bo- and so-quotients of `phi` are isomorphic under the
/// identity on generators.
pub fn so_equals_bo(phi: &RingHom) -> Result<bool> {
    let bo = ab_quotient(phi, System::Bo)?;
    let so = ab_quotient(phi, System::So)?;
    Ok(quotients_agree(&bo, &so))
}

/// Isomorphic rings with an isomorphism matching `psi` and `theta`.
pub fn quotients_agree(a: &AbQuotient, b: &AbQuotient) -> bool {
    if a.ring == b.ring && a.psi.map == b.psi.map && a.theta == b.theta {
        return true;
    }
    match find_ring_isomorphism(&a.ring, &b.ring) {
        None => false,
        Some(_) => canonical_comparison(a, b),
    }
}

/// The comparison sending `theta_a(s)` to `theta_b(s)`; both rings are
/// generated by their `theta`, so it is an isomorphism iff it is well defined
/// and bijective on the subring closure.
fn canonical_comparison(a: &AbQuotient, b: &AbQuotient) -> bool {
    let (ra, rb) = (&a.ring, &b.ring);
    let mut map = vec![usize::MAX; ra.len()];
    let mut found = Vec::new();
    let mut queue: Vec<(usize, usize)> = vec![(ra.zero(), rb.zero()), (ra.one(), rb.one())];
    queue.extend(a.theta.iter().copied().zip(b.theta.iter().copied()));
    queue.extend(a.psi.map.iter().copied().zip(b.psi.map.iter().copied()));
    while let Some((x, y)) = queue.pop() {
        if map[x] != usize::MAX {
            if map[x] != y {
                return false;
            }
            continue;
        }
        map[x] = y;
        found.push(x);
        for &z in &found {
            let w = map[z];
            queue.push((ra.add(x, z), rb.add(y, w)));
            queue.push((ra.mul(x, z), rb.mul(y, w)));
            queue.push((ra.mul(z, x), rb.mul(w, y)));
        }
    }
    let mut hit = vec![false; rb.len()];
    for &y in &map {
        if y == usize::MAX {
            return false;
        }
        hit[y] = true;
    }
    ra.len() == rb.len() && hit.into_iter().all(|h| h)
}

pub fn counterexample_report() -> Result<CounterexampleReport> {
    let phi = f2_to_f4();
    let q = ab_quotient(&phi, System::Bo)?;
    let so = ab_quotient(&phi, System::So)?;
    let cubic = Arc::new(FiniteRing::f2_polynomial_quotient(0b1001));
    let iso_to_f2_cubic = find_ring_isomorphism(&q.ring, &cubic).map(|h| {
        q.ring
            .elements()
            .map(|a| (q.ring.name(a).to_string(), cubic.name(h.apply(a)).to_string()))
            .collect()
    });
    let effectivity = ab_effectivity(&phi, &q);
    let conclusion = if effectivity.effective {
        "effective".to_string()
    } else {
        format!(
            "not effective: the kernel of psi has {} objects but the kernel of phi has {}",
            effectivity.sprime_size, effectivity.s_size
        )
    };
    let mut presentations_agree = true;
    for p in Presentation::ALL {
        let other = ab_quotient_with(&phi, System::Bo, p)?;
        presentations_agree &= quotients_agree(&q, &other);
    }
    let f2 = phi.source.clone();
    let to_zero = RingHom::new(f2.clone(), Arc::new(FiniteRing::zero_ring()), vec![0, 0])?;
    let zq = ab_quotient(&to_zero, System::So)?;
    let delta = diagonal(&f2);
    let dq = ab_quotient(&delta, System::So)?;
    let coequifier = CoequifierExample {
        phi_sprime_size: zq.ring.len(),
        phi_effective: ab_effectivity(&to_zero, &zq).effective,
        diagonal_s_size: delta.target.len(),
        diagonal_sprime_size: dq.ring.len(),
        diagonal_is_so_quotient: is_own_quotient(&delta, &dq),
    };
    Ok(CounterexampleReport {
        schema: REPORT_SCHEMA.into(),
        phi: "F2 -> F4".into(),
        s_size: phi.target.len(),
        sprime_size: q.ring.len(),
        sprime_elements: q.ring.names().to_vec(),
        iso_to_f2_cubic,
        effectivity,
        conclusion,
        so_equals_bo: quotients_agree(&q, &so),
        unit_condition_automatic: q.unit_condition_automatic,
        presentations_agree,
        coequifier,
    })
}

/// `phi` is a quotient map when the induced `S' -> S`, `theta(s) |-> s`, is
/// an isomorphism.
pub fn is_own_quotient(phi: &RingHom, q: &AbQuotient) -> bool {
    let mut seen = vec![false; q.ring.len()];
    for &t in &q.theta {
        seen[t] = true;
    }
    q.ring.len() == phi.target.len() && seen.into_iter().all(|s| s)
}
