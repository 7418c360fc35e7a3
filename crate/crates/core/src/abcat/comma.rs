use serde::Serialize;

use super::ring::RingHom;
use crate::fincat::ValidationReport;

/// The hom-group `(phi|phi)(s1, s2) = {(r1, r2) : phi(r2) s1 = s2 phi(r1)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomGroup {
    pub s1: usize,
    pub s2: usize,
    pub pairs: Vec<(usize, usize)>,
}

/// The comma Ab-category `phi|phi` of a hom between one-object Ab-categories:
/// one object per element of `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbCommaSummary {
    pub object_count: usize,
    pub hom_groups: Vec<HomGroup>,
}

impl AbCommaSummary {
    pub fn hom(&self, s1: usize, s2: usize) -> &HomGroup {
        &self.hom_groups[s1 * self.object_count + s2]
    }

    /// Subgroup closure of every hom and closure of composition
    /// `(r1', r2') . (r1, r2) = (r1' r1, r2' r2)`.
    pub fn validate(&self, phi: &RingHom) -> ValidationReport {
        let r = &phi.source;
        let mut out = ValidationReport::default();
        let pair = |p: (usize, usize)| format!("({},{})", r.name(p.0), r.name(p.1));
        for h in &self.hom_groups {
            let contains = |p: &(usize, usize)| h.pairs.binary_search(p).is_ok();
            let obj = |s: usize| phi.target.name(s).to_string();
            if !contains(&(r.zero(), r.zero())) {
                out.push("hom contains zero", [obj(h.s1), obj(h.s2)]);
            }
            for &a in &h.pairs {
                for &b in &h.pairs {
                    let sum = (r.add(a.0, b.0), r.add(a.1, b.1));
                    if !contains(&sum) {
                        out.push("hom closed under addition", [obj(h.s1), obj(h.s2), pair(a), pair(b)]);
                    }
                }
            }
            for s3 in 0..self.object_count {
                let next = self.hom(h.s2, s3);
                for &a in &h.pairs {
                    for &b in &next.pairs {
                        let c = (r.mul(b.0, a.0), r.mul(b.1, a.1));
                        if self.hom(h.s1, s3).pairs.binary_search(&c).is_err() {
                            out.push("composition lands in the hom", [obj(h.s1), obj(h.s2), obj(s3), pair(a), pair(b)]);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Exhaustive hom-group tables of `phi|phi`.
pub fn ab_comma(phi: &RingHom) -> AbCommaSummary {
    let (r, s) = (&phi.source, &phi.target);
    let mut hom_groups = Vec::with_capacity(s.len() * s.len());
    for s1 in s.elements() {
        for s2 in s.elements() {
            let mut pairs = Vec::new();
            for r1 in r.elements() {
                for r2 in r.elements() {
                    if s.mul(phi.apply(r2), s1) == s.mul(s2, phi.apply(r1)) {
                        pairs.push((r1, r2));
                    }
                }
            }
            hom_groups.push(HomGroup { s1, s2, pairs });
        }
    }
    AbCommaSummary {
        object_count: s.len(),
        hom_groups,
    }
}
