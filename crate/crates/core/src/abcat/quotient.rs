use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::comma::ab_comma;
use super::ring::{FiniteRing, RingHom};
use crate::error::{Error, Result};
use crate::System;

/// Largest ambient (pre-quotient) ring that is materialised.
pub const MAX_AMBIENT: usize = 1 << 16;

/// Largest quotient ring whose tables are built.
pub const MAX_QUOTIENT: usize = 256;

/// Finite presentations of the bo-quotient `S'` of the kernel of `phi: R -> S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Presentation {
    /// `Z/n[S]` modulo the relations making `r |-> x_phi(r)` additive, where
    /// `n` is the characteristic of `R`. Universal for arbitrary rings.
    Integral,
    /// The monoid ring `R[S]` modulo `x_phi(r) - r x_1`, with coefficients
    /// central. Agrees with `Integral` when `R` and `S` commute appropriately.
    MonoidRing,
    /// `R[x_s | s in S] / (x_s x_t - x_st, x_phi(r) - r)` reduced to the
    /// finite ring `R 1 + R[S]`, the unit `1` kept apart from `x_1`.
    Polynomial,
}

impl Presentation {
    pub const ALL: [Presentation; 3] = [Presentation::Integral, Presentation::MonoidRing, Presentation::Polynomial];
}

/// `K[M]` for a finite coefficient ring `K` and a finite monoid basis `M`,
/// coefficients commuting with the basis. Elements are encoded as integers
/// in base `|K|`.
struct MonoidAlgebra {
    coeff: Arc<FiniteRing>,
    basis: Vec<String>,
    table: Vec<usize>,
    unit: usize,
    size: usize,
}

impl MonoidAlgebra {
    fn new(coeff: Arc<FiniteRing>, basis: Vec<String>, table: Vec<usize>, unit: usize) -> Result<Self> {
        let k = basis.len();
        let size = u32::try_from(k)
            .ok()
            .and_then(|k| coeff.len().checked_pow(k))
            .filter(|&s| s <= MAX_AMBIENT)
            .ok_or(Error::SizeBound {
                what: "monoid ring".into(),
                actual: (coeff.len() as f64).powi(k as i32).min(usize::MAX as f64) as usize,
                limit: MAX_AMBIENT,
            })?;
        Ok(MonoidAlgebra { coeff, basis, table, unit, size })
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn encode(&self, v: &[usize]) -> usize {
        v.iter().rev().fold(0, |acc, &c| acc * self.coeff.len() + c)
    }

    fn decode(&self, mut x: usize) -> Vec<usize> {
        let q = self.coeff.len();
        (0..self.dim())
            .map(|_| {
                let c = x % q;
                x /= q;
                c
            })
            .collect()
    }

    fn zero_vec(&self) -> Vec<usize> {
        vec![self.coeff.zero(); self.dim()]
    }

    /// `c . x_m`.
    fn monomial(&self, c: usize, m: usize) -> Vec<usize> {
        let mut v = self.zero_vec();
        v[m] = c;
        v
    }

    fn add(&self, u: &[usize], v: &[usize]) -> Vec<usize> {
        u.iter().zip(v).map(|(&a, &b)| self.coeff.add(a, b)).collect()
    }

    fn neg(&self, u: &[usize]) -> Vec<usize> {
        u.iter().map(|&a| self.coeff.neg(a)).collect()
    }

    fn mul(&self, u: &[usize], v: &[usize]) -> Vec<usize> {
        let k = self.dim();
        let mut out = self.zero_vec();
        for (m, &a) in u.iter().enumerate() {
            if a == self.coeff.zero() {
                continue;
            }
            for (n, &b) in v.iter().enumerate() {
                let slot = self.table[m * k + n];
                out[slot] = self.coeff.add(out[slot], self.coeff.mul(a, b));
            }
        }
        out
    }

    fn render(&self, v: &[usize]) -> String {
        let k = &self.coeff;
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != k.zero())
            .map(|(m, &c)| {
                if c == k.one() {
                    self.basis[m].clone()
                } else {
                    format!("{}*{}", k.name(c), self.basis[m])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// The two-sided ideal generated by `gens`, as a membership table.
struct Ideal {
    inside: Vec<bool>,
    members: Vec<usize>,
}

impl Ideal {
    fn generate(alg: &MonoidAlgebra, gens: &[Vec<usize>]) -> Ideal {
        let zero = alg.encode(&alg.zero_vec());
        let mut ideal = Ideal {
            inside: vec![false; alg.size],
            members: vec![zero],
        };
        ideal.inside[zero] = true;
        let monomials: Vec<Vec<usize>> = alg
            .coeff
            .elements()
            .filter(|&c| c != alg.coeff.zero())
            .flat_map(|c| (0..alg.dim()).map(move |m| (c, m)))
            .map(|(c, m)| alg.monomial(c, m))
            .collect();
        let mut queue: Vec<Vec<usize>> = gens.to_vec();
        // A subgroup generated by G is closed under multiplication by a
        // monomial as soon as each product with an element of G lies in it.
        while let Some(g) = queue.pop() {
            if ideal.inside[alg.encode(&g)] {
                continue;
            }
            ideal.extend(alg, &g);
            for m in &monomials {
                queue.push(alg.mul(m, &g));
                queue.push(alg.mul(&g, m));
            }
        }
        ideal
    }

    /// Replace the subgroup `I` by `I + <g>`.
    fn extend(&mut self, alg: &MonoidAlgebra, g: &[usize]) {
        let old: Vec<Vec<usize>> = self.members.iter().map(|&x| alg.decode(x)).collect();
        let mut t = g.to_vec();
        while !self.inside[alg.encode(&t)] {
            for i in &old {
                let s = alg.encode(&alg.add(i, &t));
                if !self.inside[s] {
                    self.inside[s] = true;
                    self.members.push(s);
                }
            }
            t = alg.add(&t, g);
        }
    }

    fn contains(&self, alg: &MonoidAlgebra, v: &[usize]) -> bool {
        self.inside[alg.encode(v)]
    }
}

/// The quotient ring `alg / ideal`, with the class of each ambient element.
fn quotient_ring(alg: &MonoidAlgebra, ideal: &Ideal) -> Result<(FiniteRing, Vec<usize>)> {
    let members: Vec<Vec<usize>> = ideal.members.iter().map(|&x| alg.decode(x)).collect();
    let mut class = vec![usize::MAX; alg.size];
    let mut reps: Vec<Vec<usize>> = Vec::new();
    for x in 0..alg.size {
        if class[x] != usize::MAX {
            continue;
        }
        let v = alg.decode(x);
        for i in &members {
            class[alg.encode(&alg.add(&v, i))] = reps.len();
        }
        reps.push(v);
    }
    let n = reps.len();
    if n > MAX_QUOTIENT {
        return Err(Error::SizeBound {
            what: "quotient ring".into(),
            actual: n,
            limit: MAX_QUOTIENT,
        });
    }
    let names = reps.iter().map(|v| alg.render(v)).collect();
    let of = |v: Vec<usize>| class[alg.encode(&v)];
    let zero = of(alg.zero_vec());
    let one = of(alg.monomial(alg.coeff.one(), alg.unit));
    let ring = FiniteRing::from_fn(
        names,
        |a, b| of(alg.add(&reps[a], &reps[b])),
        |a, b| of(alg.mul(&reps[a], &reps[b])),
        zero,
        one,
    )?;
    Ok((ring, class))
}

/// The quotient `psi: R -> S'` of the bo- or so-kernel of `phi: R -> S`, with
/// `theta: S -> S'` the components of the codescent 2-cell.
#[derive(Debug, Clone)]
pub struct AbQuotient {
    pub system: System,
    pub presentation: Presentation,
    pub ring: Arc<FiniteRing>,
    pub psi: RingHom,
    pub theta: Vec<usize>,
    pub ambient_size: usize,
    pub ideal_size: usize,
    /// Whether the so cocone condition `theta(1) = 1` already holds in the
    /// bo-quotient.
    pub unit_condition_automatic: bool,
}

struct Presented {
    alg: MonoidAlgebra,
    relations: Vec<Vec<usize>>,
    unit_condition: Vec<usize>,
    x: Vec<usize>,
    psi: Vec<Vec<usize>>,
}

fn present(phi: &RingHom, presentation: Presentation) -> Result<Presented> {
    let (r, s) = (&phi.source, &phi.target);
    let ns = s.len();
    let names: Vec<String> = s.elements().map(|e| format!("x[{}]", s.name(e))).collect();
    let table: Vec<usize> = s.elements().flat_map(|a| s.elements().map(move |b| s.mul(a, b))).collect();
    match presentation {
        Presentation::Integral => {
            let z = Arc::new(FiniteRing::integers_mod(r.characteristic()));
            let alg = MonoidAlgebra::new(z.clone(), names, table, s.one())?;
            let x = |e: usize| alg.monomial(z.one(), e);
            let mut relations = Vec::new();
            for a in r.elements() {
                for b in r.elements() {
                    let lhs = alg.add(&x(phi.apply(a)), &x(phi.apply(b)));
                    relations.push(alg.add(&lhs, &alg.neg(&x(phi.apply(r.add(a, b))))));
                }
            }
            let psi = r.elements().map(|a| x(phi.apply(a))).collect();
            let unit_condition = alg.zero_vec();
            let xs = (0..ns).map(|e| alg.encode(&x(e))).collect();
            Ok(Presented { alg, relations, unit_condition, x: xs, psi })
        }
        Presentation::MonoidRing => {
            let alg = MonoidAlgebra::new(r.clone(), names, table, s.one())?;
            let relations = r
                .elements()
                .map(|a| alg.add(&alg.monomial(r.one(), phi.apply(a)), &alg.neg(&alg.monomial(a, s.one()))))
                .collect();
            let psi = r.elements().map(|a| alg.monomial(a, s.one())).collect();
            let unit_condition = alg.zero_vec();
            let xs = (0..ns).map(|e| alg.encode(&alg.monomial(r.one(), e))).collect();
            Ok(Presented { alg, relations, unit_condition, x: xs, psi })
        }
        Presentation::Polynomial => {
            // Basis: the elements of S, then a separate unit `1`.
            let e = ns;
            let k = ns + 1;
            let mut names = names;
            names.push("1".into());
            let mut table = vec![0; k * k];
            for a in 0..k {
                for b in 0..k {
                    table[a * k + b] = match (a == e, b == e) {
                        (true, _) => b,
                        (_, true) => a,
                        _ => s.mul(a, b),
                    };
                }
            }
            let alg = MonoidAlgebra::new(r.clone(), names, table, e)?;
            let relations = r
                .elements()
                .map(|a| alg.add(&alg.monomial(r.one(), phi.apply(a)), &alg.neg(&alg.monomial(a, e))))
                .collect();
            let psi = r.elements().map(|a| alg.monomial(a, e)).collect();
            let unit_condition = alg.add(&alg.monomial(r.one(), s.one()), &alg.neg(&alg.monomial(r.one(), e)));
            let xs = (0..ns).map(|x| alg.encode(&alg.monomial(r.one(), x))).collect();
            Ok(Presented { alg, relations, unit_condition, x: xs, psi })
        }
    }
}

/// The bo- or so-quotient of the kernel of `phi`, computed from `presentation`.
pub fn ab_quotient_with(phi: &RingHom, system: System, presentation: Presentation) -> Result<AbQuotient> {
    if system == System::Bof {
        return Err(Error::Precondition("the Ab-category quotients cover bo and so only".into()));
    }
    let p = present(phi, presentation)?;
    let alg = &p.alg;
    let bo_ideal = Ideal::generate(alg, &p.relations);
    let unit_condition_automatic = bo_ideal.contains(alg, &p.unit_condition);
    let ideal = if system == System::So && !unit_condition_automatic {
        let mut gens = p.relations.clone();
        gens.push(p.unit_condition.clone());
        Ideal::generate(alg, &gens)
    } else {
        bo_ideal
    };
    let (ring, class) = quotient_ring(alg, &ideal)?;
    let ring = Arc::new(ring);
    let psi = RingHom::new(
        phi.source.clone(),
        ring.clone(),
        p.psi.iter().map(|v| class[alg.encode(v)]).collect(),
    )?;
    let theta = p.x.iter().map(|&x| class[x]).collect();
    Ok(AbQuotient {
        system,
        presentation,
        ring,
        psi,
        theta,
        ambient_size: alg.size,
        ideal_size: ideal.members.len(),
        unit_condition_automatic,
    })
}

/// [`ab_quotient_with`] using the integral presentation.
pub fn ab_quotient(phi: &RingHom, system: System) -> Result<AbQuotient> {
    ab_quotient_with(phi, system, Presentation::Integral)
}

/// Effectivity of the kernel of `phi`: the comparison from `phi|phi` to
/// `psi|psi` is `s |-> theta(s)` on objects and the identity on hom pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbEffectivity {
    pub s_size: usize,
    pub sprime_size: usize,
    pub theta_bijective: bool,
    pub homs_agree: bool,
    pub effective: bool,
}

pub fn ab_effectivity(phi: &RingHom, q: &AbQuotient) -> AbEffectivity {
    let (s_size, sprime_size) = (phi.target.len(), q.ring.len());
    let mut hit = vec![false; sprime_size];
    for &t in &q.theta {
        hit[t] = true;
    }
    let theta_bijective = s_size == sprime_size && hit.iter().all(|&h| h);
    let homs_agree = theta_bijective && {
        let a = ab_comma(phi);
        let b = ab_comma(&q.psi);
        phi.target
            .elements()
            .all(|s1| phi.target.elements().all(|s2| a.hom(s1, s2).pairs == b.hom(q.theta[s1], q.theta[s2]).pairs))
    };
    AbEffectivity {
        s_size,
        sprime_size,
        theta_bijective,
        homs_agree,
        effective: theta_bijective && homs_agree,
    }
}
