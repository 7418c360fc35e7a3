use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::ValidationReport;

/// A finite ring with identity, given by full addition and multiplication
/// tables over the elements `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    names: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

impl FiniteRing {
    /// Build from tables; only shape and range are checked here, the ring
    /// axioms by [`FiniteRing::validate`].
    pub fn new(names: Vec<String>, add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, zero: usize, one: usize) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::invalid("elements", "a ring has at least one element"));
        }
        let mut seen = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if seen.insert(name.as_str(), i).is_some() {
                return Err(Error::invalid(format!("elements[{i}]"), format!("duplicate element {name:?}")));
            }
        }
        for (label, table) in [("add", &add), ("mul", &mul)] {
            if table.len() != n {
                return Err(Error::invalid(label, format!("expected {n} rows, got {}", table.len())));
            }
            for (i, row) in table.iter().enumerate() {
                if row.len() != n {
                    return Err(Error::invalid(format!("{label}[{i}]"), format!("expected {n} entries")));
                }
                if let Some(j) = row.iter().position(|&v| v >= n) {
                    return Err(Error::invalid(format!("{label}[{i}][{j}]"), "element out of range"));
                }
            }
        }
        if zero >= n || one >= n {
            return Err(Error::invalid("zero/one", "element out of range"));
        }
        Ok(FiniteRing {
            names,
            add: add.concat(),
            mul: mul.concat(),
            zero,
            one,
        })
    }

    pub fn from_fn(
        names: Vec<String>,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let n = names.len();
        let table = |f: &dyn Fn(usize, usize) -> usize| (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        FiniteRing::new(names, table(&add), table(&mul), zero, one)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.len() + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.elements()
            .find(|&b| self.add(a, b) == self.zero)
            .expect("additive inverse in a validated ring")
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `k . a` for an integer `k >= 0`.
    pub fn times(&self, k: usize, a: usize) -> usize {
        (0..k).fold(self.zero, |acc, _| self.add(acc, a))
    }

    pub fn additive_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut t = a;
        while t != self.zero {
            t = self.add(t, a);
            k += 1;
        }
        k
    }

    /// The additive order of 1.
    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one)
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn add_row(&self, a: usize) -> &[usize] {
        &self.add[a * self.len()..(a + 1) * self.len()]
    }

    pub fn mul_row(&self, a: usize) -> &[usize] {
        &self.mul[a * self.len()..(a + 1) * self.len()]
    }

    /// Check the ring axioms by a full table scan.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let nm = |a: usize| self.names[a].clone();
        let els: Vec<usize> = self.elements().collect();
        for &a in &els {
            if self.add(a, self.zero) != a || self.add(self.zero, a) != a {
                r.push("additive identity", [nm(a)]);
            }
            if self.mul(a, self.one) != a || self.mul(self.one, a) != a {
                r.push("multiplicative identity", [nm(a)]);
            }
            if !els.iter().any(|&b| self.add(a, b) == self.zero) {
                r.push("additive inverse", [nm(a)]);
            }
            for &b in &els {
                if self.add(a, b) != self.add(b, a) {
                    r.push("addition is commutative", [nm(a), nm(b)]);
                }
                for &c in &els {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        r.push("addition is associative", [nm(a), nm(b), nm(c)]);
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        r.push("multiplication is associative", [nm(a), nm(b), nm(c)]);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        r.push("left distributivity", [nm(a), nm(b), nm(c)]);
                    }
                    if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        r.push("right distributivity", [nm(a), nm(b), nm(c)]);
                    }
                }
            }
        }
        r
    }

    /// `Z/n`.
    pub fn integers_mod(n: usize) -> FiniteRing {
        assert!(n >= 1);
        let names = (0..n).map(|i| i.to_string()).collect();
        FiniteRing::from_fn(names, |a, b| (a + b) % n, |a, b| (a * b) % n, 0, 1 % n).expect("Z/n")
    }

    pub fn zero_ring() -> FiniteRing {
        FiniteRing::integers_mod(1)
    }

    /// `F_2[x] / (modulus)`, the modulus given as a bit mask of coefficients
    /// (`0b111` is `x^2 + x + 1`). Elements are named as polynomials.
    pub fn f2_polynomial_quotient(modulus: u32) -> FiniteRing {
        assert!(modulus >= 2, "modulus of positive degree");
        let degree = 31 - modulus.leading_zeros();
        let n = 1usize << degree;
        let reduce = |mut p: u32| {
            for k in (degree..32).rev() {
                if p & (1 << k) != 0 {
                    p ^= modulus << (k - degree);
                }
            }
            p
        };
        let clmul = |a: u32, b: u32| {
            let mut out = 0u32;
            for k in 0..degree {
                if b & (1 << k) != 0 {
                    out ^= a << k;
                }
            }
            out
        };
        let names = (0..n as u32).map(f2_polynomial_name).collect();
        FiniteRing::from_fn(
            names,
            |a, b| a ^ b,
            |a, b| reduce(clmul(a as u32, b as u32)) as usize,
            0,
            1,
        )
        .expect("F2[x]/(m)")
    }

    /// `F_4 = F_2[x]/(x^2 + x + 1)`.
    pub fn f4() -> FiniteRing {
        FiniteRing::f2_polynomial_quotient(0b111)
    }

    /// The direct product `a x b`, elements named `(x,y)`.
    pub fn product(a: &FiniteRing, b: &FiniteRing) -> FiniteRing {
        let nb = b.len();
        let names = a
            .elements()
            .flat_map(|x| b.elements().map(move |y| (x, y)))
            .map(|(x, y)| format!("({},{})", a.name(x), b.name(y)))
            .collect();
        let split = |p: usize| (p / nb, p % nb);
        FiniteRing::from_fn(
            names,
            |p, q| {
                let ((x1, y1), (x2, y2)) = (split(p), split(q));
                a.add(x1, x2) * nb + b.add(y1, y2)
            },
            |p, q| {
                let ((x1, y1), (x2, y2)) = (split(p), split(q));
                a.mul(x1, x2) * nb + b.mul(y1, y2)
            },
            a.zero() * nb + b.zero(),
            a.one() * nb + b.one(),
        )
        .expect("product ring")
    }

    /// Upper triangular 2x2 matrices over `F_2`, the smallest non-commutative ring.
    pub fn upper_triangular_f2() -> FiniteRing {
        // Bits (a, b, d) of [[a, b], [0, d]].
        let unpack = |m: usize| (m >> 2 & 1, m >> 1 & 1, m & 1);
        let pack = |(a, b, d): (usize, usize, usize)| (a << 2) | (b << 1) | d;
        let names = (0..8)
            .map(|m| {
                let (a, b, d) = unpack(m);
                format!("[{a}{b};0{d}]")
            })
            .collect();
        FiniteRing::from_fn(
            names,
            |x, y| x ^ y,
            |x, y| {
                let ((a, b, d), (e, f, h)) = (unpack(x), unpack(y));
                pack((a & e, (a & f) ^ (b & h), d & h))
            },
            0,
            pack((1, 0, 1)),
        )
        .expect("upper triangular matrices")
    }

    /// Every ring with identity of order at most 4, up to isomorphism.
    pub fn small_rings() -> Vec<(String, FiniteRing)> {
        vec![
            ("0".into(), FiniteRing::zero_ring()),
            ("Z/2".into(), FiniteRing::integers_mod(2)),
            ("Z/3".into(), FiniteRing::integers_mod(3)),
            ("Z/4".into(), FiniteRing::integers_mod(4)),
            ("F4".into(), FiniteRing::f4()),
            ("F2xF2".into(), FiniteRing::product(&FiniteRing::integers_mod(2), &FiniteRing::integers_mod(2))),
            ("F2[x]/(x^2)".into(), FiniteRing::f2_polynomial_quotient(0b100)),
        ]
    }
}

fn f2_polynomial_name(p: u32) -> String {
    if p == 0 {
        return "0".into();
    }
    let terms: Vec<String> = (0..32)
        .rev()
        .filter(|k| p & (1 << k) != 0)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            k => format!("x^{k}"),
        })
        .collect();
    terms.join("+")
}

/// An additive, multiplicative and unital map between finite rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingHom {
    pub source: Arc<FiniteRing>,
    pub target: Arc<FiniteRing>,
    pub map: Vec<usize>,
}

impl RingHom {
    pub fn new(source: Arc<FiniteRing>, target: Arc<FiniteRing>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::invalid("map", format!("expected {} entries", source.len())));
        }
        if let Some(i) = map.iter().position(|&v| v >= target.len()) {
            return Err(Error::invalid(format!("map[{i}]"), "element out of range"));
        }
        Ok(RingHom { source, target, map })
    }

    pub fn identity(r: &Arc<FiniteRing>) -> RingHom {
        RingHom {
            source: r.clone(),
            target: r.clone(),
            map: r.elements().collect(),
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn then(&self, other: &RingHom) -> RingHom {
        RingHom {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&a| other.map[a]).collect(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.target.len()];
        for &a in &self.map {
            hit[a] = true;
        }
        self.source.len() == self.target.len() && hit.iter().all(|&h| h)
    }

    pub fn validate(&self) -> ValidationReport {
        let (s, t) = (&self.source, &self.target);
        let mut r = ValidationReport::default();
        if self.map[s.one()] != t.one() {
            r.push("preserves one", [s.name(s.one()).to_string()]);
        }
        for a in s.elements() {
            for b in s.elements() {
                let w = || [s.name(a).to_string(), s.name(b).to_string()];
                if self.map[s.add(a, b)] != t.add(self.map[a], self.map[b]) {
                    r.push("preserves addition", w());
                }
                if self.map[s.mul(a, b)] != t.mul(self.map[a], self.map[b]) {
                    r.push("preserves multiplication", w());
                }
            }
        }
        r
    }
}

/// A small list of elements generating `r` as a ring, chosen greedily.
pub fn ring_generators(r: &FiniteRing) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut inside = subring(r, &gens);
    for a in r.elements() {
        if !inside[a] {
            gens.push(a);
            inside = subring(r, &gens);
        }
    }
    gens
}

fn subring(r: &FiniteRing, gens: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; r.len()];
    let mut found = Vec::new();
    let mut queue: VecDeque<usize> = [r.zero(), r.one()].into_iter().chain(gens.iter().copied()).collect();
    while let Some(a) = queue.pop_front() {
        if inside[a] {
            continue;
        }
        inside[a] = true;
        found.push(a);
        for &b in &found {
            queue.extend([r.add(a, b), r.mul(a, b), r.mul(b, a)]);
        }
    }
    inside
}

/// Extend `gens -> images` to a ring homomorphism, if one exists.
fn extend_hom(s: &FiniteRing, t: &FiniteRing, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; s.len()];
    let mut found: Vec<usize> = Vec::new();
    let mut queue: VecDeque<(usize, usize)> = [(s.zero(), t.zero()), (s.one(), t.one())]
        .into_iter()
        .chain(gens.iter().copied().zip(images.iter().copied()))
        .collect();
    while let Some((a, fa)) = queue.pop_front() {
        if map[a] != usize::MAX {
            if map[a] != fa {
                return None;
            }
            continue;
        }
        map[a] = fa;
        found.push(a);
        for &b in &found {
            let fb = map[b];
            queue.push_back((s.add(a, b), t.add(fa, fb)));
            queue.push_back((s.mul(a, b), t.mul(fa, fb)));
            queue.push_back((s.mul(b, a), t.mul(fb, fa)));
        }
    }
    // Pairs discovered at the same time are checked when the later one lands.
    (found.len() == s.len()).then_some(map)
}

fn for_each_tuple(len: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut cur = vec![0usize; k];
    loop {
        if !f(&cur) {
            return;
        }
        let mut i = 0;
        loop {
            if i == k {
                return;
            }
            cur[i] += 1;
            if cur[i] < len {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Every ring homomorphism `s -> t`.
pub fn ring_homs(s: &Arc<FiniteRing>, t: &Arc<FiniteRing>) -> Vec<RingHom> {
    let gens = ring_generators(s);
    let mut out = Vec::new();
    for_each_tuple(t.len(), gens.len(), |images| {
        if let Some(map) = extend_hom(s, t, &gens, images) {
            out.push(RingHom {
                source: s.clone(),
                target: t.clone(),
                map,
            });
        }
        true
    });
    out
}

/// Invariants preserved by ring isomorphisms, used to prune the search.
fn signature(r: &FiniteRing, a: usize) -> (usize, usize, usize) {
    let mut powers = vec![a];
    let mut p = a;
    loop {
        p = r.mul(p, a);
        if let Some(i) = powers.iter().position(|&q| q == p) {
            return (r.additive_order(a), i, powers.len() - i);
        }
        powers.push(p);
    }
}

/// A ring isomorphism `s -> t`, if one exists.
pub fn find_ring_isomorphism(s: &Arc<FiniteRing>, t: &Arc<FiniteRing>) -> Option<RingHom> {
    if s.len() != t.len() {
        return None;
    }
    let gens = ring_generators(s);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let sig = signature(s, g);
            t.elements().filter(|&b| signature(t, b) == sig).collect()
        })
        .collect();
    let mut result = None;
    let sizes: Vec<usize> = candidates.iter().map(Vec::len).collect();
    if sizes.contains(&0) {
        return None;
    }
    let max = *sizes.iter().max().unwrap_or(&1);
    for_each_tuple(max, gens.len(), |idx| {
        if idx.iter().zip(&sizes).any(|(&i, &n)| i >= n) {
            return true;
        }
        let images: Vec<usize> = idx.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Some(map) = extend_hom(s, t, &gens, &images) {
            let h = RingHom {
                source: s.clone(),
                target: t.clone(),
                map,
            };
            if h.is_bijective() {
                result = Some(h);
                return false;
            }
        }
        true
    });
    result
}
