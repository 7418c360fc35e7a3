//! Finitely complete categories viewed as locally discrete 2-categories.
//!
//! With only identity 2-cells, the bo- and so-kernels of `f: A -> B` are the
//! extended kernel-pair diagram, the bo-quotient is the coequaliser of the
//! kernel pair, and the bof-quotient is a coequifier of equal 2-cells. Two
//! models are provided: a finite category whose limits and colimits are found
//! by searching for universal cones (meant for lattices), and finite sets.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, MorId, ObjId};

/// The finite-limit structure used by the checks below.
pub trait FiniteLimits {
    type Obj: Clone;
    type Map: Clone;

    fn dom(&self, f: &Self::Map) -> Self::Obj;
    fn cod(&self, f: &Self::Map) -> Self::Obj;
    fn identity(&self, a: &Self::Obj) -> Self::Map;
    /// `g . f`.
    fn then(&self, f: &Self::Map, g: &Self::Map) -> Self::Map;
    fn same(&self, f: &Self::Map, g: &Self::Map) -> bool;
    fn is_iso(&self, f: &Self::Map) -> bool;
    /// Projections `(p1, p2)` of a pullback of `f` and `g`.
    fn pullback(&self, f: &Self::Map, g: &Self::Map) -> Result<(Self::Map, Self::Map)>;
    /// The map into the pullback of `(p1, p2)` induced by `(h, k)`.
    fn mediate(&self, p1: &Self::Map, p2: &Self::Map, h: &Self::Map, k: &Self::Map) -> Result<Self::Map>;
    /// A coequaliser `q: y -> Q` of `u, v: x -> y`.
    fn coequalizer(&self, u: &Self::Map, v: &Self::Map) -> Result<Self::Map>;
    /// The map `Q -> cod h` through which `h` factors, for a coequaliser `q`.
    fn descend(&self, q: &Self::Map, h: &Self::Map) -> Option<Self::Map>;
}

pub fn kernel_pair<C: FiniteLimits>(c: &C, f: &C::Map) -> Result<(C::Map, C::Map)> {
    c.pullback(f, f)
}

/// `delta_f: A -> A x_B A`.
pub fn diagonal<C: FiniteLimits>(c: &C, f: &C::Map) -> Result<C::Map> {
    let (p1, p2) = kernel_pair(c, f)?;
    let id = c.identity(&c.dom(f));
    c.mediate(&p1, &p2, &id, &id)
}

/// The bo-quotient of the bo-kernel of `f`: the coequaliser of its kernel pair.
pub fn bo_quotient<C: FiniteLimits>(c: &C, f: &C::Map) -> Result<C::Map> {
    let (p1, p2) = kernel_pair(c, f)?;
    c.coequalizer(&p1, &p2)
}

/// The bof-quotient of the bof-kernel of `f`. Both 2-cells of the kernel
/// are the identity on `1_A`, so this is their coequifier, i.e. the
/// coequaliser of `1_A` with itself.
pub fn bof_quotient<C: FiniteLimits>(c: &C, f: &C::Map) -> Result<C::Map> {
    let id = c.identity(&c.dom(f));
    c.coequalizer(&id, &id)
}

/// `q` is a bo-quotient map: it is the quotient of its own kernel.
pub fn is_bo_quotient_map<C: FiniteLimits>(c: &C, q: &C::Map) -> Result<bool> {
    let e = bo_quotient(c, q)?;
    Ok(c.descend(&e, q).is_some_and(|h| c.is_iso(&h)))
}

/// The kernel pair of the quotient of `f`'s kernel is `f`'s kernel pair.
pub fn bo_quotient_is_effective<C: FiniteLimits>(c: &C, f: &C::Map) -> Result<bool> {
    let q = bo_quotient(c, f)?;
    let (p1, p2) = kernel_pair(c, f)?;
    let (k1, k2) = kernel_pair(c, &q)?;
    let comparison = c.mediate(&k1, &k2, &p1, &p2)?;
    Ok(c.is_iso(&comparison))
}

/// Summary of the locally discrete checks on one map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscreteMapReport {
    pub map: String,
    pub is_iso: bool,
    pub bo_quotient_map: bool,
    pub diagonal_bo_quotient_map: bool,
    pub effective: bool,
    pub bof_quotient_iso: bool,
}

pub fn map_report<C: FiniteLimits>(c: &C, f: &C::Map, name: String) -> Result<DiscreteMapReport> {
    let delta = diagonal(c, f)?;
    Ok(DiscreteMapReport {
        map: name,
        is_iso: c.is_iso(f),
        bo_quotient_map: is_bo_quotient_map(c, f)?,
        diagonal_bo_quotient_map: is_bo_quotient_map(c, &delta)?,
        effective: bo_quotient_is_effective(c, f)?,
        bof_quotient_iso: c.is_iso(&bof_quotient(c, f)?),
    })
}

/// A finite category whose limits are found by searching universal cones.
#[derive(Debug, Clone)]
pub struct SearchedLimits {
    pub cat: Arc<FinCategory>,
}

impl SearchedLimits {
    pub fn new(cat: Arc<FinCategory>) -> Self {
        SearchedLimits { cat }
    }

    fn out_of(&self, x: ObjId) -> impl Iterator<Item = MorId> + '_ {
        self.cat.objects().flat_map(move |y| self.cat.hom(x, y).iter().copied())
    }

    /// Cones `(h, k)` over the cospan `f, g` with vertex `z`.
    fn cones(&self, z: ObjId, f: MorId, g: MorId) -> Vec<(MorId, MorId)> {
        let c = &self.cat;
        let mut out = Vec::new();
        for &h in c.hom(z, c.dom(f)) {
            for &k in c.hom(z, c.dom(g)) {
                if c.compose(f, h) == c.compose(g, k) {
                    out.push((h, k));
                }
            }
        }
        out
    }
}

impl FiniteLimits for SearchedLimits {
    type Obj = ObjId;
    type Map = MorId;

    fn dom(&self, f: &MorId) -> ObjId {
        self.cat.dom(*f)
    }

    fn cod(&self, f: &MorId) -> ObjId {
        self.cat.cod(*f)
    }

    fn identity(&self, a: &ObjId) -> MorId {
        self.cat.identity(*a)
    }

    fn then(&self, f: &MorId, g: &MorId) -> MorId {
        self.cat.compose(*g, *f)
    }

    fn same(&self, f: &MorId, g: &MorId) -> bool {
        f == g
    }

    fn is_iso(&self, f: &MorId) -> bool {
        self.cat.is_iso_morphism(*f)
    }

    fn pullback(&self, f: &MorId, g: &MorId) -> Result<(MorId, MorId)> {
        let c = &self.cat;
        if c.cod(*f) != c.cod(*g) {
            return Err(Error::Precondition("pullback of maps with different codomains".into()));
        }
        for p in c.objects() {
            for (p1, p2) in self.cones(p, *f, *g) {
                let universal = c.objects().all(|z| {
                    self.cones(z, *f, *g).iter().all(|(h, k)| self.mediate(&p1, &p2, h, k).is_ok())
                });
                if universal {
                    return Ok((p1, p2));
                }
            }
        }
        Err(Error::Precondition(format!(
            "no pullback of {} and {}",
            c.morphism_name(*f),
            c.morphism_name(*g)
        )))
    }

    fn mediate(&self, p1: &MorId, p2: &MorId, h: &MorId, k: &MorId) -> Result<MorId> {
        let c = &self.cat;
        let found: Vec<MorId> = c
            .hom(c.dom(*h), c.dom(*p1))
            .iter()
            .copied()
            .filter(|&m| c.compose(*p1, m) == *h && c.compose(*p2, m) == *k)
            .collect();
        match found.as_slice() {
            [m] => Ok(*m),
            _ => Err(Error::Precondition(format!("{} mediating maps", found.len()))),
        }
    }

    fn coequalizer(&self, u: &MorId, v: &MorId) -> Result<MorId> {
        let c = &self.cat;
        let y = c.cod(*u);
        let coequalises = |q: MorId| c.compose(q, *u) == c.compose(q, *v);
        let candidates: Vec<MorId> = self.out_of(y).filter(|&q| coequalises(q)).collect();
        for &q in &candidates {
            if candidates.iter().all(|&h| self.descend(&q, &h).is_some()) {
                return Ok(q);
            }
        }
        Err(Error::Precondition(format!(
            "no coequaliser of {} and {}",
            c.morphism_name(*u),
            c.morphism_name(*v)
        )))
    }

    fn descend(&self, q: &MorId, h: &MorId) -> Option<MorId> {
        let c = &self.cat;
        let found: Vec<MorId> =
            c.hom(c.cod(*q), c.cod(*h)).iter().copied().filter(|&m| c.compose(m, *q) == *h).collect();
        match found.as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }
}

impl SearchedLimits {
    pub fn maps_into(&self, y: ObjId) -> Vec<MorId> {
        self.cat.objects().flat_map(|x| self.cat.hom(x, y).iter().copied()).collect()
    }
}

/// A map of finite sets `0..n -> 0..cod`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetMap {
    pub map: Vec<usize>,
    pub cod: usize,
}

impl SetMap {
    pub fn new(map: Vec<usize>, cod: usize) -> Result<Self> {
        if let Some(i) = map.iter().position(|&v| v >= cod) {
            return Err(Error::invalid(format!("map[{i}]"), "value out of range"));
        }
        Ok(SetMap { map, cod })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }
}

/// Every map `0..m -> 0..n`.
pub fn all_set_maps(m: usize, n: usize) -> Vec<SetMap> {
    let count = n.pow(m as u32);
    (0..count)
        .map(|mut k| {
            let map = (0..m)
                .map(|_| {
                    let v = k % n;
                    k /= n;
                    v
                })
                .collect();
            SetMap { map, cod: n }
        })
        .collect()
}

/// Finite sets and maps.
#[derive(Debug, Clone, Copy, Default)]
pub struct FinSets;

impl FiniteLimits for FinSets {
    type Obj = usize;
    type Map = SetMap;

    fn dom(&self, f: &SetMap) -> usize {
        f.map.len()
    }

    fn cod(&self, f: &SetMap) -> usize {
        f.cod
    }

    fn identity(&self, a: &usize) -> SetMap {
        SetMap {
            map: (0..*a).collect(),
            cod: *a,
        }
    }

    fn then(&self, f: &SetMap, g: &SetMap) -> SetMap {
        SetMap {
            map: f.map.iter().map(|&v| g.map[v]).collect(),
            cod: g.cod,
        }
    }

    fn same(&self, f: &SetMap, g: &SetMap) -> bool {
        f == g
    }

    fn is_iso(&self, f: &SetMap) -> bool {
        f.map.len() == f.cod && f.is_injective()
    }

    /// Pairs `(a, b)` with `f a = g b`, in lexicographic order.
    fn pullback(&self, f: &SetMap, g: &SetMap) -> Result<(SetMap, SetMap)> {
        if f.cod != g.cod {
            return Err(Error::Precondition("pullback of maps with different codomains".into()));
        }
        let pairs: Vec<(usize, usize)> = (0..f.map.len())
            .flat_map(|a| (0..g.map.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| f.map[a] == g.map[b])
            .collect();
        Ok((
            SetMap {
                map: pairs.iter().map(|p| p.0).collect(),
                cod: f.map.len(),
            },
            SetMap {
                map: pairs.iter().map(|p| p.1).collect(),
                cod: g.map.len(),
            },
        ))
    }

    fn mediate(&self, p1: &SetMap, p2: &SetMap, h: &SetMap, k: &SetMap) -> Result<SetMap> {
        let map = h
            .map
            .iter()
            .zip(&k.map)
            .map(|(&a, &b)| {
                (0..p1.map.len())
                    .find(|&e| p1.map[e] == a && p2.map[e] == b)
                    .ok_or_else(|| Error::Precondition("cone does not commute".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SetMap { map, cod: p1.map.len() })
    }

    fn coequalizer(&self, u: &SetMap, v: &SetMap) -> Result<SetMap> {
        let n = u.cod;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut a: usize) -> usize {
            while p[a] != a {
                p[a] = p[p[a]];
                a = p[a];
            }
            a
        }
        for (&a, &b) in u.map.iter().zip(&v.map) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut class = vec![usize::MAX; n];
        let mut count = 0;
        let mut map = Vec::with_capacity(n);
        for a in 0..n {
            let r = find(&mut parent, a);
            if class[r] == usize::MAX {
                class[r] = count;
                count += 1;
            }
            map.push(class[r]);
        }
        Ok(SetMap { map, cod: count })
    }

    fn descend(&self, q: &SetMap, h: &SetMap) -> Option<SetMap> {
        if !q.is_surjective() || q.map.len() != h.map.len() {
            return None;
        }
        let mut out = vec![usize::MAX; q.cod];
        for (&c, &v) in q.map.iter().zip(&h.map) {
            if out[c] == usize::MAX {
                out[c] = v;
            } else if out[c] != v {
                return None;
            }
        }
        Some(SetMap { map: out, cod: h.cod })
    }
}

/// Pullback stability of the bo-quotient class along every map into `cod f`
/// from sets of size at most `max_size`.
pub fn bo_quotient_stable_in_sets(f: &SetMap, max_size: usize) -> Result<bool> {
    let c = FinSets;
    for m in 0..=max_size {
        for g in all_set_maps(m, f.cod) {
            // The pullback of `f` along `g` is the first projection `P -> C`.
            let (p1, _) = c.pullback(&g, f)?;
            if !is_bo_quotient_map(&c, &p1)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
