use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::fincat::{shapes, FinCategory, MorId, ObjId, ValidationReport};

/// A finitely complete base: presheaves on a finite index category, with
/// finite sets as presheaves on the terminal category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Base {
    index: Arc<FinCategory>,
    sets: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseKind {
    FiniteSets,
    FinitePresheaves,
}

impl Base {
    pub fn sets() -> Arc<Base> {
        Arc::new(Base {
            index: Arc::new(shapes::terminal()),
            sets: true,
        })
    }

    pub fn presheaves(index: Arc<FinCategory>) -> Arc<Base> {
        Arc::new(Base { index, sets: false })
    }

    pub fn kind(&self) -> BaseKind {
        if self.sets {
            BaseKind::FiniteSets
        } else {
            BaseKind::FinitePresheaves
        }
    }

    pub fn index(&self) -> &Arc<FinCategory> {
        &self.index
    }

    /// A finite set, as an object of this base (sets only).
    pub fn set(&self, n: usize) -> BaseObject {
        assert!(self.sets, "a bare set is an object of the finite-set base");
        BaseObject {
            fibres: vec![n],
            actions: vec![(0..n).collect()],
        }
    }

    pub fn terminal(&self) -> BaseObject {
        BaseObject {
            fibres: vec![1; self.index.object_count()],
            actions: vec![vec![0]; self.index.morphism_count()],
        }
    }

    /// A presheaf from fibre sizes and, for each morphism `m: x -> y` of the
    /// index, its action `P(y) -> P(x)`.
    pub fn object(&self, fibres: Vec<usize>, actions: Vec<Vec<usize>>) -> BaseObject {
        BaseObject { fibres, actions }
    }

    /// Functoriality of the actions (contravariant).
    pub fn validate_object(&self, p: &BaseObject) -> ValidationReport {
        let ix = &self.index;
        let mut r = ValidationReport::default();
        if p.fibres.len() != ix.object_count() || p.actions.len() != ix.morphism_count() {
            r.push("presheaf shape", ["fibre or action count"]);
            return r;
        }
        for m in ix.morphisms() {
            let (x, y) = (ix.dom(m), ix.cod(m));
            let a = &p.actions[m];
            if a.len() != p.fibres[y] || a.iter().any(|&v| v >= p.fibres[x]) {
                r.push("presheaf action is a map", [ix.morphism_name(m).to_string()]);
                return r;
            }
        }
        for x in ix.objects() {
            let id = ix.identity(x);
            if p.actions[id].iter().enumerate().any(|(i, &v)| i != v) {
                r.push("presheaf preserves identities", [ix.object_name(x).to_string()]);
            }
        }
        for (g, f, gf) in ix.composition_entries() {
            // P(g f) = P(f) P(g)
            for e in 0..p.fibres[ix.cod(g)] {
                if p.actions[gf][e] != p.actions[f][p.actions[g][e]] {
                    r.push(
                        "presheaf preserves composition",
                        [ix.morphism_name(g).to_string(), ix.morphism_name(f).to_string(), e.to_string()],
                    );
                    break;
                }
            }
        }
        r
    }

    /// Naturality of `f: A -> B`.
    pub fn validate_map(&self, f: &BaseMap) -> ValidationReport {
        let ix = &self.index;
        let mut r = ValidationReport::default();
        if f.components.len() != ix.object_count() {
            r.push("natural map shape", ["component count"]);
            return r;
        }
        for x in ix.objects() {
            let c = &f.components[x];
            if c.len() != f.source.fibres[x] || c.iter().any(|&v| v >= f.target.fibres[x]) {
                r.push("component is a map", [ix.object_name(x).to_string()]);
                return r;
            }
        }
        for m in ix.morphisms() {
            let (x, y) = (ix.dom(m), ix.cod(m));
            for e in 0..f.source.fibres[y] {
                if f.components[x][f.source.act(m, e)] != f.target.act(m, f.components[y][e]) {
                    r.push("naturality", [ix.morphism_name(m).to_string(), e.to_string()]);
                    break;
                }
            }
        }
        r
    }

    pub fn pullback(&self, f: &BaseMap, g: &BaseMap) -> BasePullback {
        let ix = &self.index;
        let mut pairs = Vec::with_capacity(ix.object_count());
        let mut lookup = Vec::with_capacity(ix.object_count());
        for x in ix.objects() {
            let mut ps = Vec::new();
            let mut lk = HashMap::new();
            for a in 0..f.source.fibres[x] {
                for b in 0..g.source.fibres[x] {
                    if f.components[x][a] == g.components[x][b] {
                        lk.insert((a, b), ps.len());
                        ps.push((a, b));
                    }
                }
            }
            pairs.push(ps);
            lookup.push(lk);
        }
        let actions = ix
            .morphisms()
            .map(|m| {
                let (x, y) = (ix.dom(m), ix.cod(m));
                pairs[y]
                    .iter()
                    .map(|&(a, b)| lookup[x][&(f.source.act(m, a), g.source.act(m, b))])
                    .collect()
            })
            .collect();
        let obj = BaseObject {
            fibres: pairs.iter().map(Vec::len).collect(),
            actions,
        };
        let proj = |pick: fn(&(usize, usize)) -> usize, target: &BaseObject| BaseMap {
            source: obj.clone(),
            target: target.clone(),
            components: pairs.iter().map(|ps| ps.iter().map(pick).collect()).collect(),
        };
        let p1 = proj(|p| p.0, &f.source);
        let p2 = proj(|p| p.1, &g.source);
        BasePullback {
            obj,
            p1,
            p2,
            pairs,
            lookup,
        }
    }

    pub fn product(&self, a: &BaseObject, b: &BaseObject) -> BasePullback {
        let t = self.terminal();
        self.pullback(&self.to_terminal(a, &t), &self.to_terminal(b, &t))
    }

    fn to_terminal(&self, a: &BaseObject, t: &BaseObject) -> BaseMap {
        BaseMap {
            source: a.clone(),
            target: t.clone(),
            components: a.fibres.iter().map(|&n| vec![0; n]).collect(),
        }
    }

    /// The pointwise quotient of `b` by the equivalence relation generated
    /// by `(s e, t e)`, with the quotient map.
    pub fn coequalizer(&self, s: &BaseMap, t: &BaseMap) -> BaseMap {
        let ix = &self.index;
        let b = &s.target;
        let mut components = Vec::with_capacity(ix.object_count());
        let mut fibres = Vec::with_capacity(ix.object_count());
        for x in ix.objects() {
            let n = b.fibres[x];
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut [usize], mut a: usize) -> usize {
                while p[a] != a {
                    p[a] = p[p[a]];
                    a = p[a];
                }
                a
            }
            for e in 0..s.source.fibres[x] {
                let (u, v) = (find(&mut parent, s.components[x][e]), find(&mut parent, t.components[x][e]));
                if u != v {
                    let (lo, hi) = (u.min(v), u.max(v));
                    parent[hi] = lo;
                }
            }
            let mut class = vec![usize::MAX; n];
            let mut count = 0;
            for a in 0..n {
                let root = find(&mut parent, a);
                if class[root] == usize::MAX {
                    class[root] = count;
                    count += 1;
                }
                class[a] = class[root];
            }
            components.push(class);
            fibres.push(count);
        }
        let mut actions = vec![Vec::new(); ix.morphism_count()];
        for m in ix.morphisms() {
            let (x, y) = (ix.dom(m), ix.cod(m));
            let mut act = vec![usize::MAX; fibres[y]];
            for e in 0..b.fibres[y] {
                act[components[y][e]] = components[x][b.act(m, e)];
            }
            actions[m] = act;
        }
        BaseMap {
            source: b.clone(),
            target: BaseObject { fibres, actions },
            components,
        }
    }

    /// Pointwise image factorisation `f = m . e`, `e` surjective, `m` injective.
    pub fn image(&self, f: &BaseMap) -> (BaseMap, BaseMap) {
        let ix = &self.index;
        let mut e_comp = Vec::new();
        let mut m_comp = Vec::new();
        let mut slot = Vec::new();
        for x in ix.objects() {
            let mut hit: Vec<usize> = f.components[x].clone();
            hit.sort_unstable();
            hit.dedup();
            let pos: HashMap<usize, usize> = hit.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            e_comp.push(f.components[x].iter().map(|v| pos[v]).collect::<Vec<_>>());
            m_comp.push(hit);
            slot.push(pos);
        }
        let actions = ix
            .morphisms()
            .map(|m| {
                let (x, y) = (ix.dom(m), ix.cod(m));
                m_comp[y].iter().map(|&v| slot[x][&f.target.act(m, v)]).collect()
            })
            .collect();
        let img = BaseObject {
            fibres: m_comp.iter().map(Vec::len).collect(),
            actions,
        };
        (
            BaseMap {
                source: f.source.clone(),
                target: img.clone(),
                components: e_comp,
            },
            BaseMap {
                source: img,
                target: f.target.clone(),
                components: m_comp,
            },
        )
    }

    /// The subobject of `a` on the elements accepted by `keep`, which must
    /// be closed under the actions.
    pub fn subobject(&self, a: &BaseObject, keep: impl Fn(ObjId, usize) -> bool) -> BaseMap {
        let ix = &self.index;
        let components: Vec<Vec<usize>> = ix.objects().map(|x| (0..a.fibres[x]).filter(|&e| keep(x, e)).collect()).collect();
        let pos: Vec<HashMap<usize, usize>> =
            components.iter().map(|c| c.iter().enumerate().map(|(i, &v)| (v, i)).collect()).collect();
        let actions = ix
            .morphisms()
            .map(|m| {
                let (x, y) = (ix.dom(m), ix.cod(m));
                components[y].iter().map(|&v| pos[x][&a.act(m, v)]).collect()
            })
            .collect();
        BaseMap {
            source: BaseObject {
                fibres: components.iter().map(Vec::len).collect(),
                actions,
            },
            target: a.clone(),
            components,
        }
    }
}

/// A presheaf of finite sets: fibre sizes and, per index morphism
/// `m: x -> y`, the action `P(y) -> P(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseObject {
    pub fibres: Vec<usize>,
    pub actions: Vec<Vec<usize>>,
}

impl BaseObject {
    pub fn act(&self, m: MorId, e: usize) -> usize {
        self.actions[m][e]
    }

    pub fn size(&self) -> usize {
        self.fibres.iter().sum()
    }
}

/// A natural map between presheaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseMap {
    pub source: BaseObject,
    pub target: BaseObject,
    pub components: Vec<Vec<usize>>,
}

impl BaseMap {
    pub fn identity(a: &BaseObject) -> BaseMap {
        BaseMap {
            source: a.clone(),
            target: a.clone(),
            components: a.fibres.iter().map(|&n| (0..n).collect()).collect(),
        }
    }

    pub fn at(&self, x: ObjId, e: usize) -> usize {
        self.components[x][e]
    }

    pub fn then(&self, g: &BaseMap) -> BaseMap {
        BaseMap {
            source: self.source.clone(),
            target: g.target.clone(),
            components: self
                .components
                .iter()
                .zip(&g.components)
                .map(|(f, g)| f.iter().map(|&v| g[v]).collect())
                .collect(),
        }
    }

    pub fn same_as(&self, g: &BaseMap) -> bool {
        self.components == g.components
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|c| {
            let mut v = c.clone();
            v.sort_unstable();
            v.windows(2).all(|w| w[0] != w[1])
        })
    }

    pub fn is_surjective(&self) -> bool {
        self.components.iter().zip(&self.target.fibres).all(|(c, &n)| {
            let mut hit = vec![false; n];
            for &v in c {
                hit[v] = true;
            }
            hit.into_iter().all(|h| h)
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Pointwise inverse of a bijection.
    pub fn inverse(&self) -> Option<BaseMap> {
        if !self.is_bijective() {
            return None;
        }
        let components = self
            .components
            .iter()
            .map(|c| {
                let mut inv = vec![0; c.len()];
                for (i, &v) in c.iter().enumerate() {
                    inv[v] = i;
                }
                inv
            })
            .collect();
        Some(BaseMap {
            source: self.target.clone(),
            target: self.source.clone(),
            components,
        })
    }
}

/// A pullback `A x_C B` with its projections and pair lookup.
#[derive(Debug, Clone)]
pub struct BasePullback {
    pub obj: BaseObject,
    pub p1: BaseMap,
    pub p2: BaseMap,
    pub pairs: Vec<Vec<(usize, usize)>>,
    lookup: Vec<HashMap<(usize, usize), usize>>,
}

impl BasePullback {
    pub fn element(&self, x: ObjId, a: usize, b: usize) -> Option<usize> {
        self.lookup[x].get(&(a, b)).copied()
    }

    /// The map `Z -> A x_C B` induced by `h: Z -> A` and `k: Z -> B`.
    pub fn mediate(&self, h: &BaseMap, k: &BaseMap) -> Option<BaseMap> {
        let components = h
            .components
            .iter()
            .zip(&k.components)
            .enumerate()
            .map(|(x, (h, k))| h.iter().zip(k).map(|(&a, &b)| self.element(x, a, b)).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(BaseMap {
            source: h.source.clone(),
            target: self.obj.clone(),
            components,
        })
    }
}
