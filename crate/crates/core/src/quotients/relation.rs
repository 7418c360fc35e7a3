use std::collections::HashMap;
use std::sync::Arc;

use crate::fincat::{FinCategory, FinFunctor, MorId, ObjId};

/// Cap on the number of witnesses recorded per failed condition.
pub(crate) const MAX_WITNESSES: usize = 16;

pub(crate) type Failures = Vec<Vec<String>>;

pub(crate) fn push_capped(out: &mut Failures, witness: Vec<String>) {
    if out.len() < MAX_WITNESSES {
        out.push(witness);
    }
}

/// A pair `(s, t): E => A` read as a relation on the objects and on the
/// morphisms of `A`.
pub(crate) struct PairRelation {
    pub a: Arc<FinCategory>,
    pub e: Arc<FinCategory>,
    pub objects: HashMap<(ObjId, ObjId), ObjId>,
    pub morphisms: HashMap<(MorId, MorId), MorId>,
}

/// Failures of the four equivalence-relation clauses, in order: jointly
/// monic, reflexive, symmetric, transitive.
pub(crate) struct RelationFailures {
    pub monic: Failures,
    pub reflexive: Failures,
    pub symmetric: Failures,
    pub transitive: Failures,
}

impl RelationFailures {
    pub fn into_named(self) -> [(&'static str, Failures); 4] {
        [
            ("jointly monic", self.monic),
            ("reflexive", self.reflexive),
            ("symmetric", self.symmetric),
            ("transitive", self.transitive),
        ]
    }

    /// First failure as a one-line message.
    pub fn summary(&self) -> Option<String> {
        let named = [
            ("jointly monic", &self.monic),
            ("reflexive", &self.reflexive),
            ("symmetric", &self.symmetric),
            ("transitive", &self.transitive),
        ];
        named.iter().find_map(|(name, f)| {
            f.first().map(|w| format!("{name} fails at [{}]", w.join(", ")))
        })
    }
}

impl PairRelation {
    pub fn new(s: &FinFunctor, t: &FinFunctor) -> (Self, Failures) {
        let (e, a) = (s.source().clone(), s.target().clone());
        let mut monic = Vec::new();
        let mut objects = HashMap::new();
        for x in e.objects() {
            if let Some(prev) = objects.insert((s.ob(x), t.ob(x)), x) {
                push_capped(&mut monic, vec![
                    format!("object {}", e.object_name(prev)),
                    format!("object {}", e.object_name(x)),
                ]);
            }
        }
        let mut morphisms = HashMap::new();
        for g in e.morphisms() {
            if let Some(prev) = morphisms.insert((s.mor(g), t.mor(g)), g) {
                push_capped(&mut monic, vec![
                    format!("morphism {}", e.morphism_name(prev)),
                    format!("morphism {}", e.morphism_name(g)),
                ]);
            }
        }
        (PairRelation { a, e, objects, morphisms }, monic)
    }

    fn pair_obj(&self, x: ObjId, y: ObjId) -> String {
        format!("objects ({},{})", self.a.object_name(x), self.a.object_name(y))
    }

    fn pair_mor(&self, h: MorId, k: MorId) -> String {
        format!("morphisms ({},{})", self.a.morphism_name(h), self.a.morphism_name(k))
    }

    /// Check reflexivity, symmetry and transitivity on objects and morphisms.
    pub fn failures(&self, monic: Failures) -> RelationFailures {
        let a = &self.a;
        let mut reflexive = Vec::new();
        for x in a.objects() {
            if !self.objects.contains_key(&(x, x)) {
                push_capped(&mut reflexive, vec![self.pair_obj(x, x)]);
            }
        }
        for h in a.morphisms() {
            if !self.morphisms.contains_key(&(h, h)) {
                push_capped(&mut reflexive, vec![self.pair_mor(h, h)]);
            }
        }
        let mut symmetric = Vec::new();
        let mut keys: Vec<_> = self.objects.keys().copied().collect();
        keys.sort_unstable();
        for &(x, y) in &keys {
            if !self.objects.contains_key(&(y, x)) {
                push_capped(&mut symmetric, vec![self.pair_obj(x, y), self.pair_obj(y, x)]);
            }
        }
        let mut mkeys: Vec<_> = self.morphisms.keys().copied().collect();
        mkeys.sort_unstable();
        for &(h, k) in &mkeys {
            if !self.morphisms.contains_key(&(k, h)) {
                push_capped(&mut symmetric, vec![self.pair_mor(h, k), self.pair_mor(k, h)]);
            }
        }
        let mut transitive = Vec::new();
        let mut by_first: HashMap<ObjId, Vec<ObjId>> = HashMap::new();
        for &(x, y) in &keys {
            by_first.entry(x).or_default().push(y);
        }
        for &(x, y) in &keys {
            for &z in by_first.get(&y).map(Vec::as_slice).unwrap_or(&[]) {
                if !self.objects.contains_key(&(x, z)) {
                    push_capped(&mut transitive, vec![
                        self.pair_obj(x, y),
                        self.pair_obj(y, z),
                        self.pair_obj(x, z),
                    ]);
                }
            }
        }
        let mut mby_first: HashMap<MorId, Vec<MorId>> = HashMap::new();
        for &(h, k) in &mkeys {
            mby_first.entry(h).or_default().push(k);
        }
        for &(h, k) in &mkeys {
            for &l in mby_first.get(&k).map(Vec::as_slice).unwrap_or(&[]) {
                if !self.morphisms.contains_key(&(h, l)) {
                    push_capped(&mut transitive, vec![
                        self.pair_mor(h, k),
                        self.pair_mor(k, l),
                        self.pair_mor(h, l),
                    ]);
                }
            }
        }
        RelationFailures {
            monic,
            reflexive,
            symmetric,
            transitive,
        }
    }

    /// The reflexivity `r: A -> E`, when every diagonal pair is related.
    pub fn reflexivity(&self) -> Option<FinFunctor> {
        let a = &self.a;
        let objects = a
            .objects()
            .map(|x| self.objects.get(&(x, x)).copied())
            .collect::<Option<Vec<_>>>()?;
        let morphisms = a
            .morphisms()
            .map(|h| self.morphisms.get(&(h, h)).copied())
            .collect::<Option<Vec<_>>>()?;
        FinFunctor::new(a.clone(), self.e.clone(), objects, morphisms).ok()
    }
}

/// Check that `(s, t)` is an equivalence relation in `Cat`.
pub(crate) fn equivalence_relation(s: &FinFunctor, t: &FinFunctor) -> (PairRelation, RelationFailures) {
    let (rel, monic) = PairRelation::new(s, t);
    let failures = rel.failures(monic);
    (rel, failures)
}
