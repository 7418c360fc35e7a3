use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::relation::{push_capped, Failures};
use super::verdict::CongruenceVerdict;
use crate::error::Result;
use crate::fincat::tabulate::tabulate;
use crate::fincat::{FinCategory, FinFunctor, MorId, ObjId};
use crate::kernels::BofKernelData;

pub(crate) const FULL_MONIC: &str = "(a) (Xalpha, Xbeta): X2 -> X1^P is full monic";
pub(crate) const REFLEXIVE: &str = "(b) equivalence relation on X1^2: reflexive";
pub(crate) const SYMMETRIC: &str = "(b) equivalence relation on X1^2: symmetric";
pub(crate) const TRANSITIVE: &str = "(b) equivalence relation on X1^2: transitive";
pub(crate) const IDENTITIES: &str = "(c) internal category structure: identities";
pub(crate) const COMPOSITION: &str = "(c) internal category structure: composition";

/// A morphism of `X2` seen in `X1^P`: source pair, target pair, `(h, k)`.
type CellKey = (MorId, MorId, MorId, MorId, MorId, MorId);

struct Image<'a> {
    x: &'a BofKernelData,
    pairs: HashMap<(MorId, MorId), ObjId>,
    cells: HashSet<CellKey>,
}

impl<'a> Image<'a> {
    fn new(x: &'a BofKernelData) -> Self {
        let mut pairs = HashMap::new();
        for e in x.x2.objects() {
            pairs.entry(Self::pair_of(x, e)).or_insert(e);
        }
        let cells = x.x2.morphisms().map(|g| Self::cell_of(x, g)).collect();
        Image { x, pairs, cells }
    }

    fn pair_of(x: &BofKernelData, e: ObjId) -> (MorId, MorId) {
        (x.alpha.component(e), x.beta.component(e))
    }

    fn cell_of(x: &BofKernelData, g: MorId) -> CellKey {
        let (s, t) = (Self::pair_of(x, x.x2.dom(g)), Self::pair_of(x, x.x2.cod(g)));
        (s.0, s.1, t.0, t.1, x.u.mor(g), x.v.mor(g))
    }

    fn name(&self, m: MorId) -> &str {
        self.x.x1.morphism_name(m)
    }

    fn pair_label(&self, (a, b): (MorId, MorId)) -> String {
        format!("pair ({},{})", self.name(a), self.name(b))
    }

    fn cell_label(&self, c: CellKey) -> String {
        format!(
            "cell ({},{}):({},{})->({},{})",
            self.name(c.4),
            self.name(c.5),
            self.name(c.0),
            self.name(c.1),
            self.name(c.2),
            self.name(c.3)
        )
    }
}

fn full_monic_failures(im: &Image) -> Failures {
    let x = im.x;
    let x1 = &x.x1;
    let mut out = Vec::new();
    let mut seen = HashMap::new();
    for e in x.x2.objects() {
        if let Some(prev) = seen.insert(Image::pair_of(x, e), e) {
            push_capped(&mut out, vec![
                "not injective on objects".into(),
                x.x2.object_name(prev).to_string(),
                x.x2.object_name(e).to_string(),
            ]);
        }
    }
    for e in x.x2.objects() {
        for e2 in x.x2.objects() {
            let (a, b) = Image::pair_of(x, e);
            let (a2, b2) = Image::pair_of(x, e2);
            let mut image: Vec<(MorId, MorId)> =
                x.x2.hom(e, e2).iter().map(|&g| (x.u.mor(g), x.v.mor(g))).collect();
            let n = image.len();
            image.sort_unstable();
            image.dedup();
            if image.len() != n {
                push_capped(&mut out, vec![
                    "not faithful".into(),
                    format!("hom({}, {})", x.x2.object_name(e), x.x2.object_name(e2)),
                ]);
            }
            let mut expected = 0;
            for &h in x1.hom(x1.dom(a), x1.dom(a2)) {
                for &k in x1.hom(x1.cod(a), x1.cod(a2)) {
                    if x1.compose(k, a) == x1.compose(a2, h) && x1.compose(k, b) == x1.compose(b2, h) {
                        expected += 1;
                    }
                }
            }
            if image.len() != expected {
                push_capped(&mut out, vec![
                    "not full".into(),
                    format!("hom({}, {})", x.x2.object_name(e), x.x2.object_name(e2)),
                ]);
            }
        }
    }
    out
}

fn relation_failures(im: &Image) -> [Failures; 3] {
    let x1 = &im.x.x1;
    let (mut refl, mut sym, mut trans) = (Vec::new(), Vec::new(), Vec::new());
    for a in x1.morphisms() {
        if !im.pairs.contains_key(&(a, a)) {
            push_capped(&mut refl, vec![im.pair_label((a, a))]);
        }
    }
    // identity cells of X1^2 on the diagonal
    for a in x1.morphisms() {
        for a2 in x1.morphisms() {
            for &h in x1.hom(x1.dom(a), x1.dom(a2)) {
                for &k in x1.hom(x1.cod(a), x1.cod(a2)) {
                    if x1.compose(k, a) != x1.compose(a2, h) {
                        continue;
                    }
                    let c = (a, a, a2, a2, h, k);
                    if !im.cells.contains(&c) {
                        push_capped(&mut refl, vec![im.cell_label(c)]);
                    }
                }
            }
        }
    }
    let mut pairs: Vec<_> = im.pairs.keys().copied().collect();
    pairs.sort_unstable();
    for &(a, b) in &pairs {
        if !im.pairs.contains_key(&(b, a)) {
            push_capped(&mut sym, vec![im.pair_label((a, b))]);
        }
    }
    let mut cells: Vec<_> = im.cells.iter().copied().collect();
    cells.sort_unstable();
    for &c in &cells {
        let flipped = (c.1, c.0, c.3, c.2, c.4, c.5);
        if !im.cells.contains(&flipped) {
            push_capped(&mut sym, vec![im.cell_label(c)]);
        }
    }
    let mut by_first: HashMap<MorId, Vec<MorId>> = HashMap::new();
    for &(a, b) in &pairs {
        by_first.entry(a).or_default().push(b);
    }
    for &(a, b) in &pairs {
        for &c in by_first.get(&b).map(Vec::as_slice).unwrap_or(&[]) {
            if !im.pairs.contains_key(&(a, c)) {
                push_capped(&mut trans, vec![im.pair_label((a, b)), im.pair_label((b, c))]);
            }
        }
    }
    let mut cells_by_first: HashMap<(MorId, MorId, MorId, MorId), Vec<&CellKey>> = HashMap::new();
    for c in &cells {
        cells_by_first.entry((c.0, c.2, c.4, c.5)).or_default().push(c);
    }
    for c in &cells {
        for d in cells_by_first.get(&(c.1, c.3, c.4, c.5)).map(Vec::as_slice).unwrap_or(&[]) {
            let joined = (c.0, d.1, c.2, d.3, c.4, c.5);
            if !im.cells.contains(&joined) {
                push_capped(&mut trans, vec![im.cell_label(*c), im.cell_label(**d)]);
            }
        }
    }
    [refl, sym, trans]
}

fn structure_failures(im: &Image) -> [Failures; 2] {
    let x = im.x;
    let x1 = &x.x1;
    let mut ids = Vec::new();
    for o in x1.objects() {
        let i = x1.identity(o);
        if !im.pairs.contains_key(&(i, i)) {
            push_capped(&mut ids, vec![format!("object {}", x1.object_name(o))]);
        }
    }
    for h in x1.morphisms() {
        let (i, j) = (x1.identity(x1.dom(h)), x1.identity(x1.cod(h)));
        let c = (i, i, j, j, h, h);
        if !im.cells.contains(&c) {
            push_capped(&mut ids, vec![im.cell_label(c)]);
        }
    }
    let mut comp = Vec::new();
    for e1 in x.x2.objects() {
        for e2 in x.x2.objects() {
            if x.v.ob(e1) != x.u.ob(e2) {
                continue;
            }
            let (a1, b1) = Image::pair_of(x, e1);
            let (a2, b2) = Image::pair_of(x, e2);
            let joined = (x1.compose(a2, a1), x1.compose(b2, b1));
            if !im.pairs.contains_key(&joined) {
                push_capped(&mut comp, vec![
                    format!("X2 object {}", x.x2.object_name(e1)),
                    format!("X2 object {}", x.x2.object_name(e2)),
                ]);
            }
        }
    }
    for g1 in x.x2.morphisms() {
        for g2 in x.x2.morphisms() {
            if x.v.mor(g1) != x.u.mor(g2) {
                continue;
            }
            let (c1, c2) = (Image::cell_of(x, g1), Image::cell_of(x, g2));
            let joined = (
                x1.compose(c2.0, c1.0),
                x1.compose(c2.1, c1.1),
                x1.compose(c2.2, c1.2),
                x1.compose(c2.3, c1.3),
                c1.4,
                c2.5,
            );
            if !im.cells.contains(&joined) {
                push_capped(&mut comp, vec![
                    format!("X2 morphism {}", x.x2.morphism_name(g1)),
                    format!("X2 morphism {}", x.x2.morphism_name(g2)),
                ]);
            }
        }
    }
    [ids, comp]
}

pub(crate) fn check(x: &BofKernelData, verdict: &mut CongruenceVerdict) {
    let im = Image::new(x);
    verdict.record(FULL_MONIC, full_monic_failures(&im));
    let [refl, sym, trans] = relation_failures(&im);
    verdict.record(REFLEXIVE, refl);
    verdict.record(SYMMETRIC, sym);
    verdict.record(TRANSITIVE, trans);
    let [ids, comp] = structure_failures(&im);
    verdict.record(IDENTITIES, ids);
    verdict.record(COMPOSITION, comp);
}

/// Least related morphism of each morphism of `X1`.
pub(crate) fn representatives(x: &BofKernelData) -> Vec<MorId> {
    let mut rep: Vec<MorId> = x.x1.morphisms().collect();
    for e in x.x2.objects() {
        let (a, b) = Image::pair_of(x, e);
        rep[a] = rep[a].min(b);
    }
    rep
}

/// Quotient of `c` by the congruence whose classes are given by `rep`
/// (each morphism mapped to its class representative): same objects,
/// hom-sets of representatives, and the identity-on-objects quotient map.
pub(crate) fn hom_quotient(c: &Arc<FinCategory>, rep: &[MorId]) -> Result<FinFunctor> {
    let objects = c.objects().map(|o| (o, c.object_name(o).to_string())).collect();
    let mut reps: Vec<MorId> = rep.to_vec();
    reps.sort_unstable();
    reps.dedup();
    let morphisms = reps
        .iter()
        .map(|&m| (m, c.morphism_name(m).to_string(), c.dom(m), c.cod(m)))
        .collect();
    let table = tabulate(objects, morphisms, |&o| rep[c.identity(o)], |&g, &f| rep[c.compose(g, f)])?;
    let qcat = Arc::new(table.cat.clone());
    FinFunctor::new(
        c.clone(),
        qcat,
        c.objects().collect(),
        c.morphisms().map(|m| table.morphism_of(&rep[m]).expect("representative")).collect(),
    )
}
