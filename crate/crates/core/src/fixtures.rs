//! Hand-built congruences, including non-kernel ones, and mutations of them
//! that break exactly one family of conditions.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{
    product, shapes, CategoryBuilder, FinCategory, FinFunctor, MorId, Morphism, ObjId, Pullback,
};
use crate::kernels::{bof_data_from_relation, BoKernelData, BofKernelData, SoKernelData};
use crate::quotients::ff_equivalence_to_so;
use crate::sample;
use crate::SizeBound;

/// A named piece of kernel data.
#[derive(Debug, Clone)]
pub struct Fixture<T> {
    pub name: String,
    pub data: T,
}

fn fixture<T>(name: impl Into<String>, data: T) -> Fixture<T> {
    Fixture {
        name: name.into(),
        data,
    }
}

fn discrete_on(names: impl IntoIterator<Item = String>) -> Result<Arc<FinCategory>> {
    let mut b = CategoryBuilder::new();
    for (k, n) in names.into_iter().enumerate() {
        b.object_with_identity(n.to_string(), format!("id#{k}"));
    }
    Ok(Arc::new(b.build()?))
}

fn discrete_map(s: &Arc<FinCategory>, t: &Arc<FinCategory>, objects: Vec<ObjId>) -> Result<FinFunctor> {
    let morphisms = s.morphisms().map(|m| t.identity(objects[s.dom(m)])).collect();
    FinFunctor::new(s.clone(), t.clone(), objects, morphisms)
}

/// The truncated nerve of `c` as a catead of discrete categories:
/// `X1 = ob c`, `X2 = mor c`, `X3` = composable pairs. Its quotient is `c`.
pub fn nerve_catead(c: &FinCategory) -> Result<BoKernelData> {
    let x1 = discrete_on(c.objects().map(|o| c.object_name(o).to_string()))?;
    let x2 = discrete_on(c.morphisms().map(|m| c.morphism_name(m).to_string()))?;
    let mut pairs = Vec::new();
    for f in c.morphisms() {
        for g in c.morphisms() {
            if c.cod(f) == c.dom(g) {
                pairs.push((f, g));
            }
        }
    }
    let x3 = discrete_on(
        pairs
            .iter()
            .map(|&(f, g)| format!("({},{})", c.morphism_name(f), c.morphism_name(g))),
    )?;
    let d = discrete_map(&x2, &x1, c.morphisms().map(|m| c.dom(m)).collect())?;
    let cc = discrete_map(&x2, &x1, c.morphisms().map(|m| c.cod(m)).collect())?;
    let i = discrete_map(&x1, &x2, c.objects().map(|o| c.identity(o)).collect())?;
    let p = discrete_map(&x3, &x2, pairs.iter().map(|pr| pr.0).collect())?;
    let q = discrete_map(&x3, &x2, pairs.iter().map(|pr| pr.1).collect())?;
    let m = discrete_map(&x3, &x2, pairs.iter().map(|&(f, g)| c.compose(g, f)).collect())?;
    Ok(BoKernelData { x3, x2, x1, p, m, q, d, c: cc, i })
}

struct Codiscrete {
    data: BoKernelData,
    pair: Pullback,
}

fn codiscrete(a: &Arc<FinCategory>) -> Result<Codiscrete> {
    let pair = product(a, a)?;
    let triple = product(&pair.cat, a)?;
    let (x, y, z) = (
        triple.p1.then(&pair.p1),
        triple.p1.then(&pair.p2),
        triple.p2.clone(),
    );
    let p = pair.mediate(&x, &y)?;
    let q = pair.mediate(&y, &z)?;
    let m = pair.mediate(&x, &z)?;
    let id = FinFunctor::identity(a);
    let i = pair.mediate(&id, &id)?;
    let data = BoKernelData {
        x3: triple.cat.clone(),
        x2: pair.cat.clone(),
        x1: a.clone(),
        p,
        m,
        q,
        d: pair.p1.clone(),
        c: pair.p2.clone(),
        i,
    };
    Ok(Codiscrete { data, pair })
}

/// The codiscrete catead `A^3 => A x A => A` on the product span. Its
/// quotient is the chaotic category on the objects of `A`.
pub fn codiscrete_catead(a: &Arc<FinCategory>) -> Result<BoKernelData> {
    Ok(codiscrete(a)?.data)
}

/// The codiscrete catead with `X2'` the full subcategory of `A x A` on the
/// pairs of objects related by `related`. A congruence exactly when
/// `related` is an equivalence relation.
pub fn codiscrete_so(a: &Arc<FinCategory>, related: impl Fn(ObjId, ObjId) -> bool) -> Result<SoKernelData> {
    let cd = codiscrete(a)?;
    let keep: Vec<ObjId> = cd
        .pair
        .cat
        .objects()
        .filter(|&o| {
            let (x, y) = cd.pair.object_pair(o);
            related(x, y)
        })
        .collect();
    let (x2p, j) = crate::fincat::full_subcategory(&cd.pair.cat, &keep)?;
    Ok(SoKernelData { bo: cd.data, x2p, j })
}

/// `c` with an extra idempotent `z: x -> x` acting as an identity on every
/// other morphism. Fails when `1_x` factors through non-identities.
pub fn adjoin_idempotent(c: &FinCategory, x: ObjId) -> Result<(FinCategory, MorId)> {
    let n = c.morphism_count();
    let z = n;
    let mut morphisms: Vec<Morphism> = c.morphism_list().to_vec();
    morphisms.push(Morphism {
        name: format!("z@{}", c.object_name(x)),
        dom: x,
        cod: x,
    });
    let mut compose: Vec<(MorId, MorId, MorId)> = c.composition_entries().collect();
    compose.push((z, z, z));
    for f in c.morphisms() {
        if c.cod(f) == x {
            compose.push((z, f, if c.is_identity(f) { z } else { f }));
        }
        if c.dom(f) == x {
            compose.push((f, z, if c.is_identity(f) { z } else { f }));
        }
    }
    let out = FinCategory::from_parts(c.object_names().to_vec(), morphisms, c.identities().to_vec(), compose)?;
    let report = out.validate();
    if !report.is_valid() {
        return Err(Error::Precondition(format!(
            "cannot adjoin an idempotent at {}: {}",
            c.object_name(x),
            report.violations[0]
        )));
    }
    Ok((out, z))
}

/// Replace `X2` of a catead by `X2` with an idempotent adjoined at `e`,
/// which `d` and `c` send to identities. Breaks uniqueness of lifts at `e`.
pub fn fatten_catead(x: &BoKernelData, e: ObjId) -> Result<BoKernelData> {
    let (fat, _) = adjoin_idempotent(&x.x2, e)?;
    let fat = Arc::new(fat);
    let retarget = |f: &FinFunctor| {
        FinFunctor::new(f.source().clone(), fat.clone(), f.object_map().to_vec(), f.morphism_map().to_vec())
    };
    let extend = |f: &FinFunctor| {
        let mut mors = f.morphism_map().to_vec();
        mors.push(f.target().identity(f.ob(e)));
        FinFunctor::new(fat.clone(), f.target().clone(), f.object_map().to_vec(), mors)
    };
    Ok(BoKernelData {
        x3: x.x3.clone(),
        x2: fat.clone(),
        x1: x.x1.clone(),
        p: retarget(&x.p)?,
        m: retarget(&x.m)?,
        q: retarget(&x.q)?,
        d: extend(&x.d)?,
        c: extend(&x.c)?,
        i: retarget(&x.i)?,
    })
}

/// An object of `X2` at which an idempotent can be adjoined.
pub fn fattenable_object(x: &BoKernelData) -> Option<ObjId> {
    x.x2.objects().find(|&e| adjoin_idempotent(&x.x2, e).is_ok())
}

/// Cateads that pass every condition; several are not built as kernels.
pub fn bo_congruences() -> Result<Vec<Fixture<BoKernelData>>> {
    let arc = shapes::arc;
    Ok(vec![
        fixture("nerve of 3", nerve_catead(&shapes::composable_pair())?),
        fixture("nerve of P", nerve_catead(&shapes::parallel_pair())?),
        fixture("nerve of Z/3", nerve_catead(&sample::monoid_fixture(2))?),
        fixture("nerve of I", nerve_catead(&shapes::walking_iso())?),
        fixture("codiscrete on 2", codiscrete_catead(&arc(shapes::arrow()))?),
        fixture("codiscrete on P", codiscrete_catead(&arc(shapes::parallel_pair()))?),
        fixture("kernel of collapse", crate::kernels::bo_kernel(&shapes::collapse())?.data),
    ])
}

/// Mutations of the bo fixtures; each must fail with a witness.
pub fn bo_mutations() -> Result<Vec<Fixture<BoKernelData>>> {
    let mut out = Vec::new();
    for f in bo_congruences()? {
        if let Some(e) = fattenable_object(&f.data) {
            out.push(fixture(format!("{} with a fattened X2 object", f.name), fatten_catead(&f.data, e)?));
        }
    }
    Ok(out)
}

fn kernel_pair_relation(f: &FinFunctor) -> Result<SoKernelData> {
    let pb = crate::fincat::pullback(f, f)?;
    Ok(ff_equivalence_to_so(&pb.p1, &pb.p2)?.data)
}

/// `2 x chaotic(2) -> 2`, a surjective-on-objects fully faithful functor.
pub fn glued_arrows() -> Result<FinFunctor> {
    let two = shapes::arc(shapes::arrow());
    let pr = product(&two, &shapes::arc(shapes::chaotic(2)))?;
    Ok(pr.p1)
}

pub fn so_congruences() -> Result<Vec<Fixture<SoKernelData>>> {
    let arc = shapes::arc;
    let two = arc(shapes::arrow());
    let p = arc(shapes::parallel_pair());
    let three = arc(shapes::discrete(3));
    Ok(vec![
        fixture("codiscrete on 2, equality", codiscrete_so(&two, |x, y| x == y)?),
        fixture("codiscrete on 2, total", codiscrete_so(&two, |_, _| true)?),
        fixture("codiscrete on P, total", codiscrete_so(&p, |_, _| true)?),
        fixture("codiscrete on 3 objects, {0,1}{2}", codiscrete_so(&three, |x, y| (x < 2) == (y < 2))?),
        fixture("ff kernel pair of glued arrows", kernel_pair_relation(&glued_arrows()?)?),
        fixture("kernel of 2 -> 1", crate::kernels::so_kernel(&shapes::to_terminal(&two))?.data),
    ])
}

pub fn so_mutations() -> Result<Vec<Fixture<SoKernelData>>> {
    let arc = shapes::arc;
    let two = arc(shapes::arrow());
    let three = arc(shapes::discrete(3));
    let mut out = vec![
        fixture("codiscrete on 2, order relation", codiscrete_so(&two, |x, y| x <= y)?),
        fixture("codiscrete on 3 objects, non-transitive", codiscrete_so(&three, |x, y| x.abs_diff(y) <= 1)?),
    ];
    // j into a fattened catead: condition (a) breaks.
    for f in so_congruences()? {
        if let Some(e) = fattenable_object(&f.data.bo) {
            if f.data.j.object_map().contains(&e) {
                continue;
            }
            let bo = fatten_catead(&f.data.bo, e)?;
            let j = FinFunctor::new(
                f.data.x2p.clone(),
                bo.x2.clone(),
                f.data.j.object_map().to_vec(),
                f.data.j.morphism_map().to_vec(),
            )?;
            out.push(fixture(format!("{} over a fattened catead", f.name), SoKernelData { bo, x2p: f.data.x2p.clone(), j }));
        }
    }
    Ok(out)
}

fn by_names<'a>(c: &'a FinCategory, classes: &'a [&'a [&'a str]]) -> impl Fn(MorId, MorId) -> bool + 'a {
    move |a, b| {
        a == b
            || classes.iter().any(|cl| {
                cl.contains(&c.morphism_name(a)) && cl.contains(&c.morphism_name(b))
            })
    }
}

fn from_classes(c: FinCategory, classes: &[&[&str]], bound: &SizeBound) -> Result<BofKernelData> {
    let c = Arc::new(c);
    let rel = by_names(&c, classes);
    Ok(bof_data_from_relation(&c, bound, rel)?.data)
}

pub fn bof_congruences(bound: &SizeBound) -> Result<Vec<Fixture<BofKernelData>>> {
    Ok(vec![
        fixture("P with u ~ v", from_classes(shapes::parallel_pair(), &[&["u", "v"]], bound)?),
        fixture("coequalised pair with u ~ v", from_classes(sample::coequalised_pair(), &[&["u", "v"]], bound)?),
        fixture("Rees congruence {a, 0}", from_classes(sample::monoid_fixture(4), &[&["e1", "e2"]], bound)?),
        fixture("Z/3 total", from_classes(sample::monoid_fixture(2), &[&["e0", "e1", "e2"]], bound)?),
        fixture("I with nothing identified", from_classes(shapes::walking_iso(), &[], bound)?),
        fixture("Z/2 total", from_classes(sample::monoid_fixture(0), &[&["e0", "e1"]], bound)?),
    ])
}

pub fn bof_mutations(bound: &SizeBound) -> Result<Vec<Fixture<BofKernelData>>> {
    let mut out = vec![
        fixture("{1, a, 0} with 1 ~ a only", from_classes(sample::monoid_fixture(4), &[&["e0", "e1"]], bound)?),
        fixture("Z/3 with e0 ~ e1 only", from_classes(sample::monoid_fixture(2), &[&["e0", "e1"]], bound)?),
    ];
    // Non-transitive: relate e0~e1 and e1~e2 but not e0~e2.
    let z3 = Arc::new(sample::monoid_fixture(2));
    let names = |m: MorId| z3.morphism_name(m).to_string();
    let rel = |a: MorId, b: MorId| {
        let (x, y) = (names(a), names(b));
        a == b || matches!((x.as_str(), y.as_str()), ("e0", "e1") | ("e1", "e0") | ("e1", "e2") | ("e2", "e1"))
    };
    out.push(fixture("Z/3 non-transitive", bof_data_from_relation(&z3, bound, rel)?.data));
    Ok(out)
}

/// The projection `B x chaotic(n) -> B` for a random small `B`: surjective on
/// objects and fully faithful.
pub fn sampled_ff_projection(rng: &mut sample::SampleRng) -> Result<FinFunctor> {
    use rand::Rng;
    let limits = sample::SampleLimits {
        max_objects: 3,
        max_morphisms: 4,
    };
    let b = sample::random_category(rng, &limits);
    let n = if b.morphism_count() == 1 { 3 } else { rng.random_range(1..=2) };
    Ok(product(&b, &shapes::arc(shapes::chaotic(n)))?.p1)
}

/// The kernel pair `(s, t): E => A` of [`sampled_ff_projection`]; a fully
/// faithful equivalence relation.
pub fn sampled_ff_relation(rng: &mut sample::SampleRng) -> Result<(FinFunctor, FinFunctor)> {
    let p = sampled_ff_projection(rng)?;
    let pb = crate::fincat::pullback(&p, &p)?;
    Ok((pb.p1, pb.p2))
}

/// A catalogue of categories with at most two objects and five morphisms.
pub fn small_categories() -> Vec<Arc<FinCategory>> {
    let mut out: Vec<FinCategory> = vec![
        shapes::terminal(),
        shapes::discrete(2),
        shapes::arrow(),
        shapes::walking_iso(),
        shapes::parallel_pair(),
    ];
    out.extend((0..5).map(sample::monoid_fixture));
    let arrow = shapes::arrow();
    out.push(adjoin_idempotent(&arrow, arrow.obj("0")).expect("arrow admits an idempotent").0);
    out.into_iter().map(Arc::new).collect()
}

/// Over the walking arrow `0 -a-> 1`: `X(1) = 2 x chaotic(2)` and
/// `X(0) = chaotic(2)` with restriction "project, then swap"; `Y(1) = 2`,
/// `Y(0) = 1`. The projection `X -> Y` is fully faithful and pointwise
/// surjective on objects.
pub fn presheaf_ff_projection() -> Result<crate::internal_cat::InternalFunctor> {
    use crate::internal_cat::{internal_from_diagram, internal_functor_from_components};
    let index = shapes::arc(shapes::arrow());
    let a = index.mor("a");
    let two = shapes::arc(shapes::arrow());
    let one = shapes::arc(shapes::terminal());
    let ch = shapes::arc(shapes::chaotic(2));
    let pr = product(&two, &ch)?;
    let swap = crate::fincat::find_isomorphism(&ch, &ch, &SizeBound::default(), |f| f.ob(0) == 1)?
        .expect("chaotic(2) has a swap");
    let restrict_x = pr.p2.then(&swap);
    let x_cats = vec![ch.clone(), pr.cat.clone()];
    let y_cats = vec![one, two.clone()];
    let mut x_actions = Vec::new();
    let mut y_actions = Vec::new();
    for m in index.morphisms() {
        if m == a {
            x_actions.push(restrict_x.clone());
            y_actions.push(shapes::to_terminal(&two));
        } else {
            let at = index.dom(m);
            x_actions.push(FinFunctor::identity(&x_cats[at]));
            y_actions.push(FinFunctor::identity(&y_cats[at]));
        }
    }
    let x = Arc::new(internal_from_diagram(index.clone(), &x_cats, &x_actions)?);
    let y = Arc::new(internal_from_diagram(index, &y_cats, &y_actions)?);
    internal_functor_from_components(x, y, &[shapes::to_terminal(&ch), pr.p1.clone()])
}
