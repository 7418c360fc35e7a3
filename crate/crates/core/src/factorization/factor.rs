use std::sync::Arc;

use crate::error::Result;
use crate::fincat::tabulate::tabulate;
use crate::fincat::{full_subcategory, FinCategory, FinFunctor, MorId, ObjId};
use crate::System;

/// `f = m . e` with `e` in the left class and `m` in the right class of `system`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorisation {
    pub system: System,
    pub middle: Arc<FinCategory>,
    pub e: FinFunctor,
    pub m: FinFunctor,
}

impl Factorisation {
    pub fn composite(&self) -> FinFunctor {
        self.e.then(&self.m)
    }
}

pub fn factor(f: &FinFunctor, system: System) -> Result<Factorisation> {
    match system {
        System::Bo => tagged_middle(f, System::Bo, |x, y| f.target().hom(f.ob(x), f.ob(y)).to_vec()),
        System::Bof => tagged_middle(f, System::Bof, |x, y| {
            let mut img: Vec<MorId> = f.hom_map(x, y);
            img.sort_unstable();
            img.dedup();
            img
        }),
        System::So => so_factor(f),
    }
}

/// Middle on the objects of `A` whose hom-sets `E(x, y)` are the given
/// subsets of `B(fx, fy)`. Morphisms are named `b@x,y`.
fn tagged_middle(
    f: &FinFunctor,
    system: System,
    homs: impl Fn(ObjId, ObjId) -> Vec<MorId>,
) -> Result<Factorisation> {
    let (a, b) = (f.source().clone(), f.target().clone());
    let objects = a.objects().map(|x| (x, a.object_name(x).to_string())).collect();
    let mut morphisms = Vec::new();
    for x in a.objects() {
        for y in a.objects() {
            for m in homs(x, y) {
                morphisms.push((
                    (x, y, m),
                    format!("{}@{},{}", b.morphism_name(m), a.object_name(x), a.object_name(y)),
                    x,
                    y,
                ));
            }
        }
    }
    let table = tabulate(
        objects,
        morphisms,
        |&x| (x, x, b.identity(f.ob(x))),
        |&(_, z, g), &(x, _, h)| (x, z, b.compose(g, h)),
    )?;
    let middle = Arc::new(table.cat.clone());
    let e = FinFunctor::new(
        a.clone(),
        middle.clone(),
        a.objects().collect(),
        a.morphisms()
            .map(|h| {
                table
                    .morphism_of(&(a.dom(h), a.cod(h), f.mor(h)))
                    .expect("image of h lies in the middle")
            })
            .collect(),
    )?;
    let m = FinFunctor::new(
        middle.clone(),
        b.clone(),
        table.objects.iter().map(|&x| f.ob(x)).collect(),
        table.morphisms.iter().map(|k| k.2).collect(),
    )?;
    Ok(Factorisation { system, middle, e, m })
}

fn so_factor(f: &FinFunctor) -> Result<Factorisation> {
    let b = f.target().clone();
    let mut image: Vec<ObjId> = f.object_map().to_vec();
    image.sort_unstable();
    image.dedup();
    let (middle, m) = full_subcategory(&b, &image)?;
    let mut position = vec![usize::MAX; b.object_count()];
    for (k, &y) in image.iter().enumerate() {
        position[y] = k;
    }
    let mut mor_position = vec![usize::MAX; b.morphism_count()];
    for k in middle.morphisms() {
        mor_position[m.mor(k)] = k;
    }
    let a = f.source();
    let e = FinFunctor::new(
        a.clone(),
        middle.clone(),
        a.objects().map(|x| position[f.ob(x)]).collect(),
        a.morphisms().map(|h| mor_position[f.mor(h)]).collect(),
    )?;
    Ok(Factorisation {
        system: System::So,
        middle,
        e,
        m,
    })
}
