use std::collections::HashMap;
use std::hash::Hash;

use super::category::{FinCategory, MorId, Morphism, ObjId};
use crate::error::{Error, Result};

/// A category built from structured object and morphism keys, remembering
/// the key of every cell.
#[derive(Debug, Clone)]
pub struct Tabulated<O, M> {
    pub cat: FinCategory,
    pub objects: Vec<O>,
    pub morphisms: Vec<M>,
    obj_index: HashMap<O, ObjId>,
    mor_index: HashMap<M, MorId>,
}

impl<O: Eq + Hash, M: Eq + Hash> Tabulated<O, M> {
    pub fn object_of(&self, key: &O) -> Option<ObjId> {
        self.obj_index.get(key).copied()
    }

    pub fn morphism_of(&self, key: &M) -> Option<MorId> {
        self.mor_index.get(key).copied()
    }
}

fn unique_name(name: String, taken: &mut HashMap<String, usize>) -> String {
    match taken.get_mut(&name) {
        None => {
            taken.insert(name.clone(), 1);
            name
        }
        Some(k) => {
            *k += 1;
            let fresh = format!("{name}#{k}");
            taken.insert(fresh.clone(), 1);
            fresh
        }
    }
}

/// Build a category from keyed cells. `morphisms` must contain the identity
/// key of every object and be closed under `compose(g, f)` on composable
/// pairs; a missing composite is reported as an error naming the pair.
pub fn tabulate<O, M>(
    objects: Vec<(O, String)>,
    morphisms: Vec<(M, String, O, O)>,
    identity: impl Fn(&O) -> M,
    compose: impl Fn(&M, &M) -> M,
) -> Result<Tabulated<O, M>>
where
    O: Clone + Eq + Hash,
    M: Clone + Eq + Hash,
{
    let mut taken = HashMap::new();
    let mut obj_index = HashMap::with_capacity(objects.len());
    let mut obj_names = Vec::with_capacity(objects.len());
    let mut obj_keys = Vec::with_capacity(objects.len());
    for (k, (key, name)) in objects.into_iter().enumerate() {
        obj_index.insert(key.clone(), k);
        obj_names.push(unique_name(name, &mut taken));
        obj_keys.push(key);
    }
    let mut taken = HashMap::new();
    let mut mor_index = HashMap::with_capacity(morphisms.len());
    let mut mor_list = Vec::with_capacity(morphisms.len());
    let mut mor_keys = Vec::with_capacity(morphisms.len());
    for (k, (key, name, dom, cod)) in morphisms.into_iter().enumerate() {
        let (Some(&d), Some(&c)) = (obj_index.get(&dom), obj_index.get(&cod)) else {
            return Err(Error::Precondition(format!(
                "morphism {name} has an endpoint outside the object list"
            )));
        };
        mor_index.insert(key.clone(), k);
        mor_list.push(Morphism {
            name: unique_name(name, &mut taken),
            dom: d,
            cod: c,
        });
        mor_keys.push(key);
    }
    let mut identities = Vec::with_capacity(obj_keys.len());
    for (x, key) in obj_keys.iter().enumerate() {
        match mor_index.get(&identity(key)) {
            Some(&id) => identities.push(id),
            None => {
                return Err(Error::Precondition(format!(
                    "identity of {} missing from morphism list",
                    obj_names[x]
                )))
            }
        }
    }
    let n_obj = obj_keys.len();
    let mut out_of = vec![Vec::new(); n_obj];
    for (k, m) in mor_list.iter().enumerate() {
        out_of[m.dom].push(k);
    }
    let mut entries = Vec::new();
    for f in 0..mor_list.len() {
        for &g in &out_of[mor_list[f].cod] {
            let key = compose(&mor_keys[g], &mor_keys[f]);
            match mor_index.get(&key) {
                Some(&gf) => entries.push((g, f, gf)),
                None => {
                    return Err(Error::Precondition(format!(
                        "composite {} . {} missing from morphism list",
                        mor_list[g].name, mor_list[f].name
                    )))
                }
            }
        }
    }
    let cat = FinCategory::from_parts(obj_names, mor_list, identities, entries)?;
    Ok(Tabulated {
        cat,
        objects: obj_keys,
        morphisms: mor_keys,
        obj_index,
        mor_index,
    })
}
