//! Seeded random generation of small categories and functors.

use std::sync::Arc;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::fincat::{coproduct, enumerate_functors, product, shapes, CategoryBuilder, FinCategory, FinFunctor};
use crate::SizeBound;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Size limits for sampled categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleLimits {
    pub max_objects: usize,
    pub max_morphisms: usize,
}

impl Default for SampleLimits {
    fn default() -> Self {
        SampleLimits {
            max_objects: 4,
            max_morphisms: 12,
        }
    }
}

impl SampleLimits {
    fn admits(&self, c: &FinCategory) -> bool {
        c.object_count() <= self.max_objects && c.morphism_count() <= self.max_morphisms
    }
}

const MONOIDS: &[&[&[usize]]] = &[
    &[&[0, 1], &[1, 0]],
    &[&[0, 1], &[1, 1]],
    &[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]],
    &[&[0, 1, 2], &[1, 1, 1], &[2, 2, 2]],
    &[&[0, 1, 2], &[1, 2, 2], &[2, 2, 2]],
];

pub fn monoid_fixture(k: usize) -> FinCategory {
    let table: Vec<Vec<usize>> = MONOIDS[k % MONOIDS.len()].iter().map(|r| r.to_vec()).collect();
    shapes::monoid(&table)
}

/// `0 => 1 -> 2` with `u, v: 0 -> 1` and `w: 1 -> 2` coequalising them.
pub fn coequalised_pair() -> FinCategory {
    let mut b = CategoryBuilder::new();
    for o in ["0", "1", "2"] {
        b.object(o);
    }
    b.morphism("u", "0", "1");
    b.morphism("v", "0", "1");
    b.morphism("w", "1", "2");
    b.morphism("wu", "0", "2");
    b.compose("w", "u", "wu").compose("w", "v", "wu");
    b.build().expect("coequalised pair")
}

/// Random preorder on up to `max_objects` objects; cycles give isomorphic objects.
pub fn random_preorder(rng: &mut SampleRng, max_objects: usize) -> FinCategory {
    let n = rng.random_range(1..=max_objects.max(1));
    let p = rng.random_range(0.15..0.6);
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = i == j || (i < j && rng.random_bool(p)) || (i > j && rng.random_bool(p / 4.0));
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    shapes::preorder(&names, |i, j| leq[i][j])
}

fn basic(rng: &mut SampleRng, limits: &SampleLimits) -> FinCategory {
    match rng.random_range(0..12) {
        0..=3 => random_preorder(rng, limits.max_objects),
        4 => monoid_fixture(rng.random_range(0..MONOIDS.len())),
        5 => shapes::parallel_pair(),
        6 => shapes::walking_iso(),
        7 => shapes::composable_pair(),
        8 => shapes::discrete(rng.random_range(1..=limits.max_objects.clamp(1, 3))),
        9 => coequalised_pair(),
        10 => shapes::arrow(),
        _ => shapes::terminal(),
    }
}

/// A random category within `limits`, drawn from preorders, small monoids,
/// standard shapes and binary products and coproducts of these.
pub fn random_category(rng: &mut SampleRng, limits: &SampleLimits) -> Arc<FinCategory> {
    loop {
        let c = match rng.random_range(0..10) {
            0..=6 => basic(rng, limits),
            7 | 8 => {
                let (a, b) = (shapes::arc(basic(rng, limits)), shapes::arc(basic(rng, limits)));
                if a.morphism_count() + b.morphism_count() > limits.max_morphisms {
                    continue;
                }
                match coproduct(&a, &b) {
                    Ok((c, _, _)) => (*c).clone(),
                    Err(_) => continue,
                }
            }
            _ => {
                let (a, b) = (shapes::arc(basic(rng, limits)), shapes::arc(basic(rng, limits)));
                if a.morphism_count() * b.morphism_count() > limits.max_morphisms {
                    continue;
                }
                match product(&a, &b) {
                    Ok(p) => (*p.cat).clone(),
                    Err(_) => continue,
                }
            }
        };
        if limits.admits(&c) {
            return Arc::new(c);
        }
    }
}

/// A functor chosen uniformly among all functors `a -> b`.
pub fn random_functor_between(
    rng: &mut SampleRng,
    a: &Arc<FinCategory>,
    b: &Arc<FinCategory>,
    bound: &SizeBound,
) -> Result<Option<FinFunctor>> {
    let all = enumerate_functors(a, b, bound)?;
    Ok(all.choose(rng).cloned())
}

/// A random functor between random categories within `limits`.
pub fn random_functor(rng: &mut SampleRng, limits: &SampleLimits, bound: &SizeBound) -> Result<FinFunctor> {
    loop {
        let a = random_category(rng, limits);
        let b = random_category(rng, limits);
        if let Some(f) = random_functor_between(rng, &a, &b, bound)? {
            return Ok(f);
        }
    }
}
