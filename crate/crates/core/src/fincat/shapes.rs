//! Small named categories and functors used throughout the test suites.

use std::sync::Arc;

use super::category::{CategoryBuilder, FinCategory};
use super::functor::FinFunctor;

fn numbered(b: &mut CategoryBuilder, n: usize) {
    for k in 0..n {
        b.object_with_identity(k.to_string(), format!("id{k}"));
    }
}

/// The terminal category `1`.
pub fn terminal() -> FinCategory {
    discrete(1)
}

/// The discrete category on `n` objects `0..n`.
pub fn discrete(n: usize) -> FinCategory {
    let mut b = CategoryBuilder::new();
    numbered(&mut b, n);
    b.build().expect("discrete")
}

/// The walking arrow `2`: `a: 0 -> 1`.
pub fn arrow() -> FinCategory {
    let mut b = CategoryBuilder::new();
    numbered(&mut b, 2);
    b.morphism("a", "0", "1");
    b.build().expect("arrow")
}

/// The composable pair `3`: `f: 0 -> 1`, `g: 1 -> 2`, `gf: 0 -> 2`.
pub fn composable_pair() -> FinCategory {
    let mut b = CategoryBuilder::new();
    numbered(&mut b, 3);
    b.morphism("f", "0", "1");
    b.morphism("g", "1", "2");
    b.morphism("gf", "0", "2");
    b.compose("g", "f", "gf");
    b.build().expect("composable pair")
}

/// The parallel pair `P`: `u, v: 0 -> 1`.
pub fn parallel_pair() -> FinCategory {
    let mut b = CategoryBuilder::new();
    numbered(&mut b, 2);
    b.morphism("u", "0", "1");
    b.morphism("v", "0", "1");
    b.build().expect("parallel pair")
}

/// The walking isomorphism `I`: `i: 0 -> 1` with inverse `j`.
pub fn walking_iso() -> FinCategory {
    let mut b = CategoryBuilder::new();
    numbered(&mut b, 2);
    b.morphism("i", "0", "1");
    b.morphism("j", "1", "0");
    b.compose("j", "i", "id0");
    b.compose("i", "j", "id1");
    b.build().expect("walking iso")
}

/// The chaotic (indiscrete) category on `n` objects: exactly one arrow
/// `xy: x -> y` for every pair.
pub fn chaotic(n: usize) -> FinCategory {
    let names: Vec<String> = (0..n).map(|k| k.to_string()).collect();
    preorder(&names, |_, _| true)
}

/// The preorder on `names` with `x <= y` iff `leq(x, y)`. The relation
/// must be reflexive and transitive; arrows are named `x<y` and identities `idx`.
pub fn preorder(names: &[String], leq: impl Fn(usize, usize) -> bool) -> FinCategory {
    let n = names.len();
    let mut b = CategoryBuilder::new();
    for name in names {
        b.object_with_identity(name.clone(), format!("id{name}"));
    }
    let mut arrow = vec![None; n * n];
    for x in 0..n {
        arrow[x * n + x] = Some(b.object_identity(x));
        for y in 0..n {
            if x != y && leq(x, y) {
                arrow[x * n + y] = Some(b.morphism_ids(format!("{}<{}", names[x], names[y]), x, y));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if let (Some(f), Some(g), Some(gf)) =
                    (arrow[x * n + y], arrow[y * n + z], arrow[x * n + z])
                {
                    if x != y && y != z {
                        b.compose_ids(g, f, gf);
                    }
                }
            }
        }
    }
    b.build().expect("preorder")
}

/// One-object category from a monoid multiplication table on `0..n`, with
/// unit `0`. Elements are named `e0 .. e{n-1}`; `e0` is the identity.
pub fn monoid(table: &[Vec<usize>]) -> FinCategory {
    let n = table.len();
    let mut b = CategoryBuilder::new();
    b.object_with_identity("*", "e0");
    let ids: Vec<_> = std::iter::once(0)
        .chain((1..n).map(|k| b.morphism(format!("e{k}"), "*", "*")))
        .collect();
    for g in 1..n {
        for f in 1..n {
            b.compose_ids(ids[g], ids[f], ids[table[g][f]]);
        }
    }
    b.build().expect("monoid")
}

/// The divisor lattice of `n` as a preorder.
pub fn divisor_lattice(n: usize) -> FinCategory {
    let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    let names: Vec<String> = divisors.iter().map(|d| d.to_string()).collect();
    preorder(&names, |x, y| divisors[y] % divisors[x] == 0)
}

/// The lattice of subsets of an `n`-element set ordered by inclusion.
pub fn boolean_lattice(n: usize) -> FinCategory {
    let size = 1usize << n;
    let names: Vec<String> = (0..size).map(|s| format!("s{s:0n$b}")).collect();
    preorder(&names, |x, y| x & y == x)
}

/// The pentagon lattice `N5`: `0 < a < b < 1`, `0 < c < 1`.
pub fn pentagon_lattice() -> FinCategory {
    let names: Vec<String> = ["0", "a", "b", "c", "1"].iter().map(|s| s.to_string()).collect();
    let below = [
        vec![0, 1, 2, 3, 4],
        vec![1, 2, 4],
        vec![2, 4],
        vec![3, 4],
        vec![4],
    ];
    preorder(&names, |x, y| below[x].contains(&y))
}

pub fn arc(c: FinCategory) -> Arc<FinCategory> {
    Arc::new(c)
}

/// The unique functor to the terminal category.
pub fn to_terminal(source: &Arc<FinCategory>) -> FinFunctor {
    let one = arc(terminal());
    FinFunctor::constant(source, &one, 0)
}

/// `P -> 2` sending both `u` and `v` to `a`.
pub fn collapse() -> FinFunctor {
    let p = arc(parallel_pair());
    let two = arc(arrow());
    let a = two.mor("a");
    let morphisms = p
        .morphisms()
        .map(|f| if p.is_identity(f) { two.identity(p.dom(f)) } else { a })
        .collect();
    FinFunctor::from_morphism_map(p, two, morphisms).expect("collapse")
}

/// The inclusion `1 -> 2` at object `0`.
pub fn point_inclusion() -> FinFunctor {
    let one = arc(terminal());
    let two = arc(arrow());
    FinFunctor::constant(&one, &two, 0)
}
