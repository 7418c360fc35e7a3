use std::sync::Arc;

use exact2::fincat::shapes;
use exact2::fincat::{FinCategory, ObjId};
use exact2::locally_discrete::*;

fn lattices() -> Vec<(&'static str, Arc<FinCategory>)> {
    vec![
        ("divisors of 12", Arc::new(shapes::divisor_lattice(12))),
        ("subsets of 2", Arc::new(shapes::boolean_lattice(2))),
        ("pentagon", Arc::new(shapes::pentagon_lattice())),
    ]
}

/// Greatest lower bound from the order relation alone.
fn meet(c: &FinCategory, a: ObjId, b: ObjId) -> Option<ObjId> {
    let leq = |x: ObjId, y: ObjId| !c.hom(x, y).is_empty();
    let lower: Vec<ObjId> = c.objects().filter(|&z| leq(z, a) && leq(z, b)).collect();
    lower.iter().copied().find(|&m| lower.iter().all(|&z| leq(z, m)))
}

#[test]
fn lattice_pullbacks_are_meets() {
    for (name, l) in lattices() {
        let c = SearchedLimits::new(l.clone());
        for f in l.morphisms() {
            for g in c.maps_into(l.cod(f)) {
                let (p1, _) = c.pullback(&f, &g).unwrap();
                assert_eq!(Some(l.dom(p1)), meet(&l, l.dom(f), l.dom(g)), "{name}");
            }
        }
    }
}

#[test]
fn lattice_quotient_maps_are_isomorphisms() {
    for (name, l) in lattices() {
        let c = SearchedLimits::new(l.clone());
        let mut quotient_maps = 0;
        for f in l.morphisms() {
            let r = map_report(&c, &f, l.morphism_name(f).to_string()).unwrap();
            assert!(r.bof_quotient_iso, "{name}: {r:?}");
            assert!(c.is_iso(&bo_quotient(&c, &f).unwrap()), "{name}");
            assert!(r.effective, "{name}: {r:?}");
            if r.bo_quotient_map {
                quotient_maps += 1;
                assert!(r.is_iso, "{name}: {r:?}");
            }
            if r.bo_quotient_map && r.diagonal_bo_quotient_map {
                assert!(r.is_iso, "{name}: {r:?}");
            }
        }
        // Exactly the identities.
        assert_eq!(quotient_maps, l.object_count(), "{name}");
    }
}

#[test]
fn lattice_quotient_maps_are_stable() {
    for (name, l) in lattices() {
        let c = SearchedLimits::new(l.clone());
        for f in l.morphisms().filter(|&f| is_bo_quotient_map(&c, &f).unwrap()) {
            for g in c.maps_into(l.cod(f)) {
                let (p1, _) = c.pullback(&g, &f).unwrap();
                assert!(is_bo_quotient_map(&c, &p1).unwrap(), "{name}");
            }
        }
    }
}

#[test]
fn set_surjection_diagonal_fails() {
    let c = FinSets;
    let f = SetMap::new(vec![0, 0, 1], 2).unwrap();
    let r = map_report(&c, &f, "3 -> 2".into()).unwrap();
    assert!(r.bo_quotient_map && r.effective && !r.is_iso);
    assert!(!r.diagonal_bo_quotient_map);
    assert!(r.bof_quotient_iso);
    assert!(bo_quotient_stable_in_sets(&f, 3).unwrap());
    let delta = diagonal(&c, &f).unwrap();
    // A x_B A has 5 elements, the diagonal hits 3 of them.
    assert_eq!((delta.map.len(), delta.cod), (3, 5));
}

#[test]
fn set_quotient_maps_are_the_surjections() {
    let c = FinSets;
    for m in 0..=3 {
        for n in 0..=3 {
            for f in all_set_maps(m, n) {
                let r = map_report(&c, &f, format!("{:?}", f.map)).unwrap();
                assert_eq!(r.bo_quotient_map, f.is_surjective(), "{f:?}");
                assert!(r.effective);
                // Diagonals are always injective; surjective only when f is injective.
                assert_eq!(r.diagonal_bo_quotient_map, f.is_injective(), "{f:?}");
                if r.bo_quotient_map {
                    assert!(bo_quotient_stable_in_sets(&f, 2).unwrap());
                }
            }
        }
    }
}
