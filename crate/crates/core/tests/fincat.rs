use std::sync::Arc;

use exact2::fincat::json::{category_from_str, category_to_value, functor_from_value, functor_to_value, to_canonical_string};
use exact2::fincat::shapes::{self, arc};
use exact2::fincat::*;
use exact2::SizeBound;

fn bound() -> SizeBound {
    SizeBound::default()
}

/// Every `(g, f)` pair whose composite disagrees with a brute-force recomputation of associativity.
fn brute_associativity_failures(c: &FinCategory) -> Vec<(MorId, MorId, MorId)> {
    let mut out = Vec::new();
    for f in c.morphisms() {
        for g in c.morphisms() {
            for h in c.morphisms() {
                if c.cod(f) != c.dom(g) || c.cod(g) != c.dom(h) {
                    continue;
                }
                let l = c.try_compose(h, g).and_then(|hg| c.try_compose(hg, f));
                let r = c.try_compose(g, f).and_then(|gf| c.try_compose(h, gf));
                if l != r {
                    out.push((h, g, f));
                }
            }
        }
    }
    out
}

#[test]
fn shapes_validate() {
    for c in [
        shapes::terminal(),
        shapes::arrow(),
        shapes::composable_pair(),
        shapes::parallel_pair(),
        shapes::walking_iso(),
        shapes::chaotic(3),
        shapes::discrete(2),
        shapes::divisor_lattice(12),
        shapes::boolean_lattice(2),
        shapes::pentagon_lattice(),
        shapes::monoid(&[vec![0, 1], vec![1, 0]]),
    ] {
        assert!(c.validate().is_valid(), "{:?}", c.validate());
    }
}

#[test]
fn broken_identity_law_is_reported_once() {
    let c = shapes::arrow();
    let (a, id0, id1) = (c.mor("a"), c.mor("id0"), c.mor("id1"));
    let bad = c.with_composite(a, id0, Some(id1));
    let report = bad.validate();
    assert_eq!(report.count("right identity"), 1);
    assert_eq!(report.count("left identity"), 0);
}

#[test]
fn single_broken_associativity_triple() {
    let good = shapes::composable_pair();
    assert!(brute_associativity_failures(&good).is_empty());
    let (f, g) = (good.mor("f"), good.mor("g"));
    let bad = good.with_composite(g, f, Some(f));
    let expected = brute_associativity_failures(&bad);
    assert_eq!(expected.len(), 1);
    let reported: Vec<_> = bad
        .validate()
        .violations
        .into_iter()
        .filter(|v| v.law == "associativity")
        .collect();
    assert_eq!(reported.len(), 1);
    let (h, g, f) = expected[0];
    assert_eq!(
        reported[0].witness,
        vec![bad.morphism_name(h), bad.morphism_name(g), bad.morphism_name(f)]
    );
}

#[test]
fn associativity_mutation_in_monoid() {
    // Z/3 under addition, then corrupt one product: exactly the triples the brute-force scan finds.
    let table: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
    let m = shapes::monoid(&table);
    assert!(m.validate().is_valid());
    let bad = m.with_composite(m.mor("e1"), m.mor("e1"), Some(m.mor("e1")));
    let expected = brute_associativity_failures(&bad);
    assert!(!expected.is_empty());
    assert_eq!(bad.validate().count("associativity"), expected.len());
}

#[test]
fn functor_validation() {
    let p = arc(shapes::parallel_pair());
    assert!(FinFunctor::identity(&p).validate().is_valid());
    assert!(shapes::collapse().validate().is_valid());
    let two = arc(shapes::arrow());
    let bad = FinFunctor::new(
        p.clone(),
        two.clone(),
        vec![0, 0],
        p.morphisms().map(|_| two.mor("id0")).collect(),
    )
    .unwrap();
    assert!(bad.validate().is_valid());
    let bad = FinFunctor::new(p.clone(), two.clone(), vec![0, 1], vec![two.mor("a"); 4]).unwrap();
    let r = bad.validate();
    assert!(r.count("preserves identities") > 0);
}

#[test]
fn naturality_checks() {
    let f = shapes::collapse();
    assert!(NatTransf::identity(&f).validate().is_valid());
    // A transformation between the two object pickings 1 -> P whose component is u.
    let one = arc(shapes::terminal());
    let p = arc(shapes::parallel_pair());
    let x = FinFunctor::constant(&one, &p, 0);
    let y = FinFunctor::constant(&one, &p, 1);
    let t = NatTransf::new(x.clone(), y.clone(), vec![p.mor("u")]).unwrap();
    assert!(t.validate().is_valid());
    // Non-natural: id on P to collapse-then-include is not well-typed; use the arrow category.
    let two = arc(shapes::arrow());
    let id = FinFunctor::identity(&two);
    let c0 = FinFunctor::constant(&two, &two, 0);
    let bad = NatTransf::new(c0, id, vec![two.mor("id0"), two.mor("id0")]).unwrap();
    let r = bad.validate();
    assert_eq!(r.count("component endpoints"), 1);
    let c1 = FinFunctor::constant(&two, &two, 1);
    let good = NatTransf::new(FinFunctor::identity(&two), c1, vec![two.mor("a"), two.mor("id1")]).unwrap();
    assert!(good.validate().is_valid());
}

#[test]
fn pullback_examples() {
    let p = arc(shapes::parallel_pair());
    let id = FinFunctor::identity(&p);
    let pb = pullback(&id, &id).unwrap();
    assert!(categories_isomorphic(&pb.cat, &p, &bound()).unwrap().is_some());

    let f = shapes::collapse();
    let pb = pullback(&f, &f).unwrap();
    assert_eq!(pb.cat.object_count(), 2);
    assert_eq!(pb.cat.hom(0, 1).len(), 4);
    assert!(pb.cat.validate().is_valid());
    assert!(pb.p1.validate().is_valid() && pb.p2.validate().is_valid());

    let two = arc(shapes::arrow());
    let prod = product(&two, &two).unwrap();
    assert_eq!(prod.cat.object_count(), 4);
    assert_eq!(prod.cat.morphism_count(), 9);
}

#[test]
fn pullback_universal_property() {
    let f = shapes::collapse();
    let pb = pullback(&f, &f).unwrap();
    // every cone from the arrow category is mediated exactly once
    let two = arc(shapes::arrow());
    let legs = enumerate_functors(&two, f.source(), &bound()).unwrap();
    let mut cones = 0;
    for h in &legs {
        for k in &legs {
            if h.then(&f) == k.then(&f) {
                cones += 1;
                assert_eq!(pb.count_mediators(h, k, &bound()).unwrap(), 1);
            }
        }
    }
    assert!(cones > 0);
}

#[test]
fn functor_enumeration_counts() {
    let one = arc(shapes::terminal());
    let two = arc(shapes::arrow());
    assert_eq!(enumerate_functors(&one, &two, &bound()).unwrap().len(), 2);
    assert_eq!(enumerate_functors(&two, &two, &bound()).unwrap().len(), 3);
    assert_eq!(enumerate_functors(&two, &one, &bound()).unwrap().len(), 1);
    // u, v must land in a common hom-set: (0,0), (1,1) or (0,1); hom(1,0) is empty.
    let p = arc(shapes::parallel_pair());
    let n = enumerate_functors(&p, &two, &bound()).unwrap().len();
    assert_eq!(n, brute_functor_count(&p, &two));
    assert_eq!(n, 3);
}

/// Brute force over every assignment of morphisms, no propagation.
fn brute_functor_count(j: &FinCategory, c: &FinCategory) -> usize {
    let n = j.morphism_count();
    let m = c.morphism_count();
    let mut count = 0;
    let total = m.pow(n as u32);
    for code in 0..total {
        let mut map = Vec::with_capacity(n);
        let mut k = code;
        for _ in 0..n {
            map.push(k % m);
            k /= m;
        }
        let objects: Vec<ObjId> = j.objects().map(|x| c.dom(map[j.identity(x)])).collect();
        let f = FinFunctor::new(Arc::new(j.clone()), Arc::new(c.clone()), objects, map).unwrap();
        if f.validate().is_valid() {
            count += 1;
        }
    }
    count
}

#[test]
fn enumeration_matches_brute_force() {
    let cats = [
        shapes::arrow(),
        shapes::parallel_pair(),
        shapes::walking_iso(),
        shapes::composable_pair(),
        shapes::monoid(&[vec![0, 1], vec![1, 1]]),
        shapes::monoid(&[vec![0, 1], vec![1, 0]]),
    ];
    for j in &cats {
        for c in &cats {
            if c.morphism_count().pow(j.morphism_count() as u32) > 100_000 {
                continue;
            }
            let fast = count_functors(j, c, &bound()).unwrap();
            assert_eq!(fast, brute_functor_count(j, c));
        }
    }
}

#[test]
fn functor_category_examples() {
    let one = arc(shapes::terminal());
    let two = arc(shapes::arrow());
    let p = arc(shapes::parallel_pair());
    let c = arc(shapes::composable_pair());
    let fc = functor_category(&one, &c, &bound()).unwrap();
    assert!(categories_isomorphic(&fc.cat, &c, &bound()).unwrap().is_some());
    let fc = functor_category(&two, &two, &bound()).unwrap();
    assert_eq!(fc.cat.object_count(), 3);
    assert!(fc.cat.validate().is_valid());
    let fc = functor_category(&p, &two, &bound()).unwrap();
    assert_eq!(fc.cat.object_count(), brute_functor_count(&p, &two));
}

#[test]
fn functor_category_morphisms_match_brute_force() {
    let two = arc(shapes::arrow());
    let i = arc(shapes::walking_iso());
    let p = arc(shapes::parallel_pair());
    for (j, c) in [(&two, &p), (&p, &two), (&i, &two), (&two, &i)] {
        let fc = functor_category(j, c, &bound()).unwrap();
        let mut brute = 0;
        for f in &fc.functors {
            for g in &fc.functors {
                // every family of components, checked by validate
                let homs: Vec<&[MorId]> = j.objects().map(|x| c.hom(f.ob(x), g.ob(x))).collect();
                let mut idx = vec![0usize; homs.len()];
                if homs.iter().any(|h| h.is_empty()) {
                    continue;
                }
                loop {
                    let comps = idx.iter().zip(&homs).map(|(&k, h)| h[k]).collect();
                    if NatTransf::new(f.clone(), g.clone(), comps).unwrap().validate().is_valid() {
                        brute += 1;
                    }
                    let mut pos = 0;
                    while pos < idx.len() {
                        idx[pos] += 1;
                        if idx[pos] < homs[pos].len() {
                            break;
                        }
                        idx[pos] = 0;
                        pos += 1;
                    }
                    if pos == idx.len() {
                        break;
                    }
                }
            }
        }
        assert_eq!(fc.cat.morphism_count(), brute);
    }
}

#[test]
fn functor_category_respects_bound() {
    let big = arc(shapes::chaotic(7));
    let two = arc(shapes::arrow());
    assert!(matches!(
        functor_category(&big, &two, &bound()),
        Err(exact2::Error::SizeBound { .. })
    ));
}

#[test]
fn isomorphism_search() {
    let two = arc(shapes::arrow());
    let p = arc(shapes::parallel_pair());
    let f = categories_isomorphic(&two, &two, &bound()).unwrap().unwrap();
    assert_eq!(f, FinFunctor::identity(&two));
    assert!(categories_isomorphic(&p, &two, &bound()).unwrap().is_none());
    let chaotic = arc(shapes::chaotic(2));
    let iso = arc(shapes::walking_iso());
    let w = categories_isomorphic(&chaotic, &iso, &bound()).unwrap().unwrap();
    assert!(w.validate().is_valid());
    let inv = w.inverse().unwrap();
    assert_eq!(w.then(&inv), FinFunctor::identity(&chaotic));
    assert_eq!(inv.then(&w), FinFunctor::identity(&iso));
}

#[test]
fn json_round_trip() {
    for c in [shapes::parallel_pair(), shapes::walking_iso(), shapes::divisor_lattice(6)] {
        let v = category_to_value(&c);
        let text = to_canonical_string(&v);
        let back = category_from_str(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(to_canonical_string(&category_to_value(&back)), text);
    }
    let f = shapes::collapse();
    let v = functor_to_value(&f);
    assert_eq!(functor_from_value(&v).unwrap(), f);
}

#[test]
fn json_errors_name_the_path() {
    let text = r#"{"objects":["0"],"morphisms":[{"id":"id0","dom":"0","cod":"9"}],"identities":{"0":"id0"}}"#;
    match category_from_str(text) {
        Err(exact2::Error::InvalidInput { path, .. }) => assert_eq!(path, "morphisms[0].cod"),
        other => panic!("unexpected {other:?}"),
    }
    let text = r#"{"objects":["0"],"morphisms":[{"id":"id0","dom":"0","cod":7}],"identities":{"0":"id0"}}"#;
    match category_from_str(text) {
        Err(exact2::Error::InvalidInput { path, .. }) => assert_eq!(path, "morphisms[0].cod"),
        other => panic!("unexpected {other:?}"),
    }
}
