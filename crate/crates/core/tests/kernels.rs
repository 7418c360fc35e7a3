use std::sync::Arc;

use exact2::fincat::shapes::{self, arc};
use exact2::fincat::*;
use exact2::fixtures;
use exact2::kernels::json::{kernel_from_value, kernel_to_value};
use exact2::kernels::*;
use exact2::sample::{self, SampleLimits};
use exact2::{Error, SizeBound, System};
use proptest::prelude::*;

fn bound() -> SizeBound {
    SizeBound::default()
}

/// Construction limits large enough for kernels of every sampled functor.
fn roomy() -> SizeBound {
    SizeBound {
        construct_objects: 400,
        construct_morphisms: 4000,
        ..SizeBound::default()
    }
}

fn iso(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    categories_isomorphic(a, b, &roomy()).unwrap().is_some()
}

fn bang(c: FinCategory) -> FinFunctor {
    shapes::to_terminal(&arc(c))
}

/// Faithfulness straight from the hom-set maps.
fn brute_faithful(f: &FinFunctor) -> bool {
    let a = f.source();
    a.objects().all(|x| {
        a.objects().all(|y| {
            let mut img = f.hom_map(x, y);
            let n = img.len();
            img.sort_unstable();
            img.dedup();
            img.len() == n
        })
    })
}

fn sampled(seed: u64, n: usize) -> Vec<FinFunctor> {
    let mut rng = sample::rng(seed);
    (0..n)
        .map(|_| sample::random_functor(&mut rng, &SampleLimits::default(), &bound()).unwrap())
        .collect()
}

#[test]
fn comma_of_identities_is_the_arrow_category() {
    for c in [shapes::parallel_pair(), shapes::composable_pair(), shapes::walking_iso()] {
        let c = arc(c);
        let id = FinFunctor::identity(&c);
        let k = comma(&id, &id).unwrap();
        let two = arc(shapes::arrow());
        let fc = functor_category(&two, &c, &bound()).unwrap();
        assert!(iso(&k.cat, &fc.cat));
    }
}

#[test]
fn comma_examples() {
    let f = shapes::collapse();
    let k = comma(&f, &f).unwrap();
    assert_eq!(k.cat.object_count(), 3);
    assert!(k.cat.validate().is_valid());
    assert!(k.theta.validate().is_valid());

    let g = bang(shapes::parallel_pair());
    let k = comma(&g, &g).unwrap();
    assert_eq!(k.cat.object_count(), 4);
    let p = g.source();
    for s in k.cat.objects() {
        for t in k.cat.objects() {
            let (x, y, _) = k.object_key(s);
            let (x2, y2, _) = k.object_key(t);
            let n = p.hom(x, x2).len() * p.hom(y, y2).len();
            assert_eq!(k.cat.hom(s, t).len(), n);
        }
    }
}

#[test]
fn comma_universal_property_by_enumeration() {
    let f = shapes::collapse();
    let g = shapes::point_inclusion();
    let two = f.target().clone();
    let g_into = g.with_target(two.clone());
    for (ff, gg) in [(&f, &f), (&f, &g_into)] {
        let k = comma(ff, gg).unwrap();
        for x in [arc(shapes::terminal()), arc(shapes::arrow()), arc(shapes::discrete(2))] {
            let mut images = Vec::new();
            for h in enumerate_functors(&x, ff.source(), &bound()).unwrap() {
                for kk in enumerate_functors(&x, gg.source(), &bound()).unwrap() {
                    for phi in transformations_between(&h.then(ff), &kk.then(gg)) {
                        let m = k.mediate(&h, &kk, &phi).unwrap();
                        assert!(m.validate().is_valid());
                        assert_eq!(m.then(&k.d), h);
                        assert_eq!(m.then(&k.c), kk);
                        images.push(m.morphism_map().to_vec());
                    }
                }
            }
            let n = images.len();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), n, "distinct cones give distinct functors");
            assert_eq!(n, count_functors(&x, &k.cat, &bound()).unwrap());
        }
    }
}

#[test]
fn bo_kernel_examples() {
    let c = arc(shapes::composable_pair());
    let id = FinFunctor::identity(&c);
    let k = bo_kernel(&id).unwrap();
    let two = arc(shapes::arrow());
    assert!(iso(&k.data.x2, &functor_category(&two, &c, &bound()).unwrap().cat));
    for x in c.objects() {
        assert_eq!(k.comma.object_key(k.data.i.ob(x)), (x, x, c.identity(x)));
    }

    let k = bo_kernel(&shapes::collapse()).unwrap();
    assert_eq!(k.data.x3.object_count(), 4);

    // f|f over the terminal category is A x A
    let a = arc(shapes::arrow());
    let k = bo_kernel(&shapes::to_terminal(&a)).unwrap();
    assert!(iso(&k.data.x2, &product(&a, &a).unwrap().cat));
    assert_eq!(k.data.x2.object_count(), 4);
}

#[test]
fn triple_comma_agrees_with_pullback_of_commas() {
    for f in sampled(3, 25).iter().chain([shapes::collapse(), bang(shapes::parallel_pair())].iter()) {
        let k = bo_kernel(f).unwrap();
        let pb = pullback(&k.comma.c, &k.comma.d).unwrap();
        assert!(iso(&k.triple.cat, &pb.cat));
    }
}

#[test]
fn so_kernel_examples() {
    let k = so_kernel(&bang(shapes::arrow())).unwrap();
    assert_eq!(k.data.x2p.object_count(), 4);
    for o in k.data.x2p.objects() {
        let (x, y) = k.pair.object_pair(o);
        let (a, b, al) = k.bo.comma.object_key(k.data.j.ob(o));
        assert_eq!((a, b), (x, y));
        assert_eq!(al, shapes::terminal().identity(0));
    }

    let k = so_kernel(&shapes::collapse()).unwrap();
    let p = k.data.x2p.clone();
    assert_eq!(p.object_count(), 2);
    let (s, t) = (p.obj("(0,0)"), p.obj("(1,1)"));
    assert_eq!(p.hom(s, t).len(), 4);
    assert!(k.data.x2p.objects().all(|o| { let (x, y) = k.pair.object_pair(o); x == y }));

    // injective on objects: only diagonal pairs, j agrees with i on them
    let f = shapes::point_inclusion();
    let k = so_kernel(&f).unwrap();
    assert_eq!(k.data.x2p.object_count(), 1);
    assert_eq!(k.data.j.ob(0), k.data.bo.i.ob(0));
}

#[test]
fn bof_kernel_examples() {
    let k = bof_kernel(&shapes::collapse(), &bound()).unwrap();
    assert_eq!(k.data.x2.object_count(), 6);
    let k = bof_kernel(&bang(shapes::parallel_pair()), &bound()).unwrap();
    assert_eq!(k.data.x2.object_count(), 6);
    assert!(k.data.alpha.validate().is_valid() && k.data.beta.validate().is_valid());
    for o in k.data.x2.objects() {
        let (a, b) = k.eq.table.objects[o];
        assert_eq!(k.data.alpha.component(o), a);
        assert_eq!(k.data.beta.component(o), b);
    }
}

#[test]
fn comparison_map_examples() {
    let c = arc(shapes::parallel_pair());
    let maps = comparison_maps(&FinFunctor::identity(&c), &bound()).unwrap();
    for m in [&maps.delta, &maps.gamma, &maps.xi, &maps.eq_f] {
        assert!(m.is_isomorphism());
    }

    let maps = comparison_maps(&shapes::collapse(), &bound()).unwrap();
    assert!(!maps.gamma.is_injective_on_objects());
    assert!(!maps.gamma.is_isomorphism());

    let maps = comparison_maps(&shapes::point_inclusion(), &bound()).unwrap();
    assert!(maps.delta.is_isomorphism());
    assert!(maps.gamma.is_isomorphism());
    assert!(maps.eq_f.is_isomorphism());
}

#[test]
fn kernel_validation_catches_wrong_section() {
    let f = bang(shapes::arrow());
    let mut k = bo_kernel(&f).unwrap().data;
    assert!(k.validate().is_valid());
    let wrong = k.x2.objects().find(|&o| k.d.ob(o) == 0 && k.c.ob(o) == 1).unwrap();
    k.i = FinFunctor::constant(&k.x1, &k.x2, wrong);
    let r = k.validate();
    assert!(r.count("di = 1") > 0, "{r}");
}

#[test]
fn hand_built_nerve_catead_validates() {
    for c in [shapes::arrow(), shapes::walking_iso(), shapes::chaotic(2)] {
        assert!(fixtures::nerve_catead(&c).unwrap().validate().is_valid());
    }
}

#[test]
fn kernel_json_round_trips() {
    for f in [shapes::collapse(), bang(shapes::arrow()), shapes::point_inclusion()] {
        for s in System::ALL {
            let k = kernel(&f, s, &bound()).unwrap();
            let v = kernel_to_value(&k);
            assert_eq!(v["system"], s.as_str());
            let back = kernel_from_value(&v).unwrap();
            assert_eq!(back.system(), s);
            assert_eq!(kernel_to_value(&back), v);
            assert!(back.validate().is_valid());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn sampled_kernels_validate(seed in 0u64..100_000) {
        let f = &sampled(seed, 1)[0];
        for s in System::ALL {
            let k = match kernel(f, s, &roomy()) {
                Err(Error::SizeBound { .. }) => continue,
                k => k.unwrap(),
            };
            prop_assert!(k.validate().is_valid(), "{s}: {}", k.validate());
        }
    }

    #[test]
    fn comparison_maps_properties(seed in 0u64..100_000) {
        let f = &sampled(seed, 1)[0];
        let maps = comparison_maps(f, &roomy());
        prop_assume!(!matches!(maps, Err(Error::SizeBound { .. })));
        let maps = maps.unwrap();
        prop_assert!(maps.check_projections().is_valid());
        prop_assert_eq!(maps.eq_f.is_isomorphism(), brute_faithful(f));
        if maps.gamma.is_isomorphism() {
            prop_assert!(maps.xi.is_isomorphism());
        }
    }
}
