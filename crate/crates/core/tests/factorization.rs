use std::sync::Arc;

use exact2::factorization::*;
use exact2::fincat::shapes::{self, arc};
use exact2::fincat::*;
use exact2::fixtures;
use exact2::kernels::kernel;
use exact2::quotients::quotient;
use exact2::sample::{self, SampleLimits, SampleRng};
use exact2::{Error, SizeBound, System};
use proptest::prelude::*;

fn bound() -> SizeBound {
    SizeBound::default()
}

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

/// Class flags computed from nothing but the object and hom-set maps.
fn brute_flags(f: &FinFunctor) -> MorphismClassification {
    let (a, b) = (f.source(), f.target());
    let mut obs: Vec<ObjId> = a.objects().map(|x| f.ob(x)).collect();
    obs.sort_unstable();
    obs.dedup();
    let injective_on_objects = obs.len() == a.object_count();
    let surjective_on_objects = obs.len() == b.object_count();
    let mut full = true;
    let mut faithful = true;
    for x in a.objects() {
        for y in a.objects() {
            let img = f.hom_map(x, y);
            let target = b.hom(f.ob(x), f.ob(y));
            full &= target.iter().all(|t| img.contains(t));
            let mut dedup = img.clone();
            dedup.sort_unstable();
            dedup.dedup();
            faithful &= dedup.len() == img.len();
        }
    }
    MorphismClassification {
        injective_on_objects,
        surjective_on_objects,
        bijective_on_objects: injective_on_objects && surjective_on_objects,
        full,
        faithful,
        fully_faithful: full && faithful,
        full_monic: injective_on_objects && full && faithful,
        is_iso: injective_on_objects && surjective_on_objects && full && faithful,
    }
}

fn left(flags: &MorphismClassification, s: System) -> bool {
    match s {
        System::Bo => flags.bijective_on_objects,
        System::So => flags.surjective_on_objects,
        System::Bof => flags.bijective_on_objects && flags.full,
    }
}

fn right(flags: &MorphismClassification, s: System) -> bool {
    match s {
        System::Bo => flags.fully_faithful,
        System::So => flags.full_monic,
        System::Bof => flags.faithful,
    }
}

fn random_f(rng: &mut SampleRng) -> FinFunctor {
    sample::random_functor(rng, &SampleLimits::default(), &bound()).unwrap()
}

fn random_into(rng: &mut SampleRng, b: &Arc<FinCategory>) -> FinFunctor {
    loop {
        let c = sample::random_category(rng, &SampleLimits::default());
        if let Some(g) = sample::random_functor_between(rng, &c, b, &bound()).unwrap() {
            return g;
        }
    }
}

fn random_from(rng: &mut SampleRng, a: &Arc<FinCategory>) -> FinFunctor {
    loop {
        let c = sample::random_category(rng, &SampleLimits::default());
        if let Some(g) = sample::random_functor_between(rng, a, &c, &bound()).unwrap() {
            return g;
        }
    }
}

#[test]
fn classify_examples() {
    let p = arc(shapes::parallel_pair());
    let c = classify(&FinFunctor::identity(&p), &bound());
    assert!(c.cross_check.performed && c.cross_check.agrees);
    let f = c.flags;
    assert!(f.is_iso && f.full_monic && f.fully_faithful && f.bijective_on_objects);

    let c = classify(&shapes::collapse(), &bound());
    assert!(c.cross_check.agrees);
    assert!(c.flags.bijective_on_objects && c.flags.full && !c.flags.faithful);

    let c = classify(&shapes::point_inclusion(), &bound());
    assert!(c.cross_check.agrees);
    assert!(c.flags.full_monic && !c.flags.surjective_on_objects);
}

#[test]
fn factor_examples() {
    let two = arc(shapes::arrow());
    let fz = factor(&shapes::to_terminal(&two), System::Bo).unwrap();
    assert!(iso(&fz.middle, &arc(shapes::chaotic(2))));
    assert!(classify_direct(&fz.m).fully_faithful);

    let f = shapes::collapse();
    let fz = factor(&f, System::Bof).unwrap();
    assert!(iso(&fz.middle, &two));
    assert!(fz.m.is_isomorphism());
    assert_eq!(fz.composite(), f);
    assert_eq!(fz.e.object_map(), f.object_map());

    let f = shapes::point_inclusion();
    let fz = factor(&f, System::So).unwrap();
    assert_eq!(fz.middle.object_count(), 1);
    assert!(fz.e.is_isomorphism());
    assert_eq!(fz.m.object_map(), f.object_map());
    assert_eq!(fz.composite(), f);
}

#[test]
fn factorisation_laws_on_samples() {
    let mut rng = sample::rng(2024);
    for _ in 0..120 {
        let f = random_f(&mut rng);
        assert_eq!(classify_direct(&f), brute_flags(&f));
        for s in System::ALL {
            let fz = factor(&f, s).unwrap();
            assert!(fz.middle.validate().is_valid());
            assert!(fz.e.validate().is_valid() && fz.m.validate().is_valid());
            assert_eq!(fz.composite(), f, "{s}");
            assert!(left(&brute_flags(&fz.e), s), "{s}: left leg");
            assert!(right(&brute_flags(&fz.m), s), "{s}: right leg");
            assert!(classify_direct(&fz.e).in_left_class(s));
            assert_eq!(classify_direct(&f).in_left_class(s), left(&brute_flags(&f), s));
            assert_eq!(classify_direct(&f).in_right_class(s), right(&brute_flags(&f), s));
            assert_eq!(factor(&f, s).unwrap(), fz, "deterministic");
        }
    }
}

#[test]
fn middles_agree_with_kernel_quotients() {
    let mut rng = sample::rng(77);
    let mut checked = 0;
    for _ in 0..40 {
        let f = random_f(&mut rng);
        for s in System::ALL {
            let k = match kernel(&f, s, &bound()) {
                Ok(k) => k,
                Err(Error::SizeBound { .. }) => continue,
                Err(e) => panic!("{e}"),
            };
            let q = quotient(&k).unwrap();
            let fz = factor(&f, s).unwrap();
            let w = find_isomorphism(&fz.middle, q.category(), &roomy(), |i| fz.e.then(i) == q.q).unwrap();
            assert!(w.is_some(), "{s}: no iso commuting with the left legs");
            checked += 1;
        }
    }
    assert!(checked >= 60);
}

#[test]
fn orthogonality_is_exhaustive_on_small_categories() {
    let cats = fixtures::small_categories();
    let mut all = Vec::new();
    for a in &cats {
        assert!(a.object_count() <= 2 && a.morphism_count() <= 5);
        for b in &cats {
            all.extend(enumerate_functors(a, b, &bound()).unwrap());
        }
    }
    for s in System::ALL {
        let lefts: Vec<_> = all.iter().filter(|f| left(&brute_flags(f), s)).collect();
        let rights: Vec<_> = all.iter().filter(|g| right(&brute_flags(g), s)).collect();
        for f in &lefts {
            for g in &rights {
                let o = orthogonal(f, g, &bound()).unwrap();
                assert!(o.orthogonal, "{s}: {:?}", o.witness);
            }
            if !f.is_isomorphism() {
                assert!(!orthogonal(f, f, &bound()).unwrap().orthogonal, "{s}: non-iso left map orthogonal to itself");
            }
        }
    }
}

#[test]
fn known_non_orthogonal_pairs() {
    let f = shapes::collapse();
    let o = orthogonal(&f, &f, &bound()).unwrap();
    assert!(!o.orthogonal && o.witness.is_some());
    let d2 = shapes::to_terminal(&arc(shapes::discrete(2)));
    assert!(!orthogonal(&d2, &d2, &bound()).unwrap().orthogonal);
    let i = shapes::point_inclusion();
    assert!(!orthogonal(&i, &i, &bound()).unwrap().orthogonal);
}

#[test]
fn isomorphisms_are_orthogonal_to_everything() {
    let mut rng = sample::rng(5);
    let small = SampleLimits {
        max_objects: 2,
        max_morphisms: 5,
    };
    for _ in 0..20 {
        let g = sample::random_functor(&mut rng, &small, &bound()).unwrap();
        let a = sample::random_category(&mut rng, &small);
        let id = FinFunctor::identity(&a);
        assert!(orthogonal(&id, &g, &bound()).unwrap().orthogonal);
        assert!(orthogonal(&g, &id, &bound()).unwrap().orthogonal);
    }
}

#[test]
fn pullback_stability_and_cancellation() {
    let mut rng = sample::rng(31);
    for _ in 0..100 {
        let f = random_f(&mut rng);
        let g = random_into(&mut rng, f.target());
        let pb = pullback(&f, &g).unwrap();
        let (ff, fp) = (brute_flags(&f), brute_flags(&pb.p2));
        if ff.bijective_on_objects {
            assert!(fp.bijective_on_objects);
        }
        if ff.surjective_on_objects {
            assert!(fp.surjective_on_objects);
        }
        if ff.bijective_on_objects && ff.full {
            assert!(fp.bijective_on_objects && fp.full);
        }
        for (law, holds) in [("ff", ff.fully_faithful), ("full monic", ff.full_monic), ("faithful", ff.faithful)] {
            if holds {
                let kept = match law {
                    "ff" => fp.fully_faithful,
                    "full monic" => fp.full_monic,
                    _ => fp.faithful,
                };
                assert!(kept, "{law} not stable under pullback");
            }
        }

        let h = random_from(&mut rng, f.target());
        let gf = brute_flags(&f.then(&h));
        let hf = brute_flags(&h);
        if gf.surjective_on_objects {
            assert!(hf.surjective_on_objects);
        }
        let ff_ = brute_flags(&f);
        if ff_.fully_faithful && hf.fully_faithful {
            assert!(gf.fully_faithful);
        }
        if ff_.full_monic && hf.full_monic {
            assert!(gf.full_monic);
        }
        if ff_.faithful && hf.faithful {
            assert!(gf.faithful);
        }
        let monic = h.is_injective_on_objects() && h.is_injective_on_morphisms();
        if gf.fully_faithful && monic {
            assert!(ff_.fully_faithful);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn classify_cross_check_agrees(seed in 0u64..100_000) {
        let f = random_f(&mut sample::rng(seed));
        let c = classify(&f, &roomy());
        prop_assert!(c.cross_check.agrees, "{:?}", c.cross_check.notice);
        prop_assert_eq!(c.flags, brute_flags(&f));
    }
}
