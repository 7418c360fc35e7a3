use std::collections::BTreeMap;
use std::sync::Arc;

use exact2::factorization::{classify_direct, factor};
use exact2::fincat::shapes::{self, arc};
use exact2::fincat::*;
use exact2::fixtures;
use exact2::internal_cat::json::*;
use exact2::internal_cat::*;
use exact2::sample::{self, SampleLimits};
use exact2::{Error, SizeBound, System};

fn iso(a: &FinCategory, b: &FinCategory) -> bool {
    categories_isomorphic(&arc(a.clone()), &arc(b.clone()), &SizeBound::default())
        .unwrap()
        .is_some()
}

#[test]
fn discrete_set_validates() {
    let base = Base::sets();
    let x = discrete_internal(&base, &base.set(3));
    assert!(validate_internal(&x).is_valid());
    let c = category_from_internal(&x).unwrap();
    assert!(c.is_discrete());
    assert_eq!(c.object_count(), 3);
}

#[test]
fn walking_arrow_translation_validates() {
    let two = shapes::arrow();
    let x = internal_from_category(&two);
    assert!(validate_internal(&x).is_valid());
    assert_eq!(x.c0.fibres, vec![2]);
    assert_eq!(x.c1.fibres, vec![3]);
    assert!(iso(&category_from_internal(&x).unwrap(), &two));
}

/// One-object internal category with morphisms `{e, a, b}`, `e` the unit,
/// and composition among `a, b` given by `table`.
fn one_object(table: [usize; 4]) -> InternalCategory {
    let base = Base::sets();
    let mut comp = BTreeMap::new();
    for g in 0..3 {
        comp.insert((0, g), g);
        comp.insert((g, 0), g);
    }
    for (k, &v) in table.iter().enumerate() {
        comp.insert((1 + k / 2, 1 + k % 2), v);
    }
    InternalCategory::new(base.clone(), base.set(1), base.set(3), vec![vec![0; 3]], vec![vec![0; 3]], vec![vec![0]], vec![comp])
}

#[test]
fn non_associative_comp_is_reported() {
    // Search the products among {a, b} for one that breaks only associativity.
    let mut found = None;
    'outer: for a in 0..81usize {
        let t = [a % 3, a / 3 % 3, a / 9 % 3, a / 27 % 3];
        let x = one_object(t);
        let v = validate_internal(&x);
        if !v.is_valid() {
            found = Some(v);
            break 'outer;
        }
    }
    let v = found.expect("some table is not associative");
    assert!(v.violations.iter().all(|x| x.law == "associativity"), "{v}");
    assert!(!v.violations.is_empty());
}

#[test]
fn discrete_internal_examples() {
    let base = Base::sets();
    let one = discrete_internal(&base, &base.set(1));
    assert!(iso(&category_from_internal(&one).unwrap(), &shapes::terminal()));
    let empty = discrete_internal(&base, &base.set(0));
    assert!(validate_internal(&empty).is_valid());
    assert_eq!(category_from_internal(&empty).unwrap().morphism_count(), 0);

    let index = arc(shapes::arrow());
    let psh = Base::presheaves(index.clone());
    let a = index.mor("a");
    let mut actions = vec![vec![0]; index.morphism_count()];
    actions[a] = vec![0];
    let p = psh.object(vec![1, 1], actions);
    assert!(psh.validate_object(&p).is_valid());
    let x = discrete_internal(&psh, &p);
    assert!(validate_internal(&x).is_valid());
    for at in index.objects() {
        let c = fibre_category(&x, at).unwrap();
        assert!(c.validate().is_valid());
        assert!(c.is_discrete());
    }
}

#[test]
fn classify_examples() {
    let two = arc(shapes::arrow());
    let id = internal_from_functor(&FinFunctor::identity(&two));
    let c = internal_classify(&id);
    assert!(c.ff && c.full && c.faithful && c.full_monic_style && c.reg_epi_on_objects && c.bo && c.is_iso);

    // Discrete functor on the injection 1 -> 2.
    let base = Base::sets();
    let d1 = Arc::new(discrete_internal(&base, &base.set(1)));
    let d2 = Arc::new(discrete_internal(&base, &base.set(2)));
    let inj = InternalFunctor::new(d1, d2, vec![vec![1]], vec![vec![1]]).unwrap();
    assert!(inj.validate().is_valid());
    let c = internal_classify(&inj);
    assert!(c.ff && !c.reg_epi_on_objects);

    let collapse = internal_from_functor(&shapes::collapse());
    let c = internal_classify(&collapse);
    assert!(c.bo && !c.ff);
    assert!(c.full && !c.faithful);
}

#[test]
fn factor_of_iso_has_iso_legs() {
    let c = arc(shapes::discrete(2));
    let swap = FinFunctor::new(c.clone(), c.clone(), vec![1, 0], vec![1, 0]).unwrap();
    let f = internal_from_functor(&swap);
    for system in System::ALL {
        let fac = internal_factor(&f, system);
        assert!(fac.composes_to(&f));
        assert!(fac.e.is_iso() && fac.m.is_iso(), "{system}");
    }
}

#[test]
fn so_factor_of_two_to_one_has_terminal_middle() {
    let f = internal_from_functor(&shapes::to_terminal(&arc(shapes::arrow())));
    let fac = internal_factor(&f, System::So);
    assert!(fac.composes_to(&f));
    assert!(validate_internal(&fac.middle).is_valid());
    assert!(iso(&category_from_internal(&fac.middle).unwrap(), &shapes::terminal()));
}

#[test]
fn bof_factor_of_collapse_is_collapse_then_identity() {
    let f = internal_from_functor(&shapes::collapse());
    let fac = internal_factor(&f, System::Bof);
    assert!(fac.composes_to(&f));
    // Up to the identification of the middle with 2 through m.
    assert!(fac.m.is_iso());
    let (e1, f1) = (&fac.e.f1.components[0], &f.f1.components[0]);
    for g in 0..e1.len() {
        for h in 0..e1.len() {
            assert_eq!(e1[g] == e1[h], f1[g] == f1[h]);
        }
    }
    assert_eq!(fac.e.f0.components, f.f0.components);
    assert!(iso(&category_from_internal(&fac.middle).unwrap(), &shapes::arrow()));
}

/// Internal legs against the finite-category factorisation, after translation.
fn check_coherence(f: &FinFunctor) {
    let fi = internal_from_functor(f);
    assert!(fi.validate().is_valid());
    let direct = classify_direct(f);
    let ic = internal_classify(&fi);
    assert_eq!(ic.ff, direct.fully_faithful);
    assert_eq!(ic.full, direct.full);
    assert_eq!(ic.faithful, direct.faithful);
    assert_eq!(ic.full_monic_style, direct.full_monic);
    assert_eq!(ic.bo, direct.bijective_on_objects);
    assert_eq!(ic.reg_epi_on_objects, direct.surjective_on_objects);
    for system in System::ALL {
        let fac = internal_factor(&fi, system);
        assert!(fac.composes_to(&fi), "{system}");
        assert!(validate_internal(&fac.middle).is_valid(), "{system}");
        assert!(fac.e.validate().is_valid() && fac.m.validate().is_valid(), "{system}");
        assert!(internal_classify(&fac.e).in_left_class(system), "{system}");
        assert!(internal_classify(&fac.m).in_right_class(system), "{system}");
        let plain = factor(f, system).unwrap();
        assert!(iso(&category_from_internal(&fac.middle).unwrap(), &plain.middle), "{system}");
        // The translated legs sit in the plain classes too.
        let (e, m) = (functor_from_internal(&fac.e).unwrap(), functor_from_internal(&fac.m).unwrap());
        assert!(classify_direct(&e).in_left_class(system), "{system}");
        assert!(classify_direct(&m).in_right_class(system), "{system}");
    }
}

#[test]
fn translation_coherence_on_sampled_functors() {
    let mut rng = sample::rng(0x1a7e);
    let limits = SampleLimits::default();
    let bound = SizeBound::default();
    for _ in 0..60 {
        let f = sample::random_functor(&mut rng, &limits, &bound).unwrap();
        check_coherence(&f);
    }
    check_coherence(&shapes::collapse());
    check_coherence(&shapes::point_inclusion());
}

#[test]
fn coequalizer_of_identity_pair_is_identity() {
    let x = Arc::new(internal_from_category(&shapes::composable_pair()));
    let id = InternalFunctor::identity(&x);
    let q = internal_ff_coequalizer(&id, &id).unwrap();
    assert!(q.q.is_iso());
    assert!(q.q_fully_faithful && q.kernel_pair_recovered);
    assert!(q.segal.iter().all(|s| s.invertible));
    assert_eq!(q.segal.iter().map(|s| s.level).collect::<Vec<_>>(), vec![2, 3]);
}

fn check_kernel_pair_quotient(f: &InternalFunctor) {
    let (_, s, t) = internal_pullback(f, f).unwrap();
    let q = internal_ff_coequalizer(&s, &t).unwrap();
    assert!(q.segal.iter().all(|s| s.invertible));
    assert!(q.q_fully_faithful);
    assert!(q.kernel_pair_recovered);
    let h = descend(&q, f).expect("f coequalises its kernel pair");
    assert!(h.validate().is_valid());
    assert!(h.is_iso());
}

#[test]
fn kernel_pair_of_surjective_ff_functor_in_sets() {
    let f = internal_from_functor(&fixtures::glued_arrows().unwrap());
    check_kernel_pair_quotient(&f);
}

#[test]
fn sampled_ff_relations_in_sets() {
    let mut rng = sample::rng(88);
    for _ in 0..20 {
        let p = fixtures::sampled_ff_projection(&mut rng).unwrap();
        check_kernel_pair_quotient(&internal_from_functor(&p));
        // The plain kernel pair, translated, gives the same quotient.
        let pb = pullback(&p, &p).unwrap();
        let e = Arc::new(internal_from_category(&pb.cat));
        let x = Arc::new(internal_from_category(p.source()));
        let tr = |f: &FinFunctor| {
            InternalFunctor::new(e.clone(), x.clone(), vec![f.object_map().to_vec()], vec![f.morphism_map().to_vec()])
                .unwrap()
        };
        let q = internal_ff_coequalizer(&tr(&pb.p1), &tr(&pb.p2)).unwrap();
        assert!(q.segal.iter().all(|s| s.invertible));
        assert!(q.q_fully_faithful && q.kernel_pair_recovered);
        assert!(iso(&category_from_internal(&q.quotient).unwrap(), p.target()));
    }
}

fn presheaf_projection() -> InternalFunctor {
    let f = fixtures::presheaf_ff_projection().unwrap();
    assert!(validate_internal(&f.source).is_valid(), "{}", validate_internal(&f.source));
    assert!(validate_internal(&f.target).is_valid());
    assert!(f.validate().is_valid(), "{}", f.validate());
    f
}

#[test]
fn presheaf_kernel_pair_passes_segal_checks() {
    let f = presheaf_projection();
    let c = internal_classify(&f);
    assert!(c.ff && c.reg_epi_on_objects && !c.bo);
    check_kernel_pair_quotient(&f);
    // Pointwise oracle: each fibre of the quotient is the fibre of Y.
    let (_, s, t) = internal_pullback(&f, &f).unwrap();
    let q = internal_ff_coequalizer(&s, &t).unwrap();
    for at in f.source.base.index().objects() {
        let qa = fibre_category(&q.quotient, at).unwrap();
        let ya = fibre_category(&f.target, at).unwrap();
        assert!(iso(&qa, &ya));
    }
}

#[test]
fn presheaf_factorisations_are_pointwise() {
    let f = presheaf_projection();
    for system in System::ALL {
        let fac = internal_factor(&f, system);
        assert!(fac.composes_to(&f));
        assert!(validate_internal(&fac.middle).is_valid(), "{system}");
        assert!(fac.e.validate().is_valid() && fac.m.validate().is_valid());
        assert!(internal_classify(&fac.e).in_left_class(system));
        assert!(internal_classify(&fac.m).in_right_class(system));
        for at in f.source.base.index().objects() {
            let src = arc(fibre_category(&f.source, at).unwrap());
            let tgt = arc(fibre_category(&f.target, at).unwrap());
            let fa = fibre_functor(&f, at, src, tgt).unwrap();
            let plain = factor(&fa, system).unwrap();
            assert!(iso(&fibre_category(&fac.middle, at).unwrap(), &plain.middle), "{system} at {at}");
        }
    }
}

#[test]
fn non_ff_relation_is_refused() {
    let f = internal_from_functor(&shapes::to_terminal(&arc(shapes::arrow())));
    let (_, s, t) = internal_pullback(&f, &f).unwrap();
    let err = internal_ff_coequalizer(&s, &t).unwrap_err();
    assert!(matches!(err, Error::NotFFEquivalenceRelation(_)), "{err}");

    // The order relation on two objects, as an ff pair chaotic(3) => chaotic(2).
    let (e, x) = (arc(shapes::chaotic(3)), arc(shapes::chaotic(2)));
    let by_objects = |obs: [usize; 3]| {
        let mors = e.morphisms().map(|m| x.hom(obs[e.dom(m)], obs[e.cod(m)])[0]).collect();
        FinFunctor::new(e.clone(), x.clone(), obs.to_vec(), mors).unwrap()
    };
    let (s, t) = (internal_from_functor(&by_objects([0, 1, 0])), internal_from_functor(&by_objects([0, 1, 1])));
    let t = InternalFunctor::new(s.source.clone(), s.target.clone(), t.f0.components, t.f1.components).unwrap();
    match internal_ff_coequalizer(&s, &t).unwrap_err() {
        Error::NotFFEquivalenceRelation(msg) => assert!(msg.contains("symmetric"), "{msg}"),
        e => panic!("{e}"),
    }
}

#[test]
fn json_round_trip() {
    let f = presheaf_projection();
    let v = internal_functor_to_value(&f);
    let back = internal_functor_from_value(&v).unwrap();
    assert!(back.same_maps(&f));
    assert_eq!(*back.source, *f.source);
    assert_eq!(*back.target, *f.target);
    assert_eq!(v["schema"], INTERNAL_FUNCTOR_SCHEMA);
    assert_eq!(v["source"]["base"]["kind"], "finite-presheaves");

    let x = internal_from_category(&shapes::composable_pair());
    let v = internal_to_value(&x);
    assert_eq!(v["base"]["kind"], "finite-sets");
    assert_eq!(internal_from_value(&v).unwrap(), x);

    let (s, t) = {
        let (_, s, t) = internal_pullback(&f, &f).unwrap();
        (s, t)
    };
    let v = internal_pair_to_value(&s, &t);
    let (s2, t2) = internal_pair_from_value(&v).unwrap();
    assert!(s2.same_maps(&s) && t2.same_maps(&t));
}

#[test]
fn json_identity_composites_are_filled() {
    let x = internal_from_category(&shapes::arrow());
    let mut v = internal_to_value(&x);
    v["comp"] = serde_json::json!([[]]);
    let back = internal_from_value(&v).unwrap();
    assert_eq!(back, x);
}

#[test]
fn json_errors_name_the_path() {
    let x = internal_from_category(&shapes::arrow());
    let mut v = internal_to_value(&x);
    v["d"][0][1] = serde_json::json!(7);
    match internal_from_value(&v).unwrap_err() {
        Error::InvalidInput { path, .. } => assert_eq!(path, "d[0][1]"),
        e => panic!("{e}"),
    }
    let mut v = internal_to_value(&x);
    v["c0"]["fibres"] = serde_json::json!("two");
    match internal_from_value(&v).unwrap_err() {
        Error::InvalidInput { path, .. } => assert_eq!(path, "c0.fibres"),
        e => panic!("{e}"),
    }
    let mut v = internal_to_value(&x);
    v["schema"] = serde_json::json!("internal/v0");
    assert!(matches!(internal_from_value(&v), Err(Error::InvalidInput { .. })));
}
