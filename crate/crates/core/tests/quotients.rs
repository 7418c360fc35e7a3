use std::collections::HashSet;
use std::sync::Arc;

use exact2::fincat::shapes::{self, arc};
use exact2::fincat::*;
use exact2::fixtures;
use exact2::kernels::{bo_kernel, bof_kernel, kernel, so_kernel, BoKernelData, KernelData};
use exact2::quotients::*;
use exact2::sample::{self, SampleLimits};
use exact2::{Error, SizeBound, System};
use proptest::prelude::*;

fn bound() -> SizeBound {
    SizeBound::default()
}

fn same(a: &FinFunctor, b: &FinFunctor) -> bool {
    a.object_map() == b.object_map() && a.morphism_map() == b.morphism_map()
}

fn iso(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    categories_isomorphic(a, b, &bound()).unwrap().is_some()
}

fn small_targets() -> Vec<Arc<FinCategory>> {
    vec![
        arc(shapes::terminal()),
        arc(shapes::arrow()),
        arc(shapes::discrete(2)),
        arc(shapes::parallel_pair()),
        arc(shapes::walking_iso()),
    ]
}

/// Brute-force lifting clause: for each `e` in `X2` and `h: a -> d e`, count
/// the morphisms of `X2` into `e` over `(h, 1)`.
fn non_unique_d_lifts(x: &BoKernelData) -> Vec<ObjId> {
    let mut bad = Vec::new();
    for e in x.x2.objects() {
        let id = x.x1.identity(x.c.ob(e));
        for h in x.x1.morphisms().filter(|&h| x.x1.cod(h) == x.d.ob(e)) {
            let n = x
                .x2
                .morphisms()
                .filter(|&g| x.x2.cod(g) == e && x.d.mor(g) == h && x.c.mor(g) == id)
                .count();
            if n != 1 {
                bad.push(e);
            }
        }
    }
    bad.sort_unstable();
    bad.dedup();
    bad
}

fn sampled_functors(seed: u64, n: usize) -> Vec<FinFunctor> {
    let mut rng = sample::rng(seed);
    let limits = SampleLimits::default();
    (0..n)
        .map(|_| sample::random_functor(&mut rng, &limits, &bound()).unwrap())
        .collect()
}

#[test]
fn sampled_kernels_are_effective_congruences() {
    for f in sampled_functors(11, 40) {
        for system in System::ALL {
            let k = match kernel(&f, system, &bound()) {
                Ok(k) => k,
                Err(Error::SizeBound { .. }) => continue,
                Err(e) => panic!("{e}"),
            };
            let v = is_congruence(&k);
            assert!(v.is_congruence, "{system}: {:?}", v.failed_conditions);
            let r = check_effective(&k, &bound()).unwrap();
            assert!(r.is_effective(), "{system}: {:?}", r.failures);
        }
    }
}

#[test]
fn collapse_is_its_own_bo_quotient() {
    let collapse = shapes::collapse();
    let x = KernelData::Bo(bo_kernel(&collapse).unwrap().data);
    let q = quotient(&x).unwrap();
    let iso = find_isomorphism(q.category(), collapse.target(), &bound(), |h| same(&q.q.then(h), &collapse))
        .unwrap();
    assert!(iso.is_some());
}

#[test]
fn bof_parallel_pair_collapses_to_arrow() {
    let x = fixtures::bof_congruences(&bound()).unwrap().remove(0);
    assert_eq!(x.name, "P with u ~ v");
    let x = KernelData::Bof(x.data);
    assert!(is_congruence(&x).is_congruence);
    let q = quotient(&x).unwrap();
    assert!(iso(q.category(), &arc(shapes::arrow())));
    let collapse = shapes::collapse();
    assert!(find_isomorphism(q.category(), collapse.target(), &bound(), |h| same(&q.q.then(h), &collapse))
        .unwrap()
        .is_some());
}

#[test]
fn so_quotient_of_arrow_to_point_is_point() {
    let two = arc(shapes::arrow());
    let x = KernelData::So(so_kernel(&shapes::to_terminal(&two)).unwrap().data);
    let q = quotient(&x).unwrap();
    assert!(iso(q.category(), &arc(shapes::terminal())));
    assert!(q.verify(&x).unwrap().is_valid());
}

#[test]
fn fattened_catead_fails_exactly_where_lifting_breaks() {
    for f in fixtures::bo_congruences().unwrap() {
        let mutated = match fixtures::fattenable_object(&f.data) {
            Some(e) => (e, fixtures::fatten_catead(&f.data, e).unwrap()),
            None => continue,
        };
        let (e, m) = mutated;
        let oracle = non_unique_d_lifts(&m);
        assert!(oracle.contains(&e), "{}", f.name);
        let v = is_congruence(&KernelData::Bo(m.clone()));
        assert!(!v.is_congruence, "{}", f.name);
        let law = "(b) unique lift along d with c-image an identity";
        assert!(v.failed(law));
        let reported: HashSet<String> = v
            .failed_conditions
            .iter()
            .filter(|c| c.law == law)
            .map(|c| c.witness[0].clone())
            .collect();
        let expected: HashSet<String> = oracle.iter().map(|&o| format!("X2 object {}", m.x2.object_name(o))).collect();
        assert_eq!(reported, expected, "{}", f.name);
    }
}

#[test]
fn congruence_fixtures_pass_and_are_effective() {
    let mut all: Vec<(String, KernelData)> = Vec::new();
    all.extend(fixtures::bo_congruences().unwrap().into_iter().map(|f| (f.name, KernelData::Bo(f.data))));
    all.extend(fixtures::so_congruences().unwrap().into_iter().map(|f| (f.name, KernelData::So(f.data))));
    all.extend(fixtures::bof_congruences(&bound()).unwrap().into_iter().map(|f| (f.name, KernelData::Bof(f.data))));
    for system in System::ALL {
        assert!(all.iter().filter(|(_, x)| x.system() == system).count() >= 5);
    }
    for (name, x) in &all {
        let v = is_congruence(x);
        assert!(v.is_congruence, "{name}: {:?}", v.failed_conditions);
        let r = check_effective(x, &bound()).unwrap();
        assert!(r.is_effective(), "{name}: {:?}", r.failures);
        assert!(r.quotient.verify(x).unwrap().is_valid(), "{name}");
    }
}

#[test]
fn mutated_fixtures_fail_with_witnesses() {
    let mut all: Vec<(String, KernelData)> = Vec::new();
    all.extend(fixtures::bo_mutations().unwrap().into_iter().map(|f| (f.name, KernelData::Bo(f.data))));
    all.extend(fixtures::so_mutations().unwrap().into_iter().map(|f| (f.name, KernelData::So(f.data))));
    all.extend(fixtures::bof_mutations(&bound()).unwrap().into_iter().map(|f| (f.name, KernelData::Bof(f.data))));
    for system in System::ALL {
        assert!(all.iter().any(|(_, x)| x.system() == system), "{system}");
    }
    for (name, x) in &all {
        let v = is_congruence(x);
        assert!(!v.is_congruence, "{name}");
        assert!(v.failed_conditions.iter().all(|c| !c.witness.is_empty()), "{name}");
        match quotient(x) {
            Err(Error::NotACongruence { .. }) => {}
            other => panic!("{name}: expected NotACongruence, got {other:?}"),
        }
    }
}

#[test]
fn so_mutations_name_the_relation_clause() {
    let fx = fixtures::so_mutations().unwrap();
    let order = fx.iter().find(|f| f.name.contains("order relation")).unwrap();
    let v = is_congruence(&KernelData::So(order.data.clone()));
    assert!(v.failed("(b) (Xdj, Xcj) is an equivalence relation: symmetric"));
    assert!(!v.failed("(b) (Xdj, Xcj) is an equivalence relation: reflexive"));
    let chain = fx.iter().find(|f| f.name.contains("non-transitive")).unwrap();
    let v = is_congruence(&KernelData::So(chain.data.clone()));
    assert!(v.failed("(b) (Xdj, Xcj) is an equivalence relation: transitive"));
}

#[test]
fn bof_mutations_name_the_failing_clause() {
    let fx = fixtures::bof_mutations(&bound()).unwrap();
    let v = is_congruence(&KernelData::Bof(fx[2].data.clone()));
    assert!(v.failed("(b) equivalence relation on X1^2: transitive"), "{:?}", v.failed_conditions);
    let v = is_congruence(&KernelData::Bof(fx[0].data.clone()));
    assert!(!v.is_congruence);
    assert!(!v.failed("(b) equivalence relation on X1^2: transitive"));
}

#[test]
fn cocycles_and_comma_comparison() {
    let mut cateads: Vec<BoKernelData> = fixtures::bo_congruences().unwrap().into_iter().map(|f| f.data).collect();
    for f in sampled_functors(5, 15) {
        cateads.push(bo_kernel(&f).unwrap().data);
    }
    for x in &cateads {
        let q = quotient(&KernelData::Bo(x.clone())).unwrap();
        let c = q.cocone.as_ref().unwrap();
        assert!(c.check_cocycles(x).is_valid());
        assert!(c.comma_comparison(x).unwrap().is_isomorphism());
        // Opcartesian lifting lands on the right endpoints.
        for e in x.x2.objects() {
            let g = c.theta.component(e);
            assert_eq!(q.category().dom(g), c.q.ob(x.d.ob(e)));
            assert_eq!(q.category().cod(g), c.q.ob(x.c.ob(e)));
        }
    }
}

#[test]
fn so_cocone_identifies_j() {
    for f in fixtures::so_congruences().unwrap() {
        let x = KernelData::So(f.data.clone());
        let q = quotient(&x).unwrap();
        assert!(q.cocone.as_ref().unwrap().check_identifies_j(&f.data).is_valid(), "{}", f.name);
    }
}

#[test]
fn quotient_is_idempotent() {
    let mut xs: Vec<KernelData> = Vec::new();
    for f in sampled_functors(23, 12) {
        for system in System::ALL {
            if let Ok(k) = kernel(&f, system, &bound()) {
                xs.push(k);
            }
        }
    }
    xs.extend(fixtures::bo_congruences().unwrap().into_iter().map(|f| KernelData::Bo(f.data)));
    for x in &xs {
        let q1 = quotient(x).unwrap();
        let k = kernel(&q1.q, x.system(), &bound()).unwrap();
        let q2 = quotient(&k).unwrap();
        let found = find_isomorphism(q1.category(), q2.category(), &bound(), |h| same(&q1.q.then(h), &q2.q)).unwrap();
        assert!(found.is_some());
    }
}

#[test]
fn universal_property_spot_check() {
    let targets = small_targets();
    let mut xs: Vec<KernelData> = Vec::new();
    xs.extend(fixtures::bo_congruences().unwrap().into_iter().map(|f| KernelData::Bo(f.data)));
    xs.extend(fixtures::so_congruences().unwrap().into_iter().take(4).map(|f| KernelData::So(f.data)));
    xs.extend(fixtures::bof_congruences(&bound()).unwrap().into_iter().map(|f| KernelData::Bof(f.data)));
    let mut cocones = 0;
    for x in &xs {
        let q = quotient(x).unwrap();
        let u = spot_check_universal(x, &q, &targets, &bound()).unwrap();
        assert!(u.holds(), "{:?}", u.failures);
        cocones += u.cocones;
    }
    assert!(cocones > 50);
}

/// Encode generator pairs as two 2-cells between functors out of a discrete category.
fn generators_as_cells(c: &Arc<FinCategory>, pairs: &[(MorId, MorId)]) -> (NatTransf, NatTransf) {
    let a = arc(shapes::discrete(pairs.len()));
    let doms: Vec<ObjId> = pairs.iter().map(|p| c.dom(p.0)).collect();
    let cods: Vec<ObjId> = pairs.iter().map(|p| c.cod(p.0)).collect();
    let functor = |objs: Vec<ObjId>| {
        let mors = objs.iter().map(|&o| c.identity(o)).collect();
        FinFunctor::new(a.clone(), c.clone(), objs, mors).unwrap()
    };
    let (f, g) = (functor(doms), functor(cods));
    let phi = NatTransf::new(f.clone(), g.clone(), pairs.iter().map(|p| p.0).collect()).unwrap();
    let psi = NatTransf::new(f, g, pairs.iter().map(|p| p.1).collect()).unwrap();
    (phi, psi)
}

/// Every set partition of `0..n`, as restricted growth strings.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn go(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur[i] = b;
            go(i + 1, max.max(b), cur, out);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    go(1, 0, &mut cur, &mut out);
    out
}

fn is_closed_congruence(c: &FinCategory, rel: &dyn Fn(MorId, MorId) -> bool, generators: &[(MorId, MorId)]) -> bool {
    let ms: Vec<MorId> = c.morphisms().collect();
    for &f in &ms {
        if !rel(f, f) {
            return false;
        }
        for &g in &ms {
            if !rel(f, g) {
                continue;
            }
            if c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g) || !rel(g, f) {
                return false;
            }
            for &h in &ms {
                if rel(g, h) && !rel(f, h) {
                    return false;
                }
                if c.dom(h) == c.cod(f) && !rel(c.compose(h, f), c.compose(h, g)) {
                    return false;
                }
                if c.cod(h) == c.dom(f) && !rel(c.compose(f, h), c.compose(g, h)) {
                    return false;
                }
            }
        }
    }
    generators.iter().all(|&(a, b)| rel(a, b))
}

/// The least compatible equivalence containing `generators`, by intersecting
/// every closed partition.
fn brute_least_congruence(c: &FinCategory, generators: &[(MorId, MorId)]) -> HashSet<(MorId, MorId)> {
    let n = c.morphism_count();
    let mut least: Option<HashSet<(MorId, MorId)>> = None;
    for p in partitions(n) {
        let rel = |f: MorId, g: MorId| p[f] == p[g];
        if !is_closed_congruence(c, &rel, generators) {
            continue;
        }
        let set: HashSet<(MorId, MorId)> =
            (0..n).flat_map(|f| (0..n).map(move |g| (f, g))).filter(|&(f, g)| p[f] == p[g]).collect();
        least = Some(match least {
            None => set,
            Some(l) => l.intersection(&set).copied().collect(),
        });
    }
    least.expect("the total relation on each hom-set is closed")
}

/// `x` with idempotent `e`, `f, g: x -> y` and `f e = g e = g`.
fn idempotent_then_pair() -> FinCategory {
    let mut b = CategoryBuilder::new();
    b.object("x");
    b.object("y");
    b.morphism("e", "x", "x");
    b.morphism("f", "x", "y");
    b.morphism("g", "x", "y");
    b.compose("e", "e", "e").compose("f", "e", "g").compose("g", "e", "g");
    b.build().unwrap()
}

/// `x` with idempotent `e` and `f: x -> y`, `f e = f`: 2 objects, 4 morphisms.
fn idempotent_then_arrow() -> FinCategory {
    let mut b = CategoryBuilder::new();
    b.object("x");
    b.object("y");
    b.morphism("e", "x", "x");
    b.morphism("f", "x", "y");
    b.compose("e", "e", "e").compose("f", "e", "f");
    b.build().unwrap()
}

fn coequifier_cases() -> Vec<(Arc<FinCategory>, Vec<(&'static str, &'static str)>)> {
    vec![
        (arc(idempotent_then_arrow()), vec![("e", "id_x")]),
        (arc(idempotent_then_pair()), vec![("e", "id_x")]),
        (arc(idempotent_then_pair()), vec![("f", "g")]),
        (arc(shapes::parallel_pair()), vec![("u", "v")]),
        (arc(sample::coequalised_pair()), vec![("u", "v")]),
        (arc(sample::monoid_fixture(4)), vec![("e1", "e0")]),
        (arc(sample::monoid_fixture(2)), vec![("e1", "e0")]),
        (arc(sample::monoid_fixture(3)), vec![("e1", "e2")]),
    ]
}

fn named_pairs(c: &FinCategory, names: &[(&str, &str)]) -> Vec<(MorId, MorId)> {
    let lookup = |n: &str| {
        c.morphism_by_name(n)
            .or_else(|| n.strip_prefix("id_").map(|o| c.identity(c.obj(o))))
            .unwrap_or_else(|| panic!("no morphism {n}"))
    };
    names.iter().map(|&(a, b)| (lookup(a), lookup(b))).collect()
}

#[test]
fn coequifier_matches_brute_force_least_congruence() {
    for (c, names) in coequifier_cases() {
        let gens = named_pairs(&c, &names);
        let (phi, psi) = generators_as_cells(&c, &gens);
        let q = coequifier_pair(&phi, &psi).unwrap();
        let oracle = brute_least_congruence(&c, &gens);
        for f in c.morphisms() {
            for g in c.morphisms() {
                assert_eq!(q.related(f, g), oracle.contains(&(f, g)), "{names:?}: {f} {g}");
            }
        }
        let qc = q.category();
        assert_eq!(qc.object_count(), c.object_count());
        let classes: HashSet<MorId> = c.morphisms().map(|m| q.representative[m]).collect();
        assert_eq!(qc.morphism_count(), classes.len());
    }
}

#[test]
fn idempotent_forced_to_identity_saturates() {
    let c = arc(idempotent_then_pair());
    let gens = named_pairs(&c, &[("e", "id_x")]);
    let (phi, psi) = generators_as_cells(&c, &gens);
    let q = coequifier_pair(&phi, &psi).unwrap();
    // f = f.1 ~ f.e = g
    assert!(q.related(c.mor("f"), c.mor("g")));
    assert_eq!(q.category().morphism_count(), 3);
}

#[test]
fn coequifier_closure_is_least() {
    for (c, names) in coequifier_cases() {
        let gens = named_pairs(&c, &names);
        let (phi, psi) = generators_as_cells(&c, &gens);
        let q = coequifier_pair(&phi, &psi).unwrap();
        for f in c.morphisms() {
            for g in c.morphisms() {
                if f == g || !q.related(f, g) {
                    continue;
                }
                let removed = |a: MorId, b: MorId| q.related(a, b) && (a, b) != (f, g) && (a, b) != (g, f);
                assert!(!is_closed_congruence(&c, &removed, &gens), "{names:?}: {f} {g}");
            }
        }
    }
}

#[test]
fn coequifier_of_equal_cells_is_identity() {
    for c in [arc(shapes::parallel_pair()), arc(sample::monoid_fixture(4)), arc(idempotent_then_pair())] {
        let id = FinFunctor::identity(&c);
        let phi = NatTransf::identity(&id);
        let q = coequifier_pair(&phi, &phi).unwrap();
        assert!(q.q.is_isomorphism());
    }
}

#[test]
fn coequifier_of_u_v_on_point_is_arrow() {
    let c = arc(shapes::parallel_pair());
    let gens = named_pairs(&c, &[("u", "v")]);
    let (phi, psi) = generators_as_cells(&c, &gens);
    let q = coequifier_pair(&phi, &psi).unwrap();
    assert!(iso(q.category(), &arc(shapes::arrow())));
}

#[test]
fn coequifier_is_universal_on_small_targets() {
    for (c, names) in coequifier_cases() {
        let gens = named_pairs(&c, &names);
        let (phi, psi) = generators_as_cells(&c, &gens);
        let q = coequifier_pair(&phi, &psi).unwrap();
        for t in small_targets() {
            let hs = enumerate_functors(q.category(), &t, &bound()).unwrap();
            for g in enumerate_functors(&c, &t, &bound()).unwrap() {
                let coequifies = gens.iter().all(|&(a, b)| g.mor(a) == g.mor(b));
                let n = hs.iter().filter(|h| same(&q.q.then(h), &g)).count();
                assert_eq!(n, usize::from(coequifies), "{names:?}");
            }
        }
    }
}

fn coequalises(s: &FinFunctor, t: &FinFunctor, q: &FinFunctor) -> bool {
    same(&s.then(q), &t.then(q))
}

fn check_ff_equivalence(s: &FinFunctor, t: &FinFunctor) {
    let eq = ff_equivalence_to_so(s, t).unwrap();
    assert!(eq.theta.is_invertible());
    assert!(eq.theta.whisker_right(&eq.r).is_identity());
    assert!(same(&eq.r.then(s), &FinFunctor::identity(s.target())));
    assert!(same(&eq.r.then(t), &FinFunctor::identity(s.target())));
    let x = KernelData::So(eq.data.clone());
    assert!(is_congruence(&x).is_congruence);
    let r = check_effective(&x, &bound()).unwrap();
    assert!(r.is_effective());
    let q = &r.quotient.q;
    assert!(coequalises(s, t, q));
    for target in small_targets() {
        let hs = enumerate_functors(q.target(), &target, &bound()).unwrap();
        for g in enumerate_functors(s.target(), &target, &bound()).unwrap() {
            let n = hs.iter().filter(|h| same(&q.then(h), &g)).count();
            assert_eq!(n, usize::from(coequalises(s, t, &g)));
        }
    }
}

#[test]
fn ff_equivalence_trivial_relation() {
    for a in [arc(shapes::arrow()), arc(shapes::parallel_pair()), arc(sample::monoid_fixture(2))] {
        let id = FinFunctor::identity(&a);
        let eq = ff_equivalence_to_so(&id, &id).unwrap();
        assert!(eq.theta.is_identity());
        let q = quotient(&KernelData::So(eq.data)).unwrap();
        assert!(iso(q.category(), &a));
        check_ff_equivalence(&id, &id);
    }
}

#[test]
fn ff_equivalence_glued_arrows() {
    let f = fixtures::glued_arrows().unwrap();
    let pb = pullback(&f, &f).unwrap();
    let eq = ff_equivalence_to_so(&pb.p1, &pb.p2).unwrap();
    let q = quotient(&KernelData::So(eq.data)).unwrap();
    assert!(iso(q.category(), &arc(shapes::arrow())));
    check_ff_equivalence(&pb.p1, &pb.p2);
}

#[test]
fn ff_equivalence_sampled() {
    let mut rng = sample::rng(8);
    for _ in 0..20 {
        let (s, t) = fixtures::sampled_ff_relation(&mut rng).unwrap();
        check_ff_equivalence(&s, &t);
    }
}

#[test]
fn ff_equivalence_errors() {
    // The order relation on 2 is not symmetric.
    let two = arc(shapes::arrow());
    let pr = product(&two, &two).unwrap();
    let keep: Vec<ObjId> = pr
        .cat
        .objects()
        .filter(|&o| {
            let (x, y) = pr.object_pair(o);
            x <= y
        })
        .collect();
    let (_, inc) = full_subcategory(&pr.cat, &keep).unwrap();
    let r = ff_equivalence_to_so(&inc.then(&pr.p1), &inc.then(&pr.p2));
    assert!(matches!(r, Err(Error::NotAnEquivalenceRelation(_))), "{r:?}");
    // The kernel pair of 2 -> 1 is an equivalence relation with non-full legs.
    let r = ff_equivalence_to_so(&pr.p1, &pr.p2);
    assert!(matches!(r, Err(Error::NotFullyFaithful(_))), "{r:?}");
}

#[test]
fn bof_kernel_quotients_are_isomorphic_hom_quotients() {
    for f in sampled_functors(31, 15) {
        let k = match bof_kernel(&f, &bound()) {
            Ok(k) => k,
            Err(Error::SizeBound { .. }) => continue,
            Err(e) => panic!("{e}"),
        };
        let q = quotient(&KernelData::Bof(k.data)).unwrap();
        // Two morphisms are identified exactly when f identifies them.
        let a = f.source();
        for g in a.morphisms() {
            for h in a.morphisms() {
                let parallel = a.dom(g) == a.dom(h) && a.cod(g) == a.cod(h);
                let expected = parallel && f.mor(g) == f.mor(h);
                assert_eq!(q.q.mor(g) == q.q.mor(h), expected);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn nerve_catead_recovers_category(seed in 0u64..10_000) {
        let mut rng = sample::rng(seed);
        let c = sample::random_category(&mut rng, &SampleLimits::default());
        let x = fixtures::nerve_catead(&c).unwrap();
        let k = KernelData::Bo(x);
        prop_assert!(is_congruence(&k).is_congruence);
        let q = quotient(&k).unwrap();
        prop_assert!(iso(q.category(), &c));
    }

    #[test]
    fn codiscrete_quotient_is_chaotic(seed in 0u64..10_000) {
        let mut rng = sample::rng(seed);
        let limits = SampleLimits { max_objects: 3, max_morphisms: 5 };
        let a = sample::random_category(&mut rng, &limits);
        let k = KernelData::Bo(fixtures::codiscrete_catead(&a).unwrap());
        let q = quotient(&k).unwrap();
        prop_assert!(iso(q.category(), &arc(shapes::chaotic(a.object_count()))));
    }
}
