use std::collections::HashSet;
use std::sync::Arc;

use exact2::abcat::json::{ring_from_str, ring_from_value, ring_hom_from_str, ring_hom_from_value, ring_hom_to_value, ring_to_value};
use exact2::abcat::*;
use exact2::sample;
use exact2::{Error, System};
use proptest::prelude::*;

fn f2() -> Arc<FiniteRing> {
    Arc::new(FiniteRing::integers_mod(2))
}

fn small_targets() -> Vec<Arc<FiniteRing>> {
    FiniteRing::small_rings().into_iter().map(|(_, r)| Arc::new(r)).collect()
}

/// Every map `a -> b` as a vector of images.
fn all_maps(a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..a {
        out = out
            .into_iter()
            .flat_map(|v| (0..b).map(move |x| [v.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

fn is_hom(s: &FiniteRing, t: &FiniteRing, m: &[usize]) -> bool {
    m[s.one()] == t.one()
        && s.elements().all(|a| {
            s.elements()
                .all(|b| m[s.add(a, b)] == t.add(m[a], m[b]) && m[s.mul(a, b)] == t.mul(m[a], m[b]))
        })
}

/// Cocones `(gamma, theta)` under the bo-kernel of `phi` with vertex `c`, by
/// brute force over all maps `theta: S -> C`.
fn cocones(phi: &RingHom, c: &FiniteRing) -> Vec<(Vec<usize>, Vec<usize>)> {
    let (r, s) = (&phi.source, &phi.target);
    let comma = ab_comma(phi);
    let mut out = Vec::new();
    for theta in all_maps(s.len(), c.len()) {
        if theta[s.one()] != c.one() {
            continue;
        }
        let multiplicative = s
            .elements()
            .all(|a| s.elements().all(|b| theta[s.mul(a, b)] == c.mul(theta[a], theta[b])));
        if !multiplicative {
            continue;
        }
        let gamma: Vec<usize> = r.elements().map(|a| theta[phi.apply(a)]).collect();
        if !is_hom(r, c, &gamma) {
            continue;
        }
        let natural = comma.hom_groups.iter().all(|h| {
            h.pairs
                .iter()
                .all(|&(r1, r2)| c.mul(gamma[r2], theta[h.s1]) == c.mul(theta[h.s2], gamma[r1]))
        });
        assert!(natural, "naturality follows from multiplicativity and gamma = theta.phi");
        out.push((gamma, theta));
    }
    out
}

#[test]
fn validates_standard_rings() {
    for (name, r) in FiniteRing::small_rings() {
        assert!(r.validate().is_valid(), "{name}");
    }
    assert!(FiniteRing::f4().validate().is_valid());
    assert!(FiniteRing::f2_polynomial_quotient(0b1001).validate().is_valid());
    let t = FiniteRing::upper_triangular_f2();
    assert!(t.validate().is_valid());
    assert!(!t.is_commutative());
}

#[test]
fn f4_tables_match_field_arithmetic() {
    let f4 = FiniteRing::f4();
    let x = f4.element("x").unwrap();
    let x1 = f4.element("x+1").unwrap();
    // x^2 = x + 1 and x (x + 1) = 1
    assert_eq!(f4.mul(x, x), x1);
    assert_eq!(f4.mul(x, x1), f4.one());
    assert_eq!(f4.characteristic(), 2);
}

#[test]
fn broken_distributivity_is_reported() {
    // Z/2 addition with "or" as multiplication: 1 (1 + 1) = 1 but 1 1 + 1 1 = 0.
    let mixed = FiniteRing::new(
        vec!["0".into(), "1".into()],
        vec![vec![0, 1], vec![1, 0]],
        vec![vec![0, 1], vec![1, 1]],
        0,
        1,
    )
    .unwrap();
    let r = mixed.validate();
    assert!(r.violations.iter().any(|v| v.law.contains("distributivity")), "{r:?}");
}

#[test]
fn hom_validation() {
    let f4 = Arc::new(FiniteRing::f4());
    assert!(f2_to_f4().validate().is_valid());
    let bad = RingHom::new(f4.clone(), f2(), vec![0, 1, 1, 0]).unwrap();
    assert!(!bad.validate().is_valid());
    assert_eq!(ring_homs(&f4, &f4).len(), 2);
    assert_eq!(ring_homs(&f4, &f2()).len(), 0);
}

#[test]
fn comma_of_identity_on_f2() {
    let id = RingHom::identity(&f2());
    let c = ab_comma(&id);
    assert_eq!(c.object_count, 2);
    assert_eq!(c.hom(1, 1).pairs, vec![(0, 0), (1, 1)]);
    // phi(r2) 0 = 0 phi(r1) always
    assert_eq!(c.hom(0, 0).pairs.len(), 4);
    // r2 . 0 = 1 . r1 forces r1 = 0
    assert_eq!(c.hom(0, 1).pairs, vec![(0, 0), (0, 1)]);
    assert!(c.validate(&id).is_valid());
}

#[test]
fn comma_object_counts() {
    let c = ab_comma(&f2_to_f4());
    assert_eq!(c.object_count, 4);
    assert!(c.validate(&f2_to_f4()).is_valid());
    let d = diagonal(&f2());
    let c = ab_comma(&d);
    assert_eq!(c.object_count, 4);
    assert!(c.validate(&d).is_valid());
}

#[test]
fn identity_quotient_is_effective() {
    let mut rings: Vec<Arc<FiniteRing>> = small_targets();
    rings.push(Arc::new(FiniteRing::upper_triangular_f2()));
    for r in rings {
        let id = RingHom::identity(&r);
        let q = ab_quotient(&id, System::Bo).unwrap();
        assert!(q.psi.is_bijective());
        assert!(q.psi.validate().is_valid());
        assert!(ab_effectivity(&id, &q).effective);
    }
}

#[test]
fn f2_to_f4_quotient_has_eight_elements() {
    let phi = f2_to_f4();
    let q = ab_quotient(&phi, System::Bo).unwrap();
    assert_eq!(phi.target.len(), 4);
    assert_eq!(q.ring.len(), 8);
    assert!(q.ring.validate().is_valid());
    assert!(q.psi.validate().is_valid());
    let cubic = Arc::new(FiniteRing::f2_polynomial_quotient(0b1001));
    let h = find_ring_isomorphism(&q.ring, &cubic).expect("S' = F2[x]/(x^3+1)");
    assert!(h.validate().is_valid());
    assert!(h.is_bijective());
    // theta(x) generates: x^3 = 1 in the quotient.
    let x = q.theta[phi.target.element("x").unwrap()];
    let x3 = q.ring.mul(x, q.ring.mul(x, x));
    assert_eq!(x3, q.ring.one());
    assert_ne!(x, q.ring.one());
    let e = ab_effectivity(&phi, &q);
    assert!(!e.effective);
    assert_eq!((e.s_size, e.sprime_size), (4, 8));
}

#[test]
fn diagonal_quotient_is_three_orthogonal_idempotents() {
    let d = diagonal(&f2());
    let q = ab_quotient(&d, System::Bo).unwrap();
    assert_eq!(q.ring.len(), 8);
    let (s, r) = (&d.target, &q.ring);
    let e = q.theta[s.element("(1,0)").unwrap()];
    let f = q.theta[s.element("(0,1)").unwrap()];
    assert_eq!(r.mul(e, e), e);
    assert_eq!(r.mul(f, f), f);
    assert_eq!(r.mul(e, f), r.zero());
    // {1, e, f} is an F2-basis: the 8 sums are distinct.
    let mut sums = HashSet::new();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                let v = r.add(r.times(a, r.one()), r.add(r.times(b, e), r.times(c, f)));
                sums.insert(v);
            }
        }
    }
    assert_eq!(sums.len(), 8);
    let f2cubed = Arc::new(FiniteRing::product(&FiniteRing::product(&f2(), &f2()), &f2()));
    assert!(find_ring_isomorphism(&q.ring, &f2cubed).is_some());
}

#[test]
fn presentations_agree_on_small_rings() {
    let homs = small_ring_homs();
    assert!(homs.len() > 20);
    for phi in &homs {
        let base = ab_quotient_with(phi, System::Bo, Presentation::Integral).unwrap();
        for p in [Presentation::MonoidRing, Presentation::Polynomial] {
            let other = ab_quotient_with(phi, System::Bo, p).unwrap();
            assert!(quotients_agree(&base, &other), "{p:?}: {:?}", phi.map);
        }
    }
}

#[test]
fn monoid_ring_presentation_loses_noncentral_coefficients() {
    // Diagonal matrices F2 x F2 inside the upper triangular ring T: the image
    // is not central.
    let r = Arc::new(FiniteRing::product(&f2(), &f2()));
    let t = Arc::new(FiniteRing::upper_triangular_f2());
    let diag = |m: usize| {
        let (a, d) = (m / 2, m % 2);
        t.element(&format!("[{a}0;0{d}]")).unwrap()
    };
    let phi = RingHom::new(r.clone(), t.clone(), r.elements().map(diag).collect()).unwrap();
    assert!(phi.validate().is_valid());
    // (gamma, theta) = (phi, id_T) is a cocone with vertex T, so a universal
    // S' admits h with h.theta = id and theta must be injective.
    let integral = ab_quotient_with(&phi, System::Bo, Presentation::Integral).unwrap();
    assert!(ab_effectivity(&phi, &integral).effective);
    assert!(find_ring_isomorphism(&integral.ring, &t).is_some());
    let monoid = ab_quotient_with(&phi, System::Bo, Presentation::MonoidRing).unwrap();
    assert!(monoid.ring.is_commutative());
    assert_eq!(monoid.ring.len(), 4);
    let injective = monoid.theta.iter().collect::<HashSet<_>>().len() == t.len();
    assert!(!injective);
}

#[test]
fn quotient_is_universal_among_brute_force_cocones() {
    let mut homs = small_ring_homs();
    homs.push(f2_to_f4());
    homs.push(diagonal(&f2()));
    for phi in &homs {
        let q = ab_quotient(phi, System::Bo).unwrap();
        for c in small_targets() {
            let under = cocones(phi, &c);
            let hs = ring_homs(&q.ring, &c);
            if c.len().pow(q.ring.len() as u32) <= 1 << 12 {
                let brute = all_maps(q.ring.len(), c.len()).into_iter().filter(|m| is_hom(&q.ring, &c, m)).count();
                assert_eq!(brute, hs.len());
            }
            for (gamma, theta) in &under {
                let n = hs
                    .iter()
                    .filter(|h| {
                        q.theta.iter().zip(theta).all(|(&a, &b)| h.apply(a) == b)
                            && q.psi.map.iter().zip(gamma).all(|(&a, &b)| h.apply(a) == b)
                    })
                    .count();
                assert_eq!(n, 1, "{:?} -> |C| = {}", phi.map, c.len());
            }
            // Every hom out of S' restricts to a cocone.
            assert_eq!(under.len(), hs.len());
        }
    }
}

#[test]
fn so_and_bo_quotients_coincide() {
    assert!(so_equals_bo(&f2_to_f4()).unwrap());
    let mut rng = sample::rng(2);
    for phi in sample_ring_homs(&mut rng, 10) {
        assert!(so_equals_bo(&phi).unwrap());
        for p in Presentation::ALL {
            let q = ab_quotient_with(&phi, System::Bo, p).unwrap();
            assert!(q.unit_condition_automatic, "{p:?}");
            let so = ab_quotient_with(&phi, System::So, p).unwrap();
            assert_eq!(so.ring, q.ring);
        }
    }
}

#[test]
fn bof_is_refused() {
    assert!(matches!(ab_quotient(&f2_to_f4(), System::Bof), Err(Error::Precondition(_))));
}

#[test]
fn counterexample_report_values() {
    let r = counterexample_report().unwrap();
    assert_eq!(r.s_size, 4);
    assert_eq!(r.sprime_size, 8);
    assert!(r.so_equals_bo);
    assert!(r.iso_to_f2_cubic.is_some());
    assert!(r.conclusion.starts_with("not effective"));
    assert_eq!(r.coequifier.phi_sprime_size, 1);
    assert!(r.coequifier.phi_effective);
    assert_eq!(r.coequifier.diagonal_sprime_size, 8);
    assert!(!r.coequifier.diagonal_is_so_quotient);
    assert!(r.reproduces());
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["S_size"], 4);
    assert_eq!(v["Sprime_size"], 8);
    assert_eq!(v["so_equals_bo"], true);
}

#[test]
fn ring_json_round_trip() {
    for (_, r) in FiniteRing::small_rings() {
        let v = ring_to_value(&r);
        assert_eq!(ring_from_value(&v).unwrap(), r);
    }
    let h = f2_to_f4();
    let back = ring_hom_from_value(&ring_hom_to_value(&h)).unwrap();
    assert_eq!(back.map, h.map);
    assert_eq!(*back.target, *h.target);
}

#[test]
fn ring_json_errors_name_the_path() {
    let text = r#"{"schema":"ring/v1","elements":["0","1"],"zero":"0","one":"1",
        "add":[["0","1"],["1","2"]],"mul":[["0","0"],["0","1"]]}"#;
    match ring_from_str(text) {
        Err(Error::InvalidInput { path, .. }) => assert_eq!(path, "add[1][1]"),
        other => panic!("{other:?}"),
    }
    let text = r#"{"elements":["0"],"zero":"0","one":"0","add":[["0"]],"mul":[["0"]],"extra":1}"#;
    assert!(matches!(ring_from_str(text), Err(Error::InvalidInput { .. })));
    let hom = ring_hom_to_value(&f2_to_f4());
    let mut broken = hom.clone();
    broken["map"]["1"] = serde_json::json!("y");
    match ring_hom_from_str(&broken.to_string()) {
        Err(Error::InvalidInput { path, .. }) => assert_eq!(path, "map.1"),
        other => panic!("{other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn quotients_validate(seed in 0u64..10_000) {
        let mut rng = sample::rng(seed);
        let phi = sample_ring_homs(&mut rng, 1).remove(0);
        prop_assert!(phi.validate().is_valid());
        for system in [System::Bo, System::So] {
            let q = ab_quotient(&phi, system).unwrap();
            prop_assert!(q.ring.validate().is_valid());
            prop_assert!(q.psi.validate().is_valid());
            let e = ab_effectivity(&phi, &q);
            prop_assert_eq!(e.effective, e.sprime_size == e.s_size && e.homs_agree);
        }
    }
}
