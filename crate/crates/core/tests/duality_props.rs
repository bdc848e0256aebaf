mod common;

use std::sync::Arc;

use common::*;
use kbar_core::duality::{
    cat_to_lcs, enumerate_homs, functor_roundtrip, functor_to_hom, hom_canonical_leq, hom_roundtrip, hom_to_functor,
    is_homomorphism, lcs_to_cat, roundtrip_cat, roundtrip_lcs, unit_witness, Homomorphism,
};
use kbar_core::enriched_cat::{canonical_leq, compose_functors, enumerate_functors};
use kbar_core::lconvex::{for_each_grid_point, member};
use kbar_core::{Error, VFunctor};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pair(seed: u64) -> (Arc<kbar_core::KCategory<i64>>, Arc<kbar_core::KCategory<i64>>) {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let a = r.gen_range(1..=3);
    let b = r.gen_range(1..=3);
    (Arc::new(random_category(&mut r, a)), Arc::new(random_category(&mut r, b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn object_roundtrips(seed in any::<u64>(), size in 1usize..=5) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let a = random_category(&mut r, size);
        prop_assert!(roundtrip_cat(&a).unwrap());
        prop_assert!(roundtrip_lcs(&random_lcs(&mut r, size)).unwrap());
    }

    #[test]
    fn homomorphisms_pull_members_back_to_members(seed in any::<u64>()) {
        let (a, b) = pair(seed);
        let d = Arc::new(cat_to_lcs(&b).unwrap());
        let e = Arc::new(cat_to_lcs(&a).unwrap());
        let homs = enumerate_homs(&d, &e);
        for phi in &homs {
            for_each_grid_point(d.size(), 2, |p| {
                if member(&d, p).unwrap() {
                    assert!(member(&e, &phi.apply(p).unwrap()).unwrap());
                }
            });
        }
        // every functor gives a hom and every hom a functor
        let fs = enumerate_functors(&a, &b);
        prop_assert_eq!(fs.len(), homs.len());
        for (f, phi) in fs.iter().zip(&homs) {
            prop_assert_eq!(functor_to_hom(f).unwrap().index_map().to_vec(), phi.index_map().to_vec());
            prop_assert!(functor_roundtrip(f).unwrap());
            prop_assert!(hom_roundtrip(phi).unwrap());
            prop_assert_eq!(hom_to_functor(phi).unwrap().object_map().to_vec(), f.object_map().to_vec());
        }
    }

    #[test]
    fn ordering_is_carried_across(seed in any::<u64>()) {
        let (a, b) = pair(seed);
        let fs = enumerate_functors(&a, &b);
        for f in &fs {
            for g in &fs {
                let phi = functor_to_hom(f).unwrap();
                let psi = functor_to_hom(g).unwrap();
                prop_assert_eq!(canonical_leq(f, g).unwrap(), hom_canonical_leq(&phi, &psi).unwrap());
            }
        }
    }

    #[test]
    fn composition_is_carried_across(seed in any::<u64>()) {
        let (a, b) = pair(seed);
        let mut r = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let size = r.gen_range(1..=2);
        let c = Arc::new(random_category(&mut r, size));
        for f in enumerate_functors(&a, &b) {
            for g in enumerate_functors(&b, &c) {
                let gf = compose_functors(&g, &f).unwrap();
                let phi = functor_to_hom(&f).unwrap();
                let psi = functor_to_hom(&g).unwrap();
                // [G∘F, K̄] = [F, K̄] ∘ [G, K̄]
                let composed: Vec<usize> = phi.index_map().iter().map(|&x| psi.index_map()[x]).collect();
                prop_assert_eq!(functor_to_hom(&gf).unwrap().index_map().to_vec(), composed);
            }
        }
    }
}

#[test]
fn labels_and_witnesses() {
    let a = kcat(vec![vec![n(0), n(1)], vec![INF, n(0)]]);
    let d = cat_to_lcs(&a).unwrap();
    assert_eq!(d.index(), a.objects());
    let back = lcs_to_cat(&d).unwrap();
    assert_eq!(back.objects(), ["pi_x0", "pi_x1"]);
    assert_eq!(unit_witness(&a).to_string(), "x0 ↦ pi_x0, x1 ↦ pi_x1");
}

#[test]
fn homomorphism_errors() {
    let d = Arc::new(lcs(vec![vec![n(0), n(0)], vec![n(0), n(0)]]));
    let e = Arc::new(lcs(vec![vec![n(0), INF], vec![INF, n(0)]]));
    let err = Homomorphism::from_labels(d.clone(), e.clone(), &[("x0", "x0")]).unwrap_err();
    assert!(matches!(err, Error::MissingLabel(_)));
    let err = Homomorphism::from_labels(d.clone(), e.clone(), &[("x0", "x0"), ("x0", "x1")]).unwrap_err();
    assert!(matches!(err, Error::DuplicateLabel(_)));
    let err = Homomorphism::from_labels(d.clone(), e.clone(), &[("x0", "x0"), ("x1", "zz")]).unwrap_err();
    assert!(matches!(err, Error::UnknownLabel(_)));
    assert!(matches!(is_homomorphism(&[0], &d, &e), Err(Error::Arity { .. })));
    assert!(matches!(is_homomorphism(&[0, 5], &d, &e), Err(Error::Mismatch(_))));

    // e → d separating the indices is not a homomorphism: d forces equal coordinates
    let phi = Homomorphism::from_labels(e.clone(), d.clone(), &[("x0", "x0"), ("x1", "x1")]).unwrap();
    assert!(!phi.is_valid());
    assert!(hom_to_functor(&phi).is_err());
    let id = Homomorphism::identity(d.clone());
    let other = Homomorphism::identity(e.clone());
    assert!(matches!(hom_canonical_leq(&id, &other), Err(Error::Mismatch(_))));
}

#[test]
fn non_functor_has_no_hom() {
    let a = Arc::new(kcat(vec![vec![n(0), n(0)], vec![n(0), n(0)]]));
    let b = Arc::new(kcat(vec![vec![n(0), INF], vec![INF, n(0)]]));
    let f = VFunctor::new(a, b, vec![0, 1]).unwrap();
    assert!(matches!(functor_to_hom(&f), Err(Error::Mismatch(_))));
}
