mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_core::scalar::{self, dot};

#[test]
fn membership_matches_enumerator() {
    for (name, s) in corpus() {
        let points = box_points(s.rank(), 4);
        let probe = Enumerator::new(&s, &BigInt::from(0));
        let max = points.iter().map(|p| dot(&probe.functional, p)).max().unwrap();
        let e = Enumerator::new(&s, &max);
        for p in &points {
            assert_eq!(s.contains(p), e.contains(p), "{name} at {}", scalar::fmt_vec(p));
        }
    }
}

#[test]
fn saturation_matches_box_hilbert_basis() {
    for (name, s) in corpus() {
        let sat = s.saturation();
        assert_eq!(sat.minimal_generators().unwrap(), box_hilbert_basis(s.cone()), "{name}");
        assert!(sat.includes(&s));
        assert_eq!(s.is_saturated(), sat.same_members(&s), "{name}");
    }
}

#[test]
fn faces_of_the_cone_match_faces_of_the_semigroup() {
    for (name, s) in corpus() {
        let faces = s.dual_cone().faces();
        let mut images = Vec::new();
        for tau in &faces {
            let f = s.face_semigroup(tau).unwrap();
            assert_eq!(f.orbit_lattice.rank(), s.rank() - tau.dim(), "{name} at {tau}");
            let dual_face = s.cone().face_cut_by(&tau.relative_interior_point().unwrap_or(scalar::zeros(s.rank())));
            assert_eq!(dual_face.dim(), s.rank() - tau.dim(), "{name} at {tau}");
            images.push(dual_face);
        }
        let count = images.len();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), count, "{name}");
    }
}

#[test]
fn localization_is_transitive() {
    for (name, s) in corpus().into_iter().take(16) {
        for tau in s.dual_cone().faces() {
            let local = s.localize(&tau).unwrap();
            for inner in tau.faces() {
                let direct = s.localize(&inner).unwrap();
                let twice = local.localize(&inner).unwrap();
                assert!(direct.same_members(&twice), "{name} at {tau} then {inner}");
            }
        }
    }
}

#[test]
fn minimal_generators_are_irreducible_and_generate() {
    for (name, s) in corpus() {
        let mins = s.minimal_generators().unwrap();
        let rebuilt = toric_core::AffineSemigroup::new(s.rank(), mins.clone()).unwrap();
        assert!(rebuilt.same_members(&s), "{name}");
        for (i, g) in mins.iter().enumerate() {
            let others: Vec<_> = mins.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
            let smaller = toric_core::AffineSemigroup::new(s.rank(), others);
            assert!(smaller.map_or(true, |t| !t.contains(g)), "{name}: {} is redundant", scalar::fmt_vec(g));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn membership_is_additive(seed in 0u64..10_000, a in prop::collection::vec(-3i64..=3, 3), b in prop::collection::vec(-3i64..=3, 3)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rank = 2 + (seed % 2) as usize;
        if let Some(s) = random_semigroup(&mut rng, rank) {
            let (a, b) = (v(&a[..rank]), v(&b[..rank]));
            if s.contains(&a) && s.contains(&b) {
                prop_assert!(s.contains(&scalar::add(&a, &b)));
            }
            for g in s.generators() {
                prop_assert!(s.contains(g));
            }
            if s.contains(&a) {
                prop_assert!(s.saturation().contains(&a));
                prop_assert!(s.cone().contains(&a));
            }
        }
    }
}
