//! Shared corpus and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toric_core::scalar::{self, dot};
use toric_core::{AffineSemigroup, Cone};

pub fn v(x: &[i64]) -> Vec<BigInt> {
    scalar::vector(x)
}

pub fn sg(rank: usize, gens: &[&[i64]]) -> AffineSemigroup {
    AffineSemigroup::from_i64(rank, gens).unwrap()
}

pub fn random_semigroup(rng: &mut ChaCha8Rng, rank: usize) -> Option<AffineSemigroup> {
    let n = rng.gen_range(rank..=5);
    let gens: Vec<Vec<BigInt>> =
        (0..n).map(|_| (0..rank).map(|_| BigInt::from(rng.gen_range(-1..=4))).collect()).collect();
    AffineSemigroup::new(rank, gens).ok().filter(|s| s.is_pointed())
}

/// Named pointed semigroups followed by seeded random ones of rank 2 and 3.
pub fn corpus() -> Vec<(String, AffineSemigroup)> {
    let mut out = vec![
        ("N".to_string(), sg(1, &[&[1]])),
        ("N^2".to_string(), sg(2, &[&[1, 0], &[0, 1]])),
        ("N^3".to_string(), sg(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
        ("skew plane".to_string(), sg(2, &[&[1, 0], &[-1, 1]])),
        ("<2,3>".to_string(), sg(1, &[&[2], &[3]])),
        ("<3,4,5>".to_string(), sg(1, &[&[3], &[4], &[5]])),
        ("A1".to_string(), sg(2, &[&[1, 0], &[1, 1], &[1, 2]])),
        ("umbrella".to_string(), sg(2, &[&[1, 0], &[0, 2], &[1, 1]])),
        ("A2".to_string(), sg(2, &[&[1, 0], &[1, 1], &[1, 2], &[1, 3]])),
        ("cone(1,0),(1,3)".to_string(), sg(2, &[&[1, 0], &[1, 1], &[1, 3]]).saturation()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut count = 0;
    while count < 14 {
        let rank = if count % 2 == 0 { 2 } else { 3 };
        if let Some(s) = random_semigroup(&mut rng, rank) {
            out.push((format!("random {count}: {s}"), s));
            count += 1;
        }
    }
    out
}

/// A functional positive on every generator, found by search.
pub fn positive_functional(gens: &[Vec<BigInt>], rank: usize) -> Vec<BigInt> {
    for bound in 1..20i64 {
        for l in (0..rank).map(|_| -bound..=bound).multi_cartesian_product() {
            let l: Vec<BigInt> = l.into_iter().map(BigInt::from).collect();
            if gens.iter().all(|g| dot(&l, g) > BigInt::from(0)) {
                return l;
            }
        }
    }
    panic!("no positive functional");
}

/// All elements of a pointed semigroup of height at most `max` for a
/// functional positive on the generators, by breadth-first addition.
pub struct Enumerator {
    pub functional: Vec<BigInt>,
    pub members: HashSet<Vec<BigInt>>,
    pub max: BigInt,
}

impl Enumerator {
    pub fn new(s: &AffineSemigroup, max: &BigInt) -> Self {
        let gens = s.generators().to_vec();
        let functional = positive_functional(&gens, s.rank());
        let mut members = HashSet::new();
        let mut frontier = vec![scalar::zeros(s.rank())];
        members.insert(scalar::zeros(s.rank()));
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = scalar::add(&x, g);
                if dot(&functional, &y) <= *max && members.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        Enumerator { functional, members, max: max.clone() }
    }

    pub fn contains(&self, m: &[BigInt]) -> bool {
        assert!(dot(&self.functional, m) <= self.max, "query beyond the enumerated height");
        self.members.contains(m)
    }
}

pub fn box_points(rank: usize, radius: i64) -> Vec<Vec<BigInt>> {
    (0..rank)
        .map(|_| -radius..=radius)
        .multi_cartesian_product()
        .map(|p| p.into_iter().map(BigInt::from).collect())
        .collect()
}

/// Hilbert basis of a pointed full-dimensional cone: irreducible lattice
/// points of the bounding box of the zonotope spanned by its rays.
pub fn box_hilbert_basis(cone: &Cone) -> Vec<Vec<BigInt>> {
    let d = cone.ambient_dim();
    let zero = BigInt::from(0);
    let lo: Vec<BigInt> = (0..d).map(|k| cone.rays().iter().map(|r| r[k].clone().min(zero.clone())).sum()).collect();
    let hi: Vec<BigInt> = (0..d).map(|k| cone.rays().iter().map(|r| r[k].clone().max(zero.clone())).sum()).collect();
    let points: Vec<Vec<BigInt>> = (0..d)
        .map(|k| {
            let (a, b) = (i64::try_from(&lo[k]).unwrap(), i64::try_from(&hi[k]).unwrap());
            a..=b
        })
        .multi_cartesian_product()
        .map(|p| p.into_iter().map(BigInt::from).collect::<Vec<_>>())
        .filter(|p| !scalar::is_zero(p) && cone.contains(p))
        .collect();
    // Every reducible point is an irreducible one plus a cone point, and the
    // irreducible points all lie in the box; scan by increasing height.
    let l = positive_functional(cone.rays(), d);
    let mut points = points;
    points.sort_by_key(|p| dot(&l, p));
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for x in points {
        if !out.iter().any(|h| cone.contains(&scalar::sub(&x, h))) {
            out.push(x);
        }
    }
    out.sort();
    out
}

/// Minimal generators form a lattice basis (or the semigroup is trivial).
pub fn generators_form_basis(s: &AffineSemigroup) -> bool {
    let mins = s.minimal_generators().unwrap();
    mins.len() == s.rank()
        && (s.rank() == 0
            || toric_core::Matrix::new(s.rank(), mins).determinant().unwrap().magnitude()
                == &num_bigint::BigUint::from(1u8))
}
