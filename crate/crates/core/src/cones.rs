//! Rational polyhedral cones with both descriptions kept in canonical form,
//! and fans of strictly convex cones.
//!
//! A cone is stored as
//! * `lineality`: the saturated lattice basis (HNF) of its lineality space,
//! * `rays`: primitive extreme rays of the pointed quotient, represented by
//!   their orthogonal projection onto the complement of the lineality space,
//! * `equations`: the saturated HNF basis of the orthogonal of its span,
//! * `facets`: primitive inner facet normals, projected onto its span.
//!
//! Each list is sorted, so structural equality is equality of cones.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result, Violation};
use crate::lattice::{Lattice, Matrix};
use crate::scalar::{self, dot, fmt_vecs, Int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cone<Z> {
    dim: usize,
    rays: Vec<Vec<Z>>,
    lineality: Vec<Vec<Z>>,
    equations: Vec<Vec<Z>>,
    facets: Vec<Vec<Z>>,
}

/// Component of `v` orthogonal to the span of `basis`, scaled to a primitive
/// integer vector (Cramer's rule on the Gram matrix keeps it integral).
fn orthogonal_part<Z: Int>(v: &[Z], basis: &[Vec<Z>]) -> Vec<Z> {
    if basis.is_empty() {
        return scalar::primitive(v);
    }
    let k = basis.len();
    let gram: Vec<Vec<Z>> = basis.iter().map(|a| basis.iter().map(|b| dot(a, b)).collect()).collect();
    let rhs: Vec<Z> = basis.iter().map(|b| dot(b, v)).collect();
    let det = Matrix::new(k, gram.clone()).determinant().expect("square");
    let mut out = scalar::scale(&det, v);
    for i in 0..k {
        let mut gi = gram.clone();
        for (row, r) in gi.iter_mut().zip(&rhs) {
            row[i] = r.clone();
        }
        let di = Matrix::new(k, gi).determinant().expect("square");
        out = scalar::sub(&out, &scalar::scale(&di, &basis[i]));
    }
    if det.is_negative() {
        out = scalar::neg(&out);
    }
    scalar::primitive(&out)
}

fn saturated_basis<Z: Int>(dim: usize, vs: &[Vec<Z>]) -> Vec<Vec<Z>> {
    Lattice::span(dim, vs).saturation().basis().to_vec()
}

/// Double description: generators of `{x : E x = 0, A x >= 0}` as a
/// lineality basis and extreme rays of the pointed quotient.
fn double_description<Z: Int>(dim: usize, equations: &[Vec<Z>], inequalities: &[Vec<Z>]) -> (Vec<Vec<Z>>, Vec<Vec<Z>>) {
    let mut lin: Vec<Vec<Z>> = (0..dim).map(|i| scalar::unit(dim, i)).collect();
    let mut rays: Vec<Vec<Z>> = Vec::new();
    let mut processed: Vec<Vec<Z>> = Vec::new();
    let constraints = equations.iter().map(|e| (e, true)).chain(inequalities.iter().map(|a| (a, false)));
    for (a, is_eq) in constraints {
        if scalar::is_zero(a) {
            continue;
        }
        if let Some(idx) = lin.iter().position(|b| !dot(a, b).is_zero()) {
            let mut b0 = lin.remove(idx);
            let mut ab0 = dot(a, &b0);
            if ab0.is_negative() {
                b0 = scalar::neg(&b0);
                ab0 = -ab0;
            }
            let shear = |v: &Vec<Z>| scalar::primitive(&scalar::combine(&ab0, v, &dot(a, v), &b0));
            lin = lin.iter().map(shear).collect();
            rays = rays.iter().map(shear).collect();
            if !is_eq {
                rays.push(scalar::primitive(&b0));
            }
            processed.push(a.clone());
        } else {
            let vals: Vec<Z> = rays.iter().map(|r| dot(a, r)).collect();
            let zero_sets: Vec<Vec<bool>> =
                rays.iter().map(|r| processed.iter().map(|c| dot(c, r).is_zero()).collect()).collect();
            let mut next: Vec<Vec<Z>> = Vec::new();
            for (i, r) in rays.iter().enumerate() {
                if vals[i].is_zero() || (vals[i].is_positive() && !is_eq) {
                    next.push(r.clone());
                }
            }
            for p in 0..rays.len() {
                if !vals[p].is_positive() {
                    continue;
                }
                for n in 0..rays.len() {
                    if !vals[n].is_negative() {
                        continue;
                    }
                    let common: Vec<bool> = zero_sets[p].iter().zip(&zero_sets[n]).map(|(x, y)| *x && *y).collect();
                    let adjacent = (0..rays.len())
                        .all(|r| r == p || r == n || !common.iter().zip(&zero_sets[r]).all(|(c, z)| !*c || *z));
                    if adjacent {
                        let v = scalar::combine(&vals[p], &rays[n], &vals[n], &rays[p]);
                        next.push(scalar::primitive(&v));
                    }
                }
            }
            let mut seen = BTreeSet::new();
            next.retain(|r| seen.insert(r.clone()));
            rays = next;
            processed.push(a.clone());
        }
    }
    (lin, rays)
}

impl<Z: Int> Cone<Z> {
    fn canonical(dim: usize, lineality: &[Vec<Z>], rays: &[Vec<Z>], equations: &[Vec<Z>], facets: &[Vec<Z>]) -> Self {
        let lineality = saturated_basis(dim, lineality);
        let equations = saturated_basis(dim, equations);
        let clean = |vs: &[Vec<Z>], modulo: &[Vec<Z>]| {
            let set: BTreeSet<Vec<Z>> =
                vs.iter().map(|v| orthogonal_part(v, modulo)).filter(|v| !scalar::is_zero(v)).collect();
            set.into_iter().collect::<Vec<_>>()
        };
        let rays = clean(rays, &lineality);
        let facets = clean(facets, &equations);
        Cone { dim, rays, lineality, equations, facets }
    }

    /// The cone `R≥0·generators` (the zero cone when `generators` is empty).
    pub fn from_generators(dim: usize, generators: &[Vec<Z>]) -> Self {
        for g in generators {
            assert_eq!(g.len(), dim, "generator outside the ambient space");
        }
        let (dual_lin, dual_rays) = double_description(dim, &[], generators);
        let (lin, rays) = double_description(dim, &dual_lin, &dual_rays);
        Self::canonical(dim, &lin, &rays, &dual_lin, &dual_rays)
    }

    /// The cone `{x : ⟨e, x⟩ = 0 for e in equations, ⟨a, x⟩ >= 0 for a in inequalities}`.
    pub fn from_inequalities(dim: usize, equations: &[Vec<Z>], inequalities: &[Vec<Z>]) -> Self {
        let (lin, rays) = double_description(dim, equations, inequalities);
        let mut gens = rays;
        for l in &lin {
            gens.push(l.clone());
            gens.push(scalar::neg(l));
        }
        Self::from_generators(dim, &gens)
    }

    pub fn from_i64(dim: usize, generators: &[&[i64]]) -> Self {
        let gens: Vec<Vec<Z>> = generators.iter().map(|g| scalar::vector(g)).collect();
        Self::from_generators(dim, &gens)
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_generators(dim, &[])
    }

    pub fn whole_space(dim: usize) -> Self {
        Self::from_inequalities(dim, &[], &[])
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        self.dim - self.equations.len()
    }

    pub fn rays(&self) -> &[Vec<Z>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<Z>] {
        &self.lineality
    }

    pub fn equations(&self) -> &[Vec<Z>] {
        &self.equations
    }

    pub fn facets(&self) -> &[Vec<Z>] {
        &self.facets
    }

    /// Rays together with both signs of the lineality basis.
    pub fn generators(&self) -> Vec<Vec<Z>> {
        let mut gens = self.rays.clone();
        for l in &self.lineality {
            gens.push(l.clone());
            gens.push(scalar::neg(l));
        }
        gens
    }

    /// Inequalities cutting out the cone: facets and both signs of equations.
    pub fn inequalities(&self) -> Vec<Vec<Z>> {
        let mut ineqs = self.facets.clone();
        for e in &self.equations {
            ineqs.push(e.clone());
            ineqs.push(scalar::neg(e));
        }
        ineqs
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    /// Pointed and generated by part of a lattice basis.
    pub fn is_regular(&self) -> bool {
        if !self.is_pointed() {
            return false;
        }
        let l = Lattice::span(self.dim, &self.rays);
        l.rank() == self.rays.len() && l.is_saturated()
    }

    pub fn contains(&self, v: &[Z]) -> bool {
        self.equations.iter().all(|e| dot(e, v).is_zero()) && self.facets.iter().all(|f| !dot(f, v).is_negative())
    }

    /// Membership in the relative interior.
    pub fn contains_strict(&self, v: &[Z]) -> bool {
        self.equations.iter().all(|e| dot(e, v).is_zero()) && self.facets.iter().all(|f| dot(f, v).is_positive())
    }

    pub fn contains_rational(&self, v: &[Rational<Z>]) -> bool {
        self.contains(&clear_denominators(v))
    }

    pub fn contains_rational_strict(&self, v: &[Rational<Z>]) -> bool {
        self.contains_strict(&clear_denominators(v))
    }

    pub fn contains_cone(&self, other: &Cone<Z>) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    /// Sum of the rays; lies in the relative interior.
    pub fn relative_interior_point(&self) -> Result<Vec<Z>> {
        if self.is_zero() {
            return Err(Error::ZeroCone);
        }
        Ok(self.rays.iter().fold(scalar::zeros(self.dim), |acc, r| scalar::add(&acc, r)))
    }

    /// The dual cone `{y : ⟨y, x⟩ >= 0 for all x in self}`.
    pub fn dual(&self) -> Cone<Z> {
        Cone::from_generators(self.dim, &self.inequalities())
    }

    pub fn intersect(&self, other: &Cone<Z>) -> Cone<Z> {
        assert_eq!(self.dim, other.dim, "cones live in different spaces");
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        let mut ineqs = self.facets.clone();
        ineqs.extend(other.facets.iter().cloned());
        Cone::from_inequalities(self.dim, &eqs, &ineqs)
    }

    /// The face cut out by the supporting hyperplane `u⊥` (u must be in the dual).
    pub fn face_cut_by(&self, u: &[Z]) -> Cone<Z> {
        let mut eqs = self.equations.clone();
        eqs.push(u.to_vec());
        Cone::from_inequalities(self.dim, &eqs, &self.facets)
    }

    /// Smallest face containing the point `v` of the cone.
    pub fn smallest_face_containing(&self, v: &[Z]) -> Cone<Z> {
        let mut eqs = self.equations.clone();
        eqs.extend(self.facets.iter().filter(|f| dot(f, v).is_zero()).cloned());
        Cone::from_inequalities(self.dim, &eqs, &self.facets)
    }

    pub fn is_face_of(&self, other: &Cone<Z>) -> bool {
        if self.dim != other.dim || !other.contains_cone(self) {
            return false;
        }
        let p = self.rays.iter().fold(scalar::zeros(self.dim), |acc, r| scalar::add(&acc, r));
        other.smallest_face_containing(&p) == *self
    }

    /// All faces, sorted canonically, from the lineality space up to the cone.
    pub fn faces(&self) -> Vec<Cone<Z>> {
        let gens = self.rays.clone();
        let close = |tight: &BTreeSet<usize>| -> BTreeSet<usize> {
            let on: Vec<&Vec<Z>> =
                gens.iter().filter(|r| tight.iter().all(|&f| dot(&self.facets[f], r).is_zero())).collect();
            (0..self.facets.len()).filter(|&f| on.iter().all(|r| dot(&self.facets[f], r).is_zero())).collect()
        };
        let start = close(&BTreeSet::new());
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        seen.insert(start.clone());
        let mut queue = VecDeque::from([start]);
        while let Some(t) = queue.pop_front() {
            for f in 0..self.facets.len() {
                if t.contains(&f) {
                    continue;
                }
                let mut s = t.clone();
                s.insert(f);
                let c = close(&s);
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
        let mut faces: Vec<Cone<Z>> = seen
            .iter()
            .map(|t| {
                let mut g: Vec<Vec<Z>> =
                    gens.iter().filter(|r| t.iter().all(|&f| dot(&self.facets[f], r).is_zero())).cloned().collect();
                for l in &self.lineality {
                    g.push(l.clone());
                    g.push(scalar::neg(l));
                }
                Cone::from_generators(self.dim, &g)
            })
            .collect();
        faces.sort();
        faces.dedup();
        faces
    }

    /// The face `self^∨ ∩ τ⊥` of the dual cone attached to the face τ.
    pub fn dual_face(&self, tau: &Cone<Z>) -> Result<Cone<Z>> {
        if !tau.is_face_of(self) {
            return Err(Error::NotAFace(tau.to_string()));
        }
        Ok(Cone::from_inequalities(self.dim, &tau.generators(), &self.generators()))
    }

    /// Faces paired with their dual faces.
    pub fn faces_with_duals(&self) -> Vec<(Cone<Z>, Cone<Z>)> {
        self.faces()
            .into_iter()
            .map(|t| {
                let d = Cone::from_inequalities(self.dim, &t.generators(), &self.generators());
                (t, d)
            })
            .collect()
    }

    /// Facets as cones.
    pub fn facet_cones(&self) -> Vec<Cone<Z>> {
        self.facets.iter().map(|f| self.face_cut_by(f)).collect()
    }
}

fn clear_denominators<Z: Int>(v: &[Rational<Z>]) -> Vec<Z> {
    let l = v.iter().fold(Z::one(), |l, x| l.lcm(x.denom()));
    v.iter().map(|x| x.numer().clone() * (l.clone() / x.denom().clone())).collect()
}

impl<Z: Int> PartialOrd for Cone<Z> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<Z: Int> Ord for Cone<Z> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.dim(), &self.rays, &self.lineality, &self.equations, &self.facets).cmp(&(
            other.dim(),
            &other.rays,
            &other.lineality,
            &other.equations,
            &other.facets,
        ))
    }
}

impl<Z: Int> fmt::Display for Cone<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lineality.is_empty() {
            write!(f, "{}", fmt_vecs(&self.rays))
        } else {
            write!(f, "{}+lin{}", fmt_vecs(&self.rays), fmt_vecs(&self.lineality))
        }
    }
}

/// A fan: strictly convex cones closed under faces, meeting along common faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan<Z> {
    dim: usize,
    maximal: Vec<Cone<Z>>,
    cones: Vec<Cone<Z>>,
}

impl<Z: Int> Fan<Z> {
    /// Validates the maximal cones and closes them under faces. Maximal cones
    /// keep their input order; the full cone list is sorted.
    pub fn new(dim: usize, maximal: Vec<Cone<Z>>) -> std::result::Result<Self, Vec<Violation>> {
        let mut violations = Vec::new();
        for c in &maximal {
            if !c.is_pointed() {
                violations.push(Violation::NotStrictlyConvex { cone: c.to_string() });
            }
        }
        for i in 0..maximal.len() {
            for j in i + 1..maximal.len() {
                let (a, b) = (&maximal[i], &maximal[j]);
                if a.contains_cone(b) || b.contains_cone(a) {
                    violations.push(Violation::FanAxiom {
                        first: a.to_string(),
                        second: b.to_string(),
                        detail: "one maximal cone contains the other".into(),
                    });
                    continue;
                }
                let t = a.intersect(b);
                if !t.is_face_of(a) || !t.is_face_of(b) {
                    violations.push(Violation::FanAxiom {
                        first: a.to_string(),
                        second: b.to_string(),
                        detail: format!("intersection {t} is not a common face"),
                    });
                }
            }
        }
        if !violations.is_empty() {
            violations.sort();
            violations.dedup();
            return Err(violations);
        }
        let mut cones: Vec<Cone<Z>> = maximal.iter().flat_map(|c| c.faces()).collect();
        if maximal.is_empty() {
            cones.push(Cone::zero(dim));
        }
        cones.sort();
        cones.dedup();
        Ok(Fan { dim, maximal, cones })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn maximal_cones(&self) -> &[Cone<Z>] {
        &self.maximal
    }

    pub fn cones(&self) -> &[Cone<Z>] {
        &self.cones
    }

    pub fn position(&self, cone: &Cone<Z>) -> Option<usize> {
        self.cones.binary_search(cone).ok()
    }

    /// Indices of the maximal cones having `tau` as a face.
    pub fn maximal_containing(&self, tau: &Cone<Z>) -> Vec<usize> {
        (0..self.maximal.len()).filter(|&i| tau.is_face_of(&self.maximal[i])).collect()
    }

    /// Primitive generators of the one-dimensional cones.
    pub fn rays(&self) -> Vec<Vec<Z>> {
        self.cones.iter().filter(|c| c.dim() == 1).map(|c| c.rays()[0].clone()).collect()
    }

    pub fn support_contains(&self, v: &[Z]) -> bool {
        if scalar::is_zero(v) {
            return true;
        }
        self.maximal.iter().any(|c| c.contains(v))
    }

    /// Whether the support is the whole space: every maximal cone is full
    /// dimensional, every facet is shared with exactly one other maximal cone
    /// lying on the other side, and small probe vectors are covered.
    pub fn is_complete(&self) -> bool {
        if self.maximal.is_empty() {
            return self.dim == 0;
        }
        if self.maximal.iter().any(|c| !c.is_full_dimensional()) {
            return false;
        }
        for (i, c) in self.maximal.iter().enumerate() {
            for (f, facet) in c.facets().iter().zip(c.facet_cones()) {
                let partners = self
                    .maximal
                    .iter()
                    .enumerate()
                    .filter(|(j, other)| *j != i && facet.is_face_of(other))
                    .filter(|(_, other)| other.rays().iter().any(|r| dot(f, r).is_negative()))
                    .count();
                if partners != 1 {
                    return false;
                }
            }
        }
        probe_vectors(self.dim, 3).iter().all(|v| self.support_contains(v))
    }
}

/// Primitive integer vectors with coordinates in `[-bound, bound]`.
pub fn probe_vectors<Z: Int>(dim: usize, bound: i64) -> Vec<Vec<Z>> {
    let mut out = Vec::new();
    let mut cur = vec![-bound; dim];
    if dim == 0 {
        return out;
    }
    loop {
        let v: Vec<Z> = scalar::vector(&cur);
        if scalar::content(&v).is_one() {
            out.push(v);
        }
        let mut k = 0;
        loop {
            if k == dim {
                return out;
            }
            cur[k] += 1;
            if cur[k] <= bound {
                break;
            }
            cur[k] = -bound;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;
    use proptest::prelude::*;

    type C = Cone<BigInt>;

    fn v(x: &[i64]) -> Vec<BigInt> {
        scalar::vector(x)
    }

    fn box_points(dim: usize, b: i64) -> Vec<Vec<BigInt>> {
        let mut pts = vec![vec![]];
        for _ in 0..dim {
            pts = pts
                .into_iter()
                .flat_map(|p: Vec<i64>| {
                    (-b..=b).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        pts.iter().map(|p| v(p)).collect()
    }

    #[test]
    fn quadrant_is_self_dual() {
        let q = C::from_i64(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(q.dual(), q);
        assert_eq!(q.facets(), &[v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn dual_of_a1_cone() {
        let c = C::from_i64(2, &[&[1, 0], &[1, 2]]);
        let d = c.dual();
        assert_eq!(d, C::from_i64(2, &[&[0, 1], &[2, -1]]));
        for p in box_points(2, 5) {
            let oracle = c.rays().iter().all(|r| dot(r, &p) >= BigInt::zero());
            assert_eq!(d.contains(&p), oracle);
        }
    }

    #[test]
    fn plane_dual_is_zero() {
        let plane = C::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert!(plane.dual().is_zero());
        assert_eq!(plane, C::whole_space(2));
    }

    #[test]
    fn face_counts() {
        let q = C::from_i64(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(q.faces().len(), 4);
        let a1 = C::from_i64(2, &[&[1, 0], &[1, 2]]);
        let faces = a1.faces();
        assert_eq!(faces, vec![C::zero(2), C::from_i64(2, &[&[1, 0]]), C::from_i64(2, &[&[1, 2]]), a1.clone()]);
        assert_eq!(C::zero(2).faces().len(), 1);
    }

    #[test]
    fn intersections() {
        let q = C::from_i64(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(q.intersect(&q), q);
        let w = C::from_i64(2, &[&[1, 1], &[-1, 1]]);
        assert_eq!(q.intersect(&w), C::from_i64(2, &[&[1, 1], &[0, 1]]));
        let a = C::from_i64(2, &[&[1, 0]]);
        let b = C::from_i64(2, &[&[-1, 0]]);
        assert!(a.intersect(&b).is_zero());
    }

    #[test]
    fn interior_points() {
        assert_eq!(C::from_i64(2, &[&[1, 0]]).relative_interior_point().unwrap(), v(&[1, 0]));
        let q = C::from_i64(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(q.relative_interior_point().unwrap(), v(&[1, 1]));
        let a1 = C::from_i64(2, &[&[1, 0], &[1, 2]]);
        let p = a1.relative_interior_point().unwrap();
        assert_eq!(p, v(&[2, 2]));
        assert!(a1.contains_strict(&p));
        assert_eq!(C::zero(2).relative_interior_point(), Err(Error::ZeroCone));
    }

    #[test]
    fn membership() {
        let q = C::from_i64(2, &[&[1, 0], &[0, 1]]);
        assert!(q.contains(&v(&[0, 0])));
        assert!(!q.contains_strict(&v(&[0, 0])));
        assert!(!q.contains(&v(&[-1, 2])));
        let d = C::from_i64(2, &[&[0, 1], &[2, -1]]);
        assert!(d.contains(&v(&[1, 0])));
        let half = vec![Rational::new(BigInt::from(1), BigInt::from(2)), Rational::from_integer(BigInt::zero())];
        assert!(d.contains_rational_strict(&half));
    }

    #[test]
    fn non_pointed_canonical_form() {
        let h = C::from_i64(2, &[&[1, 0], &[-1, 0], &[3, 1]]);
        assert_eq!(h.lineality(), &[v(&[1, 0])]);
        assert_eq!(h.rays(), &[v(&[0, 1])]);
        assert_eq!(h.facets(), &[v(&[0, 1])]);
        assert_eq!(h, C::from_i64(2, &[&[1, 0], &[-1, 0], &[-2, 1]]));
        assert_eq!(h.dual(), C::from_i64(2, &[&[0, 1]]));
        assert_eq!(h.faces().len(), 2);
    }

    #[test]
    fn lower_dimensional_cone_in_3d() {
        let c = C::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]);
        assert_eq!(c.dim(), 2);
        assert_eq!(c.rays().len(), 2);
        assert_eq!(c.equations(), &[v(&[0, 0, 1])]);
        assert_eq!(c.dual().dual(), c);
    }

    #[test]
    fn regularity() {
        assert!(C::from_i64(2, &[&[1, 0], &[0, 1]]).is_regular());
        assert!(!C::from_i64(2, &[&[1, 0], &[1, 2]]).is_regular());
        assert!(C::zero(2).is_regular());
    }

    #[test]
    fn fans() {
        let q = C::from_i64(2, &[&[1, 0], &[0, 1]]);
        let q2 = C::from_i64(2, &[&[1, 0], &[0, -1]]);
        let fan = Fan::new(2, vec![q.clone(), q2.clone()]).unwrap();
        assert_eq!(fan.cones().len(), 6);
        assert_eq!(fan.rays().len(), 3);
        assert!(!fan.is_complete());
        let overlap = C::from_i64(2, &[&[1, 1], &[1, -1]]);
        assert!(Fan::new(2, vec![q.clone(), overlap]).is_err());
        let complete =
            Fan::new(2, vec![q, q2, C::from_i64(2, &[&[-1, 0], &[0, 1]]), C::from_i64(2, &[&[-1, 0], &[0, -1]])])
                .unwrap();
        assert!(complete.is_complete());
        let p1 = Fan::new(1, vec![C::from_i64(1, &[&[1]]), C::from_i64(1, &[&[-1]])]).unwrap();
        assert!(p1.is_complete());
        assert!(Fan::new(2, vec![C::from_i64(2, &[&[1, 0], &[-1, 0]])]).is_err());
    }

    fn small_gens(dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-3i64..4, dim), 1..5)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn double_dual_is_identity(gens in small_gens(3)) {
            let g: Vec<Vec<BigInt>> = gens.iter().map(|x| v(x)).collect();
            let c = C::from_generators(3, &g);
            prop_assert_eq!(c.dual().dual(), c.clone());
            for x in &g {
                prop_assert!(c.contains(x));
            }
        }

        #[test]
        fn dual_agrees_with_oracle(gens in small_gens(2)) {
            let g: Vec<Vec<BigInt>> = gens.iter().map(|x| v(x)).collect();
            let c = C::from_generators(2, &g);
            let d = c.dual();
            for p in box_points(2, 5) {
                let oracle = g.iter().all(|r| dot(r, &p) >= BigInt::zero());
                prop_assert_eq!(d.contains(&p), oracle);
            }
        }

        #[test]
        fn face_map_reverses_inclusion(gens in small_gens(3)) {
            let g: Vec<Vec<BigInt>> = gens.iter().map(|x| v(x)).collect();
            let c = C::from_generators(3, &g);
            let pairs = c.faces_with_duals();
            let dual_faces = c.dual().faces();
            prop_assert_eq!(pairs.len(), dual_faces.len());
            for (t, d) in &pairs {
                prop_assert!(dual_faces.contains(d));
                prop_assert!(t.is_face_of(&c));
            }
            for (t1, d1) in &pairs {
                for (t2, d2) in &pairs {
                    prop_assert_eq!(t2.contains_cone(t1), d1.contains_cone(d2));
                }
            }
        }

        #[test]
        fn canonical_form_is_representation_independent(gens in small_gens(3), extra in prop::collection::vec(0i64..3, 4)) {
            let g: Vec<Vec<BigInt>> = gens.iter().map(|x| v(x)).collect();
            let c = C::from_generators(3, &g);
            // Adding non-negative combinations of generators changes nothing.
            let mut more = g.clone();
            let mut comb = scalar::zeros::<BigInt>(3);
            for (x, k) in g.iter().zip(&extra) {
                comb = scalar::add(&comb, &scalar::scale(&BigInt::from(*k), x));
            }
            more.push(comb);
            more.reverse();
            prop_assert_eq!(C::from_generators(3, &more), c.clone());
            prop_assert_eq!(C::from_inequalities(3, c.equations(), c.facets()), c);
        }
    }
}
