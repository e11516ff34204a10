//! Finitely generated semigroups `Γ ⊂ M = Z^d` with `ZΓ = M`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use itertools::Itertools;

use crate::cones::Cone;
use crate::error::{Error, Result};
use crate::lattice::{self, Index, Lattice, LinearMap, Matrix};
use crate::scalar::{self, dot, fmt_vecs, Int};

#[derive(Debug, Clone)]
pub struct AffineSemigroup<Z> {
    rank: usize,
    generators: Vec<Vec<Z>>,
    cone: Cone<Z>,
    dual: Cone<Z>,
    grading: Vec<Z>,
    units: Lattice<Z>,
}

/// Structural equality compares generator lists; use
/// [`AffineSemigroup::same_members`] for equality of semigroups.
impl<Z: Int> PartialEq for AffineSemigroup<Z> {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.generators == other.generators
    }
}

impl<Z: Int> Eq for AffineSemigroup<Z> {}

/// The face `Γ ∩ τ⊥` together with the lattices it determines.
#[derive(Debug, Clone)]
pub struct FaceSemigroup<Z> {
    /// `Γ ∩ τ⊥` written in the HNF basis of `orbit_lattice`.
    pub semigroup: AffineSemigroup<Z>,
    /// The generators of `Γ` lying in `τ⊥`, in ambient coordinates.
    pub ambient_generators: Vec<Vec<Z>>,
    /// `M(τ,Γ)`, spanned by `Γ ∩ τ⊥`.
    pub orbit_lattice: Lattice<Z>,
    /// `M(τ) = M ∩ τ⊥`.
    pub perp_lattice: Lattice<Z>,
    /// `[M(τ) : M(τ,Γ)]`.
    pub index: Z,
}

/// Decomposition of `M` adapted to the units of `Γ`.
#[derive(Debug, Clone)]
pub struct LinealitySplit<Z> {
    /// The group of units `Γ ∩ σ⊥`.
    pub lattice_part: Lattice<Z>,
    /// Image of `Γ` in `M / (M ∩ σ⊥)`, a pointed semigroup.
    pub pointed_part: AffineSemigroup<Z>,
    /// Rows: a basis of `M ∩ σ⊥` followed by a complement.
    pub basis: Vec<Vec<Z>>,
    /// Coordinates with respect to `basis`.
    pub change_of_basis: LinearMap<Z>,
    /// `[M ∩ σ⊥ : Γ ∩ σ⊥]`; the split is a product decomposition iff it is 1.
    pub index: Z,
}

impl<Z: Int> LinealitySplit<Z> {
    pub fn is_product(&self) -> bool {
        self.index.is_one()
    }
}

impl<Z: Int> AffineSemigroup<Z> {
    /// Validates `ZΓ = Z^rank`. Duplicates and zero vectors are dropped;
    /// the order of first occurrence is kept.
    pub fn new(rank: usize, generators: Vec<Vec<Z>>) -> Result<Self> {
        for g in &generators {
            if g.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, found: g.len() });
            }
        }
        let mut seen = BTreeSet::new();
        let generators: Vec<Vec<Z>> =
            generators.into_iter().filter(|g| !scalar::is_zero(g) && seen.insert(g.clone())).collect();
        if !Lattice::span(rank, &generators).is_full() {
            return Err(Error::GroupNotFull { rank, generators: fmt_vecs(&generators) });
        }
        let cone = Cone::from_generators(rank, &generators);
        let dual = cone.dual();
        let grading = dual.rays().iter().fold(scalar::zeros(rank), |a, r| scalar::add(&a, r));
        let unit_gens: Vec<Vec<Z>> = generators.iter().filter(|g| dot(&grading, g).is_zero()).cloned().collect();
        let units = Lattice::span(rank, &unit_gens);
        Ok(AffineSemigroup { rank, generators, cone, dual, grading, units })
    }

    pub fn from_i64(rank: usize, generators: &[&[i64]]) -> Result<Self> {
        Self::new(rank, generators.iter().map(|g| scalar::vector(g)).collect())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Vec<Z>] {
        &self.generators
    }

    /// `σ̌ = R≥0 Γ`.
    pub fn cone(&self) -> &Cone<Z> {
        &self.cone
    }

    /// `σ`, the dual of `σ̌`.
    pub fn dual_cone(&self) -> &Cone<Z> {
        &self.dual
    }

    /// A functional positive on `Γ` outside its group of units.
    pub fn grading(&self) -> &[Z] {
        &self.grading
    }

    /// The group of units `Γ ∩ σ⊥`.
    pub fn units(&self) -> &Lattice<Z> {
        &self.units
    }

    pub fn is_pointed(&self) -> bool {
        self.cone.is_pointed()
    }

    pub fn contains(&self, m: &[Z]) -> bool {
        if m.len() != self.rank || !self.cone.contains(m) {
            return false;
        }
        let level = dot(&self.grading, m);
        if level.is_zero() {
            return self.units.contains(m);
        }
        let lowest = self
            .generators
            .iter()
            .map(|g| dot(&self.grading, g))
            .filter(|l| !l.is_zero())
            .min()
            .expect("a point of positive level needs a generator of positive level");
        let depth = (level / lowest).to_f64().unwrap_or(f64::INFINITY);
        let search_cost = depth.powi(self.rank as i32);
        let (bound, reduction_cost) = self.reduction_bound();
        if search_cost <= reduction_cost.max(1e5) {
            self.contains_by_search(m)
        } else {
            self.contains_by_reduction(m, &bound)
        }
    }

    /// Depth-first search over `m − g` for generators of positive level,
    /// memoizing non-members; a point of level zero is a member iff it is a
    /// unit.
    fn contains_by_search(&self, m: &[Z]) -> bool {
        let steps: Vec<&Vec<Z>> = self.generators.iter().filter(|g| !dot(&self.grading, g).is_zero()).collect();
        let mut failed: HashSet<Vec<Z>> = HashSet::new();
        let mut stack: Vec<(Vec<Z>, usize)> = vec![(m.to_vec(), 0)];
        while let Some((x, next)) = stack.last_mut() {
            if *next == steps.len() {
                let (x, _) = stack.pop().expect("nonempty");
                failed.insert(x);
                continue;
            }
            let rest = scalar::sub(x, steps[*next]);
            *next += 1;
            if !self.cone.contains(&rest) || failed.contains(&rest) {
                continue;
            }
            if dot(&self.grading, &rest).is_zero() {
                if self.units.contains(&rest) {
                    return true;
                }
                continue;
            }
            stack.push((rest, 0));
        }
        false
    }

    /// A bound `D` on the coefficients of integer circuit relations among the
    /// generators, and the size of the search in `contains_by_reduction`.
    fn reduction_bound(&self) -> (Z, f64) {
        let norm = self.generators.iter().map(|g| dot(g, g)).max().unwrap_or_else(Z::zero);
        let mut root = Z::one();
        while root.clone() * root.clone() < norm {
            root = root + Z::one();
        }
        let bound = num_traits::pow(root, self.rank);
        let free = self.generators.len().saturating_sub(self.rank) as i32;
        let subsets = (0..self.rank).fold(1.0, |acc, i| acc * (self.generators.len() - i) as f64 / (i + 1) as f64);
        let cost = subsets * bound.to_f64().unwrap_or(f64::INFINITY).powi(free);
        (bound, cost)
    }

    /// Any representation `m = Σ x_i g_i` can be rearranged, by moving along
    /// circuit relations, so that the coefficients at least `D` sit on
    /// linearly independent generators. So `m ∈ Γ` iff for some basis `S`
    /// among the generators and coefficients `y_j < D` on the others,
    /// `m − Σ y_j g_j` lies in `N·S`.
    fn contains_by_reduction(&self, m: &[Z], bound: &Z) -> bool {
        let n = self.generators.len();
        let d = self.rank;
        for basis in (0..n).combinations(d) {
            let rows: Vec<Vec<Z>> = basis.iter().map(|&i| self.generators[i].clone()).collect();
            if Matrix::new(d, rows.clone()).determinant().expect("square").is_zero() {
                continue;
            }
            let others: Vec<usize> = (0..n).filter(|i| !basis.contains(i)).collect();
            let mut y = vec![Z::zero(); others.len()];
            loop {
                let shift = others
                    .iter()
                    .zip(&y)
                    .fold(scalar::zeros(d), |acc, (&j, c)| scalar::add(&acc, &scalar::scale(c, &self.generators[j])));
                let rest = scalar::sub(m, &shift);
                if let Some(x) = lattice::solve_left(&rows, &rest) {
                    if x.iter().all(|c| !c.is_negative()) {
                        return true;
                    }
                }
                let mut k = 0;
                loop {
                    if k == y.len() {
                        break;
                    }
                    y[k] = y[k].clone() + Z::one();
                    if y[k] < *bound {
                        break;
                    }
                    y[k] = Z::zero();
                    k += 1;
                }
                if k == y.len() {
                    break;
                }
            }
        }
        false
    }

    /// Equality of member sets.
    pub fn same_members(&self, other: &AffineSemigroup<Z>) -> bool {
        self.rank == other.rank
            && self.generators.iter().all(|g| other.contains(g))
            && other.generators.iter().all(|g| self.contains(g))
    }

    /// Every member of `other` is a member of `self`.
    pub fn includes(&self, other: &AffineSemigroup<Z>) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// `Γ + Γ'`.
    pub fn sum(&self, other: &AffineSemigroup<Z>) -> Result<AffineSemigroup<Z>> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        AffineSemigroup::new(self.rank, gens)
    }

    /// Adds generators to the semigroup.
    pub fn extend(&self, extra: &[Vec<Z>]) -> Result<AffineSemigroup<Z>> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        AffineSemigroup::new(self.rank, gens)
    }

    /// `σ̌ ∩ M`, generated by its Hilbert basis.
    pub fn saturation(&self) -> AffineSemigroup<Z> {
        let gens = hilbert_basis(&self.cone).expect("semigroup cones are full dimensional");
        AffineSemigroup::new(self.rank, gens).expect("saturation spans the lattice")
    }

    pub fn is_saturated(&self) -> bool {
        hilbert_basis(&self.cone).expect("semigroup cones are full dimensional").iter().all(|h| self.contains(h))
    }

    fn check_face(&self, tau: &Cone<Z>) -> Result<()> {
        if tau.ambient_dim() != self.rank || !tau.is_face_of(&self.dual) {
            return Err(Error::NotAFace(tau.to_string()));
        }
        Ok(())
    }

    fn in_perp(tau: &Cone<Z>, g: &[Z]) -> bool {
        tau.generators().iter().all(|v| dot(v, g).is_zero())
    }

    /// The face `Γ ∩ τ⊥` for a face `τ` of `σ`.
    pub fn face_semigroup(&self, tau: &Cone<Z>) -> Result<FaceSemigroup<Z>> {
        self.check_face(tau)?;
        let ambient_generators: Vec<Vec<Z>> =
            self.generators.iter().filter(|g| Self::in_perp(tau, g)).cloned().collect();
        let orbit_lattice = Lattice::span(self.rank, &ambient_generators);
        let perp_lattice = Lattice::span(self.rank, &tau.generators()).annihilator();
        let index = match orbit_lattice.index_in(&perp_lattice)? {
            Index::Finite(i) => i,
            Index::Infinite => {
                return Err(Error::Internal(format!("face {tau} has an orbit lattice of the wrong rank")))
            }
        };
        let coords: Vec<Vec<Z>> = ambient_generators
            .iter()
            .map(|g| orbit_lattice.coordinates(g).expect("generator lies in its span"))
            .collect();
        let semigroup = AffineSemigroup::new(orbit_lattice.rank(), coords)?;
        Ok(FaceSemigroup { semigroup, ambient_generators, orbit_lattice, perp_lattice, index })
    }

    /// The element of `Γ` used to localize at `τ`: the smallest member (by
    /// ℓ¹ norm, then lexicographically) in the relative interior of `σ̌ ∩ τ⊥`
    /// among combinations of at most `2d` generators lying in `τ⊥`.
    pub fn localizing_element(&self, tau: &Cone<Z>) -> Result<Vec<Z>> {
        self.check_face(tau)?;
        let face_gens: Vec<Vec<Z>> = self.generators.iter().filter(|g| Self::in_perp(tau, g)).cloned().collect();
        let face = Cone::from_inequalities(self.rank, &tau.generators(), &self.cone.inequalities());
        if face.is_zero() || face_gens.is_empty() {
            return Ok(scalar::zeros(self.rank));
        }
        let mut best: Option<(Z, Vec<Z>)> = None;
        let budget = 2 * self.rank.max(1);
        for total in 1..=budget {
            for combo in face_gens.iter().combinations_with_replacement(total) {
                let m = combo.iter().fold(scalar::zeros(self.rank), |a, g| scalar::add(&a, g));
                if !face.contains_strict(&m) {
                    continue;
                }
                let key = (scalar::l1_norm(&m), m);
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
            }
        }
        Ok(match best {
            Some((_, m)) => m,
            None => face_gens.iter().fold(scalar::zeros(self.rank), |a, g| scalar::add(&a, g)),
        })
    }

    /// `Γ_τ = Γ + M(τ,Γ) = Γ + Z≥0(−m)` with `m` from [`Self::localizing_element`].
    pub fn localize(&self, tau: &Cone<Z>) -> Result<AffineSemigroup<Z>> {
        let m = self.localizing_element(tau)?;
        if scalar::is_zero(&m) {
            return Ok(self.clone());
        }
        self.extend(&[scalar::neg(&m)])
    }

    /// The unique minimal generating set of a pointed semigroup, sorted.
    pub fn minimal_generators(&self) -> Result<Vec<Vec<Z>>> {
        if !self.is_pointed() {
            return Err(Error::NotPointed);
        }
        let mut out: Vec<Vec<Z>> = self
            .generators
            .iter()
            .filter(|g| !self.generators.iter().any(|h| h != *g && self.contains(&scalar::sub(g, h))))
            .cloned()
            .collect();
        out.sort();
        Ok(out)
    }

    /// Pointed with minimal generators forming a lattice basis (or rank 0),
    /// or more generally a product of a lattice and such a semigroup.
    pub fn is_free(&self) -> bool {
        let split = self.split_lineality();
        if !split.is_product() {
            return false;
        }
        let p = &split.pointed_part;
        let mins = p.minimal_generators().expect("pointed part");
        mins.len() == p.rank()
            && (p.rank() == 0 || Matrix::new(p.rank(), mins).determinant().expect("square").abs().is_one())
    }

    /// Splits off the units: `M = (M ∩ σ⊥) ⊕ C` and `Γ` maps onto a pointed
    /// semigroup in `C ≅ M / (M ∩ σ⊥)`.
    pub fn split_lineality(&self) -> LinealitySplit<Z> {
        let d = self.rank;
        if self.is_pointed() {
            return LinealitySplit {
                lattice_part: Lattice::zero(d),
                pointed_part: self.clone(),
                basis: (0..d).map(|i| scalar::unit(d, i)).collect(),
                change_of_basis: LinearMap::identity(d),
                index: Z::one(),
            };
        }
        let lin = Lattice::span(d, self.cone.lineality());
        let complement = lin.complement().expect("lineality lattice is saturated");
        let mut basis = lin.basis().to_vec();
        basis.extend(complement);
        let l = lin.rank();
        let inverse_rows: Vec<Vec<Z>> =
            (0..d).map(|i| lattice::solve_left(&basis, &scalar::unit(d, i)).expect("unimodular basis")).collect();
        // y = x·B^-1, so as a map on column vectors the matrix is (B^-1)^T.
        let change_of_basis = LinearMap::new(d, Matrix::new(d, inverse_rows).transpose().into_rows());
        let projected: Vec<Vec<Z>> = self.generators.iter().map(|g| change_of_basis.apply(g)[l..].to_vec()).collect();
        let pointed_part = AffineSemigroup::new(d - l, projected).expect("projection of a spanning set spans");
        let index = match self.units.index_in(&lin) {
            Ok(Index::Finite(i)) => i,
            _ => unreachable!("units span the lineality lattice up to finite index"),
        };
        LinealitySplit { lattice_part: self.units.clone(), pointed_part, basis, change_of_basis, index }
    }
}

impl<Z: Int> fmt::Display for AffineSemigroup<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let all = fmt_vecs(&self.generators);
        write!(f, "<{}>", &all[1..all.len() - 1])
    }
}

/// Lattice points of the half-open parallelepiped spanned by the rows of
/// `basis` (a nonsingular square matrix).
pub fn parallelepiped_points<Z: Int>(basis: &[Vec<Z>]) -> Vec<Vec<Z>> {
    let d = basis.len();
    let mat = Matrix::new(d, basis.to_vec());
    let det = mat.determinant().expect("square");
    assert!(!det.is_zero(), "degenerate parallelepiped");
    let smith = lattice::smith_normal_form(&mat);
    let diag = smith.diagonal();
    let mut points = Vec::new();
    let ranges: Vec<Vec<Z>> = diag
        .iter()
        .map(|di| {
            let mut r = Vec::new();
            let mut t = Z::zero();
            while t < *di {
                r.push(t.clone());
                t = t + Z::one();
            }
            r
        })
        .collect();
    for t in ranges.iter().multi_cartesian_product() {
        let t: Vec<Z> = t.into_iter().cloned().collect();
        let x = if d == 0 { Vec::new() } else { smith.v_inv.left_apply(&t) };
        points.push(fold_into_parallelepiped(&x, basis, &det));
    }
    if d == 0 {
        points.push(Vec::new());
    }
    points.sort();
    points.dedup();
    points
}

fn fold_into_parallelepiped<Z: Int>(x: &[Z], basis: &[Vec<Z>], det: &Z) -> Vec<Z> {
    let d = basis.len();
    let mut out = x.to_vec();
    for i in 0..d {
        let mut rows = basis.to_vec();
        rows[i] = x.to_vec();
        let num = Matrix::new(d, rows).determinant().expect("square");
        let q = num.div_floor(det);
        out = scalar::sub(&out, &scalar::scale(&q, &basis[i]));
    }
    out
}

/// Hilbert basis of `cone ∩ Z^d` for a full-dimensional cone. For a cone
/// with lineality the result contains both signs of a basis of the
/// lineality lattice.
pub fn hilbert_basis<Z: Int>(cone: &Cone<Z>) -> Result<Vec<Vec<Z>>> {
    let d = cone.ambient_dim();
    if !cone.is_full_dimensional() {
        return Err(Error::Internal(format!("Hilbert basis of the lower dimensional cone {cone}")));
    }
    if !cone.is_pointed() {
        let lin = Lattice::span(d, cone.lineality());
        let complement = lin.complement()?;
        let mut basis = lin.basis().to_vec();
        basis.extend(complement.iter().cloned());
        let l = lin.rank();
        let coords = |v: &Vec<Z>| lattice::solve_left(&basis, v).expect("unimodular basis")[l..].to_vec();
        let projected: Vec<Vec<Z>> = cone.rays().iter().map(coords).collect();
        let quotient = Cone::from_generators(d - l, &projected);
        let mut out: Vec<Vec<Z>> = Vec::new();
        for b in lin.basis() {
            out.push(b.clone());
            out.push(scalar::neg(b));
        }
        for h in hilbert_basis(&quotient)? {
            let lifted = Matrix::new(d, complement.clone()).left_apply(&h);
            out.push(lifted);
        }
        out.sort();
        return Ok(out);
    }
    let rays = cone.rays().to_vec();
    let mut candidates: BTreeSet<Vec<Z>> = rays.iter().cloned().collect();
    for subset in rays.iter().combinations(d) {
        let rows: Vec<Vec<Z>> = subset.into_iter().cloned().collect();
        if Matrix::new(d, rows.clone()).determinant()?.is_zero() {
            continue;
        }
        for p in parallelepiped_points(&rows) {
            if !scalar::is_zero(&p) {
                candidates.insert(p);
            }
        }
    }
    let candidates: Vec<Vec<Z>> = candidates.into_iter().collect();
    Ok(irreducible_elements(cone, &candidates))
}

/// Elements of `candidates` that are not `y + z` with `y` another candidate
/// and `z` a nonzero point of the cone. Correct when `candidates` contains
/// every irreducible element of `cone ∩ Z^d`.
pub fn irreducible_elements<Z: Int>(cone: &Cone<Z>, candidates: &[Vec<Z>]) -> Vec<Vec<Z>> {
    candidates
        .iter()
        .filter(|x| !candidates.iter().any(|y| y != *x && cone.contains(&scalar::sub(x, y))))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    type S = AffineSemigroup<BigInt>;

    fn v(x: &[i64]) -> Vec<BigInt> {
        scalar::vector(x)
    }

    fn ray(x: &[i64]) -> Cone<BigInt> {
        Cone::from_i64(x.len(), &[x])
    }

    fn umbrella() -> S {
        S::from_i64(2, &[&[1, 0], &[0, 2], &[1, 1]]).unwrap()
    }

    #[test]
    fn construction() {
        assert!(S::from_i64(1, &[&[2], &[3]]).is_ok());
        assert!(umbrella().is_pointed());
        assert!(matches!(S::from_i64(2, &[&[2, 0], &[0, 2]]), Err(Error::GroupNotFull { .. })));
        let s = S::from_i64(1, &[&[2], &[3], &[2], &[0]]).unwrap();
        assert_eq!(s.generators(), &[v(&[2]), v(&[3])]);
    }

    #[test]
    fn membership() {
        let cusp = S::from_i64(1, &[&[2], &[3]]).unwrap();
        assert!(!cusp.contains(&v(&[1])));
        assert!(cusp.contains(&v(&[7])));
        assert!(cusp.contains(&v(&[0])));
        assert!(!umbrella().contains(&v(&[0, 1])));
        let half = S::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert!(half.contains(&v(&[-5, 3])));
        assert!(!half.contains(&v(&[0, -1])));
        let twisted = S::from_i64(2, &[&[2, 0], &[-2, 0], &[1, 1], &[0, 1]]).unwrap();
        assert!(!twisted.contains(&v(&[1, 0])));
        assert!(twisted.contains(&v(&[-1, 1])));
    }

    #[test]
    fn reduction_agrees_with_search() {
        let semigroups = [
            S::from_i64(1, &[&[2], &[3]]).unwrap(),
            S::from_i64(1, &[&[3], &[5], &[7]]).unwrap(),
            umbrella(),
            S::from_i64(2, &[&[1, 0], &[1, 1], &[1, 2]]).unwrap(),
            S::from_i64(2, &[&[2, 0], &[-2, 0], &[1, 1], &[0, 1]]).unwrap(),
            S::from_i64(2, &[&[3, 0], &[1, 1], &[0, 2], &[2, 3]]).unwrap(),
        ];
        for s in &semigroups {
            let (bound, _) = s.reduction_bound();
            for x in -6..=6 {
                for y in -6..=6 {
                    let p: Vec<BigInt> = v(&[x, y])[..s.rank()].to_vec();
                    if !s.cone().contains(&p) || dot(s.grading(), &p) == BigInt::from(0) {
                        continue;
                    }
                    assert_eq!(s.contains_by_search(&p), s.contains_by_reduction(&p, &bound), "{s} at {p:?}");
                }
            }
        }
    }

    #[test]
    fn membership_far_out() {
        let huge: BigInt = "100000000000000000000".parse().unwrap();
        let cusp = S::from_i64(1, &[&[2], &[3]]).unwrap();
        assert!(cusp.contains(std::slice::from_ref(&huge)));
        assert!(!umbrella().contains(&[BigInt::from(0), huge.clone() + 1]));
        assert!(umbrella().contains(&[BigInt::from(1), huge.clone() + 1]));
    }

    #[test]
    fn saturation_examples() {
        let cusp = S::from_i64(1, &[&[2], &[3]]).unwrap();
        assert_eq!(cusp.saturation().generators(), &[v(&[1])]);
        assert!(!cusp.is_saturated());
        let a1 = S::from_i64(2, &[&[1, 0], &[1, 2]]).unwrap_err();
        assert!(matches!(a1, Error::GroupNotFull { .. }));
        let a1 = S::from_i64(2, &[&[1, 0], &[1, 1], &[1, 2]]).unwrap();
        assert!(a1.is_saturated());
        assert_eq!(a1.saturation().generators(), &[v(&[1, 0]), v(&[1, 1]), v(&[1, 2])]);
        let full = S::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]).unwrap();
        assert!(full.is_saturated());
        let sat = umbrella().saturation();
        assert_eq!(sat.generators(), &[v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn hilbert_basis_of_a_wide_cone() {
        let c = Cone::<BigInt>::from_i64(2, &[&[1, 0], &[1, 3]]);
        let hb = hilbert_basis(&c).unwrap();
        assert_eq!(hb, vec![v(&[1, 0]), v(&[1, 1]), v(&[1, 2]), v(&[1, 3])]);
        let c = Cone::<BigInt>::from_i64(2, &[&[2, -1], &[-1, 2]]);
        let hb = hilbert_basis(&c).unwrap();
        assert_eq!(hb, vec![v(&[-1, 2]), v(&[0, 1]), v(&[1, 0]), v(&[2, -1])]);
    }

    #[test]
    fn face_semigroups() {
        let u = umbrella();
        let f = u.face_semigroup(&ray(&[1, 0])).unwrap();
        assert_eq!(f.ambient_generators, vec![v(&[0, 2])]);
        assert_eq!(f.orbit_lattice, Lattice::span(2, &[v(&[0, 2])]));
        assert_eq!(f.index, BigInt::from(2));
        assert_eq!(f.semigroup.generators(), &[v(&[1])]);
        let f = u.face_semigroup(&ray(&[0, 1])).unwrap();
        assert_eq!(f.ambient_generators, vec![v(&[1, 0])]);
        assert_eq!(f.index, BigInt::one());
        let f = u.face_semigroup(&Cone::zero(2)).unwrap();
        assert!(f.semigroup.same_members(&u));
        assert_eq!(f.index, BigInt::one());
        assert!(u.face_semigroup(&ray(&[1, 1])).is_err());
    }

    #[test]
    fn localizations() {
        let u = umbrella();
        let l = u.localize(&ray(&[0, 1])).unwrap();
        let expected = S::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert!(l.same_members(&expected));
        let l = u.localize(&ray(&[1, 0])).unwrap();
        let expected = S::from_i64(2, &[&[1, 0], &[1, 1], &[0, 2], &[0, -2]]).unwrap();
        assert!(l.same_members(&expected));
        assert!(!l.contains(&v(&[0, 1])));
        let q = Cone::from_i64(2, &[&[1, 0], &[0, 1]]);
        assert!(u.localize(&q).unwrap().same_members(&u));
        let torus = u.localize(&Cone::zero(2)).unwrap();
        assert!(torus.same_members(&S::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]).unwrap()));
    }

    #[test]
    fn minimal_generator_examples() {
        let s = S::from_i64(1, &[&[2], &[3], &[5]]).unwrap();
        assert_eq!(s.minimal_generators().unwrap(), vec![v(&[2]), v(&[3])]);
        let s = S::from_i64(2, &[&[1, 0], &[1, 1], &[1, 2], &[2, 2]]).unwrap();
        assert_eq!(s.minimal_generators().unwrap(), vec![v(&[1, 0]), v(&[1, 1]), v(&[1, 2])]);
        let s = S::from_i64(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(s.minimal_generators().unwrap(), vec![v(&[0, 1]), v(&[1, 0])]);
        let s = S::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert_eq!(s.minimal_generators(), Err(Error::NotPointed));
    }

    #[test]
    fn lineality_splits() {
        let u = umbrella();
        let s = u.split_lineality();
        assert_eq!(s.lattice_part.rank(), 0);
        assert!(s.pointed_part.same_members(&u));
        assert!(s.is_product());
        let h = S::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        let s = h.split_lineality();
        assert_eq!(s.lattice_part, Lattice::span(2, &[v(&[1, 0])]));
        assert_eq!(s.pointed_part.generators(), &[v(&[1])]);
        assert!(s.is_product());
        let full = S::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]).unwrap();
        let s = full.split_lineality();
        assert_eq!(s.lattice_part, Lattice::full(2));
        assert_eq!(s.pointed_part.rank(), 0);
        let twisted = S::from_i64(2, &[&[2, 0], &[-2, 0], &[1, 1], &[0, 1]]).unwrap();
        let s = twisted.split_lineality();
        assert_eq!(s.index, BigInt::from(2));
        assert!(!s.is_product());
    }

    #[test]
    fn freeness() {
        assert!(S::from_i64(2, &[&[1, 0], &[0, 1]]).unwrap().is_free());
        assert!(!umbrella().is_free());
        assert!(S::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap().is_free());
        assert!(!S::from_i64(2, &[&[2, 0], &[-2, 0], &[1, 1], &[0, 1]]).unwrap().is_free());
        assert!(S::new(0, vec![]).unwrap().is_free());
    }

    #[test]
    fn parallelepiped_counts() {
        let pts = parallelepiped_points(&[v(&[1, 0]), v(&[1, 3])]);
        assert_eq!(pts, vec![v(&[0, 0]), v(&[1, 1]), v(&[1, 2])]);
    }
}
