//! Invariant Cartier divisors given by support functions.
//!
//! A divisor is stored as one `m_σ ∈ M` per maximal cone; the support
//! function is `h(ν) = ⟨ν, m_σ⟩` for `ν ∈ σ`.

use crate::cones::Cone;
use crate::error::{Error, Result};
use crate::lattice::{self, Lattice};
use crate::scalar::{self, dot, fmt_vec, Int, Rational};
use crate::semigroups::AffineSemigroup;
use crate::variety::ToricTriple;

#[derive(Debug, Clone)]
pub struct CartierData<Z> {
    triple: ToricTriple<Z>,
    points: Vec<Vec<Z>>,
}

/// `{m : ⟨ν_ρ, m⟩ ≥ h(ν_ρ)}` over the rays of the fan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorPolytope<Z: Int> {
    /// Pairs `(ν_ρ, h(ν_ρ))`.
    pub inequalities: Vec<(Vec<Z>, Z)>,
    /// Sorted vertices, present when the fan is complete.
    pub vertices: Option<Vec<Vec<Rational<Z>>>>,
}

impl<Z: Int> DivisorPolytope<Z> {
    pub fn contains(&self, m: &[Z]) -> bool {
        self.inequalities.iter().all(|(nu, h)| dot(nu, m) >= *h)
    }

    pub fn is_empty(&self) -> bool {
        matches!(&self.vertices, Some(v) if v.is_empty())
    }
}

/// Validates `m_σ − m_σ' ∈ M(τ, Γ_τ)` for every pair of maximal cones meeting in `τ`.
pub fn make_cartier<Z: Int>(triple: &ToricTriple<Z>, points: Vec<Vec<Z>>) -> Result<CartierData<Z>> {
    let maximal = triple.maximal_cones();
    if points.len() != maximal.len() {
        return Err(Error::DimensionMismatch { expected: maximal.len(), found: points.len() });
    }
    for p in &points {
        if p.len() != triple.rank() {
            return Err(Error::DimensionMismatch { expected: triple.rank(), found: p.len() });
        }
    }
    for i in 0..maximal.len() {
        for j in i + 1..maximal.len() {
            let tau = maximal[i].intersect(&maximal[j]);
            let face = triple.local_semigroup(&tau)?.face_semigroup(&tau)?;
            let difference = scalar::sub(&points[j], &points[i]);
            if !face.orbit_lattice.contains(&difference) {
                return Err(Error::NotCartier {
                    face: tau.to_string(),
                    difference: fmt_vec(&difference),
                    orbit_lattice: face.orbit_lattice.to_string(),
                    perp_lattice: face.perp_lattice.to_string(),
                    cartier_on_normalization: face.perp_lattice.contains(&difference),
                });
            }
        }
    }
    Ok(CartierData { triple: triple.clone(), points })
}

impl<Z: Int> CartierData<Z> {
    pub fn triple(&self) -> &ToricTriple<Z> {
        &self.triple
    }

    /// `m_σ` in the order of the maximal cones.
    pub fn points(&self) -> &[Vec<Z>] {
        &self.points
    }

    /// The data `l·m_σ`.
    pub fn scaled(&self, l: &Z) -> CartierData<Z> {
        let points = self.points.iter().map(|p| scalar::scale(l, p)).collect();
        CartierData { triple: self.triple.clone(), points }
    }

    /// `h(ν)`, defined on the support of the fan.
    pub fn h(&self, nu: &[Z]) -> Result<Z> {
        self.triple
            .maximal_cones()
            .iter()
            .position(|s| s.contains(nu))
            .map(|i| dot(nu, &self.points[i]))
            .ok_or_else(|| Error::NotInCone(fmt_vec(nu)))
    }

    fn require_complete(&self) -> Result<()> {
        if self.triple.fan().is_complete() {
            Ok(())
        } else {
            Err(Error::NonCompleteFan)
        }
    }

    pub fn polytope(&self) -> DivisorPolytope<Z> {
        let inequalities: Vec<(Vec<Z>, Z)> = self
            .triple
            .fan()
            .rays()
            .into_iter()
            .map(|r| {
                let h = self.h(&r).expect("rays lie in the fan");
                (r, h)
            })
            .collect();
        let vertices = self.triple.fan().is_complete().then(|| polytope_vertices(self.triple.rank(), &inequalities));
        DivisorPolytope { inequalities, vertices }
    }

    /// `P_D^Γ = ⋂ (m_σ + Γ_σ)`, finite for complete fans.
    pub fn global_sections(&self) -> Result<Vec<Vec<Z>>> {
        self.require_complete()?;
        let polytope = self.polytope();
        let vertices = polytope.vertices.as_ref().expect("complete fan");
        if vertices.is_empty() {
            return Ok(Vec::new());
        }
        let d = self.triple.rank();
        let lo: Vec<Z> = (0..d).map(|k| vertices.iter().map(|v| v[k].floor().to_integer()).min().unwrap()).collect();
        let hi: Vec<Z> = (0..d).map(|k| vertices.iter().map(|v| v[k].ceil().to_integer()).max().unwrap()).collect();
        let mut out = Vec::new();
        let mut m = lo.clone();
        loop {
            if polytope.contains(&m)
                && self.triple.charts().iter().zip(&self.points).all(|(g, p)| g.contains(&scalar::sub(&m, p)))
            {
                out.push(m.clone());
            }
            let mut k = 0;
            loop {
                if k == d {
                    out.sort();
                    return Ok(out);
                }
                if m[k] < hi[k] {
                    m[k] = m[k].clone() + Z::one();
                    break;
                }
                m[k] = lo[k].clone();
                k += 1;
            }
        }
    }

    /// `⟨ν, m_σ'⟩ ≥ ⟨ν, m_σ⟩` for every ray `ν` of every `σ` and every other `σ'`.
    fn upper_convex(&self) -> bool {
        let maximal = self.triple.maximal_cones();
        (0..maximal.len()).all(|i| {
            maximal[i].rays().iter().all(|nu| {
                let own = dot(nu, &self.points[i]);
                self.points.iter().all(|p| dot(nu, p) >= own)
            })
        })
    }

    /// Upper convex and `⟨ν, m_σ⟩ = h(ν)` exactly on `σ`.
    fn strictly_upper_convex(&self) -> bool {
        let maximal = self.triple.maximal_cones();
        self.upper_convex()
            && (0..maximal.len()).all(|i| {
                (0..maximal.len()).filter(|j| *j != i).all(|j| {
                    let u = scalar::sub(&self.points[i], &self.points[j]);
                    maximal[i].contains_cone(&maximal[j].face_cut_by(&u))
                })
            })
    }

    pub fn is_basepoint_free(&self) -> Result<bool> {
        self.require_complete()?;
        if !self.upper_convex() {
            return Ok(false);
        }
        let vertices = self.polytope().vertices.expect("complete fan");
        let points: Vec<Vec<Rational<Z>>> = self.points.iter().map(|p| scalar::to_rational(p)).collect();
        if let Some(v) = vertices.iter().find(|v| !points.contains(v)) {
            return Err(Error::Internal(format!("vertex {v:?} of an upper convex divisor is not among the m_σ")));
        }
        Ok(true)
    }

    pub fn is_ample(&self) -> Result<bool> {
        self.require_complete()?;
        Ok(self.strictly_upper_convex())
    }

    /// Ample, and `{m − m_σ : m ∈ P_D^Γ}` generates `Γ_σ` for every maximal `σ`.
    pub fn is_very_ample(&self) -> Result<bool> {
        if !self.is_ample()? {
            return Ok(false);
        }
        let sections = self.global_sections()?;
        Ok(self.triple.charts().iter().zip(&self.points).all(|(g, p)| {
            let shifted = sections.iter().map(|m| scalar::sub(m, p)).collect();
            AffineSemigroup::new(g.rank(), shifted).is_ok_and(|s| s.same_members(g))
        }))
    }

    /// Whether a single `m` has `m − m_σ` a unit of `Γ_σ` for every maximal `σ`.
    pub fn is_principal(&self) -> bool {
        let d = self.triple.rank();
        let mut point = self.points[0].clone();
        let mut lattice = self.triple.charts()[0].units().clone();
        for (g, p) in self.triple.charts().iter().zip(&self.points).skip(1) {
            let other = g.units();
            let mut gens = lattice.basis().to_vec();
            gens.extend(other.basis().iter().cloned());
            let Some(x) = lattice::solve_left(&gens, &scalar::sub(p, &point)) else {
                return false;
            };
            let shift = lattice
                .basis()
                .iter()
                .zip(&x)
                .fold(scalar::zeros(d), |acc, (b, c)| scalar::add(&acc, &scalar::scale(c, b)));
            point = scalar::add(&point, &shift);
            lattice = lattice.intersect(other);
        }
        true
    }

    /// Whether `self − other` is principal (same triple assumed).
    pub fn is_equivalent(&self, other: &CartierData<Z>) -> bool {
        let points = self.points.iter().zip(&other.points).map(|(a, b)| scalar::sub(a, b)).collect();
        CartierData { triple: self.triple.clone(), points }.is_principal()
    }
}

/// Vertices of `{m : ⟨ν, m⟩ ≥ c}` (assumed bounded) via the homogenized cone.
fn polytope_vertices<Z: Int>(d: usize, inequalities: &[(Vec<Z>, Z)]) -> Vec<Vec<Rational<Z>>> {
    let mut ineqs: Vec<Vec<Z>> = inequalities
        .iter()
        .map(|(nu, c)| {
            let mut row = nu.clone();
            row.push(-c.clone());
            row
        })
        .collect();
    ineqs.push(scalar::unit(d + 1, d));
    let cone = Cone::from_inequalities(d + 1, &[], &ineqs);
    let mut out: Vec<Vec<Rational<Z>>> = cone
        .rays()
        .iter()
        .filter(|r| !r[d].is_zero())
        .map(|r| r[..d].iter().map(|x| Rational::new(x.clone(), r[d].clone())).collect())
        .collect();
    out.sort();
    out
}

pub fn divisor_polytope<Z: Int>(data: &CartierData<Z>) -> DivisorPolytope<Z> {
    data.polytope()
}

pub fn global_sections<Z: Int>(data: &CartierData<Z>) -> Result<Vec<Vec<Z>>> {
    data.global_sections()
}

/// The projective triple of a finite point set: normal fan of `conv(A)` with
/// chart `⟨u − v : u ∈ A⟩` at each vertex `v`. When the differences of `A`
/// span a proper sublattice, the points are rewritten in a basis of it
/// (after translating the first point to the origin).
pub fn gkz_triple<Z: Int>(points: &[Vec<Z>]) -> Result<(ToricTriple<Z>, CartierData<Z>)> {
    let Some(first) = points.first() else {
        return Err(Error::DegeneratePolytope("no points".into()));
    };
    let d = first.len();
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: p.len() });
    }
    let differences: Vec<Vec<Z>> = points.iter().map(|p| scalar::sub(p, first)).collect();
    let span = Lattice::span(d, &differences);
    if span.rank() == 0 {
        return Err(Error::DegeneratePolytope("fewer than two distinct points".into()));
    }
    let mut pts: Vec<Vec<Z>> = if span.is_full() {
        points.to_vec()
    } else {
        differences.iter().map(|v| span.coordinates(v).expect("in span")).collect()
    };
    pts.sort();
    pts.dedup();
    let rank = pts[0].len();
    let mut labels = Vec::new();
    let mut cones = Vec::new();
    let mut gens = Vec::new();
    let mut vertices = Vec::new();
    for v in &pts {
        let shifted: Vec<Vec<Z>> = pts.iter().map(|u| scalar::sub(u, v)).collect();
        let cone = Cone::from_generators(rank, &shifted);
        if !cone.is_pointed() {
            continue;
        }
        labels.push(format!("v{}", vertices.len()));
        cones.push(cone.dual());
        gens.push(shifted);
        vertices.push(v.clone());
    }
    let triple = ToricTriple::from_cones(rank, labels, cones, gens)?;
    let data = make_cartier(&triple, vertices)?;
    Ok((triple, data))
}
