//! Toric varieties as triples `(N, Σ, Γ)`: a fan together with a semigroup
//! for each maximal cone, glued along faces by localization.

use std::fmt;

use crate::cones::{Cone, Fan};
use crate::error::{Error, Result, Violation};
use crate::lattice::{Lattice, LinearMap, Matrix};
use crate::scalar::{self, Int};
use crate::semigroups::AffineSemigroup;

/// Input for one chart: a maximal cone given by generators and its semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartSpec<Z> {
    pub label: String,
    pub rays: Vec<Vec<Z>>,
    pub generators: Vec<Vec<Z>>,
}

impl<Z: Int> ChartSpec<Z> {
    pub fn new(label: impl Into<String>, rays: Vec<Vec<Z>>, generators: Vec<Vec<Z>>) -> Self {
        ChartSpec { label: label.into(), rays, generators }
    }

    pub fn from_i64(label: &str, rays: &[&[i64]], generators: &[&[i64]]) -> Self {
        ChartSpec {
            label: label.to_string(),
            rays: rays.iter().map(|r| scalar::vector(r)).collect(),
            generators: generators.iter().map(|g| scalar::vector(g)).collect(),
        }
    }
}

/// A validated triple. Chart semigroups are stored for maximal cones; the
/// semigroup `Γ_τ` of every other cone is derived by localization.
#[derive(Debug, Clone)]
pub struct ToricTriple<Z> {
    rank: usize,
    fan: Fan<Z>,
    labels: Vec<String>,
    charts: Vec<AffineSemigroup<Z>>,
    local: Vec<AffineSemigroup<Z>>,
}

/// Orbit data attached to a cone `τ` of the fan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDescriptor<Z> {
    pub cone: Cone<Z>,
    /// `M(τ,Γ_τ)`.
    pub orbit_lattice: Lattice<Z>,
    /// `M(τ) = M ∩ τ⊥`.
    pub perp_lattice: Lattice<Z>,
    /// `i(τ,Γ_τ) = [M(τ) : M(τ,Γ_τ)]`.
    pub index: Z,
    pub dim: usize,
}

/// The kernel lattice of `Z^r → M` and the binomials of its basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricIdealLattice<Z> {
    pub lattice: Lattice<Z>,
    /// `(m₊, m₋)` for each basis vector `m₊ − m₋` of the kernel.
    pub binomials: Vec<(Vec<Z>, Vec<Z>)>,
    /// Always false: the binomials of a lattice basis need not generate the
    /// toric ideal; they only generate it up to saturation.
    pub basis_binomials_generate_ideal: bool,
}

/// A linear map `φ_*: N' → N` with, for every maximal source cone, a target
/// cone whose semigroup pulls back into the source chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanMap<Z> {
    pub map: LinearMap<Z>,
    /// `(source maximal cone index, target cone)`.
    pub assignment: Vec<(usize, Cone<Z>)>,
}

/// Outcome of trying to extend `φ*: M(τ,Γ_τ) → M'` to `M(τ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift<Z> {
    pub lifts: bool,
    /// Basis of `M(τ)` used for the extension.
    pub perp_basis: Vec<Vec<Z>>,
    /// Images of `perp_basis` when the extension exists.
    pub extension: Option<Vec<Vec<Z>>>,
}

fn describe<Z: Int>(cone: &Cone<Z>) -> String {
    cone.to_string()
}

/// Builds and validates a triple from chart specifications.
pub fn build_triple<Z: Int>(rank: usize, specs: Vec<ChartSpec<Z>>) -> Result<ToricTriple<Z>> {
    ToricTriple::build(rank, specs)
}

impl<Z: Int> ToricTriple<Z> {
    pub fn build(rank: usize, specs: Vec<ChartSpec<Z>>) -> Result<Self> {
        if specs.is_empty() {
            return Err(Error::Empty("a triple needs at least one maximal cone"));
        }
        for s in &specs {
            for r in &s.rays {
                if r.len() != rank {
                    return Err(Error::DimensionMismatch { expected: rank, found: r.len() });
                }
            }
        }
        let cones: Vec<Cone<Z>> = specs.iter().map(|s| Cone::from_generators(rank, &s.rays)).collect();
        let labels: Vec<String> = specs.iter().map(|s| s.label.clone()).collect();
        let gens: Vec<Vec<Vec<Z>>> = specs.into_iter().map(|s| s.generators).collect();
        Self::from_cones(rank, labels, cones, gens)
    }

    /// The affine triple of a single semigroup, on the cone dual to it.
    pub fn affine(label: &str, semigroup: &AffineSemigroup<Z>) -> Result<Self> {
        Self::from_cones(
            semigroup.rank(),
            vec![label.to_string()],
            vec![semigroup.dual_cone().clone()],
            vec![semigroup.generators().to_vec()],
        )
    }

    /// Validates a triple given by maximal cones and chart generators.
    pub fn from_cones(
        rank: usize,
        labels: Vec<String>,
        cones: Vec<Cone<Z>>,
        generators: Vec<Vec<Vec<Z>>>,
    ) -> Result<Self> {
        let mut violations = Vec::new();
        let mut charts = Vec::new();
        for ((label, cone), gens) in labels.iter().zip(&cones).zip(generators) {
            match AffineSemigroup::new(rank, gens) {
                Ok(s) => {
                    let expected = cone.dual();
                    if *s.cone() != expected {
                        violations.push(Violation::SemigroupConeMismatch {
                            chart: label.clone(),
                            expected: describe(&expected),
                            found: describe(s.cone()),
                        });
                    }
                    charts.push(s);
                }
                Err(Error::GroupNotFull { .. }) => violations.push(Violation::GroupNotFull { chart: label.clone() }),
                Err(e) => return Err(e),
            }
        }
        let fan = match Fan::new(rank, cones) {
            Ok(f) => Some(f),
            Err(v) => {
                violations.extend(v);
                None
            }
        };
        if !violations.is_empty() {
            violations.sort();
            violations.dedup();
            return Err(Error::InvalidTriple(violations));
        }
        Self::from_charts(rank, fan.expect("validated"), labels, charts)
    }

    /// Checks the gluing conditions and derives `Γ_τ` for all cones.
    fn from_charts(rank: usize, fan: Fan<Z>, labels: Vec<String>, charts: Vec<AffineSemigroup<Z>>) -> Result<Self> {
        let mut violations = Vec::new();
        let mut local = Vec::with_capacity(fan.cones().len());
        for tau in fan.cones() {
            let owners = fan.maximal_containing(tau);
            let first = charts[owners[0]].localize(tau)?;
            for &o in &owners[1..] {
                let other = charts[o].localize(tau)?;
                if !first.same_members(&other) {
                    violations.push(Violation::Gluing {
                        face: describe(tau),
                        first: labels[owners[0]].clone(),
                        second: labels[o].clone(),
                    });
                }
            }
            local.push(first);
        }
        if violations.is_empty() {
            let maximal = fan.maximal_cones();
            for i in 0..maximal.len() {
                for j in i + 1..maximal.len() {
                    let tau = maximal[i].intersect(&maximal[j]);
                    let k = fan.position(&tau).expect("fan is closed under intersection");
                    let sum = charts[i].sum(&charts[j])?;
                    if !sum.same_members(&local[k]) {
                        violations
                            .push(Violation::Separatedness { first: labels[i].clone(), second: labels[j].clone() });
                    }
                }
            }
        }
        if !violations.is_empty() {
            violations.sort();
            violations.dedup();
            return Err(Error::InvalidTriple(violations));
        }
        Ok(ToricTriple { rank, fan, labels, charts, local })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn fan(&self) -> &Fan<Z> {
        &self.fan
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn maximal_cones(&self) -> &[Cone<Z>] {
        self.fan.maximal_cones()
    }

    pub fn charts(&self) -> &[AffineSemigroup<Z>] {
        &self.charts
    }

    pub fn chart_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `Γ_τ` for a cone of the fan.
    pub fn local_semigroup(&self, tau: &Cone<Z>) -> Result<&AffineSemigroup<Z>> {
        self.fan.position(tau).map(|i| &self.local[i]).ok_or_else(|| Error::UnknownCone(tau.to_string()))
    }

    /// Chart specifications reproducing this triple.
    pub fn specs(&self) -> Vec<ChartSpec<Z>> {
        self.labels
            .iter()
            .zip(self.maximal_cones())
            .zip(&self.charts)
            .map(|((l, c), s)| ChartSpec::new(l.clone(), c.rays().to_vec(), s.generators().to_vec()))
            .collect()
    }

    /// Same maximal cones with member-equal charts, ignoring labels and order.
    pub fn same_as(&self, other: &ToricTriple<Z>) -> bool {
        if self.rank != other.rank || self.maximal_cones().len() != other.maximal_cones().len() {
            return false;
        }
        self.maximal_cones().iter().zip(&self.charts).all(|(c, s)| {
            other.maximal_cones().iter().position(|o| o == c).is_some_and(|j| other.charts[j].same_members(s))
        })
    }

    pub fn orbits(&self) -> Vec<OrbitDescriptor<Z>> {
        self.fan
            .cones()
            .iter()
            .zip(&self.local)
            .map(|(tau, g)| {
                let face = g.face_semigroup(tau).expect("a cone is a face of its own dual's dual");
                OrbitDescriptor {
                    cone: tau.clone(),
                    orbit_lattice: face.orbit_lattice,
                    perp_lattice: face.perp_lattice,
                    index: face.index,
                    dim: self.rank - tau.dim(),
                }
            })
            .collect()
    }

    pub fn orbit(&self, tau: &Cone<Z>) -> Result<OrbitDescriptor<Z>> {
        let i = self.fan.position(tau).ok_or_else(|| Error::UnknownCone(tau.to_string()))?;
        Ok(self.orbits().swap_remove(i))
    }

    /// The closure of the orbit of `τ` as a triple over `N(τ,Γ_τ)`, with
    /// charts `Γ_σ ∩ τ⊥` written in the HNF basis of `M(τ,Γ_τ)`.
    pub fn orbit_closure(&self, tau: &Cone<Z>) -> Result<ToricTriple<Z>> {
        let orbit = self.orbit(tau)?;
        let basis = orbit.orbit_lattice.clone();
        let r = basis.rank();
        let mut labels = Vec::new();
        let mut cones = Vec::new();
        let mut gens = Vec::new();
        for (i, sigma) in self.maximal_cones().iter().enumerate() {
            if !tau.is_face_of(sigma) {
                continue;
            }
            let face = self.charts[i].face_semigroup(tau)?;
            let coords: Vec<Vec<Z>> = face
                .ambient_generators
                .iter()
                .map(|g| basis.coordinates(g).expect("face generators span the orbit lattice"))
                .collect();
            let chart = AffineSemigroup::new(r, coords.clone())?;
            labels.push(self.labels[i].clone());
            cones.push(chart.dual_cone().clone());
            gens.push(coords);
        }
        Self::from_cones(r, labels, cones, gens)
    }

    /// Same fan with saturated charts.
    pub fn normalization(&self) -> ToricTriple<Z> {
        let charts: Vec<Vec<Vec<Z>>> = self.charts.iter().map(|s| s.saturation().generators().to_vec()).collect();
        Self::from_cones(self.rank, self.labels.clone(), self.maximal_cones().to_vec(), charts)
            .expect("the normalization of a valid triple is valid")
    }

    pub fn is_normal(&self) -> bool {
        self.charts.iter().all(|c| c.is_saturated())
    }

    /// Cones whose orbits lie in the smooth locus: `τ` regular, index 1 and
    /// `Γ_τ` free.
    pub fn smooth_locus(&self) -> Vec<Cone<Z>> {
        self.orbits()
            .into_iter()
            .zip(&self.local)
            .filter(|(o, g)| o.cone.is_regular() && o.index.is_one() && g.is_free())
            .map(|(o, _)| o.cone)
            .collect()
    }

    pub fn is_smooth(&self) -> bool {
        self.smooth_locus().len() == self.fan.cones().len()
    }

    /// Whether `lim_{t→0} λ_v(t)` exists, i.e. `v ∈ |Σ|`.
    pub fn limit_exists(&self, v: &[Z]) -> bool {
        self.fan.support_contains(v)
    }

    /// Checks the fan map condition for `φ_*: N' → N` (a `rank × source.rank`
    /// matrix). For each maximal source cone, the target cone chosen is the
    /// first compatible one in the canonical cone order, so the smallest.
    pub fn check_fan_map(map: &LinearMap<Z>, source: &ToricTriple<Z>, target: &ToricTriple<Z>) -> Result<FanMap<Z>> {
        if map.source() != source.rank || map.target() != target.rank {
            return Err(Error::DimensionMismatch { expected: target.rank, found: map.target() });
        }
        let pullback = map.transpose();
        let mut assignment = Vec::new();
        for (i, chart) in source.charts.iter().enumerate() {
            let hit = target
                .fan
                .cones()
                .iter()
                .zip(&target.local)
                .find(|(_, g)| g.generators().iter().all(|m| chart.contains(&pullback.apply(m))));
            match hit {
                Some((c, _)) => assignment.push((i, c.clone())),
                None => return Err(Error::NoCompatibleCone(source.labels[i].clone())),
            }
        }
        Ok(FanMap { map: map.clone(), assignment })
    }

    /// Decides whether `φ*` on `M(τ,Γ_τ)` extends to `M(τ)`. `images[i]` is
    /// the image of the i-th HNF basis vector of `M(τ,Γ_τ)`.
    pub fn lifts_to_normalization(&self, tau: &Cone<Z>, images: &[Vec<Z>]) -> Result<Lift<Z>> {
        let orbit = self.orbit(tau)?;
        let k = orbit.orbit_lattice.rank();
        if images.len() != k {
            return Err(Error::DimensionMismatch { expected: k, found: images.len() });
        }
        let perp_basis = orbit.perp_lattice.basis().to_vec();
        if k == 0 {
            return Ok(Lift { lifts: true, perp_basis, extension: Some(Vec::new()) });
        }
        // Rows of T express the orbit lattice basis in the basis of M(τ).
        let t: Vec<Vec<Z>> = orbit
            .orbit_lattice
            .basis()
            .iter()
            .map(|b| orbit.perp_lattice.coordinates(b).expect("M(τ,Γ_τ) ⊆ M(τ)"))
            .collect();
        let det = Matrix::new(k, t.clone()).determinant()?;
        let target_rank = images[0].len();
        let mut psi = vec![scalar::zeros::<Z>(target_rank); k];
        for col in 0..target_rank {
            for j in 0..k {
                let mut tj = t.clone();
                for (row, img) in tj.iter_mut().zip(images) {
                    row[j] = img[col].clone();
                }
                let num = Matrix::new(k, tj).determinant()?;
                if !(num.clone() % det.clone()).is_zero() {
                    return Ok(Lift { lifts: false, perp_basis, extension: None });
                }
                psi[j][col] = num / det.clone();
            }
        }
        Ok(Lift { lifts: true, perp_basis, extension: Some(psi) })
    }
}

impl<Z: Int> FanMap<Z> {
    /// `second ∘ first`, revalidated against the outer triples.
    pub fn compose(
        first: &FanMap<Z>,
        second: &FanMap<Z>,
        source: &ToricTriple<Z>,
        target: &ToricTriple<Z>,
    ) -> Result<FanMap<Z>> {
        let map = second.map.compose(&first.map)?;
        ToricTriple::check_fan_map(&map, source, target)
    }
}

/// Kernel of `Z^r → M, e_i ↦ γ_i` with its basis binomials.
pub fn toric_ideal_lattice<Z: Int>(semigroup: &AffineSemigroup<Z>) -> ToricIdealLattice<Z> {
    let map = LinearMap::from_images(semigroup.rank(), semigroup.generators());
    let lattice = map.kernel();
    let binomials = lattice
        .basis()
        .iter()
        .map(|l| {
            let plus = l.iter().map(|x| if x.is_positive() { x.clone() } else { Z::zero() }).collect();
            let minus = l.iter().map(|x| if x.is_negative() { -x.clone() } else { Z::zero() }).collect();
            (plus, minus)
        })
        .collect();
    ToricIdealLattice { lattice, binomials, basis_binomials_generate_ideal: false }
}

impl<Z: Int> fmt::Display for ToricTriple<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank {}", self.rank)?;
        for ((l, c), s) in self.labels.iter().zip(self.maximal_cones()).zip(&self.charts) {
            writeln!(f, "  {l}: cone {c}, semigroup {s}")?;
        }
        Ok(())
    }
}

impl<Z: Int> fmt::Display for OrbitDescriptor<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "orbit of {} (dim {}, index {})", self.cone, self.dim, self.index)
    }
}
