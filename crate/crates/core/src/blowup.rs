//! Blowing up monomial ideals and invariant sheaves of monomial ideals.
//!
//! For `I = (t^{m_1}, …, t^{m_k})` on the chart `Γ` with cone `σ`, the
//! blowup has one chart per exponent whose cone of linearity
//! `C_i = σ ∩ {ν : ⟨ν, m_j − m_i⟩ ≥ 0 for all j}` has the dimension of `σ`,
//! with semigroup `Γ_i = Γ + ⟨m_j − m_i : all j⟩`. Differences to
//! non-vertex exponents are included; dropping them gives wrong charts.

use std::fmt;

use crate::cones::Cone;
use crate::error::{Error, Result};
use crate::scalar::{self, dot, fmt_vec, fmt_vecs, Int};
use crate::semigroups::AffineSemigroup;
use crate::variety::ToricTriple;

/// A monomial ideal of `k[Γ]` given by exponents in `Γ`.
#[derive(Debug, Clone)]
pub struct MonomialIdeal<Z> {
    semigroup: AffineSemigroup<Z>,
    exponents: Vec<Vec<Z>>,
}

impl<Z: Int> MonomialIdeal<Z> {
    /// Duplicates are dropped keeping the first occurrence.
    pub fn new(semigroup: AffineSemigroup<Z>, exponents: Vec<Vec<Z>>) -> Result<Self> {
        let mut unique: Vec<Vec<Z>> = Vec::new();
        for e in exponents {
            if e.len() != semigroup.rank() {
                return Err(Error::DimensionMismatch { expected: semigroup.rank(), found: e.len() });
            }
            if !semigroup.contains(&e) {
                return Err(Error::NotMember(fmt_vec(&e)));
            }
            if !unique.contains(&e) {
                unique.push(e);
            }
        }
        if unique.is_empty() {
            return Err(Error::Empty("a monomial ideal needs at least one exponent"));
        }
        Ok(MonomialIdeal { semigroup, exponents: unique })
    }

    pub fn from_i64(semigroup: AffineSemigroup<Z>, exponents: &[&[i64]]) -> Result<Self> {
        Self::new(semigroup, exponents.iter().map(|e| scalar::vector(e)).collect())
    }

    pub fn semigroup(&self) -> &AffineSemigroup<Z> {
        &self.semigroup
    }

    pub fn exponents(&self) -> &[Vec<Z>] {
        &self.exponents
    }

    /// Whether `t^m` lies in the ideal.
    pub fn contains(&self, m: &[Z]) -> bool {
        self.exponents.iter().any(|e| self.semigroup.contains(&scalar::sub(m, e)))
    }

    /// The ideal generated by the same monomials in a larger semigroup.
    pub fn extend_to(&self, larger: &AffineSemigroup<Z>) -> Result<MonomialIdeal<Z>> {
        MonomialIdeal::new(larger.clone(), self.exponents.clone())
    }

    /// Equality of the generated ideals (both must live in member-equal semigroups).
    pub fn same_ideal(&self, other: &MonomialIdeal<Z>) -> bool {
        self.exponents.iter().all(|e| other.contains(e)) && other.exponents.iter().all(|e| self.contains(e))
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().any(|m| self.exponents.iter().all(|e| self.semigroup.contains(&scalar::sub(e, m))))
    }

    /// `ord_I(ν) = min ⟨ν, m_i⟩`, defined on `σ`.
    pub fn order(&self, nu: &[Z]) -> Result<Z> {
        if !self.semigroup.dual_cone().contains(nu) {
            return Err(Error::NotInCone(fmt_vec(nu)));
        }
        Ok(self.exponents.iter().map(|m| dot(nu, m)).min().expect("nonempty ideal"))
    }

    /// The cone of `σ` on which `⟨·, m_i⟩` computes the order.
    pub fn linearity_cone(&self, i: usize) -> Cone<Z> {
        let sigma = self.semigroup.dual_cone();
        let mi = &self.exponents[i];
        let mut ineqs = sigma.facets().to_vec();
        ineqs.extend(self.exponents.iter().map(|m| scalar::sub(m, mi)).filter(|d| !scalar::is_zero(d)));
        Cone::from_inequalities(sigma.ambient_dim(), sigma.equations(), &ineqs)
    }

    /// `Γ + ⟨m_j − m_i : all j⟩`.
    pub fn chart_semigroup(&self, i: usize) -> Result<AffineSemigroup<Z>> {
        let mi = &self.exponents[i];
        let diffs: Vec<Vec<Z>> = self.exponents.iter().map(|m| scalar::sub(m, mi)).collect();
        self.semigroup.extend(&diffs)
    }

    /// Exponent indices whose linearity cones have the dimension of `σ`,
    /// keeping the first exponent among those with equal cones, paired with
    /// their cones.
    fn chart_exponents(&self) -> Vec<(usize, Cone<Z>)> {
        let dim = self.semigroup.dual_cone().dim();
        let mut out: Vec<(usize, Cone<Z>)> = Vec::new();
        for i in 0..self.exponents.len() {
            let c = self.linearity_cone(i);
            if c.dim() == dim && !out.iter().any(|(_, o)| *o == c) {
                out.push((i, c));
            }
        }
        out
    }
}

impl<Z: Int> fmt::Display for MonomialIdeal<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) in {}", fmt_vecs(&self.exponents), self.semigroup)
    }
}

/// Newton polyhedron `conv(m_i + σ̌)` of an ideal on a pointed chart.
#[derive(Debug, Clone)]
pub struct NewtonPolyhedron<Z> {
    ideal: MonomialIdeal<Z>,
    vertices: Vec<Vec<Z>>,
    linearity: Vec<(Cone<Z>, Vec<Z>)>,
}

impl<Z: Int> NewtonPolyhedron<Z> {
    /// Recession cone `σ̌`.
    pub fn recession_cone(&self) -> &Cone<Z> {
        self.ideal.semigroup.cone()
    }

    /// Vertices in the order of the exponent list.
    pub fn vertices(&self) -> &[Vec<Z>] {
        &self.vertices
    }

    /// Maximal cones of linearity of the order function with their functionals.
    pub fn linearity_cones(&self) -> &[(Cone<Z>, Vec<Z>)] {
        &self.linearity
    }

    pub fn ideal(&self) -> &MonomialIdeal<Z> {
        &self.ideal
    }

    pub fn order(&self, nu: &[Z]) -> Result<Z> {
        self.ideal.order(nu)
    }
}

pub fn newton_polyhedron<Z: Int>(ideal: &MonomialIdeal<Z>) -> Result<NewtonPolyhedron<Z>> {
    if !ideal.semigroup.is_pointed() {
        return Err(Error::NotPointed);
    }
    let charts = ideal.chart_exponents();
    let vertices = charts.iter().map(|(i, _)| ideal.exponents[*i].clone()).collect();
    let linearity = charts.into_iter().map(|(i, c)| (c, ideal.exponents[i].clone())).collect();
    Ok(NewtonPolyhedron { ideal: ideal.clone(), vertices, linearity })
}

pub fn order_function<Z: Int>(np: &NewtonPolyhedron<Z>, nu: &[Z]) -> Result<Z> {
    np.order(nu)
}

type LabelledChart<Z> = (String, Cone<Z>, AffineSemigroup<Z>);

/// Charts of the blowup of one ideal, sorted by cone, labelled `parent.k`.
fn blowup_charts<Z: Int>(parent: &str, ideal: &MonomialIdeal<Z>) -> Result<Vec<LabelledChart<Z>>> {
    let mut charts = Vec::new();
    for (i, cone) in ideal.chart_exponents() {
        let mut chart = ideal.chart_semigroup(i)?;
        if chart.is_pointed() {
            chart = AffineSemigroup::new(chart.rank(), chart.minimal_generators()?)?;
        }
        charts.push((cone, chart));
    }
    charts.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(charts.into_iter().enumerate().map(|(k, (c, s))| (format!("{parent}.{k}"), c, s)).collect())
}

/// Blowup of a monomial ideal on an affine chart.
pub fn blowup_affine<Z: Int>(ideal: &MonomialIdeal<Z>) -> Result<ToricTriple<Z>> {
    let v = ToricTriple::affine("c", &ideal.semigroup)?;
    blowup_sheaf(&v, std::slice::from_ref(ideal))
}

/// Checks that the ideals agree on every intersection of two maximal cones.
pub fn check_sheaf<Z: Int>(v: &ToricTriple<Z>, ideals: &[MonomialIdeal<Z>]) -> Result<()> {
    if ideals.len() != v.charts().len() {
        return Err(Error::DimensionMismatch { expected: v.charts().len(), found: ideals.len() });
    }
    for (label, (chart, ideal)) in v.labels().iter().zip(v.charts().iter().zip(ideals)) {
        if !chart.same_members(&ideal.semigroup) {
            return Err(Error::SheafIncompatible(format!("chart {label} carries an ideal of another semigroup")));
        }
    }
    let maximal = v.maximal_cones();
    for i in 0..maximal.len() {
        for j in i + 1..maximal.len() {
            let tau = maximal[i].intersect(&maximal[j]);
            let local = v.local_semigroup(&tau)?;
            let a = ideals[i].extend_to(local)?;
            let b = ideals[j].extend_to(local)?;
            if !a.same_ideal(&b) {
                return Err(Error::SheafIncompatible(tau.to_string()));
            }
        }
    }
    Ok(())
}

/// Blowup of an invariant sheaf of monomial ideals, one ideal per maximal
/// cone in the order of the triple.
pub fn blowup_sheaf<Z: Int>(v: &ToricTriple<Z>, ideals: &[MonomialIdeal<Z>]) -> Result<ToricTriple<Z>> {
    check_sheaf(v, ideals)?;
    let mut charts: Vec<LabelledChart<Z>> = Vec::new();
    for (label, ideal) in v.labels().iter().zip(ideals) {
        for (l, c, s) in blowup_charts(label, ideal)? {
            match charts.iter().find(|(_, o, _)| *o == c) {
                Some((_, _, existing)) => {
                    if !existing.same_members(&s) {
                        return Err(Error::SheafIncompatible(c.to_string()));
                    }
                }
                None => charts.push((l, c, s)),
            }
        }
    }
    charts.sort_by(|a, b| a.1.cmp(&b.1));
    let labels = charts.iter().map(|(l, _, _)| l.clone()).collect();
    let cones = charts.iter().map(|(_, c, _)| c.clone()).collect();
    let gens = charts.iter().map(|(_, _, s)| s.generators().to_vec()).collect();
    ToricTriple::from_cones(v.rank(), labels, cones, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::{build_triple, ChartSpec};
    use num_bigint::BigInt;

    type S = AffineSemigroup<BigInt>;

    fn v(x: &[i64]) -> Vec<BigInt> {
        scalar::vector(x)
    }

    fn a1() -> S {
        S::from_i64(2, &[&[1, 0], &[1, 1], &[1, 2]]).unwrap()
    }

    #[test]
    fn newton_vertices() {
        let cusp = S::from_i64(1, &[&[2], &[3]]).unwrap();
        let np = newton_polyhedron(&MonomialIdeal::from_i64(cusp, &[&[2], &[3]]).unwrap()).unwrap();
        assert_eq!(np.vertices(), &[v(&[2])]);
        let i = MonomialIdeal::from_i64(a1(), &[&[2, 1], &[2, 2], &[2, 3]]).unwrap();
        let np = newton_polyhedron(&i).unwrap();
        assert_eq!(np.vertices(), &[v(&[2, 1]), v(&[2, 3])]);
        let single = MonomialIdeal::from_i64(a1(), &[&[1, 1]]).unwrap();
        let np = newton_polyhedron(&single).unwrap();
        assert_eq!(np.vertices(), &[v(&[1, 1])]);
        assert_eq!(np.linearity_cones()[0].0, *a1().dual_cone());
        let half = S::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        let i = MonomialIdeal::from_i64(half, &[&[0, 1]]).unwrap();
        assert!(matches!(newton_polyhedron(&i), Err(Error::NotPointed)));
    }

    #[test]
    fn order_values() {
        let i = MonomialIdeal::from_i64(a1(), &[&[2, 1], &[2, 3]]).unwrap();
        let np = newton_polyhedron(&i).unwrap();
        assert_eq!(order_function(&np, &v(&[0, 1])).unwrap(), BigInt::from(1));
        assert_eq!(order_function(&np, &v(&[2, -1])).unwrap(), BigInt::from(1));
        assert_eq!(order_function(&np, &v(&[1, 0])).unwrap(), BigInt::from(2));
        assert!(matches!(order_function(&np, &v(&[-1, 0])), Err(Error::NotInCone(_))));
    }

    #[test]
    fn blowup_of_the_origin() {
        let plane = S::from_i64(2, &[&[1, 0], &[0, 1]]).unwrap();
        let i = MonomialIdeal::from_i64(plane, &[&[1, 0], &[0, 1]]).unwrap();
        let b = blowup_affine(&i).unwrap();
        assert_eq!(
            b.maximal_cones(),
            &[Cone::from_i64(2, &[&[0, 1], &[1, 1]]), Cone::from_i64(2, &[&[1, 0], &[1, 1]])]
        );
        let expect = |gens: &[&[i64]]| S::from_i64(2, gens).unwrap();
        assert!(b.charts()[0].same_members(&expect(&[&[1, 0], &[-1, 1]])));
        assert!(b.charts()[1].same_members(&expect(&[&[0, 1], &[1, -1]])));
    }

    #[test]
    fn blowup_normalizes_the_cusp() {
        let cusp = S::from_i64(1, &[&[2], &[3]]).unwrap();
        let b = blowup_affine(&MonomialIdeal::from_i64(cusp, &[&[2], &[3]]).unwrap()).unwrap();
        assert_eq!(b.charts().len(), 1);
        assert!(b.charts()[0].same_members(&S::from_i64(1, &[&[1]]).unwrap()));
    }

    #[test]
    fn principal_blowup_is_identity() {
        let u = S::from_i64(2, &[&[1, 0], &[0, 2], &[1, 1]]).unwrap();
        let i = MonomialIdeal::from_i64(u.clone(), &[&[1, 1]]).unwrap();
        let b = blowup_affine(&i).unwrap();
        assert!(b.same_as(&ToricTriple::affine("c", &u).unwrap()));
    }

    #[test]
    fn non_vertex_exponents_matter() {
        let i = MonomialIdeal::from_i64(a1(), &[&[2, 1], &[2, 2], &[2, 3]]).unwrap();
        let b = blowup_affine(&i).unwrap();
        let free = S::from_i64(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert!(b.charts().iter().any(|c| c.same_members(&free)));
        let coarse = MonomialIdeal::from_i64(a1(), &[&[2, 1], &[2, 3]]).unwrap();
        let c = blowup_affine(&coarse).unwrap();
        assert!(!c.charts().iter().any(|ch| ch.same_members(&free)));
    }

    fn mirror() -> ToricTriple<BigInt> {
        build_triple(
            2,
            vec![
                ChartSpec::from_i64("s", &[&[1, 0], &[0, 1]], &[&[1, 0], &[0, 2], &[1, 1]]),
                ChartSpec::from_i64("t", &[&[1, 0], &[0, -1]], &[&[1, 0], &[0, -2], &[1, -1]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn sheaf_blowups() {
        let m = mirror();
        let ideals = vec![
            MonomialIdeal::from_i64(m.charts()[0].clone(), &[&[1, 0], &[0, 2], &[1, 1]]).unwrap(),
            MonomialIdeal::from_i64(m.charts()[1].clone(), &[&[1, 0], &[0, -2], &[1, -1]]).unwrap(),
        ];
        let b = blowup_sheaf(&m, &ideals).unwrap();
        assert!(b.maximal_cones().len() >= 3);
        let bad = vec![
            MonomialIdeal::from_i64(m.charts()[0].clone(), &[&[1, 0], &[1, 1]]).unwrap(),
            MonomialIdeal::from_i64(m.charts()[1].clone(), &[&[0, 0]]).unwrap(),
        ];
        assert!(matches!(blowup_sheaf(&m, &bad), Err(Error::SheafIncompatible(f)) if f == "[[1,0]]"));
    }

    #[test]
    fn non_pointed_chart_blowup() {
        let t = S::from_i64(2, &[&[1, 0], &[1, 1], &[0, 2], &[0, -2]]).unwrap();
        let i = MonomialIdeal::from_i64(t, &[&[1, 2], &[1, 3]]).unwrap();
        let b = blowup_affine(&i).unwrap();
        assert_eq!(b.charts().len(), 1);
        assert!(b.charts()[0].is_free());
    }
}
