//! Logarithmic jacobian ideals and the Semple-Nash modification as their
//! blowup.

use itertools::Itertools;
use serde::Serialize;

use crate::blowup::{self, MonomialIdeal};
use crate::error::{Error, Result};
use crate::lattice;
use crate::scalar::{self, Int};
use crate::semigroups::AffineSemigroup;
use crate::variety::ToricTriple;

/// Sums of `d` generators with nonzero wedge, deduplicated and sorted.
fn jacobian_exponents<Z: Int>(rank: usize, generators: &[Vec<Z>]) -> Vec<Vec<Z>> {
    if rank == 0 {
        return vec![Vec::new()];
    }
    let mut out: Vec<Vec<Z>> = generators
        .iter()
        .cloned()
        .combinations(rank)
        .filter(|c| lattice::wedge_nonzero(c).expect("square"))
        .map(|c| c.iter().fold(scalar::zeros(rank), |acc, g| scalar::add(&acc, g)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The logarithmic jacobian ideal, from the minimal generators when `Γ` is
/// pointed and from the given generators otherwise.
pub fn log_jacobian<Z: Int>(semigroup: &AffineSemigroup<Z>) -> Result<MonomialIdeal<Z>> {
    let gens = if semigroup.is_pointed() { semigroup.minimal_generators()? } else { semigroup.generators().to_vec() };
    log_jacobian_from(semigroup, &gens)
}

/// The logarithmic jacobian ideal computed from an arbitrary generating set.
pub fn log_jacobian_from<Z: Int>(semigroup: &AffineSemigroup<Z>, generators: &[Vec<Z>]) -> Result<MonomialIdeal<Z>> {
    MonomialIdeal::new(semigroup.clone(), jacobian_exponents(semigroup.rank(), generators))
}

/// The logarithmic jacobian ideal of a product `Z^k × Γ'`, as the ideal of
/// the pointed factor. Fails with `NotPointed` when the units do not split off.
pub fn log_jacobian_via_split<Z: Int>(semigroup: &AffineSemigroup<Z>) -> Result<MonomialIdeal<Z>> {
    let split = semigroup.split_lineality();
    if !split.is_product() {
        return Err(Error::NotPointed);
    }
    let pointed = &split.pointed_part;
    let l = semigroup.rank() - pointed.rank();
    let exponents = log_jacobian(pointed)?
        .exponents()
        .iter()
        .map(|p| {
            p.iter()
                .zip(&split.basis[l..])
                .fold(scalar::zeros(semigroup.rank()), |acc, (c, b)| scalar::add(&acc, &scalar::scale(c, b)))
        })
        .collect();
    MonomialIdeal::new(semigroup.clone(), exponents)
}

/// Log jacobians of all maximal charts, checked for compatibility.
pub fn log_jacobian_sheaf<Z: Int>(v: &ToricTriple<Z>) -> Result<Vec<MonomialIdeal<Z>>> {
    let ideals = v.charts().iter().map(log_jacobian).collect::<Result<Vec<_>>>()?;
    blowup::check_sheaf(v, &ideals).map_err(|e| match e {
        Error::SheafIncompatible(face) => Error::Internal(format!("log jacobian ideals disagree on {face}")),
        other => other,
    })?;
    Ok(ideals)
}

pub fn nash_step<Z: Int>(v: &ToricTriple<Z>) -> Result<ToricTriple<Z>> {
    blowup::blowup_sheaf(v, &log_jacobian_sheaf(v)?)
}

/// Whether blowing up the log jacobian ideal is the identity, cross-checked
/// against freeness of `Γ`.
pub fn is_smooth_chart<Z: Int>(semigroup: &AffineSemigroup<Z>) -> Result<bool> {
    let j = log_jacobian(semigroup)?;
    let b = blowup::blowup_affine(&j)?;
    let identity = b.charts().len() == 1 && b.charts()[0].same_members(semigroup);
    if identity != semigroup.is_free() {
        return Err(Error::Internal(format!(
            "blowup identity test ({identity}) disagrees with freeness for {semigroup}"
        )));
    }
    Ok(identity)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopReason {
    Smooth,
    StepLimit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleSummary {
    pub charts: usize,
    /// Minimal generator counts of the pointed parts, one per chart.
    pub generator_counts: Vec<usize>,
    pub smooth: Vec<bool>,
}

#[derive(Debug, Clone)]
pub struct NashReport<Z> {
    /// The starting triple followed by one entry per step.
    pub history: Vec<TripleSummary>,
    pub steps: usize,
    pub terminated: bool,
    pub reason: StopReason,
    pub result: ToricTriple<Z>,
}

fn summarize<Z: Int>(v: &ToricTriple<Z>) -> Result<TripleSummary> {
    let mut generator_counts = Vec::new();
    let mut smooth = Vec::new();
    for chart in v.charts() {
        generator_counts.push(chart.split_lineality().pointed_part.minimal_generators()?.len());
        smooth.push(is_smooth_chart(chart)?);
    }
    Ok(TripleSummary { charts: v.charts().len(), generator_counts, smooth })
}

/// Iterates `nash_step`, optionally normalizing after each step, until every
/// chart is smooth or `max_steps` steps have been taken.
pub fn nash_iterate<Z: Int>(v: &ToricTriple<Z>, max_steps: usize, normalize_between: bool) -> Result<NashReport<Z>> {
    let mut current = v.clone();
    let mut history = vec![summarize(&current)?];
    let mut steps = 0;
    loop {
        if history.last().expect("nonempty").smooth.iter().all(|s| *s) {
            return Ok(NashReport { history, steps, terminated: true, reason: StopReason::Smooth, result: current });
        }
        if steps == max_steps {
            return Ok(NashReport {
                history,
                steps,
                terminated: false,
                reason: StopReason::StepLimit,
                result: current,
            });
        }
        current = nash_step(&current)?;
        if normalize_between {
            current = current.normalization();
        }
        steps += 1;
        history.push(summarize(&current)?);
    }
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

    fn exps(i: &MonomialIdeal<BigInt>) -> Vec<Vec<BigInt>> {
        i.exponents().to_vec()
    }

    fn umbrella() -> S {
        S::from_i64(2, &[&[1, 0], &[0, 2], &[1, 1]]).unwrap()
    }

    fn a1() -> S {
        S::from_i64(2, &[&[1, 0], &[1, 1], &[1, 2]]).unwrap()
    }

    #[test]
    fn log_jacobian_examples() {
        let cusp = S::from_i64(1, &[&[2], &[3]]).unwrap();
        assert_eq!(exps(&log_jacobian(&cusp).unwrap()), vec![v(&[2]), v(&[3])]);
        assert_eq!(exps(&log_jacobian(&umbrella()).unwrap()), vec![v(&[1, 2]), v(&[1, 3]), v(&[2, 1])]);
        assert_eq!(exps(&log_jacobian(&a1()).unwrap()), vec![v(&[2, 1]), v(&[2, 2]), v(&[2, 3])]);
        let plane = S::from_i64(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(exps(&log_jacobian(&plane).unwrap()), vec![v(&[1, 1])]);
    }

    #[test]
    fn redundant_generators_give_the_same_ideal() {
        let redundant = a1().generators().iter().cloned().chain([v(&[2, 2]), v(&[3, 1])]).collect_vec();
        let j = log_jacobian_from(&a1(), &redundant).unwrap();
        assert!(j.same_ideal(&log_jacobian(&a1()).unwrap()));
    }

    #[test]
    fn split_matches_direct() {
        let t = S::from_i64(2, &[&[1, 0], &[-1, 0], &[1, 2], &[0, 3]]).unwrap();
        assert!(log_jacobian_via_split(&t).unwrap().same_ideal(&log_jacobian(&t).unwrap()));
        let twisted = S::from_i64(2, &[&[2, 0], &[-2, 0], &[1, 1], &[0, 1]]).unwrap();
        assert!(matches!(log_jacobian_via_split(&twisted), Err(Error::NotPointed)));
    }

    #[test]
    fn smooth_charts() {
        assert!(is_smooth_chart(&S::from_i64(2, &[&[1, 0], &[0, 1]]).unwrap()).unwrap());
        assert!(!is_smooth_chart(&S::from_i64(1, &[&[2], &[3]]).unwrap()).unwrap());
        assert!(!is_smooth_chart(&a1()).unwrap());
        assert!(!is_smooth_chart(&umbrella()).unwrap());
        assert!(is_smooth_chart(&S::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap()).unwrap());
        let twisted = S::from_i64(2, &[&[2, 0], &[-2, 0], &[1, 1], &[0, 1]]).unwrap();
        assert!(!is_smooth_chart(&twisted).unwrap());
    }

    #[test]
    fn iteration() {
        let cusp = ToricTriple::affine("c", &S::from_i64(1, &[&[2], &[3]]).unwrap()).unwrap();
        let r = nash_iterate(&cusp, 10, false).unwrap();
        assert_eq!((r.steps, r.reason), (1, StopReason::Smooth));
        assert!(r.result.charts()[0].same_members(&S::from_i64(1, &[&[1]]).unwrap()));
        let r = nash_iterate(&cusp, 0, false).unwrap();
        assert_eq!((r.steps, r.terminated, r.reason), (0, false, StopReason::StepLimit));

        let u = ToricTriple::affine("u", &umbrella()).unwrap();
        let r = nash_iterate(&u, 10, false).unwrap();
        assert_eq!((r.steps, r.result.charts().len()), (1, 2));
        assert!(r.result.is_smooth());

        let a = ToricTriple::affine("a", &a1()).unwrap();
        let r = nash_iterate(&a, 10, false).unwrap();
        assert_eq!((r.steps, r.result.charts().len()), (1, 2));
        assert_eq!(r.history.len(), 2);
    }

    #[test]
    fn mirror_sheaf_is_compatible() {
        let m = build_triple::<BigInt>(
            2,
            vec![
                ChartSpec::from_i64("s", &[&[1, 0], &[0, 1]], &[&[1, 0], &[0, 2], &[1, 1]]),
                ChartSpec::from_i64("t", &[&[1, 0], &[0, -1]], &[&[1, 0], &[0, -2], &[1, -1]]),
            ],
        )
        .unwrap();
        assert_eq!(log_jacobian_sheaf(&m).unwrap().len(), 2);
        let r = nash_iterate(&m, 5, false).unwrap();
        assert!(r.terminated);
    }
}
