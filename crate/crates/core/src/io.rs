//! Variety documents, JSON reports and the `toric` command line.
//!
//! Integers are arbitrary precision. They are written as JSON numbers when
//! their absolute value is at most `2^53 − 1` and as decimal strings
//! otherwise; both forms are accepted on input.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Map, Value};

use crate::blowup::{self, MonomialIdeal};
use crate::cones::Cone;
use crate::divisors::{self, CartierData};
use crate::error::{Error, Result};
use crate::lattice::{Lattice, LinearMap};
use crate::nash;
use crate::scalar::{self, Rational};
use crate::variety::{ChartSpec, OrbitDescriptor, ToricTriple};

const MAX_SAFE: i64 = (1 << 53) - 1;

/// A triple as written on disk: maximal cones by rays in `N` and their chart
/// generators in `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyDocument {
    pub rank: usize,
    pub cones: Vec<ConeEntry>,
    pub semigroups: BTreeMap<String, Vec<Vec<BigInt>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeEntry {
    pub id: String,
    pub rays: Vec<Vec<BigInt>>,
}

pub fn int_json(z: &BigInt) -> Value {
    if z.abs() <= BigInt::from(MAX_SAFE) {
        Value::from(i64::try_from(z).expect("within 53 bits"))
    } else {
        Value::String(z.to_string())
    }
}

pub fn vector_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

pub fn vectors_json(vs: &[Vec<BigInt>]) -> Value {
    Value::Array(vs.iter().map(|v| vector_json(v)).collect())
}

fn rational_json(r: &Rational<BigInt>) -> Value {
    if r.denom().is_one() {
        int_json(r.numer())
    } else {
        Value::String(format!("{}/{}", r.numer(), r.denom()))
    }
}

fn cone_json(c: &Cone<BigInt>) -> Value {
    vectors_json(c.rays())
}

fn lattice_json(l: &Lattice<BigInt>) -> Value {
    vectors_json(l.basis())
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

pub fn parse_int(v: &Value) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => return Err(malformed(format!("expected an integer, found {other}"))),
    };
    text.parse().map_err(|_| malformed(format!("not an integer: {text}")))
}

pub fn parse_vector(v: &Value) -> Result<Vec<BigInt>> {
    v.as_array()
        .ok_or_else(|| malformed(format!("expected an integer array, found {v}")))?
        .iter()
        .map(parse_int)
        .collect()
}

pub fn parse_vectors(v: &Value) -> Result<Vec<Vec<BigInt>>> {
    v.as_array()
        .ok_or_else(|| malformed(format!("expected an array of integer arrays, found {v}")))?
        .iter()
        .map(parse_vector)
        .collect()
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text)
        .map_err(|e| malformed(format!("invalid JSON at line {} column {}: {e}", e.line(), e.column())))
}

impl VarietyDocument {
    /// Parses the document schema without building the triple.
    pub fn parse(text: &str) -> Result<Self> {
        let value = parse_json(text)?;
        let obj = value.as_object().ok_or_else(|| malformed("document must be a JSON object"))?;
        for key in obj.keys() {
            if !["rank", "cones", "semigroups"].contains(&key.as_str()) {
                return Err(malformed(format!("unknown key {key:?}")));
            }
        }
        let rank = obj
            .get("rank")
            .and_then(Value::as_u64)
            .ok_or_else(|| malformed("\"rank\" must be a non-negative integer"))? as usize;
        let mut cones = Vec::new();
        let mut ids = BTreeSet::new();
        for (k, c) in obj
            .get("cones")
            .and_then(Value::as_array)
            .ok_or_else(|| malformed("\"cones\" must be an array"))?
            .iter()
            .enumerate()
        {
            let id = c
                .get("id")
                .and_then(Value::as_str)
                .ok_or_else(|| malformed(format!("cone {k} needs a string \"id\"")))?
                .to_string();
            if !ids.insert(id.clone()) {
                return Err(malformed(format!("duplicate cone id {id:?}")));
            }
            let rays = parse_vectors(c.get("rays").ok_or_else(|| malformed(format!("cone {id:?} has no \"rays\"")))?)?;
            cones.push(ConeEntry { id, rays });
        }
        let mut semigroups = BTreeMap::new();
        for (id, gens) in obj
            .get("semigroups")
            .and_then(Value::as_object)
            .ok_or_else(|| malformed("\"semigroups\" must be an object"))?
        {
            if !ids.contains(id) {
                return Err(malformed(format!("semigroup given for unknown cone {id:?}")));
            }
            semigroups.insert(id.clone(), parse_vectors(gens)?);
        }
        if let Some(c) = cones.iter().find(|c| !semigroups.contains_key(&c.id)) {
            return Err(malformed(format!("no semigroup for cone {:?}", c.id)));
        }
        Ok(VarietyDocument { rank, cones, semigroups })
    }

    /// Builds the triple; non-primitive rays are rescaled with a warning.
    pub fn to_triple(&self) -> Result<(ToricTriple<BigInt>, Vec<String>)> {
        let mut warnings = Vec::new();
        let mut specs = Vec::new();
        for c in &self.cones {
            let mut rays = Vec::new();
            for r in &c.rays {
                if r.len() != self.rank {
                    return Err(malformed(format!(
                        "ray {} of cone {:?} has length {}",
                        scalar::fmt_vec(r),
                        c.id,
                        r.len()
                    )));
                }
                if scalar::is_zero(r) {
                    return Err(malformed(format!("cone {:?} has a zero ray", c.id)));
                }
                let p = scalar::primitive(r);
                if p != *r {
                    warnings.push(format!(
                        "ray {} of cone {:?} is not primitive; using {}",
                        scalar::fmt_vec(r),
                        c.id,
                        scalar::fmt_vec(&p)
                    ));
                }
                rays.push(p);
            }
            let gens = self.semigroups[&c.id].clone();
            if let Some(g) = gens.iter().find(|g| g.len() != self.rank) {
                return Err(malformed(format!(
                    "generator {} of cone {:?} has the wrong length",
                    scalar::fmt_vec(g),
                    c.id
                )));
            }
            specs.push(ChartSpec::new(c.id.clone(), rays, gens));
        }
        Ok((ToricTriple::build(self.rank, specs)?, warnings))
    }

    pub fn from_triple(t: &ToricTriple<BigInt>) -> Self {
        let cones = t
            .labels()
            .iter()
            .zip(t.maximal_cones())
            .map(|(id, c)| ConeEntry { id: id.clone(), rays: c.rays().to_vec() })
            .collect();
        let semigroups = t.labels().iter().cloned().zip(t.charts().iter().map(|c| c.generators().to_vec())).collect();
        VarietyDocument { rank: t.rank(), cones, semigroups }
    }

    /// Canonical text: one cone per line, keys in sorted order.
    pub fn serialize(&self) -> String {
        let compact = |vs: &[Vec<BigInt>]| vectors_json(vs).to_string();
        let mut out = String::from("{\n  \"cones\": [\n");
        for (i, c) in self.cones.iter().enumerate() {
            let sep = if i + 1 < self.cones.len() { "," } else { "" };
            let _ =
                writeln!(out, "    {{\"id\": {}, \"rays\": {}}}{sep}", Value::from(c.id.as_str()), compact(&c.rays));
        }
        let _ = write!(out, "  ],\n  \"rank\": {},\n  \"semigroups\": {{\n", self.rank);
        for (i, (id, gens)) in self.semigroups.iter().enumerate() {
            let sep = if i + 1 < self.semigroups.len() { "," } else { "" };
            let _ = writeln!(out, "    {}: {}{sep}", Value::from(id.as_str()), compact(gens));
        }
        out.push_str("  }\n}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        let cones: Vec<Value> = self.cones.iter().map(|c| json!({"id": c.id, "rays": vectors_json(&c.rays)})).collect();
        let semigroups: Map<String, Value> =
            self.semigroups.iter().map(|(k, v)| (k.clone(), vectors_json(v))).collect();
        json!({"rank": self.rank, "cones": cones, "semigroups": semigroups})
    }
}

/// Parses a document and builds its triple, returning warnings alongside.
pub fn parse_variety(text: &str) -> Result<(ToricTriple<BigInt>, Vec<String>)> {
    VarietyDocument::parse(text)?.to_triple()
}

pub fn serialize_variety(t: &ToricTriple<BigInt>) -> String {
    VarietyDocument::from_triple(t).serialize()
}

fn orbit_json(o: &OrbitDescriptor<BigInt>) -> Value {
    json!({
        "cone": cone_json(&o.cone),
        "dim": o.dim,
        "index": int_json(&o.index),
        "orbit_lattice": lattice_json(&o.orbit_lattice),
        "perp_lattice": lattice_json(&o.perp_lattice),
    })
}

fn error_json(e: &Error) -> Value {
    let mut v = json!({"kind": e.kind(), "message": e.to_string()});
    match e {
        Error::InvalidTriple(violations) => {
            v["violations"] = violations.iter().map(|x| json!({"kind": x.kind(), "message": x.to_string()})).collect();
        }
        Error::NotCartier { face, difference, orbit_lattice, perp_lattice, cartier_on_normalization } => {
            v["face"] = json!(face);
            v["difference"] = json!(difference);
            v["orbit_lattice"] = json!(orbit_lattice);
            v["perp_lattice"] = json!(perp_lattice);
            v["cartier_on_normalization"] = json!(cartier_on_normalization);
        }
        _ => {}
    }
    v
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Malformed(_) | Error::UnknownCone(_) | Error::DimensionMismatch { .. } => 2,
        _ => 1,
    }
}

/// Pretty JSON with sorted keys, keeping arrays that hold no objects on one line.
fn pretty(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                let _ = write!(out, "{pad}{}: ", Value::from(k.as_str()));
                pretty(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", "  ".repeat(indent));
        }
        Value::Array(items) if items.iter().any(has_object) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad);
                pretty(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", "  ".repeat(indent));
        }
        other => out.push_str(&other.to_string()),
    }
}

fn has_object(v: &Value) -> bool {
    match v {
        Value::Object(_) => true,
        Value::Array(items) => items.iter().any(has_object),
        _ => false,
    }
}

fn report(status: &str, command: &str, result: Value) -> String {
    let mut text = String::new();
    pretty(&json!({"status": status, "command": command, "result": result}), 0, &mut text);
    text.push('\n');
    text
}

#[derive(Debug, Parser)]
#[command(name = "toric", about = "Exact combinatorics of general toric varieties")]
struct Cli {
    /// Write the built-in example documents into DIR.
    #[arg(long, value_name = "DIR")]
    emit_examples: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a document and list its orbits.
    Validate { file: PathBuf },
    /// Replace every chart by its saturation.
    Normalize { file: PathBuf },
    /// Orbits with their lattices and indices.
    Orbits { file: PathBuf },
    /// The closure of the orbit of a cone (chart id or ray list).
    OrbitClosure {
        file: PathBuf,
        #[arg(long)]
        cone: String,
    },
    /// Blow up a monomial ideal on one chart.
    Blowup {
        file: PathBuf,
        #[arg(long)]
        chart: String,
        #[arg(long)]
        ideal: String,
    },
    /// Iterate the Semple-Nash modification.
    Nash {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[arg(long)]
        normalize: bool,
    },
    /// Smooth locus and per-chart smoothness.
    Smooth { file: PathBuf },
    /// Properties of Cartier data given as a chart id to point map.
    Divisor {
        file: PathBuf,
        #[arg(long)]
        data: String,
        #[arg(long, value_enum)]
        check: Check,
    },
    /// The projective triple of a point set.
    Gkz {
        #[arg(long)]
        points: String,
    },
    /// Whether the limit of a one-parameter subgroup exists.
    Limit {
        file: PathBuf,
        #[arg(long)]
        vector: String,
    },
    /// Check a lattice map `N → N'` against two fans.
    Morphism {
        file: PathBuf,
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        target: PathBuf,
        /// Cone of the target whose orbit lattice map is tested for lifting.
        #[arg(long)]
        lift_cone: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Check {
    Cartier,
    Bpf,
    Ample,
    Veryample,
    Principal,
    Sections,
    Polytope,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Normalize { .. } => "normalize",
            Command::Orbits { .. } => "orbits",
            Command::OrbitClosure { .. } => "orbit-closure",
            Command::Blowup { .. } => "blowup",
            Command::Nash { .. } => "nash",
            Command::Smooth { .. } => "smooth",
            Command::Divisor { .. } => "divisor",
            Command::Gkz { .. } => "gkz",
            Command::Limit { .. } => "limit",
            Command::Morphism { .. } => "morphism",
        }
    }
}

fn load(path: &Path) -> Result<(ToricTriple<BigInt>, Vec<String>)> {
    let text = std::fs::read_to_string(path).map_err(|e| malformed(format!("cannot read {}: {e}", path.display())))?;
    parse_variety(&text)
}

/// A cone named by chart id or by a JSON ray list.
fn resolve_cone(t: &ToricTriple<BigInt>, name: &str) -> Result<Cone<BigInt>> {
    if let Some(i) = t.chart_index(name) {
        return Ok(t.maximal_cones()[i].clone());
    }
    let rays = parse_json(name).and_then(|v| parse_vectors(&v)).map_err(|_| Error::UnknownCone(name.to_string()))?;
    if rays.iter().any(|r| r.len() != t.rank()) {
        return Err(Error::UnknownCone(name.to_string()));
    }
    let cone = Cone::from_generators(t.rank(), &rays);
    t.fan().position(&cone).map(|_| cone).ok_or_else(|| Error::UnknownCone(name.to_string()))
}

fn triple_json(t: &ToricTriple<BigInt>) -> Value {
    VarietyDocument::from_triple(t).to_json()
}

fn divisor_data(t: &ToricTriple<BigInt>, text: &str) -> Result<Vec<Vec<BigInt>>> {
    let value = parse_json(text)?;
    let obj = value.as_object().ok_or_else(|| malformed("--data must map chart ids to points"))?;
    if let Some(k) = obj.keys().find(|k| t.chart_index(k).is_none()) {
        return Err(Error::UnknownCone(k.clone()));
    }
    t.labels()
        .iter()
        .map(|l| parse_vector(obj.get(l).ok_or_else(|| malformed(format!("--data has no point for chart {l:?}")))?))
        .collect()
}

fn polytope_json(d: &CartierData<BigInt>) -> Value {
    let p = d.polytope();
    let ineqs: Vec<Value> =
        p.inequalities.iter().map(|(nu, h)| json!({"normal": vector_json(nu), "rhs": int_json(h)})).collect();
    let vertices = p
        .vertices
        .map(|vs| Value::Array(vs.iter().map(|v| Value::Array(v.iter().map(rational_json).collect())).collect()))
        .unwrap_or(Value::Null);
    json!({"inequalities": ineqs, "vertices": vertices})
}

fn execute(command: &Command) -> Result<Value> {
    match command {
        Command::Validate { file } => {
            let (t, warnings) = load(file)?;
            let charts: Vec<Value> = t
                .labels()
                .iter()
                .zip(t.maximal_cones().iter().zip(t.charts()))
                .map(|(l, (c, g))| {
                    let gens = if g.is_pointed() { g.minimal_generators()? } else { g.generators().to_vec() };
                    Ok(json!({"id": l, "rays": cone_json(c), "generators": vectors_json(&gens), "pointed": g.is_pointed()}))
                })
                .collect::<Result<_>>()?;
            Ok(json!({
                "rank": t.rank(),
                "charts": charts,
                "orbits": t.orbits().iter().map(orbit_json).collect::<Vec<_>>(),
                "normal": t.is_normal(),
                "smooth": t.is_smooth(),
                "complete": t.fan().is_complete(),
                "warnings": warnings,
            }))
        }
        Command::Normalize { file } => {
            let (t, warnings) = load(file)?;
            Ok(json!({"document": triple_json(&t.normalization()), "warnings": warnings}))
        }
        Command::Orbits { file } => {
            let (t, _) = load(file)?;
            Ok(json!({"orbits": t.orbits().iter().map(orbit_json).collect::<Vec<_>>()}))
        }
        Command::OrbitClosure { file, cone } => {
            let (t, _) = load(file)?;
            let tau = resolve_cone(&t, cone)?;
            let closure = t.orbit_closure(&tau)?;
            Ok(
                json!({"cone": cone_json(&tau), "orbit": orbit_json(&t.orbit(&tau)?), "document": triple_json(&closure)}),
            )
        }
        Command::Blowup { file, chart, ideal } => {
            let (t, _) = load(file)?;
            let i = t.chart_index(chart).ok_or_else(|| Error::UnknownCone(chart.clone()))?;
            let exponents = parse_vectors(&parse_json(ideal)?)?;
            if exponents.iter().any(|e| e.len() != t.rank()) {
                return Err(malformed("ideal exponents have the wrong length"));
            }
            let ideal = MonomialIdeal::new(t.charts()[i].clone(), exponents)?;
            let affine = ToricTriple::affine(chart, &t.charts()[i])?;
            let result = blowup::blowup_sheaf(&affine, std::slice::from_ref(&ideal))?;
            let vertices = if t.charts()[i].is_pointed() {
                vectors_json(blowup::newton_polyhedron(&ideal)?.vertices())
            } else {
                Value::Null
            };
            Ok(json!({"newton_vertices": vertices, "document": triple_json(&result)}))
        }
        Command::Nash { file, steps, normalize } => {
            let (t, _) = load(file)?;
            let r = nash::nash_iterate(&t, *steps, *normalize)?;
            Ok(json!({
                "steps": r.steps,
                "terminated": r.terminated,
                "reason": r.reason,
                "smooth": r.result.is_smooth(),
                "final_charts": r.result.charts().len(),
                "history": r.history,
                "document": triple_json(&r.result),
            }))
        }
        Command::Smooth { file } => {
            let (t, _) = load(file)?;
            let charts: Map<String, Value> = t
                .labels()
                .iter()
                .zip(t.charts())
                .map(|(l, g)| Ok((l.clone(), Value::Bool(nash::is_smooth_chart(g)?))))
                .collect::<Result<_>>()?;
            Ok(json!({
                "smooth": t.is_smooth(),
                "smooth_locus": t.smooth_locus().iter().map(cone_json).collect::<Vec<_>>(),
                "charts": charts,
            }))
        }
        Command::Divisor { file, data, check } => {
            let (t, _) = load(file)?;
            let d = divisors::make_cartier(&t, divisor_data(&t, data)?)?;
            Ok(match check {
                Check::Cartier => json!({"cartier": true}),
                Check::Bpf => json!({"basepoint_free": d.is_basepoint_free()?}),
                Check::Ample => json!({"ample": d.is_ample()?}),
                Check::Veryample => json!({"very_ample": d.is_very_ample()?}),
                Check::Principal => json!({"principal": d.is_principal()}),
                Check::Sections => json!({"sections": vectors_json(&d.global_sections()?)}),
                Check::Polytope => polytope_json(&d),
            })
        }
        Command::Gkz { points } => {
            let points = parse_vectors(&parse_json(points)?)?;
            let (t, d) = divisors::gkz_triple(&points)?;
            let cartier: Map<String, Value> =
                t.labels().iter().cloned().zip(d.points().iter().map(|p| vector_json(p))).collect();
            Ok(json!({
                "document": triple_json(&t),
                "cartier": cartier,
                "ample": d.is_ample()?,
                "very_ample": d.is_very_ample()?,
                "sections": vectors_json(&d.global_sections()?),
            }))
        }
        Command::Limit { file, vector } => {
            let (t, _) = load(file)?;
            let v = parse_vector(&parse_json(vector)?)?;
            if v.len() != t.rank() {
                return Err(Error::DimensionMismatch { expected: t.rank(), found: v.len() });
            }
            let cone = t.fan().cones().iter().filter(|c| c.contains(&v)).min_by_key(|c| c.dim()).map(cone_json);
            Ok(json!({"exists": t.limit_exists(&v), "cone": cone.unwrap_or(Value::Null)}))
        }
        Command::Morphism { file, matrix, target, lift_cone } => {
            let (source, _) = load(file)?;
            let (target, _) = load(target)?;
            let rows = parse_vectors(&parse_json(matrix)?)?;
            if rows.len() != target.rank() || rows.iter().any(|r| r.len() != source.rank()) {
                return Err(malformed(format!(
                    "--matrix must have {} rows of length {}",
                    target.rank(),
                    source.rank()
                )));
            }
            let map = LinearMap::new(source.rank(), rows);
            let fan_map = ToricTriple::check_fan_map(&map, &source, &target)?;
            let assignment: Vec<Value> = fan_map
                .assignment
                .iter()
                .map(|(i, c)| json!({"source": source.labels()[*i], "target": cone_json(c)}))
                .collect();
            let mut result = json!({"compatible": true, "assignment": assignment});
            if let Some(name) = lift_cone {
                let tau = resolve_cone(&target, name)?;
                let pullback = map.transpose();
                let images: Vec<Vec<BigInt>> =
                    target.orbit(&tau)?.orbit_lattice.basis().iter().map(|b| pullback.apply(b)).collect();
                let lift = target.lifts_to_normalization(&tau, &images)?;
                result["lift"] = json!({
                    "cone": cone_json(&tau),
                    "lifts": lift.lifts,
                    "perp_basis": vectors_json(&lift.perp_basis),
                    "extension": lift.extension.as_deref().map(vectors_json).unwrap_or(Value::Null),
                });
            }
            Ok(result)
        }
    }
}

/// The built-in example corpus as `(file name, document)` pairs.
pub fn example_documents() -> Vec<(&'static str, String)> {
    let spec = |label: &str, rays: &[&[i64]], gens: &[&[i64]]| ChartSpec::<BigInt>::from_i64(label, rays, gens);
    let build = |rank, specs| serialize_variety(&ToricTriple::build(rank, specs).expect("example is valid"));
    let (cubic, _) = divisors::gkz_triple(&[scalar::vector(&[0]), scalar::vector(&[2]), scalar::vector(&[3])])
        .expect("example is valid");
    vec![
        ("cusp.json", build(1, vec![spec("c", &[&[1]], &[&[2], &[3]])])),
        ("a1.json", build(2, vec![spec("a", &[&[0, 1], &[2, -1]], &[&[1, 0], &[1, 1], &[1, 2]])])),
        ("umbrella.json", build(2, vec![spec("u", &[&[1, 0], &[0, 1]], &[&[1, 0], &[0, 2], &[1, 1]])])),
        (
            "mirror.json",
            build(
                2,
                vec![
                    spec("s", &[&[1, 0], &[0, 1]], &[&[1, 0], &[0, 2], &[1, 1]]),
                    spec("t", &[&[1, 0], &[0, -1]], &[&[1, 0], &[0, -2], &[1, -1]]),
                ],
            ),
        ),
        ("gkz_cubic.json", serialize_variety(&cubic)),
        ("plane.json", build(2, vec![spec("p", &[&[1, 0], &[0, 1]], &[&[1, 0], &[0, 1]])])),
        ("p1.json", build(1, vec![spec("p", &[&[1]], &[&[1]]), spec("n", &[&[-1]], &[&[-1]])])),
    ]
}

fn emit_examples(dir: &Path) -> Result<Value> {
    std::fs::create_dir_all(dir).map_err(|e| malformed(format!("cannot create {}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for (name, text) in example_documents() {
        let path = dir.join(name);
        std::fs::write(&path, text).map_err(|e| malformed(format!("cannot write {}: {e}", path.display())))?;
        written.push(name);
    }
    Ok(json!({"written": written}))
}

/// Runs the command line (including the program name) and returns the exit
/// code together with the text for standard output.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => (2, report("error", "", json!({"kind": "UsageError", "message": e.to_string()}))),
            };
        }
    };
    let (name, outcome) = match (&cli.emit_examples, &cli.command) {
        (Some(dir), None) => ("emit-examples", emit_examples(dir)),
        (None, Some(c)) => (c.name(), execute(c)),
        _ => {
            let msg = "give either a subcommand or --emit-examples";
            return (2, report("error", "", json!({"kind": "UsageError", "message": msg})));
        }
    };
    match outcome {
        Ok(result) => (0, report("ok", name, result)),
        Err(e) => (exit_code(&e), report("error", name, error_json(&e))),
    }
}
