use std::fmt;

use thiserror::Error;

/// A single failed axiom found while validating a triple.
///
/// Cones are named by their canonical ray list (`[[1,0],[0,1]]`) or, inside a
/// triple, by chart label. The derived ordering is what makes error lists
/// canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Violation {
    /// Two cones meet in something that is not a face of both.
    FanAxiom { first: String, second: String, detail: String },
    /// A cone of the fan has a nontrivial lineality space.
    NotStrictlyConvex { cone: String },
    /// The chart semigroup does not span the full lattice.
    GroupNotFull { chart: String },
    /// The cone spanned by the chart semigroup is not the dual of its cone.
    SemigroupConeMismatch { chart: String, expected: String, found: String },
    /// Localizations from two maximal cones disagree on a shared face.
    Gluing { face: String, first: String, second: String },
    /// The semigroup of an intersection is not the sum of the two charts.
    Separatedness { first: String, second: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FanAxiom { first, second, detail } => {
                write!(f, "fan axiom fails for {first} and {second}: {detail}")
            }
            Violation::NotStrictlyConvex { cone } => write!(f, "cone {cone} is not strictly convex"),
            Violation::GroupNotFull { chart } => {
                write!(f, "semigroup of chart {chart} does not generate the lattice")
            }
            Violation::SemigroupConeMismatch { chart, expected, found } => {
                write!(f, "semigroup of chart {chart} spans the cone with rays {found}, expected {expected}")
            }
            Violation::Gluing { face, first, second } => {
                write!(f, "localizations of charts {first} and {second} differ on the face {face}")
            }
            Violation::Separatedness { first, second } => {
                write!(f, "semigroup of the intersection of {first} and {second} is not the sum of the charts")
            }
        }
    }
}

impl Violation {
    /// Short machine-readable tag used in CLI reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::FanAxiom { .. } => "FanAxiomViolation",
            Violation::NotStrictlyConvex { .. } => "FanAxiomViolation",
            Violation::GroupNotFull { .. } => "GroupNotFull",
            Violation::SemigroupConeMismatch { .. } => "SemigroupConeMismatch",
            Violation::Gluing { .. } => "GluingViolation",
            Violation::Separatedness { .. } => "GluingViolation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("lattice is not contained in the ambient lattice")]
    NotContained,
    #[error("the zero cone has no nonzero relative interior point")]
    ZeroCone,
    #[error("cone {0} is not a face")]
    NotAFace(String),
    #[error("generators {generators} span a proper subgroup of Z^{rank}")]
    GroupNotFull { rank: usize, generators: String },
    #[error("semigroup cone is not strictly convex")]
    NotPointed,
    #[error("vector {0} lies outside the cone")]
    NotInCone(String),
    #[error("exponent {0} is not a member of the chart semigroup")]
    NotMember(String),
    #[error("invalid triple: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidTriple(Vec<Violation>),
    #[error("no target cone is compatible with source cone {0}")]
    NoCompatibleCone(String),
    #[error("ideal sheaf is not compatible on the face {0}")]
    SheafIncompatible(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(
        "not Cartier on the face {face}: difference {difference} is not in M(tau,Gamma_tau) = {orbit_lattice} (M(tau) = {perp_lattice}, Cartier on the normalization: {cartier_on_normalization})"
    )]
    NotCartier {
        face: String,
        difference: String,
        orbit_lattice: String,
        perp_lattice: String,
        cartier_on_normalization: bool,
    },
    #[error("the fan does not cover the whole space")]
    NonCompleteFan,
    #[error("point set is degenerate: {0}")]
    DegeneratePolytope(String),
    #[error("unknown cone {0}")]
    UnknownCone(String),
    #[error("malformed document: {0}")]
    Malformed(String),
}

impl Error {
    /// Machine-readable name used by the command line reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::Empty(_) => "Empty",
            Error::NotContained => "NotContained",
            Error::ZeroCone => "ZeroCone",
            Error::NotAFace(_) => "NotAFace",
            Error::GroupNotFull { .. } => "GroupNotFull",
            Error::NotPointed => "NotPointed",
            Error::NotInCone(_) => "NotInCone",
            Error::NotMember(_) => "NotMember",
            Error::InvalidTriple(v) => v.first().map(|x| x.kind()).unwrap_or("InvalidTriple"),
            Error::NoCompatibleCone(_) => "NoCompatibleCone",
            Error::SheafIncompatible(_) => "SheafIncompatible",
            Error::Internal(_) => "InternalIncompatibility",
            Error::NotCartier { .. } => "NotCartier",
            Error::NonCompleteFan => "NonCompleteFan",
            Error::DegeneratePolytope(_) => "DegeneratePolytope",
            Error::UnknownCone(_) => "UnknownCone",
            Error::Malformed(_) => "MalformedDocument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
