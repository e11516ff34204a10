//! Exact combinatorics of general, not necessarily normal, toric varieties.
//!
//! A variety is a triple `(N, Σ, Γ)`: a fan `Σ` in `N_R` with an affine
//! semigroup `Γ_σ ⊂ M` for every maximal cone, glued along faces by
//! localization. All arithmetic is exact; the modules are generic over the
//! integer type and the aliases below fix it to [`BigInt`].

pub mod blowup;
pub mod cones;
pub mod divisors;
pub mod error;
pub mod io;
pub mod lattice;
pub mod nash;
pub mod scalar;
pub mod semigroups;
pub mod variety;

pub use num_bigint::BigInt;

pub use error::{Error, Result, Violation};

pub type Matrix = lattice::Matrix<BigInt>;
pub type Lattice = lattice::Lattice<BigInt>;
pub type LinearMap = lattice::LinearMap<BigInt>;
pub type Cone = cones::Cone<BigInt>;
pub type Fan = cones::Fan<BigInt>;
pub type AffineSemigroup = semigroups::AffineSemigroup<BigInt>;
pub type ToricTriple = variety::ToricTriple<BigInt>;
pub type ChartSpec = variety::ChartSpec<BigInt>;
pub type MonomialIdeal = blowup::MonomialIdeal<BigInt>;
pub type NewtonPolyhedron = blowup::NewtonPolyhedron<BigInt>;
pub type NashReport = nash::NashReport<BigInt>;
pub type CartierData = divisors::CartierData<BigInt>;
