//! Exact computation of Galois-cohomological invariants of reductive groups
//! through two-term complexes of lattices.

pub mod cohomology;
pub mod complexes;
pub mod error;
pub mod exact_lattices;
pub mod finite_groups;
pub mod gmodules;
pub mod rootdata;
pub mod scalar;
pub mod selftest;

pub use error::{Error, Result};
pub use exact_lattices::AbelianGroupInvariants;
pub use finite_groups::{FiniteGroup, Subgroup};
pub use scalar::Scalar;

pub type Int = num_bigint::BigInt;
pub type IntegerMatrix = exact_lattices::Matrix<Int>;
pub type GaloisLattice = gmodules::GaloisLattice<Int>;
pub type EquivariantMap = gmodules::EquivariantMap<Int>;
pub type LatticeComplex = complexes::LatticeComplex<Int>;
pub type ComplexMap = complexes::ComplexMap<Int>;
