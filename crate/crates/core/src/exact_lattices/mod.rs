//! Exact integer linear algebra over `Z`.

mod abelian;
mod lattice;
mod matrix;
mod smith;

pub use abelian::AbelianGroupInvariants;
pub use lattice::{
    cokernel_invariants, contains, intersect, kernel_basis, lattice_basis, rank, same_lattice, saturation, solve,
    solve_matrix, subquotient_invariants, SaturatedBasis,
};
pub use matrix::Matrix;
pub use smith::{smith_diagonal, snf, SmithDecomposition};
