//! Subquotients `K / R` of `Z^k` and the maps between them.

use crate::error::{Error, Result};
use crate::exact_lattices::{contains, kernel_basis, lattice_basis, same_lattice, subquotient_invariants, AbelianGroupInvariants, Matrix};
use crate::scalar::Scalar;

/// `span(sub) / span(relations)` inside `Z^k`, with `relations ⊆ sub`.
/// Both matrices hold independent bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient<T> {
    sub: Matrix<T>,
    relations: Matrix<T>,
    invariants: AbelianGroupInvariants,
}

impl<T: Scalar> Subquotient<T> {
    pub fn new(sub: &Matrix<T>, relations: &Matrix<T>) -> Result<Self> {
        if sub.rows() != relations.rows() {
            return Err(Error::Dimension("subquotient pieces live in different lattices".into()));
        }
        let sub = lattice_basis(sub)?;
        let relations = lattice_basis(relations)?;
        let invariants = subquotient_invariants(&sub, &relations)?;
        Ok(Self { sub, relations, invariants })
    }

    /// `Z^k / span(relations)`.
    pub fn cokernel(relations: &Matrix<T>) -> Result<Self> {
        Self::new(&Matrix::identity(relations.rows()), relations)
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.rows()
    }

    pub fn sub(&self) -> &Matrix<T> {
        &self.sub
    }

    pub fn relations(&self) -> &Matrix<T> {
        &self.relations
    }

    pub fn invariants(&self) -> &AbelianGroupInvariants {
        &self.invariants
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_trivial()
    }

    /// Whether the vector (in ambient coordinates) lies in `relations`,
    /// i.e. represents the zero class.
    pub fn is_zero_class(&self, v: &[T]) -> Result<bool> {
        let col = Matrix::from_columns(&[v.to_vec()], v.len())?;
        contains(&self.relations, &col)
    }
}

/// A homomorphism `A -> B` of subquotients induced by an ambient matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap<T> {
    matrix: Matrix<T>,
}

impl<T: Scalar> InducedMap<T> {
    /// Checks that `matrix` sends `source.sub` into `target.sub` and
    /// `source.relations` into `target.relations`.
    pub fn new(source: &Subquotient<T>, target: &Subquotient<T>, matrix: Matrix<T>) -> Result<Self> {
        if matrix.shape() != (target.ambient_dim(), source.ambient_dim()) {
            return Err(Error::Dimension("induced map has the wrong shape".into()));
        }
        if !contains(&target.sub, &matrix.mul(&source.sub)?)? {
            return Err(Error::NotInLattice("map does not carry the source lattice into the target".into()));
        }
        if !contains(&target.relations, &matrix.mul(&source.relations)?)? {
            return Err(Error::NotInLattice("map does not carry relations to relations".into()));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    /// Generators (ambient source coordinates) of `{x ∈ source.sub : f x ∈ target.relations}`.
    pub fn kernel(&self, source: &Subquotient<T>, target: &Subquotient<T>) -> Result<Matrix<T>> {
        let image = self.matrix.mul(&source.sub)?;
        let joint = image.hstack(&target.relations)?;
        let ker = kernel_basis(&joint)?;
        let coeffs = ker.submatrix(0..source.sub.cols(), 0..ker.cols());
        source.sub.mul(&coeffs)
    }

    /// `f(source.sub) + target.relations`.
    pub fn image(&self, source: &Subquotient<T>, target: &Subquotient<T>) -> Result<Matrix<T>> {
        self.matrix.mul(&source.sub)?.hstack(&target.relations)
    }

    pub fn is_injective(&self, source: &Subquotient<T>, target: &Subquotient<T>) -> Result<bool> {
        contains(&source.relations, &self.kernel(source, target)?)
    }

    pub fn is_surjective(&self, source: &Subquotient<T>, target: &Subquotient<T>) -> Result<bool> {
        contains(&self.image(source, target)?, &target.sub)
    }

    pub fn is_bijective(&self, source: &Subquotient<T>, target: &Subquotient<T>) -> Result<bool> {
        Ok(self.is_injective(source, target)? && self.is_surjective(source, target)?)
    }

    pub fn compose(&self, after: &Self) -> Result<Self> {
        Ok(Self { matrix: after.matrix.mul(&self.matrix)? })
    }
}

/// Exactness of `A --a--> B --b--> C` at `B`.
pub fn is_exact_at<T: Scalar>(
    a: &InducedMap<T>,
    sa: &Subquotient<T>,
    sb: &Subquotient<T>,
    b: &InducedMap<T>,
    sc: &Subquotient<T>,
) -> Result<bool> {
    let ker = b.kernel(sb, sc)?.hstack(&sb.relations)?;
    same_lattice(&ker, &a.image(sa, sb)?)
}
