//! Kernels, images, cokernels and subquotients of integer lattices.
//!
//! A lattice is always given by a matrix whose columns generate it inside
//! `Z^rows`.

use crate::error::{Error, Result};
use crate::exact_lattices::abelian::AbelianGroupInvariants;
use crate::exact_lattices::matrix::Matrix;
use crate::exact_lattices::smith::{smith_diagonal, snf};
use crate::scalar::Scalar;

/// Invariants of `Z^rows / image(a)`.
pub fn cokernel_invariants<T: Scalar>(a: &Matrix<T>) -> Result<AbelianGroupInvariants> {
    let factors = smith_diagonal(a)?;
    Ok(AbelianGroupInvariants::from_invariant_factors(a.rows(), &factors))
}

/// Columns form a Z-basis of `{v : a v = 0}`. The basis is saturated.
pub fn kernel_basis<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>> {
    let s = snf(a)?;
    let n = a.cols();
    Ok(s.v.submatrix(0..n, s.rank()..n))
}

pub fn rank<T: Scalar>(a: &Matrix<T>) -> Result<usize> {
    Ok(smith_diagonal(a)?.len())
}

/// Basis of `(span(gens) ⊗ Q) ∩ Z^rows`.
pub fn saturation<T: Scalar>(gens: &Matrix<T>) -> Result<Matrix<T>> {
    let s = snf(gens)?;
    Ok(s.u_inv.submatrix(0..gens.rows(), 0..s.rank()))
}

/// An independent Z-basis of the lattice spanned by the columns of `gens`.
pub fn lattice_basis<T: Scalar>(gens: &Matrix<T>) -> Result<Matrix<T>> {
    let s = snf(gens)?;
    let r = s.rank();
    let mut b = s.u_inv.submatrix(0..gens.rows(), 0..r);
    for j in 0..r {
        let d = s.d.get(j, j).clone();
        for i in 0..b.rows() {
            let x = b.get(i, j).mul_c(&d)?;
            b.set(i, j, x);
        }
    }
    Ok(b)
}

/// Some integer solution of `a x = b`, if one exists.
pub fn solve<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Result<Option<Vec<T>>> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!("right-hand side of length {} for {} rows", b.len(), a.rows())));
    }
    let col = Matrix::from_columns(&[b.to_vec()], a.rows())?;
    Ok(solve_matrix(a, &col)?.map(|x| x.column(0)))
}

/// Solves `a X = b` column by column; `None` if any column is unsolvable.
pub fn solve_matrix<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Option<Matrix<T>>> {
    if b.rows() != a.rows() {
        return Err(Error::Dimension(format!("right-hand side with {} rows for {} rows", b.rows(), a.rows())));
    }
    let s = snf(a)?;
    let ub = s.u.mul(b)?;
    let r = s.rank();
    let mut y = Matrix::zeros(a.cols(), b.cols());
    for j in 0..b.cols() {
        for i in r..a.rows() {
            if !ub.get(i, j).is_zero() {
                return Ok(None);
            }
        }
        for i in 0..r {
            let d = s.d.get(i, i);
            let x = ub.get(i, j);
            if !x.is_multiple_of(d) {
                return Ok(None);
            }
            y.set(i, j, x.div_c(d)?);
        }
    }
    Ok(Some(s.v.mul(&y)?))
}

/// Invariants of `span(k) / span(i)`. Every column of `i` must be an integer
/// combination of the columns of `k`; otherwise the pair is inconsistent.
pub fn subquotient_invariants<T: Scalar>(k: &Matrix<T>, i: &Matrix<T>) -> Result<AbelianGroupInvariants> {
    let basis = lattice_basis(k)?;
    let coords = solve_matrix(&basis, i)?.ok_or_else(|| {
        Error::NotInLattice("a generator of the sub-lattice is not an integer combination of the lattice basis".into())
    })?;
    cokernel_invariants(&coords)
}

/// Basis of `span(a) ∩ span(b)`.
pub fn intersect<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>> {
    let a = lattice_basis(a)?;
    let b = lattice_basis(b)?;
    let joint = a.hstack(&b.neg()?)?;
    let ker = kernel_basis(&joint)?;
    let xa = ker.submatrix(0..a.cols(), 0..ker.cols());
    lattice_basis(&a.mul(&xa)?)
}

/// Whether `span(small) ⊆ span(big)`.
pub fn contains<T: Scalar>(big: &Matrix<T>, small: &Matrix<T>) -> Result<bool> {
    Ok(solve_matrix(big, small)?.is_some())
}

pub fn same_lattice<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<bool> {
    Ok(contains(a, b)? && contains(b, a)?)
}

/// A saturated sublattice together with a left inverse of its basis, used to
/// read off coordinates of vectors known to lie in it.
#[derive(Clone, Debug)]
pub struct SaturatedBasis<T> {
    basis: Matrix<T>,
    /// `k x n`; `coords * v` gives coordinates for `v` in the lattice.
    left_inverse: Matrix<T>,
    /// `(n - k) x n`; vanishes exactly on the rational span.
    complement: Matrix<T>,
}

impl<T: Scalar> SaturatedBasis<T> {
    /// The saturation of the span of `gens`.
    pub fn from_generators(gens: &Matrix<T>) -> Result<Self> {
        let s = snf(gens)?;
        let (n, r) = (gens.rows(), s.rank());
        Ok(Self {
            basis: s.u_inv.submatrix(0..n, 0..r),
            left_inverse: s.u.submatrix(0..r, 0..n),
            complement: s.u.submatrix(r..n, 0..n),
        })
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn contains(&self, v: &[T]) -> Result<bool> {
        Ok(self.complement.mul_vec(v)?.iter().all(|x| x.is_zero()))
    }

    pub fn coordinates(&self, v: &[T]) -> Result<Vec<T>> {
        if !self.contains(v)? {
            return Err(Error::NotInLattice("vector outside the saturated lattice".into()));
        }
        self.left_inverse.mul_vec(v)
    }

    /// Coordinates of every column of `m`.
    pub fn coordinates_of(&self, m: &Matrix<T>) -> Result<Matrix<T>> {
        if !self.complement.mul(m)?.is_zero() {
            return Err(Error::NotInLattice("column outside the saturated lattice".into()));
        }
        self.left_inverse.mul(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type M = Matrix<i64>;

    #[test]
    fn cokernel_examples() {
        let g = cokernel_invariants(&M::from_i64(&[&[2]])).unwrap();
        assert_eq!(g.torsion, vec![BigInt::from(2)]);
        assert_eq!(g.free_rank, 0);
        assert_eq!(cokernel_invariants(&M::zeros(2, 0)).unwrap(), AbelianGroupInvariants::free(2));
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&M::from_i64(&[&[1, 1]])).unwrap();
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        assert!(v == vec![1, -1] || v == vec![-1, 1]);
        assert_eq!(kernel_basis(&M::identity(3)).unwrap().cols(), 0);
        // GL2: pairing with the coroot e1 - e2; kernel is the determinant.
        let k = kernel_basis(&M::from_i64(&[&[1, -1]])).unwrap();
        let v = k.column(0);
        assert!(v == vec![1, 1] || v == vec![-1, -1]);
    }

    #[test]
    fn subquotient_examples() {
        let two = subquotient_invariants(&M::identity(2), &M::from_i64(&[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(two.torsion, vec![BigInt::from(2), BigInt::from(2)]);
        assert_eq!(subquotient_invariants(&M::identity(1), &M::zeros(1, 0)).unwrap(), AbelianGroupInvariants::free(1));
        let three = subquotient_invariants(&M::from_i64(&[&[1], &[-1]]), &M::from_i64(&[&[3], &[-3]])).unwrap();
        assert_eq!(three.torsion, vec![BigInt::from(3)]);
        let bad = subquotient_invariants(&M::from_i64(&[&[2], &[0]]), &M::from_i64(&[&[1], &[0]]));
        assert!(matches!(bad, Err(Error::NotInLattice(_))));
    }

    #[test]
    fn solve_and_intersect() {
        let a = M::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(solve(&a, &[4, 9]).unwrap(), Some(vec![2, 3]));
        assert_eq!(solve(&a, &[1, 0]).unwrap(), None);
        let x = M::from_i64(&[&[2], &[0]]);
        let y = M::from_i64(&[&[3], &[0]]);
        let i = intersect(&x, &y).unwrap();
        assert!(same_lattice(&i, &M::from_i64(&[&[6], &[0]])).unwrap());
    }

    #[test]
    fn saturated_coordinates() {
        let s = SaturatedBasis::from_generators(&M::from_i64(&[&[2], &[4], &[0]])).unwrap();
        assert_eq!(s.rank(), 1);
        let c = s.coordinates(&[1, 2, 0]).unwrap();
        assert_eq!(s.basis().mul_vec(&c).unwrap(), vec![1, 2, 0]);
        assert!(s.coordinates(&[1, 0, 0]).is_err());
    }
}
