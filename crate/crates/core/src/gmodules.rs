//! Galois lattices: free Z-modules of finite rank with an action of a finite
//! group by integer matrices (acting on column vectors).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact_lattices::{cokernel_invariants, kernel_basis, AbelianGroupInvariants, Matrix};
use crate::finite_groups::{FiniteGroup, Subgroup};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisLattice<T> {
    group: Arc<FiniteGroup>,
    rank: usize,
    action: Vec<Matrix<T>>,
}

impl<T: Scalar> GaloisLattice<T> {
    /// One `rank x rank` matrix per group element, in element order.
    /// Checks the identity, the homomorphism law and invertibility over Z.
    pub fn new(group: Arc<FiniteGroup>, rank: usize, action: Vec<Matrix<T>>) -> Result<Self> {
        if action.len() != group.order() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for a group of order {}",
                action.len(),
                group.order()
            )));
        }
        for (g, a) in action.iter().enumerate() {
            if a.shape() != (rank, rank) {
                return Err(Error::InvalidModule(format!(
                    "action of element {g} is {}x{}, expected {rank}x{rank}",
                    a.rows(),
                    a.cols()
                )));
            }
        }
        if !action[0].is_identity() {
            return Err(Error::InvalidModule("identity element does not act trivially".into()));
        }
        for g in group.elements() {
            for h in group.elements() {
                if action[g].mul(&action[h])? != action[group.mul(g, h)] {
                    return Err(Error::InvalidModule(format!(
                        "homomorphism law fails at (g, h) = ({g}, {h}): action(g)action(h) != action(gh)"
                    )));
                }
            }
        }
        // With the homomorphism law, action(g^-1) is an integral inverse.
        for g in group.elements() {
            if !action[g].mul(&action[group.inv(g)])?.is_identity() {
                return Err(Error::InvalidModule(format!("action of element {g} is not invertible over Z")));
            }
        }
        Ok(Self { group, rank, action })
    }

    pub(crate) fn new_unchecked(group: Arc<FiniteGroup>, rank: usize, action: Vec<Matrix<T>>) -> Self {
        Self { group, rank, action }
    }

    pub fn trivial(group: Arc<FiniteGroup>, rank: usize) -> Self {
        let action = vec![Matrix::identity(rank); group.order()];
        Self { group, rank, action }
    }

    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        Self::trivial(group, 0)
    }

    /// The lattice `Z^degree` with basis permuted by `coset_action[g]`
    /// (`g` sends basis vector `i` to basis vector `coset_action[g][i]`).
    pub fn permutation_module(group: Arc<FiniteGroup>, coset_action: &[Vec<usize>]) -> Result<Self> {
        let degree = coset_action.first().map_or(0, |p| p.len());
        let mut action = Vec::with_capacity(coset_action.len());
        for (g, p) in coset_action.iter().enumerate() {
            let mut seen = vec![false; degree];
            if p.len() != degree || p.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::InvalidModule(format!("image of element {g} is not a permutation of 0..{degree}")));
            }
            action.push(permutation_matrix(p));
        }
        Self::new(group, degree, action)
    }

    /// `Z[G/H]` for a subgroup `H`.
    pub fn induced_trivial(subgroup: &Subgroup) -> Self {
        Self::permutation_module(subgroup.parent().clone(), &subgroup.coset_action())
            .expect("coset action is a permutation representation")
    }

    /// `Z[G]`.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        Self::induced_trivial(&Subgroup::trivial(group))
    }

    /// Rank-one module on which `g` acts by `signs[g]` (each ±1).
    pub fn character(group: Arc<FiniteGroup>, signs: &[i64]) -> Result<Self> {
        let action = signs.iter().map(|&s| Matrix::from_i64(&[&[s]])).collect();
        Self::new(group, 1, action)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn action(&self, g: usize) -> &Matrix<T> {
        &self.action[g]
    }

    pub fn actions(&self) -> &[Matrix<T>] {
        &self.action
    }

    pub fn is_trivial_action(&self) -> bool {
        self.action.iter().all(|a| a.is_identity())
    }

    /// Same lattice with `action(g)` replaced by `b^-1 action(g) b`, where
    /// `b` and `b_inv` are mutually inverse unimodular matrices.
    pub fn change_basis(&self, b: &Matrix<T>, b_inv: &Matrix<T>) -> Result<Self> {
        if !b.mul(b_inv)?.is_identity() {
            return Err(Error::InvalidModule("basis change is not unimodular".into()));
        }
        let action = self.action.iter().map(|a| b_inv.mul(a)?.mul(b)).collect::<Result<_>>()?;
        Ok(Self { group: self.group.clone(), rank: self.rank, action })
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::InvalidModule("direct sum over different groups".into()));
        }
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| Matrix::block_diag(&[a.clone(), b.clone()]))
            .collect();
        Ok(Self { group: self.group.clone(), rank: self.rank + other.rank, action })
    }

    /// The contragredient action on `Hom(M, Z)`: `g ↦ action(g^-1)^T`.
    pub fn dual(&self) -> Self {
        let action = self.group.elements().map(|g| self.action[self.group.inv(g)].transpose()).collect();
        Self { group: self.group.clone(), rank: self.rank, action }
    }

    /// Stacked `action(g) - 1` over all elements: `(|G| rank) x rank`.
    pub fn augmentation_blocks(&self) -> Result<Matrix<T>> {
        let id = Matrix::identity(self.rank);
        let blocks = self.action.iter().map(|a| a.sub(&id)).collect::<Result<Vec<_>>>()?;
        Matrix::vstack_all(self.rank, &blocks)
    }

    /// Saturated basis of `M^G`.
    pub fn invariants_sublattice(&self) -> Result<Matrix<T>> {
        kernel_basis(&self.augmentation_blocks()?)
    }

    /// `M_G = M / <(g - 1) v>`.
    pub fn coinvariants(&self) -> Result<AbelianGroupInvariants> {
        let id = Matrix::identity(self.rank);
        let blocks = self.action.iter().map(|a| a.sub(&id)).collect::<Result<Vec<_>>>()?;
        cokernel_invariants(&Matrix::hstack_all(self.rank, &blocks)?)
    }

    /// Restriction to a subgroup, reindexed so the subgroup's elements are
    /// `0..|H|` in sorted parent order.
    pub fn restrict(&self, subgroup: &Subgroup) -> Result<Self> {
        if **subgroup.parent() != *self.group {
            return Err(Error::InvalidModule("subgroup of a different group".into()));
        }
        let action = subgroup.elements().iter().map(|&h| self.action[h].clone()).collect();
        Ok(Self { group: Arc::new(subgroup.to_group()), rank: self.rank, action })
    }

    /// Quotient by the rank-one sublattice spanned by a G-fixed primitive
    /// vector whose last coordinate is ±1. The basis of the quotient is the
    /// images of the first `rank - 1` standard vectors.
    pub fn quotient_by_fixed_vector(&self, v: &[T]) -> Result<Self> {
        let n = self.rank;
        if v.len() != n || n == 0 || !v[n - 1].abs_c()?.is_one() {
            return Err(Error::InvalidModule("quotient vector must end in ±1".into()));
        }
        for (g, a) in self.action.iter().enumerate() {
            if a.mul_vec(v)? != v {
                return Err(Error::InvalidModule(format!("vector is not fixed by element {g}")));
            }
        }
        // e_{n-1} ≡ -(sum_{i<n-1} v_i e_i) / v_{n-1} modulo v.
        let last = &v[n - 1];
        let mut image_of_last = Vec::with_capacity(n - 1);
        for x in &v[..n - 1] {
            image_of_last.push(x.neg_c()?.div_c(last)?);
        }
        let project = Matrix::from_fn(n - 1, n, |i, j| {
            if j == n - 1 {
                image_of_last[i].clone()
            } else if i == j {
                T::one()
            } else {
                T::zero()
            }
        });
        let include = Matrix::from_fn(n, n - 1, |i, j| if i == j { T::one() } else { T::zero() });
        let action = self.action.iter().map(|a| project.mul(a)?.mul(&include)).collect::<Result<_>>()?;
        Self::new(self.group.clone(), n - 1, action)
    }

    pub fn cast<U: Scalar>(&self) -> Result<GaloisLattice<U>> {
        let action = self.action.iter().map(|a| a.cast()).collect::<Result<_>>()?;
        Ok(GaloisLattice { group: self.group.clone(), rank: self.rank, action })
    }
}

/// Permutation matrix sending basis vector `i` to `p[i]`.
pub fn permutation_matrix<T: Scalar>(p: &[usize]) -> Matrix<T> {
    let n = p.len();
    let mut m = Matrix::zeros(n, n);
    for (i, &j) in p.iter().enumerate() {
        m.set(j, i, T::one());
    }
    m
}

/// A G-equivariant homomorphism `source -> target`, `matrix` being
/// `target.rank x source.rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantMap<T> {
    source: GaloisLattice<T>,
    target: GaloisLattice<T>,
    matrix: Matrix<T>,
}

impl<T: Scalar> EquivariantMap<T> {
    pub fn new(source: GaloisLattice<T>, target: GaloisLattice<T>, matrix: Matrix<T>) -> Result<Self> {
        if source.group != target.group {
            return Err(Error::InvalidModule("equivariant map between lattices over different groups".into()));
        }
        if matrix.shape() != (target.rank, source.rank) {
            return Err(Error::Dimension(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.rank,
                source.rank
            )));
        }
        for g in source.group.elements() {
            if matrix.mul(source.action(g))? != target.action(g).mul(&matrix)? {
                return Err(Error::InvalidModule(format!("map is not equivariant for element {g}")));
            }
        }
        Ok(Self { source, target, matrix })
    }

    pub fn zero(source: GaloisLattice<T>, target: GaloisLattice<T>) -> Self {
        let matrix = Matrix::zeros(target.rank, source.rank);
        Self { source, target, matrix }
    }

    pub fn identity(m: GaloisLattice<T>) -> Self {
        let matrix = Matrix::identity(m.rank);
        Self { source: m.clone(), target: m, matrix }
    }

    pub fn source(&self) -> &GaloisLattice<T> {
        &self.source
    }

    pub fn target(&self) -> &GaloisLattice<T> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn compose(&self, after: &Self) -> Result<Self> {
        if self.target != after.source {
            return Err(Error::InvalidModule("composing maps with mismatched lattices".into()));
        }
        Ok(Self { source: self.source.clone(), target: after.target.clone(), matrix: after.matrix.mul(&self.matrix)? })
    }

    /// Averages `m` over the group, `sum_g target(g) m source(g^-1)`; the
    /// result is always equivariant.
    pub fn average(source: GaloisLattice<T>, target: GaloisLattice<T>, m: &Matrix<T>) -> Result<Self> {
        let g = source.group.clone();
        let mut acc = Matrix::zeros(target.rank, source.rank);
        for x in g.elements() {
            acc = acc.add(&target.action(x).mul(m)?.mul(source.action(g.inv(x)))?)?;
        }
        Self::new(source, target, acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_groups::cyclic_subgroups;
    use num_bigint::BigInt;

    fn c(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n))
    }

    #[test]
    fn validation_examples() {
        assert!(GaloisLattice::<i64>::character(c(2), &[1, -1]).is_ok());
        let bad = GaloisLattice::<i64>::new(c(2), 1, vec![Matrix::identity(1), Matrix::from_i64(&[&[2]])]);
        assert!(bad.is_err());
        let reg = GaloisLattice::<i64>::regular(c(3));
        assert_eq!(reg.rank(), 3);
        let reg2 = GaloisLattice::new(c(3), 3, reg.actions().to_vec());
        assert!(reg2.is_ok());
    }

    #[test]
    fn permutation_module_examples() {
        let triv = GaloisLattice::<i64>::permutation_module(c(3), &[vec![0], vec![0], vec![0]]).unwrap();
        assert!(triv.is_trivial_action());
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let h = cyclic_subgroups(&s3).into_iter().find(|s| s.order() == 2).unwrap();
        assert_eq!(GaloisLattice::<i64>::induced_trivial(&h).rank(), 3);
        // Not a homomorphism: Z/3 sending the generator to a transposition.
        let bad = GaloisLattice::<i64>::permutation_module(c(3), &[vec![0, 1], vec![1, 0], vec![1, 0]]);
        assert!(bad.is_err());
    }

    #[test]
    fn invariants_and_coinvariants() {
        let sign = GaloisLattice::<i64>::character(c(2), &[1, -1]).unwrap();
        assert_eq!(sign.invariants_sublattice().unwrap().cols(), 0);
        assert_eq!(sign.coinvariants().unwrap().torsion, vec![BigInt::from(2)]);
        let t = GaloisLattice::<i64>::trivial(c(2), 3);
        assert_eq!(t.invariants_sublattice().unwrap().cols(), 3);
        assert_eq!(t.coinvariants().unwrap(), AbelianGroupInvariants::free(3));
        let r2 = GaloisLattice::<i64>::regular(c(2));
        let inv = r2.invariants_sublattice().unwrap();
        assert_eq!(inv.cols(), 1);
        assert_eq!(inv.get(0, 0).abs(), 1);
        assert_eq!(inv.get(0, 0), inv.get(1, 0));
        assert_eq!(GaloisLattice::<i64>::regular(c(3)).coinvariants().unwrap(), AbelianGroupInvariants::free(1));
    }

    #[test]
    fn restriction() {
        let sign = GaloisLattice::<i64>::character(c(2), &[1, -1]).unwrap();
        let r = sign.restrict(&Subgroup::trivial(c(2))).unwrap();
        assert!(r.is_trivial_action());
        assert_eq!(sign.restrict(&Subgroup::whole(sign.group().clone())).unwrap(), sign);
    }

    #[test]
    fn quotient_by_norm() {
        let r = GaloisLattice::<i64>::regular(c(3));
        let j = r.quotient_by_fixed_vector(&[1, 1, 1]).unwrap();
        assert_eq!(j.rank(), 2);
        assert_eq!(j.invariants_sublattice().unwrap().cols(), 0);
    }

    #[test]
    fn averaging_is_equivariant() {
        let r = GaloisLattice::<i64>::regular(c(3));
        let t = GaloisLattice::<i64>::trivial(c(3), 1);
        let f = EquivariantMap::average(r, t, &Matrix::from_i64(&[&[1, 0, 0]])).unwrap();
        assert_eq!(f.matrix(), &Matrix::from_i64(&[&[1, 1, 1]]));
    }
}
