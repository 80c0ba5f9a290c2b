//! Reference computations used to cross-check the main routines: invariant
//! factors from determinantal divisors (no Smith normal form), and cohomology
//! of cyclic groups from the two-periodic resolution (no cochains).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exact_lattices::{kernel_basis, subquotient_invariants, AbelianGroupInvariants, Matrix};
use crate::gmodules::GaloisLattice;
use crate::scalar::Scalar;

fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut sign = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            let f = m[i][k].clone() / m[k][k].clone();
            for j in k..n {
                let t = f.clone() * m[k][j].clone();
                m[i][j] -= t;
            }
        }
    }
    (0..n).fold(sign, |acc, i| acc * m[i][i].clone())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors of an integer matrix from its determinantal divisors
/// `d_k = gcd of all k×k minors`: the factors are `d_k / d_{k-1}`.
/// Exponential in the size; meant for matrices up to about 6×6.
pub fn determinantal_invariant_factors<T: Scalar>(a: &Matrix<T>) -> Vec<BigInt> {
    let entries: Vec<Vec<BigRational>> = (0..a.rows())
        .map(|i| (0..a.cols()).map(|j| BigRational::from_integer(a.get(i, j).to_big())).collect())
        .collect();
    let mut divisors = vec![BigInt::one()];
    for k in 1..=a.rows().min(a.cols()) {
        let mut g = BigInt::zero();
        for rows in subsets(a.rows(), k) {
            for cols in subsets(a.cols(), k) {
                let minor = rows.iter().map(|&i| cols.iter().map(|&j| entries[i][j].clone()).collect()).collect();
                g = g.gcd(&det(minor).to_integer().abs());
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
}

/// Torsion of `Z^rows / image(a)` from determinantal divisors, with unit
/// factors dropped.
pub fn cokernel_torsion_oracle<T: Scalar>(a: &Matrix<T>) -> Vec<BigInt> {
    determinantal_invariant_factors(a).into_iter().filter(|d| !d.is_one()).collect()
}

/// Rank of `Z^rows / image(a)` by rational elimination.
pub fn cokernel_free_rank_oracle<T: Scalar>(a: &Matrix<T>) -> usize {
    a.rows() - determinantal_invariant_factors(a).len()
}

/// `(H^1, H^2)` of `Z/n` (generator = element 1) acting on `m`, from the
/// periodic resolution: `H^1 = ker N / im(g - 1)`, `H^2 = ker(g - 1) / im N`
/// with `N = 1 + g + ... + g^{n-1}`.
pub fn cyclic_cohomology_oracle<T: Scalar>(m: &GaloisLattice<T>) -> Result<(AbelianGroupInvariants, AbelianGroupInvariants)> {
    let g = m.group();
    let r = m.rank();
    let id = Matrix::identity(r);
    let gen = m.action(1 % g.order());
    let mut norm = Matrix::zeros(r, r);
    let mut power = id.clone();
    for _ in 0..g.order() {
        norm = norm.add(&power)?;
        power = gen.mul(&power)?;
    }
    let minus = gen.sub(&id)?;
    let h1 = subquotient_invariants(&kernel_basis(&norm)?, &minus)?;
    let h2 = subquotient_invariants(&kernel_basis(&minus)?, &norm)?;
    Ok((h1, h2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_groups::FiniteGroup;
    use std::sync::Arc;

    #[test]
    fn determinantal_divisors() {
        let a = Matrix::<i64>::from_i64(&[&[2, 4], &[6, 8]]);
        assert_eq!(determinantal_invariant_factors(&a), vec![BigInt::from(2), BigInt::from(4)]);
        let b = Matrix::<i64>::from_i64(&[&[2, -1], &[-1, 2]]);
        assert_eq!(cokernel_torsion_oracle(&b), vec![BigInt::from(3)]);
        assert_eq!(cokernel_free_rank_oracle(&Matrix::<i64>::from_i64(&[&[1, 1]])), 0);
        assert_eq!(cokernel_free_rank_oracle(&Matrix::<i64>::zeros(2, 1)), 2);
    }

    #[test]
    fn cyclic_trivial_module() {
        let z = GaloisLattice::<i64>::trivial(Arc::new(FiniteGroup::cyclic(5)), 1);
        let (h1, h2) = cyclic_cohomology_oracle(&z).unwrap();
        assert!(h1.is_trivial());
        assert_eq!(h2.torsion, vec![BigInt::from(5)]);
    }
}
