use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exact_lattices::matrix::Matrix;
use crate::exact_lattices::smith::smith_diagonal;
use crate::scalar::Scalar;

/// Isomorphism class of a finitely generated abelian group:
/// `Z^free_rank ⊕ Z/torsion[0] ⊕ Z/torsion[1] ⊕ ...` with every torsion
/// entry at least 2 and each dividing the next.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroupInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupInvariants {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self { free_rank: rank, torsion: Vec::new() }
    }

    /// Quotient of `Z^generators` by a relation lattice with the given
    /// Smith invariant factors (nonzero, in divisibility order).
    pub fn from_invariant_factors<T: Scalar>(generators: usize, factors: &[T]) -> Self {
        let torsion = factors.iter().filter(|d| !d.is_one()).map(|d| d.to_big().abs()).collect();
        Self { free_rank: generators - factors.len(), torsion }
    }

    /// Normalizes an arbitrary direct sum of cyclic groups `Z/n_i`
    /// (entries 0 mean `Z`, entries ±1 are dropped).
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Result<Self> {
        let mut free = 0;
        let mut finite = Vec::new();
        for o in orders {
            if o.is_zero() {
                free += 1;
            } else if !o.abs().is_one() {
                finite.push(o.abs());
            }
        }
        let diag = Matrix::<BigInt>::diagonal(&finite);
        let factors = smith_diagonal(&diag)?;
        let mut out = Self::from_invariant_factors(finite.len(), &factors);
        out.free_rank += free;
        Ok(out)
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of a finite group, `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().fold(BigInt::one(), |a, b| a * b))
    }

    pub fn torsion_part(&self) -> Self {
        Self { free_rank: 0, torsion: self.torsion.clone() }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let mut orders: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        orders.extend(std::iter::repeat_n(BigInt::zero(), self.free_rank + other.free_rank));
        Self::from_cyclic_orders(&orders)
    }
}

impl fmt::Display for AbelianGroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclic_orders_normalize() {
        let g = AbelianGroupInvariants::from_cyclic_orders(&big(&[2, 3, 4, 0, 1])).unwrap();
        assert_eq!(g, AbelianGroupInvariants { free_rank: 1, torsion: big(&[2, 12]) });
        assert_eq!(g.to_string(), "Z + Z/2 + Z/12");
        assert_eq!(AbelianGroupInvariants::zero().to_string(), "0");
    }

    #[test]
    fn order_and_sum() {
        let a = AbelianGroupInvariants::from_cyclic_orders(&big(&[2])).unwrap();
        let s = a.direct_sum(&a).unwrap();
        assert_eq!(s.torsion, big(&[2, 2]));
        assert_eq!(s.order(), Some(BigInt::from(4)));
        assert_eq!(AbelianGroupInvariants::free(1).order(), None);
    }
}
