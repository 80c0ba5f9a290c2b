//! Inhomogeneous cochains and the total complex of `C^p(Γ, C^q)`.
//!
//! A cochain in `C^p(Γ, M)` is stored as a vector of length `|Γ|^p · rank M`;
//! the tuple `(g_1, ..., g_p)` has index `Σ g_k |Γ|^{p-k}` (so `g_1` is most
//! significant) and occupies coordinates `index·rank .. (index+1)·rank`.

use crate::complexes::{ComplexMap, LatticeComplex};
use crate::error::Result;
use crate::exact_lattices::Matrix;
use crate::finite_groups::{FiniteGroup, Subgroup};
use crate::gmodules::GaloisLattice;
use crate::scalar::Scalar;

fn pow(n: usize, p: usize) -> usize {
    n.pow(p as u32)
}

fn digits(mut index: usize, n: usize, p: usize) -> Vec<usize> {
    let mut d = vec![0; p];
    for k in (0..p).rev() {
        d[k] = index % n;
        index /= n;
    }
    d
}

fn tuple_index(tuple: &[usize], n: usize) -> usize {
    tuple.iter().fold(0, |acc, &g| acc * n + g)
}

/// Rank of `C^p(Γ, M)`.
pub fn cochain_rank(group: &FiniteGroup, rank: usize, p: usize) -> usize {
    pow(group.order(), p) * rank
}

fn add_block<T: Scalar>(out: &mut Matrix<T>, r0: usize, c0: usize, block: &Matrix<T>, sign: i64) -> Result<()> {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let v = block.get(i, j);
            if v.is_zero() {
                continue;
            }
            let cur = out.get(r0 + i, c0 + j);
            let next = if sign > 0 { cur.add_c(v)? } else { cur.sub_c(v)? };
            out.set(r0 + i, c0 + j, next);
        }
    }
    Ok(())
}

fn add_identity<T: Scalar>(out: &mut Matrix<T>, r0: usize, c0: usize, rank: usize, sign: i64) -> Result<()> {
    let s = T::from_int(sign);
    for k in 0..rank {
        let next = out.get(r0 + k, c0 + k).add_c(&s)?;
        out.set(r0 + k, c0 + k, next);
    }
    Ok(())
}

/// Writes the bar differential `C^p(Γ, M) -> C^{p+1}(Γ, M)` into `out` at
/// offset `(r0, c0)`, adding to what is already there.
pub(crate) fn add_bar_differential<T: Scalar>(
    out: &mut Matrix<T>,
    r0: usize,
    c0: usize,
    m: &GaloisLattice<T>,
    p: usize,
) -> Result<()> {
    let group = m.group();
    let (n, r) = (group.order(), m.rank());
    if r == 0 {
        return Ok(());
    }
    for t in 0..pow(n, p + 1) {
        let g = digits(t, n, p + 1);
        let row = r0 + t * r;
        add_block(out, row, c0 + tuple_index(&g[1..], n) * r, m.action(g[0]), 1)?;
        for i in 1..=p {
            let mut merged = Vec::with_capacity(p);
            merged.extend_from_slice(&g[..i - 1]);
            merged.push(group.mul(g[i - 1], g[i]));
            merged.extend_from_slice(&g[i + 1..]);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            add_identity(out, row, c0 + tuple_index(&merged, n) * r, r, sign)?;
        }
        let sign = if (p + 1).is_multiple_of(2) { 1 } else { -1 };
        add_identity(out, row, c0 + tuple_index(&g[..p], n) * r, r, sign)?;
    }
    Ok(())
}

/// Matrix of `d: C^p(Γ, M) -> C^{p+1}(Γ, M)`,
/// `d f(g_1..g_{p+1}) = g_1 f(g_2..) + Σ_{i=1}^p (-1)^i f(..g_i g_{i+1}..) + (-1)^{p+1} f(g_1..g_p)`.
pub fn bar_differential<T: Scalar>(m: &GaloisLattice<T>, p: usize) -> Result<Matrix<T>> {
    let g = m.group();
    let mut out = Matrix::zeros(cochain_rank(g, m.rank(), p + 1), cochain_rank(g, m.rank(), p));
    add_bar_differential(&mut out, 0, 0, m, p)?;
    Ok(out)
}

/// One summand `C^p(Γ, C^q)` of a total degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub p: usize,
    pub q: i64,
    pub offset: usize,
    pub dim: usize,
}

/// `Tot^n = ⊕_q C^{n-q}(Γ, C^q)`, summands in increasing `q`, with
/// differential `d_bar + (-1)^p d_C`.
pub struct TotalComplex<'a, T> {
    complex: &'a LatticeComplex<T>,
}

impl<'a, T: Scalar> TotalComplex<'a, T> {
    pub fn new(complex: &'a LatticeComplex<T>) -> Self {
        Self { complex }
    }

    pub fn blocks(&self, n: i64) -> Vec<Block> {
        let c = self.complex;
        let mut out = Vec::new();
        let mut offset = 0;
        for q in c.lo()..=c.hi() {
            if n - q < 0 {
                continue;
            }
            let p = (n - q) as usize;
            let dim = cochain_rank(c.group(), c.rank(q), p);
            out.push(Block { p, q, offset, dim });
            offset += dim;
        }
        out
    }

    pub fn dim(&self, n: i64) -> usize {
        self.blocks(n).iter().map(|b| b.dim).sum()
    }

    /// `D^n : Tot^n -> Tot^{n+1}`.
    pub fn differential(&self, n: i64) -> Result<Matrix<T>> {
        let c = self.complex;
        let src = self.blocks(n);
        let dst = self.blocks(n + 1);
        let mut out = Matrix::zeros(self.dim(n + 1), self.dim(n));
        let find = |q: i64| dst.iter().find(|b| b.q == q).copied();
        for b in &src {
            if b.dim == 0 {
                continue;
            }
            if let Some(t) = find(b.q) {
                add_bar_differential(&mut out, t.offset, b.offset, c.term(b.q), b.p)?;
            }
            if let Some(t) = find(b.q + 1) {
                let d = c.differential(b.q);
                let sign = if b.p % 2 == 0 { 1 } else { -1 };
                let tuples = pow(c.group().order(), b.p);
                let (rs, rt) = (d.cols(), d.rows());
                for k in 0..tuples {
                    add_block(&mut out, t.offset + k * rt, b.offset + k * rs, &d, sign)?;
                }
            }
        }
        Ok(out)
    }

    /// Ambient matrix of the cochain map `Tot^n(P) -> Tot^n(Q)` induced by `f`.
    pub fn map(f: &ComplexMap<T>, n: i64) -> Result<Matrix<T>> {
        let src = TotalComplex::new(f.source());
        let dst = TotalComplex::new(f.target());
        let (sb, db) = (src.blocks(n), dst.blocks(n));
        let mut out = Matrix::zeros(dst.dim(n), src.dim(n));
        let tuples_of = |p: usize| pow(f.source().group().order(), p);
        for b in &sb {
            let Some(t) = db.iter().find(|t| t.q == b.q) else { continue };
            let m = f.component(b.q);
            let (rs, rt) = (m.cols(), m.rows());
            for k in 0..tuples_of(b.p) {
                add_block(&mut out, t.offset + k * rt, b.offset + k * rs, &m, 1)?;
            }
        }
        Ok(out)
    }

    /// Restriction of cochains `Tot^n` over Γ to `Tot^n` over `subgroup`
    /// (the complex restricted to it), evaluating on tuples from `H^p`.
    pub fn restriction(&self, subgroup: &Subgroup, n: i64) -> Matrix<T> {
        let c = self.complex;
        let big = c.group().order();
        let small = subgroup.order();
        let src = self.blocks(n);
        let mut rows = 0;
        let mut entries = Vec::new();
        for b in &src {
            let r = c.rank(b.q);
            for local in 0..pow(small, b.p) {
                let tuple: Vec<usize> = digits(local, small, b.p).into_iter().map(|h| subgroup.elements()[h]).collect();
                let parent = tuple_index(&tuple, big);
                for k in 0..r {
                    entries.push((rows + local * r + k, b.offset + parent * r + k));
                }
            }
            rows += pow(small, b.p) * r;
        }
        let mut out = Matrix::zeros(rows, self.dim(n));
        for (i, j) in entries {
            out.set(i, j, T::one());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn degree_zero_is_augmentation() {
        let g = Arc::new(FiniteGroup::cyclic(3));
        let m = GaloisLattice::<i64>::regular(g);
        assert_eq!(bar_differential(&m, 0).unwrap(), m.augmentation_blocks().unwrap());
    }

    #[test]
    fn squares_to_zero() {
        let g = Arc::new(FiniteGroup::symmetric(3));
        let m = GaloisLattice::<i64>::regular(g);
        for p in 0..3 {
            let d0 = bar_differential(&m, p).unwrap();
            let d1 = bar_differential(&m, p + 1).unwrap();
            assert!(d1.mul(&d0).unwrap().is_zero());
        }
    }

    #[test]
    fn trivial_group_alternates() {
        let m = GaloisLattice::<i64>::trivial(Arc::new(FiniteGroup::trivial()), 2);
        assert!(bar_differential(&m, 0).unwrap().is_zero());
        assert!(bar_differential(&m, 1).unwrap().is_identity());
        assert!(bar_differential(&m, 2).unwrap().is_zero());
        assert!(bar_differential(&m, 3).unwrap().is_identity());
    }

    #[test]
    fn total_differential_squares_to_zero() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let reg = GaloisLattice::<i64>::regular(g.clone());
        let t = GaloisLattice::trivial(g, 1);
        let aug = crate::gmodules::EquivariantMap::new(reg, t, Matrix::from_i64(&[&[1, 1]])).unwrap();
        let c = LatticeComplex::two_term(&aug, 0);
        let tot = TotalComplex::new(&c);
        for n in -1..3 {
            let a = tot.differential(n).unwrap();
            let b = tot.differential(n + 1).unwrap();
            assert!(b.mul(&a).unwrap().is_zero(), "degree {n}");
        }
    }
}
