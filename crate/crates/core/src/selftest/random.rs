//! Seeded generators of small Galois lattices, equivariant maps and chain
//! maps for the randomized checks.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complexes::{ComplexMap, LatticeComplex};
use crate::error::Result;
use crate::exact_lattices::{kernel_basis, Matrix};
use crate::finite_groups::{all_subgroups, FiniteGroup, Subgroup};
use crate::gmodules::{EquivariantMap, GaloisLattice};
use crate::scalar::Scalar;

/// Indecomposable-ish building blocks of rank at most `max_rank`: the trivial
/// lattice, sign characters, permutation lattices `Z[Γ/H]`, their quotients by
/// the norm vector, and the duals of those quotients.
pub fn catalog<T: Scalar>(group: &Arc<FiniteGroup>, max_rank: usize) -> Result<Vec<GaloisLattice<T>>> {
    let n = group.order();
    let mut out = vec![GaloisLattice::trivial(group.clone(), 1)];
    for h in all_subgroups(group) {
        let index = n / h.order();
        if index == 2 {
            let signs: Vec<i64> = group.elements().map(|g| if h.contains(g) { 1 } else { -1 }).collect();
            out.push(GaloisLattice::character(group.clone(), &signs)?);
        }
        if index >= 2 && index <= max_rank + 1 {
            let p = GaloisLattice::<T>::induced_trivial(&h);
            let q = p.quotient_by_fixed_vector(&vec![T::one(); index])?;
            if index <= max_rank {
                out.push(p);
            }
            out.push(q.dual());
            out.push(q);
        }
    }
    Ok(out)
}

/// A random unimodular matrix and its inverse, from a few elementary moves.
pub fn unimodular<T: Scalar, R: Rng>(rng: &mut R, n: usize) -> Result<(Matrix<T>, Matrix<T>)> {
    let mut b = Matrix::identity(n);
    let mut b_inv = Matrix::identity(n);
    if n < 2 {
        return Ok((b, b_inv));
    }
    for _ in 0..3 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = rng.gen_range(-2i64..=2);
        let mut e = Matrix::identity(n);
        e.set(i, j, T::from_int(c));
        let mut e_inv = Matrix::identity(n);
        e_inv.set(i, j, T::from_int(-c));
        b = b.mul(&e)?;
        b_inv = e_inv.mul(&b_inv)?;
    }
    Ok((b, b_inv))
}

/// A direct sum of catalog pieces with total rank between 1 and `max_rank`,
/// written in a random basis.
pub fn lattice<T: Scalar, R: Rng>(rng: &mut R, group: &Arc<FiniteGroup>, max_rank: usize) -> Result<GaloisLattice<T>> {
    let pieces = catalog::<T>(group, max_rank)?;
    let target = rng.gen_range(1..=max_rank);
    let mut m = GaloisLattice::zero(group.clone());
    while m.rank() < target {
        let fitting: Vec<&GaloisLattice<T>> = pieces.iter().filter(|p| p.rank() + m.rank() <= target).collect();
        let piece = fitting.choose(rng).expect("the trivial lattice always fits");
        m = m.direct_sum(piece)?;
    }
    let (b, b_inv) = unimodular(rng, m.rank())?;
    m.change_basis(&b, &b_inv)
}

fn small_matrix<T: Scalar, R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix<T> {
    Matrix::from_fn(rows, cols, |_, _| T::from_int(rng.gen_range(-2i64..=2)))
}

/// The group average of a random small matrix.
pub fn equivariant_map<T: Scalar, R: Rng>(
    rng: &mut R,
    source: &GaloisLattice<T>,
    target: &GaloisLattice<T>,
) -> Result<EquivariantMap<T>> {
    let m = small_matrix(rng, target.rank(), source.rank());
    EquivariantMap::average(source.clone(), target.clone(), &m)
}

/// A permutation lattice `⊕ Z[Γ/H_i]` with total rank in `1..=max_rank`.
pub fn permutation_lattice<T: Scalar, R: Rng>(rng: &mut R, group: &Arc<FiniteGroup>, max_rank: usize) -> Result<GaloisLattice<T>> {
    let subgroups: Vec<Subgroup> = all_subgroups(group);
    let mut m = GaloisLattice::zero(group.clone());
    loop {
        let fitting: Vec<&Subgroup> =
            subgroups.iter().filter(|h| group.order() / h.order() + m.rank() <= max_rank).collect();
        if fitting.is_empty() || (m.rank() > 0 && rng.gen_bool(0.5)) {
            return Ok(m);
        }
        let h = fitting.choose(rng).expect("nonempty");
        m = m.direct_sum(&GaloisLattice::induced_trivial(h))?;
    }
}

/// A random two-term complex `C^0 -> C^1` in degrees 0 and 1.
pub fn two_term_complex<T: Scalar, R: Rng>(rng: &mut R, group: &Arc<FiniteGroup>, max_rank: usize) -> Result<LatticeComplex<T>> {
    let a = lattice(rng, group, max_rank)?;
    let b = lattice(rng, group, max_rank)?;
    Ok(LatticeComplex::two_term(&equivariant_map(rng, &a, &b)?, 0))
}

/// A random chain map between two complexes: a small random combination of
/// a basis of the solutions of the equivariance and commutation equations.
pub fn chain_map<T: Scalar, R: Rng>(rng: &mut R, p: &LatticeComplex<T>, q: &LatticeComplex<T>) -> Result<ComplexMap<T>> {
    let lo = p.lo().min(q.lo());
    let hi = p.hi().max(q.hi());
    let degrees: Vec<i64> = (lo..=hi).collect();
    let shapes: Vec<(usize, usize)> = degrees.iter().map(|&i| (q.rank(i), p.rank(i))).collect();
    let offsets: Vec<usize> = shapes
        .iter()
        .scan(0, |acc, &(r, c)| {
            let o = *acc;
            *acc += r * c;
            Some(o)
        })
        .collect();
    let unknowns: usize = shapes.iter().map(|&(r, c)| r * c).sum();
    let var = |k: usize, a: usize, b: usize| offsets[k] + a * shapes[k].1 + b;
    let mut equations: Vec<Vec<T>> = Vec::new();
    let group = p.group();
    // Equivariance: Q_g f - f P_g = 0.
    for g in group.elements() {
        for (k, &i) in degrees.iter().enumerate() {
            let (pg, qg) = (p.term(i).action(g), q.term(i).action(g));
            let (r, c) = shapes[k];
            for a in 0..r {
                for b in 0..c {
                    let mut row = vec![T::zero(); unknowns];
                    for t in 0..r {
                        row[var(k, t, b)] = row[var(k, t, b)].add_c(qg.get(a, t))?;
                    }
                    for t in 0..c {
                        row[var(k, a, t)] = row[var(k, a, t)].sub_c(pg.get(t, b))?;
                    }
                    equations.push(row);
                }
            }
        }
    }
    // Commutation: f^{i+1} d_P^i - d_Q^i f^i = 0.
    for (k, &i) in degrees.iter().enumerate().take(degrees.len().saturating_sub(1)) {
        let (dp, dq) = (p.differential(i), q.differential(i));
        let (r1, c1) = shapes[k + 1];
        let (r0, c0) = shapes[k];
        for a in 0..r1 {
            for b in 0..c0 {
                let mut row = vec![T::zero(); unknowns];
                for t in 0..c1 {
                    row[var(k + 1, a, t)] = row[var(k + 1, a, t)].add_c(dp.get(t, b))?;
                }
                for t in 0..r0 {
                    row[var(k, t, b)] = row[var(k, t, b)].sub_c(dq.get(a, t))?;
                }
                equations.push(row);
            }
        }
    }
    let system = Matrix::from_rows(equations, unknowns)?;
    let basis = kernel_basis(&system)?;
    let coeffs: Vec<T> = (0..basis.cols()).map(|_| T::from_int(rng.gen_range(-2i64..=2))).collect();
    let solution = basis.mul_vec(&coeffs)?;
    let components = degrees
        .iter()
        .enumerate()
        .map(|(k, _)| {
            let (r, c) = shapes[k];
            Matrix::from_fn(r, c, |a, b| solution[var(k, a, b)].clone())
        })
        .collect();
    ComplexMap::new(p.clone(), q.clone(), components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_objects_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [FiniteGroup::cyclic(4), FiniteGroup::klein(), FiniteGroup::symmetric(3)] {
            let g = Arc::new(g);
            for _ in 0..5 {
                let m = lattice::<i64, _>(&mut rng, &g, 3).unwrap();
                assert!((1..=3).contains(&m.rank()));
                GaloisLattice::new(g.clone(), m.rank(), m.actions().to_vec()).unwrap();
                let p = two_term_complex::<i64, _>(&mut rng, &g, 3).unwrap();
                let q = two_term_complex::<i64, _>(&mut rng, &g, 3).unwrap();
                chain_map(&mut rng, &p, &q).unwrap().validate().unwrap();
                let perm = permutation_lattice::<i64, _>(&mut rng, &g, 4).unwrap();
                assert!((1..=4).contains(&perm.rank()));
            }
        }
    }
}
