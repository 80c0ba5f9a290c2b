//! Group cohomology and hypercohomology of Galois lattices and complexes
//! through inhomogeneous cochains.
//!
//! Values are computed for the finite group Γ through which the action
//! factors. Cocycles in total degree `n` are found as the saturation of
//! `B^n + W`, where `W` holds the Γ-invariant cycles of the complex placed in
//! cochain degree 0; this is exact because rational cohomology of a finite
//! group vanishes in positive degrees, and it avoids building `D^n`.
//! [`CohomologyStrategy::Kernel`] computes `ker D^n` directly instead.

mod bar;
mod les;
mod subquotient;

pub use bar::{bar_differential, cochain_rank, Block, TotalComplex};
pub use les::{is_quasi_isomorphism, les_check, les_check_on_cone, LesReport};
pub use subquotient::{is_exact_at, InducedMap, Subquotient};

use crate::complexes::{ComplexMap, LatticeComplex};
use crate::error::{Error, Result};
use crate::exact_lattices::{kernel_basis, AbelianGroupInvariants, Matrix, SaturatedBasis};
use crate::finite_groups::{cyclic_subgroups, Subgroup};
use crate::gmodules::GaloisLattice;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CohomologyStrategy {
    #[default]
    Saturation,
    Kernel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CohomologyConfig {
    /// Largest cochain degree beyond the top of the complex.
    pub max_degree: usize,
    /// Largest number of matrix entries a single differential may have.
    pub budget: usize,
    pub strategy: CohomologyStrategy,
}

impl Default for CohomologyConfig {
    fn default() -> Self {
        Self { max_degree: 3, budget: 1_000_000, strategy: CohomologyStrategy::Saturation }
    }
}

/// `H^n` as cocycles modulo coboundaries. Class coordinates are coordinates
/// with respect to the cocycle basis.
#[derive(Clone, Debug)]
pub struct CohomologyClassGroup<T> {
    degree: i64,
    cocycles: SaturatedBasis<T>,
    classes: Subquotient<T>,
}

impl<T: Scalar> CohomologyClassGroup<T> {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn invariants(&self) -> &AbelianGroupInvariants {
        self.classes.invariants()
    }

    /// Basis of the cocycle lattice inside `Tot^n`.
    pub fn cocycles(&self) -> &Matrix<T> {
        self.cocycles.basis()
    }

    /// Coboundaries in cocycle coordinates.
    pub fn relations(&self) -> &Matrix<T> {
        self.classes.relations()
    }

    pub fn classes(&self) -> &Subquotient<T> {
        &self.classes
    }

    /// Cocycle coordinates of ambient cochains that are cocycles.
    pub fn coordinates_of(&self, cochains: &Matrix<T>) -> Result<Matrix<T>> {
        self.cocycles.coordinates_of(cochains)
    }
}

fn check_budget(entries: usize, budget: usize) -> Result<()> {
    if entries > budget {
        Err(Error::BudgetExceeded { entries, budget })
    } else {
        Ok(())
    }
}

/// `H^i(Γ, C)`, the cohomology of the total complex of `C^p(Γ, C^q)`.
/// Degrees below the bottom of `C` give 0.
pub fn hypercohomology<T: Scalar>(c: &LatticeComplex<T>, i: i64, config: &CohomologyConfig) -> Result<CohomologyClassGroup<T>> {
    let top = c.hi().max(c.lo()) + config.max_degree as i64;
    if i > top {
        return Err(Error::DegreeOutOfRange { degree: i, lo: c.lo(), hi: top });
    }
    let tot = TotalComplex::new(c);
    let (dim, prev) = (tot.dim(i), tot.dim(i - 1));
    check_budget(dim * prev, config.budget)?;
    let incoming = tot.differential(i - 1)?;
    let cocycles = match config.strategy {
        CohomologyStrategy::Kernel => {
            check_budget(tot.dim(i + 1) * dim, config.budget)?;
            SaturatedBasis::from_generators(&kernel_basis(&tot.differential(i)?)?)?
        }
        CohomologyStrategy::Saturation => {
            let mut gens = incoming.clone();
            if i >= c.lo() && i <= c.hi() {
                let term = c.term(i);
                let inv = term.invariants_sublattice()?;
                let cycles = inv.mul(&kernel_basis(&c.differential(i).mul(&inv)?)?)?;
                let block = tot.blocks(i).into_iter().find(|b| b.q == i).expect("p = 0 block");
                let mut w = Matrix::zeros(dim, cycles.cols());
                w.paste(block.offset, 0, &cycles);
                gens = gens.hstack(&w)?;
            }
            SaturatedBasis::from_generators(&gens)?
        }
    };
    let relations = cocycles.coordinates_of(&incoming)?;
    let classes = Subquotient::cokernel(&relations)?;
    Ok(CohomologyClassGroup { degree: i, cocycles, classes })
}

/// `H^i(Γ, M)` for `0 <= i <= max_degree`.
pub fn group_cohomology<T: Scalar>(m: &GaloisLattice<T>, i: i64, config: &CohomologyConfig) -> Result<CohomologyClassGroup<T>> {
    if i < 0 || i > config.max_degree as i64 {
        return Err(Error::DegreeOutOfRange { degree: i, lo: 0, hi: config.max_degree as i64 });
    }
    hypercohomology(&LatticeComplex::concentrated(m.clone(), 0), i, config)
}

/// Class-level matrix of the map on `H^i` induced by a complex map.
pub fn induced_map<T: Scalar>(
    f: &ComplexMap<T>,
    source: &CohomologyClassGroup<T>,
    target: &CohomologyClassGroup<T>,
) -> Result<InducedMap<T>> {
    let ambient = TotalComplex::map(f, source.degree)?;
    let m = target.coordinates_of(&ambient.mul(source.cocycles())?)?;
    InducedMap::new(&source.classes, &target.classes, m)
}

/// `H^i(Γ, C) -> H^i(H, C)`.
#[derive(Clone, Debug)]
pub struct RestrictionMap<T> {
    pub source: CohomologyClassGroup<T>,
    pub target: CohomologyClassGroup<T>,
    pub map: InducedMap<T>,
}

fn restrict_classes<T: Scalar>(
    c: &LatticeComplex<T>,
    source: &CohomologyClassGroup<T>,
    subgroup: &Subgroup,
    config: &CohomologyConfig,
) -> Result<(CohomologyClassGroup<T>, InducedMap<T>)> {
    let i = source.degree;
    let restricted = c.restrict(subgroup)?;
    let target = hypercohomology(&restricted, i, config)?;
    let sel = TotalComplex::new(c).restriction(subgroup, i);
    let m = target.coordinates_of(&sel.mul(source.cocycles())?)?;
    let map = InducedMap::new(&source.classes, &target.classes, m)?;
    Ok((target, map))
}

pub fn restriction_map<T: Scalar>(
    c: &LatticeComplex<T>,
    subgroup: &Subgroup,
    i: i64,
    config: &CohomologyConfig,
) -> Result<RestrictionMap<T>> {
    if **subgroup.parent() != **c.group() {
        return Err(Error::InvalidGroup("subgroup of a different group".into()));
    }
    let source = hypercohomology(c, i, config)?;
    let (target, map) = restrict_classes(c, &source, subgroup, config)?;
    Ok(RestrictionMap { source, target, map })
}

/// `Ш^i_ω`: classes restricting to zero on every cyclic subgroup, as a
/// subquotient of the cocycle lattice of `H^i`.
#[derive(Clone, Debug)]
pub struct ShaOmega<T> {
    pub cohomology: CohomologyClassGroup<T>,
    pub kernel: Subquotient<T>,
}

impl<T: Scalar> ShaOmega<T> {
    pub fn invariants(&self) -> &AbelianGroupInvariants {
        self.kernel.invariants()
    }
}

pub fn sha_omega_classes<T: Scalar>(c: &LatticeComplex<T>, i: i64, config: &CohomologyConfig) -> Result<ShaOmega<T>> {
    let cohomology = hypercohomology(c, i, config)?;
    let k = cohomology.classes.ambient_dim();
    let mut maps = Vec::new();
    for sub in cyclic_subgroups(c.group()) {
        let (target, map) = restrict_classes(c, &cohomology, &sub, config)?;
        maps.push((target, map));
    }
    // x ∈ K iff for every γ there is y_γ with M_γ x = R_γ y_γ.
    let rows: usize = maps.iter().map(|(t, _)| t.classes.ambient_dim()).sum();
    let cols: usize = k + maps.iter().map(|(t, _)| t.relations().cols()).sum::<usize>();
    let mut joint = Matrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, k);
    for (target, map) in &maps {
        joint.paste(r0, 0, map.matrix());
        joint.paste(r0, c0, &target.relations().neg()?);
        r0 += target.classes.ambient_dim();
        c0 += target.relations().cols();
    }
    let ker = kernel_basis(&joint)?;
    let sub = ker.submatrix(0..k, 0..ker.cols());
    let kernel = Subquotient::new(&sub, cohomology.relations())?;
    Ok(ShaOmega { cohomology, kernel })
}

pub fn sha_omega<T: Scalar>(c: &LatticeComplex<T>, i: i64, config: &CohomologyConfig) -> Result<AbelianGroupInvariants> {
    Ok(sha_omega_classes(c, i, config)?.invariants().clone())
}

/// Invariants of `H^i(Γ, M)` for a lattice.
pub fn group_cohomology_invariants<T: Scalar>(m: &GaloisLattice<T>, i: i64, config: &CohomologyConfig) -> Result<AbelianGroupInvariants> {
    Ok(group_cohomology(m, i, config)?.invariants().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_groups::FiniteGroup;
    use std::sync::Arc;
    use crate::gmodules::EquivariantMap;
    use num_bigint::BigInt;

    fn cfg() -> CohomologyConfig {
        CohomologyConfig::default()
    }

    fn torsion(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn sign_module_of_order_two() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let m = GaloisLattice::<i64>::character(g, &[1, -1]).unwrap();
        assert!(group_cohomology_invariants(&m, 0, &cfg()).unwrap().is_trivial());
        assert_eq!(group_cohomology_invariants(&m, 1, &cfg()).unwrap().torsion, torsion(&[2]));
        assert!(group_cohomology_invariants(&m, 2, &cfg()).unwrap().is_trivial());
    }

    #[test]
    fn trivial_cyclic_coefficients() {
        for n in 2..5 {
            let g = Arc::new(FiniteGroup::cyclic(n));
            let z = GaloisLattice::<i64>::trivial(g, 1);
            assert_eq!(group_cohomology_invariants(&z, 0, &cfg()).unwrap(), AbelianGroupInvariants::free(1));
            assert!(group_cohomology_invariants(&z, 1, &cfg()).unwrap().is_trivial());
            assert_eq!(group_cohomology_invariants(&z, 2, &cfg()).unwrap().torsion, torsion(&[n as i64]));
        }
    }

    #[test]
    fn strategies_agree() {
        let g = Arc::new(FiniteGroup::klein());
        let reg = GaloisLattice::<i64>::regular(g.clone());
        let t = GaloisLattice::trivial(g, 1);
        let aug = EquivariantMap::new(reg, t, Matrix::from_i64(&[&[1, 1, 1, 1]])).unwrap();
        let c = LatticeComplex::two_term(&aug, 0);
        let direct = CohomologyConfig { strategy: CohomologyStrategy::Kernel, ..cfg() };
        for i in 0..4 {
            let a = hypercohomology(&c, i, &cfg()).unwrap();
            let b = hypercohomology(&c, i, &direct).unwrap();
            assert_eq!(a.invariants(), b.invariants(), "degree {i}");
        }
    }

    #[test]
    fn trivial_group_is_a_point() {
        let g = Arc::new(FiniteGroup::trivial());
        let z = GaloisLattice::<i64>::trivial(g, 2);
        assert_eq!(group_cohomology_invariants(&z, 0, &cfg()).unwrap(), AbelianGroupInvariants::free(2));
        for i in 1..4 {
            assert!(group_cohomology_invariants(&z, i, &cfg()).unwrap().is_trivial());
        }
    }

    #[test]
    fn degree_and_budget_guards() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let z = GaloisLattice::<i64>::trivial(g, 1);
        assert!(matches!(group_cohomology(&z, 4, &cfg()), Err(Error::DegreeOutOfRange { .. })));
        let tight = CohomologyConfig { budget: 3, ..cfg() };
        assert!(matches!(group_cohomology(&z, 2, &tight), Err(Error::BudgetExceeded { .. })));
        let c = LatticeComplex::concentrated(z, 0);
        assert!(hypercohomology(&c, -2, &cfg()).unwrap().invariants().is_trivial());
    }

    #[test]
    fn restriction_to_whole_and_trivial() {
        let g = Arc::new(FiniteGroup::cyclic(3));
        let c = LatticeComplex::concentrated(GaloisLattice::<i64>::trivial(g.clone(), 1), 0);
        let r = restriction_map(&c, &Subgroup::whole(g.clone()), 2, &cfg()).unwrap();
        assert!(r.map.is_bijective(r.source.classes(), r.target.classes()).unwrap());
        let r = restriction_map(&c, &Subgroup::trivial(g), 2, &cfg()).unwrap();
        assert!(r.target.invariants().is_trivial());
    }
}
