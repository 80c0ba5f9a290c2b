//! Root data with Galois action, the algebraic fundamental group `π₁` and
//! its dual complex `π₁^D = [X → X(T^sc)⟩`.
//!
//! Roots are columns in coordinates of the character lattice `X`; coroots
//! are columns in the dual basis of `X_* = Hom(X, Z)`, so the pairing is
//! `⟨x, α^∨⟩ = α^∨ᵀ x`. The simply connected character lattice `X(T^sc)` is
//! kept in fundamental-weight coordinates, where `ρ*` has rows `α_i^∨ᵀ`
//! and Γ acts by permuting the simple roots.

pub mod cartan;
mod named;
mod report;

pub use named::{from_cartan, named, norm_one_torus, quasi_trivial_torus, torus, Family, Twist};
pub use report::{invariant_report, InvariantReport, ReportOptions, LEVEL_NOTE};

use std::sync::Arc;

use crate::complexes::{ComplexMap, LatticeComplex};
use crate::error::{Error, Result};
use crate::exact_lattices::{cokernel_invariants, kernel_basis, AbelianGroupInvariants, Matrix};
use crate::finite_groups::FiniteGroup;
use crate::gmodules::{permutation_matrix, EquivariantMap, GaloisLattice};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum<T> {
    characters: GaloisLattice<T>,
    roots: Matrix<T>,
    coroots: Matrix<T>,
    /// `diagram[g][i] = j` when `g α_i = α_j`.
    diagram: Vec<Vec<usize>>,
    cartan: Matrix<T>,
    kind: String,
}

impl<T: Scalar> RootDatum<T> {
    /// Validates the datum: shapes, Cartan matrix of finite type, and that
    /// every group element permutes simple roots and coroots compatibly.
    pub fn new(characters: GaloisLattice<T>, roots: Matrix<T>, coroots: Matrix<T>) -> Result<Self> {
        let r = characters.rank();
        if roots.rows() != r || coroots.rows() != r || roots.cols() != coroots.cols() {
            return Err(Error::InvalidRootDatum(format!(
                "roots are {}x{} and coroots {}x{} for a rank-{r} lattice",
                roots.rows(),
                roots.cols(),
                coroots.rows(),
                coroots.cols()
            )));
        }
        let cartan = coroots.transpose().mul(&roots)?;
        cartan::validate_cartan(&cartan)?;
        let roots_cols = roots.columns();
        let coroots_cols = coroots.columns();
        let group = characters.group().clone();
        let mut diagram = Vec::with_capacity(group.order());
        for g in group.elements() {
            let a = characters.action(g);
            let dual = characters.action(group.inv(g)).transpose();
            let mut sigma = Vec::with_capacity(roots.cols());
            for (i, alpha) in roots_cols.iter().enumerate() {
                let image = a.mul_vec(alpha)?;
                let j = roots_cols.iter().position(|b| *b == image).ok_or_else(|| {
                    Error::InvalidRootDatum(format!("element {g} sends simple root {i} outside the simple roots"))
                })?;
                if dual.mul_vec(&coroots_cols[i])? != coroots_cols[j] {
                    return Err(Error::InvalidRootDatum(format!(
                        "element {g} sends simple root {i} to {j} but not coroot {i} to coroot {j}"
                    )));
                }
                sigma.push(j);
            }
            diagram.push(sigma);
        }
        let kind = cartan::classify(&cartan);
        Ok(Self { characters, roots, coroots, diagram, cartan, kind })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.characters.group()
    }

    pub fn characters(&self) -> &GaloisLattice<T> {
        &self.characters
    }

    pub fn rank(&self) -> usize {
        self.characters.rank()
    }

    pub fn semisimple_rank(&self) -> usize {
        self.roots.cols()
    }

    pub fn roots(&self) -> &Matrix<T> {
        &self.roots
    }

    pub fn coroots(&self) -> &Matrix<T> {
        &self.coroots
    }

    pub fn cartan(&self) -> &Matrix<T> {
        &self.cartan
    }

    /// Dynkin type such as `"A2"` or `"A1xA1"`; empty for tori.
    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn diagram_action(&self, g: usize) -> &[usize] {
        &self.diagram[g]
    }

    pub fn is_semisimple(&self) -> bool {
        self.semisimple_rank() == self.rank()
    }

    /// `ρ* : X -> X(T^sc)`, `x ↦ (⟨x, α_i^∨⟩)_i`.
    pub fn rho_star(&self) -> Matrix<T> {
        self.coroots.transpose()
    }

    /// `X(T^sc)` in fundamental-weight coordinates with the permutation action.
    pub fn weights(&self) -> GaloisLattice<T> {
        let action = self.diagram.iter().map(|s| permutation_matrix(s)).collect();
        GaloisLattice::new_unchecked(self.group().clone(), self.semisimple_rank(), action)
    }

    pub fn rho_star_map(&self) -> Result<EquivariantMap<T>> {
        EquivariantMap::new(self.characters.clone(), self.weights(), self.rho_star())
    }

    /// `π₁^D` with `X` in degree 0; tori give `X` alone.
    pub fn pi1_dual_complex(&self) -> Result<LatticeComplex<T>> {
        if self.semisimple_rank() == 0 {
            return Ok(LatticeComplex::concentrated(self.characters.clone(), 0));
        }
        Ok(LatticeComplex::two_term(&self.rho_star_map()?, 0))
    }

    pub fn pi1(&self) -> Pi1Presentation<T> {
        Pi1Presentation { cocharacters: self.characters.dual(), relations: self.coroots.clone() }
    }

    /// `U(Ḡ) = ker ρ*`, a free group.
    pub fn units_rank(&self) -> Result<usize> {
        Ok(kernel_basis(&self.rho_star())?.cols())
    }

    /// `Pic(Ḡ) = coker ρ*`.
    pub fn pic_bar(&self) -> Result<AbelianGroupInvariants> {
        cokernel_invariants(&self.rho_star())
    }

    pub fn cast<U: Scalar>(&self) -> Result<RootDatum<U>> {
        Ok(RootDatum {
            characters: self.characters.cast()?,
            roots: self.roots.cast()?,
            coroots: self.coroots.cast()?,
            diagram: self.diagram.clone(),
            cartan: self.cartan.cast()?,
            kind: self.kind.clone(),
        })
    }
}

/// `π₁ = X_* / span(coroots)` with Γ acting on `X_*` contragrediently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi1Presentation<T> {
    cocharacters: GaloisLattice<T>,
    relations: Matrix<T>,
}

impl<T: Scalar> Pi1Presentation<T> {
    pub fn cocharacters(&self) -> &GaloisLattice<T> {
        &self.cocharacters
    }

    pub fn relations(&self) -> &Matrix<T> {
        &self.relations
    }

    pub fn invariants(&self) -> Result<AbelianGroupInvariants> {
        cokernel_invariants(&self.relations)
    }

    /// `(π₁)_Γ`.
    pub fn coinvariants(&self) -> Result<AbelianGroupInvariants> {
        let r = self.relations.rows();
        let id = Matrix::identity(r);
        let mut blocks = vec![self.relations.clone()];
        for a in self.cocharacters.actions() {
            blocks.push(a.sub(&id)?);
        }
        cokernel_invariants(&Matrix::hstack_all(r, &blocks)?)
    }
}

/// A morphism `G -> G'` seen on root data: `characters` pulls characters of
/// `G'` back to `G` (`X' -> X`), and `correspondence[i]` names the simple
/// root of `G` matching simple root `i` of `G'` (or `None` when the
/// fundamental weight pulls back to zero).
#[derive(Clone, Debug)]
pub struct RootDatumMorphism<T> {
    pub source: RootDatum<T>,
    pub target: RootDatum<T>,
    pub characters: Matrix<T>,
    pub correspondence: Vec<Option<usize>>,
}

/// The map `π₁^D(G') -> π₁^D(G)` induced by a morphism `G -> G'`.
pub fn dual_complex_map<T: Scalar>(m: &RootDatumMorphism<T>) -> Result<ComplexMap<T>> {
    let (g, g2) = (&m.source, &m.target);
    if g.group() != g2.group() {
        return Err(Error::InvalidRootDatum("morphism between data over different groups".into()));
    }
    if m.characters.shape() != (g.rank(), g2.rank()) || m.correspondence.len() != g2.semisimple_rank() {
        return Err(Error::Dimension("morphism data has the wrong shape".into()));
    }
    let mut psi = Matrix::zeros(g.semisimple_rank(), g2.semisimple_rank());
    for (i, c) in m.correspondence.iter().enumerate() {
        if let Some(j) = *c {
            if j >= g.semisimple_rank() {
                return Err(Error::InvalidRootDatum(format!("correspondence sends root {i} to missing root {j}")));
            }
            psi.set(j, i, T::one());
        }
    }
    if psi.mul(&g2.rho_star())? != g.rho_star().mul(&m.characters)? {
        return Err(Error::InvalidRootDatum("character map and root correspondence are incompatible with the pairings".into()));
    }
    let source = g2.pi1_dual_complex()?;
    let target = g.pi1_dual_complex()?;
    let mut components = vec![m.characters.clone()];
    if source.hi() >= 1 || target.hi() >= 1 {
        components.push(psi);
    }
    ComplexMap::new(source, target, components)
}

#[cfg(test)]
mod tests;
