//! Bounded cochain complexes of Galois lattices.
//!
//! Sign conventions: the cone `<P -> Q]` has `P^{i+1} ⊕ Q^i` in degree `i`
//! and differential `(p, q) ↦ (-d_P p, -f p + d_Q q)`; the fibre `[P -> Q>`
//! has `P^i ⊕ Q^{i-1}` and differential `(p, q) ↦ (d_P p, f p - d_Q q)`;
//! the shift `C[n]` has `(C[n])^i = C^{i+n}` and differential `(-1)^n d`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact_lattices::{cokernel_invariants, kernel_basis, AbelianGroupInvariants, Matrix, SaturatedBasis};
use crate::finite_groups::{FiniteGroup, Subgroup};
use crate::gmodules::{EquivariantMap, GaloisLattice};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeComplex<T> {
    group: Arc<FiniteGroup>,
    lo: i64,
    terms: Vec<GaloisLattice<T>>,
    /// `diffs[k]` goes from `terms[k]` to `terms[k + 1]`.
    diffs: Vec<Matrix<T>>,
    zero: GaloisLattice<T>,
}

impl<T: Scalar> LatticeComplex<T> {
    /// Terms occupy degrees `lo, lo + 1, ...`; `diffs.len()` must be one less
    /// than `terms.len()` (or zero when there are no terms).
    pub fn new(group: Arc<FiniteGroup>, lo: i64, terms: Vec<GaloisLattice<T>>, diffs: Vec<Matrix<T>>) -> Result<Self> {
        if diffs.len() != terms.len().saturating_sub(1) {
            return Err(Error::InvalidComplex(format!("{} terms need {} differentials", terms.len(), terms.len().saturating_sub(1))));
        }
        for (k, t) in terms.iter().enumerate() {
            if *t.group() != group {
                return Err(Error::InvalidComplex(format!("term in degree {} is over a different group", lo + k as i64)));
            }
        }
        for (k, d) in diffs.iter().enumerate() {
            let deg = lo + k as i64;
            EquivariantMap::new(terms[k].clone(), terms[k + 1].clone(), d.clone())
                .map_err(|e| Error::InvalidComplex(format!("differential in degree {deg}: {e}")))?;
        }
        for k in 0..diffs.len().saturating_sub(1) {
            if !diffs[k + 1].mul(&diffs[k])?.is_zero() {
                return Err(Error::InvalidComplex(format!("d∘d != 0 starting in degree {}", lo + k as i64)));
            }
        }
        let zero = GaloisLattice::zero(group.clone());
        Ok(Self { group, lo, terms, diffs, zero })
    }

    fn from_parts_unchecked(group: Arc<FiniteGroup>, lo: i64, terms: Vec<GaloisLattice<T>>, diffs: Vec<Matrix<T>>) -> Self {
        let zero = GaloisLattice::zero(group.clone());
        Self { group, lo, terms, diffs, zero }
    }

    /// `M` placed in a single degree.
    pub fn concentrated(m: GaloisLattice<T>, degree: i64) -> Self {
        Self::from_parts_unchecked(m.group().clone(), degree, vec![m], Vec::new())
    }

    /// The two-term complex `source -> target` with the source in degree `lo`.
    pub fn two_term(f: &EquivariantMap<T>, lo: i64) -> Self {
        Self::from_parts_unchecked(
            f.source().group().clone(),
            lo,
            vec![f.source().clone(), f.target().clone()],
            vec![f.matrix().clone()],
        )
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Top degree; `lo - 1` for a complex with no terms.
    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term in degree `i`; the zero lattice outside the stored range.
    pub fn term(&self, i: i64) -> &GaloisLattice<T> {
        let k = i - self.lo;
        if k < 0 || k >= self.terms.len() as i64 {
            &self.zero
        } else {
            &self.terms[k as usize]
        }
    }

    pub fn rank(&self, i: i64) -> usize {
        self.term(i).rank()
    }

    /// `d^i : C^i -> C^{i+1}`; a zero matrix of the right shape outside the range.
    pub fn differential(&self, i: i64) -> Matrix<T> {
        let k = i - self.lo;
        if k < 0 || k >= self.diffs.len() as i64 {
            Matrix::zeros(self.rank(i + 1), self.rank(i))
        } else {
            self.diffs[k as usize].clone()
        }
    }

    pub fn terms(&self) -> &[GaloisLattice<T>] {
        &self.terms
    }

    /// Degrees `lo..=hi` as an iterator.
    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi()
    }

    /// Checks `d∘d = 0` and equivariance.
    pub fn validate(&self) -> Result<()> {
        Self::new(self.group.clone(), self.lo, self.terms.clone(), self.diffs.clone()).map(|_| ())
    }

    pub fn is_d_squared_zero(&self) -> Result<bool> {
        for i in self.lo..self.hi() {
            if !self.differential(i + 1).mul(&self.differential(i))?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Drops rank-zero terms at both ends.
    pub fn trimmed(&self) -> Self {
        let first = self.terms.iter().position(|t| t.rank() > 0);
        let Some(first) = first else {
            return Self::from_parts_unchecked(self.group.clone(), self.lo, Vec::new(), Vec::new());
        };
        let last = self.terms.iter().rposition(|t| t.rank() > 0).unwrap();
        Self::from_parts_unchecked(
            self.group.clone(),
            self.lo + first as i64,
            self.terms[first..=last].to_vec(),
            self.diffs[first..last].to_vec(),
        )
    }

    /// `C[n]`.
    pub fn shift(&self, n: i64) -> Result<Self> {
        let diffs = if n % 2 == 0 {
            self.diffs.clone()
        } else {
            self.diffs.iter().map(|d| d.neg()).collect::<Result<_>>()?
        };
        Ok(Self::from_parts_unchecked(self.group.clone(), self.lo - n, self.terms.clone(), diffs))
    }

    /// `H^i` of the complex, with the induced group action; zero outside
    /// the stored range.
    pub fn cohomology(&self, i: i64) -> Result<PresentedModule<T>> {
        let cycles = SaturatedBasis::from_generators(&kernel_basis(&self.differential(i))?)?;
        let relations = cycles.coordinates_of(&self.differential(i - 1))?;
        let action = self
            .term(i)
            .actions()
            .iter()
            .map(|a| cycles.coordinates_of(&a.mul(cycles.basis())?))
            .collect::<Result<Vec<_>>>()?;
        PresentedModule::new(self.group.clone(), cycles.basis().clone(), relations, action)
    }

    /// The same complex viewed over a subgroup.
    pub fn restrict(&self, subgroup: &Subgroup) -> Result<Self> {
        let group = Arc::new(subgroup.to_group());
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(GaloisLattice::new_unchecked(group.clone(), t.rank(), t.restrict(subgroup)?.actions().to_vec())))
            .collect::<Result<_>>()?;
        Ok(Self::from_parts_unchecked(group, self.lo, terms, self.diffs.clone()))
    }

    pub fn cast<U: Scalar>(&self) -> Result<LatticeComplex<U>> {
        let terms = self.terms.iter().map(|t| t.cast()).collect::<Result<_>>()?;
        let diffs = self.diffs.iter().map(|d| d.cast()).collect::<Result<_>>()?;
        Ok(LatticeComplex::from_parts_unchecked(self.group.clone(), self.lo, terms, diffs))
    }
}

/// A Galois module given by generators and relations: `Z^k / span(relations)`
/// with `g` acting by `action[g]` on generator coordinates (well defined
/// modulo the relations). `generators` records the generators as vectors in
/// an ambient lattice, when there is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedModule<T> {
    group: Arc<FiniteGroup>,
    generators: Matrix<T>,
    relations: Matrix<T>,
    action: Vec<Matrix<T>>,
    invariants: AbelianGroupInvariants,
}

impl<T: Scalar> PresentedModule<T> {
    pub fn new(group: Arc<FiniteGroup>, generators: Matrix<T>, relations: Matrix<T>, action: Vec<Matrix<T>>) -> Result<Self> {
        let k = generators.cols();
        if relations.rows() != k || action.len() != group.order() || action.iter().any(|a| a.shape() != (k, k)) {
            return Err(Error::Dimension("inconsistent module presentation".into()));
        }
        for (g, a) in action.iter().enumerate() {
            if !crate::exact_lattices::contains(&relations, &a.mul(&relations)?)? {
                return Err(Error::InvalidModule(format!("action of element {g} does not preserve the relations")));
            }
        }
        let invariants = cokernel_invariants(&relations)?;
        Ok(Self { group, generators, relations, action, invariants })
    }

    pub fn invariants(&self) -> &AbelianGroupInvariants {
        &self.invariants
    }

    pub fn generators(&self) -> &Matrix<T> {
        &self.generators
    }

    pub fn relations(&self) -> &Matrix<T> {
        &self.relations
    }

    pub fn action(&self, g: usize) -> &Matrix<T> {
        &self.action[g]
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// `M_G`: the quotient by the relations and all `(g - 1) x`.
    pub fn coinvariants(&self) -> Result<AbelianGroupInvariants> {
        let k = self.relations.rows();
        let id = Matrix::identity(k);
        let mut blocks = vec![self.relations.clone()];
        for a in &self.action {
            blocks.push(a.sub(&id)?);
        }
        cokernel_invariants(&Matrix::hstack_all(k, &blocks)?)
    }
}

/// A morphism of complexes; `component(i)` maps `source^i -> target^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMap<T> {
    source: LatticeComplex<T>,
    target: LatticeComplex<T>,
    lo: i64,
    components: Vec<Matrix<T>>,
}

impl<T: Scalar> ComplexMap<T> {
    /// `components` covers degrees `lo..` where `lo` is the smaller of the two
    /// complexes' bottom degrees; missing trailing degrees are zero.
    pub fn new(source: LatticeComplex<T>, target: LatticeComplex<T>, components: Vec<Matrix<T>>) -> Result<Self> {
        let lo = source.lo().min(target.lo());
        let map = Self { source, target, lo, components };
        map.validate()?;
        Ok(map)
    }

    fn span(&self) -> (i64, i64) {
        (self.source.lo().min(self.target.lo()), self.source.hi().max(self.target.hi()))
    }

    pub fn validate(&self) -> Result<()> {
        if self.source.group() != self.target.group() {
            return Err(Error::InvalidComplex("complex map between different groups".into()));
        }
        let (lo, hi) = self.span();
        for i in lo..=hi {
            let f = self.component(i);
            if f.shape() != (self.target.rank(i), self.source.rank(i)) {
                return Err(Error::Dimension(format!("component in degree {i} has the wrong shape")));
            }
            EquivariantMap::new(self.source.term(i).clone(), self.target.term(i).clone(), f.clone())
                .map_err(|e| Error::InvalidComplex(format!("component in degree {i}: {e}")))?;
        }
        for i in lo - 1..=hi {
            let lhs = self.component(i + 1).mul(&self.source.differential(i))?;
            let rhs = self.target.differential(i).mul(&self.component(i))?;
            if lhs != rhs {
                return Err(Error::InvalidComplex(format!("map does not commute with differentials in degree {i}")));
            }
        }
        Ok(())
    }

    pub fn is_chain_map(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn source(&self) -> &LatticeComplex<T> {
        &self.source
    }

    pub fn target(&self) -> &LatticeComplex<T> {
        &self.target
    }

    pub fn component(&self, i: i64) -> Matrix<T> {
        let k = i - self.lo;
        if k >= 0 && (k as usize) < self.components.len() {
            self.components[k as usize].clone()
        } else {
            Matrix::zeros(self.target.rank(i), self.source.rank(i))
        }
    }

    pub fn identity(c: LatticeComplex<T>) -> Self {
        let components = c.degrees().map(|i| Matrix::identity(c.rank(i))).collect();
        Self { lo: c.lo(), source: c.clone(), target: c, components }
    }

    pub fn zero(source: LatticeComplex<T>, target: LatticeComplex<T>) -> Self {
        let lo = source.lo().min(target.lo());
        Self { source, target, lo, components: Vec::new() }
    }

    /// Built without validation; use [`ComplexMap::validate`] when the input
    /// is not known to be a chain map.
    pub fn from_components_unchecked(source: LatticeComplex<T>, target: LatticeComplex<T>, components: Vec<Matrix<T>>) -> Self {
        let lo = source.lo().min(target.lo());
        Self { source, target, lo, components }
    }

    /// `self` followed by `after`.
    pub fn compose(&self, after: &Self) -> Result<Self> {
        if self.target != after.source {
            return Err(Error::InvalidComplex("composing complex maps with mismatched complexes".into()));
        }
        let lo = self.source.lo().min(after.target.lo());
        let hi = self.source.hi().max(after.target.hi());
        let components = (lo..=hi)
            .map(|i| after.component(i).mul(&self.component(i)))
            .collect::<Result<_>>()?;
        Ok(Self { source: self.source.clone(), target: after.target.clone(), lo, components })
    }

    /// `f[n]`: same components, reindexed.
    pub fn shift(&self, n: i64) -> Result<Self> {
        Ok(Self {
            source: self.source.shift(n)?,
            target: self.target.shift(n)?,
            lo: self.lo - n,
            components: self.components.clone(),
        })
    }

    /// Induced map on `H^i` of the complexes, in generator coordinates.
    pub fn on_cohomology(&self, i: i64, source_h: &PresentedModule<T>, target_h: &PresentedModule<T>) -> Result<Matrix<T>> {
        let cycles = SaturatedBasis::from_generators(target_h.generators())?;
        cycles.coordinates_of(&self.component(i).mul(source_h.generators())?)
    }
}

/// Block signs of the cone differential `[[dp·d_P, 0], [f·f, dq·d_Q]]`.
/// [`ConeSigns::STANDARD`] is the convention used throughout; the other
/// values exist so that sign mistakes can be exercised in tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConeSigns {
    pub dp: i64,
    pub f: i64,
    pub dq: i64,
}

impl ConeSigns {
    pub const STANDARD: Self = Self { dp: -1, f: -1, dq: 1 };
}

fn signed<T: Scalar>(m: &Matrix<T>, s: i64) -> Result<Matrix<T>> {
    if s == 1 { Ok(m.clone()) } else { m.scale(&T::from_int(s)) }
}

/// `<P -> Q]`.
pub fn cone<T: Scalar>(f: &ComplexMap<T>) -> Result<LatticeComplex<T>> {
    cone_with_signs(f, ConeSigns::STANDARD)
}

pub fn cone_with_signs<T: Scalar>(f: &ComplexMap<T>, signs: ConeSigns) -> Result<LatticeComplex<T>> {
    let (p, q) = (f.source(), f.target());
    let lo = (p.lo() - 1).min(q.lo());
    let hi = (p.hi() - 1).max(q.hi());
    let group = p.group().clone();
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    for i in lo..=hi {
        terms.push(p.term(i + 1).direct_sum(q.term(i))?);
        if i < hi {
            let (pa, qa) = (p.rank(i + 1), q.rank(i));
            let (pb, qb) = (p.rank(i + 2), q.rank(i + 1));
            let mut d = Matrix::zeros(pb + qb, pa + qa);
            d.paste(0, 0, &signed(&p.differential(i + 1), signs.dp)?);
            d.paste(pb, 0, &signed(&f.component(i + 1), signs.f)?);
            d.paste(pb, pa, &signed(&q.differential(i), signs.dq)?);
            diffs.push(d);
        }
    }
    Ok(LatticeComplex::from_parts_unchecked(group, lo, terms, diffs))
}

/// `[P -> Q>`.
pub fn fibre<T: Scalar>(f: &ComplexMap<T>) -> Result<LatticeComplex<T>> {
    let (p, q) = (f.source(), f.target());
    let lo = p.lo().min(q.lo() + 1);
    let hi = p.hi().max(q.hi() + 1);
    let group = p.group().clone();
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    for i in lo..=hi {
        terms.push(p.term(i).direct_sum(q.term(i - 1))?);
        if i < hi {
            let (pa, qa) = (p.rank(i), q.rank(i - 1));
            let (pb, qb) = (p.rank(i + 1), q.rank(i));
            let mut d = Matrix::zeros(pb + qb, pa + qa);
            d.paste(0, 0, &p.differential(i));
            d.paste(pb, 0, &f.component(i));
            d.paste(pb, pa, &q.differential(i - 1).neg()?);
            diffs.push(d);
        }
    }
    Ok(LatticeComplex::from_parts_unchecked(group, lo, terms, diffs))
}

/// The triangle maps `Q -> <P -> Q]` (`q ↦ (0, q)`) and
/// `<P -> Q] -> P[1]` (`(p, q) ↦ p`).
pub fn cone_triangle_maps<T: Scalar>(
    f: &ComplexMap<T>,
    cone: &LatticeComplex<T>,
) -> Result<(ComplexMap<T>, ComplexMap<T>)> {
    let (p, q) = (f.source(), f.target());
    let p1 = p.shift(1)?;
    let inclusion_lo = q.lo().min(cone.lo());
    let inclusion_hi = q.hi().max(cone.hi());
    let inclusion = (inclusion_lo..=inclusion_hi)
        .map(|i| {
            let (pa, qa) = (p.rank(i + 1), q.rank(i));
            let mut m = Matrix::zeros(pa + qa, qa);
            m.paste(pa, 0, &Matrix::identity(qa));
            m
        })
        .collect();
    let proj_lo = cone.lo().min(p1.lo());
    let proj_hi = cone.hi().max(p1.hi());
    let projection = (proj_lo..=proj_hi)
        .map(|i| {
            let (pa, qa) = (p.rank(i + 1), q.rank(i));
            let mut m = Matrix::zeros(pa, pa + qa);
            m.paste(0, 0, &Matrix::identity(pa));
            m
        })
        .collect();
    Ok((
        ComplexMap::from_components_unchecked(q.clone(), cone.clone(), inclusion),
        ComplexMap::from_components_unchecked(cone.clone(), p1, projection),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn triv() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::trivial())
    }

    fn scalar_map(n: i64) -> EquivariantMap<i64> {
        let z = GaloisLattice::trivial(triv(), 1);
        EquivariantMap::new(z.clone(), z, Matrix::from_i64(&[&[n]])).unwrap()
    }

    fn point(m: &LatticeComplex<i64>) -> LatticeComplex<i64> {
        m.clone()
    }

    fn z_in_degree(i: i64) -> LatticeComplex<i64> {
        LatticeComplex::concentrated(GaloisLattice::trivial(triv(), 1), i)
    }

    fn mult_map(n: i64) -> ComplexMap<i64> {
        ComplexMap::new(z_in_degree(0), z_in_degree(0), vec![Matrix::from_i64(&[&[n]])]).unwrap()
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let c = cone(&ComplexMap::identity(point(&z_in_degree(0)))).unwrap();
        c.validate().unwrap();
        for i in c.degrees() {
            assert!(c.cohomology(i).unwrap().invariants().is_trivial());
        }
    }

    #[test]
    fn cone_of_zero_source_is_target() {
        let empty = LatticeComplex::<i64>::new(triv(), 0, Vec::new(), Vec::new()).unwrap();
        let q = LatticeComplex::two_term(&scalar_map(3), 0);
        let c = cone(&ComplexMap::zero(empty.clone(), q.clone())).unwrap();
        assert_eq!(c.trimmed(), q);
        let f = fibre(&ComplexMap::zero(q.clone(), empty)).unwrap();
        assert_eq!(f.trimmed(), q);
    }

    #[test]
    fn cone_and_fibre_of_multiplication() {
        let c = cone(&mult_map(2)).unwrap();
        assert_eq!((c.lo(), c.hi()), (-1, 0));
        assert!(c.cohomology(-1).unwrap().invariants().is_trivial());
        assert_eq!(c.cohomology(0).unwrap().invariants().torsion, vec![BigInt::from(2)]);
        let f = fibre(&mult_map(5)).unwrap();
        assert_eq!((f.lo(), f.hi()), (0, 1));
        assert!(f.cohomology(0).unwrap().invariants().is_trivial());
        assert_eq!(f.cohomology(1).unwrap().invariants().torsion, vec![BigInt::from(5)]);
        assert_eq!(f.shift(1).unwrap(), c_like(&mult_map(5)));
        let fid = fibre(&ComplexMap::identity(z_in_degree(0))).unwrap();
        assert!(fid.degrees().all(|i| fid.cohomology(i).unwrap().invariants().is_trivial()));
    }

    fn c_like(f: &ComplexMap<i64>) -> LatticeComplex<i64> {
        cone(f).unwrap()
    }

    #[test]
    fn shifts() {
        let c = LatticeComplex::two_term(&scalar_map(4), 0);
        assert_eq!(c.shift(0).unwrap(), c);
        assert_eq!(c.shift(1).unwrap().shift(-1).unwrap(), c);
        let s = c.shift(1).unwrap();
        assert_eq!(s.cohomology(0).unwrap().invariants(), c.cohomology(1).unwrap().invariants());
        assert_eq!(s.differential(-1), Matrix::from_i64(&[&[-4]]));
    }

    #[test]
    fn two_term_examples() {
        let c = LatticeComplex::two_term(&scalar_map(2), 0);
        assert_eq!(c.cohomology(1).unwrap().invariants().torsion, vec![BigInt::from(2)]);
        let z = GaloisLattice::<i64>::trivial(triv(), 1);
        let to_zero = EquivariantMap::zero(z.clone(), GaloisLattice::zero(triv()));
        let c = LatticeComplex::two_term(&to_zero, 0);
        assert_eq!(c.cohomology(0).unwrap().invariants(), &AbelianGroupInvariants::free(1));
        assert!(c.cohomology(1).unwrap().invariants().is_trivial());
        assert_eq!(c.trimmed(), z_in_degree(0));
        let id = LatticeComplex::two_term(&EquivariantMap::identity(z), 0);
        assert!(id.cohomology(0).unwrap().invariants().is_trivial());
        assert!(id.cohomology(1).unwrap().invariants().is_trivial());
        assert!(id.cohomology(2).unwrap().invariants().is_trivial());
    }

    #[test]
    fn rejects_non_complex() {
        let z = GaloisLattice::<i64>::trivial(triv(), 1);
        let one = Matrix::from_i64(&[&[1]]);
        let r = LatticeComplex::new(triv(), 0, vec![z.clone(), z.clone(), z], vec![one.clone(), one]);
        assert!(matches!(r, Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn descended_action_on_cohomology() {
        // Z[Z/2] --(augmentation)--> Z; H^0 is the sign module.
        let g = Arc::new(FiniteGroup::cyclic(2));
        let reg = GaloisLattice::<i64>::regular(g.clone());
        let t = GaloisLattice::trivial(g.clone(), 1);
        let aug = EquivariantMap::new(reg, t, Matrix::from_i64(&[&[1, 1]])).unwrap();
        let c = LatticeComplex::two_term(&aug, 0);
        let h0 = c.cohomology(0).unwrap();
        assert_eq!(h0.invariants(), &AbelianGroupInvariants::free(1));
        assert_eq!(h0.action(1), &Matrix::from_i64(&[&[-1]]));
        assert_eq!(h0.coinvariants().unwrap().torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn triangle_maps_are_chain_maps() {
        let f = mult_map(3);
        let c = cone(&f).unwrap();
        let (inc, proj) = cone_triangle_maps(&f, &c).unwrap();
        inc.validate().unwrap();
        proj.validate().unwrap();
    }
}
