//! Long exact sequences of distinguished triangles, and quasi-isomorphism
//! certificates.

use std::ops::RangeInclusive;

use crate::complexes::{cone, cone_triangle_maps, ComplexMap, LatticeComplex};
use crate::error::Result;
use crate::scalar::Scalar;

use super::subquotient::{is_exact_at, InducedMap, Subquotient};
use super::{hypercohomology, induced_map, CohomologyClassGroup, CohomologyConfig};

/// Outcome of [`les_check`]: one line per verified position.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LesReport {
    pub checks: Vec<(String, bool)>,
}

impl LesReport {
    pub fn is_exact(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.checks.iter().find(|(_, ok)| !ok).map(|(s, _)| s.as_str())
    }

    fn record(&mut self, label: String, ok: bool) -> bool {
        self.checks.push((label, ok));
        ok
    }
}

/// Checks the triangle `P -> Q -> <P -> Q] -> P[1]` built with the standard
/// cone; see [`les_check_on_cone`].
pub fn les_check<T: Scalar>(f: &ComplexMap<T>, range: RangeInclusive<i64>, config: &CohomologyConfig) -> Result<LesReport> {
    let c = cone(f)?;
    les_check_on_cone(f, &c, range, config)
}

/// Verifies that `c` is a complex, that the triangle maps `q ↦ (0, q)` and
/// `(p, q) ↦ p` are chain maps, and that
/// `H^i(P) -> H^i(Q) -> H^i(c) -> H^i(P[1]) -> H^i(Q[1])` is exact at the
/// three middle terms for every `i` in `range`.
pub fn les_check_on_cone<T: Scalar>(
    f: &ComplexMap<T>,
    c: &LatticeComplex<T>,
    range: RangeInclusive<i64>,
    config: &CohomologyConfig,
) -> Result<LesReport> {
    let mut report = LesReport::default();
    let ok = report.record("cone: d∘d = 0".into(), c.is_d_squared_zero()?);
    let (inclusion, projection) = cone_triangle_maps(f, c)?;
    let ok = report.record("Q -> cone is a chain map".into(), inclusion.is_chain_map()) && ok;
    let ok = report.record("cone -> P[1] is a chain map".into(), projection.is_chain_map()) && ok;
    if !ok {
        return Ok(report);
    }
    let f1 = f.shift(1)?;
    let (p, q, p1, q1) = (f.source(), f.target(), f1.source(), f1.target());
    for i in range {
        let h = |x: &LatticeComplex<T>| hypercohomology(x, i, config);
        let (hp, hq, hc, hp1, hq1) = (h(p)?, h(q)?, h(c)?, h(p1)?, h(q1)?);
        let a = induced_map(f, &hp, &hq)?;
        let b = induced_map(&inclusion, &hq, &hc)?;
        let d = induced_map(&projection, &hc, &hp1)?;
        let e = induced_map(&f1, &hp1, &hq1)?;
        let s = |g: &CohomologyClassGroup<T>| g.classes().clone();
        let exact = |x: &InducedMap<T>, sa: &Subquotient<T>, sb: &Subquotient<T>, y: &InducedMap<T>, sc: &Subquotient<T>| {
            is_exact_at(x, sa, sb, y, sc)
        };
        let r = exact(&a, &s(&hp), &s(&hq), &b, &s(&hc))?;
        report.record(format!("exact at H^{i}(Q)"), r);
        let r = exact(&b, &s(&hq), &s(&hc), &d, &s(&hp1))?;
        report.record(format!("exact at H^{i}(cone)"), r);
        let r = exact(&d, &s(&hc), &s(&hp1), &e, &s(&hq1))?;
        report.record(format!("exact at H^{i}(P[1])"), r);
    }
    Ok(report)
}

/// Accepts `f` when it induces isomorphisms on the cohomology of the
/// complexes and on `H^i(Γ, -)` for every `i <= up_to`.
pub fn is_quasi_isomorphism<T: Scalar>(f: &ComplexMap<T>, up_to: i64, config: &CohomologyConfig) -> Result<bool> {
    let (p, q) = (f.source(), f.target());
    let lo = p.lo().min(q.lo());
    let hi = p.hi().max(q.hi());
    for i in lo..=hi {
        let in_range = |c: &LatticeComplex<T>| i >= c.lo() && i <= c.hi();
        let hp = if in_range(p) { Some(p.cohomology(i)?) } else { None };
        let hq = if in_range(q) { Some(q.cohomology(i)?) } else { None };
        let ok = match (hp, hq) {
            (Some(a), Some(b)) => {
                let m = f.on_cohomology(i, &a, &b)?;
                let sa = Subquotient::cokernel(a.relations())?;
                let sb = Subquotient::cokernel(b.relations())?;
                InducedMap::new(&sa, &sb, m)?.is_bijective(&sa, &sb)?
            }
            (Some(a), None) => a.invariants().is_trivial(),
            (None, Some(b)) => b.invariants().is_trivial(),
            (None, None) => true,
        };
        if !ok {
            return Ok(false);
        }
    }
    for i in lo..=up_to {
        let hp = hypercohomology(p, i, config)?;
        let hq = hypercohomology(q, i, config)?;
        if !induced_map(f, &hp, &hq)?.is_bijective(hp.classes(), hq.classes())? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{cone_with_signs, ConeSigns};
    use crate::exact_lattices::Matrix;
    use crate::finite_groups::FiniteGroup;
    use crate::gmodules::{EquivariantMap, GaloisLattice};
    use std::sync::Arc;

    fn z(g: &Arc<FiniteGroup>, i: i64) -> LatticeComplex<i64> {
        LatticeComplex::concentrated(GaloisLattice::trivial(g.clone(), 1), i)
    }

    #[test]
    fn identity_and_multiplication() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let id = ComplexMap::identity(z(&g, 0));
        assert!(les_check(&id, 0..=2, &CohomologyConfig::default()).unwrap().is_exact());
        let three = ComplexMap::new(z(&g, 0), z(&g, 0), vec![Matrix::from_i64(&[&[3]])]).unwrap();
        assert!(les_check(&three, -1..=2, &CohomologyConfig::default()).unwrap().is_exact());
    }

    #[test]
    fn negated_target_differential_is_caught() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let reg = GaloisLattice::<i64>::regular(g.clone());
        let t = GaloisLattice::trivial(g.clone(), 1);
        let aug = EquivariantMap::new(reg, t, Matrix::from_i64(&[&[1, 1]])).unwrap();
        let q = LatticeComplex::two_term(&aug, 0);
        let f = ComplexMap::identity(q);
        let cfg = CohomologyConfig::default();
        assert!(les_check(&f, 0..=1, &cfg).unwrap().is_exact());
        let bad = cone_with_signs(&f, ConeSigns { dq: -1, ..ConeSigns::STANDARD }).unwrap();
        let report = les_check_on_cone(&f, &bad, 0..=1, &cfg).unwrap();
        assert!(!report.is_exact());
    }

    #[test]
    fn quasi_isomorphisms() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let c = z(&g, 0);
        let cfg = CohomologyConfig::default();
        assert!(is_quasi_isomorphism(&ComplexMap::identity(c.clone()), 2, &cfg).unwrap());
        let two = ComplexMap::new(c.clone(), c, vec![Matrix::from_i64(&[&[2]])]).unwrap();
        assert!(!is_quasi_isomorphism(&two, 2, &cfg).unwrap());
    }
}
