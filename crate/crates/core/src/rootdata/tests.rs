use super::*;
use crate::finite_groups::{FiniteGroup, Subgroup};
use crate::rootdata::named::{norm_one_torus, torus};
use num_bigint::BigInt;

fn triv() -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::trivial())
}

fn cyc(n: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(n))
}

fn rd(family: Family, n: usize) -> RootDatum<i64> {
    named(family, n, triv(), &Twist::Trivial).unwrap()
}

fn torsion(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn a1_simply_connected() {
    let x = GaloisLattice::<i64>::trivial(triv(), 1);
    let r = RootDatum::new(x, Matrix::from_i64(&[&[2]]), Matrix::from_i64(&[&[1]])).unwrap();
    assert_eq!(r.kind(), "A1");
    assert_eq!(r, rd(Family::SL, 2));
}

#[test]
fn bad_pairing_rejected() {
    let x = GaloisLattice::<i64>::trivial(triv(), 1);
    let e = RootDatum::new(x, Matrix::from_i64(&[&[3]]), Matrix::from_i64(&[&[1]])).unwrap_err();
    assert!(matches!(e, Error::InvalidRootDatum(_)));
}

#[test]
fn a2_flip_is_equivariant() {
    let r = named::<i64>(Family::SL, 3, cyc(2), &Twist::Flip).unwrap();
    assert_eq!(r.diagram_action(1), &[1, 0]);
    r.rho_star_map().unwrap();
    let p = named::<i64>(Family::PGL, 3, cyc(2), &Twist::Flip).unwrap();
    p.rho_star_map().unwrap();
}

#[test]
fn pi1_values() {
    for n in 2..6 {
        assert!(rd(Family::SL, n).pi1().invariants().unwrap().is_trivial());
        assert_eq!(rd(Family::PGL, n).pi1().invariants().unwrap().torsion, torsion(&[n as i64]));
    }
    let t = torus(GaloisLattice::<i64>::trivial(triv(), 3)).unwrap();
    assert_eq!(t.pi1().invariants().unwrap(), AbelianGroupInvariants::free(3));
    assert_eq!(rd(Family::SO, 8).pi1().invariants().unwrap().torsion, torsion(&[2]));
    assert_eq!(rd(Family::PSO, 8).pi1().invariants().unwrap().torsion, torsion(&[2, 2]));
    assert_eq!(rd(Family::PSO, 10).pi1().invariants().unwrap().torsion, torsion(&[4]));
    assert!(rd(Family::Spin, 8).pi1().invariants().unwrap().is_trivial());
    assert!(rd(Family::Sp, 4).pi1().invariants().unwrap().is_trivial());
    assert_eq!(rd(Family::PGSp, 4).pi1().invariants().unwrap().torsion, torsion(&[2]));
}

#[test]
fn dual_complexes() {
    let sl2 = rd(Family::SL, 2).pi1_dual_complex().unwrap();
    assert_eq!(sl2.differential(0), Matrix::from_i64(&[&[1]]));
    assert!(sl2.cohomology(0).unwrap().invariants().is_trivial());
    assert!(sl2.cohomology(1).unwrap().invariants().is_trivial());
    let pgl2 = rd(Family::PGL, 2).pi1_dual_complex().unwrap();
    assert_eq!(pgl2.differential(0), Matrix::from_i64(&[&[2]]));
    assert_eq!(pgl2.cohomology(1).unwrap().invariants().torsion, torsion(&[2]));
    let gl2 = rd(Family::GL, 2).pi1_dual_complex().unwrap();
    assert_eq!(gl2.cohomology(0).unwrap().invariants(), &AbelianGroupInvariants::free(1));
    assert!(gl2.cohomology(1).unwrap().invariants().is_trivial());
    let t = torus(GaloisLattice::<i64>::trivial(triv(), 2)).unwrap().pi1_dual_complex().unwrap();
    assert_eq!((t.lo(), t.hi()), (0, 0));
}

#[test]
fn norm_one_torus_of_klein() {
    let g = Arc::new(FiniteGroup::klein());
    let r = named::<i64>(Family::NormOneTorus, 0, g.clone(), &Twist::Trivial).unwrap();
    assert_eq!(r.rank(), 3);
    assert_eq!(r, norm_one_torus(&Subgroup::trivial(g)).unwrap());
}

#[test]
fn unsupported_requests() {
    assert!(matches!(named::<i64>(Family::Sp, 3, triv(), &Twist::Trivial), Err(Error::Unsupported(_))));
    assert!(matches!(named::<i64>(Family::SL, 2, cyc(2), &Twist::Flip), Err(Error::Unsupported(_))));
    assert!(named::<i64>(Family::SO, 8, Arc::new(FiniteGroup::symmetric(3)), &Twist::Triality).is_err());
    assert!("E8".parse::<Family>().is_err());
    assert_eq!("norm_one_torus".parse::<Family>().unwrap(), Family::NormOneTorus);
}

#[test]
fn triality_and_flips() {
    let s3 = Arc::new(FiniteGroup::symmetric(3));
    for f in [Family::Spin, Family::PSO] {
        let r = named::<i64>(f, 8, s3.clone(), &Twist::Triality).unwrap();
        r.rho_star_map().unwrap();
        named::<i64>(f, 8, cyc(3), &Twist::Triality).unwrap();
    }
    for n in [4, 6, 8] {
        named::<i64>(Family::SO, n, cyc(2), &Twist::Flip).unwrap();
        named::<i64>(Family::Spin, n, cyc(4), &Twist::Flip).unwrap();
    }
    named::<i64>(Family::GL, 2, cyc(2), &Twist::Flip).unwrap();
    named::<i64>(Family::GL, 3, cyc(2), &Twist::Flip).unwrap();
}

fn identity_correspondence(n: usize) -> Vec<Option<usize>> {
    (0..n).map(Some).collect()
}

#[test]
fn isogeny_maps() {
    let sl2 = rd(Family::SL, 2);
    let pgl2 = rd(Family::PGL, 2);
    let m = RootDatumMorphism {
        source: sl2.clone(),
        target: pgl2.clone(),
        characters: Matrix::from_i64(&[&[2]]),
        correspondence: vec![Some(0)],
    };
    let f = dual_complex_map(&m).unwrap();
    let h_src = f.source().cohomology(1).unwrap();
    let h_tgt = f.target().cohomology(1).unwrap();
    assert_eq!(h_src.invariants().torsion, torsion(&[2]));
    assert!(h_tgt.invariants().is_trivial());
    let bad = RootDatumMorphism { characters: Matrix::from_i64(&[&[1]]), ..m };
    assert!(dual_complex_map(&bad).is_err());

    let id = RootDatumMorphism {
        source: pgl2.clone(),
        target: pgl2.clone(),
        characters: Matrix::identity(1),
        correspondence: vec![Some(0)],
    };
    let f = dual_complex_map(&id).unwrap();
    assert_eq!(f, ComplexMap::identity(pgl2.pi1_dual_complex().unwrap()));
}

#[test]
fn gl_to_pgl_and_composition() {
    for n in 2..5 {
        let gl = rd(Family::GL, n);
        let pgl = rd(Family::PGL, n);
        let sl = rd(Family::SL, n);
        // Characters of PGL_n are root-lattice elements; pull back to Z^n.
        let to_gl = RootDatumMorphism {
            source: gl.clone(),
            target: pgl.clone(),
            characters: gl.roots().clone(),
            correspondence: identity_correspondence(n - 1),
        };
        let f = dual_complex_map(&to_gl).unwrap();
        assert_eq!(f.source().cohomology(1).unwrap().invariants().torsion, torsion(&[n as i64]));
        assert!(f.target().cohomology(1).unwrap().invariants().is_trivial());
        // SL_n -> GL_n: e_j restricts to ϖ_j - ϖ_{j-1}.
        let chars = gl.rho_star();
        let sl_to_gl = RootDatumMorphism {
            source: sl.clone(),
            target: gl.clone(),
            characters: chars.clone(),
            correspondence: identity_correspondence(n - 1),
        };
        let g = dual_complex_map(&sl_to_gl).unwrap();
        let sl_to_pgl = RootDatumMorphism {
            source: sl.clone(),
            target: pgl.clone(),
            characters: chars.mul(gl.roots()).unwrap(),
            correspondence: identity_correspondence(n - 1),
        };
        let composite = dual_complex_map(&sl_to_pgl).unwrap();
        assert_eq!(f.compose(&g).unwrap(), composite);
    }
}

#[test]
fn reports() {
    let r = invariant_report(&rd(Family::PGL, 2), &ReportOptions::default()).unwrap();
    assert_eq!(r.units_rank, 0);
    assert_eq!(r.pic_bar.torsion, torsion(&[2]));
    assert_eq!(r.pic.torsion, torsion(&[2]));
    assert!(r.br_a.is_trivial());
    assert!(r.sha2.unwrap().is_trivial());
    for n in 2..5 {
        let r = invariant_report(&rd(Family::GL, n), &ReportOptions::default()).unwrap();
        assert_eq!(r.units_rank, 1);
        assert!(r.pic_bar.is_trivial() && r.pic.is_trivial() && r.br_a.is_trivial());
    }
    for n in 2..6 {
        let t = named::<i64>(Family::NormOneTorus, 0, cyc(n), &Twist::Trivial).unwrap();
        let r = invariant_report(&t, &ReportOptions::default()).unwrap();
        assert_eq!(r.pic.torsion, torsion(&[n as i64]));
    }
}
