//! The ten acceptance checks.

use std::sync::Arc;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::oracles::{cokernel_free_rank_oracle, cokernel_torsion_oracle, cyclic_cohomology_oracle};
use super::random;
use crate::cohomology::{
    group_cohomology, hypercohomology, induced_map, les_check, les_check_on_cone, restriction_map, sha_omega_classes, CohomologyConfig,
    CohomologyStrategy, InducedMap,
};
use crate::complexes::{cone_with_signs, ComplexMap, ConeSigns, LatticeComplex};
use crate::error::Result;
use crate::exact_lattices::{contains, AbelianGroupInvariants, Matrix};
use crate::finite_groups::{all_subgroups, cyclic_subgroups, FiniteGroup, Subgroup};
use crate::gmodules::GaloisLattice;
use crate::rootdata::{invariant_report, named, norm_one_torus, Family, ReportOptions, RootDatum, Twist};
use crate::scalar::Scalar;

/// `Ok(detail)` when the check holds, `Err(reason)` when it does not.
pub type Outcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Ok(Err(format!($($fmt)+)));
        }
    };
}

fn cyclic_torsion(orders: &[i64]) -> AbelianGroupInvariants {
    AbelianGroupInvariants { free_rank: 0, torsion: orders.iter().map(|&d| BigInt::from(d)).collect() }
}

fn g(group: FiniteGroup) -> Arc<FiniteGroup> {
    Arc::new(group)
}

fn label(family: Family, n: usize, twist: &str) -> String {
    if twist.is_empty() { format!("{family}{n}") } else { format!("{family}{n} ({twist})") }
}

/// π₁^D of simply connected groups is acyclic.
pub fn simply_connected<T: Scalar>(cfg: &CohomologyConfig) -> Result<Outcome> {
    let triv = g(FiniteGroup::trivial());
    let z2 = g(FiniteGroup::cyclic(2));
    let mut cases: Vec<(String, RootDatum<T>)> = Vec::new();
    for n in 2..=5 {
        cases.push((label(Family::SL, n, ""), named(Family::SL, n, triv.clone(), &Twist::Trivial)?));
    }
    for (f, n) in [(Family::Sp, 4), (Family::Spin, 5), (Family::Spin, 8)] {
        cases.push((label(f, n, ""), named(f, n, triv.clone(), &Twist::Trivial)?));
    }
    for n in [3, 4] {
        cases.push((label(Family::SL, n, "quasi-split"), named(Family::SL, n, z2.clone(), &Twist::Flip)?));
    }
    for (name, rd) in &cases {
        let c = rd.pi1_dual_complex()?;
        for i in 0..=1 {
            let h = c.cohomology(i)?;
            ensure!(h.invariants().is_trivial(), "{name}: H^{i}(π₁^D) = {}", h.invariants());
            let hh = hypercohomology(&c, i, cfg)?;
            ensure!(hh.invariants().is_trivial(), "{name}: H^{i}(Γ, π₁^D) = {}", hh.invariants());
        }
        ensure!(rd.pi1().invariants()?.is_trivial(), "{name}: π₁ is not trivial");
    }
    Ok(Ok(format!("{} groups", cases.len())))
}

/// `coker ρ*` against determinantal divisors and the expected centre.
pub fn pic_bar_is_centre_dual<T: Scalar>(_cfg: &CohomologyConfig) -> Result<Outcome> {
    let triv = g(FiniteGroup::trivial());
    let mut cases: Vec<(Family, usize, Vec<i64>)> = (2..=6).map(|n| (Family::PGL, n, vec![n as i64])).collect();
    cases.extend((3..=7).map(|n| (Family::SO, n, vec![2])));
    cases.push((Family::PGSp, 4, vec![2]));
    cases.push((Family::SO, 8, vec![2]));
    cases.push((Family::PSO, 8, vec![2, 2]));
    cases.push((Family::PSO, 10, vec![4]));
    for (family, n, expected) in &cases {
        let rd: RootDatum<T> = named(*family, *n, triv.clone(), &Twist::Trivial)?;
        let name = label(*family, *n, "");
        let pic = rd.pic_bar()?;
        let oracle = cokernel_torsion_oracle(&rd.rho_star());
        ensure!(cokernel_free_rank_oracle(&rd.rho_star()) == 0 && pic.free_rank == 0, "{name}: coker ρ* is infinite");
        ensure!(pic.torsion == oracle, "{name}: Smith form gives {pic}, determinantal divisors give {oracle:?}");
        ensure!(pic == cyclic_torsion(expected), "{name}: coker ρ* = {pic}, expected {}", cyclic_torsion(expected));
    }
    Ok(Ok(format!("{} groups", cases.len())))
}

pub fn gl_profile<T: Scalar>(cfg: &CohomologyConfig) -> Result<Outcome> {
    let triv = g(FiniteGroup::trivial());
    let opts = ReportOptions { config: *cfg, sha: false };
    for n in 2..=4 {
        let rd: RootDatum<T> = named(Family::GL, n, triv.clone(), &Twist::Trivial)?;
        let r = invariant_report(&rd, &opts)?;
        ensure!(r.units_rank == 1, "GL{n}: U rank {}", r.units_rank);
        ensure!(r.pic_bar.is_trivial(), "GL{n}: Pic(Ḡ) = {}", r.pic_bar);
        ensure!(r.pic.is_trivial(), "GL{n}: Pic(G) = {}", r.pic);
        ensure!(r.br_a.is_trivial(), "GL{n}: Br_a(G) = {}", r.br_a);
    }
    Ok(Ok("GL2..GL4".into()))
}

pub fn cyclic_norm_one_torus<T: Scalar>(cfg: &CohomologyConfig) -> Result<Outcome> {
    for n in 2..=6 {
        let group = g(FiniteGroup::cyclic(n));
        let rd: RootDatum<T> = norm_one_torus(&Subgroup::trivial(group.clone()))?;
        let h1 = group_cohomology(rd.characters(), 1, cfg)?.invariants().clone();
        let z = GaloisLattice::<T>::trivial(group.clone(), 1);
        let (_, h2_z) = cyclic_cohomology_oracle(&z)?;
        let (h1_oracle, _) = cyclic_cohomology_oracle(rd.characters())?;
        let expected = cyclic_torsion(&[n as i64]);
        ensure!(h1 == expected, "Z/{n}: H^1(Γ, X) = {h1}");
        ensure!(h2_z == expected, "Z/{n}: oracle H^2(Γ, Z) = {h2_z}");
        ensure!(h1_oracle == h1, "Z/{n}: periodic resolution gives H^1 = {h1_oracle}");
    }
    Ok(Ok("n = 2..6".into()))
}

pub fn biquadratic_sha<T: Scalar>(cfg: &CohomologyConfig) -> Result<Outcome> {
    let klein = g(FiniteGroup::klein());
    let rd: RootDatum<T> = norm_one_torus(&Subgroup::trivial(klein.clone()))?;
    let j = LatticeComplex::concentrated(rd.characters().clone(), 0);
    let sha = sha_omega_classes(&j, 2, cfg)?;
    ensure!(*sha.invariants() == cyclic_torsion(&[2]), "Ш²_ω = {}", sha.invariants());
    for gamma in cyclic_subgroups(&klein).into_iter().filter(|s| s.order() == 2) {
        let r = restriction_map(&j, &gamma, 2, cfg)?;
        let image = r.map.matrix().mul(sha.kernel.sub())?;
        ensure!(contains(r.target.relations(), &image)?, "restriction to {:?} does not kill Ш", gamma.elements());
    }
    let direct = CohomologyConfig { strategy: CohomologyStrategy::Kernel, ..*cfg };
    let z = GaloisLattice::<T>::trivial(klein.clone(), 1);
    let h3_z = group_cohomology(&z, 3, &direct)?.invariants().clone();
    let h2_j = group_cohomology(rd.characters(), 2, &direct)?.invariants().clone();
    ensure!(h2_j == h3_z, "H^2(Γ, J) = {h2_j} but H^3(Γ, Z) = {h3_z}");
    for gamma in cyclic_subgroups(&klein) {
        let zg = GaloisLattice::<T>::trivial(g(gamma.to_group()), 1);
        let h = group_cohomology(&zg, 3, &direct)?;
        ensure!(h.invariants().is_trivial(), "H^3 of a cyclic subgroup is {}", h.invariants());
    }
    ensure!(*sha.invariants() == h2_j, "Ш²_ω = {} differs from H^2 = {h2_j}", sha.invariants());
    Ok(Ok(format!("Ш²_ω = {}", sha.invariants())))
}

pub fn permutation_laws<T: Scalar>(cfg: &CohomologyConfig) -> Result<Outcome> {
    let mut count = 0;
    for (name, group) in FiniteGroup::presets(8) {
        let group = g(group);
        for h in all_subgroups(&group) {
            let p = GaloisLattice::<T>::induced_trivial(&h);
            let c = LatticeComplex::concentrated(p.clone(), 0);
            let h1 = group_cohomology(&p, 1, cfg)?;
            ensure!(h1.invariants().is_trivial(), "{name}, H = {:?}: H^1 = {}", h.elements(), h1.invariants());
            let sha = sha_omega_classes(&c, 2, cfg)?;
            ensure!(sha.invariants().is_trivial(), "{name}, H = {:?}: Ш² = {}", h.elements(), sha.invariants());
            let zh = GaloisLattice::<T>::trivial(g(h.to_group()), 1);
            for i in 0..=2 {
                let lhs = if i == 1 { h1.invariants().clone() } else { group_cohomology(&p, i, cfg)?.invariants().clone() };
                let lhs = if i == 2 { sha.cohomology.invariants().clone() } else { lhs };
                let rhs = group_cohomology(&zh, i, cfg)?.invariants().clone();
                ensure!(lhs == rhs, "{name}, H = {:?}: H^{i}(Γ, Z[Γ/H]) = {lhs}, H^{i}(H, Z) = {rhs}", h.elements());
            }
            count += 1;
        }
    }
    Ok(Ok(format!("{count} (Γ, H) pairs")))
}

fn sign_groups() -> Vec<Arc<FiniteGroup>> {
    vec![
        g(FiniteGroup::cyclic(2)),
        g(FiniteGroup::cyclic(3)),
        g(FiniteGroup::cyclic(4)),
        g(FiniteGroup::klein()),
        g(FiniteGroup::symmetric(3)),
    ]
}

pub const SIGN_SEED: u64 = 0x5167_0001;
pub const COMPACTIFICATION_SEED: u64 = 0x5167_0002;
pub const RESOLUTION_SEED: u64 = 0x5167_0003;

pub fn sign_conventions<T: Scalar>(cfg: &CohomologyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(SIGN_SEED);
    let groups = sign_groups();
    let mut caught = 0;
    for k in 0..50 {
        let group = &groups[k % groups.len()];
        let p = random::two_term_complex::<T, _>(&mut rng, group, 3)?;
        let q = random::two_term_complex::<T, _>(&mut rng, group, 3)?;
        let f = random::chain_map(&mut rng, &p, &q)?;
        let report = les_check(&f, -1..=2, cfg)?;
        ensure!(report.is_exact(), "case {k}: {}", report.first_failure().unwrap_or("?"));
        let bad = cone_with_signs(&f, ConeSigns { dq: -ConeSigns::STANDARD.dq, ..ConeSigns::STANDARD })?;
        if !les_check_on_cone(&f, &bad, -1..=2, cfg)?.is_exact() {
            caught += 1;
        }
    }
    ensure!(caught > 0, "the sign mutation went unnoticed in all 50 cases");
    Ok(Ok(format!("50 maps exact; mutation caught in {caught}")))
}

fn compactification_groups() -> Vec<Arc<FiniteGroup>> {
    let mut v = sign_groups();
    v.push(g(FiniteGroup::dihedral(4)));
    v.push(g(FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4))));
    v
}

pub fn compactification_model<T: Scalar>(cfg: &CohomologyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(COMPACTIFICATION_SEED);
    let groups = compactification_groups();
    let mut nontrivial = 0;
    for k in 0..50 {
        let group = &groups[k % groups.len()];
        let p = random::permutation_lattice::<T, _>(&mut rng, group, 4)?;
        let n = random::lattice::<T, _>(&mut rng, group, 3)?;
        let phi = random::equivariant_map(&mut rng, &p, &n)?;
        let f = LatticeComplex::two_term(&phi, 0);
        let n1 = LatticeComplex::concentrated(n.clone(), 1);
        let inclusion = ComplexMap::new(n1.clone(), f.clone(), vec![Matrix::zeros(p.rank(), 0), Matrix::identity(n.rank())])?;
        let h1 = hypercohomology(&n1, 2, cfg)?;
        let h2 = hypercohomology(&f, 2, cfg)?;
        let map = induced_map(&inclusion, &h1, &h2)?;
        ensure!(map.is_injective(h1.classes(), h2.classes())?, "case {k}: H^1(Γ, N) -> H^2(Γ, F) is not injective");
        let sha_n = sha_omega_classes(&n1, 2, cfg)?;
        let sha_f = sha_omega_classes(&f, 2, cfg)?;
        ensure!(
            sha_n.invariants() == sha_f.invariants(),
            "case {k}: Ш¹(N) = {} but Ш²(F) = {}",
            sha_n.invariants(),
            sha_f.invariants()
        );
        let restricted = InducedMap::new(&sha_n.kernel, &sha_f.kernel, map.matrix().clone())?;
        ensure!(restricted.is_bijective(&sha_n.kernel, &sha_f.kernel)?, "case {k}: Ш¹(N) -> Ш²(F) is not bijective");
        if !sha_n.invariants().is_trivial() {
            nontrivial += 1;
        }
    }
    Ok(Ok(format!("50 cases, {nontrivial} with nonzero Ш")))
}

/// Semisimple presets with every twist the constructors offer.
pub fn semisimple_presets<T: Scalar>() -> Result<Vec<(String, RootDatum<T>)>> {
    let triv = g(FiniteGroup::trivial());
    let mut out = Vec::new();
    let mut plain: Vec<(Family, usize)> = Vec::new();
    plain.extend((2..=5).map(|n| (Family::SL, n)));
    plain.extend((2..=6).map(|n| (Family::PGL, n)));
    plain.extend([(Family::Sp, 4), (Family::PGSp, 4)]);
    plain.extend((3..=8).map(|n| (Family::SO, n)));
    plain.extend((3..=8).map(|n| (Family::Spin, n)));
    plain.extend([(Family::PSO, 8), (Family::PSO, 10)]);
    for &(f, n) in &plain {
        out.push((label(f, n, ""), named(f, n, triv.clone(), &Twist::Trivial)?));
    }
    for order in [2, 4] {
        let group = g(FiniteGroup::cyclic(order));
        for &(f, n) in &plain {
            if let Ok(rd) = named(f, n, group.clone(), &Twist::Flip) {
                out.push((label(f, n, &format!("flip, Z/{order}")), rd));
            }
        }
    }
    for (gname, group) in [("Z/3", g(FiniteGroup::cyclic(3))), ("S3", g(FiniteGroup::symmetric(3)))] {
        for f in [Family::Spin, Family::PSO] {
            out.push((label(f, 8, &format!("triality, {gname}")), named(f, 8, group.clone(), &Twist::Triality)?));
        }
    }
    Ok(out)
}

pub fn kottwitz<T: Scalar>(cfg: &CohomologyConfig) -> Result<Outcome> {
    let presets = semisimple_presets::<T>()?;
    for (name, rd) in &presets {
        let h1 = hypercohomology(&rd.pi1_dual_complex()?, 1, cfg)?.invariants().clone();
        let coinv = rd.pi1().coinvariants()?;
        ensure!(coinv.is_finite(), "{name}: (π₁)_Γ is infinite");
        ensure!(h1 == coinv, "{name}: H^1(Γ, π₁^D) = {h1} but (π₁)_Γ = {coinv}");
    }
    Ok(Ok(format!("{} twisted presets", presets.len())))
}

pub fn cyclic_resolution<T: Scalar>(cfg: &CohomologyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(RESOLUTION_SEED);
    let mut nonzero = 0;
    for n in 2..=6 {
        let group = g(FiniteGroup::cyclic(n));
        for k in 0..20 {
            let m = random::lattice::<T, _>(&mut rng, &group, 3)?;
            let (o1, o2) = cyclic_cohomology_oracle(&m)?;
            let h1 = group_cohomology(&m, 1, cfg)?.invariants().clone();
            let h2 = group_cohomology(&m, 2, cfg)?.invariants().clone();
            ensure!(h1 == o1, "Z/{n} lattice {k}: bar H^1 = {h1}, resolution {o1}");
            ensure!(h2 == o2, "Z/{n} lattice {k}: bar H^2 = {h2}, resolution {o2}");
            if !h1.is_trivial() || !h2.is_trivial() {
                nonzero += 1;
            }
        }
    }
    Ok(Ok(format!("100 lattices, {nonzero} with nonzero cohomology")))
}
