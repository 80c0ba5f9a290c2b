//! Standard root data and quasi-split twists.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::cartan::{cartan_a, cartan_b, cartan_c, cartan_d, is_diagram_automorphism};
use super::RootDatum;
use crate::error::{Error, Result};
use crate::exact_lattices::{solve_matrix, Matrix};
use crate::finite_groups::{FiniteGroup, Subgroup};
use crate::gmodules::{permutation_matrix, GaloisLattice};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    SL,
    GL,
    PGL,
    Sp,
    PGSp,
    SO,
    Spin,
    PSO,
    Torus,
    NormOneTorus,
    QuasiTrivialTorus,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::SL,
        Family::GL,
        Family::PGL,
        Family::Sp,
        Family::PGSp,
        Family::SO,
        Family::Spin,
        Family::PSO,
        Family::Torus,
        Family::NormOneTorus,
        Family::QuasiTrivialTorus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::SL => "SL",
            Family::GL => "GL",
            Family::PGL => "PGL",
            Family::Sp => "Sp",
            Family::PGSp => "PGSp",
            Family::SO => "SO",
            Family::Spin => "Spin",
            Family::PSO => "PSO",
            Family::Torus => "torus",
            Family::NormOneTorus => "norm_one_torus",
            Family::QuasiTrivialTorus => "quasi_trivial_torus",
        }
    }

    fn supported() -> String {
        Self::ALL.iter().map(|f| f.name()).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown family {s:?}; supported: {}", Self::supported())))
    }
}

/// How Γ acts. Diagram twists are given per group element as permutations
/// of the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Twist<T> {
    Trivial,
    /// The order-two diagram automorphism, through `g ↦ g mod 2`, which must
    /// be a homomorphism `Γ -> Z/2` (true for cyclic groups of even order).
    Flip,
    /// Triality on `D4`, for `Γ = Z/3` or `Γ = S3`.
    Triality,
    Diagram(Vec<Vec<usize>>),
    /// Explicit action matrices on the character lattice.
    Matrices(Vec<Matrix<T>>),
}

fn unsupported(family: Family, n: usize) -> Error {
    Error::Unsupported(format!("{family} with n = {n}"))
}

/// Builds a named datum. `n` is the size of the defining matrix for the
/// classical families and the rank for `torus`; the norm-one and
/// quasi-trivial tori are taken for the splitting extension with group Γ
/// (use [`norm_one_torus`] / [`quasi_trivial_torus`] for other subgroups).
pub fn named<T: Scalar>(family: Family, n: usize, group: Arc<FiniteGroup>, twist: &Twist<T>) -> Result<RootDatum<T>> {
    match family {
        Family::Torus => {
            let action = match twist {
                Twist::Trivial => vec![Matrix::identity(n); group.order()],
                Twist::Matrices(m) => m.clone(),
                _ => return Err(Error::Unsupported("tori accept only trivial or matrix actions".into())),
            };
            torus(GaloisLattice::new(group, n, action)?)
        }
        Family::NormOneTorus | Family::QuasiTrivialTorus => {
            if *twist != Twist::Trivial {
                return Err(Error::Unsupported(format!("{family} takes its action from the group")));
            }
            let h = Subgroup::trivial(group);
            if family == Family::NormOneTorus { norm_one_torus(&h) } else { quasi_trivial_torus(&h) }
        }
        Family::GL => gl(n, group, twist),
        Family::SO if n >= 3 => {
            let m = n / 2;
            let (roots, coroots) = if n % 2 == 1 { epsilon_b(m) } else { epsilon_d(m) };
            let cartan = if n % 2 == 1 { cartan_b(m) } else { cartan_d(m) };
            semisimple(group, &cartan, roots, coroots, twist)
        }
        Family::Sp if n >= 2 && n.is_multiple_of(2) => {
            let (roots, coroots) = epsilon_c(n / 2);
            semisimple(group, &cartan_c(n / 2), roots, coroots, twist)
        }
        _ => {
            let (cartan, adjoint) = match family {
                Family::SL if n >= 2 => (cartan_a(n - 1), false),
                Family::PGL if n >= 2 => (cartan_a(n - 1), true),
                Family::PGSp if n >= 2 && n.is_multiple_of(2) => (cartan_c(n / 2), true),
                Family::Spin | Family::PSO if n >= 3 => {
                    let c = if n % 2 == 1 { cartan_b(n / 2) } else { cartan_d(n / 2) };
                    (c, family == Family::PSO)
                }
                _ => return Err(unsupported(family, n)),
            };
            let lattice = if adjoint { cartan.clone() } else { Matrix::identity(cartan.rows()) };
            from_cartan(group, &cartan, &lattice, twist)
        }
    }
}

/// A torus: no roots.
pub fn torus<T: Scalar>(characters: GaloisLattice<T>) -> Result<RootDatum<T>> {
    let r = characters.rank();
    RootDatum::new(characters, Matrix::zeros(r, 0), Matrix::zeros(r, 0))
}

/// `Z[Γ/H]`, the characters of `R_{K/k} G_m` for the fixed field `K` of `H`.
pub fn quasi_trivial_torus<T: Scalar>(h: &Subgroup) -> Result<RootDatum<T>> {
    torus(GaloisLattice::induced_trivial(h))
}

/// `Z[Γ/H] / Z·N` with `N` the sum of the cosets.
pub fn norm_one_torus<T: Scalar>(h: &Subgroup) -> Result<RootDatum<T>> {
    let p = GaloisLattice::<T>::induced_trivial(h);
    let norm = vec![T::one(); p.rank()];
    torus(p.quotient_by_fixed_vector(&norm)?)
}

fn int_matrix<T: Scalar>(m: &Matrix<i64>) -> Matrix<T> {
    m.cast().expect("every scalar holds an i64")
}

/// Semisimple datum whose character lattice is spanned (in fundamental-weight
/// coordinates) by the columns of `lattice`, which must contain the roots.
pub fn from_cartan<T: Scalar>(
    group: Arc<FiniteGroup>,
    cartan: &Matrix<i64>,
    lattice: &Matrix<i64>,
    twist: &Twist<T>,
) -> Result<RootDatum<T>> {
    let l: Matrix<T> = int_matrix(lattice);
    let a: Matrix<T> = int_matrix(cartan);
    let roots = solve_matrix(&l, &a)?
        .ok_or_else(|| Error::InvalidRootDatum("the character lattice does not contain the roots".into()))?;
    let coroots = l.transpose();
    semisimple(group, cartan, roots, coroots, twist)
}

fn semisimple<T: Scalar>(
    group: Arc<FiniteGroup>,
    cartan: &Matrix<i64>,
    roots: Matrix<T>,
    coroots: Matrix<T>,
    twist: &Twist<T>,
) -> Result<RootDatum<T>> {
    let r = roots.rows();
    let action = match twist {
        Twist::Matrices(m) => m.clone(),
        _ => diagram_permutations(&group, cartan, twist)?
            .iter()
            .map(|sigma| action_from_permutation(&roots, sigma))
            .collect::<Result<_>>()?,
    };
    RootDatum::new(GaloisLattice::new(group, r, action)?, roots, coroots)
}

/// The matrix `M` with `M α_i = α_{σ(i)}`, when the roots span `X ⊗ Q`.
fn action_from_permutation<T: Scalar>(roots: &Matrix<T>, sigma: &[usize]) -> Result<Matrix<T>> {
    let image = roots.mul(&permutation_matrix(sigma))?;
    let mt = solve_matrix(&roots.transpose(), &image.transpose())?.ok_or_else(|| {
        Error::InvalidRootDatum(format!("diagram permutation {sigma:?} does not preserve the character lattice"))
    })?;
    Ok(mt.transpose())
}

fn parity_homomorphism(group: &FiniteGroup, modulus: usize) -> bool {
    group.order().is_multiple_of(modulus)
        && group.elements().all(|a| group.elements().all(|b| group.mul(a, b) % modulus == (a + b) % modulus))
}

fn compose_power(sigma: &[usize], k: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..sigma.len()).collect();
    for _ in 0..k {
        p = p.iter().map(|&i| sigma[i]).collect();
    }
    p
}

/// Per-element permutations of the simple roots for a twist.
pub fn diagram_permutations<T: Scalar>(group: &FiniteGroup, cartan: &Matrix<i64>, twist: &Twist<T>) -> Result<Vec<Vec<usize>>> {
    let l = cartan.rows();
    let identity: Vec<usize> = (0..l).collect();
    let perms = match twist {
        Twist::Trivial | Twist::Matrices(_) => vec![identity; group.order()],
        Twist::Diagram(p) => p.clone(),
        Twist::Flip => {
            let flip = flip_of(cartan)?;
            if !parity_homomorphism(group, 2) {
                return Err(Error::Unsupported(
                    "flip needs g ↦ g mod 2 to be a homomorphism; give the diagram action explicitly".into(),
                ));
            }
            group.elements().map(|g| compose_power(&flip, g % 2)).collect()
        }
        Twist::Triality => {
            if super::cartan::classify(cartan) != "D4" {
                return Err(Error::Unsupported("triality exists only for D4".into()));
            }
            let outer = [0, 2, 3];
            let lift = |p: &[usize]| {
                let mut s: Vec<usize> = (0..4).collect();
                for t in 0..3 {
                    s[outer[t]] = outer[p[t]];
                }
                s
            };
            let (s3, s3_perms) = FiniteGroup::symmetric_with_permutations(3);
            if group.order() == 3 && parity_homomorphism(group, 3) {
                group.elements().map(|g| lift(&compose_power(&[1, 2, 0], g))).collect()
            } else if *group == s3 {
                s3_perms.iter().map(|p| lift(p)).collect()
            } else {
                return Err(Error::Unsupported("triality needs Z/3 or S3 as the Galois group".into()));
            }
        }
    };
    if perms.len() != group.order() {
        return Err(Error::InvalidRootDatum(format!("{} diagram permutations for a group of order {}", perms.len(), group.order())));
    }
    for (g, p) in perms.iter().enumerate() {
        if !is_diagram_automorphism(cartan, p) {
            return Err(Error::InvalidRootDatum(format!("element {g} acts by {p:?}, not a diagram automorphism")));
        }
    }
    Ok(perms)
}

/// The non-trivial involution of a connected `A_l` (`l >= 2`) or `D_m`
/// diagram, or of `A1xA1`. For `D4` the two highest-numbered outer nodes
/// are swapped.
fn flip_of(cartan: &Matrix<i64>) -> Result<Vec<usize>> {
    let l = cartan.rows();
    let kind = super::cartan::classify(cartan);
    let neighbours = |i: usize| (0..l).filter(|&j| j != i && *cartan.get(i, j) != 0).collect::<Vec<_>>();
    let mut s: Vec<usize> = (0..l).collect();
    if kind == "A1xA1" {
        return Ok(vec![1, 0]);
    }
    if kind.starts_with('A') && !kind.contains('x') && l >= 2 {
        let start = (0..l).find(|&i| neighbours(i).len() == 1).expect("a path has an end");
        let mut path = vec![start];
        while path.len() < l {
            let cur = *path.last().unwrap();
            let next = neighbours(cur).into_iter().find(|x| !path.contains(x)).expect("connected path");
            path.push(next);
        }
        for k in 0..l {
            s[path[k]] = path[l - 1 - k];
        }
        return Ok(s);
    }
    if kind.starts_with('D') && !kind.contains('x') {
        let branch = (0..l).find(|&i| neighbours(i).len() == 3).expect("D has a branch node");
        let mut leaves: Vec<usize> = neighbours(branch).into_iter().filter(|&j| neighbours(j).len() == 1).collect();
        leaves.sort_unstable();
        let (x, y) = (leaves[leaves.len() - 2], leaves[leaves.len() - 1]);
        s.swap(x, y);
        return Ok(s);
    }
    Err(Error::Unsupported(format!("type {kind} has no diagram flip")))
}

fn epsilon(m: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; m];
    v[i] = 1;
    v
}

fn diff(m: usize, i: usize) -> Vec<i64> {
    let mut v = epsilon(m, i);
    v[i + 1] = -1;
    v
}

fn cols<T: Scalar>(m: usize, columns: Vec<Vec<i64>>) -> Matrix<T> {
    let n = columns.len();
    Matrix::from_fn(m, n, |i, j| T::from_int(columns[j][i]))
}

/// SO(2m+1): roots `e_i - e_{i+1}`, `e_m`; coroots `e_i - e_{i+1}`, `2 e_m`.
fn epsilon_b<T: Scalar>(m: usize) -> (Matrix<T>, Matrix<T>) {
    let mut roots: Vec<Vec<i64>> = (0..m - 1).map(|i| diff(m, i)).collect();
    let mut coroots = roots.clone();
    roots.push(epsilon(m, m - 1));
    coroots.push(epsilon(m, m - 1).iter().map(|x| 2 * x).collect());
    (cols(m, roots), cols(m, coroots))
}

/// Sp(2m): roots `e_i - e_{i+1}`, `2 e_m`; coroots `e_i - e_{i+1}`, `e_m`.
fn epsilon_c<T: Scalar>(m: usize) -> (Matrix<T>, Matrix<T>) {
    let (r, c) = epsilon_b::<T>(m);
    (c, r)
}

/// SO(2m): roots and coroots `e_i - e_{i+1}`, `e_{m-1} + e_m`.
fn epsilon_d<T: Scalar>(m: usize) -> (Matrix<T>, Matrix<T>) {
    let mut roots: Vec<Vec<i64>> = (0..m - 1).map(|i| diff(m, i)).collect();
    let mut last = epsilon(m, m - 1);
    last[m - 2] = 1;
    roots.push(last);
    (cols(m, roots.clone()), cols(m, roots))
}

/// GL_n on `Z^n`; the flip is `e_i ↦ -e_{n+1-i}`.
fn gl<T: Scalar>(n: usize, group: Arc<FiniteGroup>, twist: &Twist<T>) -> Result<RootDatum<T>> {
    if n == 0 {
        return Err(unsupported(Family::GL, n));
    }
    let roots: Matrix<T> = cols(n, (0..n - 1).map(|i| diff(n, i)).collect());
    let flip = Matrix::from_fn(n, n, |i, j| if i + j + 1 == n { -T::one() } else { T::zero() });
    let action = match twist {
        Twist::Matrices(m) => m.clone(),
        Twist::Flip => {
            if !parity_homomorphism(&group, 2) {
                return Err(Error::Unsupported(
                    "flip needs g ↦ g mod 2 to be a homomorphism; give the action explicitly".into(),
                ));
            }
            group.elements().map(|g| if g % 2 == 0 { Matrix::identity(n) } else { flip.clone() }).collect()
        }
        _ => {
            let cartan = cartan_a(n - 1);
            let reversed: Vec<usize> = (0..n - 1).rev().collect();
            diagram_permutations(&group, &cartan, twist)?
                .iter()
                .map(|p| {
                    if p.iter().enumerate().all(|(i, &j)| i == j) {
                        Ok(Matrix::identity(n))
                    } else if *p == reversed {
                        Ok(flip.clone())
                    } else {
                        Err(Error::Unsupported("GL_n supports only the trivial and flip diagram actions".into()))
                    }
                })
                .collect::<Result<_>>()?
        }
    };
    RootDatum::new(GaloisLattice::new(group, n, action)?, roots.clone(), roots)
}
