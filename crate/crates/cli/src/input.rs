//! The input document and its translation into a root datum.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use upic_core::exact_lattices::Matrix;
use upic_core::finite_groups::{FiniteGroup, Subgroup};
use upic_core::gmodules::GaloisLattice;
use upic_core::rootdata::{named, norm_one_torus, quasi_trivial_torus, Family, RootDatum, Twist};
use upic_core::{Error, Int, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub group: GroupSpec,
    #[serde(default = "GaloisSpec::trivial")]
    pub galois: GaloisSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionSpec>,
    #[serde(default, skip_serializing_if = "Options::is_empty")]
    pub options: Options,
}

/// Either a named family or raw root datum matrices; exactly one must be set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub named: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// The subgroup `H` for the norm-one and quasi-trivial tori (default: trivial).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw: Option<RawDatum>,
}

/// Roots are vectors in character coordinates, coroots in cocharacter
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDatum {
    pub rank: usize,
    #[serde(default)]
    pub roots: Vec<Vec<i64>>,
    #[serde(default)]
    pub coroots: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaloisSpec {
    /// trivial, cyclic, klein, s3, symmetric, dihedral, quaternion, product
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub named: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<GaloisSpec>>,
    /// Multiplication table with identity 0.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
}

impl GaloisSpec {
    fn trivial() -> Self {
        Self { named: Some("trivial".into()), n: None, factors: None, table: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    /// trivial, flip or triality
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<String>,
    /// One permutation of the simple roots per group element.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagram: Option<Vec<Vec<usize>>>,
    /// One matrix (list of rows) per group element, acting on characters.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<Vec<Vec<i64>>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sha: Option<bool>,
}

impl Options {
    fn is_empty(&self) -> bool {
        *self == Self::default()
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Unsupported(msg.into())
}

pub fn build_group(spec: &GaloisSpec) -> Result<FiniteGroup> {
    if let Some(table) = &spec.table {
        if spec.named.is_some() {
            return Err(invalid("galois: give either `named` or `table`, not both"));
        }
        return FiniteGroup::from_table(table.clone());
    }
    let name = spec.named.as_deref().ok_or_else(|| invalid("galois: missing `named` or `table`"))?;
    let n = || spec.n.filter(|&n| n >= 1).ok_or_else(|| invalid(format!("galois {name:?} needs n >= 1")));
    match name {
        "trivial" => Ok(FiniteGroup::trivial()),
        "cyclic" => Ok(FiniteGroup::cyclic(n()?)),
        "klein" => Ok(FiniteGroup::klein()),
        "s3" => Ok(FiniteGroup::symmetric(3)),
        "symmetric" => Ok(FiniteGroup::symmetric(n()?)),
        "dihedral" => Ok(FiniteGroup::dihedral(n()?)),
        "quaternion" => Ok(FiniteGroup::quaternion()),
        "product" => {
            let factors = spec.factors.as_deref().unwrap_or_default();
            factors.iter().try_fold(FiniteGroup::trivial(), |acc, f| Ok(FiniteGroup::product(&acc, &build_group(f)?)))
        }
        other => Err(invalid(format!(
            "unknown galois group {other:?}; supported: trivial, cyclic, klein, s3, symmetric, dihedral, quaternion, product"
        ))),
    }
}

fn matrix(rows: &[Vec<i64>], cols: usize) -> Result<Matrix<Int>> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), cols)
}

fn twist(action: Option<&ActionSpec>) -> Result<Twist<Int>> {
    let Some(a) = action else { return Ok(Twist::Trivial) };
    let given = [a.twist.is_some(), a.diagram.is_some(), a.matrices.is_some()];
    if given.iter().filter(|&&b| b).count() > 1 {
        return Err(invalid("action: give only one of `twist`, `diagram`, `matrices`"));
    }
    if let Some(d) = &a.diagram {
        return Ok(Twist::Diagram(d.clone()));
    }
    if let Some(ms) = &a.matrices {
        return Ok(Twist::Matrices(ms.iter().map(|m| matrix(m, m.first().map_or(0, Vec::len))).collect::<Result<_>>()?));
    }
    match a.twist.as_deref().unwrap_or("trivial") {
        "trivial" => Ok(Twist::Trivial),
        "flip" => Ok(Twist::Flip),
        "triality" => Ok(Twist::Triality),
        other => Err(invalid(format!("unknown twist {other:?}; supported: trivial, flip, triality"))),
    }
}

fn action_matrices(group: &FiniteGroup, rank: usize, t: Twist<Int>) -> Result<Vec<Matrix<Int>>> {
    match t {
        Twist::Trivial => Ok(vec![Matrix::identity(rank); group.order()]),
        Twist::Matrices(m) => Ok(m),
        _ => Err(invalid("raw root data accept only `matrices` actions")),
    }
}

impl InputDocument {
    pub fn root_datum(&self) -> Result<RootDatum<Int>> {
        let group = Arc::new(build_group(&self.galois)?);
        let g = &self.group;
        match (&g.named, &g.raw) {
            (Some(_), Some(_)) => Err(invalid("group: give either `named` or `raw`, not both")),
            (None, None) => Err(invalid("group: missing `named` or `raw`")),
            (None, Some(raw)) => {
                let t = twist(self.action.as_ref())?;
                let x = GaloisLattice::new(group.clone(), raw.rank, action_matrices(&group, raw.rank, t)?)?;
                let cols = |v: &[Vec<i64>]| -> Result<Matrix<Int>> {
                    let v: Vec<Vec<Int>> = v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
                    Matrix::from_columns(&v, raw.rank)
                };
                RootDatum::new(x, cols(&raw.roots)?, cols(&raw.coroots)?)
            }
            (Some(name), None) => {
                let family: Family = name.parse()?;
                match family {
                    Family::NormOneTorus | Family::QuasiTrivialTorus => {
                        if self.action.is_some() {
                            return Err(invalid(format!("{family} takes its action from the group")));
                        }
                        let h = Subgroup::new(group, g.subgroup.clone().unwrap_or_else(|| vec![0]))?;
                        if family == Family::NormOneTorus { norm_one_torus(&h) } else { quasi_trivial_torus(&h) }
                    }
                    _ => {
                        if g.subgroup.is_some() {
                            return Err(invalid("`subgroup` applies only to the norm-one and quasi-trivial tori"));
                        }
                        let n = g.n.ok_or_else(|| invalid(format!("group {family} needs `n`")))?;
                        named(family, n, group, &twist(self.action.as_ref())?)
                    }
                }
            }
        }
    }
}
