//! The invariant report of a reductive group: units, Picard groups,
//! algebraic Brauer group and Ш groups of `π₁^D`.

use num_bigint::BigInt;

use super::RootDatum;
use crate::cohomology::{hypercohomology, sha_omega, CohomologyConfig};
use crate::error::Result;
use crate::exact_lattices::AbelianGroupInvariants;
use crate::scalar::{with_overflow_fallback, Scalar};

/// Attached to every report: cohomology is taken for the finite group Γ
/// through which the action factors.
pub const LEVEL_NOTE: &str = "computed at level Γ";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub config: CohomologyConfig,
    /// Skip the Ш computations when false.
    pub sha: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self { config: CohomologyConfig::default(), sha: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub group_order: usize,
    pub kind: String,
    /// Rank of `U(Ḡ) = ker ρ*`.
    pub units_rank: usize,
    pub pi1: AbelianGroupInvariants,
    /// `Pic(Ḡ) = coker ρ*`.
    pub pic_bar: AbelianGroupInvariants,
    /// `Pic(G) = H^1(Γ, π₁^D)`.
    pub pic: AbelianGroupInvariants,
    /// `Br_a(G) = H^2(Γ, π₁^D)`.
    pub br_a: AbelianGroupInvariants,
    pub sha1: Option<AbelianGroupInvariants>,
    pub sha2: Option<AbelianGroupInvariants>,
    pub level_note: &'static str,
}

fn compute<T: Scalar>(rd: &RootDatum<T>, options: &ReportOptions) -> Result<InvariantReport> {
    let c = rd.pi1_dual_complex()?;
    let cfg = &options.config;
    let h = |i| hypercohomology(&c, i, cfg).map(|g| g.invariants().clone());
    let (sha1, sha2) = if options.sha {
        (Some(sha_omega(&c, 1, cfg)?), Some(sha_omega(&c, 2, cfg)?))
    } else {
        (None, None)
    };
    Ok(InvariantReport {
        group_order: rd.group().order(),
        kind: rd.kind().to_string(),
        units_rank: rd.units_rank()?,
        pi1: rd.pi1().invariants()?,
        pic_bar: rd.pic_bar()?,
        pic: h(1)?,
        br_a: h(2)?,
        sha1,
        sha2,
        level_note: LEVEL_NOTE,
    })
}

/// Runs in `i64` and repeats the computation with `BigInt` on overflow.
pub fn invariant_report<T: Scalar>(rd: &RootDatum<T>, options: &ReportOptions) -> Result<InvariantReport> {
    with_overflow_fallback(
        || compute(&rd.cast::<i64>()?, options),
        || compute(&rd.cast::<BigInt>()?, options),
    )
}
