//! Built-in acceptance checks, shared by the `acceptance` test target and the
//! command-line `selftest` subcommand.
//!
//! Every check runs in `i64` first and is repeated in `BigInt` on overflow.

mod criteria;
pub mod oracles;
pub mod random;

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::cohomology::CohomologyConfig;
use crate::error::Result;
use crate::scalar::with_overflow_fallback;

pub use criteria::{semisimple_presets, Outcome, COMPACTIFICATION_SEED, RESOLUTION_SEED, SIGN_SEED};

/// Wall-clock limit for the whole suite.
pub const TIME_LIMIT: Duration = Duration::from_secs(60);

/// Identifier and short title of each check.
pub const CRITERIA: [(u8, &str); 10] = [
    (1, "simply connected groups have acyclic dual complex"),
    (2, "coker of rho* matches determinantal divisors"),
    (3, "GL_n profile"),
    (4, "cyclic norm-one torus"),
    (5, "biquadratic norm-one torus Sha"),
    (6, "permutation lattices and Shapiro"),
    (7, "cone sign conventions"),
    (8, "compactification model"),
    (9, "Kottwitz comparison"),
    (10, "bar cochains against periodic resolution"),
];

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {:>2} {} ({:.2}s): {}", self.id, self.name, self.elapsed.as_secs_f64(), self.detail)
    }
}

fn dispatch(id: u8, cfg: &CohomologyConfig) -> Result<Outcome> {
    macro_rules! both {
        ($f:ident) => {
            with_overflow_fallback(|| criteria::$f::<i64>(cfg), || criteria::$f::<BigInt>(cfg))
        };
    }
    match id {
        1 => both!(simply_connected),
        2 => both!(pic_bar_is_centre_dual),
        3 => both!(gl_profile),
        4 => both!(cyclic_norm_one_torus),
        5 => both!(biquadratic_sha),
        6 => both!(permutation_laws),
        7 => both!(sign_conventions),
        8 => both!(compactification_model),
        9 => both!(kottwitz),
        10 => both!(cyclic_resolution),
        _ => Ok(Err(format!("no check numbered {id}"))),
    }
}

/// Runs one check. Errors raised by the computation count as failures.
pub fn run(id: u8, config: &CohomologyConfig) -> CheckResult {
    let name = CRITERIA.iter().find(|(i, _)| *i == id).map_or("unknown", |(_, n)| n);
    let start = Instant::now();
    let (passed, detail) = match dispatch(id, config) {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("error: {e}")),
    };
    CheckResult { id, name, passed, detail, elapsed: start.elapsed() }
}

pub fn run_all(config: &CohomologyConfig) -> Vec<CheckResult> {
    CRITERIA.iter().map(|(id, _)| run(*id, config)).collect()
}
