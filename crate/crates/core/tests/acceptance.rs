//! Runs the ten acceptance checks and prints one line per check.
//!
//! All comparisons are exact (integer invariants), so there is no numeric
//! tolerance; the only pinned limit is the wall-clock budget.

use std::time::{Duration, Instant};

use upic_core::cohomology::CohomologyConfig;
use upic_core::selftest::{run_all, TIME_LIMIT};

/// Invariants must agree exactly.
const INVARIANT_TOLERANCE: u64 = 0;
const SUITE_TIME_LIMIT: Duration = TIME_LIMIT;

#[test]
fn acceptance() {
    let start = Instant::now();
    let results = run_all(&CohomologyConfig::default());
    let total = start.elapsed();
    for r in &results {
        println!("{r}");
    }
    println!("total {:.2}s (limit {}s, invariant tolerance {INVARIANT_TOLERANCE})", total.as_secs_f64(), SUITE_TIME_LIMIT.as_secs());
    let failed: Vec<_> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed checks: {failed:?}");
    assert!(total <= SUITE_TIME_LIMIT, "suite took {total:?}");
}
