//! JSON front end for the invariant report and the self-test.

pub mod input;
pub mod report;

use std::time::Instant;

use upic_core::cohomology::CohomologyConfig;
use upic_core::rootdata::{invariant_report, ReportOptions};
use upic_core::Error;

pub use input::InputDocument;
pub use report::{AbelianGroup, ReportDocument, Timing};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

/// A failure together with the process exit status it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } | Error::DegreeOutOfRange { .. } => EXIT_BUDGET,
            Error::Overflow => EXIT_FAILURE,
            _ => EXIT_VALIDATION,
        };
        let kind = if code == EXIT_BUDGET { "limit exceeded" } else { "validation error" };
        Self { code, message: format!("{kind}: {e}") }
    }
}

/// Command-line overrides; `None` leaves the document's option (or the
/// default) in place.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub max_degree: Option<usize>,
    pub budget: Option<usize>,
    pub sha: Option<bool>,
    pub timing: bool,
}

pub fn parse_input(text: &str) -> Result<InputDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError {
        code: EXIT_PARSE,
        message: format!("parse error: {e}"),
    })
}

pub fn analyze(doc: InputDocument, overrides: &Overrides) -> Result<ReportDocument, CliError> {
    let start = Instant::now();
    let defaults = CohomologyConfig::default();
    let config = CohomologyConfig {
        max_degree: overrides.max_degree.or(doc.options.max_degree).unwrap_or(defaults.max_degree),
        budget: overrides.budget.or(doc.options.budget).unwrap_or(defaults.budget),
        ..defaults
    };
    let sha = overrides.sha.or(doc.options.sha).unwrap_or(true);
    let rd = doc.root_datum()?;
    let r = invariant_report(&rd, &ReportOptions { config, sha })?;
    let mut report = ReportDocument::new(doc, &r)?;
    if overrides.timing {
        report.timing = Some(Timing { elapsed_ms: start.elapsed().as_secs_f64() * 1e3 });
    }
    Ok(report)
}

pub fn analyze_str(text: &str, overrides: &Overrides) -> Result<ReportDocument, CliError> {
    analyze(parse_input(text)?, overrides)
}
