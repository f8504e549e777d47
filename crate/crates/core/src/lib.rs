//! Exact Simple-ROI appraisal of an information-system investment.
//!
//! A [`Scenario`] holds every input: the investment ledger, projected running
//! and operational costs, the productivity gain and the enrollment cohort
//! model. [`evaluate`] turns it into the cash-flow statement and ROI, and
//! [`report`] renders the result. All money is exact decimal arithmetic;
//! rounding happens only for display.

pub mod appraisal;
pub mod diagnostics;
pub mod enrollment;
pub mod error;
pub mod evaluate;
pub mod money;
pub mod par;
pub mod projection;
pub mod report;
pub mod scenario;
pub mod series;
pub mod sweep;
pub mod taxonomy;

pub use diagnostics::{Diagnostic, Severity};
pub use error::{Error, Result};
pub use evaluate::{evaluate, Evaluation};
pub use money::{Decimal, Money, MoneyError, Rate, RoundingMode};
pub use par::Execution;
pub use scenario::{emit_scenario, load_scenario, parse_scenario, validate, Scenario};
pub use series::YearSeries;
pub use sweep::{sweep, SweepPoint};

/// The bundled baseline scenario in canonical form.
pub const BASELINE_JSON: &str = include_str!("../data/baseline.json");

pub fn baseline() -> Scenario {
    parse_scenario(BASELINE_JSON).expect("bundled baseline parses").scenario
}
