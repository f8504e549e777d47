//! The scenario document: every input of an appraisal in one JSON file.
//!
//! See `docs/schema.md` for the field reference. Parsing is tolerant in
//! what it accepts (numbers may be JSON numbers or decimal strings, unknown
//! keys only warn) and emission is canonical (sorted keys, decimal strings),
//! so `parse ∘ emit` is the identity on valid scenarios.

mod emit;
mod parse;
mod validate;

use std::collections::BTreeSet;

pub use emit::{emit_scenario, to_value};
pub use parse::{parse_scenario, parse_value, Parsed};
pub use validate::validate;

use crate::appraisal::InvestmentLedger;
use crate::diagnostics::{has_errors, Diagnostic};
use crate::enrollment::{CohortModel, EnrollmentHistory, FeeModel, PaymentSchedule};
use crate::error::{Error, Result};
use crate::money::{Rate, RoundingMode};
use crate::projection::{CostLine, ProductivityAssumption};
use crate::taxonomy::BenefitItem;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Meta {
    pub name: String,
    pub currency: String,
    pub description: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BenefitsSection {
    pub items: Vec<BenefitItem>,
    /// Financial benefits deliberately left out of the calculation.
    pub exclusions: BTreeSet<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnrollmentSection {
    pub benefit: Option<u32>,
    pub history: EnrollmentHistory,
    /// Sidecar `year,program,count` file not yet inlined.
    pub history_csv: Option<String>,
    /// Defaults to the last history year.
    pub baseline_intake: Option<Vec<u64>>,
    pub growth: Rate,
    pub fee: FeeModel,
    pub schedule: PaymentSchedule,
}

impl EnrollmentSection {
    pub fn baseline(&self) -> Option<Vec<u64>> {
        self.baseline_intake
            .clone()
            .or_else(|| self.history.rows.last().map(|r| r.counts.clone()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub rounding: RoundingMode,
    /// Also show the per-program revenue table at one third scale.
    pub table15_compat: bool,
    pub tax_rate: Rate,
    /// Enables NPV when present.
    pub discount_rate: Option<Rate>,
}

impl Default for Options {
    fn default() -> Self {
        Options { rounding: RoundingMode::HalfUp, table15_compat: false, tax_rate: Rate::ZERO, discount_rate: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub meta: Meta,
    pub horizon: usize,
    pub benefits: BenefitsSection,
    pub investment: InvestmentLedger,
    pub running_costs: Vec<CostLine>,
    pub operational_costs: Vec<CostLine>,
    pub productivity: ProductivityAssumption,
    pub enrollment: EnrollmentSection,
    pub options: Options,
}

impl Scenario {
    pub fn cohort_model(&self) -> CohortModel {
        CohortModel {
            programs: self.enrollment.history.programs.clone(),
            baseline_intake: self.enrollment.baseline().unwrap_or_default(),
            growth: self.enrollment.growth,
            fee: self.enrollment.fee.clone(),
            schedule: self.enrollment.schedule.clone(),
            horizon: self.horizon,
        }
    }

    /// Replaces the history with the sidecar CSV contents. Programs declared
    /// in the scenario keep their order; CSV-only programs are appended.
    pub fn inline_history(&mut self, csv_text: &str) -> Result<()> {
        let parsed = EnrollmentHistory::from_csv(csv_text)
            .map_err(|e| Error::validation("enrollment.history_csv", e.to_string()))?;
        let mut programs = self.enrollment.history.programs.clone();
        for p in &parsed.programs {
            if !programs.contains(p) {
                programs.push(p.clone());
            }
        }
        let rows = parsed
            .rows
            .into_iter()
            .map(|row| {
                let mut counts = vec![0; programs.len()];
                for (p, count) in parsed.programs.iter().zip(row.counts) {
                    let idx = programs.iter().position(|q| q == p).expect("merged above");
                    counts[idx] = count;
                }
                crate::enrollment::HistoryRow { year: row.year, counts, total: None }
            })
            .collect();
        self.enrollment.history = EnrollmentHistory { programs, rows };
        self.enrollment.history_csv = None;
        Ok(())
    }
}

/// Parse then validate. Warnings from both steps come back with the
/// scenario; any error rejects it.
pub fn load_scenario(text: &str) -> std::result::Result<(Scenario, Vec<Diagnostic>), Vec<Diagnostic>> {
    let Parsed { scenario, mut diagnostics } = parse_scenario(text)?;
    diagnostics.extend(validate(&scenario));
    if has_errors(&diagnostics) {
        return Err(diagnostics);
    }
    Ok((scenario, diagnostics))
}

pub(crate) fn default_schedule() -> PaymentSchedule {
    PaymentSchedule::standard()
}
