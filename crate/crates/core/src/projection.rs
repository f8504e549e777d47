//! Multi-year cost, saving and productivity series built from a base amount
//! and a constant year-over-year ratio.

use crate::diagnostics::Diagnostic;
use crate::error::{Error, Result};
use crate::money::{Money, Rate};
use crate::series::YearSeries;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionRule {
    pub base: Money,
    /// First project year with a non-zero value (1-based).
    pub start_year: u32,
    /// Multiplier from one year to the next, e.g. `1.10` or `0.90`.
    pub annual_ratio: Rate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CostCategory {
    RunningCost,
    OperationalCost,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostLine {
    pub name: String,
    /// Optional heading the line is listed under in tables.
    pub group: Option<String>,
    pub category: CostCategory,
    pub rule: ProjectionRule,
    /// Share of the cost eliminated by the project. Operational costs only.
    pub saving_fraction: Option<Rate>,
    /// Benefit id the saving is attributed to.
    pub benefit: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleUtilization {
    pub role: String,
    pub utilization_before: Rate,
    pub utilization_after: Rate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductivityAssumption {
    /// Yearly cost of lost productive time without the system.
    pub loss_before: Money,
    /// The same, with the system in place.
    pub loss_after: Money,
    pub growth: Rate,
    /// Informational only; not used in the computation.
    pub roles: Vec<RoleUtilization>,
    pub benefit: Option<u32>,
}

/// Zero before `start_year`, then `base`, then each year the previous value
/// times `annual_ratio`. A start year beyond the horizon gives an all-zero
/// series and a warning.
pub fn geometric_series(
    rule: &ProjectionRule,
    horizon: usize,
    diagnostics: &mut Vec<Diagnostic>,
) -> Result<YearSeries> {
    if horizon == 0 {
        return Err(Error::validation("horizon", "horizon must be at least 1"));
    }
    if rule.start_year == 0 {
        return Err(Error::validation("start_year", "start_year is 1-based"));
    }
    let start = rule.start_year as usize;
    if start > horizon {
        diagnostics.push(Diagnostic::warning(
            "start_year",
            format!("start year {start} is beyond the {horizon}-year horizon; line contributes nothing"),
        ));
        return Ok(YearSeries::zeros(horizon));
    }
    let mut values = vec![Money::ZERO; horizon];
    let mut current = rule.base;
    for slot in values.iter_mut().skip(start - 1) {
        *slot = current;
        current = current.mul_rate(rule.annual_ratio)?;
    }
    Ok(YearSeries::new(values))
}

/// Pointwise `cost × fraction`.
pub fn apply_saving(cost: &YearSeries, fraction: Rate) -> Result<YearSeries> {
    if !fraction.in_unit_interval() {
        return Err(Error::validation(
            "saving_fraction",
            format!("saving fraction {fraction} must lie in [0, 1]"),
        ));
    }
    Ok(cost.map(|m| m.mul_rate(fraction))?)
}

/// Pointwise exact sum. Every line must span `horizon` years.
pub fn total_by_year(horizon: usize, lines: &[YearSeries]) -> Result<YearSeries> {
    let mut totals = vec![Money::ZERO; horizon];
    for (i, line) in lines.iter().enumerate() {
        if line.horizon() != horizon {
            return Err(Error::validation(
                format!("[{i}]"),
                format!("series spans {} years, expected {horizon}", line.horizon()),
            ));
        }
        for (total, value) in totals.iter_mut().zip(line.iter()) {
            *total = total.checked_add(value)?;
        }
    }
    Ok(YearSeries::new(totals))
}

/// First year `loss_before − loss_after`, growing by `growth` each year.
pub fn productivity_series(p: &ProductivityAssumption, horizon: usize) -> Result<YearSeries> {
    if horizon == 0 {
        return Err(Error::validation("horizon", "horizon must be at least 1"));
    }
    let rule = ProjectionRule {
        base: p.loss_before.checked_sub(p.loss_after)?,
        start_year: 1,
        annual_ratio: p.growth.one_plus()?,
    };
    geometric_series(&rule, horizon, &mut Vec::new())
}
