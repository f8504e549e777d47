//! End-to-end evaluation of a scenario into every intermediate table and the
//! final appraisal.

use std::collections::BTreeSet;

use crate::appraisal::{
    build_statement, investment_breakdown, npv, payback_year, simple_roi, AppraisalResult, InvestmentBreakdown,
};
use crate::diagnostics::{has_errors, Diagnostic};
use crate::enrollment::{
    cohort_revenue, prorate_programs, projected_intake, yoy_changes, CohortRevenue, Intake, YearChange,
};
use crate::error::{Error, Result};
use crate::money::{Money, Rate, RoundingMode};
use crate::projection::{apply_saving, geometric_series, productivity_series, total_by_year, CostLine};
use crate::scenario::{validate, Scenario};
use crate::series::{sum_series, YearSeries};
use crate::taxonomy::{classify_matrix, financial_benefits, BenefitMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectedLine {
    pub name: String,
    pub group: Option<String>,
    pub cost: YearSeries,
    pub saving_fraction: Option<Rate>,
    pub saving: Option<YearSeries>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub name: String,
    pub currency: String,
    pub horizon: usize,
    pub rounding: RoundingMode,
    pub table15_compat: bool,
    pub matrix: BenefitMatrix,
    pub financial_benefit_ids: Vec<u32>,
    pub investment: InvestmentBreakdown,
    pub running_costs: Vec<ProjectedLine>,
    pub running_total: YearSeries,
    pub operational_costs: Vec<ProjectedLine>,
    pub operational_total: YearSeries,
    pub savings_total: YearSeries,
    pub productivity: YearSeries,
    pub programs: Vec<String>,
    pub enrollment: CohortRevenue,
    pub intake_by_year: Vec<Intake>,
    pub program_revenue: Vec<YearSeries>,
    pub history_changes: Vec<YearChange>,
    pub income_tax: YearSeries,
    pub yearly_net: YearSeries,
    pub result: AppraisalResult,
    /// Warnings gathered from validation and evaluation.
    pub diagnostics: Vec<Diagnostic>,
}

fn project(line: &CostLine, horizon: usize, path: &str) -> Result<ProjectedLine> {
    // validation already reported start-year warnings against the scenario path
    let cost = geometric_series(&line.rule, horizon, &mut Vec::new())?;
    let saving = match line.saving_fraction {
        Some(f) => Some(apply_saving(&cost, f).map_err(|e| match e {
            Error::Validation { message, .. } => Error::validation(format!("{path}.saving_fraction"), message),
            other => other,
        })?),
        None => None,
    };
    Ok(ProjectedLine {
        name: line.name.clone(),
        group: line.group.clone(),
        cost,
        saving_fraction: line.saving_fraction,
        saving,
    })
}

/// Validates, then evaluates. Validation errors come back as
/// [`Error::Invalid`].
pub fn evaluate(scenario: &Scenario) -> Result<Evaluation> {
    let mut diagnostics = validate(scenario);
    if has_errors(&diagnostics) {
        return Err(Error::Invalid(diagnostics));
    }
    let horizon = scenario.horizon;

    let matrix = classify_matrix(&scenario.benefits.items)?;
    let financial_benefit_ids = financial_benefits(&scenario.benefits.items, &scenario.benefits.exclusions, &mut Vec::new())
        .iter()
        .map(|b| b.id)
        .collect();

    let investment = investment_breakdown(&scenario.investment)?;

    let running_costs = scenario
        .running_costs
        .iter()
        .enumerate()
        .map(|(i, l)| project(l, horizon, &format!("running_costs[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let running_total = total_by_year(horizon, &running_costs.iter().map(|l| l.cost.clone()).collect::<Vec<_>>())?;

    let operational_costs = scenario
        .operational_costs
        .iter()
        .enumerate()
        .map(|(i, l)| project(l, horizon, &format!("operational_costs[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let operational_total =
        total_by_year(horizon, &operational_costs.iter().map(|l| l.cost.clone()).collect::<Vec<_>>())?;
    let savings_total = total_by_year(
        horizon,
        &operational_costs.iter().filter_map(|l| l.saving.clone()).collect::<Vec<_>>(),
    )?;

    let productivity = productivity_series(&scenario.productivity, horizon)?;

    let model = scenario.cohort_model();
    let enrollment = cohort_revenue(&model, &mut Vec::new()).map_err(|e| match e {
        Error::Validation { path, message } => {
            Error::validation(crate::diagnostics::join_path("enrollment", &path), message)
        }
        other => other,
    })?;
    // zero-growth and empty-donation warnings were already raised by validation
    let intake_by_year = projected_intake(&model, &mut diagnostics)?;
    let program_revenue = if enrollment.intake.total > 0 {
        prorate_programs(&enrollment.revenue, &enrollment.intake.per_program)?
    } else {
        vec![YearSeries::zeros(horizon); model.programs.len()]
    };
    let history_changes = if scenario.enrollment.history.rows.len() >= 2 {
        let mut local = Vec::new();
        let changes = yoy_changes(&scenario.enrollment.history, &mut local)?;
        diagnostics.extend(local.into_iter().map(|d| d.under("enrollment")));
        changes
    } else {
        Vec::new()
    };

    let mut inflow = Vec::with_capacity(horizon);
    let mut tax = Vec::with_capacity(horizon);
    for year in 1..=horizon {
        let get = |s: &YearSeries| s.year(year).unwrap_or(Money::ZERO);
        let before_tax = get(&enrollment.revenue)
            .checked_add(get(&productivity))?
            .checked_add(get(&savings_total))?
            .checked_sub(get(&running_total))?;
        let t = if before_tax > Money::ZERO {
            before_tax.mul_rate(scenario.options.tax_rate)?
        } else {
            Money::ZERO
        };
        inflow.push(before_tax.checked_sub(t)?);
        tax.push(t);
    }
    let yearly_net = YearSeries::new(inflow);
    let income_tax = YearSeries::new(tax);

    let statement = build_statement(&enrollment.revenue, &productivity, &savings_total, &running_total)?
        .with_income_tax(sum_series(&income_tax)?)?;
    let roi_percent = simple_roi(&statement, horizon, investment.total)?;
    let npv = scenario
        .options
        .discount_rate
        .map(|d| npv(&yearly_net, investment.total, d))
        .transpose()?;
    let payback_year = payback_year(&yearly_net, investment.total)?;

    let result = AppraisalResult {
        statement,
        investment: investment.total,
        horizon,
        roi_percent,
        npv,
        payback_year,
    };

    dedup(&mut diagnostics);
    Ok(Evaluation {
        name: scenario.meta.name.clone(),
        currency: scenario.meta.currency.clone(),
        horizon,
        rounding: scenario.options.rounding,
        table15_compat: scenario.options.table15_compat,
        matrix,
        financial_benefit_ids,
        investment,
        running_costs,
        running_total,
        operational_costs,
        operational_total,
        savings_total,
        productivity,
        programs: model.programs,
        enrollment,
        intake_by_year,
        program_revenue,
        history_changes,
        income_tax,
        yearly_net,
        result,
        diagnostics,
    })
}

fn dedup(diags: &mut Vec<Diagnostic>) {
    let mut seen = BTreeSet::new();
    diags.retain(|d| seen.insert((d.path.clone(), d.message.clone())));
}
