//! Enrollment growth estimation and the cohort revenue waterfall.
//!
//! Each project year a new cohort of incremental students enrolls. Cohort
//! `c` (1-based) brings enrollment-year revenue
//!
//! ```text
//! N_c = N_1 × ((1 + growth) × (1 + escalation))^(c − 1)
//! ```
//!
//! where `N_1` is the rounded first-year incremental intake times the net
//! per-student fee. In later years the cohort keeps paying according to the
//! [`PaymentSchedule`]: at age `a` it contributes `semesters(a) × multiplier(a)`
//! times its own `N_c`, so continuing fees stay locked at the enrollment-year
//! price.

use std::collections::BTreeSet;

use crate::diagnostics::Diagnostic;
use crate::error::{Error, Result};
use crate::money::{Decimal, Money, Rate, RoundingMode};
use crate::series::YearSeries;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HistoryRow {
    pub year: i32,
    /// Intake per program, aligned with [`EnrollmentHistory::programs`].
    pub counts: Vec<u64>,
    /// Printed total, if the source carries one; checked against the sum.
    pub total: Option<u64>,
}

impl HistoryRow {
    pub fn sum(&self) -> u64 {
        self.counts.iter().sum()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnrollmentHistory {
    pub programs: Vec<String>,
    pub rows: Vec<HistoryRow>,
}

impl EnrollmentHistory {
    /// Year ordering, row width and printed totals.
    pub fn check(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 && row.year <= self.rows[i - 1].year {
                out.push(Diagnostic::error(
                    format!("[{i}].year"),
                    format!("year {} does not follow {}", row.year, self.rows[i - 1].year),
                ));
            }
            if row.counts.len() != self.programs.len() {
                out.push(Diagnostic::error(
                    format!("[{i}].counts"),
                    format!("{} counts for {} programs", row.counts.len(), self.programs.len()),
                ));
            }
            if let Some(total) = row.total {
                if total != row.sum() {
                    out.push(Diagnostic::error(
                        format!("[{i}].total"),
                        format!("total {total} differs from the per-program sum {}", row.sum()),
                    ));
                }
            }
        }
        out
    }

    /// Parses `year,program,count` records (header optional). Programs keep
    /// first-seen order; missing cells count as zero.
    pub fn from_csv(text: &str) -> Result<EnrollmentHistory> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut programs: Vec<String> = Vec::new();
        let mut cells: Vec<(i32, usize, u64)> = Vec::new();
        for (line, record) in reader.records().enumerate() {
            let record = record.map_err(|e| Error::validation(format!("csv:{}", line + 1), e.to_string()))?;
            if record.len() != 3 {
                return Err(Error::validation(
                    format!("csv:{}", line + 1),
                    format!("expected 3 fields, found {}", record.len()),
                ));
            }
            if line == 0 && record[0].eq_ignore_ascii_case("year") {
                continue;
            }
            let bad = |what: &str| Error::validation(format!("csv:{}", line + 1), format!("invalid {what}"));
            let year: i32 = record[0].parse().map_err(|_| bad("year"))?;
            let count: u64 = record[2].parse().map_err(|_| bad("count"))?;
            let program = record[1].to_string();
            let idx = match programs.iter().position(|p| *p == program) {
                Some(i) => i,
                None => {
                    programs.push(program);
                    programs.len() - 1
                }
            };
            cells.push((year, idx, count));
        }
        let years: BTreeSet<i32> = cells.iter().map(|c| c.0).collect();
        let rows = years
            .into_iter()
            .map(|year| {
                let mut counts = vec![0; programs.len()];
                for &(y, idx, count) in &cells {
                    if y == year {
                        counts[idx] += count;
                    }
                }
                HistoryRow { year, counts, total: None }
            })
            .collect();
        Ok(EnrollmentHistory { programs, rows })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YearChange {
    pub year: i32,
    pub total: u64,
    pub delta: i64,
    /// Whole percent change, rounded to nearest (ties away from zero).
    /// `None` when the prior year total is zero.
    pub pct: Option<i64>,
}

pub fn yoy_changes(history: &EnrollmentHistory, diagnostics: &mut Vec<Diagnostic>) -> Result<Vec<YearChange>> {
    if history.rows.len() < 2 {
        return Err(Error::validation("history", "at least two years of history are required"));
    }
    let mut out = Vec::with_capacity(history.rows.len() - 1);
    for pair in history.rows.windows(2) {
        let (prev, cur) = (pair[0].sum(), pair[1].sum());
        let delta = cur as i64 - prev as i64;
        let pct = if prev == 0 {
            diagnostics.push(Diagnostic::warning(
                "history",
                format!("percentage change for {} is undefined: prior year total is zero", pair[1].year),
            ));
            None
        } else {
            let fraction = Decimal::from(delta).checked_div(Decimal::from(prev))?;
            let percent = fraction.round(RoundingMode::NearestPercent).checked_mul(Decimal::from_int(100))?;
            Some(percent.to_i128().expect("two-place fraction times 100 is integral") as i64)
        };
        out.push(YearChange { year: pair[1].year, total: cur, delta, pct });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthSelector {
    /// Only years with a strictly positive change.
    PositiveOnly,
    All,
}

/// Mean of the selected rounded year-over-year percentages, as a fraction.
pub fn estimate_growth(history: &EnrollmentHistory, selector: GrowthSelector) -> Result<Rate> {
    let changes = yoy_changes(history, &mut Vec::new())?;
    let selected: Vec<i64> = changes
        .iter()
        .filter_map(|c| c.pct)
        .filter(|&p| selector == GrowthSelector::All || p > 0)
        .collect();
    if selected.is_empty() {
        return Err(Error::validation("history", "no year-over-year changes match the selector"));
    }
    let sum: i64 = selected.iter().sum();
    let mean = Decimal::from(sum).checked_div(Decimal::from(selected.len() as u64 * 100))?;
    Ok(Rate::from_decimal(mean))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeeItem {
    pub name: String,
    pub amount: Money,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeeModel {
    pub first_semester_items: Vec<FeeItem>,
    pub donation_grades: Vec<Money>,
    /// Item names passed through to their purpose and not counted as revenue.
    pub earmarked_items: Vec<String>,
    /// Share of fee revenue consumed by operations.
    pub overhead_fraction: Rate,
    /// Yearly fee increase.
    pub escalation: Rate,
}

/// `(Σ items − Σ earmarked + mean donation) × (1 − overhead)`.
pub fn per_student_net(fee: &FeeModel, diagnostics: &mut Vec<Diagnostic>) -> Result<Money> {
    let gross = Money::checked_sum(fee.first_semester_items.iter().map(|i| &i.amount))?;
    let mut earmarked = Money::ZERO;
    for (i, name) in fee.earmarked_items.iter().enumerate() {
        let item = fee
            .first_semester_items
            .iter()
            .find(|it| it.name == *name)
            .ok_or_else(|| Error::validation(format!("earmarked_items[{i}]"), format!("no fee item named `{name}`")))?;
        earmarked = earmarked.checked_add(item.amount)?;
    }
    let donation = if fee.donation_grades.is_empty() {
        diagnostics.push(Diagnostic::warning("donation_grades", "no donation grades; average donation taken as 0"));
        Money::ZERO
    } else {
        Money::checked_sum(&fee.donation_grades)?.div_decimal(Decimal::from(fee.donation_grades.len() as u64))?
    };
    let before_overhead = gross.checked_sub(earmarked)?.checked_add(donation)?;
    Ok(before_overhead.mul_rate(fee.overhead_fraction.complement()?)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScheduleEntry {
    pub age: u32,
    pub semesters: u32,
    /// Applied to the cohort's enrollment-year net fee.
    pub multiplier: Rate,
}

/// Payments per cohort age; age 0 is the enrollment year.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaymentSchedule {
    pub entries: Vec<ScheduleEntry>,
}

impl PaymentSchedule {
    /// Seven semesters per student: the enrollment-year fee, then two
    /// semesters in each of the next two years and one in each of the two
    /// after that, all at 0.65 of the enrollment-year net fee.
    pub fn standard() -> PaymentSchedule {
        let continuing = Rate::parse("0.65").expect("literal");
        let entry = |age, semesters, multiplier| ScheduleEntry { age, semesters, multiplier };
        PaymentSchedule {
            entries: vec![
                entry(0, 1, Rate::ONE),
                entry(1, 2, continuing),
                entry(2, 2, continuing),
                entry(3, 1, continuing),
                entry(4, 1, continuing),
            ],
        }
    }

    /// `semesters × multiplier` at `age`; zero for ages not listed.
    pub fn contribution(&self, age: u32) -> Result<Decimal> {
        let mut total = Decimal::ZERO;
        for e in self.entries.iter().filter(|e| e.age == age) {
            total = total.checked_add(e.multiplier.decimal().checked_mul(Decimal::from(e.semesters as u64))?)?;
        }
        Ok(total)
    }

    pub fn check(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        if !self.entries.iter().any(|e| e.age == 0) {
            out.push(Diagnostic::error("", "payment schedule has no entry for age 0 (enrollment year)"));
        }
        let mut seen = BTreeSet::new();
        for (i, e) in self.entries.iter().enumerate() {
            if !seen.insert(e.age) {
                out.push(Diagnostic::error(format!("[{i}].age"), format!("age {} listed twice", e.age)));
            }
            if e.multiplier.decimal().is_negative() {
                out.push(Diagnostic::error(format!("[{i}].multiplier"), "multiplier must not be negative"));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Intake {
    pub per_program: Vec<u64>,
    pub total: u64,
}

/// Per program `round_half_up(baseline × growth)`; the total is the sum of
/// the rounded counts. Non-positive growth gives zero intake.
pub fn incremental_intake(baseline: &[u64], growth: Rate) -> Result<Intake> {
    let per_program = if growth.decimal() <= Decimal::ZERO {
        vec![0; baseline.len()]
    } else {
        baseline
            .iter()
            .map(|&b| {
                let exact = Decimal::from(b).checked_mul(growth.decimal())?;
                let rounded = exact.round(RoundingMode::HalfUp).to_i128().expect("rounded to integer");
                u64::try_from(rounded).map_err(|_| Error::from(crate::money::MoneyError::Overflow))
            })
            .collect::<Result<Vec<_>>>()?
    };
    let total = per_program.iter().sum();
    Ok(Intake { per_program, total })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohortModel {
    pub programs: Vec<String>,
    pub baseline_intake: Vec<u64>,
    pub growth: Rate,
    pub fee: FeeModel,
    pub schedule: PaymentSchedule,
    pub horizon: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohortRevenue {
    pub intake: Intake,
    pub per_student_net: Money,
    /// `(1 + growth) × (1 + escalation)`
    pub cohort_factor: Rate,
    /// Enrollment-year revenue of each cohort, `N_1 … N_H`.
    pub cohorts: Vec<Money>,
    /// Exact revenue per project year.
    pub revenue: YearSeries,
}

pub fn cohort_revenue(model: &CohortModel, diagnostics: &mut Vec<Diagnostic>) -> Result<CohortRevenue> {
    if model.horizon == 0 {
        return Err(Error::validation("horizon", "horizon must be at least 1"));
    }
    if let Some(d) = model.schedule.check().into_iter().find(Diagnostic::is_error) {
        return Err(Error::validation(crate::diagnostics::join_path("schedule", &d.path), d.message));
    }
    if model.growth.decimal() <= Decimal::from_int(-1) {
        return Err(Error::validation("growth", "growth must exceed -1"));
    }
    let intake = incremental_intake(&model.baseline_intake, model.growth)?;
    if intake.total == 0 {
        diagnostics.push(Diagnostic::warning(
            "growth",
            "incremental intake rounds to zero; enrollment benefit is zero",
        ));
    }
    let per_student_net = per_student_net(&model.fee, diagnostics).map_err(|e| prefix_error(e, "fee"))?;
    let cohort_factor = model.growth.one_plus()?.checked_mul(model.fee.escalation.one_plus()?)?;

    let first_cohort = per_student_net.mul_int(intake.total as i128)?;
    let (cohorts, revenue) = cohort_waterfall(first_cohort, cohort_factor, &model.schedule, model.horizon)?;

    Ok(CohortRevenue {
        intake,
        per_student_net,
        cohort_factor,
        cohorts,
        revenue,
    })
}

/// Cohort enrollment-year revenues and the yearly revenue they generate,
/// starting from a first cohort worth `first_cohort`.
pub fn cohort_waterfall(
    first_cohort: Money,
    cohort_factor: Rate,
    schedule: &PaymentSchedule,
    horizon: usize,
) -> Result<(Vec<Money>, YearSeries)> {
    let mut cohorts = Vec::with_capacity(horizon);
    let mut current = first_cohort;
    for _ in 0..horizon {
        cohorts.push(current);
        current = current.mul_rate(cohort_factor)?;
    }
    let contributions = (0..horizon as u32)
        .map(|age| schedule.contribution(age))
        .collect::<Result<Vec<_>>>()?;
    let mut revenue = Vec::with_capacity(horizon);
    for year in 0..horizon {
        let mut total = Money::ZERO;
        for (cohort, n) in cohorts.iter().enumerate().take(year + 1) {
            total = total.checked_add(n.mul_decimal(contributions[year - cohort])?)?;
        }
        revenue.push(total);
    }
    Ok((cohorts, YearSeries::new(revenue)))
}

fn prefix_error(err: Error, prefix: &str) -> Error {
    match err {
        Error::Validation { path, message } => Error::Validation {
            path: crate::diagnostics::join_path(prefix, &path),
            message,
        },
        other => other,
    }
}

/// Student counts per program for each project year: year `t` is
/// `round_half_up(first_year × (1 + growth)^(t−1))` per program, from the
/// rounded year-1 intake. A warning is raised whenever the per-program sum
/// disagrees with the same projection of the year-1 total.
pub fn projected_intake(model: &CohortModel, diagnostics: &mut Vec<Diagnostic>) -> Result<Vec<Intake>> {
    let mut years = Vec::with_capacity(model.horizon);
    if model.horizon == 0 {
        return Ok(years);
    }
    let first = incremental_intake(&model.baseline_intake, model.growth)?;
    let ratio = model.growth.one_plus()?;
    let mut factor = Decimal::ONE;
    for year in 1..=model.horizon {
        if year > 1 {
            factor = factor.checked_mul(ratio.decimal())?;
        }
        let grow = |n: u64| -> Result<u64> {
            let d = Decimal::from(n).checked_mul(factor)?.round(RoundingMode::HalfUp);
            Ok(d.to_i128().and_then(|v| u64::try_from(v).ok()).unwrap_or(0))
        };
        let per_program = first.per_program.iter().map(|&n| grow(n)).collect::<Result<Vec<_>>>()?;
        let total: u64 = per_program.iter().sum();
        let from_total = grow(first.total)?;
        if from_total != total {
            diagnostics.push(Diagnostic::warning(
                "enrollment",
                format!(
                    "year {year}: per-program students sum to {total}, rounded total projection is {from_total}"
                ),
            ));
        }
        years.push(Intake { per_program, total });
    }
    Ok(years)
}

/// Splits a series across programs in proportion to `shares`.
pub fn prorate_programs(series: &YearSeries, shares: &[u64]) -> Result<Vec<YearSeries>> {
    let total: u64 = shares.iter().sum();
    if total == 0 {
        return Err(Error::validation("shares", "program shares sum to zero"));
    }
    let denominator = Decimal::from(total);
    shares
        .iter()
        .map(|&share| {
            series
                .map(|m| m.mul_int(share as i128)?.div_decimal(denominator))
                .map_err(Error::from)
        })
        .collect()
}

/// One third of every cell. This is the scale at which the printed
/// per-program revenue table reports its figures; it is a display view
/// only and never feeds the cash flow.
pub fn table15_compat(series: &YearSeries) -> Result<YearSeries> {
    Ok(series.map(|m| m.div_decimal(Decimal::from_int(3)))?)
}
