//! Investment ledger, cash-flow statement and Simple ROI, with NPV and
//! payback as supporting measures.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::money::{Decimal, Money, Rate};
use crate::series::{sum_series, YearSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaffLine {
    pub role: String,
    pub headcount: u32,
    pub hourly_wage: Money,
    pub hours_per_day: Decimal,
    pub working_days: u32,
}

impl StaffLine {
    pub fn total_hours(&self) -> Result<Decimal> {
        Ok(self.hours_per_day.checked_mul(Decimal::from(self.working_days as u64))?)
    }
}

/// `hourly_wage × hours_per_day × working_days × headcount`
pub fn staff_cost(line: &StaffLine) -> Result<Money> {
    Ok(line.hourly_wage.mul_decimal(line.total_hours()?)?.mul_int(line.headcount as i128)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerItem {
    pub name: String,
    pub amount: Money,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InvestmentLedger {
    pub staff: Vec<StaffLine>,
    pub hardware: Vec<LedgerItem>,
    pub network: Vec<LedgerItem>,
    pub support: Vec<LedgerItem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvestmentBreakdown {
    pub staff: Money,
    pub hardware: Money,
    pub network: Money,
    pub support: Money,
    pub total: Money,
}

fn items_total(items: &[LedgerItem]) -> Result<Money> {
    Ok(Money::checked_sum(items.iter().map(|i| &i.amount))?)
}

pub fn investment_breakdown(ledger: &InvestmentLedger) -> Result<InvestmentBreakdown> {
    let mut staff = Money::ZERO;
    for line in &ledger.staff {
        staff = staff.checked_add(staff_cost(line)?)?;
    }
    let hardware = items_total(&ledger.hardware)?;
    let network = items_total(&ledger.network)?;
    let support = items_total(&ledger.support)?;
    let total = Money::checked_sum(&[staff, hardware, network, support])?;
    Ok(InvestmentBreakdown { staff, hardware, network, support, total })
}

pub fn investment_total(ledger: &InvestmentLedger) -> Result<Money> {
    Ok(investment_breakdown(ledger)?.total)
}

/// Horizon totals. The three derived lines always satisfy
/// `net_economic_benefit = enrollment + productivity`,
/// `pre_tax_income = net_economic_benefit + operational_savings` and
/// `net_cash_flow = pre_tax_income − running_costs − income_tax`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CashFlowStatement {
    pub enrollment_benefit: Money,
    pub productivity_benefit: Money,
    pub net_economic_benefit: Money,
    pub operational_savings: Money,
    pub pre_tax_income: Money,
    pub running_costs: Money,
    pub income_tax: Money,
    pub net_cash_flow: Money,
}

impl CashFlowStatement {
    pub fn from_totals(
        enrollment_benefit: Money,
        productivity_benefit: Money,
        operational_savings: Money,
        running_costs: Money,
    ) -> Result<CashFlowStatement> {
        let net_economic_benefit = enrollment_benefit.checked_add(productivity_benefit)?;
        let pre_tax_income = net_economic_benefit.checked_add(operational_savings)?;
        let net_cash_flow = pre_tax_income.checked_sub(running_costs)?;
        Ok(CashFlowStatement {
            enrollment_benefit,
            productivity_benefit,
            net_economic_benefit,
            operational_savings,
            pre_tax_income,
            running_costs,
            income_tax: Money::ZERO,
            net_cash_flow,
        })
    }

    pub fn with_income_tax(mut self, tax: Money) -> Result<CashFlowStatement> {
        self.income_tax = tax;
        self.net_cash_flow = self.pre_tax_income.checked_sub(self.running_costs)?.checked_sub(tax)?;
        Ok(self)
    }

    /// Labelled lines in statement order.
    pub fn lines(&self) -> [(&'static str, Money); 8] {
        [
            ("Penerimaan Mahasiswa baru", self.enrollment_benefit),
            ("Peningkatan produktivitas manajemen tingkat atas", self.productivity_benefit),
            ("Manfaat Ekonomi Bersih", self.net_economic_benefit),
            ("Pengurangan Biaya Operasional", self.operational_savings),
            ("Pendapatan Sebelum Pajak", self.pre_tax_income),
            ("Biaya Berjalan", self.running_costs),
            ("Pajak", self.income_tax),
            ("Arus Kas Bersih", self.net_cash_flow),
        ]
    }
}

pub fn build_statement(
    enrollment: &YearSeries,
    productivity: &YearSeries,
    savings: &YearSeries,
    running: &YearSeries,
) -> Result<CashFlowStatement> {
    let horizon = enrollment.horizon();
    for (name, s) in [("productivity", productivity), ("savings", savings), ("running", running)] {
        if s.horizon() != horizon {
            return Err(Error::validation(
                name,
                format!("series spans {} years, enrollment spans {horizon}", s.horizon()),
            ));
        }
    }
    CashFlowStatement::from_totals(
        sum_series(enrollment)?,
        sum_series(productivity)?,
        sum_series(savings)?,
        sum_series(running)?,
    )
}

/// `100 × net_cash_flow / horizon / investment`, exact to the carried
/// precision; the displayed value is rounded to two places.
pub fn simple_roi(statement: &CashFlowStatement, horizon: usize, investment: Money) -> Result<Decimal> {
    if horizon == 0 {
        return Err(Error::validation("horizon", "horizon must be at least 1"));
    }
    if investment.is_negative() {
        return Err(Error::validation("investment", "investment must not be negative"));
    }
    if investment.is_zero() {
        return Err(Error::UndefinedRoi);
    }
    let per_year = statement.net_cash_flow.decimal().checked_mul(Decimal::from_int(100))?;
    let denominator = investment.decimal().checked_mul(Decimal::from(horizon as u64))?;
    Ok(per_year.checked_div(denominator)?)
}

/// `−investment + Σ yearly_net[t] / (1 + discount)^t`, years counted from 1.
pub fn npv(yearly_net: &YearSeries, investment: Money, discount: Rate) -> Result<Money> {
    let base = discount.one_plus()?;
    if base.decimal() <= Decimal::ZERO {
        return Err(Error::validation("discount_rate", "discount rate must exceed -1"));
    }
    let mut total = investment.checked_neg()?;
    let mut factor = Decimal::ONE;
    for value in yearly_net.iter() {
        factor = factor.checked_mul(base.decimal())?;
        total = total.checked_add(value.div_decimal(factor)?)?;
    }
    Ok(total)
}

/// First year whose cumulative net flow covers the investment.
pub fn payback_year(yearly_net: &YearSeries, investment: Money) -> Result<Option<u32>> {
    if investment <= Money::ZERO {
        return Ok(Some(1));
    }
    let mut cumulative = Money::ZERO;
    for (i, value) in yearly_net.iter().enumerate() {
        cumulative = cumulative.checked_add(value)?;
        if cumulative >= investment {
            return Ok(Some(i as u32 + 1));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AppraisalResult {
    pub statement: CashFlowStatement,
    pub investment: Money,
    pub horizon: usize,
    /// Exact percentage.
    pub roi_percent: Decimal,
    pub npv: Option<Money>,
    pub payback_year: Option<u32>,
}

impl AppraisalResult {
    /// Two-place display value, e.g. `1850.13`.
    pub fn roi_display(&self) -> String {
        self.roi_percent.to_fixed(2)
    }
}
