use crate::diagnostics::Diagnostic;
use crate::money::{Decimal, Money, Rate};
use crate::projection::CostLine;
use crate::taxonomy::{check_items, Method};

use super::Scenario;

/// Upper bound on the horizon; keeps compounding within representable range.
pub const MAX_HORIZON: usize = 50;

struct Checker<'s> {
    scenario: &'s Scenario,
    out: Vec<Diagnostic>,
}

impl Checker<'_> {
    fn error(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.out.push(Diagnostic::error(path, message));
    }

    fn warning(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.out.push(Diagnostic::warning(path, message));
    }

    fn non_negative(&mut self, path: String, amount: Money) {
        if amount.is_negative() {
            self.error(path, format!("amount {amount} must not be negative"));
        }
    }

    fn above_minus_one(&mut self, path: &str, rate: Rate) {
        if rate.decimal() <= Decimal::from_int(-1) {
            self.error(path, format!("rate {rate} must exceed -1"));
        }
    }

    /// A money stream attributed to a benefit must point at a defined,
    /// Simple-ROI, non-excluded benefit.
    fn benefit_link(&mut self, path: String, id: Option<u32>) {
        let Some(id) = id else { return };
        let benefits = &self.scenario.benefits;
        match benefits.items.iter().find(|b| b.id == id) {
            None => self.error(path, format!("benefit {id} is not defined")),
            Some(b) if b.method != Method::SimpleRoi => {
                self.error(path, format!("benefit {id} is not measured by Simple ROI"))
            }
            Some(_) if benefits.exclusions.contains(&id) => {
                self.error(path, format!("benefit {id} is excluded and cannot carry a cash flow"))
            }
            Some(_) => {}
        }
    }

    fn cost_lines(&mut self, section: &str, lines: &[CostLine]) {
        let horizon = self.scenario.horizon;
        for (i, line) in lines.iter().enumerate() {
            let path = format!("{section}[{i}]");
            self.non_negative(format!("{path}.base"), line.rule.base);
            if line.rule.start_year == 0 {
                self.error(format!("{path}.start_year"), "start_year is 1-based");
            } else if line.rule.start_year as usize > horizon && horizon > 0 {
                self.warning(
                    format!("{path}.start_year"),
                    format!("start year {} is beyond the {horizon}-year horizon; line contributes nothing", line.rule.start_year),
                );
            }
            if line.rule.annual_ratio.decimal().is_negative() {
                self.error(format!("{path}.annual_ratio"), "annual ratio must not be negative");
            }
            if let Some(f) = line.saving_fraction {
                if !f.in_unit_interval() {
                    self.error(format!("{path}.saving_fraction"), format!("saving fraction {f} must lie in [0, 1]"));
                }
            }
            self.benefit_link(format!("{path}.benefit"), line.benefit);
        }
    }

    fn run(&mut self) {
        let s = self.scenario;
        if s.horizon == 0 {
            self.error("horizon", "horizon must be at least 1");
        } else if s.horizon > MAX_HORIZON {
            self.error("horizon", format!("horizon must not exceed {MAX_HORIZON} years"));
        }

        let items = check_items(&s.benefits.items);
        self.out.extend(items.into_iter().map(|d| d.under("benefits.items")));
        for id in &s.benefits.exclusions {
            if !s.benefits.items.iter().any(|b| b.id == *id) {
                self.warning("benefits.exclusions", format!("excluded benefit id {id} is not defined"));
            }
        }

        for (i, line) in s.investment.staff.iter().enumerate() {
            let path = format!("investment.staff[{i}]");
            if line.headcount == 0 {
                self.error(format!("{path}.headcount"), "headcount must be at least 1");
            }
            self.non_negative(format!("{path}.hourly_wage"), line.hourly_wage);
            if line.hours_per_day <= Decimal::ZERO {
                self.error(format!("{path}.hours_per_day"), "hours per day must be positive");
            }
            if line.working_days == 0 {
                self.error(format!("{path}.working_days"), "working days must be positive");
            }
        }
        for (section, items) in [
            ("hardware", &s.investment.hardware),
            ("network", &s.investment.network),
            ("support", &s.investment.support),
        ] {
            for (i, item) in items.iter().enumerate() {
                self.non_negative(format!("investment.{section}[{i}].amount"), item.amount);
            }
        }

        self.cost_lines("running_costs", &s.running_costs);
        self.cost_lines("operational_costs", &s.operational_costs);

        let p = &s.productivity;
        if p.loss_after > p.loss_before {
            self.warning(
                "productivity.loss_after",
                "productive-time loss is higher with the system than without it",
            );
        }
        self.above_minus_one("productivity.growth", p.growth);
        self.benefit_link("productivity.benefit".into(), p.benefit);

        self.enrollment();

        let o = &s.options;
        if !o.tax_rate.in_unit_interval() {
            self.error("options.tax_rate", "tax rate must lie in [0, 1]");
        }
        if let Some(d) = o.discount_rate {
            self.above_minus_one("options.discount_rate", d);
        }
    }

    fn enrollment(&mut self) {
        let e = &self.scenario.enrollment;
        self.benefit_link("enrollment.benefit".into(), e.benefit);
        let history = e.history.check();
        self.out.extend(history.into_iter().map(|d| d.under("enrollment.history")));
        if e.history_csv.is_some() {
            self.warning("enrollment.history_csv", "history sidecar has not been inlined");
        }
        let programs = e.history.programs.len();
        match &e.baseline_intake {
            Some(b) if b.len() != programs => self.error(
                "enrollment.baseline_intake",
                format!("{} counts for {programs} programs", b.len()),
            ),
            None if e.history.rows.is_empty() && e.history_csv.is_none() => self.error(
                "enrollment.baseline_intake",
                "no baseline intake and no history to take it from",
            ),
            _ => {}
        }
        self.above_minus_one("enrollment.growth", e.growth);
        if e.growth.decimal() <= Decimal::ZERO {
            self.warning("enrollment.growth", "no enrollment growth; enrollment benefit is zero");
        }

        let fee = &e.fee;
        for (i, item) in fee.first_semester_items.iter().enumerate() {
            self.non_negative(format!("enrollment.fee.first_semester_items[{i}].amount"), item.amount);
        }
        for (i, grade) in fee.donation_grades.iter().enumerate() {
            self.non_negative(format!("enrollment.fee.donation_grades[{i}]"), *grade);
        }
        if fee.donation_grades.is_empty() {
            self.warning("enrollment.fee.donation_grades", "no donation grades; average donation taken as 0");
        }
        for (i, name) in fee.earmarked_items.iter().enumerate() {
            if !fee.first_semester_items.iter().any(|it| it.name == *name) {
                self.error(format!("enrollment.fee.earmarked_items[{i}]"), format!("no fee item named `{name}`"));
            }
        }
        let overhead = fee.overhead_fraction.decimal();
        if overhead.is_negative() || overhead >= Decimal::ONE {
            self.error("enrollment.fee.overhead_fraction", "overhead fraction must lie in [0, 1)");
        }
        self.above_minus_one("enrollment.fee.escalation", fee.escalation);

        let schedule = e.schedule.check();
        self.out.extend(schedule.into_iter().map(|d| d.under("enrollment.schedule")));
    }
}

/// Checks every section invariant. Diagnostics follow section order.
pub fn validate(scenario: &Scenario) -> Vec<Diagnostic> {
    let mut checker = Checker { scenario, out: Vec::new() };
    checker.run();
    checker.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enrollment::{PaymentSchedule, ScheduleEntry};

    #[test]
    fn baseline_is_clean() {
        let diags = validate(&crate::baseline());
        assert!(diags.iter().all(|d| !d.is_error()), "{diags:?}");
    }

    #[test]
    fn saving_fraction_bound() {
        let mut s = crate::baseline();
        s.operational_costs[2].saving_fraction = Some(Rate::parse("1.5").unwrap());
        let diags = validate(&s);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].path, "operational_costs[2].saving_fraction");
        assert!(diags[0].is_error());
    }

    #[test]
    fn schedule_without_enrollment_year() {
        let mut s = crate::baseline();
        s.enrollment.schedule = PaymentSchedule {
            entries: vec![ScheduleEntry { age: 1, semesters: 2, multiplier: Rate::ONE }],
        };
        let diags = validate(&s);
        assert!(diags.iter().any(|d| d.is_error() && d.path.starts_with("enrollment.schedule")));
    }

    #[test]
    fn excluded_benefit_cannot_carry_money() {
        let mut s = crate::baseline();
        s.productivity.benefit = Some(5);
        let diags = validate(&s);
        assert!(diags.iter().any(|d| d.is_error() && d.path == "productivity.benefit"));
        s.productivity.benefit = Some(7);
        assert!(validate(&s).iter().any(|d| d.is_error() && d.message.contains("not measured")));
        s.productivity.benefit = Some(99);
        assert!(validate(&s).iter().any(|d| d.is_error() && d.message.contains("not defined")));
    }

    #[test]
    fn order_follows_sections() {
        let mut s = crate::baseline();
        s.horizon = 0;
        s.options.tax_rate = Rate::parse("2").unwrap();
        s.investment.staff[0].headcount = 0;
        let paths: Vec<_> = validate(&s).into_iter().filter(|d| d.is_error()).map(|d| d.path).collect();
        assert_eq!(paths, vec!["horizon", "investment.staff[0].headcount", "options.tax_rate"]);
    }

    #[test]
    fn overhead_must_stay_below_one() {
        let mut s = crate::baseline();
        s.enrollment.fee.overhead_fraction = Rate::ONE;
        assert!(validate(&s).iter().any(|d| d.path == "enrollment.fee.overhead_fraction"));
    }
}
