use std::collections::BTreeSet;

use serde_json::{Map, Value};

use super::{BenefitsSection, EnrollmentSection, Meta, Options, Scenario, SCHEMA_VERSION};
use crate::appraisal::{InvestmentLedger, LedgerItem, StaffLine};
use crate::diagnostics::{join_path, Diagnostic};
use crate::enrollment::{EnrollmentHistory, FeeItem, FeeModel, HistoryRow, PaymentSchedule, ScheduleEntry};
use crate::money::{Decimal, Money, Rate, RoundingMode};
use crate::projection::{CostCategory, CostLine, ProductivityAssumption, ProjectionRule, RoleUtilization};
use crate::taxonomy::{BenefitItem, DomainClass, Measurability, Method, Tangibility, ValueClass};

#[derive(Debug, Clone)]
pub struct Parsed {
    pub scenario: Scenario,
    /// Warnings only; errors reject the document.
    pub diagnostics: Vec<Diagnostic>,
}

/// Parses scenario JSON text. Whitespace-only input is read as `{}` so the
/// caller gets one error per missing section.
pub fn parse_scenario(text: &str) -> Result<Parsed, Vec<Diagnostic>> {
    let value: Value = if text.trim().is_empty() {
        Value::Object(Map::new())
    } else {
        serde_json::from_str(text).map_err(|e| {
            vec![Diagnostic::error(
                "",
                format!("malformed JSON at line {}, column {}: {}", e.line(), e.column(), e),
            )]
        })?
    };
    parse_value(&value)
}

pub fn parse_value(value: &Value) -> Result<Parsed, Vec<Diagnostic>> {
    let mut reader = Reader { diagnostics: Vec::new() };
    let scenario = reader.scenario(value);
    match scenario {
        Some(s) if !reader.has_errors() => Ok(Parsed { scenario: s, diagnostics: reader.diagnostics }),
        _ => Err(reader.diagnostics),
    }
}

type Obj = Map<String, Value>;

struct Reader {
    diagnostics: Vec<Diagnostic>,
}

fn at(path: &str, key: &str) -> String {
    join_path(path, key)
}

fn idx(path: &str, i: usize) -> String {
    format!("{path}[{i}]")
}

fn describe(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

impl Reader {
    fn has_errors(&self) -> bool {
        self.diagnostics.iter().any(Diagnostic::is_error)
    }

    fn error(&mut self, path: &str, message: impl Into<String>) {
        self.diagnostics.push(Diagnostic::error(path, message));
    }

    fn object<'v>(&mut self, v: &'v Value, path: &str, known: &[&str]) -> Option<&'v Obj> {
        let Value::Object(map) = v else {
            self.error(path, format!("expected an object, found {}", describe(v)));
            return None;
        };
        for key in map.keys() {
            if !known.contains(&key.as_str()) {
                self.diagnostics.push(Diagnostic::warning(at(path, key), "unknown key ignored"));
            }
        }
        Some(map)
    }

    fn required<'v>(&mut self, map: &'v Obj, key: &str, path: &str) -> Option<&'v Value> {
        match map.get(key) {
            Some(Value::Null) | None => {
                self.error(&at(path, key), "missing required field");
                None
            }
            Some(v) => Some(v),
        }
    }

    fn optional<'v>(map: &'v Obj, key: &str) -> Option<&'v Value> {
        map.get(key).filter(|v| !v.is_null())
    }

    fn string(&mut self, v: &Value, path: &str) -> Option<String> {
        match v {
            Value::String(s) => Some(s.clone()),
            other => {
                self.error(path, format!("expected a string, found {}", describe(other)));
                None
            }
        }
    }

    fn boolean(&mut self, v: &Value, path: &str) -> Option<bool> {
        match v {
            Value::Bool(b) => Some(*b),
            other => {
                self.error(path, format!("expected a boolean, found {}", describe(other)));
                None
            }
        }
    }

    fn literal(&mut self, v: &Value, path: &str) -> Option<String> {
        match v {
            Value::String(s) => Some(s.clone()),
            Value::Number(n) => Some(n.to_string()),
            other => {
                self.error(path, format!("expected a decimal number or string, found {}", describe(other)));
                None
            }
        }
    }

    fn decimal(&mut self, v: &Value, path: &str) -> Option<Decimal> {
        let text = self.literal(v, path)?;
        match text.parse::<Decimal>() {
            Ok(d) => Some(d),
            Err(e) => {
                self.error(path, e.to_string());
                None
            }
        }
    }

    fn money(&mut self, v: &Value, path: &str) -> Option<Money> {
        self.decimal(v, path).map(Money::from_decimal)
    }

    fn rate(&mut self, v: &Value, path: &str) -> Option<Rate> {
        let text = self.literal(v, path)?;
        match Rate::parse(&text) {
            Ok(r) => Some(r),
            Err(e) => {
                self.error(path, e.to_string());
                None
            }
        }
    }

    fn integer(&mut self, v: &Value, path: &str) -> Option<i64> {
        let text = self.literal(v, path)?;
        match text.parse::<i64>() {
            Ok(n) => Some(n),
            Err(_) => {
                self.error(path, format!("expected an integer, found `{text}`"));
                None
            }
        }
    }

    fn unsigned(&mut self, v: &Value, path: &str) -> Option<u64> {
        let n = self.integer(v, path)?;
        match u64::try_from(n) {
            Ok(u) => Some(u),
            Err(_) => {
                self.error(path, format!("expected a non-negative integer, found {n}"));
                None
            }
        }
    }

    fn small(&mut self, v: &Value, path: &str) -> Option<u32> {
        let n = self.unsigned(v, path)?;
        match u32::try_from(n) {
            Ok(u) => Some(u),
            Err(_) => {
                self.error(path, format!("{n} is too large"));
                None
            }
        }
    }

    fn array<'v>(&mut self, v: &'v Value, path: &str) -> Option<&'v Vec<Value>> {
        match v {
            Value::Array(a) => Some(a),
            other => {
                self.error(path, format!("expected an array, found {}", describe(other)));
                None
            }
        }
    }

    /// Every element is read even after a failure so all problems surface.
    fn list<T>(&mut self, v: &Value, path: &str, mut item: impl FnMut(&mut Self, &Value, &str) -> Option<T>) -> Option<Vec<T>> {
        let arr = self.array(v, path)?;
        let items: Vec<Option<T>> = arr.iter().enumerate().map(|(i, e)| item(self, e, &idx(path, i))).collect();
        items.into_iter().collect()
    }

    fn keyword<T>(&mut self, v: &Value, path: &str, allowed: &[&str], from: impl Fn(&str) -> Option<T>) -> Option<T> {
        let s = self.string(v, path)?;
        let parsed = from(&s);
        if parsed.is_none() {
            self.error(path, format!("`{s}` is not one of: {}", allowed.join(", ")));
        }
        parsed
    }

    fn scenario(&mut self, v: &Value) -> Option<Scenario> {
        const KEYS: &[&str] = &[
            "schema_version",
            "meta",
            "horizon",
            "benefits",
            "investment",
            "running_costs",
            "operational_costs",
            "productivity",
            "enrollment",
            "options",
        ];
        let root = self.object(v, "", KEYS)?;

        let version = self.required(root, "schema_version", "").and_then(|v| self.unsigned(v, "schema_version"));
        if let Some(version) = version {
            if version != SCHEMA_VERSION {
                self.error("schema_version", format!("unsupported schema version {version}; this build reads {SCHEMA_VERSION}"));
            }
        }
        let meta = self.required(root, "meta", "").and_then(|v| self.meta(v));
        let horizon = self.required(root, "horizon", "").and_then(|v| self.unsigned(v, "horizon"));
        let benefits = self.required(root, "benefits", "").and_then(|v| self.benefits(v));
        let investment = self.required(root, "investment", "").and_then(|v| self.investment(v));
        let running = self
            .required(root, "running_costs", "")
            .and_then(|v| self.list(v, "running_costs", |r, e, p| r.cost_line(e, p, CostCategory::RunningCost)));
        let operational = self
            .required(root, "operational_costs", "")
            .and_then(|v| self.list(v, "operational_costs", |r, e, p| r.cost_line(e, p, CostCategory::OperationalCost)));
        let productivity = self.required(root, "productivity", "").and_then(|v| self.productivity(v));
        let enrollment = self.required(root, "enrollment", "").and_then(|v| self.enrollment(v));
        let options = match Self::optional(root, "options") {
            Some(v) => self.options(v),
            None => Some(Options::default()),
        };

        version?;
        Some(Scenario {
            meta: meta?,
            horizon: horizon? as usize,
            benefits: benefits?,
            investment: investment?,
            running_costs: running?,
            operational_costs: operational?,
            productivity: productivity?,
            enrollment: enrollment?,
            options: options?,
        })
    }

    fn meta(&mut self, v: &Value) -> Option<Meta> {
        let m = self.object(v, "meta", &["name", "currency", "description"])?;
        let name = self.required(m, "name", "meta").and_then(|v| self.string(v, "meta.name"));
        let currency = match Self::optional(m, "currency") {
            Some(v) => self.string(v, "meta.currency"),
            None => Some("IDR".to_string()),
        };
        let description = match Self::optional(m, "description") {
            Some(v) => self.string(v, "meta.description"),
            None => Some(String::new()),
        };
        Some(Meta { name: name?, currency: currency?, description: description? })
    }

    fn benefits(&mut self, v: &Value) -> Option<BenefitsSection> {
        let m = self.object(v, "benefits", &["items", "exclusions"])?;
        let items = self.required(m, "items", "benefits").and_then(|v| self.list(v, "benefits.items", Self::benefit_item));
        let exclusions = match Self::optional(m, "exclusions") {
            Some(v) => self
                .list(v, "benefits.exclusions", |r, e, p| r.small(e, p))
                .map(|ids| ids.into_iter().collect::<BTreeSet<_>>()),
            None => Some(BTreeSet::new()),
        };
        Some(BenefitsSection { items: items?, exclusions: exclusions? })
    }

    fn benefit_item(&mut self, v: &Value, path: &str) -> Option<BenefitItem> {
        let m = self.object(
            v,
            path,
            &["id", "name", "tangibility", "measurability", "domain_class", "value_class", "method"],
        )?;
        let id = self.required(m, "id", path).and_then(|v| self.small(v, &at(path, "id")));
        let name = self.required(m, "name", path).and_then(|v| self.string(v, &at(path, "name")));
        let tangibility = self
            .required(m, "tangibility", path)
            .and_then(|v| self.keyword(v, &at(path, "tangibility"), Tangibility::KEYWORDS, Tangibility::from_keyword));
        let measurability = self.required(m, "measurability", path).and_then(|v| {
            self.keyword(v, &at(path, "measurability"), Measurability::KEYWORDS, Measurability::from_keyword)
        });
        let domain_class = self
            .required(m, "domain_class", path)
            .and_then(|v| self.keyword(v, &at(path, "domain_class"), DomainClass::KEYWORDS, DomainClass::from_keyword));
        let value_class = self
            .required(m, "value_class", path)
            .and_then(|v| self.keyword(v, &at(path, "value_class"), ValueClass::KEYWORDS, ValueClass::from_keyword));
        let method = self
            .required(m, "method", path)
            .and_then(|v| self.keyword(v, &at(path, "method"), Method::KEYWORDS, Method::from_keyword));
        Some(BenefitItem {
            id: id?,
            name: name?,
            tangibility: tangibility?,
            measurability: measurability?,
            domain_class: domain_class?,
            value_class: value_class?,
            method: method?,
        })
    }

    fn investment(&mut self, v: &Value) -> Option<InvestmentLedger> {
        let m = self.object(v, "investment", &["staff", "hardware", "network", "support"])?;
        let items = |r: &mut Self, key: &str| match Self::optional(m, key) {
            Some(v) => r.list(v, &at("investment", key), Self::ledger_item),
            None => Some(Vec::new()),
        };
        let hardware = items(self, "hardware");
        let network = items(self, "network");
        let support = items(self, "support");
        let staff = match Self::optional(m, "staff") {
            Some(v) => self.list(v, "investment.staff", Self::staff_line),
            None => Some(Vec::new()),
        };
        Some(InvestmentLedger { staff: staff?, hardware: hardware?, network: network?, support: support? })
    }

    fn ledger_item(&mut self, v: &Value, path: &str) -> Option<LedgerItem> {
        let m = self.object(v, path, &["name", "amount"])?;
        let name = self.required(m, "name", path).and_then(|v| self.string(v, &at(path, "name")));
        let amount = self.required(m, "amount", path).and_then(|v| self.money(v, &at(path, "amount")));
        Some(LedgerItem { name: name?, amount: amount? })
    }

    fn staff_line(&mut self, v: &Value, path: &str) -> Option<StaffLine> {
        let m = self.object(v, path, &["role", "headcount", "hourly_wage", "hours_per_day", "working_days"])?;
        let role = self.required(m, "role", path).and_then(|v| self.string(v, &at(path, "role")));
        let headcount = self.required(m, "headcount", path).and_then(|v| self.small(v, &at(path, "headcount")));
        let wage = self.required(m, "hourly_wage", path).and_then(|v| self.money(v, &at(path, "hourly_wage")));
        let hours = self.required(m, "hours_per_day", path).and_then(|v| self.decimal(v, &at(path, "hours_per_day")));
        let days = self.required(m, "working_days", path).and_then(|v| self.small(v, &at(path, "working_days")));
        Some(StaffLine {
            role: role?,
            headcount: headcount?,
            hourly_wage: wage?,
            hours_per_day: hours?,
            working_days: days?,
        })
    }

    fn cost_line(&mut self, v: &Value, path: &str, category: CostCategory) -> Option<CostLine> {
        const KEYS: &[&str] = &["name", "group", "base", "start_year", "annual_ratio", "saving_fraction", "benefit"];
        let m = self.object(v, path, KEYS)?;
        let name = self.required(m, "name", path).and_then(|v| self.string(v, &at(path, "name")));
        let group = match Self::optional(m, "group") {
            Some(v) => self.string(v, &at(path, "group")).map(Some),
            None => Some(None),
        };
        let base = self.required(m, "base", path).and_then(|v| self.money(v, &at(path, "base")));
        let start_year = match Self::optional(m, "start_year") {
            Some(v) => self.small(v, &at(path, "start_year")),
            None => Some(1),
        };
        let ratio = self.required(m, "annual_ratio", path).and_then(|v| self.rate(v, &at(path, "annual_ratio")));
        let saving_fraction = match (category, Self::optional(m, "saving_fraction")) {
            (CostCategory::OperationalCost, _) => self
                .required(m, "saving_fraction", path)
                .and_then(|v| self.rate(v, &at(path, "saving_fraction")))
                .map(Some),
            (CostCategory::RunningCost, Some(_)) => {
                self.error(&at(path, "saving_fraction"), "running costs carry no saving fraction");
                None
            }
            (CostCategory::RunningCost, None) => Some(None),
        };
        let benefit = self.optional_id(m, "benefit", path);
        Some(CostLine {
            name: name?,
            group: group?,
            category,
            rule: ProjectionRule { base: base?, start_year: start_year?, annual_ratio: ratio? },
            saving_fraction: saving_fraction?,
            benefit: benefit?,
        })
    }

    fn optional_id(&mut self, m: &Obj, key: &str, path: &str) -> Option<Option<u32>> {
        match Self::optional(m, key) {
            Some(v) => self.small(v, &at(path, key)).map(Some),
            None => Some(None),
        }
    }

    fn productivity(&mut self, v: &Value) -> Option<ProductivityAssumption> {
        let path = "productivity";
        let m = self.object(v, path, &["loss_before", "loss_after", "growth", "roles", "benefit"])?;
        let before = self.required(m, "loss_before", path).and_then(|v| self.money(v, "productivity.loss_before"));
        let after = self.required(m, "loss_after", path).and_then(|v| self.money(v, "productivity.loss_after"));
        let growth = self.required(m, "growth", path).and_then(|v| self.rate(v, "productivity.growth"));
        let roles = match Self::optional(m, "roles") {
            Some(v) => self.list(v, "productivity.roles", |r, e, p| {
                let m = r.object(e, p, &["role", "utilization_before", "utilization_after"])?;
                let role = r.required(m, "role", p).and_then(|v| r.string(v, &at(p, "role")));
                let ub = r.required(m, "utilization_before", p).and_then(|v| r.rate(v, &at(p, "utilization_before")));
                let ua = r.required(m, "utilization_after", p).and_then(|v| r.rate(v, &at(p, "utilization_after")));
                Some(RoleUtilization { role: role?, utilization_before: ub?, utilization_after: ua? })
            }),
            None => Some(Vec::new()),
        };
        let benefit = self.optional_id(m, "benefit", path);
        Some(ProductivityAssumption {
            loss_before: before?,
            loss_after: after?,
            growth: growth?,
            roles: roles?,
            benefit: benefit?,
        })
    }

    fn enrollment(&mut self, v: &Value) -> Option<EnrollmentSection> {
        let path = "enrollment";
        const KEYS: &[&str] = &[
            "benefit",
            "programs",
            "history",
            "history_csv",
            "baseline_intake",
            "growth",
            "fee",
            "schedule",
        ];
        let m = self.object(v, path, KEYS)?;
        let benefit = self.optional_id(m, "benefit", path);
        let programs = match Self::optional(m, "programs") {
            Some(v) => self.list(v, "enrollment.programs", |r, e, p| r.string(e, p)),
            None => Some(Vec::new()),
        };
        let rows = match Self::optional(m, "history") {
            Some(v) => self.list(v, "enrollment.history", Self::history_row),
            None => Some(Vec::new()),
        };
        let history_csv = match Self::optional(m, "history_csv") {
            Some(v) => self.string(v, "enrollment.history_csv").map(Some),
            None => Some(None),
        };
        let baseline = match Self::optional(m, "baseline_intake") {
            Some(v) => self.list(v, "enrollment.baseline_intake", |r, e, p| r.unsigned(e, p)).map(Some),
            None => Some(None),
        };
        let growth = self.required(m, "growth", path).and_then(|v| self.rate(v, "enrollment.growth"));
        let fee = self.required(m, "fee", path).and_then(|v| self.fee(v));
        let schedule = match Self::optional(m, "schedule") {
            Some(v) => self
                .list(v, "enrollment.schedule", |r, e, p| {
                    let m = r.object(e, p, &["age", "semesters", "multiplier"])?;
                    let age = r.required(m, "age", p).and_then(|v| r.small(v, &at(p, "age")));
                    let semesters = r.required(m, "semesters", p).and_then(|v| r.small(v, &at(p, "semesters")));
                    let multiplier = r.required(m, "multiplier", p).and_then(|v| r.rate(v, &at(p, "multiplier")));
                    Some(ScheduleEntry { age: age?, semesters: semesters?, multiplier: multiplier? })
                })
                .map(|entries| PaymentSchedule { entries }),
            None => Some(super::default_schedule()),
        };
        Some(EnrollmentSection {
            benefit: benefit?,
            history: EnrollmentHistory { programs: programs?, rows: rows? },
            history_csv: history_csv?,
            baseline_intake: baseline?,
            growth: growth?,
            fee: fee?,
            schedule: schedule?,
        })
    }

    fn history_row(&mut self, v: &Value, path: &str) -> Option<HistoryRow> {
        let m = self.object(v, path, &["year", "counts", "total"])?;
        let year = self
            .required(m, "year", path)
            .and_then(|v| self.integer(v, &at(path, "year")))
            .and_then(|y| match i32::try_from(y) {
                Ok(y) => Some(y),
                Err(_) => {
                    self.error(&at(path, "year"), format!("year {y} out of range"));
                    None
                }
            });
        let counts = self
            .required(m, "counts", path)
            .and_then(|v| self.list(v, &at(path, "counts"), |r, e, p| r.unsigned(e, p)));
        let total = match Self::optional(m, "total") {
            Some(v) => self.unsigned(v, &at(path, "total")).map(Some),
            None => Some(None),
        };
        Some(HistoryRow { year: year?, counts: counts?, total: total? })
    }

    fn fee(&mut self, v: &Value) -> Option<FeeModel> {
        let path = "enrollment.fee";
        const KEYS: &[&str] = &[
            "first_semester_items",
            "donation_grades",
            "earmarked_items",
            "overhead_fraction",
            "escalation",
        ];
        let m = self.object(v, path, KEYS)?;
        let items = self
            .required(m, "first_semester_items", path)
            .and_then(|v| self.list(v, "enrollment.fee.first_semester_items", |r, e, p| {
                let item = r.ledger_item(e, p)?;
                Some(FeeItem { name: item.name, amount: item.amount })
            }));
        let grades = match Self::optional(m, "donation_grades") {
            Some(v) => self.list(v, "enrollment.fee.donation_grades", |r, e, p| r.money(e, p)),
            None => Some(Vec::new()),
        };
        let earmarked = match Self::optional(m, "earmarked_items") {
            Some(v) => self.list(v, "enrollment.fee.earmarked_items", |r, e, p| r.string(e, p)),
            None => Some(Vec::new()),
        };
        let overhead = self
            .required(m, "overhead_fraction", path)
            .and_then(|v| self.rate(v, "enrollment.fee.overhead_fraction"));
        let escalation = self.required(m, "escalation", path).and_then(|v| self.rate(v, "enrollment.fee.escalation"));
        Some(FeeModel {
            first_semester_items: items?,
            donation_grades: grades?,
            earmarked_items: earmarked?,
            overhead_fraction: overhead?,
            escalation: escalation?,
        })
    }

    fn options(&mut self, v: &Value) -> Option<Options> {
        let path = "options";
        let m = self.object(v, path, &["rounding", "table15_compat", "tax_rate", "discount_rate"])?;
        let defaults = Options::default();
        let rounding = match Self::optional(m, "rounding") {
            Some(v) => self.keyword(v, "options.rounding", &["half_up", "down"], |s| match s {
                "half_up" => Some(RoundingMode::HalfUp),
                "down" => Some(RoundingMode::Down),
                _ => None,
            }),
            None => Some(defaults.rounding),
        };
        let compat = match Self::optional(m, "table15_compat") {
            Some(v) => self.boolean(v, "options.table15_compat"),
            None => Some(defaults.table15_compat),
        };
        let tax = match Self::optional(m, "tax_rate") {
            Some(v) => self.rate(v, "options.tax_rate"),
            None => Some(defaults.tax_rate),
        };
        let discount = match Self::optional(m, "discount_rate") {
            Some(v) => self.rate(v, "options.discount_rate").map(Some),
            None => Some(None),
        };
        Some(Options { rounding: rounding?, table15_compat: compat?, tax_rate: tax?, discount_rate: discount? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagnostics::Severity;

    #[test]
    fn empty_document_lists_missing_sections() {
        let diags = parse_scenario("").unwrap_err();
        let paths: Vec<_> = diags.iter().map(|d| d.path.as_str()).collect();
        assert_eq!(
            paths,
            vec![
                "schema_version",
                "meta",
                "horizon",
                "benefits",
                "investment",
                "running_costs",
                "operational_costs",
                "productivity",
                "enrollment"
            ]
        );
        assert!(diags.iter().all(|d| d.severity == Severity::Error));
    }

    #[test]
    fn malformed_json_reports_position() {
        let diags = parse_scenario("{\n  \"horizon\": ,\n}").unwrap_err();
        assert_eq!(diags.len(), 1);
        assert!(diags[0].message.contains("line 2"), "{}", diags[0].message);
    }

    #[test]
    fn non_object_root() {
        let diags = parse_scenario("[1, 2]").unwrap_err();
        assert!(diags[0].message.contains("expected an object"));
    }

    #[test]
    fn future_schema_version_rejected() {
        let mut v: Value = serde_json::from_str(crate::BASELINE_JSON).unwrap();
        v["schema_version"] = Value::from(2u64);
        let diags = parse_value(&v).unwrap_err();
        assert!(diags.iter().any(|d| d.path == "schema_version" && d.is_error()));
    }

    #[test]
    fn numbers_and_strings_are_equivalent() {
        let text = crate::BASELINE_JSON;
        let as_number = text.replacen("\"growth\": \"0.2\"", "\"growth\": 0.20", 1);
        assert_ne!(text, as_number);
        let a = parse_scenario(text).unwrap().scenario;
        let b = parse_scenario(&as_number).unwrap().scenario;
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_keys_warn() {
        let mut v: Value = serde_json::from_str(crate::BASELINE_JSON).unwrap();
        v["meta"]["author"] = Value::from("someone");
        let parsed = parse_value(&v).unwrap();
        assert_eq!(parsed.diagnostics.len(), 1);
        assert_eq!(parsed.diagnostics[0].path, "meta.author");
        assert_eq!(parsed.diagnostics[0].severity, Severity::Warning);
    }

    #[test]
    fn nested_errors_carry_paths() {
        let mut v: Value = serde_json::from_str(crate::BASELINE_JSON).unwrap();
        v["operational_costs"][1]["base"] = Value::from("lots");
        v["running_costs"][0].as_object_mut().unwrap().remove("annual_ratio");
        let diags = parse_value(&v).unwrap_err();
        let paths: Vec<_> = diags.iter().map(|d| d.path.as_str()).collect();
        assert!(paths.contains(&"operational_costs[1].base"), "{paths:?}");
        assert!(paths.contains(&"running_costs[0].annual_ratio"), "{paths:?}");
    }

    #[test]
    fn rate_precision_enforced() {
        let mut v: Value = serde_json::from_str(crate::BASELINE_JSON).unwrap();
        v["enrollment"]["growth"] = Value::from("0.1234567");
        let diags = parse_value(&v).unwrap_err();
        assert_eq!(diags[0].path, "enrollment.growth");
    }

    #[test]
    fn running_cost_with_saving_fraction_rejected() {
        let mut v: Value = serde_json::from_str(crate::BASELINE_JSON).unwrap();
        v["running_costs"][0]["saving_fraction"] = Value::from("0.5");
        let diags = parse_value(&v).unwrap_err();
        assert_eq!(diags[0].path, "running_costs[0].saving_fraction");
    }
}
